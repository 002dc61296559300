#include "pnhom/net_format.hpp"

#include <cctype>
#include <sstream>
#include <unordered_set>

namespace pnhom {

namespace {

struct Token {
    std::string text;
    int column; // 1-based position of the first character
};

// Tokens of one line, with the comment tail stripped.
std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == '#') break;
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) &&
               line[i] != '#')
            ++i;
        tokens.push_back({std::string(line.substr(start, i - start)),
                          static_cast<int>(start) + 1});
    }
    return tokens;
}

bool valid_identifier(const std::string& s) {
    if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

std::vector<std::string> split_list(const Token& tok, int line_no) {
    if (tok.text == "-") return {};
    std::vector<std::string> names;
    std::size_t start = 0;
    int col = tok.column;
    for (std::size_t i = 0; i <= tok.text.size(); ++i) {
        if (i == tok.text.size() || tok.text[i] == ',') {
            std::string name = tok.text.substr(start, i - start);
            if (!valid_identifier(name))
                throw ParseError("bad identifier '" + name + "'", line_no,
                                 col + static_cast<int>(start));
            names.push_back(std::move(name));
            start = i + 1;
        }
    }
    return names;
}

} // namespace

ElementaryNet parse_net(std::string_view document) {
    std::vector<std::string> places;
    std::unordered_set<std::string> place_set;
    std::vector<EventDef> events;
    std::unordered_set<std::string> event_set;
    std::vector<std::string> initial;
    bool have_places = false;
    bool have_initial = false;

    auto known_place = [&](const std::string& name, int line_no, int col) {
        if (!place_set.contains(name))
            throw ParseError("undeclared place '" + name + "'", line_no, col);
    };

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= document.size()) {
        std::size_t eol = document.find('\n', pos);
        std::string_view line = document.substr(
            pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        ++line_no;
        pos = eol == std::string_view::npos ? document.size() + 1 : eol + 1;

        auto tokens = tokenize(line);
        if (tokens.empty()) continue;
        const Token& head = tokens[0];

        if (head.text == "places:") {
            if (have_places) throw ParseError("repeated places: section", line_no, head.column);
            if (have_initial)
                throw ParseError("places: after initial:", line_no, head.column);
            for (std::size_t i = 1; i < tokens.size(); ++i) {
                if (!valid_identifier(tokens[i].text))
                    throw ParseError("bad identifier '" + tokens[i].text + "'", line_no,
                                     tokens[i].column);
                if (!place_set.insert(tokens[i].text).second)
                    throw ParseError("duplicate place '" + tokens[i].text + "'", line_no,
                                     tokens[i].column);
                places.push_back(tokens[i].text);
            }
            have_places = true;
        } else if (head.text == "event") {
            if (!have_places) throw ParseError("event before places:", line_no, head.column);
            if (have_initial) throw ParseError("event after initial:", line_no, head.column);
            if (tokens.size() != 6 || tokens[2].text != "pre" || tokens[4].text != "post")
                throw ParseError("expected: event <name> pre <list|-> post <list|->", line_no,
                                 head.column);
            EventDef def;
            if (!valid_identifier(tokens[1].text))
                throw ParseError("bad identifier '" + tokens[1].text + "'", line_no,
                                 tokens[1].column);
            if (!event_set.insert(tokens[1].text).second)
                throw ParseError("duplicate event '" + tokens[1].text + "'", line_no,
                                 tokens[1].column);
            def.name = tokens[1].text;
            def.pre = split_list(tokens[3], line_no);
            def.post = split_list(tokens[5], line_no);
            for (const auto& p : def.pre) known_place(p, line_no, tokens[3].column);
            for (const auto& p : def.post) known_place(p, line_no, tokens[5].column);
            events.push_back(std::move(def));
        } else if (head.text == "initial:") {
            if (!have_places) throw ParseError("initial: before places:", line_no, head.column);
            if (have_initial)
                throw ParseError("repeated initial: section", line_no, head.column);
            for (std::size_t i = 1; i < tokens.size(); ++i) {
                known_place(tokens[i].text, line_no, tokens[i].column);
                initial.push_back(tokens[i].text);
            }
            have_initial = true;
        } else {
            throw ParseError("unexpected token '" + head.text + "'", line_no, head.column);
        }
    }
    if (!have_places) throw ParseError("missing places: section", line_no, 1);
    if (!have_initial) throw ParseError("missing initial: section", line_no, 1);
    return ElementaryNet(std::move(places), events, initial);
}

namespace {

std::string join_list(const std::vector<std::string>& names) {
    if (names.empty()) return "-";
    std::string out;
    for (const auto& n : names) {
        if (!out.empty()) out += ",";
        out += n;
    }
    return out;
}

void require_emittable(const std::string& name) {
    if (!valid_identifier(name))
        throw Error("name '" + name + "' does not fit the net file grammar");
}

} // namespace

std::string emit_net(const ElementaryNet& net) {
    std::ostringstream os;
    os << "places:";
    for (const auto& p : net.places()) {
        require_emittable(p);
        os << " " << p;
    }
    os << "\n";
    for (const auto& ev : net.events()) {
        require_emittable(ev.name);
        os << "event " << ev.name << " pre " << join_list(net.occupied_places(ev.pre))
           << " post " << join_list(net.occupied_places(ev.post)) << "\n";
    }
    os << "initial:";
    for (const auto& p : net.occupied_places(net.initial())) os << " " << p;
    os << "\n";
    return os.str();
}

} // namespace pnhom
