#include "pnhom/analysis.hpp"

#include "pnhom/cubical.hpp"
#include "pnhom/homology.hpp"
#include "pnhom/mayer_vietoris.hpp"
#include "pnhom/net_format.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace pnhom {

using json = nlohmann::ordered_json;

Analysis analysis_from_string(const std::string& name) {
    if (name == "homology") return Analysis::homology;
    if (name == "directed-0") return Analysis::directed0;
    if (name == "directed-1") return Analysis::directed1;
    if (name == "deadlocks") return Analysis::deadlocks;
    if (name == "senders") return Analysis::senders;
    if (name == "validate") return Analysis::validate;
    if (name == "mv-check") return Analysis::mv_check;
    throw Error("unknown analysis '" + name +
                "' (expected homology, directed-0, directed-1, deadlocks, senders, "
                "validate or mv-check)");
}

const char* to_string(Analysis a) {
    switch (a) {
        case Analysis::homology: return "homology";
        case Analysis::directed0: return "directed-0";
        case Analysis::directed1: return "directed-1";
        case Analysis::deadlocks: return "deadlocks";
        case Analysis::senders: return "senders";
        case Analysis::validate: return "validate";
        case Analysis::mv_check: return "mv-check";
    }
    return "?";
}

namespace {

json groups_to_json(const std::vector<HomologyGroup>& groups) {
    json arr = json::array();
    for (const auto& g : groups) {
        json rec;
        rec["degree"] = g.degree;
        rec["betti"] = g.betti;
        json tor = json::array();
        for (const BigInt& d : g.torsion) {
            if (d <= std::numeric_limits<std::int64_t>::max())
                tor.push_back(static_cast<std::int64_t>(d));
            else
                tor.push_back(d.str());
        }
        rec["torsion"] = std::move(tor);
        arr.push_back(std::move(rec));
    }
    return arr;
}

json markings_to_json(const ElementaryNet&, const std::vector<Marking>& states) {
    json arr = json::array();
    for (const auto& s : states) arr.push_back(s.to_string());
    return arr;
}

std::string marking_list(const std::vector<Marking>& states) {
    if (states.empty()) return "none";
    std::string out;
    for (const auto& s : states) {
        if (!out.empty()) out += " ";
        out += s.to_string();
    }
    return out;
}

// First pair of dependent events; the complex is covered by the two event
// restrictions obtained by dropping one of them.
std::optional<std::pair<std::size_t, std::size_t>> dependent_pair(const ElementaryNet& net) {
    for (std::size_t a = 0; a < net.event_count(); ++a)
        for (std::size_t b = a + 1; b < net.event_count(); ++b)
            if (!net.independent(a, b)) return std::pair{a, b};
    return std::nullopt;
}

struct Driver {
    const AnalysisRequest& request;
    std::string net_label;
    ElementaryNet net;
    std::shared_ptr<const StateSpace> space;
    std::optional<SemicubicalSet> complex; // built lazily, shared by analyses

    std::ostringstream text;
    json record;
    bool any_check_failed = false;

    Driver(const AnalysisRequest& req, std::string label, ElementaryNet n)
        : request(req), net_label(std::move(label)), net(std::move(n)) {}

    const SemicubicalSet& the_complex() {
        if (!complex) {
            std::size_t cap = request.max_dim ? *request.max_dim + 1 : kNoDimensionCap;
            complex = build_complex(space, cap);
        }
        return *complex;
    }

    std::vector<HomologyGroup> truncate(std::vector<HomologyGroup> groups) {
        if (request.max_dim && groups.size() > *request.max_dim + 1)
            groups.resize(*request.max_dim + 1);
        return groups;
    }

    void run_one(Analysis a) {
        switch (a) {
            case Analysis::homology: {
                auto groups = truncate(homology(boundary_matrices(the_complex())));
                text << "homology:\n" << render_groups(groups, "H");
                record["homology"] = groups_to_json(groups);
                break;
            }
            case Analysis::directed0:
            case Analysis::directed1: {
                int eps = a == Analysis::directed0 ? 0 : 1;
                auto groups =
                    truncate(homology(directed_boundary_matrices(the_complex(), eps)));
                text << "directed homology (eps=" << eps << "):\n"
                     << render_groups(groups, "H", "^" + std::to_string(eps));
                record["directed"][std::to_string(eps)] = groups_to_json(groups);
                break;
            }
            case Analysis::deadlocks: {
                auto states = deadlocks(*space);
                text << "deadlocks: " << marking_list(states) << "\n";
                record["deadlocks"] = markings_to_json(net, states);
                break;
            }
            case Analysis::senders: {
                auto states = senders(*space);
                text << "senders: " << marking_list(states) << "\n";
                record["senders"] = markings_to_json(net, states);
                break;
            }
            case Analysis::validate: {
                auto violations = validate(the_complex());
                bool ok = violations.empty();
                if (!ok) any_check_failed = true;
                text << "validate: " << (ok ? "ok" : std::to_string(violations.size()) +
                                                         " violation(s)")
                     << "\n";
                for (const auto& v : violations)
                    text << "  grade " << v.grade << " cube " << v.cube << " (i=" << v.i
                         << ", j=" << v.j << ", alpha=" << v.alpha << ", beta=" << v.beta
                         << "): " << v.detail << "\n";
                record["checks"].push_back(
                    {{"name", "validate"}, {"pass", ok},
                     {"detail", std::to_string(violations.size()) + " violation(s)"}});
                break;
            }
            case Analysis::mv_check: {
                auto pair = dependent_pair(net);
                if (!pair) {
                    any_check_failed = true;
                    text << "mv-check: not applicable (all events are independent)\n";
                    record["checks"].push_back({{"name", "mv-check"},
                                                {"pass", false},
                                                {"detail", "no dependent event pair"}});
                    break;
                }
                std::vector<std::size_t> left, right;
                for (std::size_t e = 0; e < net.event_count(); ++e) {
                    if (e != pair->first) left.push_back(e);
                    if (e != pair->second) right.push_back(e);
                }
                MVReport mv =
                    mv_check(restrict_to_events(the_complex(), left),
                             restrict_to_events(the_complex(), right));
                if (!mv.exact()) any_check_failed = true;
                text << "mv-check (dropping '" << net.events()[pair->first].name << "' / '"
                     << net.events()[pair->second].name << "'): " << mv.summary() << "\n";
                record["checks"].push_back({{"name", "mv-check"},
                                            {"pass", mv.exact()},
                                            {"detail", mv.summary()}});
                break;
            }
        }
    }
};

} // namespace

RunResult run_analysis(const AnalysisRequest& request) {
    try {
        std::string label;
        std::optional<ElementaryNet> net;
        if (const auto* path = std::get_if<std::string>(&request.input)) {
            std::ifstream in(*path);
            if (!in)
                return {kExitUsage, "error: cannot open net file '" + *path + "'\n"};
            std::ostringstream buf;
            buf << in.rdbuf();
            net = parse_net(buf.str());
            label = *path;
        } else {
            const auto& spec = std::get<PipelineSpec>(request.input);
            net = make_pipeline(spec);
            label = std::string("pipeline ") + to_string(spec.variant) + "_" +
                    std::to_string(spec.n);
        }
        if (request.analyses.empty())
            return {kExitUsage, "error: no analyses requested\n"};

        Driver driver(request, label, std::move(*net));
        driver.space = std::make_shared<const StateSpace>(
            explore(driver.net, request.mode, request.max_states));

        const char* mode_name =
            request.mode == ExploreMode::reachable ? "reachable" : "all-states";
        driver.text << "net: " << driver.net_label << " (" << driver.net.place_count()
                    << " places, " << driver.net.event_count() << " events)\n";
        driver.text << "mode: " << mode_name << "\n";
        driver.text << "states: " << driver.space->size() << "\n";
        driver.record["net"] = {{"name", driver.net_label},
                                {"places", driver.net.place_count()},
                                {"events", driver.net.event_count()}};
        driver.record["mode"] = mode_name;
        driver.record["states"] = driver.space->size();

        for (Analysis a : request.analyses) driver.run_one(a);

        if (request.dump) {
            std::string dump = dump_complex(driver.the_complex());
            driver.text << "complex dump:\n" << dump;
            driver.record["complex_dump"] = dump;
        }

        int code = driver.any_check_failed ? kExitCheckFailed : kExitOk;
        if (request.json) return {code, driver.record.dump(2) + "\n"};
        return {code, driver.text.str()};
    } catch (const ParseError& e) {
        return {kExitParse, std::string("parse error: ") + e.what() + "\n"};
    } catch (const CapacityError& e) {
        return {kExitCapacity, std::string("error: ") + e.what() + "\n"};
    } catch (const UnknownIdentifierError& e) {
        return {kExitUsage, std::string("error: ") + e.what() + "\n"};
    }
}

RunResult run_verify(std::size_t n_max, bool as_json, std::uint64_t max_states) {
    try {
        VerificationReport report = verify_theorems(n_max, max_states);
        int code = report.all_pass() ? kExitOk : kExitCheckFailed;
        if (!as_json) return {code, report.to_text()};
        json rec;
        rec["n_max"] = n_max;
        rec["checks"] = json::array();
        for (const auto& c : report.checks)
            rec["checks"].push_back(
                {{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        rec["failures"] = report.failures();
        return {code, rec.dump(2) + "\n"};
    } catch (const CapacityError& e) {
        return {kExitCapacity, std::string("error: ") + e.what() + "\n"};
    }
}

} // namespace pnhom
