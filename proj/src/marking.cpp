#include "pnhom/marking.hpp"

#include <stdexcept>

namespace pnhom {

Marking Marking::from_string(std::string_view s) {
    Marking m(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1')
            m.set(i);
        else if (s[i] != '0')
            throw std::invalid_argument("marking string must consist of 0s and 1s");
    }
    return m;
}

Marking Marking::from_value(std::size_t places, std::uint64_t value) {
    Marking m(places);
    for (std::size_t i = 0; i < places; ++i)
        if (value >> (places - 1 - i) & 1) m.set(i);
    return m;
}

std::string Marking::to_string() const {
    std::string s;
    boost::to_string(bits_, s);
    return s;
}

} // namespace pnhom
