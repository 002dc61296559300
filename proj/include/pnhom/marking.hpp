#pragma once

#include <boost/dynamic_bitset.hpp>
#include <boost/functional/hash.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace pnhom {

/// A marking: the set of occupied places of a net, stored as a bit vector in
/// declared place order. The first declared place is kept in the most
/// significant bit, so the numeric value of a marking is its rendered 0/1
/// string read as a binary number, and numeric order matches string order.
class Marking {
public:
    Marking() = default;
    explicit Marking(std::size_t places) : bits_(places) {}

    static Marking from_string(std::string_view s);
    static Marking from_value(std::size_t places, std::uint64_t value);

    std::size_t places() const { return bits_.size(); }
    bool occupied(std::size_t place) const { return bits_.test(pos(place)); }
    void set(std::size_t place, bool value = true) { bits_.set(pos(place), value); }
    std::size_t count() const { return bits_.count(); }

    /// Renders one digit per place in declared order, first place leftmost.
    std::string to_string() const;

    /// The rendered string read as a binary number. Throws std::overflow_error
    /// for nets with more than 64 places.
    std::uint64_t value() const { return bits_.to_ulong(); }

    const boost::dynamic_bitset<>& bits() const { return bits_; }
    boost::dynamic_bitset<>& bits() { return bits_; }

    friend bool operator==(const Marking& a, const Marking& b) { return a.bits_ == b.bits_; }
    friend bool operator!=(const Marking& a, const Marking& b) { return !(a == b); }
    friend bool operator<(const Marking& a, const Marking& b) { return a.bits_ < b.bits_; }
    friend std::size_t hash_value(const Marking& m) {
        return boost::hash<boost::dynamic_bitset<>>()(m.bits_);
    }

private:
    std::size_t pos(std::size_t place) const { return bits_.size() - 1 - place; }

    boost::dynamic_bitset<> bits_;
};

struct MarkingHash {
    std::size_t operator()(const Marking& m) const { return hash_value(m); }
};

} // namespace pnhom
