#pragma once

#include "pnhom/net.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace pnhom {

enum class ExploreMode { reachable, all_states };

inline constexpr std::uint64_t kDefaultStateCap = std::uint64_t{1} << 20;

/// A finite set of markings of one net, kept sorted by numeric value. The
/// sorted order fixes every downstream enumeration (cube lists, matrix
/// layouts), so identical inputs always produce identical outputs.
class StateSpace {
public:
    StateSpace(ElementaryNet net, std::vector<Marking> states, ExploreMode mode);

    const ElementaryNet& net() const { return net_; }
    ExploreMode mode() const { return mode_; }
    std::size_t size() const { return states_.size(); }
    const std::vector<Marking>& states() const { return states_; }
    const Marking& state(std::size_t i) const { return states_[i]; }

    /// Position of s in the sorted state list, if present.
    std::optional<std::uint32_t> index_of(const Marking& s) const;
    bool contains(const Marking& s) const { return index_of(s).has_value(); }

    /// Successor index of state i under event e, when the firing is defined
    /// and the result belongs to the space.
    std::optional<std::uint32_t> step(std::uint32_t i, std::size_t e) const;

    /// First state/event pair whose successor escapes the space, if any.
    std::optional<std::string> closure_violation() const;

    /// Empty iff the space satisfies all of its invariants: forward closure,
    /// plus mode-specific conditions (initial state present and everything
    /// trace-accessible from it in reachable mode; full power set otherwise).
    std::vector<std::string> check_invariants() const;

    bool operator==(const StateSpace& other) const {
        return net_ == other.net_ && states_ == other.states_ && mode_ == other.mode_;
    }

private:
    ElementaryNet net_;
    std::vector<Marking> states_;
    ExploreMode mode_;
};

/// Breadth-first closure of the initial marking (reachable mode) or the full
/// power set of places (all-states mode). Throws CapacityError when the
/// result would exceed max_states.
StateSpace explore(const ElementaryNet& net, ExploreMode mode,
                   std::uint64_t max_states = kDefaultStateCap);

/// States with no enabled event leading back into the space, in state order.
std::vector<Marking> deadlocks(const StateSpace& space);

/// States with no incoming transition from within the space, in state order.
std::vector<Marking> senders(const StateSpace& space);

/// The marking string read as a binary number, first place most significant.
std::uint64_t state_index(const Marking& s);

} // namespace pnhom
