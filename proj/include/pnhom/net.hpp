#pragma once

#include "pnhom/errors.hpp"
#include "pnhom/marking.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace pnhom {

/// One event with its pre and post sets held as bit masks in net place order.
struct Event {
    std::string name;
    Marking pre;
    Marking post;
    Marking footprint; // pre | post, the overlap test for independence

    friend bool operator==(const Event& a, const Event& b) {
        return a.name == b.name && a.pre == b.pre && a.post == b.post;
    }
};

/// Textual definition of an event, as read from net files and generators.
struct EventDef {
    std::string name;
    std::vector<std::string> pre;
    std::vector<std::string> post;
};

/// An elementary Petri net: ordered places, ordered events, and an initial
/// marking. Event declaration order is fixed at construction and is the
/// linear order used when cube tuples are enumerated.
class ElementaryNet {
public:
    ElementaryNet(std::vector<std::string> places,
                  const std::vector<EventDef>& events,
                  const std::vector<std::string>& initial);

    std::size_t place_count() const { return places_.size(); }
    std::size_t event_count() const { return events_.size(); }
    const std::vector<std::string>& places() const { return places_; }
    const std::vector<Event>& events() const { return events_; }
    const Marking& initial() const { return initial_; }

    const std::string& place_name(std::size_t p) const { return places_.at(p); }
    const Event& event(std::size_t e) const;

    std::size_t place_index(const std::string& name) const;
    std::size_t event_index(const std::string& name) const;

    /// True iff a != b and the pre/post footprints of a and b are disjoint.
    /// The induced relation is irreflexive and symmetric.
    bool independent(std::size_t a, std::size_t b) const;

    /// Fires event e from s. Returns nullopt when e is not enabled at s,
    /// i.e. when pre(e) is not contained in s or (s \ pre(e)) meets post(e).
    std::optional<Marking> fire(const Marking& s, std::size_t e) const;

    /// Left fold of fire over the word; nullopt as soon as one step is
    /// undefined. The empty word returns s.
    std::optional<Marking> fire_trace(const Marking& s,
                                      std::span<const std::size_t> word) const;

    /// Renders a marking of this net as the set of occupied place names.
    std::vector<std::string> occupied_places(const Marking& s) const;

    bool operator==(const ElementaryNet& other) const {
        return places_ == other.places_ && events_ == other.events_ &&
               initial_ == other.initial_;
    }

private:
    void require_width(const Marking& s) const;

    std::vector<std::string> places_;
    std::vector<Event> events_;
    Marking initial_;
    std::unordered_map<std::string, std::size_t> place_index_;
    std::unordered_map<std::string, std::size_t> event_index_;
};

} // namespace pnhom
