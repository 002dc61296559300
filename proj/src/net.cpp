#include "pnhom/net.hpp"

namespace pnhom {

ElementaryNet::ElementaryNet(std::vector<std::string> places,
                             const std::vector<EventDef>& events,
                             const std::vector<std::string>& initial)
    : places_(std::move(places)), initial_(places_.size()) {
    place_index_.reserve(places_.size());
    for (std::size_t i = 0; i < places_.size(); ++i) {
        if (!place_index_.emplace(places_[i], i).second)
            throw Error("duplicate place '" + places_[i] + "'");
    }
    events_.reserve(events.size());
    event_index_.reserve(events.size());
    for (const auto& def : events) {
        if (event_index_.contains(def.name))
            throw Error("duplicate event '" + def.name + "'");
        Event ev;
        ev.name = def.name;
        ev.pre = Marking(places_.size());
        ev.post = Marking(places_.size());
        for (const auto& p : def.pre) ev.pre.set(place_index(p));
        for (const auto& p : def.post) ev.post.set(place_index(p));
        ev.footprint = Marking(places_.size());
        ev.footprint.bits() = ev.pre.bits() | ev.post.bits();
        event_index_.emplace(ev.name, events_.size());
        events_.push_back(std::move(ev));
    }
    for (const auto& p : initial) initial_.set(place_index(p));
}

const Event& ElementaryNet::event(std::size_t e) const {
    if (e >= events_.size())
        throw UnknownIdentifierError("unknown event #" + std::to_string(e));
    return events_[e];
}

std::size_t ElementaryNet::place_index(const std::string& name) const {
    auto it = place_index_.find(name);
    if (it == place_index_.end())
        throw UnknownIdentifierError("unknown place '" + name + "'");
    return it->second;
}

std::size_t ElementaryNet::event_index(const std::string& name) const {
    auto it = event_index_.find(name);
    if (it == event_index_.end())
        throw UnknownIdentifierError("unknown event '" + name + "'");
    return it->second;
}

bool ElementaryNet::independent(std::size_t a, std::size_t b) const {
    const Event& ea = event(a);
    const Event& eb = event(b);
    if (a == b) return false; // the relation is irreflexive by definition
    return !ea.footprint.bits().intersects(eb.footprint.bits());
}

std::optional<Marking> ElementaryNet::fire(const Marking& s, std::size_t e) const {
    require_width(s);
    const Event& ev = event(e);
    if (!ev.pre.bits().is_subset_of(s.bits())) return std::nullopt;
    auto rest = s.bits() - ev.pre.bits();
    if (rest.intersects(ev.post.bits())) return std::nullopt;
    Marking next(place_count());
    next.bits() = rest | ev.post.bits();
    return next;
}

std::optional<Marking> ElementaryNet::fire_trace(const Marking& s,
                                                 std::span<const std::size_t> word) const {
    Marking current = s;
    for (std::size_t e : word) {
        auto next = fire(current, e);
        if (!next) return std::nullopt;
        current = std::move(*next);
    }
    return current;
}

std::vector<std::string> ElementaryNet::occupied_places(const Marking& s) const {
    require_width(s);
    std::vector<std::string> names;
    for (std::size_t p = 0; p < place_count(); ++p)
        if (s.occupied(p)) names.push_back(places_[p]);
    return names;
}

void ElementaryNet::require_width(const Marking& s) const {
    if (s.places() != place_count())
        throw Error("marking has " + std::to_string(s.places()) + " places, net has " +
                    std::to_string(place_count()));
}

} // namespace pnhom
