#include "pnhom/state_space.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <unordered_set>

namespace pnhom {

StateSpace::StateSpace(ElementaryNet net, std::vector<Marking> states, ExploreMode mode)
    : net_(std::move(net)), states_(std::move(states)), mode_(mode) {
    for (const auto& s : states_)
        if (s.places() != net_.place_count())
            throw Error("state width does not match the net");
    std::sort(states_.begin(), states_.end());
    states_.erase(std::unique(states_.begin(), states_.end()), states_.end());
}

std::optional<std::uint32_t> StateSpace::index_of(const Marking& s) const {
    auto it = std::lower_bound(states_.begin(), states_.end(), s);
    if (it == states_.end() || !(*it == s)) return std::nullopt;
    return static_cast<std::uint32_t>(it - states_.begin());
}

std::optional<std::uint32_t> StateSpace::step(std::uint32_t i, std::size_t e) const {
    auto next = net_.fire(states_[i], e);
    if (!next) return std::nullopt;
    return index_of(*next);
}

std::optional<std::string> StateSpace::closure_violation() const {
    for (std::size_t i = 0; i < states_.size(); ++i) {
        for (std::size_t e = 0; e < net_.event_count(); ++e) {
            auto next = net_.fire(states_[i], e);
            if (next && !contains(*next))
                return "state " + states_[i].to_string() + " fires '" + net_.event(e).name +
                       "' out of the space";
        }
    }
    return std::nullopt;
}

std::vector<std::string> StateSpace::check_invariants() const {
    std::vector<std::string> problems;
    if (auto v = closure_violation()) problems.push_back(*v);
    if (mode_ == ExploreMode::all_states) {
        if (net_.place_count() < 64 &&
            states_.size() != (std::size_t{1} << net_.place_count()))
            problems.push_back("all-states space does not hold the full power set");
    } else {
        if (!contains(net_.initial())) {
            problems.push_back("initial marking missing from reachable space");
        } else {
            // every state must be trace-accessible from the initial marking
            std::vector<char> seen(states_.size(), 0);
            std::deque<std::uint32_t> queue{*index_of(net_.initial())};
            seen[queue.front()] = 1;
            while (!queue.empty()) {
                std::uint32_t i = queue.front();
                queue.pop_front();
                for (std::size_t e = 0; e < net_.event_count(); ++e)
                    if (auto j = step(i, e); j && !seen[*j]) {
                        seen[*j] = 1;
                        queue.push_back(*j);
                    }
            }
            for (std::size_t i = 0; i < states_.size(); ++i)
                if (!seen[i]) {
                    problems.push_back("state " + states_[i].to_string() +
                                       " is not reachable from the initial marking");
                    break;
                }
        }
    }
    return problems;
}

StateSpace explore(const ElementaryNet& net, ExploreMode mode, std::uint64_t max_states) {
    std::vector<Marking> states;
    if (mode == ExploreMode::all_states) {
        std::size_t p = net.place_count();
        if (p >= 63 || (std::uint64_t{1} << p) > max_states)
            throw CapacityError("2^" + std::to_string(p) +
                                " states exceed the cap of " + std::to_string(max_states));
        std::int64_t total = std::int64_t{1} << p;
        states.resize(static_cast<std::size_t>(total), Marking(p));
#pragma omp parallel for schedule(static)
        for (std::int64_t v = 0; v < total; ++v)
            states[static_cast<std::size_t>(v)] =
                Marking::from_value(p, static_cast<std::uint64_t>(v));
    } else {
        std::unordered_set<Marking, MarkingHash> visited{net.initial()};
        std::deque<Marking> queue{net.initial()};
        while (!queue.empty()) {
            Marking s = std::move(queue.front());
            queue.pop_front();
            for (std::size_t e = 0; e < net.event_count(); ++e) {
                auto next = net.fire(s, e);
                if (!next || visited.contains(*next)) continue;
                if (visited.size() >= max_states)
                    throw CapacityError("reachable set exceeds the cap of " +
                                        std::to_string(max_states) + " states");
                visited.insert(*next);
                queue.push_back(std::move(*next));
            }
        }
        states.assign(visited.begin(), visited.end());
    }
    return StateSpace(net, std::move(states), mode);
}

std::vector<Marking> deadlocks(const StateSpace& space) {
    const auto n = static_cast<std::int64_t>(space.size());
    std::vector<char> dead(space.size(), 1);
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
        for (std::size_t e = 0; e < space.net().event_count(); ++e)
            if (space.step(static_cast<std::uint32_t>(i), e)) {
                dead[static_cast<std::size_t>(i)] = 0;
                break;
            }
    }
    std::vector<Marking> out;
    for (std::size_t i = 0; i < space.size(); ++i)
        if (dead[i]) out.push_back(space.state(i));
    return out;
}

std::vector<Marking> senders(const StateSpace& space) {
    const auto n = static_cast<std::int64_t>(space.size());
    std::vector<char> incoming(space.size(), 0);
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
        for (std::size_t e = 0; e < space.net().event_count(); ++e)
            if (auto j = space.step(static_cast<std::uint32_t>(i), e))
                std::atomic_ref<char>(incoming[*j]).store(1, std::memory_order_relaxed);
    }
    std::vector<Marking> out;
    for (std::size_t i = 0; i < space.size(); ++i)
        if (!incoming[i]) out.push_back(space.state(i));
    return out;
}

std::uint64_t state_index(const Marking& s) { return s.value(); }

} // namespace pnhom
