#include "pnhom/reference.hpp"

#include "pnhom/errors.hpp"

#include <algorithm>
#include <map>

namespace pnhom::reference {

namespace {

// Face of a cube computed straight from the definition.
Cube face_value(const StateSpace& sp, const Cube& c, std::size_t i, int eps) {
    Cube f;
    f.base = c.base;
    for (std::size_t k = 0; k < c.events.size(); ++k)
        if (k != i - 1) f.events.push_back(c.events[k]);
    if (eps == 1) {
        auto next = sp.net().fire(sp.state(c.base), c.events[i - 1]);
        if (!next) throw ComplexError("face of a stored cube is not defined");
        auto idx = sp.index_of(*next);
        if (!idx) throw ComplexError("face of a stored cube leaves the state space");
        f.base = *idx;
    }
    return f;
}

std::uint32_t locate(const std::vector<Cube>& cubes, const Cube& c) {
    auto it = std::lower_bound(cubes.begin(), cubes.end(), c);
    if (it == cubes.end() || !(*it == c))
        throw ComplexError("face missing from the grade below");
    return static_cast<std::uint32_t>(it - cubes.begin());
}

} // namespace

SemicubicalSet build_complex(const StateSpace& space, std::size_t max_dim) {
    if (auto v = space.closure_violation())
        throw ComplexError("state space is not forward closed: " + *v);

    // Grade-by-grade extension: each (n+1)-cube is an n-cube plus one larger
    // event, independent of the others, with the whole trace still defined.
    std::vector<SemicubicalSet::Grade> grades(1);
    grades[0].cubes.resize(space.size());
    for (std::size_t i = 0; i < space.size(); ++i)
        grades[0].cubes[i] = Cube{static_cast<std::uint32_t>(i), {}};

    const ElementaryNet& net = space.net();
    while (grades.size() <= max_dim && !grades.back().cubes.empty()) {
        std::vector<Cube> next;
        for (const Cube& c : grades.back().cubes) {
            std::size_t start = c.events.empty() ? 0 : c.events.back() + 1;
            for (std::size_t e = start; e < net.event_count(); ++e) {
                bool indep = true;
                for (std::uint32_t a : c.events)
                    if (!net.independent(a, e)) {
                        indep = false;
                        break;
                    }
                if (!indep) continue;
                Cube grown{c.base, c.events};
                grown.events.push_back(static_cast<std::uint32_t>(e));
                std::vector<std::size_t> word(grown.events.begin(), grown.events.end());
                if (!net.fire_trace(space.state(c.base), word)) continue;
                next.push_back(std::move(grown));
            }
        }
        if (next.empty()) break;
        std::sort(next.begin(), next.end());
        grades.push_back({std::move(next), {}});
    }

    for (std::size_t n = 1; n < grades.size(); ++n) {
        auto& grade = grades[n];
        grade.faces.resize(grade.cubes.size() * 2 * n);
        for (std::size_t idx = 0; idx < grade.cubes.size(); ++idx)
            for (std::size_t i = 1; i <= n; ++i)
                for (int eps = 0; eps <= 1; ++eps)
                    grade.faces[idx * 2 * n + (i - 1) * 2 + static_cast<std::size_t>(eps)] =
                        locate(grades[n - 1].cubes,
                               face_value(space, grade.cubes[idx], i, eps));
    }

    return SemicubicalSet(std::make_shared<const StateSpace>(space), std::move(grades));
}

std::vector<Violation> validate(const SemicubicalSet& x) {
    std::vector<Violation> out;
    for (std::size_t n = 1; n <= x.top_dimension(); ++n) {
        for (std::size_t c = 0; c < x.size(n); ++c) {
            bool members_ok = true;
            for (std::size_t i = 1; i <= n; ++i)
                for (int eps = 0; eps <= 1; ++eps)
                    if (x.face_index(n, c, i, eps) >= x.size(n - 1)) {
                        out.push_back({n, c, i, 0, eps, 0,
                                       "face target outside grade " + std::to_string(n - 1)});
                        members_ok = false;
                    }
            if (!members_ok || n < 2) continue;
            for (std::size_t i = 1; i < n; ++i)
                for (std::size_t j = i + 1; j <= n; ++j)
                    for (int alpha = 0; alpha <= 1; ++alpha)
                        for (int beta = 0; beta <= 1; ++beta)
                            if (x.face_index(n - 1, x.face_index(n, c, j, beta), i, alpha) !=
                                x.face_index(n - 1, x.face_index(n, c, i, alpha), j - 1, beta))
                                out.push_back(
                                    {n, c, i, j, alpha, beta, "face maps do not commute"});
        }
    }
    return out;
}

namespace {

ChainComplex assemble(const SemicubicalSet& x, int lower_sign, int upper_sign) {
    ChainComplex cc;
    cc.ranks.resize(x.top_dimension() + 1);
    for (std::size_t n = 0; n < cc.ranks.size(); ++n) cc.ranks[n] = x.size(n);
    for (std::size_t n = 1; n <= x.top_dimension(); ++n) {
        SparseMat d(x.size(n - 1), x.size(n));
        for (std::size_t c = 0; c < x.size(n); ++c) {
            std::map<std::uint32_t, std::int64_t> col;
            for (std::size_t i = 1; i <= n; ++i) {
                std::int64_t sign = (i % 2 == 0) ? 1 : -1;
                if (upper_sign != 0) col[x.face_index(n, c, i, 1)] += sign * upper_sign;
                if (lower_sign != 0) col[x.face_index(n, c, i, 0)] += sign * lower_sign;
            }
            std::vector<SparseMat::Entry> entries;
            for (const auto& [row, v] : col)
                if (v != 0) entries.emplace_back(row, v);
            d.set_column(c, std::move(entries));
        }
        cc.boundaries.push_back(std::move(d));
    }
    return cc;
}

} // namespace

ChainComplex boundary_matrices(const SemicubicalSet& x) { return assemble(x, -1, 1); }

ChainComplex directed_boundary_matrices(const SemicubicalSet& x, int eps) {
    if (eps != 0 && eps != 1) throw Error("eps must be 0 or 1");
    return eps == 0 ? assemble(x, 1, 0) : assemble(x, 0, 1);
}

std::vector<Marking> deadlocks(const StateSpace& space) {
    std::vector<Marking> out;
    for (std::uint32_t i = 0; i < space.size(); ++i) {
        bool enabled = false;
        for (std::size_t e = 0; e < space.net().event_count() && !enabled; ++e)
            enabled = space.step(i, e).has_value();
        if (!enabled) out.push_back(space.state(i));
    }
    return out;
}

std::vector<Marking> senders(const StateSpace& space) {
    std::vector<char> incoming(space.size(), 0);
    for (std::uint32_t i = 0; i < space.size(); ++i)
        for (std::size_t e = 0; e < space.net().event_count(); ++e)
            if (auto j = space.step(i, e)) incoming[*j] = 1;
    std::vector<Marking> out;
    for (std::size_t i = 0; i < space.size(); ++i)
        if (!incoming[i]) out.push_back(space.state(i));
    return out;
}

} // namespace pnhom::reference
