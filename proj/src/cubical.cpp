#include "pnhom/cubical.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <sstream>

namespace pnhom {

namespace {

std::size_t face_slot(std::size_t i, int eps) { return (i - 1) * 2 + static_cast<std::size_t>(eps); }

// The face of (s, a_1..a_n) in direction i, end eps: drop a_i and, for the
// upper end, advance the base by a_i.
Cube face_value(const StateSpace& sp, const Cube& c, std::size_t i, int eps) {
    Cube f;
    f.events.reserve(c.events.size() - 1);
    for (std::size_t k = 0; k < c.events.size(); ++k)
        if (k != i - 1) f.events.push_back(c.events[k]);
    if (eps == 0) {
        f.base = c.base;
    } else {
        auto next = sp.net().fire(sp.state(c.base), c.events[i - 1]);
        if (!next) throw ComplexError("face of a stored cube is not defined");
        auto idx = sp.index_of(*next);
        if (!idx) throw ComplexError("face of a stored cube leaves the state space");
        f.base = *idx;
    }
    return f;
}

std::optional<std::uint32_t> find_sorted(const std::vector<Cube>& cubes, const Cube& c) {
    auto it = std::lower_bound(cubes.begin(), cubes.end(), c);
    if (it == cubes.end() || !(*it == c)) return std::nullopt;
    return static_cast<std::uint32_t>(it - cubes.begin());
}

// Fills the face table of grade n by locating each face value in grade n-1.
// Returns false when some face is missing, which means the grade lists do
// not form a face-closed family.
bool resolve_faces(const StateSpace& sp, SemicubicalSet::Grade& grade,
                   const std::vector<Cube>& below, std::size_t n) {
    grade.faces.assign(grade.cubes.size() * 2 * n, 0);
    std::atomic<bool> ok{true};
    const auto count = static_cast<std::int64_t>(grade.cubes.size());
#pragma omp parallel for schedule(dynamic, 256)
    for (std::int64_t idx = 0; idx < count; ++idx) {
        const Cube& c = grade.cubes[static_cast<std::size_t>(idx)];
        for (std::size_t i = 1; i <= n; ++i) {
            for (int eps = 0; eps <= 1; ++eps) {
                auto found = find_sorted(below, face_value(sp, c, i, eps));
                if (!found) {
                    ok.store(false, std::memory_order_relaxed);
                    continue;
                }
                grade.faces[static_cast<std::size_t>(idx) * 2 * n + face_slot(i, eps)] = *found;
            }
        }
    }
    return ok.load();
}

// Depth-first extension of one base state: every strictly increasing tuple of
// pairwise independent events whose trace is defined. Tuples are emitted in
// lexicographic order, so concatenation over sorted states stays sorted.
void extend_tuples(const ElementaryNet& net, std::uint32_t base,
                   std::vector<std::uint32_t>& tuple, const Marking& current,
                   std::size_t max_dim, std::vector<std::vector<Cube>>& out) {
    if (tuple.size() >= max_dim) return;
    std::size_t start = tuple.empty() ? 0 : tuple.back() + 1;
    for (std::size_t e = start; e < net.event_count(); ++e) {
        bool indep = true;
        for (std::uint32_t a : tuple)
            if (!net.independent(a, e)) {
                indep = false;
                break;
            }
        if (!indep) continue;
        auto next = net.fire(current, e);
        if (!next) continue;
        tuple.push_back(static_cast<std::uint32_t>(e));
        if (out.size() < tuple.size()) out.resize(tuple.size());
        out[tuple.size() - 1].push_back(Cube{base, tuple});
        extend_tuples(net, base, tuple, *next, max_dim, out);
        tuple.pop_back();
    }
}

} // namespace

SemicubicalSet::SemicubicalSet(std::shared_ptr<const StateSpace> space,
                               std::vector<Grade> grades)
    : space_(std::move(space)), grades_(std::move(grades)) {
    if (!space_) throw ComplexError("semicubical set needs a state space");
    if (grades_.empty()) grades_.emplace_back();
    while (grades_.size() > 1 && grades_.back().cubes.empty()) grades_.pop_back();
}

const std::vector<Cube>& SemicubicalSet::cubes(std::size_t n) const {
    static const std::vector<Cube> empty;
    return n < grades_.size() ? grades_[n].cubes : empty;
}

const Cube& SemicubicalSet::cube(std::size_t n, std::size_t idx) const {
    if (n >= grades_.size() || idx >= grades_[n].cubes.size())
        throw ComplexError("cube index out of range");
    return grades_[n].cubes[idx];
}

std::uint32_t SemicubicalSet::face_index(std::size_t n, std::size_t idx, std::size_t i,
                                         int eps) const {
    if (n == 0 || n >= grades_.size() || idx >= grades_[n].cubes.size() || i < 1 || i > n ||
        eps < 0 || eps > 1)
        throw ComplexError("face index out of range");
    return grades_[n].faces[idx * 2 * n + face_slot(i, eps)];
}

const Cube& SemicubicalSet::face(std::size_t n, std::size_t idx, std::size_t i, int eps) const {
    return cube(n - 1, face_index(n, idx, i, eps));
}

std::optional<std::uint32_t> SemicubicalSet::find(std::size_t n, const Cube& c) const {
    if (n >= grades_.size()) return std::nullopt;
    return find_sorted(grades_[n].cubes, c);
}

void SemicubicalSet::set_face_index(std::size_t n, std::size_t idx, std::size_t i, int eps,
                                    std::uint32_t target) {
    face_index(n, idx, i, eps); // bounds check
    grades_[n].faces[idx * 2 * n + face_slot(i, eps)] = target;
}

std::size_t SemicubicalSet::total_cubes() const {
    return std::accumulate(grades_.begin(), grades_.end(), std::size_t{0},
                           [](std::size_t acc, const Grade& g) { return acc + g.cubes.size(); });
}

bool operator==(const SemicubicalSet& a, const SemicubicalSet& b) {
    return same_ambient(a, b) && a.grades_ == b.grades_;
}

bool same_ambient(const SemicubicalSet& a, const SemicubicalSet& b) {
    return a.space_ptr() == b.space_ptr() || a.space() == b.space();
}

SemicubicalSet build_complex(const StateSpace& space, std::size_t max_dim) {
    return build_complex(std::make_shared<const StateSpace>(space), max_dim);
}

SemicubicalSet build_complex(std::shared_ptr<const StateSpace> space, std::size_t max_dim) {
    const StateSpace& sp = *space;
    if (auto v = sp.closure_violation())
        throw ComplexError("state space is not forward closed: " + *v);

    const auto nstates = static_cast<std::int64_t>(sp.size());
    std::vector<std::vector<std::vector<Cube>>> per_state(sp.size());
#pragma omp parallel for schedule(dynamic, 64)
    for (std::int64_t i = 0; i < nstates; ++i) {
        std::vector<std::uint32_t> tuple;
        extend_tuples(sp.net(), static_cast<std::uint32_t>(i), tuple, sp.state(i), max_dim,
                      per_state[static_cast<std::size_t>(i)]);
    }

    std::size_t top = 0;
    for (const auto& levels : per_state) top = std::max(top, levels.size());

    std::vector<SemicubicalSet::Grade> grades(top + 1);
    grades[0].cubes.resize(sp.size());
    for (std::size_t i = 0; i < sp.size(); ++i)
        grades[0].cubes[i] = Cube{static_cast<std::uint32_t>(i), {}};
    for (std::size_t n = 1; n <= top; ++n) {
        std::size_t count = 0;
        for (const auto& levels : per_state)
            if (n <= levels.size()) count += levels[n - 1].size();
        grades[n].cubes.reserve(count);
        for (auto& levels : per_state)
            if (n <= levels.size())
                for (auto& c : levels[n - 1]) grades[n].cubes.push_back(std::move(c));
    }

    for (std::size_t n = 1; n <= top; ++n)
        if (!resolve_faces(sp, grades[n], grades[n - 1].cubes, n))
            throw ComplexError("internal error: missing face while building the complex");

    return SemicubicalSet(std::move(space), std::move(grades));
}

std::vector<Violation> validate(const SemicubicalSet& x) {
    std::vector<Violation> out;
    for (std::size_t n = 1; n <= x.top_dimension(); ++n) {
        const std::size_t below = x.size(n - 1);
        const auto count = static_cast<std::int64_t>(x.size(n));
#pragma omp parallel for schedule(dynamic, 256)
        for (std::int64_t idx = 0; idx < count; ++idx) {
            std::vector<Violation> local;
            const auto c = static_cast<std::size_t>(idx);
            bool members_ok = true;
            for (std::size_t i = 1; i <= n; ++i)
                for (int eps = 0; eps <= 1; ++eps)
                    if (x.face_index(n, c, i, eps) >= below) {
                        local.push_back({n, c, i, 0, eps, 0,
                                         "face target outside grade " + std::to_string(n - 1)});
                        members_ok = false;
                    }
            if (members_ok && n >= 2) {
                for (std::size_t i = 1; i < n; ++i)
                    for (std::size_t j = i + 1; j <= n; ++j)
                        for (int alpha = 0; alpha <= 1; ++alpha)
                            for (int beta = 0; beta <= 1; ++beta) {
                                // d_i^{a} d_j^{b} must equal d_{j-1}^{b} d_i^{a}
                                std::uint32_t via_j = x.face_index(n, c, j, beta);
                                std::uint32_t via_i = x.face_index(n, c, i, alpha);
                                if (x.face_index(n - 1, via_j, i, alpha) !=
                                    x.face_index(n - 1, via_i, j - 1, beta))
                                    local.push_back({n, c, i, j, alpha, beta,
                                                     "face maps do not commute"});
                            }
            }
            if (!local.empty()) {
#pragma omp critical(pnhom_validate)
                out.insert(out.end(), local.begin(), local.end());
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const Violation& a, const Violation& b) {
        return std::tie(a.grade, a.cube, a.i, a.j, a.alpha, a.beta) <
               std::tie(b.grade, b.cube, b.i, b.j, b.alpha, b.beta);
    });
    return out;
}

namespace {

// Rebuilds all face tables for already-sorted grade lists; the grade lists
// must be face closed (always true for restrictions, unions, intersections
// of built complexes).
SemicubicalSet assemble(std::shared_ptr<const StateSpace> space,
                        std::vector<SemicubicalSet::Grade> grades) {
    for (std::size_t n = 1; n < grades.size(); ++n)
        if (!resolve_faces(*space, grades[n], grades[n - 1].cubes, n))
            throw ComplexError("operation produced a family that is not face closed");
    return SemicubicalSet(std::move(space), std::move(grades));
}

} // namespace

SemicubicalSet restrict_to_events(const SemicubicalSet& x,
                                  const std::vector<std::size_t>& keep) {
    std::vector<char> kept(x.space().net().event_count(), 0);
    for (std::size_t e : keep) {
        x.space().net().event(e); // validates the identifier
        kept[e] = 1;
    }
    std::vector<SemicubicalSet::Grade> grades(x.grade_count());
    grades[0].cubes = x.cubes(0); // vertices always survive
    for (std::size_t n = 1; n < x.grade_count(); ++n)
        for (const Cube& c : x.cubes(n)) {
            bool inside = std::all_of(c.events.begin(), c.events.end(),
                                      [&](std::uint32_t e) { return kept[e]; });
            if (inside) grades[n].cubes.push_back(c);
        }
    return assemble(x.space_ptr(), std::move(grades));
}

namespace {

SemicubicalSet merge(const SemicubicalSet& a, const SemicubicalSet& b, bool take_union) {
    if (!same_ambient(a, b))
        throw ComplexError(take_union ? "union of complexes over different state spaces"
                                      : "intersection of complexes over different state spaces");
    std::size_t top = take_union ? std::max(a.grade_count(), b.grade_count())
                                 : std::min(a.grade_count(), b.grade_count());
    std::vector<SemicubicalSet::Grade> grades(top);
    for (std::size_t n = 0; n < top; ++n) {
        const auto& ca = a.cubes(n);
        const auto& cb = b.cubes(n);
        if (take_union)
            std::set_union(ca.begin(), ca.end(), cb.begin(), cb.end(),
                           std::back_inserter(grades[n].cubes));
        else
            std::set_intersection(ca.begin(), ca.end(), cb.begin(), cb.end(),
                                  std::back_inserter(grades[n].cubes));
    }
    return assemble(a.space_ptr(), std::move(grades));
}

} // namespace

SemicubicalSet unite(const SemicubicalSet& a, const SemicubicalSet& b) {
    return merge(a, b, true);
}

SemicubicalSet intersect(const SemicubicalSet& a, const SemicubicalSet& b) {
    return merge(a, b, false);
}

std::vector<std::uint32_t> component_labels(const SemicubicalSet& x) {
    const std::size_t n = x.size(0);
    std::vector<std::uint32_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto root = [&](std::uint32_t v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    };
    for (std::size_t idx = 0; idx < x.size(1); ++idx) {
        std::uint32_t u = root(x.face_index(1, idx, 1, 0));
        std::uint32_t v = root(x.face_index(1, idx, 1, 1));
        if (u != v) parent[std::max(u, v)] = std::min(u, v);
    }
    std::vector<std::uint32_t> label(n, 0);
    std::uint32_t next = 0;
    std::vector<std::int64_t> seen(n, -1);
    for (std::size_t v = 0; v < n; ++v) {
        std::uint32_t r = root(static_cast<std::uint32_t>(v));
        if (seen[r] < 0) seen[r] = next++;
        label[v] = static_cast<std::uint32_t>(seen[r]);
    }
    return label;
}

std::size_t component_count(const SemicubicalSet& x) {
    auto labels = component_labels(x);
    return labels.empty() ? 0 : 1 + *std::max_element(labels.begin(), labels.end());
}

std::string dump_complex(const SemicubicalSet& x) {
    const auto& net = x.space().net();
    std::ostringstream os;
    os << "states: " << x.space().size() << "\n";
    os << "grades: " << x.grade_count() << "\n";
    for (std::size_t n = 0; n < x.grade_count(); ++n) {
        os << "grade " << n << ": " << x.size(n) << " cubes\n";
        for (std::size_t idx = 0; idx < x.size(n); ++idx) {
            const Cube& c = x.cubes(n)[idx];
            os << "  [" << idx << "] (" << x.space().state(c.base).to_string();
            for (std::uint32_t e : c.events) os << "; " << net.event(e).name;
            os << ")";
            if (n > 0) {
                os << " faces";
                for (std::size_t i = 1; i <= n; ++i)
                    os << " " << i << ":" << x.face_index(n, idx, i, 0) << "/"
                       << x.face_index(n, idx, i, 1);
            }
            os << "\n";
        }
    }
    return os.str();
}

} // namespace pnhom
