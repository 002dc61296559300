#pragma once

#include "pnhom/state_space.hpp"

#include <cstdint>
#include <limits>
#include <memory>
#include <string>
#include <tuple>
#include <vector>

namespace pnhom {

/// An n-cube: a base state together with a strictly increasing tuple of
/// pairwise independent events whose trace is defined at the base. The pair
/// (base, events) is the cube's identity; subcomplexes of a common ambient
/// complex share cubes through it.
struct Cube {
    std::uint32_t base = 0;               // index into the ambient state list
    std::vector<std::uint32_t> events;    // strictly increasing event indices

    std::size_t dimension() const { return events.size(); }

    friend bool operator==(const Cube& a, const Cube& b) {
        return a.base == b.base && a.events == b.events;
    }
    friend bool operator<(const Cube& a, const Cube& b) {
        return std::tie(a.base, a.events) < std::tie(b.base, b.events);
    }
};

/// A broken face-map condition found by validate(). For commutation failures
/// (i, j, alpha, beta) identify the offending identity; membership failures
/// set j = 0.
struct Violation {
    std::size_t grade = 0;
    std::size_t cube = 0;
    std::size_t i = 0;
    std::size_t j = 0;
    int alpha = 0;
    int beta = 0;
    std::string detail;
};

/// A graded family of cubes over a fixed state space, with explicit face
/// tables. Grade lists are sorted by (base index, event tuple); face tables
/// are indices into the grade below.
class SemicubicalSet {
public:
    struct Grade {
        std::vector<Cube> cubes;
        // 2n entries per cube, laid out as (i-1)*2 + eps for 1 <= i <= n.
        std::vector<std::uint32_t> faces;

        friend bool operator==(const Grade&, const Grade&) = default;
    };

    SemicubicalSet(std::shared_ptr<const StateSpace> space, std::vector<Grade> grades);

    const StateSpace& space() const { return *space_; }
    const std::shared_ptr<const StateSpace>& space_ptr() const { return space_; }

    /// Number of stored grades; grade lists above are empty by convention.
    std::size_t grade_count() const { return grades_.size(); }
    /// Largest stored grade (trailing empty grades are trimmed on build).
    std::size_t top_dimension() const { return grades_.size() - 1; }

    std::size_t size(std::size_t n) const {
        return n < grades_.size() ? grades_[n].cubes.size() : 0;
    }
    const std::vector<Cube>& cubes(std::size_t n) const;
    const Cube& cube(std::size_t n, std::size_t idx) const;

    /// Index of the face of cube idx in direction 1 <= i <= n, end eps.
    std::uint32_t face_index(std::size_t n, std::size_t idx, std::size_t i, int eps) const;
    /// The face cube itself, from the stored tables.
    const Cube& face(std::size_t n, std::size_t idx, std::size_t i, int eps) const;

    /// Position of a cube value in grade n, if stored.
    std::optional<std::uint32_t> find(std::size_t n, const Cube& c) const;

    /// Overwrites one face entry; only used to build corrupted instances.
    void set_face_index(std::size_t n, std::size_t idx, std::size_t i, int eps,
                        std::uint32_t target);

    std::size_t total_cubes() const;

    friend bool operator==(const SemicubicalSet& a, const SemicubicalSet& b);

private:
    std::shared_ptr<const StateSpace> space_;
    std::vector<Grade> grades_;
};

inline constexpr std::size_t kNoDimensionCap = std::numeric_limits<std::size_t>::max();

/// Builds the cube complex of a state space: one n-cube per (state, tuple of
/// pairwise independent events in increasing order with defined trace).
/// Requires a forward-closed space so that every face base stays inside it.
SemicubicalSet build_complex(const StateSpace& space, std::size_t max_dim = kNoDimensionCap);
SemicubicalSet build_complex(std::shared_ptr<const StateSpace> space,
                             std::size_t max_dim = kNoDimensionCap);

/// Checks the face-map commutation identities and face membership on the
/// stored tables. Empty result iff the structure is a semicubical set.
std::vector<Violation> validate(const SemicubicalSet& x);

/// The subcomplex of cubes whose event tuple lies entirely in keep.
/// Grade 0 is left unchanged.
SemicubicalSet restrict_to_events(const SemicubicalSet& x,
                                  const std::vector<std::size_t>& keep);

/// Grade-wise set union/intersection of subcomplexes of a common ambient
/// complex. Face tables are rebuilt from cube data.
SemicubicalSet unite(const SemicubicalSet& a, const SemicubicalSet& b);
SemicubicalSet intersect(const SemicubicalSet& a, const SemicubicalSet& b);

bool same_ambient(const SemicubicalSet& a, const SemicubicalSet& b);

/// Connected-component label per vertex, using grade-1 cubes as undirected
/// edges; labels are numbered by first occurrence in state order.
std::vector<std::uint32_t> component_labels(const SemicubicalSet& x);
std::size_t component_count(const SemicubicalSet& x);

/// Plain-text listing of each grade's cubes and face tables.
std::string dump_complex(const SemicubicalSet& x);

} // namespace pnhom
