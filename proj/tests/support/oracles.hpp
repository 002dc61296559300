#pragma once

// Test-side oracles, kept independent of the library code paths they check:
// cube counting by power-set filtering over place-name sets, rank by exact
// rational elimination, determinants by fraction-free elimination, and a
// seeded random net generator.

#include "pnhom/matrix.hpp"
#include "pnhom/net.hpp"
#include "pnhom/state_space.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace oracles {

using pnhom::BigInt;
using Rational = boost::multiprecision::cpp_rational;
using PlaceSet = std::set<std::string>;

inline PlaceSet to_set(const pnhom::ElementaryNet& net, const pnhom::Marking& m) {
    auto names = net.occupied_places(m);
    return PlaceSet(names.begin(), names.end());
}

inline bool subset(const PlaceSet& a, const PlaceSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline PlaceSet minus(const PlaceSet& a, const PlaceSet& b) {
    PlaceSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                        std::inserter(out, out.begin()));
    return out;
}

inline PlaceSet unite(const PlaceSet& a, const PlaceSet& b) {
    PlaceSet out = a;
    out.insert(b.begin(), b.end());
    return out;
}

inline bool disjoint(const PlaceSet& a, const PlaceSet& b) {
    return minus(a, b).size() == a.size();
}

// The firing rule recomputed over place-name sets.
inline std::optional<PlaceSet> fire_set(const pnhom::ElementaryNet& net, const PlaceSet& s,
                                        std::size_t e) {
    PlaceSet pre = to_set(net, net.events()[e].pre);
    PlaceSet post = to_set(net, net.events()[e].post);
    if (!subset(pre, s)) return std::nullopt;
    PlaceSet rest = minus(s, pre);
    if (!disjoint(rest, post)) return std::nullopt;
    return unite(rest, post);
}

inline bool independent_sets(const pnhom::ElementaryNet& net, std::size_t a, std::size_t b) {
    if (a == b) return false;
    PlaceSet fa = unite(to_set(net, net.events()[a].pre), to_set(net, net.events()[a].post));
    PlaceSet fb = unite(to_set(net, net.events()[b].pre), to_set(net, net.events()[b].post));
    return disjoint(fa, fb);
}

// Number of k-cubes of the complex of `space`, by filtering every increasing
// k-tuple of events at every state.
inline std::size_t brute_cube_count(const pnhom::StateSpace& space, std::size_t k) {
    const auto& net = space.net();
    if (k == 0) return space.size();
    std::size_t count = 0;
    // enumerate increasing tuples by odometer
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    if (k > net.event_count()) return 0;
    while (true) {
        bool indep = true;
        for (std::size_t a = 0; a < k && indep; ++a)
            for (std::size_t b = a + 1; b < k && indep; ++b)
                if (!independent_sets(net, idx[a], idx[b])) indep = false;
        if (indep) {
            for (std::size_t s = 0; s < space.size(); ++s) {
                std::optional<PlaceSet> current = to_set(net, space.state(s));
                for (std::size_t i = 0; i < k && current; ++i)
                    current = fire_set(net, *current, idx[i]);
                if (current) ++count;
            }
        }
        // next increasing tuple
        std::size_t pos = k;
        while (pos > 0 && idx[pos - 1] == net.event_count() - (k - pos + 1)) --pos;
        if (pos == 0) break;
        ++idx[pos - 1];
        for (std::size_t i = pos; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
    return count;
}

// Rank by exact Gaussian elimination over the rationals.
inline std::size_t rational_rank(const pnhom::IntMatrix& m) {
    std::vector<std::vector<Rational>> a(m.rows(), std::vector<Rational>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = Rational(m(i, j));
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        std::size_t pivot = rank;
        while (pivot < m.rows() && a[pivot][col] == 0) ++pivot;
        if (pivot == m.rows()) continue;
        std::swap(a[rank], a[pivot]);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == rank || a[i][col] == 0) continue;
            Rational f = a[i][col] / a[rank][col];
            for (std::size_t j = col; j < m.cols(); ++j) a[i][j] -= f * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

// Determinant by Bareiss fraction-free elimination; exact for any square
// integer matrix.
inline BigInt bareiss_det(const pnhom::IntMatrix& m) {
    const std::size_t n = m.rows();
    if (n != m.cols()) throw std::invalid_argument("determinant needs a square matrix");
    if (n == 0) return 1;
    std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

inline bool unimodular(const pnhom::IntMatrix& m) {
    BigInt d = bareiss_det(m);
    return d == 1 || d == -1;
}

// Seeded random elementary net with at most max_places places. Pre and post
// sets may overlap, so self-loop events occur.
inline pnhom::ElementaryNet random_net(std::mt19937& rng, std::size_t max_places = 10) {
    std::uniform_int_distribution<std::size_t> place_count(2, max_places);
    std::uniform_int_distribution<std::size_t> event_count(2, 12);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::size_t np = place_count(rng);
    std::size_t ne = event_count(rng);
    std::vector<std::string> places;
    for (std::size_t i = 0; i < np; ++i) places.push_back("p" + std::to_string(i + 1));
    std::vector<pnhom::EventDef> events;
    for (std::size_t e = 0; e < ne; ++e) {
        pnhom::EventDef def;
        def.name = "e" + std::to_string(e + 1);
        for (std::size_t p = 0; p < np; ++p) {
            if (coin(rng) < 0.25) def.pre.push_back(places[p]);
            if (coin(rng) < 0.25) def.post.push_back(places[p]);
        }
        events.push_back(std::move(def));
    }
    std::vector<std::string> initial;
    for (std::size_t p = 0; p < np; ++p)
        if (coin(rng) < 0.4) initial.push_back(places[p]);
    return pnhom::ElementaryNet(std::move(places), events, initial);
}

inline pnhom::IntMatrix random_matrix(std::mt19937& rng, std::size_t max_dim = 40,
                                      int max_abs = 9) {
    std::uniform_int_distribution<std::size_t> dim(1, max_dim);
    std::uniform_int_distribution<int> entry(-max_abs, max_abs);
    pnhom::IntMatrix m(dim(rng), dim(rng));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = entry(rng);
    return m;
}

// Same net with events declared in permuted order.
inline pnhom::ElementaryNet permute_events(const pnhom::ElementaryNet& net,
                                           const std::vector<std::size_t>& perm) {
    std::vector<pnhom::EventDef> events;
    for (std::size_t e : perm) {
        pnhom::EventDef def;
        def.name = net.events()[e].name;
        def.pre = net.occupied_places(net.events()[e].pre);
        def.post = net.occupied_places(net.events()[e].post);
        events.push_back(std::move(def));
    }
    return pnhom::ElementaryNet(net.places(), events, net.occupied_places(net.initial()));
}

} // namespace oracles
