#include "pnhom/homology.hpp"

#include "pnhom/errors.hpp"

#include <sstream>

namespace pnhom {

std::vector<std::string> ChainComplex::check() const {
    std::vector<std::string> problems;
    if (ranks.empty()) {
        problems.push_back("complex has no grades");
        return problems;
    }
    if (boundaries.size() + 1 != ranks.size()) {
        problems.push_back("boundary count does not match grade count");
        return problems;
    }
    for (std::size_t n = 1; n < ranks.size(); ++n) {
        const SparseMat& d = boundaries[n - 1];
        if (d.rows() != ranks[n - 1] || d.cols() != ranks[n])
            problems.push_back("d_" + std::to_string(n) + " has shape " +
                               std::to_string(d.rows()) + "x" + std::to_string(d.cols()));
    }
    if (!problems.empty()) return problems;
    for (std::size_t n = 2; n < ranks.size(); ++n)
        if (!boundaries[n - 2].product_is_zero(boundaries[n - 1]))
            problems.push_back("d_" + std::to_string(n - 1) + " d_" + std::to_string(n) +
                               " is not zero");
    return problems;
}

namespace {

enum class BoundaryKind { two_sided, lower, upper };

ChainComplex assemble_boundaries(const SemicubicalSet& x, BoundaryKind kind) {
    ChainComplex c;
    const std::size_t top = x.top_dimension();
    c.ranks.resize(top + 1);
    for (std::size_t n = 0; n <= top; ++n) c.ranks[n] = x.size(n);
    c.boundaries.reserve(top);
    for (std::size_t n = 1; n <= top; ++n) {
        SparseMat d(x.size(n - 1), x.size(n));
        const auto count = static_cast<std::int64_t>(x.size(n));
#pragma omp parallel for schedule(dynamic, 256)
        for (std::int64_t idx = 0; idx < count; ++idx) {
            std::vector<SparseMat::Entry> col;
            col.reserve(2 * n);
            for (std::size_t i = 1; i <= n; ++i) {
                std::int64_t sign = (i % 2 == 0) ? 1 : -1;
                const auto j = static_cast<std::size_t>(idx);
                if (kind != BoundaryKind::lower)
                    col.emplace_back(x.face_index(n, j, i, 1), sign);
                if (kind != BoundaryKind::upper)
                    col.emplace_back(x.face_index(n, j, i, 0),
                                     kind == BoundaryKind::lower ? sign : -sign);
            }
            d.set_column(static_cast<std::size_t>(idx), merge_entries(std::move(col)));
        }
        c.boundaries.push_back(std::move(d));
    }
    return c;
}

} // namespace

ChainComplex boundary_matrices(const SemicubicalSet& x) {
    return assemble_boundaries(x, BoundaryKind::two_sided);
}

ChainComplex directed_boundary_matrices(const SemicubicalSet& x, int eps) {
    if (eps != 0 && eps != 1) throw Error("eps must be 0 or 1");
    return assemble_boundaries(x, eps == 0 ? BoundaryKind::lower : BoundaryKind::upper);
}

std::vector<HomologyGroup> homology(const ChainComplex& c) {
    if (auto problems = c.check(); !problems.empty())
        throw ComplexError("malformed chain complex: " + problems.front());
    const std::size_t top = c.top_grade();

    // rank of d_n for n = 1..top, plus the torsion of coker(d_{n+1})
    std::vector<std::size_t> d_rank(top + 2, 0);
    std::vector<std::vector<BigInt>> d_torsion(top + 2);
    for (std::size_t n = 1; n <= top; ++n) {
        SNFResult snf = smith_normal_form(c.differential(n).to_dense());
        d_rank[n] = snf.rank;
        d_torsion[n] = snf.nontrivial();
    }

    std::vector<HomologyGroup> groups(top + 1);
    for (std::size_t n = 0; n <= top; ++n) {
        auto betti = static_cast<long long>(c.ranks[n]) -
                     static_cast<long long>(d_rank[n]) -
                     static_cast<long long>(d_rank[n + 1]);
        groups[n].degree = n;
        groups[n].betti = static_cast<std::size_t>(betti);
        groups[n].torsion = d_torsion[n + 1];
    }
    return groups;
}

std::vector<HomologyGroup> directed_homology(const StateSpace& space, int eps) {
    return homology(directed_boundary_matrices(build_complex(space), eps));
}

HomologyGroup group_at(const std::vector<HomologyGroup>& groups, std::size_t k) {
    if (k < groups.size()) return groups[k];
    return HomologyGroup{k, 0, {}};
}

std::string to_string(const HomologyGroup& g) {
    if (g.trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    if (g.betti > 0) {
        os << "Z";
        if (g.betti > 1) os << "^" << g.betti;
        first = false;
    }
    for (const BigInt& d : g.torsion) {
        if (!first) os << " ⊕ ";
        os << "Z/" << d;
        first = false;
    }
    return os.str();
}

std::string render_groups(const std::vector<HomologyGroup>& groups,
                          const std::string& symbol, const std::string& superscript) {
    std::size_t last = groups.size();
    while (last > 0 && groups[last - 1].trivial()) --last;
    std::ostringstream os;
    for (std::size_t k = 0; k < last; ++k)
        os << symbol << "_" << k << superscript << " = " << to_string(groups[k]) << "\n";
    os << symbol << "_k" << superscript << " = 0 (k >= " << last << ")\n";
    return os.str();
}

} // namespace pnhom
