#include "pnhom/mayer_vietoris.hpp"

#include "pnhom/errors.hpp"

#include <sstream>

namespace pnhom {

namespace {

// Dense d_n of a complex, padded with a zero matrix of the right shape when
// the complex has no cubes that high.
IntMatrix dense_differential(const ChainComplex& c, const SemicubicalSet& x, std::size_t n) {
    if (n <= c.top_grade() && n >= 1) return c.differential(n).to_dense();
    return IntMatrix(x.size(n - 1), x.size(n));
}

IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
    return m;
}

std::uint32_t position_in(const SemicubicalSet& x, std::size_t n, const Cube& c) {
    auto idx = x.find(n, c);
    if (!idx) throw ComplexError("subcomplex cube missing from the enclosing complex");
    return *idx;
}

long long euler_characteristic(const SemicubicalSet& x) {
    long long chi = 0;
    for (std::size_t n = 0; n < x.grade_count(); ++n)
        chi += (n % 2 == 0 ? 1 : -1) * static_cast<long long>(x.size(n));
    return chi;
}

} // namespace

bool MVReport::exact() const {
    if (!chain_maps_commute) return false;
    for (const auto& g : grades)
        if (!g.pass()) return false;
    return true;
}

std::string MVReport::summary() const {
    std::ostringstream os;
    os << (exact() ? "exact" : "NOT exact") << "; intersection components: " << components_inter
       << "; H_0 map rank: " << h0_rank;
    return os.str();
}

MVReport mv_check(const SemicubicalSet& a, const SemicubicalSet& b) {
    if (!same_ambient(a, b))
        throw ComplexError("mv check needs subcomplexes of a common ambient complex");

    SemicubicalSet whole = unite(a, b);
    SemicubicalSet inter = intersect(a, b);

    const std::size_t top = whole.top_dimension();

    // Diagonal and difference maps per grade.
    std::vector<IntMatrix> diag(top + 1), diff(top + 1);
    for (std::size_t n = 0; n <= top; ++n) {
        const std::size_t la = a.size(n), lb = b.size(n);
        diag[n] = IntMatrix(la + lb, inter.size(n));
        for (std::size_t c = 0; c < inter.size(n); ++c) {
            const Cube& cu = inter.cubes(n)[c];
            diag[n](position_in(a, n, cu), c) = 1;
            diag[n](la + position_in(b, n, cu), c) = 1;
        }
        diff[n] = IntMatrix(whole.size(n), la + lb);
        for (std::size_t c = 0; c < la; ++c)
            diff[n](position_in(whole, n, a.cubes(n)[c]), c) = 1;
        for (std::size_t c = 0; c < lb; ++c)
            diff[n](position_in(whole, n, b.cubes(n)[c]), la + c) = -1;
    }

    MVReport report;
    for (std::size_t n = 0; n <= top; ++n) {
        MVGrade g;
        g.grade = n;
        g.inter_size = inter.size(n);
        g.left_size = a.size(n);
        g.right_size = b.size(n);
        g.union_size = whole.size(n);
        SNFResult s_diag = smith_normal_form(diag[n]);
        SNFResult s_diff = smith_normal_form(diff[n]);
        g.diagonal_injective = s_diag.rank == g.inter_size;
        g.difference_surjective =
            s_diff.rank == g.union_size && s_diff.nontrivial().empty();
        g.composite_zero = (diff[n] * diag[n]).is_zero();
        g.middle_exact =
            g.composite_zero && s_diag.rank + s_diff.rank == g.left_size + g.right_size;
        report.grades.push_back(g);
    }

    // The inclusions must be chain maps for the two-sided differential and
    // for both one-sided ones.
    report.chain_maps_commute = true;
    for (int kind = 0; kind < 3; ++kind) {
        auto boundary_of = [&](const SemicubicalSet& x) {
            if (kind == 0) return boundary_matrices(x);
            return directed_boundary_matrices(x, kind - 1);
        };
        ChainComplex ka = boundary_of(a), kb = boundary_of(b), kw = boundary_of(whole),
                     ki = boundary_of(inter);
        for (std::size_t n = 1; n <= top; ++n) {
            IntMatrix da = dense_differential(ka, a, n);
            IntMatrix db = dense_differential(kb, b, n);
            IntMatrix dw = dense_differential(kw, whole, n);
            IntMatrix di = dense_differential(ki, inter, n);
            IntMatrix middle = block_diagonal(da, db);
            if (!(diag[n - 1] * di == middle * diag[n]) ||
                !(diff[n - 1] * middle == dw * diff[n]))
                report.chain_maps_commute = false;
        }
    }

    // Induced degree-0 map on component classes.
    auto label_a = component_labels(a);
    auto label_b = component_labels(b);
    auto label_i = component_labels(inter);
    report.components_left =
        label_a.empty() ? 0 : 1 + *std::max_element(label_a.begin(), label_a.end());
    report.components_right =
        label_b.empty() ? 0 : 1 + *std::max_element(label_b.begin(), label_b.end());
    report.components_inter =
        label_i.empty() ? 0 : 1 + *std::max_element(label_i.begin(), label_i.end());
    report.h0_diagonal_matrix =
        IntMatrix(report.components_left + report.components_right, report.components_inter);
    std::vector<char> done(report.components_inter, 0);
    for (std::size_t v = 0; v < inter.size(0); ++v) {
        std::uint32_t w = label_i[v];
        if (done[w]) continue;
        done[w] = 1;
        const Cube& vertex = inter.cubes(0)[v];
        report.h0_diagonal_matrix(label_a[position_in(a, 0, vertex)], w) = 1;
        report.h0_diagonal_matrix(
            report.components_left + label_b[position_in(b, 0, vertex)], w) = 1;
    }
    report.h0_rank = smith_normal_form(report.h0_diagonal_matrix).rank;

    report.euler_left = euler_characteristic(a);
    report.euler_right = euler_characteristic(b);
    report.euler_union = euler_characteristic(whole);
    report.euler_inter = euler_characteristic(inter);
    return report;
}

} // namespace pnhom
