#include "kumar/module_ops.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace kumar {

Minimalized minimalize(const PolyRing& R, const Presentation& P) {
    GradedMatrix A = P.relations;
    std::vector<int> survivors(P.target.size());
    std::iota(survivors.begin(), survivors.end(), 0);
    // basis_change starts as the identity on the original generators
    GradedMatrix T = GradedMatrix::identity(R, P.target);

    auto is_unit_const = [&](const Polynomial& p) {
        return !p.is_zero() && p.terms().size() == 1 && p.lead().m.deg == 0;
    };

    for (;;) {
        int pi = -1, pj = -1;
        for (int j = 0; j < A.cols() && pi < 0; ++j)
            for (int i = 0; i < A.rows(); ++i)
                if (is_unit_const(A.a[i][j])) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi < 0) break;

        Scalar c = A.a[pi][pj].lead().c;
        Scalar ic = R.field.inv(c);
        // g_pi = -1/c * sum_{k != pi} A[k][pj] g_k ; snapshot the pivot column
        std::vector<Polynomial> pivot_col(A.rows());
        for (int k = 0; k < A.rows(); ++k) pivot_col[k] = A.a[k][pj];

        // fold row pi out of every other relation column
        for (int j = 0; j < A.cols(); ++j) {
            if (j == pj || A.a[pi][j].is_zero()) continue;
            Polynomial f = poly_scale(R, ic, A.a[pi][j]);
            for (int k = 0; k < A.rows(); ++k) {
                if (k == pi || pivot_col[k].is_zero()) continue;
                A.a[k][j] = poly_sub(R, A.a[k][j], poly_mul(R, f, pivot_col[k]));
            }
            A.a[pi][j] = Polynomial();
        }
        // rewrite the basis change: wherever g_pi appears, substitute
        Scalar mic = R.field.neg(ic);
        for (int r = 0; r < T.rows(); ++r) {
            if (T.a[r][pi].is_zero()) continue;
            Polynomial f = poly_scale(R, mic, T.a[r][pi]);
            for (int k = 0; k < A.rows(); ++k) {
                if (k == pi || pivot_col[k].is_zero()) continue;
                T.a[r][k] = poly_add(R, T.a[r][k], poly_mul(R, f, pivot_col[k]));
            }
        }
        // drop generator pi and relation pj
        for (auto& row : T.a) row.erase(row.begin() + pi);
        T.source.erase(T.source.begin() + pi);
        A.a.erase(A.a.begin() + pi);
        A.target.erase(A.target.begin() + pi);
        for (auto& row : A.a) row.erase(row.begin() + pj);
        A.source.erase(A.source.begin() + pj);
        survivors.erase(survivors.begin() + pi);
    }

    // drop zero relation columns
    for (int j = A.cols() - 1; j >= 0; --j) {
        bool zero = true;
        for (int i = 0; i < A.rows(); ++i)
            if (!A.a[i][j].is_zero()) {
                zero = false;
                break;
            }
        if (zero) {
            for (auto& row : A.a) row.erase(row.begin() + j);
            A.source.erase(A.source.begin() + j);
        }
    }

    Minimalized out;
    out.pres = Presentation::make(A.target, A);
    out.survivors = std::move(survivors);
    // emit the graded transpose: surviving x original
    GradedMatrix B = GradedMatrix::zero(A.target, P.target);
    for (int r = 0; r < T.rows(); ++r)
        for (int k = 0; k < T.cols(); ++k) B.a[k][r] = T.a[r][k];
    out.basis_change = std::move(B);
    return out;
}

GradedMatrix prune_generators(const PolyRing& R, const GradedMatrix& gens) {
    std::vector<int> order(gens.cols());
    std::iota(order.begin(), order.end(), 0);
    std::vector<Vec> cols(gens.cols());
    for (int j = 0; j < gens.cols(); ++j) cols[j] = gm_col(gens, j);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        auto da = vec_degree(cols[a], gens.target), db = vec_degree(cols[b], gens.target);
        return da.value_or(0) < db.value_or(0);
    });
    std::vector<Vec> accepted;
    for (int j : order) {
        if (cols[j].empty()) continue;
        if (!accepted.empty()) {
            GBData gb = buchberger_full(R, gens.target, accepted, false);
            GroebnerBasis G = reduce_basis(R, gens.target, gb.basis);
            if (in_span(R, G, cols[j])) continue;
        }
        accepted.push_back(cols[j]);
    }
    return cols_to_matrix(R, gens.target, accepted);
}

std::vector<int> FreeResolution::betti() const {
    std::vector<int> b;
    b.push_back(static_cast<int>(f0.size()));
    for (const auto& d : diffs) b.push_back(static_cast<int>(d.source.size()));
    while (b.size() > 1 && b.back() == 0) b.pop_back();
    return b;
}

FreeResolution free_resolution(const PolyRing& R, const Presentation& P, int max_length) {
    Minimalized m = minimalize(R, P);
    FreeResolution res;
    res.f0 = m.pres.target;
    GradedMatrix d = prune_generators(R, m.pres.relations);
    res.minimal = true;
    for (int step = 0; step < max_length; ++step) {
        if (d.cols() == 0) return res;
        res.diffs.push_back(d);
        GradedMatrix z = syzygy(R, d);
        d = prune_generators(R, z);
        d.target = res.diffs.back().source;
    }
    if (d.cols() != 0) {
        res.truncated = true;
        res.minimal = false;
    }
    return res;
}

int64_t free_module_dim(const PolyRing& R, const TwistList& twists, int d) {
    auto count = [&](int deg) -> int64_t {
        if (deg < 0) return 0;
        int64_t num = 1;
        for (int i = 1; i <= R.nvars() - 1; ++i) num = num * (deg + i) / i;
        return num;
    };
    int64_t total = 0;
    for (int t : twists) total += count(d + t);
    return total;
}

std::vector<int64_t> hilbert_function(const PolyRing& R, const TwistList& target,
                                      const GroebnerBasis& relGB, int lo, int hi) {
    std::vector<int64_t> out;
    for (int d = lo; d <= hi; ++d)
        out.push_back(free_module_dim(R, target, d) - graded_piece_dim(R, relGB, d));
    return out;
}

std::vector<int64_t> hilbert_function(const PolyRing& R, const Presentation& P, int lo, int hi) {
    GroebnerBasis G = buchberger_matrix(R, P.relations);
    return hilbert_function(R, P.target, G, lo, hi);
}

bool is_finite_length(const GroebnerBasis& relGB, int nvars) {
    for (size_t pos = 0; pos < relGB.ambient.size(); ++pos) {
        for (int v = 0; v < nvars; ++v) {
            bool found = false;
            for (const auto& g : relGB.elems) {
                if (g.front().pos != static_cast<int>(pos)) continue;
                const Monomial& m = g.front().m;
                if (m.e[v] == m.deg) {  // pure power of x_v (or the constant 1)
                    found = true;
                    break;
                }
            }
            if (!found) return false;
        }
    }
    return true;
}

bool is_finite_length(const PolyRing& R, const Presentation& P) {
    GroebnerBasis G = buchberger_matrix(R, P.relations);
    return is_finite_length(G, R.nvars());
}

}  // namespace kumar
