#include "kumar/graded.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace kumar {

GradedMatrix GradedMatrix::zero(TwistList tgt, TwistList src) {
    GradedMatrix M;
    M.target = std::move(tgt);
    M.source = std::move(src);
    M.a.assign(M.target.size(), std::vector<Polynomial>(M.source.size()));
    return M;
}

GradedMatrix GradedMatrix::identity(const PolyRing& R, TwistList twists) {
    GradedMatrix M = zero(twists, twists);
    for (int i = 0; i < M.rows(); ++i) M.a[i][i] = poly_int(R, 1);
    return M;
}

std::string HomogeneityViolation::describe() const {
    return "entry (" + std::to_string(row) + "," + std::to_string(col) + ") expected degree " +
           std::to_string(expected_degree) +
           (actual_degree == -2 ? " but is non-homogeneous" : " but has degree " + std::to_string(actual_degree));
}

std::optional<HomogeneityViolation> validate_homogeneous(const PolyRing& R, const GradedMatrix& M) {
    (void)R;
    for (int i = 0; i < M.rows(); ++i) {
        for (int j = 0; j < M.cols(); ++j) {
            const Polynomial& p = M.a[i][j];
            if (p.is_zero()) continue;
            int expected = M.target[i] - M.source[j];
            auto d = homogeneous_degree(p);
            if (!d) return HomogeneityViolation{i, j, expected, -2};
            if (*d != expected) return HomogeneityViolation{i, j, expected, *d};
        }
    }
    return std::nullopt;
}

GradedMatrix gm_mul(const PolyRing& R, const GradedMatrix& A, const GradedMatrix& B) {
    if (A.source != B.target) throw std::invalid_argument("twist mismatch in matrix product");
    GradedMatrix C = GradedMatrix::zero(A.target, B.source);
    for (int i = 0; i < A.rows(); ++i)
        for (int j = 0; j < B.cols(); ++j) {
            Polynomial s;
            for (int k = 0; k < A.cols(); ++k) {
                if (A.a[i][k].is_zero() || B.a[k][j].is_zero()) continue;
                s = poly_add(R, s, poly_mul(R, A.a[i][k], B.a[k][j]));
            }
            C.a[i][j] = std::move(s);
        }
    return C;
}

GradedMatrix gm_transpose(const GradedMatrix& A) {
    TwistList tgt(A.source.size()), src(A.target.size());
    for (size_t j = 0; j < A.source.size(); ++j) tgt[j] = -A.source[j];
    for (size_t i = 0; i < A.target.size(); ++i) src[i] = -A.target[i];
    GradedMatrix T = GradedMatrix::zero(std::move(tgt), std::move(src));
    for (int i = 0; i < A.rows(); ++i)
        for (int j = 0; j < A.cols(); ++j) T.a[j][i] = A.a[i][j];
    return T;
}

GradedMatrix gm_twist(const GradedMatrix& A, int t) {
    GradedMatrix B = A;
    for (auto& d : B.target) d += t;
    for (auto& d : B.source) d += t;
    return B;
}

GradedMatrix gm_shift_source(const GradedMatrix& A, int t) {
    GradedMatrix B = A;
    for (auto& d : B.source) d += t;
    return B;
}

GradedMatrix gm_hcat(const GradedMatrix& A, const GradedMatrix& B) {
    if (A.target != B.target) throw std::invalid_argument("hcat target mismatch");
    GradedMatrix C = A;
    C.source.insert(C.source.end(), B.source.begin(), B.source.end());
    for (int i = 0; i < A.rows(); ++i)
        C.a[i].insert(C.a[i].end(), B.a[i].begin(), B.a[i].end());
    return C;
}

bool gm_is_zero(const GradedMatrix& A) {
    for (const auto& row : A.a)
        for (const auto& p : row)
            if (!p.is_zero()) return false;
    return true;
}

bool gm_eq(const GradedMatrix& A, const GradedMatrix& B) {
    if (A.target != B.target || A.source != B.source) return false;
    for (int i = 0; i < A.rows(); ++i)
        for (int j = 0; j < A.cols(); ++j)
            if (!poly_eq(A.a[i][j], B.a[i][j])) return false;
    return true;
}

namespace {

// Laplace expansion along columns in order, memoized on the set of unused rows.
Polynomial det_rec(const PolyRing& R, const GradedMatrix& A, const std::vector<int>& rows,
                   const std::vector<int>& cols, size_t depth, uint32_t rowmask,
                   std::map<std::pair<size_t, uint32_t>, Polynomial>& memo) {
    if (depth == cols.size()) return poly_int(R, 1);
    auto key = std::make_pair(depth, rowmask);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    Polynomial acc;
    int sign = 1;
    for (size_t r = 0; r < rows.size(); ++r) {
        if (!(rowmask & (1u << r))) continue;
        const Polynomial& e = A.a[rows[r]][cols[depth]];
        if (!e.is_zero()) {
            Polynomial sub = det_rec(R, A, rows, cols, depth + 1, rowmask & ~(1u << r), memo);
            Polynomial term = poly_mul(R, e, sub);
            acc = sign > 0 ? poly_add(R, acc, term) : poly_sub(R, acc, term);
        }
        sign = -sign;
    }
    memo.emplace(key, acc);
    return acc;
}

}  // namespace

Polynomial gm_minor(const PolyRing& R, const GradedMatrix& A, const std::vector<int>& rows,
                    const std::vector<int>& cols) {
    if (rows.size() != cols.size()) throw std::invalid_argument("minor must be square");
    if (rows.size() > 31) throw std::invalid_argument("minor too large");
    std::map<std::pair<size_t, uint32_t>, Polynomial> memo;
    return det_rec(R, A, rows, cols, 0, (1u << rows.size()) - 1, memo);
}

std::vector<std::vector<int>> subsets_lex(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    // iterative lexicographic enumeration
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i < n; ++i) {
            cur.push_back(i);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

std::vector<std::vector<int>> subsets_colex(int n, int k) {
    auto all = subsets_lex(n, k);
    std::sort(all.begin(), all.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
        for (size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    });
    return all;
}

GradedMatrix koszul_differential(const PolyRing& R, int k, int twist) {
    int n = R.nvars();
    if (k < 1 || k > n) throw std::invalid_argument("koszul index out of range");
    auto src_sets = subsets_lex(n, k);
    auto tgt_sets = subsets_lex(n, k - 1);
    std::map<std::vector<int>, int> tgt_index;
    for (size_t i = 0; i < tgt_sets.size(); ++i) tgt_index[tgt_sets[i]] = static_cast<int>(i);
    TwistList tgt(tgt_sets.size(), -(k - 1) + twist), src(src_sets.size(), -k + twist);
    GradedMatrix M = GradedMatrix::zero(std::move(tgt), std::move(src));
    for (size_t j = 0; j < src_sets.size(); ++j) {
        const auto& s = src_sets[j];
        for (size_t t = 0; t < s.size(); ++t) {
            std::vector<int> rest;
            for (size_t u = 0; u < s.size(); ++u)
                if (u != t) rest.push_back(s[u]);
            int i = tgt_index[rest];
            Polynomial v = poly_var(R, s[t]);
            M.a[i][j] = (t % 2 == 0) ? v : poly_neg(R, v);
        }
    }
    return M;
}

Presentation Presentation::make(TwistList tgt, GradedMatrix rel) {
    if (rel.target != tgt) throw std::invalid_argument("presentation target/relation twist mismatch");
    Presentation P;
    P.target = std::move(tgt);
    P.relations = std::move(rel);
    return P;
}

}  // namespace kumar
