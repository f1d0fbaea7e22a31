#include "kumar/ideal.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace kumar {

GradedMatrix ideal_to_matrix(const PolyRing& R, const Ideal& I) {
    std::vector<Vec> cols;
    for (const auto& f : I.gens)
        if (!f.is_zero()) cols.push_back(dense_to_vec(R, {f}));
    return cols_to_matrix(R, {0}, cols);
}

GroebnerBasis ideal_gb(const PolyRing& R, const Ideal& I) {
    return buchberger_matrix(R, ideal_to_matrix(R, I));
}

Ideal ideal_quotient(const PolyRing& R, const Ideal& I, const Polynomial& f) {
    if (f.is_zero()) throw std::invalid_argument("ideal quotient by zero");
    std::vector<Vec> cols;
    cols.push_back(dense_to_vec(R, {f}));
    for (const auto& g : I.gens)
        if (!g.is_zero()) cols.push_back(dense_to_vec(R, {g}));
    GradedMatrix A = cols_to_matrix(R, TwistList{0}, cols);
    GradedMatrix Z = syzygy(R, A);
    Ideal out;
    for (int j = 0; j < Z.cols(); ++j)
        if (!Z.a[0][j].is_zero()) out.gens.push_back(Z.a[0][j]);
    return out;
}

namespace {

bool gb_equal(const GroebnerBasis& A, const GroebnerBasis& B) {
    if (A.elems.size() != B.elems.size()) return false;
    for (size_t i = 0; i < A.elems.size(); ++i)
        if (!vec_eq(A.elems[i], B.elems[i])) return false;
    return true;
}

}  // namespace

Ideal saturate(const PolyRing& R, const Ideal& I, const Polynomial& f) {
    Ideal cur = I;
    GroebnerBasis curGB = ideal_gb(R, cur);
    for (;;) {
        Ideal next = ideal_quotient(R, cur, f);
        GroebnerBasis nextGB = ideal_gb(R, next);
        if (gb_equal(curGB, nextGB)) return cur;
        cur = std::move(next);
        curGB = std::move(nextGB);
    }
}

Ideal saturate_by_variable(const PolyRing& R, const Ideal& I, int v) {
    // move v to the last slot, take a grevlex GB there, divide out x_last
    int n = R.nvars();
    std::vector<int> fwd(n), bwd(n);
    int c = 0;
    for (int i = 0; i < n; ++i)
        if (i != v) {
            fwd[i] = c;
            bwd[c] = i;
            ++c;
        }
    fwd[v] = n - 1;
    bwd[n - 1] = v;
    std::vector<std::string> names(n);
    for (int i = 0; i < n; ++i) names[i] = R.vars[bwd[i]];
    PolyRing Rp(names, R.field);

    Ideal J;
    for (const auto& f : I.gens) J.gens.push_back(map_ring(R, Rp, fwd, f));
    GroebnerBasis G = ideal_gb(Rp, J);
    Ideal out;
    for (const auto& g : G.elems) {
        Polynomial p = Polynomial::from_sorted([&] {
            std::vector<Term> ts;
            for (const auto& t : g) ts.push_back({t.m, t.c});
            return ts;
        }());
        // divide by the largest power of the last variable dividing p
        int mp = INT32_MAX;
        for (const auto& t : p.terms()) mp = std::min(mp, static_cast<int>(t.m.e[n - 1]));
        if (mp > 0) {
            std::vector<Term> ts;
            for (const auto& t : p.terms()) {
                Term u = t;
                u.m.e[n - 1] = static_cast<uint16_t>(u.m.e[n - 1] - mp);
                u.m.deg -= mp;
                ts.push_back(u);
            }
            p = Polynomial::make(Rp, std::move(ts));
        }
        out.gens.push_back(map_ring(Rp, R, bwd, p));
    }
    return out;
}

bool is_projectively_empty_gb(const GroebnerBasis& G, int nvars) {
    for (int v = 0; v < nvars; ++v) {
        bool found = false;
        for (const auto& g : G.elems) {
            const Monomial& m = g.front().m;
            if (m.e[v] == m.deg) {
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

bool is_projectively_empty(const PolyRing& R, const Ideal& I) {
    for (const auto& g : I.gens)
        if (!is_homogeneous(g)) throw std::invalid_argument("is_projectively_empty needs a homogeneous ideal");
    return is_projectively_empty_gb(ideal_gb(R, I), R.nvars());
}

bool is_affinely_empty(const PolyRing& R, const Ideal& I) {
    GroebnerBasis G = ideal_gb(R, I);
    for (const auto& g : G.elems)
        if (g.front().m.deg == 0) return true;
    return false;
}

bool enumerate_minors(const PolyRing& R, const GradedMatrix& A, int k, int64_t budget,
                      const std::function<bool(const Polynomial&)>& sink) {
    if (k <= 0 || k > std::min(A.rows(), A.cols())) throw std::invalid_argument("minor size out of range");
    auto colsets = subsets_colex(A.cols(), k);
    auto rowsets = subsets_colex(A.rows(), k);
    int64_t used = 0;
    for (const auto& cs : colsets) {
        for (const auto& rs : rowsets) {
            // cheap zero screen: an all-zero column kills the determinant
            bool zero = false;
            for (int j : cs) {
                bool colzero = true;
                for (int i : rs)
                    if (!A.a[i][j].is_zero()) {
                        colzero = false;
                        break;
                    }
                if (colzero) {
                    zero = true;
                    break;
                }
            }
            if (zero) continue;
            if (used >= budget) return false;
            ++used;
            Polynomial d = gm_minor(R, A, rs, cs);
            if (d.is_zero()) continue;
            if (!sink(d)) return true;
        }
    }
    return true;
}

FittingResult fitting_ideal(const PolyRing& R, const GradedMatrix& A, int k, int64_t budget) {
    FittingResult res;
    res.complete = enumerate_minors(R, A, k, budget, [&](const Polynomial& d) {
        res.ideal.gens.push_back(d);
        return true;
    });
    return res;
}

namespace {

int64_t eval_poly(const PolyRing& R, const Polynomial& f, const std::vector<int64_t>& pt) {
    int64_t p = R.field.characteristic();
    if (p == 0) throw std::logic_error("evaluation ranks need a prime field");
    int64_t acc = 0;
    for (const auto& t : f.terms()) {
        int64_t v = t.c.num % p;
        for (int i = 0; i < R.nvars(); ++i)
            for (int e = 0; e < t.m.e[i]; ++e) v = (v * pt[i]) % p;
        acc = (acc + v) % p;
    }
    return acc;
}

struct EvalRank {
    int rank;
    std::vector<int> pivot_rows, pivot_cols;
};

EvalRank scalar_rank(int64_t p, std::vector<std::vector<int64_t>> M) {
    EvalRank out{0, {}, {}};
    if (M.empty() || M[0].empty()) return out;
    int rows = static_cast<int>(M.size()), cols = static_cast<int>(M[0].size());
    auto inv = [&](int64_t a) {
        int64_t t = 0, nt = 1, r = p, nr = a % p;
        while (nr != 0) {
            int64_t q = r / nr, tmp = t - q * nt;
            t = nt;
            nt = tmp;
            tmp = r - q * nr;
            r = nr;
            nr = tmp;
        }
        return t < 0 ? t + p : t;
    };
    std::vector<bool> used(rows, false);
    for (int j = 0; j < cols; ++j) {
        int pr = -1;
        for (int i = 0; i < rows; ++i)
            if (!used[i] && M[i][j] % p != 0) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        used[pr] = true;
        out.pivot_rows.push_back(pr);
        out.pivot_cols.push_back(j);
        ++out.rank;
        int64_t ip = inv((M[pr][j] % p + p) % p);
        for (int i = 0; i < rows; ++i) {
            if (i == pr || M[i][j] % p == 0) continue;
            int64_t f = (M[i][j] % p * ip) % p;
            for (int c = 0; c < cols; ++c) M[i][c] = ((M[i][c] - f * M[pr][c]) % p + p) % p;
        }
    }
    return out;
}

}  // namespace

int certified_rank(const PolyRing& R, const GradedMatrix& A) {
    if (A.rows() == 0 || A.cols() == 0) return 0;
    int64_t p = R.field.characteristic();
    std::mt19937_64 rng(0x5eed5eedULL);
    int best = -1;
    EvalRank bestev;
    for (int attempt = 0;; ++attempt) {
        for (int trial = 0; trial < 4 + attempt; ++trial) {
            std::vector<int64_t> pt(R.nvars());
            for (auto& x : pt) x = static_cast<int64_t>(rng() % static_cast<uint64_t>(p));
            std::vector<std::vector<int64_t>> M(A.rows(), std::vector<int64_t>(A.cols()));
            for (int i = 0; i < A.rows(); ++i)
                for (int j = 0; j < A.cols(); ++j) M[i][j] = eval_poly(R, A.a[i][j], pt);
            EvalRank ev = scalar_rank(p, M);
            if (ev.rank > best) {
                best = ev.rank;
                bestev = ev;
            }
        }
        if (best == 0) return 0;
        // certificate (a): the pivot minor is symbolically nonzero (it is
        // nonzero at the witness point, so no check needed beyond evaluation)
        // certificate (b): every remaining row lies in the fraction-field
        // span of the pivot rows
        std::vector<int> rest;
        for (int i = 0; i < A.rows(); ++i)
            if (std::find(bestev.pivot_rows.begin(), bestev.pivot_rows.end(), i) == bestev.pivot_rows.end())
                rest.push_back(i);
        bool all_ok = true;
        for (int i : rest) {
            // transpose trick: rows of A become columns of A^T
            GradedMatrix At = gm_transpose(A);
            std::vector<Vec> cols;
            cols.push_back(gm_col(At, i));
            for (int r : bestev.pivot_rows) cols.push_back(gm_col(At, r));
            TwistList amb = At.target;
            GBData gb = buchberger_full(R, amb, cols, true);
            bool member = false;
            for (const auto& s : gb.syzygies)
                for (const auto& t : s)
                    if (t.pos == 0) {
                        member = true;
                        break;
                    }
            if (!member) {
                all_ok = false;
                break;
            }
        }
        if (all_ok) return best;
        if (attempt > 8) throw std::logic_error("rank certification failed to converge");
    }
}

LocalFreeness local_freeness_check(const PolyRing& R, const GradedMatrix& A, int64_t budget) {
    LocalFreeness out;
    int t = A.rows();
    if (A.cols() == 0 || gm_is_zero(A)) {
        out.status = LocalFreeness::Status::Pass;
        out.rho = 0;
        out.rank = t;
        out.detail = "free module (no relations)";
        return out;
    }
    int rho = certified_rank(R, A);
    out.rho = rho;
    out.rank = t - rho;
    if (rho == 0) {
        out.status = LocalFreeness::Status::Pass;
        out.detail = "zero relations";
        return out;
    }
    // V(I_rho) must be projectively empty; accумulate minors in batches
    Ideal I;
    int64_t used = 0;
    bool verdict = false;
    bool complete = enumerate_minors(R, A, rho, budget, [&](const Polynomial& d) {
        I.gens.push_back(d);
        ++used;
        if (used % 64 == 0 || used == 1) {
            if (is_projectively_empty(R, I)) {
                verdict = true;
                return false;
            }
        }
        return true;
    });
    out.minors_used = used;
    if (!verdict && !I.gens.empty() && (complete || used > 0)) {
        // final check on everything accumulated
        verdict = is_projectively_empty(R, I);
    }
    if (verdict) {
        out.status = LocalFreeness::Status::Pass;
        out.detail = "I_" + std::to_string(rho) + " projectively empty (" + std::to_string(used) + " minors)";
    } else if (complete) {
        out.status = LocalFreeness::Status::Fail;
        out.detail = "I_" + std::to_string(rho) + " has nonempty projective locus";
    } else {
        out.status = LocalFreeness::Status::Inconclusive;
        out.detail = "minor budget " + std::to_string(budget) + " exhausted after " + std::to_string(used) +
                     " minors";
    }
    return out;
}

}  // namespace kumar
