#include "kumar/groebner.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

namespace kumar {

namespace {

struct Reducer {
    const PolyRing& R;
    const std::vector<Vec>& basis;  // monic
    const std::vector<Vec>* reps;   // optional, aligned with basis

    // Reduces v fully; subtracts matching multiples of reps from rep_acc and
    // accumulates quotients when requested. Terms before the cursor are
    // irreducible and untouched by later subtractions (which only produce
    // strictly smaller terms).
    Vec run(Vec v, Vec* rep_acc, std::vector<Polynomial>* quotients) const {
        size_t cursor = 0;
        while (cursor < v.size()) {
            const MTerm t = v[cursor];
            int hit = -1;
            for (size_t k = 0; k < basis.size(); ++k) {
                if (basis[k].empty()) continue;
                const MTerm& lt = basis[k].front();
                if (lt.pos == t.pos && mon_divides(lt.m, t.m)) {
                    hit = static_cast<int>(k);
                    break;
                }
            }
            if (hit < 0) {
                ++cursor;
                continue;
            }
            Monomial u = mon_div(t.m, basis[hit].front().m);
            Scalar c = t.c;  // basis monic
            Vec suffix(v.begin() + cursor, v.end());
            suffix = vec_sub(R, suffix, vec_mono_mul(R, c, u, basis[hit]));
            v.resize(cursor);
            v.insert(v.end(), suffix.begin(), suffix.end());
            if (rep_acc && reps) *rep_acc = vec_sub(R, *rep_acc, vec_mono_mul(R, c, u, (*reps)[hit]));
            if (quotients)
                (*quotients)[hit] = poly_add(R, (*quotients)[hit], poly_mono(R, u, c));
        }
        return v;
    }
};

int spair_degree(const Vec& a, const Vec& b, const TwistList& ambient) {
    const MTerm &la = a.front(), &lb = b.front();
    Monomial l = mon_lcm(la.m, lb.m);
    return static_cast<int>(l.deg) - ambient[la.pos];
}

}  // namespace

GBData buchberger_full(const PolyRing& R, const TwistList& ambient, const std::vector<Vec>& cols,
                       bool track) {
    GBData out;
    out.ambient = ambient;
    std::vector<Vec>& basis = out.basis;
    std::vector<Vec>& reps = out.reps;

    auto insert_elem = [&](Vec v, Vec rep) {
        Scalar lc = v.front().c;
        Scalar ilc = R.field.inv(lc);
        basis.push_back(vec_scale(R, ilc, v));
        if (track) reps.push_back(vec_scale(R, ilc, rep));
    };

    for (size_t j = 0; j < cols.size(); ++j) {
        Vec rep = track ? Vec{{static_cast<int>(j), mon_one(R.nvars()), R.field.one()}} : Vec{};
        if (cols[j].empty()) {
            if (track) out.syzygies.push_back(rep);
            continue;
        }
        insert_elem(cols[j], rep);
    }

    // pending pairs keyed by (degree, i, j); processed set for the chain criterion
    std::set<std::tuple<int, int, int>> pending;
    std::set<std::pair<int, int>> done;
    auto add_pairs = [&](int k) {
        for (int i = 0; i < k; ++i)
            if (basis[i].front().pos == basis[k].front().pos)
                pending.insert({spair_degree(basis[i], basis[k], ambient), i, k});
    };
    for (size_t k = 0; k < basis.size(); ++k) add_pairs(static_cast<int>(k));

    const bool rank1 = ambient.size() == 1;
    Reducer red{R, basis, track ? &reps : nullptr};

    while (!pending.empty()) {
        auto [deg, i, j] = *pending.begin();
        pending.erase(pending.begin());
        const MTerm &li = basis[i].front(), &lj = basis[j].front();
        Monomial lam = mon_lcm(li.m, lj.m);

        if (!track) {
            // product criterion (ideals only)
            if (rank1 && lam.deg == li.m.deg + lj.m.deg) {
                done.insert({i, j});
                continue;
            }
            // conservative chain criterion
            bool skip = false;
            for (size_t k = 0; k < basis.size() && !skip; ++k) {
                int kk = static_cast<int>(k);
                if (kk == i || kk == j) continue;
                const MTerm& lk = basis[k].front();
                if (lk.pos != li.pos || !mon_divides(lk.m, lam)) continue;
                std::pair<int, int> p1{std::min(i, kk), std::max(i, kk)};
                std::pair<int, int> p2{std::min(j, kk), std::max(j, kk)};
                if (done.count(p1) && done.count(p2)) skip = true;
            }
            if (skip) {
                done.insert({i, j});
                continue;
            }
        }

        Vec h = vec_sub(R, vec_mono_mul(R, R.field.one(), mon_div(lam, li.m), basis[i]),
                        vec_mono_mul(R, R.field.one(), mon_div(lam, lj.m), basis[j]));
        Vec hrep;
        if (track)
            hrep = vec_sub(R, vec_mono_mul(R, R.field.one(), mon_div(lam, li.m), reps[i]),
                           vec_mono_mul(R, R.field.one(), mon_div(lam, lj.m), reps[j]));
        h = red.run(std::move(h), track ? &hrep : nullptr, nullptr);
        done.insert({i, j});
        if (h.empty()) {
            if (track && !hrep.empty()) out.syzygies.push_back(hrep);
            continue;
        }
        insert_elem(std::move(h), std::move(hrep));
        add_pairs(static_cast<int>(basis.size()) - 1);
    }
    return out;
}

GroebnerBasis reduce_basis(const PolyRing& R, const TwistList& ambient, const std::vector<Vec>& basis) {
    // minimal: drop elements whose lead term is divisible by another kept lead
    std::vector<Vec> sorted = basis;
    std::sort(sorted.begin(), sorted.end(), [](const Vec& a, const Vec& b) {
        return modterm_cmp(a.front().m, a.front().pos, b.front().m, b.front().pos) == Cmp::Less;
    });
    std::vector<Vec> kept;
    for (const auto& g : sorted) {
        bool redundant = false;
        for (const auto& k : kept)
            if (k.front().pos == g.front().pos && mon_divides(k.front().m, g.front().m)) {
                redundant = true;
                break;
            }
        if (!redundant) kept.push_back(g);
    }
    // tail-reduce each against the others
    std::vector<Vec> reduced(kept.size());
    for (size_t k = 0; k < kept.size(); ++k) {
        std::vector<Vec> others;
        for (size_t l = 0; l < kept.size(); ++l)
            if (l != k) others.push_back(kept[l]);
        Reducer red{R, others, nullptr};
        reduced[k] = red.run(kept[k], nullptr, nullptr);
    }
    std::sort(reduced.begin(), reduced.end(), [](const Vec& a, const Vec& b) {
        return modterm_cmp(a.front().m, a.front().pos, b.front().m, b.front().pos) == Cmp::Less;
    });
    GroebnerBasis G;
    G.ambient = ambient;
    G.elems = std::move(reduced);
    return G;
}

GroebnerBasis buchberger(const PolyRing& R, const Submodule& g) {
    return buchberger_matrix(R, g.gens);
}

GroebnerBasis buchberger_matrix(const PolyRing& R, const GradedMatrix& gens) {
    std::vector<Vec> cols;
    for (int j = 0; j < gens.cols(); ++j) cols.push_back(gm_col(gens, j));
    GBData gb = buchberger_full(R, gens.target, cols, false);
    return reduce_basis(R, gens.target, gb.basis);
}

Vec gb_reduce(const PolyRing& R, const std::vector<Vec>& basis, Vec v, std::vector<Polynomial>* quotients) {
    if (quotients) quotients->assign(basis.size(), Polynomial());
    Reducer red{R, basis, nullptr};
    return red.run(std::move(v), nullptr, quotients);
}

Vec normal_form(const PolyRing& R, const GroebnerBasis& G, const Vec& v) {
    return gb_reduce(R, G.elems, v);
}

bool in_span(const PolyRing& R, const GroebnerBasis& G, const Vec& v) {
    return normal_form(R, G, v).empty();
}

bool same_span(const PolyRing& R, const GradedMatrix& A, const GradedMatrix& B) {
    if (A.target != B.target) return false;
    GroebnerBasis GA = buchberger_matrix(R, A);
    for (int j = 0; j < B.cols(); ++j)
        if (!in_span(R, GA, gm_col(B, j))) return false;
    GroebnerBasis GB = buchberger_matrix(R, B);
    for (int j = 0; j < A.cols(); ++j)
        if (!in_span(R, GB, gm_col(A, j))) return false;
    return true;
}

GradedMatrix syzygy(const PolyRing& R, const GradedMatrix& A) {
    std::vector<Vec> cols;
    for (int j = 0; j < A.cols(); ++j) cols.push_back(gm_col(A, j));
    GBData gb = buchberger_full(R, A.target, cols, true);

    std::vector<Vec> syz = gb.syzygies;
    // columns of I - U*V, where V divides each input column by the basis
    for (size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].empty()) continue;  // already collected as a unit syzygy
        std::vector<Polynomial> q;
        Vec r = gb_reduce(R, gb.basis, cols[j], &q);
        if (!r.empty()) throw std::logic_error("input column does not reduce to zero against its own basis");
        Vec w = unit_vec(R, static_cast<int>(j));
        for (size_t k = 0; k < gb.basis.size(); ++k)
            if (!q[k].is_zero()) w = vec_sub(R, w, vec_poly_mul(R, q[k], gb.reps[k]));
        if (!w.empty()) syz.push_back(w);
    }
    std::vector<Vec> keep;
    for (auto& s : syz)
        if (!s.empty()) keep.push_back(std::move(s));
    return cols_to_matrix(R, A.source, keep);
}

GradedMatrix kernel_into_cokernel(const PolyRing& R, const GradedMatrix& V, const Presentation& P) {
    if (V.target != P.target) throw std::invalid_argument("kernel_into_cokernel twist mismatch");
    GradedMatrix combined = gm_hcat(V, P.relations);
    GradedMatrix Z = syzygy(R, combined);
    int r = V.cols();
    std::vector<Vec> projected;
    for (int j = 0; j < Z.cols(); ++j) {
        Vec col = gm_col(Z, j);
        Vec head;
        for (const auto& t : col)
            if (t.pos < r) head.push_back(t);
        if (!head.empty()) projected.push_back(head);
    }
    return cols_to_matrix(R, V.source, projected);
}

namespace {

int64_t count_monomials(int nvars, int deg) {
    if (deg < 0) return 0;
    // C(deg + nvars - 1, nvars - 1)
    int64_t num = 1;
    for (int i = 1; i <= nvars - 1; ++i) num = num * (deg + i) / i;
    return num;
}

// Number of degree-d monomials divisible by at least one generator, by
// inclusion-exclusion via the standard recursion on minimal generators.
int64_t count_in_ideal(const PolyRing& R, std::vector<Monomial> gens, int d);

int64_t count_not_in_ideal(const PolyRing& R, const std::vector<Monomial>& gens, int d) {
    return count_monomials(R.nvars(), d) - count_in_ideal(R, gens, d);
}

int64_t count_in_ideal(const PolyRing& R, std::vector<Monomial> gens, int d) {
    if (d < 0) return 0;
    // minimalize
    std::vector<Monomial> min;
    std::sort(gens.begin(), gens.end(),
              [](const Monomial& a, const Monomial& b) { return a.deg < b.deg; });
    for (const auto& g : gens) {
        bool dom = false;
        for (const auto& m : min)
            if (mon_divides(m, g)) {
                dom = true;
                break;
            }
        if (!dom) min.push_back(g);
    }
    if (min.empty()) return 0;
    if (min.size() == 1) return count_monomials(R.nvars(), d - static_cast<int>(min[0].deg));
    Monomial g = min.back();
    min.pop_back();
    // |rest ∪ (g)| = |rest| + |(g)| - |(rest : g) shifted by g|
    std::vector<Monomial> colon;
    for (const auto& m : min) colon.push_back(mon_div(mon_lcm(m, g), g));
    int64_t a = count_in_ideal(R, min, d);
    int64_t b = count_monomials(R.nvars(), d - static_cast<int>(g.deg));
    int64_t c = count_in_ideal(R, colon, d - static_cast<int>(g.deg));
    return a + b - c;
}

}  // namespace

int64_t graded_piece_dim(const PolyRing& R, const GroebnerBasis& G, int d) {
    int64_t total = 0;
    for (size_t pos = 0; pos < G.ambient.size(); ++pos) {
        std::vector<Monomial> lts;
        for (const auto& g : G.elems)
            if (g.front().pos == static_cast<int>(pos)) lts.push_back(g.front().m);
        int mdeg = d + G.ambient[pos];
        total += count_in_ideal(R, lts, mdeg);
    }
    return total;
}

}  // namespace kumar
