#include "kumar/modvec.hpp"

#include <algorithm>
#include <stdexcept>

namespace kumar {

bool vec_is_zero(const Vec& v) { return v.empty(); }

const MTerm& vec_lead(const Vec& v) {
    if (v.empty()) throw std::domain_error("lead term of zero vector");
    return v.front();
}

Vec vec_make(const PolyRing& R, std::vector<MTerm> raw) {
    std::sort(raw.begin(), raw.end(), [](const MTerm& a, const MTerm& b) {
        return modterm_cmp(a.m, a.pos, b.m, b.pos) == Cmp::Greater;
    });
    Vec out;
    out.reserve(raw.size());
    for (auto& t : raw) {
        if (!out.empty() && out.back().pos == t.pos && mon_eq(out.back().m, t.m)) {
            out.back().c = R.field.add(out.back().c, t.c);
            if (R.field.is_zero(out.back().c)) out.pop_back();
        } else if (!R.field.is_zero(t.c)) {
            out.push_back(t);
        }
    }
    return out;
}

Vec vec_add(const PolyRing& R, const Vec& a, const Vec& b) {
    Vec out;
    out.reserve(a.size() + b.size());
    auto i = a.begin(), ie = a.end();
    auto j = b.begin(), je = b.end();
    while (i != ie && j != je) {
        Cmp c = modterm_cmp(i->m, i->pos, j->m, j->pos);
        if (c == Cmp::Greater) {
            out.push_back(*i++);
        } else if (c == Cmp::Less) {
            out.push_back(*j++);
        } else {
            Scalar s = R.field.add(i->c, j->c);
            if (!R.field.is_zero(s)) out.push_back({i->pos, i->m, s});
            ++i;
            ++j;
        }
    }
    out.insert(out.end(), i, ie);
    out.insert(out.end(), j, je);
    return out;
}

Vec vec_scale(const PolyRing& R, const Scalar& c, const Vec& a) {
    if (R.field.is_zero(c)) return {};
    Vec out = a;
    for (auto& t : out) t.c = R.field.mul(t.c, c);
    return out;
}

Vec vec_sub(const PolyRing& R, const Vec& a, const Vec& b) {
    return vec_add(R, a, vec_scale(R, R.field.from_int(-1), b));
}

Vec vec_mono_mul(const PolyRing& R, const Scalar& c, const Monomial& m, const Vec& v) {
    if (R.field.is_zero(c)) return {};
    Vec out;
    out.reserve(v.size());
    for (const auto& t : v) out.push_back({t.pos, mon_mul(m, t.m), R.field.mul(c, t.c)});
    return out;  // multiplying by a monomial preserves the term order
}

Vec vec_poly_mul(const PolyRing& R, const Polynomial& f, const Vec& v) {
    Vec acc;
    for (const auto& t : f.terms()) acc = vec_add(R, acc, vec_mono_mul(R, t.c, t.m, v));
    return acc;
}

bool vec_eq(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i].pos != b[i].pos || !mon_eq(a[i].m, b[i].m) || a[i].c.num != b[i].c.num ||
            a[i].c.den != b[i].c.den)
            return false;
    return true;
}

std::optional<int> vec_degree(const Vec& v, const TwistList& twists) {
    if (v.empty()) return -1;
    int d = static_cast<int>(v.front().m.deg) - twists[v.front().pos];
    for (const auto& t : v)
        if (static_cast<int>(t.m.deg) - twists[t.pos] != d) return std::nullopt;
    return d;
}

Vec gm_col(const GradedMatrix& A, int j) {
    std::vector<MTerm> raw;
    for (int i = 0; i < A.rows(); ++i)
        for (const auto& t : A.a[i][j].terms()) raw.push_back({i, t.m, t.c});
    std::sort(raw.begin(), raw.end(), [](const MTerm& a, const MTerm& b) {
        return modterm_cmp(a.m, a.pos, b.m, b.pos) == Cmp::Greater;
    });
    return raw;
}

Vec unit_vec(const PolyRing& R, int pos) { return {{pos, mon_one(R.nvars()), R.field.one()}}; }

GradedMatrix cols_to_matrix(const PolyRing& R, const TwistList& target, const std::vector<Vec>& cols) {
    TwistList src;
    src.reserve(cols.size());
    for (const auto& v : cols) {
        auto d = vec_degree(v, target);
        if (!d) throw std::invalid_argument("non-homogeneous column");
        src.push_back(v.empty() ? 0 : -*d);
    }
    GradedMatrix M = GradedMatrix::zero(target, std::move(src));
    for (size_t j = 0; j < cols.size(); ++j) {
        std::vector<std::vector<Term>> rows(target.size());
        for (const auto& t : cols[j]) rows[t.pos].push_back({t.m, t.c});
        for (size_t i = 0; i < rows.size(); ++i) M.a[i][j] = Polynomial::make(R, std::move(rows[i]));
    }
    return M;
}

std::vector<Polynomial> vec_to_dense(const PolyRing& R, const Vec& v, int rank) {
    std::vector<std::vector<Term>> rows(rank);
    for (const auto& t : v) rows[t.pos].push_back({t.m, t.c});
    std::vector<Polynomial> out(rank);
    for (int i = 0; i < rank; ++i) out[i] = Polynomial::make(R, std::move(rows[i]));
    return out;
}

Vec dense_to_vec(const PolyRing& R, const std::vector<Polynomial>& col) {
    std::vector<MTerm> raw;
    for (size_t i = 0; i < col.size(); ++i)
        for (const auto& t : col[i].terms()) raw.push_back({static_cast<int>(i), t.m, t.c});
    return vec_make(R, std::move(raw));
}

}  // namespace kumar
