#include "kumar/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace kumar {

PolyRing standard_ring(int nvars, const PrimeField& f) {
    std::vector<std::string> v;
    for (int i = 0; i < nvars; ++i) v.push_back("x" + std::to_string(i));
    return PolyRing(std::move(v), f);
}

PolyRing subring_without(const PolyRing& S, int var) {
    std::vector<std::string> v;
    for (int i = 0; i < S.nvars(); ++i)
        if (i != var) v.push_back(S.vars[i]);
    return PolyRing(std::move(v), S.field);
}

Polynomial Polynomial::make(const PolyRing& R, std::vector<Term> raw) {
    std::sort(raw.begin(), raw.end(),
              [](const Term& a, const Term& b) { return grevlex_cmp(a.m, b.m) == Cmp::Greater; });
    std::vector<Term> out;
    out.reserve(raw.size());
    for (auto& t : raw) {
        if (!out.empty() && mon_eq(out.back().m, t.m)) {
            out.back().c = R.field.add(out.back().c, t.c);
            if (R.field.is_zero(out.back().c)) out.pop_back();
        } else if (!R.field.is_zero(t.c)) {
            out.push_back(t);
        }
    }
    Polynomial p;
    p.t_ = std::move(out);
    return p;
}

Polynomial Polynomial::from_sorted(std::vector<Term> canonical) {
    Polynomial p;
    p.t_ = std::move(canonical);
    return p;
}

Polynomial poly_zero() { return Polynomial(); }

Polynomial poly_const(const PolyRing& R, const Scalar& c) {
    if (R.field.is_zero(c)) return poly_zero();
    return Polynomial::from_sorted({{mon_one(R.nvars()), c}});
}

Polynomial poly_int(const PolyRing& R, int64_t n) { return poly_const(R, R.field.from_int(n)); }

Polynomial poly_var(const PolyRing& R, int i, int power) {
    return Polynomial::from_sorted({{mon_var(R.nvars(), i, power), R.field.one()}});
}

Polynomial poly_mono(const PolyRing& R, const Monomial& m, const Scalar& c) {
    if (R.field.is_zero(c)) return poly_zero();
    return Polynomial::from_sorted({{m, c}});
}

Polynomial poly_add(const PolyRing& R, const Polynomial& f, const Polynomial& g) {
    std::vector<Term> out;
    out.reserve(f.size() + g.size());
    auto a = f.terms().begin(), ae = f.terms().end();
    auto b = g.terms().begin(), be = g.terms().end();
    while (a != ae && b != be) {
        Cmp c = grevlex_cmp(a->m, b->m);
        if (c == Cmp::Greater) {
            out.push_back(*a++);
        } else if (c == Cmp::Less) {
            out.push_back(*b++);
        } else {
            Scalar s = R.field.add(a->c, b->c);
            if (!R.field.is_zero(s)) out.push_back({a->m, s});
            ++a;
            ++b;
        }
    }
    out.insert(out.end(), a, ae);
    out.insert(out.end(), b, be);
    return Polynomial::from_sorted(std::move(out));
}

Polynomial poly_neg(const PolyRing& R, const Polynomial& f) {
    std::vector<Term> out = f.terms();
    for (auto& t : out) t.c = R.field.neg(t.c);
    return Polynomial::from_sorted(std::move(out));
}

Polynomial poly_sub(const PolyRing& R, const Polynomial& f, const Polynomial& g) {
    return poly_add(R, f, poly_neg(R, g));
}

Polynomial poly_scale(const PolyRing& R, const Scalar& c, const Polynomial& f) {
    if (R.field.is_zero(c)) return poly_zero();
    std::vector<Term> out = f.terms();
    for (auto& t : out) t.c = R.field.mul(t.c, c);
    return Polynomial::from_sorted(std::move(out));
}

Polynomial poly_mono_mul(const PolyRing& R, const Scalar& c, const Monomial& m, const Polynomial& f) {
    if (R.field.is_zero(c)) return poly_zero();
    std::vector<Term> out;
    out.reserve(f.size());
    for (const auto& t : f.terms()) out.push_back({mon_mul(m, t.m), R.field.mul(c, t.c)});
    return Polynomial::from_sorted(std::move(out));
}

Polynomial poly_mul(const PolyRing& R, const Polynomial& f, const Polynomial& g) {
    Polynomial acc;
    for (const auto& t : f.terms()) acc = poly_add(R, acc, poly_mono_mul(R, t.c, t.m, g));
    return acc;
}

bool poly_eq(const Polynomial& f, const Polynomial& g) {
    if (f.size() != g.size()) return false;
    for (size_t i = 0; i < f.size(); ++i) {
        const Term &a = f.terms()[i], &b = g.terms()[i];
        if (!mon_eq(a.m, b.m) || a.c.num != b.c.num || a.c.den != b.c.den) return false;
    }
    return true;
}

bool is_homogeneous(const Polynomial& f) { return homogeneous_degree(f).has_value(); }

std::optional<int> homogeneous_degree(const Polynomial& f) {
    if (f.is_zero()) return -1;
    uint32_t d = f.terms().front().m.deg;
    for (const auto& t : f.terms())
        if (t.m.deg != d) return std::nullopt;
    return static_cast<int>(d);
}

std::vector<Polynomial> split_by_variable(const PolyRing& R, const Polynomial& f, int v) {
    int maxp = 0;
    for (const auto& t : f.terms()) maxp = std::max(maxp, static_cast<int>(t.m.e[v]));
    std::vector<std::vector<Term>> buckets(maxp + 1);
    for (const auto& t : f.terms()) {
        Term u = t;
        int p = u.m.e[v];
        u.m.deg -= u.m.e[v];
        u.m.e[v] = 0;
        buckets[p].push_back(u);
    }
    std::vector<Polynomial> out;
    out.reserve(buckets.size());
    for (auto& b : buckets) out.push_back(Polynomial::make(R, std::move(b)));
    return out;
}

Polynomial map_ring(const PolyRing& src, const PolyRing& dst, const std::vector<int>& image_var,
                    const Polynomial& f) {
    std::vector<Term> out;
    out.reserve(f.size());
    for (const auto& t : f.terms()) {
        Monomial m = mon_one(dst.nvars());
        uint32_t deg = 0;
        for (int i = 0; i < src.nvars(); ++i) {
            if (t.m.e[i] == 0) continue;
            if (image_var[i] < 0) throw std::domain_error("polynomial uses a forbidden variable");
            m.e[image_var[i]] = static_cast<uint16_t>(m.e[image_var[i]] + t.m.e[i]);
            deg += t.m.e[i];
        }
        m.deg = deg;
        out.push_back({m, t.c});
    }
    return Polynomial::make(dst, std::move(out));
}

std::string poly_to_string(const PolyRing& R, const Polynomial& f) {
    if (f.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& t : f.terms()) {
        std::string c = R.field.to_string(t.c);
        bool neg = !c.empty() && c[0] == '-';
        if (neg) c = c.substr(1);
        if (first) {
            if (neg) s += "-";
            first = false;
        } else {
            s += neg ? "-" : "+";
        }
        std::string mon;
        for (int i = 0; i < R.nvars(); ++i) {
            if (t.m.e[i] == 0) continue;
            if (!mon.empty()) mon += "*";
            mon += R.vars[i];
            if (t.m.e[i] > 1) mon += "^" + std::to_string(t.m.e[i]);
        }
        if (mon.empty()) {
            s += c;
        } else if (c == "1") {
            s += mon;
        } else {
            s += c + "*" + mon;
        }
    }
    return s;
}

namespace {

struct PolyLexer {
    const std::string& s;
    size_t i = 0;
    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eof() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
};

int64_t parse_int(PolyLexer& lx) {
    lx.skip_ws();
    size_t start = lx.i;
    while (lx.i < lx.s.size() && std::isdigit(static_cast<unsigned char>(lx.s[lx.i]))) ++lx.i;
    if (lx.i == start) throw std::invalid_argument("expected integer in polynomial");
    return std::stoll(lx.s.substr(start, lx.i - start));
}

int parse_var(const PolyRing& R, PolyLexer& lx) {
    lx.skip_ws();
    // longest match against declared names
    int best = -1;
    size_t best_len = 0;
    for (int v = 0; v < R.nvars(); ++v) {
        const std::string& name = R.vars[v];
        if (lx.s.compare(lx.i, name.size(), name) == 0 && name.size() > best_len) {
            best = v;
            best_len = name.size();
        }
    }
    if (best < 0) throw std::invalid_argument("unknown variable in polynomial at '" + lx.s.substr(lx.i, 8) + "'");
    lx.i += best_len;
    return best;
}

}  // namespace

Polynomial parse_poly(const PolyRing& R, const std::string& text) {
    PolyLexer lx{text};
    std::vector<Term> terms;
    bool neg = false;
    if (lx.peek() == '-') {
        neg = true;
        ++lx.i;
    } else if (lx.peek() == '+') {
        ++lx.i;
    }
    while (!lx.eof()) {
        Scalar coef = R.field.one();
        Monomial m = mon_one(R.nvars());
        bool any = false;
        bool expect_factor = true;
        while (expect_factor) {
            char c = lx.peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                int64_t n = parse_int(lx);
                if (lx.peek() == '/') {
                    ++lx.i;
                    int64_t d = parse_int(lx);
                    coef = R.field.mul(coef, R.field.from_fraction(n, d));
                } else {
                    coef = R.field.mul(coef, R.field.from_int(n));
                }
                any = true;
            } else {
                int v = parse_var(R, lx);
                int p = 1;
                if (lx.peek() == '^') {
                    ++lx.i;
                    p = static_cast<int>(parse_int(lx));
                }
                m = mon_mul(m, mon_var(R.nvars(), v, p));
                any = true;
            }
            if (lx.peek() == '*') {
                ++lx.i;
            } else {
                expect_factor = false;
            }
        }
        if (!any) throw std::invalid_argument("empty term in polynomial");
        if (neg) coef = R.field.neg(coef);
        terms.push_back({m, coef});
        if (lx.eof()) break;
        char c = lx.peek();
        if (c == '+') {
            neg = false;
            ++lx.i;
        } else if (c == '-') {
            neg = true;
            ++lx.i;
        } else {
            throw std::invalid_argument(std::string("unexpected character '") + c + "' in polynomial");
        }
        if (lx.eof()) throw std::invalid_argument("dangling sign in polynomial");
    }
    return Polynomial::make(R, std::move(terms));
}

}  // namespace kumar
