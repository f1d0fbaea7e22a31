#include "kumar/monomial.hpp"

#include <stdexcept>

namespace kumar {

Monomial mon_one(int nvars) {
    Monomial m;
    m.nv = static_cast<uint8_t>(nvars);
    return m;
}

Monomial mon_var(int nvars, int i, int power) {
    Monomial m = mon_one(nvars);
    m.e[i] = static_cast<uint16_t>(power);
    m.deg = power;
    return m;
}

Monomial mon_mul(const Monomial& a, const Monomial& b) {
    Monomial m = a;
    for (int i = 0; i < a.nv; ++i) m.e[i] = static_cast<uint16_t>(a.e[i] + b.e[i]);
    m.deg = a.deg + b.deg;
    return m;
}

bool mon_divides(const Monomial& a, const Monomial& b) {
    if (a.deg > b.deg) return false;
    for (int i = 0; i < a.nv; ++i)
        if (a.e[i] > b.e[i]) return false;
    return true;
}

Monomial mon_div(const Monomial& b, const Monomial& a) {
    Monomial m = b;
    for (int i = 0; i < b.nv; ++i) {
        if (a.e[i] > b.e[i]) throw std::domain_error("non-exact monomial division");
        m.e[i] = static_cast<uint16_t>(b.e[i] - a.e[i]);
    }
    m.deg = b.deg - a.deg;
    return m;
}

Monomial mon_lcm(const Monomial& a, const Monomial& b) {
    Monomial m = a;
    uint32_t d = 0;
    for (int i = 0; i < a.nv; ++i) {
        m.e[i] = a.e[i] > b.e[i] ? a.e[i] : b.e[i];
        d += m.e[i];
    }
    m.deg = d;
    return m;
}

bool mon_eq(const Monomial& a, const Monomial& b) {
    if (a.deg != b.deg || a.nv != b.nv) return false;
    for (int i = 0; i < a.nv; ++i)
        if (a.e[i] != b.e[i]) return false;
    return true;
}

Cmp grevlex_cmp(const Monomial& a, const Monomial& b) {
    if (a.nv != b.nv) throw std::invalid_argument("monomial length mismatch");
    if (a.deg != b.deg) return a.deg > b.deg ? Cmp::Greater : Cmp::Less;
    for (int i = a.nv - 1; i >= 0; --i) {
        int d = static_cast<int>(a.e[i]) - static_cast<int>(b.e[i]);
        if (d != 0) return d < 0 ? Cmp::Greater : Cmp::Less;
    }
    return Cmp::Equal;
}

Cmp modterm_cmp(const Monomial& ma, int pa, const Monomial& mb, int pb) {
    Cmp c = grevlex_cmp(ma, mb);
    if (c != Cmp::Equal) return c;
    if (pa != pb) return pa < pb ? Cmp::Greater : Cmp::Less;
    return Cmp::Equal;
}

}  // namespace kumar
