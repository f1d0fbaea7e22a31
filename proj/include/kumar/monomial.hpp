#pragma once

#include <array>
#include <cstdint>

namespace kumar {

inline constexpr int kMaxVars = 8;

/// Dense exponent vector with cached total degree.
struct Monomial {
    std::array<uint16_t, kMaxVars> e{};
    uint8_t nv = 0;
    uint32_t deg = 0;
};

enum class Cmp { Less, Equal, Greater };

Monomial mon_one(int nvars);
Monomial mon_var(int nvars, int i, int power = 1);
Monomial mon_mul(const Monomial& a, const Monomial& b);
bool mon_divides(const Monomial& a, const Monomial& b);  // a | b
Monomial mon_div(const Monomial& b, const Monomial& a);  // b / a, exact
Monomial mon_lcm(const Monomial& a, const Monomial& b);
bool mon_eq(const Monomial& a, const Monomial& b);

/// Graded reverse lexicographic order. Higher total degree wins; at equal
/// degree the monomial whose last nonzero entry of a-b is negative is larger.
Cmp grevlex_cmp(const Monomial& a, const Monomial& b);

/// Module term order: term-over-position over grevlex, position ties broken
/// by lower index (lower position is the larger term).
Cmp modterm_cmp(const Monomial& ma, int pa, const Monomial& mb, int pb);

}  // namespace kumar
