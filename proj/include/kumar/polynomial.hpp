#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kumar/ring.hpp"

namespace kumar {

struct Term {
    Monomial m;
    Scalar c;
};

/// Multivariate polynomial: terms strictly descending in grevlex, no zero
/// coefficients, no duplicate monomials.
class Polynomial {
  public:
    Polynomial() = default;

    const std::vector<Term>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    const Term& lead() const { return t_.front(); }
    int degree() const { return t_.empty() ? -1 : static_cast<int>(t_.front().m.deg); }
    size_t size() const { return t_.size(); }

    /// Builds from an arbitrary term list (sorts, combines, drops zeros).
    static Polynomial make(const PolyRing& R, std::vector<Term> raw);
    /// Trusted constructor: terms already canonical.
    static Polynomial from_sorted(std::vector<Term> canonical);

  private:
    std::vector<Term> t_;
};

Polynomial poly_zero();
Polynomial poly_const(const PolyRing& R, const Scalar& c);
Polynomial poly_int(const PolyRing& R, int64_t n);
Polynomial poly_var(const PolyRing& R, int i, int power = 1);
Polynomial poly_mono(const PolyRing& R, const Monomial& m, const Scalar& c);

Polynomial poly_add(const PolyRing& R, const Polynomial& f, const Polynomial& g);
Polynomial poly_sub(const PolyRing& R, const Polynomial& f, const Polynomial& g);
Polynomial poly_neg(const PolyRing& R, const Polynomial& f);
Polynomial poly_mul(const PolyRing& R, const Polynomial& f, const Polynomial& g);
Polynomial poly_scale(const PolyRing& R, const Scalar& c, const Polynomial& f);
/// c * m * f
Polynomial poly_mono_mul(const PolyRing& R, const Scalar& c, const Monomial& m, const Polynomial& f);
bool poly_eq(const Polynomial& f, const Polynomial& g);

bool is_homogeneous(const Polynomial& f);
/// Degree if homogeneous (including the zero polynomial), else nullopt.
std::optional<int> homogeneous_degree(const Polynomial& f);

/// Splits f as sum_t coeff_t(f) * x_v^t; returns coefficients indexed by t,
/// each free of x_v.
std::vector<Polynomial> split_by_variable(const PolyRing& R, const Polynomial& f, int v);

/// Maps a polynomial through a variable renaming: image_var[i] gives the
/// index in the target ring of source variable i, or -1 if the variable must
/// not occur.
Polynomial map_ring(const PolyRing& src, const PolyRing& dst, const std::vector<int>& image_var,
                    const Polynomial& f);

std::string poly_to_string(const PolyRing& R, const Polynomial& f);
Polynomial parse_poly(const PolyRing& R, const std::string& text);

}  // namespace kumar
