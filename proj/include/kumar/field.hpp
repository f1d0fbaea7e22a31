#pragma once

#include <cstdint>
#include <string>

namespace kumar {

/// A scalar is a canonical residue (den == 1) over GF(p), or a reduced
/// fraction with positive denominator when the field is the rationals.
struct Scalar {
    int64_t num = 0;
    int64_t den = 1;
};

/// Prime field GF(p), with p == 0 meaning exact rationals.
class PrimeField {
  public:
    PrimeField() = default;
    explicit PrimeField(int64_t p);

    int64_t characteristic() const { return p_; }
    bool is_rationals() const { return p_ == 0; }
    bool operator==(const PrimeField& o) const { return p_ == o.p_; }

    Scalar zero() const { return {0, 1}; }
    Scalar one() const { return {1, 1}; }
    Scalar from_int(int64_t n) const;
    Scalar from_fraction(int64_t n, int64_t d) const;

    bool is_zero(const Scalar& a) const { return a.num == 0; }
    bool eq(const Scalar& a, const Scalar& b) const { return a.num == b.num && a.den == b.den; }

    Scalar add(const Scalar& a, const Scalar& b) const;
    Scalar sub(const Scalar& a, const Scalar& b) const;
    Scalar mul(const Scalar& a, const Scalar& b) const;
    Scalar neg(const Scalar& a) const;
    Scalar inv(const Scalar& a) const;
    Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

    /// Symmetric lift for GF(p): residues above p/2 print negated.
    std::string to_string(const Scalar& a) const;

  private:
    int64_t p_ = 32003;
};

bool is_prime(int64_t n);

}  // namespace kumar
