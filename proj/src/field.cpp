#include "kumar/field.hpp"

#include <numeric>
#include <stdexcept>

namespace kumar {

bool is_prime(int64_t n) {
    if (n < 2) return false;
    for (int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

PrimeField::PrimeField(int64_t p) : p_(p) {
    if (p != 0 && !is_prime(p)) throw std::invalid_argument("field characteristic must be 0 or prime");
    if (p < 0 || p > 46337) {
        if (p != 0) throw std::invalid_argument("prime too large (need p^2 < 2^31)");
    }
}

namespace {

int64_t checked_mul(int64_t a, int64_t b) {
    __int128 r = static_cast<__int128>(a) * b;
    if (r > INT64_MAX || r < INT64_MIN) throw std::overflow_error("rational coefficient overflow");
    return static_cast<int64_t>(r);
}

int64_t checked_add(int64_t a, int64_t b) {
    __int128 r = static_cast<__int128>(a) + b;
    if (r > INT64_MAX || r < INT64_MIN) throw std::overflow_error("rational coefficient overflow");
    return static_cast<int64_t>(r);
}

Scalar reduce_fraction(int64_t n, int64_t d) {
    if (d == 0) throw std::domain_error("zero denominator");
    if (n == 0) return {0, 1};
    if (d < 0) { n = -n; d = -d; }
    int64_t g = std::gcd(n < 0 ? -n : n, d);
    return {n / g, d / g};
}

}  // namespace

Scalar PrimeField::from_int(int64_t n) const {
    if (p_ == 0) return {n, 1};
    int64_t r = n % p_;
    if (r < 0) r += p_;
    return {r, 1};
}

Scalar PrimeField::from_fraction(int64_t n, int64_t d) const {
    if (p_ == 0) return reduce_fraction(n, d);
    return mul(from_int(n), inv(from_int(d)));
}

Scalar PrimeField::add(const Scalar& a, const Scalar& b) const {
    if (p_ == 0)
        return reduce_fraction(checked_add(checked_mul(a.num, b.den), checked_mul(b.num, a.den)),
                               checked_mul(a.den, b.den));
    int64_t r = a.num + b.num;
    if (r >= p_) r -= p_;
    return {r, 1};
}

Scalar PrimeField::sub(const Scalar& a, const Scalar& b) const { return add(a, neg(b)); }

Scalar PrimeField::mul(const Scalar& a, const Scalar& b) const {
    if (p_ == 0) return reduce_fraction(checked_mul(a.num, b.num), checked_mul(a.den, b.den));
    return {(a.num * b.num) % p_, 1};
}

Scalar PrimeField::neg(const Scalar& a) const {
    if (p_ == 0) return {-a.num, a.den};
    return {a.num == 0 ? 0 : p_ - a.num, 1};
}

Scalar PrimeField::inv(const Scalar& a) const {
    if (a.num == 0) throw std::domain_error("inverse of zero");
    if (p_ == 0) return reduce_fraction(a.den, a.num);
    // extended Euclid on (a.num, p)
    int64_t t = 0, newt = 1, r = p_, newr = a.num;
    while (newr != 0) {
        int64_t q = r / newr;
        int64_t tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (t < 0) t += p_;
    return {t, 1};
}

std::string PrimeField::to_string(const Scalar& a) const {
    if (p_ == 0) {
        if (a.den == 1) return std::to_string(a.num);
        return std::to_string(a.num) + "/" + std::to_string(a.den);
    }
    if (a.num > p_ / 2) return std::to_string(a.num - p_);
    return std::to_string(a.num);
}

}  // namespace kumar
