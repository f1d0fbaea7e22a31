#pragma once

#include <optional>

#include "kumar/graded.hpp"

namespace kumar {

/// One term of a vector in a free module: c * m * e_pos.
struct MTerm {
    int pos;
    Monomial m;
    Scalar c;
};

/// Sparse module vector, terms strictly descending in the module term order.
using Vec = std::vector<MTerm>;

bool vec_is_zero(const Vec& v);
const MTerm& vec_lead(const Vec& v);
Vec vec_make(const PolyRing& R, std::vector<MTerm> raw);
Vec vec_add(const PolyRing& R, const Vec& a, const Vec& b);
Vec vec_sub(const PolyRing& R, const Vec& a, const Vec& b);
Vec vec_scale(const PolyRing& R, const Scalar& c, const Vec& a);
/// c * m * v
Vec vec_mono_mul(const PolyRing& R, const Scalar& c, const Monomial& m, const Vec& v);
Vec vec_poly_mul(const PolyRing& R, const Polynomial& f, const Vec& v);
bool vec_eq(const Vec& a, const Vec& b);

/// Element degree of a homogeneous vector in a module with the given twists
/// (degree of c*m*e_i is deg m - twists[i]); nullopt if non-homogeneous.
std::optional<int> vec_degree(const Vec& v, const TwistList& twists);

Vec gm_col(const GradedMatrix& A, int j);
Vec unit_vec(const PolyRing& R, int pos);
/// Assembles columns into a matrix; source twists derived from column degrees.
GradedMatrix cols_to_matrix(const PolyRing& R, const TwistList& target, const std::vector<Vec>& cols);
/// v as a column polynomial vector of length rank.
std::vector<Polynomial> vec_to_dense(const PolyRing& R, const Vec& v, int rank);
Vec dense_to_vec(const PolyRing& R, const std::vector<Polynomial>& col);

}  // namespace kumar
