#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kumar/polynomial.hpp"

namespace kumar {

/// Twists d_j of a free module ⊕_j S(d_j); generator j sits in degree -d_j.
using TwistList = std::vector<int>;

/// Homogeneous matrix between twisted free modules. Entry (i,j) is zero or
/// homogeneous of degree target[i] - source[j].
struct GradedMatrix {
    TwistList target;  // row twists
    TwistList source;  // column twists
    std::vector<std::vector<Polynomial>> a;  // rows x cols

    int rows() const { return static_cast<int>(target.size()); }
    int cols() const { return static_cast<int>(source.size()); }
    const Polynomial& at(int i, int j) const { return a[i][j]; }
    Polynomial& at(int i, int j) { return a[i][j]; }

    static GradedMatrix zero(TwistList tgt, TwistList src);
    static GradedMatrix identity(const PolyRing& R, TwistList twists);
};

struct HomogeneityViolation {
    int row, col;
    int expected_degree;
    int actual_degree;  // -2 when non-homogeneous
    std::string describe() const;
};

std::optional<HomogeneityViolation> validate_homogeneous(const PolyRing& R, const GradedMatrix& M);

GradedMatrix gm_mul(const PolyRing& R, const GradedMatrix& A, const GradedMatrix& B);
GradedMatrix gm_transpose(const GradedMatrix& A);
GradedMatrix gm_twist(const GradedMatrix& A, int t);  // all twists shifted by t
GradedMatrix gm_hcat(const GradedMatrix& A, const GradedMatrix& B);  // same target
bool gm_is_zero(const GradedMatrix& A);
bool gm_eq(const GradedMatrix& A, const GradedMatrix& B);
/// Scales all twists: source' = source + t is wrong for maps M0 -> M0(1);
/// this shifts source twists only (the matrix of phi viewed as phi(-1)).
GradedMatrix gm_shift_source(const GradedMatrix& A, int t);

/// Determinant of the square submatrix on the given rows/columns.
Polynomial gm_minor(const PolyRing& R, const GradedMatrix& A, const std::vector<int>& rows,
                    const std::vector<int>& cols);

/// k-th Koszul differential Λ^k W ⊗ S(-k) -> Λ^{k-1} W ⊗ S(-k+1) on the
/// ring's variables, bases ordered lexicographically by index set, signs
/// (-1)^position. Optional twist added to all source/target twists.
GradedMatrix koszul_differential(const PolyRing& R, int k, int twist = 0);

/// Index sets of size k from {0..n-1} in lexicographic order.
std::vector<std::vector<int>> subsets_lex(int n, int k);
/// Same subsets in colex order (used to align with the paper's Ex. 3.6 bases).
std::vector<std::vector<int>> subsets_colex(int n, int k);

/// A graded module given as the cokernel of a homogeneous matrix.
struct Presentation {
    TwistList target;
    GradedMatrix relations;  // relations.target == target

    static Presentation make(TwistList tgt, GradedMatrix rel);
};

}  // namespace kumar
