#pragma once

#include "kumar/modvec.hpp"

namespace kumar {

/// Submodule of a twisted free module, given by generator columns.
struct Submodule {
    TwistList ambient;
    GradedMatrix gens;  // gens.target == ambient
};

/// Reduced Groebner basis: monic elements, pairwise non-redundant lead
/// terms, tails fully reduced, sorted ascending by lead term.
struct GroebnerBasis {
    TwistList ambient;
    std::vector<Vec> elems;
};

/// Full Buchberger run. With track=true the representation of every basis
/// element in the original columns is kept and every S-pair is processed, so
/// the zero-reduction combinations generate the syzygies of the input.
struct GBData {
    TwistList ambient;
    std::vector<Vec> basis;     // monic, insertion order, not interreduced
    std::vector<Vec> reps;      // basis[k] = sum of reps[k] against input columns
    std::vector<Vec> syzygies;  // input-coordinate combinations reducing to zero
};

GBData buchberger_full(const PolyRing& R, const TwistList& ambient, const std::vector<Vec>& cols,
                       bool track);

GroebnerBasis reduce_basis(const PolyRing& R, const TwistList& ambient, const std::vector<Vec>& basis);
GroebnerBasis buchberger(const PolyRing& R, const Submodule& g);
GroebnerBasis buchberger_matrix(const PolyRing& R, const GradedMatrix& gens);

/// Fully reduces v against the (not necessarily reduced) basis in order,
/// optionally accumulating quotients: v = sum q_k basis_k + remainder.
Vec gb_reduce(const PolyRing& R, const std::vector<Vec>& basis, Vec v,
              std::vector<Polynomial>* quotients = nullptr);

Vec normal_form(const PolyRing& R, const GroebnerBasis& G, const Vec& v);
bool in_span(const PolyRing& R, const GroebnerBasis& G, const Vec& v);
/// Mutual membership of columns.
bool same_span(const PolyRing& R, const GradedMatrix& A, const GradedMatrix& B);

/// Generators of { w : A w = 0 }; A * result = 0 exactly.
GradedMatrix syzygy(const PolyRing& R, const GradedMatrix& A);

/// Generators of { w : V w lies in the image of P's relations }, i.e. the
/// kernel of the induced map into the cokernel module.
GradedMatrix kernel_into_cokernel(const PolyRing& R, const GradedMatrix& V, const Presentation& P);

/// dim_K of the degree-d piece of the submodule spanned by G.
int64_t graded_piece_dim(const PolyRing& R, const GroebnerBasis& G, int d);

}  // namespace kumar
