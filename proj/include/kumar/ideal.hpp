#pragma once

#include <cstdint>
#include <functional>

#include "kumar/module_ops.hpp"

namespace kumar {

/// Homogeneous ideal, kept as a rank-1 submodule (ambient twist 0).
struct Ideal {
    std::vector<Polynomial> gens;
};

GradedMatrix ideal_to_matrix(const PolyRing& R, const Ideal& I);
GroebnerBasis ideal_gb(const PolyRing& R, const Ideal& I);

/// (I : f) = { g : g f in I }, via syzygies of [f | gens].
Ideal ideal_quotient(const PolyRing& R, const Ideal& I, const Polynomial& f);

/// Iterate ideal_quotient until stable.
Ideal saturate(const PolyRing& R, const Ideal& I, const Polynomial& f);

/// Saturation with respect to a single variable via the grevlex
/// last-variable division trick (same ideal, one GB).
Ideal saturate_by_variable(const PolyRing& R, const Ideal& I, int v);

/// True iff V(I) is empty in P^n: a pure power of every variable lies in
/// the lead-term ideal of the reduced GB.
bool is_projectively_empty(const PolyRing& R, const Ideal& I);
bool is_projectively_empty_gb(const GroebnerBasis& G, int nvars);
/// True iff 1 in I.
bool is_affinely_empty(const PolyRing& R, const Ideal& I);

/// Incremental k x k minor enumeration, colex on column subsets then row
/// subsets. Calls sink for each nonzero minor; stops when sink returns
/// false or the budget of determinant evaluations is exhausted.
/// Returns true if the enumeration ran to completion.
bool enumerate_minors(const PolyRing& R, const GradedMatrix& A, int k, int64_t budget,
                      const std::function<bool(const Polynomial&)>& sink);

struct FittingResult {
    Ideal ideal;
    bool complete;  // all minors enumerated
};
FittingResult fitting_ideal(const PolyRing& R, const GradedMatrix& A, int k, int64_t budget);

/// Certified rank over the fraction field: max { k : I_k(A) != 0 }.
/// Candidate from random evaluations, then certified exactly: one nonzero
/// rank x rank minor, and every remaining row a fraction-field combination
/// of the pivot rows (syzygy certificate). Deterministic.
int certified_rank(const PolyRing& R, const GradedMatrix& A);

struct LocalFreeness {
    enum class Status { Pass, Fail, Inconclusive };
    Status status = Status::Inconclusive;
    int rank = -1;        // #generators - rho
    int rho = -1;         // certified max nonvanishing minor size
    int64_t minors_used = 0;
    std::string detail;
};

/// Fitting-ideal local-freeness test for coker of A (the relations of a
/// presentation with t = A.rows() generators): rho = certified rank, then
/// V(I_rho) projectively empty within the minor budget.
LocalFreeness local_freeness_check(const PolyRing& R, const GradedMatrix& A, int64_t budget);

}  // namespace kumar
