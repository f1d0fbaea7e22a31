#pragma once

#include "kumar/groebner.hpp"

namespace kumar {

/// Result of pruning a presentation: the surviving generators are a subset
/// of the originals. basis_change is the surviving x original matrix whose
/// column r expresses original generator r in the survivors, i.e. the map
/// (old free module) -> (new free module) covering the identity.
struct Minimalized {
    Presentation pres;
    std::vector<int> survivors;   // indices into the original generator list
    GradedMatrix basis_change;
};

/// Repeatedly pivots away nonzero constant entries (lowest column, then
/// lowest row) until the relation matrix has none.
Minimalized minimalize(const PolyRing& R, const Presentation& P);

/// Minimal generating set of the submodule spanned by the columns (graded
/// Nakayama: degree-ascending greedy membership test).
GradedMatrix prune_generators(const PolyRing& R, const GradedMatrix& gens);

struct FreeResolution {
    TwistList f0;                       // twists of the cover
    std::vector<GradedMatrix> diffs;    // diffs[0]: F1 -> F0, ...
    bool minimal = false;
    bool truncated = false;

    std::vector<int> betti() const;    // ranks (F0, F1, ...)
};

FreeResolution free_resolution(const PolyRing& R, const Presentation& P, int max_length);

/// dim_K of each graded piece of coker(P) for degrees lo..hi, from the
/// lead-term module of the relations' GB.
std::vector<int64_t> hilbert_function(const PolyRing& R, const Presentation& P, int lo, int hi);
std::vector<int64_t> hilbert_function(const PolyRing& R, const TwistList& target,
                                      const GroebnerBasis& relGB, int lo, int hi);

/// Hilbert function of the free module with the given twists.
int64_t free_module_dim(const PolyRing& R, const TwistList& twists, int d);

/// True iff every position is annihilated by a power of every variable
/// (pure power tests on the lead-term module of the relations' GB).
bool is_finite_length(const PolyRing& R, const Presentation& P);
bool is_finite_length(const GroebnerBasis& relGB, int nvars);

}  // namespace kumar
