#ifndef TORISOL_LATTICE_HPP
#define TORISOL_LATTICE_HPP

#include <torisol/vec.hpp>

#include <optional>
#include <vector>

namespace torisol {

// Sign split of an integer vector: alpha = plus - minus with disjoint
// supports and plus, minus >= 0 componentwise.
struct KernelVector {
    IntVector alpha;
    IntVector plus;
    IntVector minus;

    bool operator==(const KernelVector& o) const = default;
};

KernelVector split_kernel_vector(const IntVector& alpha);

// Sign normalization used for kernel vectors throughout: make the second
// coordinate nonnegative; if it is zero (or absent), make the first nonzero
// entry positive.
IntVector canonical_sign(IntVector alpha);

struct HnfResult {
    IntMatrix H;  // row-style Hermite normal form
    IntMatrix U;  // unimodular, U * M = H
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols;  // one per nonzero row of H
};

// Row-style HNF: upper echelon, positive pivots, entries above each pivot
// reduced into [0, pivot).
HnfResult hermite_normal_form(const IntMatrix& m);

// Basis of { alpha : sum_i alpha_i * gens_i = 0 }, i.e. the left kernel of
// the (#gens x s) matrix whose rows are the generators.  Each basis vector
// is returned in canonical sign.  Basis size = #gens - rank.
std::vector<IntVector> kernel_basis(const std::vector<IntVector>& generators);

// True iff the Z-span of the generators is all of Z^s.
bool spans_full_lattice(const std::vector<IntVector>& generators, std::size_t s);

struct ConeReport {
    bool strongly_convex = false;
    // Exact only for s <= 2; left empty for larger s.
    std::optional<bool> cone_is_orthant;
    std::optional<bool> saturation_orthant;
};

// Cone tests on the real cone spanned by the generators.  The orthant tests
// are requested by default and throw unsupported_dimension for s > 2;
// pass want_orthant = false to get only the strong-convexity test.
ConeReport cone_checks(const std::vector<IntVector>& generators, std::size_t s,
                       bool want_orthant = true);

// Extreme rays of a strongly convex full-dimensional plane cone, as
// primitive vectors, ordered so that the second ray is counterclockwise
// from the first.  Empty when the hypotheses fail.
std::optional<std::pair<IntVector, IntVector>> plane_cone_rays(
    const std::vector<IntVector>& generators);

}  // namespace torisol

#endif
