#ifndef TORISOL_SEMIGROUP_HPP
#define TORISOL_SEMIGROUP_HPP

#include <torisol/lattice.hpp>
#include <torisol/vec.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace torisol {

// A finitely generated semigroup of Z^s given by an ordered generator list.
// Duplicate generators are permitted on input but flagged.
struct SemigroupSpec {
    std::size_t s = 0;
    std::vector<IntVector> generators;

    std::size_t p() const { return generators.size(); }
    bool has_duplicates() const;
    std::vector<IntVector> distinct_generators() const;  // first-occurrence order
    void validate() const;  // dimensions match, generators nonzero

    bool operator==(const SemigroupSpec& o) const = default;
};

// SemigroupSpec-level wrappers over the lattice operations.
std::vector<IntVector> kernel_basis(const SemigroupSpec& spec);
bool spans_full_lattice(const SemigroupSpec& spec);
ConeReport cone_checks(const SemigroupSpec& spec, bool want_orthant = true);

// True iff p >= 2s.  A false verdict is decisive evidence against an
// isolated singularity with smooth normalization.
bool embedding_bound_check(const SemigroupSpec& spec);

// s minus the number of distinct standard basis vectors among the
// generators.  Requires generators in N^s.
int corank(const SemigroupSpec& spec);

// Parameters of the plane surface normal form <(1,0), (lambda,1), (0,n), (0,m)>.
struct SurfaceParams {
    Int lambda;
    Int n;
    Int m;

    void validate(bool allow_lambda_zero = false) const;
    bool operator==(const SurfaceParams& o) const = default;
};

// Parameters of the corank-q pattern semigroup in Z^s:
//   (1) e_1 .. e_{s-q}
//   (2) powers[j-1][l-1] * e_{s-q+j}         each > 1, at least two per j, gcd 1
//   (3) lambda[i-1][j-1] * e_i + e_{s-q+j}   each >= 1
//   (4) mu[j-1][t-1] * e_{s-q+j} + e_{s-q+t} for j != t, each >= 1
struct SqParams {
    int s = 0;
    int q = 0;
    std::vector<std::vector<Int>> powers;  // q rows
    std::vector<std::vector<Int>> lambda;  // (s-q) x q
    std::vector<std::vector<Int>> mu;      // q x q, diagonal ignored (stored 0)

    void validate() const;
    Int generator_count() const;  // r = s(q+1) - 2q + sum k_j
    bool operator==(const SqParams& o) const = default;
};

SemigroupSpec build_sq(const SqParams& params);

struct EmbeddingDimBounds {
    Int lower;  // s(q+1) - q(q-1)/2
    Int upper;  // = r
    Int r;      // s(q+1) - 2q + sum k_j

    bool operator==(const EmbeddingDimBounds& o) const = default;
};

EmbeddingDimBounds embedding_dim_bounds(const SqParams& params);

// Number of distinct generators that are not sums of the other distinct
// generators; exact, for small inputs in N^s.
std::size_t embedded_dimension(const SemigroupSpec& spec);

enum class Verdict {
    SurfaceCorank1,
    SurfaceCorank2,
    NormalForm2s,
    ContainsSq,
    NotIsolatedOrNotSmoothNormalization,
    Indeterminate,
};

std::string verdict_name(Verdict v);

struct EvidenceItem {
    std::string check;
    bool passed = false;
    std::string detail;

    bool operator==(const EvidenceItem& o) const = default;
};

// Extracted parameters of the two surface prenormal-form cases.
struct Case1Params {
    Int lambda;
    std::vector<Int> powers;                          // m_1 < ... < m_l
    std::vector<std::pair<Int, Int>> free_monomials;  // (a_i, b_i)

    bool operator==(const Case1Params& o) const = default;
};

struct Case2Params {
    Int lambda;
    Int b1;
    std::vector<Int> x_powers;  // n_1 < ... < n_k
    std::vector<Int> y_powers;  // m_1 < ... < m_l
    std::vector<std::pair<Int, Int>> free_monomials;

    bool operator==(const Case2Params& o) const = default;
};

struct TwoSParams {
    std::vector<Int> lambdas;  // lambda_1 .. lambda_{s-1}
    Int n;
    Int m;

    bool operator==(const TwoSParams& o) const = default;
};

struct SqWitness {
    SqParams params;
    std::vector<std::size_t> generator_indices;  // into the distinct generator list

    bool operator==(const SqWitness& o) const = default;
};

struct ClassificationResult {
    Verdict verdict = Verdict::Indeterminate;
    std::optional<Case1Params> case1;
    std::optional<Case2Params> case2;
    std::optional<TwoSParams> two_s;
    std::optional<SqWitness> sq;
    std::vector<EvidenceItem> evidence;

    bool operator==(const ClassificationResult& o) const = default;
};

// Matches a plane semigroup (s = 2) against the two surface prenormal
// forms.  Complete for s = 2: the input is first mapped exactly onto the
// first quadrant by the inverse of its extreme-ray basis, after which the
// only residual lattice symmetry is the axis swap.
ClassificationResult classify_surface(const SemigroupSpec& spec);

// Matches a semigroup with p = 2s generators against the 2s-generator
// normal form (unit vectors, one shear per leading axis, two coprime pure
// powers on the last axis).  Exact for s <= 2; for s >= 3 a bounded search
// over coordinate permutations and single shears is used and exhaustion
// yields Indeterminate.
ClassificationResult classify_2s(const SemigroupSpec& spec);

// Searches the generators of a prenormalized semigroup for a subset matching
// the corank-q pattern.  Deterministic; the witness uses maximal power
// blocks and smallest shear/cross exponents.
std::optional<SqWitness> contains_sq(const SemigroupSpec& spec, int q);

// Full dispatch used by the CLI: embedding gate, lattice/cone checks, then
// the applicable classifier.
ClassificationResult classify(const SemigroupSpec& spec);

}  // namespace torisol

#endif
