#ifndef TORISOL_IDEAL_HPP
#define TORISOL_IDEAL_HPP

#include <torisol/euclid.hpp>
#include <torisol/lattice.hpp>
#include <torisol/semigroup.hpp>

#include <string>
#include <vector>

namespace torisol {

// Variable order is fixed as (X, Y, Z, W), matching the generator order
// ((1,0), (lambda,1), (0,n), (0,m)).
inline constexpr std::size_t kSurfaceVars = 4;

std::vector<IntVector> surface_generators(const SurfaceParams& params);

// x^plus - x^minus with its exponent-difference certificate.
struct Binomial {
    IntVector plus;
    IntVector minus;
    KernelVector kernel;  // kernel.alpha = plus - minus

    static Binomial from_exponents(IntVector plus, IntVector minus);
    bool operator==(const Binomial& o) const = default;
};

enum class BinomialKind {
    PurePowerY,  // Y^n - X^{lambda n} Z
    Seed,        // Y^{r_1} Z^{h_0} - X^{lambda r_1} W
    Type1,       // Y^a W^b - X^{lambda a} Z^d, odd k
    Type2,       // Y^a Z^d - X^{lambda a} W^b, even k
};

std::string kind_name(BinomialKind k);

// One emitted generator.  The two special binomials carry sentinel indices
// k = 0, j in {1, 2}.
struct GeneratorEntry {
    BinomialKind kind = BinomialKind::Type1;
    int k = 0;
    int j = 0;
    Int a;
    Int b;
    Int d;
    Binomial binomial;

    bool operator==(const GeneratorEntry& o) const = default;
};

struct GeneratorTable {
    SurfaceParams params;
    EuclidTrace trace;
    std::vector<GeneratorEntry> entries;

    // Index of the entry with the given recursion indices; the specials are
    // (0,1) and (0,2).
    std::size_t entry_index(int k, int j) const;
    bool operator==(const GeneratorTable& o) const = default;
};

// The full generator table: the two special binomials followed by one
// entry per (k, j) of the exponent recursion.  Size is 2 + sum_k h_k.
GeneratorTable generators_c4(const SurfaceParams& params, bool allow_lambda_zero = false);

enum class BinomialClass { Type1, Type2, PureZW, PureY, ReducibleHint };

std::string binomial_class_name(BinomialClass c);

// Classifies a canonical-sign kernel vector by the sign pattern of its
// (Z, W) entries.
BinomialClass binomial_type(const KernelVector& alpha, const SurfaceParams& params);

struct CertificateViolation {
    std::size_t entry_index = 0;
    std::string reason;

    bool operator==(const CertificateViolation& o) const = default;
};

struct CertificateReport {
    std::vector<CertificateViolation> violations;
    std::size_t checked = 0;

    bool ok() const { return violations.empty(); }
};

// Re-derives every entry's kernel vector from (kind, a, b, d) and checks it
// maps to zero under the semigroup homomorphism.
CertificateReport verify_kernel_certificates(const GeneratorTable& table);

struct DecompositionTerm {
    Int coeff;                 // nonnegative
    std::size_t entry_index;   // into table.entries

    bool operator==(const DecompositionTerm& o) const = default;
};

// target = sum coeff_i * kernel vector of entry_i, exactly.
struct Decomposition {
    Int b0;
    int l = 1;
    DiophantineSolution solution;  // the (d, a) being decomposed
    KernelVector target;
    std::vector<DecompositionTerm> terms;

    bool operator==(const Decomposition& o) const = default;
};

// For a (b0, l) pair that does not label a table entry, returns the explicit
// combination of entry vectors expressing the associated solution vector.
// Throws is_generator when (b0, l) labels an entry and no_solution for the
// degenerate pair b0 = 0, l = +1.
Decomposition redundancy_decomposition(const GeneratorTable& table, const Int& b0, int l);

// Convenience overload building the table first.
Decomposition redundancy_decomposition(const Int& b0, int l, const SurfaceParams& params);

// base + t * alpha_n with alpha_n = (-lambda n, n, -1, 0); the result is
// verified to stay in the kernel.
KernelVector family_shift_check(const KernelVector& base, const Int& t,
                                const SurfaceParams& params);

// Everything the certificate checker can exercise on one parameter triple:
// kernel certificates, the c-sequence identity, family shifts on every
// entry, and redundancy decompositions for every b0 up to b_{q,h_q} plus a
// margin beyond it.
struct VerificationReport {
    bool certificates_ok = false;
    bool c_sequence_ok = false;
    std::size_t shifts_checked = 0;
    bool shifts_ok = false;
    std::size_t decompositions_checked = 0;
    bool decompositions_ok = false;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
};

VerificationReport full_verification(const SurfaceParams& params);

}  // namespace torisol

#endif
