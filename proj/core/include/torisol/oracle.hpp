#ifndef TORISOL_ORACLE_HPP
#define TORISOL_ORACLE_HPP

#include <torisol/ideal.hpp>
#include <torisol/lattice.hpp>
#include <torisol/semigroup.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace torisol {

// All canonical-sign kernel vectors of a semigroup with sup-norm at most
// the bound, enumerated exhaustively through a coefficient box around the
// kernel basis.  Kernel rank must be at most 2.
struct BoundedKernelSet {
    Int bound;
    std::vector<IntVector> vectors;  // sorted lexicographically, deduplicated

    bool contains(const IntVector& canonical) const;
};

BoundedKernelSet enumerate_kernel(const SemigroupSpec& spec, const Int& bound);
BoundedKernelSet enumerate_kernel(const SurfaceParams& params, const Int& bound);

// Oriented binomial rewrite rule: lead -> trail, lead strictly greater in
// graded lex with X > Y > Z > W.
struct Rule {
    IntVector lead;
    IntVector trail;

    bool operator==(const Rule& o) const = default;
};

// Graded lex compare: returns negative/zero/positive as a <=> b.
int grlex_compare(const IntVector& a, const IntVector& b);

struct RewriteSystem {
    std::vector<Rule> rules;      // inter-reduced, sorted by lead
    bool capped = false;          // some S-pair exceeded the degree cap
    Int degree_cap;
    std::string order = "grlex x>y>z>w";
};

// Buchberger completion specialized to binomials, truncated at the given
// total degree.  A capped system still gives sound "reduces to zero"
// positives; negatives under a cap are inconclusive.
RewriteSystem complete(const std::vector<Binomial>& rules, const Int& degree_cap);

// Normal form of a monomial exponent vector; rule_order permutes the rule
// preference (used by the confluence tests).
IntVector normal_form(const IntVector& monomial, const RewriteSystem& sys,
                      const std::vector<std::size_t>* rule_order = nullptr);

bool reduces_to_zero(const Binomial& b, const RewriteSystem& sys);

enum class ProbeStatus { Irredundant, Redundant, Inconclusive };

struct MinimalityReport {
    std::vector<ProbeStatus> per_entry;
    std::size_t irredundant = 0;
    std::size_t redundant = 0;
    std::size_t inconclusive = 0;

    bool all_irredundant() const {
        return redundant == 0 && inconclusive == 0 && irredundant == per_entry.size();
    }
};

// Leave-one-out membership probe: an entry is redundant when it reduces to
// zero under the completed system built from all other entries.
MinimalityReport minimality_probe(const std::vector<Binomial>& entries, const Int& degree_cap);
MinimalityReport minimality_probe(const GeneratorTable& table, const Int& degree_cap);

struct CrossCheckReport {
    SurfaceParams params;
    Int bound;
    Int degree_cap;
    bool capped = false;
    std::size_t kernel_vectors = 0;
    // part (a): enumerated kernel binomials that fail to reduce to zero
    std::vector<IntVector> unreduced;
    std::size_t inconclusive = 0;  // unreduced under a capped system
    // part (b): emitted kernel vectors inside the bound missing from the
    // enumeration
    std::vector<IntVector> missing_from_enumeration;

    bool passed() const {
        return unreduced.empty() && inconclusive == 0 && missing_from_enumeration.empty();
    }
};

// Two-sided agreement between the recursion engine and the brute-force
// oracle on one parameter triple.
CrossCheckReport cross_check(const SurfaceParams& params, const Int& bound,
                             const Int& degree_cap);

}  // namespace torisol

#endif
