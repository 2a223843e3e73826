#ifndef TORISOL_RENDER_HPP
#define TORISOL_RENDER_HPP

#include <torisol/euclid.hpp>
#include <torisol/ideal.hpp>
#include <torisol/semigroup.hpp>

#include <string>

namespace torisol {

enum class RenderStyle { Text, Latex };

// Monomial in the fixed variables X, Y, Z, W ("1" for the empty exponent).
std::string monomial_string(const IntVector& exponents, RenderStyle style);
std::string binomial_string(const Binomial& b, RenderStyle style);

// The division tableau, one equation per line:
//   m = h_0 * n + r_1, ..., r_{q-1} = h_q * r_q.
std::string render_trace(const EuclidTrace& t, RenderStyle style);

// Text: one row per entry with (kind, k, j, a, b, d) and the binomial.
// Latex: a two-column array with the per-step exponent formulas on the left
// and the binomials on the right, one block per division step.
std::string render_table(const GeneratorTable& table, RenderStyle style);

std::string render_classification(const ClassificationResult& result);

}  // namespace torisol

#endif
