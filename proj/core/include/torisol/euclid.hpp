#ifndef TORISOL_EUCLID_HPP
#define TORISOL_EUCLID_HPP

#include <torisol/integer.hpp>

#include <vector>

namespace torisol {

// Quotients and remainders of the successive division of a coprime pair
// 1 < n < m:
//
//   m       = h_0 * n       + r_1
//   n       = h_1 * r_1     + r_2
//   ...
//   r_{q-2} = h_{q-1} * r_{q-1} + r_q
//   r_{q-1} = h_q * r_q,    r_q = 1.
//
// h holds h_0..h_q and r holds r_0 = n, r_1, ..., r_q = 1.
struct EuclidTrace {
    Int n;
    Int m;
    std::vector<Int> h;
    std::vector<Int> r;

    int q() const { return static_cast<int>(h.size()) - 1; }
    const Int& h_at(int k) const { return h.at(static_cast<std::size_t>(k)); }
    // r_k for k in [0, q]; r_{q+1} is 0 (the division terminates exactly).
    Int r_at(int k) const {
        if (k == q() + 1) return Int(0);
        return r.at(static_cast<std::size_t>(k));
    }

    bool valid() const;
    bool operator==(const EuclidTrace& o) const = default;
};

EuclidTrace successive_division(const Int& n, const Int& m);

// One exponent triple of the generator recursion, for k in [1, q] and
// j in [1, h_k]:
//   a_{k,j} = r_{k-1} - r_k * j
//   b_{k,j} = b_{k-1,h_{k-1}} * j + b_{k-2,h_{k-2}}
//   d_{k,j} = d_{k-1,h_{k-1}} * j + d_{k-2,h_{k-2}}
// with seeds b_{-1} = 0, b_0 = 1, d_{-1} = 1, d_0 = h_0.
struct ExponentRow {
    int k = 0;
    int j = 0;
    Int a;
    Int b;
    Int d;

    bool operator==(const ExponentRow& o) const = default;
};

// Boundary values b_{k,h_k}, d_{k,h_k}, c_{k,h_k} for k in [-1, q], stored
// with explicit k keys so the seed indices mirror the recursion exactly.
class BoundarySequences {
public:
    explicit BoundarySequences(const EuclidTrace& t);

    const Int& b_at(int k) const { return b_.at(static_cast<std::size_t>(k + 1)); }
    const Int& d_at(int k) const { return d_.at(static_cast<std::size_t>(k + 1)); }
    const Int& c_at(int k) const { return c_.at(static_cast<std::size_t>(k + 1)); }

private:
    std::vector<Int> b_, d_, c_;  // index 0 holds k = -1
};

std::vector<ExponentRow> exponent_sequences(const EuclidTrace& t);

// c_{k,h_k} for k = 1..q, satisfying
//   c_{k,h_k} = c_{k-1,h_{k-1}} * h_k + c_{k-2,h_{k-2}},
// seeds c_{-1} = 1, c_0 = 0, together with
//   r_1 * b_{k,h_k} = n * c_{k,h_k} + r_{k+1}   (k even)
//   r_1 * b_{k,h_k} = n * c_{k,h_k} - r_{k+1}   (k odd).
struct CSequence {
    std::vector<Int> values;  // values[k-1] = c_{k,h_k}

    const Int& at(int k) const { return values.at(static_cast<std::size_t>(k - 1)); }
    bool operator==(const CSequence& o) const = default;
};

CSequence c_sequence(const EuclidTrace& t);

// Checks r_1 * b_{k,h_k} = n * c_{k,h_k} -+ r_{k+1} exactly for every k.
bool c_sequence_identity_holds(const EuclidTrace& t);

// Nonnegative solution of n*d + l*a = m*b0 with 0 <= a < n and a minimal,
// except for the two b0 = 0 conventions:
//   l = -1 returns (d, a) = (1, n), the smallest nonzero solution;
//   l = +1 only has the zero solution, returned with degenerate = true.
struct DiophantineSolution {
    Int d;
    Int a;
    Int b0;
    int l = 1;  // +1 or -1
    bool degenerate = false;

    bool operator==(const DiophantineSolution& o) const = default;
};

DiophantineSolution minimal_diophantine(const Int& n, const Int& m, const Int& b0, int l);

// The t-shifted solution (d - l*t, a + n*t) of the same equation.  Throws
// out_of_range_shift if either coordinate leaves N.
DiophantineSolution solution_family(const DiophantineSolution& base, const Int& n, const Int& t);

}  // namespace torisol

#endif
