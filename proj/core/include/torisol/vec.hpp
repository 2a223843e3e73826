#ifndef TORISOL_VEC_HPP
#define TORISOL_VEC_HPP

#include <torisol/integer.hpp>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace torisol {

// Exact integer vector; the dimension is the length.
using IntVector = std::vector<Int>;

IntVector vec_add(const IntVector& a, const IntVector& b);
IntVector vec_sub(const IntVector& a, const IntVector& b);
IntVector vec_scaled(const Int& c, const IntVector& a);
void vec_add_scaled(IntVector& acc, const Int& c, const IntVector& a);
IntVector vec_negated(const IntVector& a);
bool vec_is_zero(const IntVector& a);
Int vec_inf_norm(const IntVector& a);
Int vec_total(const IntVector& a);

std::string vec_to_string(const IntVector& a);

// Dense row-major integer matrix.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, Int(0)) {}
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<IntVector>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Int& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    IntVector row(std::size_t r) const;
    void swap_rows(std::size_t i, std::size_t j);
    void negate_row(std::size_t i);
    // row_i -= q * row_j
    void sub_scaled_row(std::size_t i, const Int& q, std::size_t j);

    bool operator==(const IntMatrix& o) const = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> a_;
};

// Exact determinant (fraction-free Bareiss elimination). Square input.
Int determinant(const IntMatrix& m);

// y = sum_i alpha_i * gens_i.  Dimensions must agree.
IntVector apply_hom(const std::vector<IntVector>& generators, const IntVector& alpha);

}  // namespace torisol

#endif
