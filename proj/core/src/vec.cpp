#include <torisol/vec.hpp>

#include <torisol/errors.hpp>

#include <cassert>
#include <sstream>
#include <utility>

namespace torisol {

IntVector vec_add(const IntVector& a, const IntVector& b) {
    assert(a.size() == b.size());
    IntVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

IntVector vec_sub(const IntVector& a, const IntVector& b) {
    assert(a.size() == b.size());
    IntVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

IntVector vec_scaled(const Int& c, const IntVector& a) {
    IntVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

void vec_add_scaled(IntVector& acc, const Int& c, const IntVector& a) {
    assert(acc.size() == a.size());
    for (std::size_t i = 0; i < a.size(); ++i) acc[i] += c * a[i];
}

IntVector vec_negated(const IntVector& a) {
    IntVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

bool vec_is_zero(const IntVector& a) {
    for (const Int& v : a)
        if (v != 0) return false;
    return true;
}

Int vec_inf_norm(const IntVector& a) {
    Int n = 0;
    for (const Int& v : a) {
        Int av = abs(v);
        if (av > n) n = av;
    }
    return n;
}

Int vec_total(const IntVector& a) {
    Int t = 0;
    for (const Int& v : a) t += v;
    return t;
}

std::string vec_to_string(const IntVector& a) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) os << ", ";
        os << a[i];
    }
    os << ")";
    return os.str();
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries)
    : rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (a_.size() != rows_ * cols_) throw invalid_params("matrix entry count does not match shape");
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows) {
    if (rows.empty()) throw invalid_params("matrix needs at least one row");
    std::size_t cols = rows[0].size();
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw invalid_params("ragged rows");
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

IntVector IntMatrix::row(std::size_t r) const {
    IntVector v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = at(r, j);
    return v;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMatrix::negate_row(std::size_t i) {
    for (std::size_t c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
}

void IntMatrix::sub_scaled_row(std::size_t i, const Int& q, std::size_t j) {
    if (q == 0) return;
    for (std::size_t c = 0; c < cols_; ++c) at(i, c) -= q * at(j, c);
}

Int determinant(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw invalid_params("determinant needs a square matrix");
    std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t piv = k + 1;
            while (piv < n && a.at(piv, k) == 0) ++piv;
            if (piv == n) return 0;
            a.swap_rows(k, piv);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int v = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                a.at(i, j) = v / prev;  // exact by Bareiss
            }
            a.at(i, k) = 0;
        }
        prev = a.at(k, k);
    }
    Int d = a.at(n - 1, n - 1);
    return sign > 0 ? d : Int(-d);
}

IntVector apply_hom(const std::vector<IntVector>& generators, const IntVector& alpha) {
    if (generators.size() != alpha.size())
        throw invalid_params("coefficient count does not match generator count");
    if (generators.empty()) throw invalid_params("empty generator list");
    IntVector out(generators[0].size(), Int(0));
    for (std::size_t i = 0; i < generators.size(); ++i) vec_add_scaled(out, alpha[i], generators[i]);
    return out;
}

}  // namespace torisol
