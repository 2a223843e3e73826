#include <torisol/euclid.hpp>

#include <torisol/errors.hpp>

#include <sstream>

namespace torisol {

bool EuclidTrace::valid() const {
    if (n <= 1 || m <= n) return false;
    if (gcd(n, m) != 1) return false;
    if (h.empty() || h.size() != r.size()) return false;
    if (r.front() != n || r.back() != 1) return false;
    int qq = q();
    if (m != h_at(0) * n + r_at(1) && qq >= 1) return false;
    if (qq == 0) return false;  // n > 1 forces at least one division step
    for (int k = 2; k <= qq; ++k) {
        if (r_at(k) <= 0 || r_at(k) >= r_at(k - 1)) return false;
        if (r_at(k - 2) != h_at(k - 1) * r_at(k - 1) + r_at(k)) return false;
    }
    if (r_at(1) <= 0 || r_at(1) >= n) return false;
    if (r_at(qq - 1) != h_at(qq) * r_at(qq)) return false;
    for (const Int& hk : h)
        if (hk <= 0) return false;
    return true;
}

EuclidTrace successive_division(const Int& n, const Int& m) {
    if (n <= 1) throw invalid_params("successive division needs n > 1");
    if (m <= n) throw invalid_params("successive division needs m > n");
    if (gcd(n, m) != 1) throw invalid_params("successive division needs gcd(n, m) = 1");
    EuclidTrace t;
    t.n = n;
    t.m = m;
    auto [h0, r1] = div_pos_rem(m, n);
    t.h.push_back(h0);
    t.r.push_back(n);
    Int prev = n;
    Int cur = r1;
    while (cur > 1) {
        t.r.push_back(cur);
        auto [hk, rk] = div_pos_rem(prev, cur);
        t.h.push_back(hk);
        prev = cur;
        cur = rk;
    }
    // cur == 1 (coprimality): close with r_{q-1} = h_q * 1.
    t.r.push_back(Int(1));
    t.h.push_back(prev);
    return t;
}

BoundarySequences::BoundarySequences(const EuclidTrace& t) {
    int q = t.q();
    b_.reserve(static_cast<std::size_t>(q) + 2);
    d_.reserve(static_cast<std::size_t>(q) + 2);
    c_.reserve(static_cast<std::size_t>(q) + 2);
    b_ = {Int(0), Int(1)};          // b_{-1}, b_0
    d_ = {Int(1), t.h_at(0)};       // d_{-1}, d_0
    c_ = {Int(1), Int(0)};          // c_{-1}, c_0
    for (int k = 1; k <= q; ++k) {
        const Int& hk = t.h_at(k);
        b_.push_back(b_[static_cast<std::size_t>(k)] * hk + b_[static_cast<std::size_t>(k - 1)]);
        d_.push_back(d_[static_cast<std::size_t>(k)] * hk + d_[static_cast<std::size_t>(k - 1)]);
        c_.push_back(c_[static_cast<std::size_t>(k)] * hk + c_[static_cast<std::size_t>(k - 1)]);
    }
}

std::vector<ExponentRow> exponent_sequences(const EuclidTrace& t) {
    if (!t.valid()) throw invalid_params("invalid successive-division trace");
    BoundarySequences bnd(t);
    std::vector<ExponentRow> rows;
    for (int k = 1; k <= t.q(); ++k) {
        const Int& hk = t.h_at(k);
        for (Int j = 1; j <= hk; ++j) {
            ExponentRow row;
            row.k = k;
            row.j = static_cast<int>(j.convert_to<long long>());
            row.a = t.r_at(k - 1) - t.r_at(k) * j;
            row.b = bnd.b_at(k - 1) * j + bnd.b_at(k - 2);
            row.d = bnd.d_at(k - 1) * j + bnd.d_at(k - 2);
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

CSequence c_sequence(const EuclidTrace& t) {
    if (!t.valid()) throw invalid_params("invalid successive-division trace");
    BoundarySequences bnd(t);
    CSequence c;
    for (int k = 1; k <= t.q(); ++k) c.values.push_back(bnd.c_at(k));
    return c;
}

bool c_sequence_identity_holds(const EuclidTrace& t) {
    BoundarySequences bnd(t);
    for (int k = 1; k <= t.q(); ++k) {
        Int lhs = t.r_at(1) * bnd.b_at(k);
        Int rhs = k % 2 == 0 ? t.n * bnd.c_at(k) + t.r_at(k + 1)
                             : t.n * bnd.c_at(k) - t.r_at(k + 1);
        if (lhs != rhs) return false;
    }
    return true;
}

DiophantineSolution minimal_diophantine(const Int& n, const Int& m, const Int& b0, int l) {
    if (n <= 1 || m <= n || gcd(n, m) != 1)
        throw invalid_params("minimal_diophantine needs coprime 1 < n < m");
    if (l != 1 && l != -1) throw invalid_params("l must be +1 or -1");
    if (b0 < 0) throw invalid_params("b0 must be nonnegative");
    DiophantineSolution sol;
    sol.b0 = b0;
    sol.l = l;
    if (b0 == 0) {
        if (l == 1) {
            // n*d + a = 0 forces the zero pair.
            sol.d = 0;
            sol.a = 0;
            sol.degenerate = true;
        } else {
            // smallest nonzero solution of n*d = a
            sol.d = 1;
            sol.a = n;
        }
        return sol;
    }
    auto [h0, r1] = div_pos_rem(m, n);
    auto [k, s] = l == 1 ? div_pos_rem(r1 * b0, n) : div_neg_rem(r1 * b0, n);
    sol.d = h0 * b0 + k;
    sol.a = s;
    return sol;
}

DiophantineSolution solution_family(const DiophantineSolution& base, const Int& n, const Int& t) {
    DiophantineSolution shifted = base;
    shifted.d = base.d - base.l * t;
    shifted.a = base.a + n * t;
    if (shifted.d < 0 || shifted.a < 0) {
        std::ostringstream os;
        os << "shift t = " << t << " leaves the nonnegative quadrant";
        throw out_of_range_shift(os.str());
    }
    return shifted;
}

}  // namespace torisol
