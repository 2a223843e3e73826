#include <torisol/lattice.hpp>

#include <torisol/errors.hpp>

#include <algorithm>
#include <cassert>

namespace torisol {

KernelVector split_kernel_vector(const IntVector& alpha) {
    KernelVector kv;
    kv.alpha = alpha;
    kv.plus.assign(alpha.size(), Int(0));
    kv.minus.assign(alpha.size(), Int(0));
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (alpha[i] > 0)
            kv.plus[i] = alpha[i];
        else if (alpha[i] < 0)
            kv.minus[i] = -alpha[i];
    }
    return kv;
}

IntVector canonical_sign(IntVector alpha) {
    bool flip = false;
    if (alpha.size() >= 2 && alpha[1] != 0) {
        flip = alpha[1] < 0;
    } else {
        for (const Int& v : alpha) {
            if (v != 0) {
                flip = v < 0;
                break;
            }
        }
    }
    if (flip)
        for (Int& v : alpha) v = -v;
    return alpha;
}

HnfResult hermite_normal_form(const IntMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) throw invalid_params("empty matrix");
    HnfResult res{m, IntMatrix::identity(m.rows()), 0, {}};
    IntMatrix& h = res.H;
    IntMatrix& u = res.U;
    std::size_t r = 0;
    for (std::size_t c = 0; c < h.cols() && r < h.rows(); ++c) {
        // Clear the column below row r by repeated division steps.
        for (;;) {
            std::size_t best = h.rows();
            for (std::size_t i = r; i < h.rows(); ++i) {
                if (h.at(i, c) == 0) continue;
                if (best == h.rows() || abs(h.at(i, c)) < abs(h.at(best, c))) best = i;
            }
            if (best == h.rows()) break;  // column is zero from r down
            h.swap_rows(r, best);
            u.swap_rows(r, best);
            bool clean = true;
            for (std::size_t i = r + 1; i < h.rows(); ++i) {
                if (h.at(i, c) == 0) continue;
                Int q = h.at(i, c) / h.at(r, c);  // truncated; remainder shrinks
                h.sub_scaled_row(i, q, r);
                u.sub_scaled_row(i, q, r);
                if (h.at(i, c) != 0) clean = false;
            }
            if (clean) break;
        }
        if (h.at(r, c) == 0) continue;
        if (h.at(r, c) < 0) {
            h.negate_row(r);
            u.negate_row(r);
        }
        for (std::size_t i = 0; i < r; ++i) {
            auto [q, s] = div_pos_rem(h.at(i, c), h.at(r, c));
            (void)s;
            h.sub_scaled_row(i, q, r);
            u.sub_scaled_row(i, q, r);
        }
        res.pivot_cols.push_back(c);
        ++r;
    }
    res.rank = r;
    return res;
}

std::vector<IntVector> kernel_basis(const std::vector<IntVector>& generators) {
    if (generators.empty()) throw invalid_params("semigroup needs at least one generator");
    IntMatrix m = IntMatrix::from_rows(generators);
    HnfResult hnf = hermite_normal_form(m);
    std::vector<IntVector> basis;
    for (std::size_t i = hnf.rank; i < hnf.U.rows(); ++i)
        basis.push_back(canonical_sign(hnf.U.row(i)));
    return basis;
}

bool spans_full_lattice(const std::vector<IntVector>& generators, std::size_t s) {
    if (generators.empty()) return s == 0;
    IntMatrix m = IntMatrix::from_rows(generators);
    if (m.cols() != s) throw invalid_params("generator dimension does not match ambient rank");
    HnfResult hnf = hermite_normal_form(m);
    if (hnf.rank != s) return false;
    for (std::size_t i = 0; i < s; ++i)
        if (hnf.H.at(i, hnf.pivot_cols[i]) != 1) return false;
    return true;
}

namespace {

// A circuit among the chosen generators whose unique (up to sign) dependency
// has all coefficients of one strict sign witnesses a line in the cone.
bool subset_gives_positive_dependency(const std::vector<IntVector>& gens,
                                      const std::vector<std::size_t>& idx) {
    std::vector<IntVector> rows;
    rows.reserve(idx.size());
    for (std::size_t i : idx) rows.push_back(gens[i]);
    std::vector<IntVector> basis = kernel_basis(rows);
    if (basis.size() != 1) return false;
    const IntVector& w = basis[0];
    int sign = 0;
    for (const Int& v : w) {
        if (v == 0) return false;  // supported on a proper subset
        int this_sign = v > 0 ? 1 : -1;
        if (sign == 0)
            sign = this_sign;
        else if (sign != this_sign)
            return false;
    }
    return true;
}

bool has_positive_dependency(const std::vector<IntVector>& gens, std::size_t s) {
    std::size_t max_size = std::min(gens.size(), s + 1);
    std::vector<std::size_t> idx;
    // Enumerate subsets of each size; minimal nonnegative dependencies are
    // circuits, and circuits have at most s + 1 elements.
    for (std::size_t size = 2; size <= max_size; ++size) {
        idx.assign(size, 0);
        for (std::size_t i = 0; i < size; ++i) idx[i] = i;
        for (;;) {
            if (subset_gives_positive_dependency(gens, idx)) return true;
            std::size_t i = size;
            while (i > 0) {
                --i;
                if (idx[i] != i + gens.size() - size) break;
            }
            if (idx[i] == i + gens.size() - size) break;
            ++idx[i];
            for (std::size_t j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return false;
}

}  // namespace

ConeReport cone_checks(const std::vector<IntVector>& generators, std::size_t s,
                       bool want_orthant) {
    std::vector<IntVector> gens;
    for (const IntVector& g : generators)
        if (!vec_is_zero(g)) gens.push_back(g);
    ConeReport rep;
    rep.strongly_convex = !has_positive_dependency(gens, s);
    if (!want_orthant) return rep;
    if (s > 2) throw unsupported_dimension("orthant tests are exact only for s <= 2");
    bool orthant = true;
    if (s == 1) {
        bool any = false;
        for (const IntVector& g : gens) {
            any = true;
            if (g[0] < 0) orthant = false;
        }
        orthant = orthant && any;
    } else if (s == 2) {
        bool on_x = false, on_y = false;
        for (const IntVector& g : gens) {
            if (g[0] < 0 || g[1] < 0) orthant = false;
            if (g[0] > 0 && g[1] == 0) on_x = true;
            if (g[0] == 0 && g[1] > 0) on_y = true;
        }
        orthant = orthant && on_x && on_y;
    } else {
        orthant = false;  // s == 0 degenerates
    }
    rep.cone_is_orthant = orthant;
    // A rational cone meets Z^s exactly in N^s iff it is the first orthant.
    rep.saturation_orthant = orthant;
    return rep;
}

namespace {

Int cross2(const IntVector& a, const IntVector& b) { return a[0] * b[1] - a[1] * b[0]; }

IntVector primitive2(IntVector v) {
    Int g = gcd(abs(v[0]), abs(v[1]));
    if (g > 1) {
        v[0] /= g;
        v[1] /= g;
    }
    return v;
}

}  // namespace

std::optional<std::pair<IntVector, IntVector>> plane_cone_rays(
    const std::vector<IntVector>& generators) {
    std::vector<IntVector> gens;
    for (const IntVector& g : generators) {
        if (g.size() != 2) throw invalid_params("plane_cone_rays needs s = 2");
        if (!vec_is_zero(g)) gens.push_back(g);
    }
    if (gens.empty()) return std::nullopt;
    if (!cone_checks(gens, 2, false).strongly_convex) return std::nullopt;
    const IntVector* lo = nullptr;
    const IntVector* hi = nullptr;
    for (const IntVector& g : gens) {
        bool is_lo = true, is_hi = true;
        for (const IntVector& o : gens) {
            Int c = cross2(g, o);
            if (c < 0) is_lo = false;
            if (c > 0) is_hi = false;
        }
        if (is_lo && !lo) lo = &g;
        if (is_hi && !hi) hi = &g;
    }
    if (!lo || !hi) return std::nullopt;
    if (cross2(*lo, *hi) == 0) return std::nullopt;  // cone is a single ray
    return std::make_pair(primitive2(*lo), primitive2(*hi));
}

}  // namespace torisol
