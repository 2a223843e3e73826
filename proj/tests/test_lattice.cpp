#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <torisol/errors.hpp>
#include <torisol/lattice.hpp>
#include <torisol/semigroup.hpp>

#include <random>

using namespace torisol;

namespace {

IntVector iv(std::initializer_list<long long> vals) {
    IntVector v;
    for (long long x : vals) v.push_back(Int(x));
    return v;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
    REQUIRE(a.cols() == b.rows());
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
            for (std::size_t j = 0; j < b.cols(); ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
    return c;
}

void check_hnf_shape(const IntMatrix& m, const HnfResult& res) {
    // exact transformation and unimodularity
    CHECK(mat_mul(res.U, m) == res.H);
    CHECK(abs(determinant(res.U)) == 1);
    // echelon with positive pivots, entries above reduced
    std::size_t prev_col = 0;
    for (std::size_t r = 0; r < res.rank; ++r) {
        std::size_t c = res.pivot_cols[r];
        if (r > 0) CHECK(c > prev_col);
        prev_col = c;
        CHECK(res.H.at(r, c) > 0);
        for (std::size_t j = 0; j < c; ++j) CHECK(res.H.at(r, j) == 0);
        for (std::size_t i = 0; i < r; ++i) {
            CHECK(res.H.at(i, c) >= 0);
            CHECK(res.H.at(i, c) < res.H.at(r, c));
        }
    }
    for (std::size_t r = res.rank; r < res.H.rows(); ++r)
        for (std::size_t j = 0; j < res.H.cols(); ++j) CHECK(res.H.at(r, j) == 0);
}

SemigroupSpec spec2(std::initializer_list<IntVector> gens) {
    SemigroupSpec s;
    s.s = 2;
    s.generators = gens;
    return s;
}

}  // namespace

TEST_CASE("hnf of the identity is the identity") {
    IntMatrix id = IntMatrix::identity(2);
    HnfResult res = hermite_normal_form(id);
    CHECK(res.H == id);
    CHECK(res.U == id);
    check_hnf_shape(id, res);
}

TEST_CASE("hnf of a coprime column reaches gcd 1") {
    IntMatrix m(2, 1, {Int(2), Int(3)});
    HnfResult res = hermite_normal_form(m);
    CHECK(res.H.at(0, 0) == 1);
    CHECK(res.H.at(1, 0) == 0);
    check_hnf_shape(m, res);
}

TEST_CASE("hnf of the surface generator matrix") {
    IntMatrix m = IntMatrix::from_rows({iv({1, 0}), iv({3, 1}), iv({0, 225}), iv({0, 328})});
    HnfResult res = hermite_normal_form(m);
    CHECK(res.rank == 2);
    CHECK(res.H.at(0, 0) == 1);
    CHECK(res.H.at(0, 1) == 0);
    CHECK(res.H.at(1, 0) == 0);
    CHECK(res.H.at(1, 1) == 1);
    check_hnf_shape(m, res);
}

TEST_CASE("hnf shape holds on random matrices") {
    std::mt19937_64 rng(20250811);
    std::uniform_int_distribution<int> dim(1, 5), entry(-9, 9);
    for (int iter = 0; iter < 300; ++iter) {
        std::size_t rows = dim(rng), cols = dim(rng);
        IntMatrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = entry(rng);
        HnfResult res = hermite_normal_form(m);
        check_hnf_shape(m, res);
    }
}

TEST_CASE("kernel basis of injective and degenerate maps") {
    CHECK(kernel_basis(spec2({iv({1, 0}), iv({0, 1})})).empty());

    auto dup = kernel_basis(spec2({iv({1, 0}), iv({1, 0})}));
    REQUIRE(dup.size() == 1);
    CHECK((dup[0] == iv({1, -1}) || dup[0] == iv({-1, 1})));

    SemigroupSpec surf = spec2({iv({1, 0}), iv({3, 1}), iv({0, 225}), iv({0, 328})});
    auto basis = kernel_basis(surf);
    REQUIRE(basis.size() == 2);
    for (const IntVector& beta : basis) {
        CHECK(beta[0] + 3 * beta[1] == 0);
        CHECK(beta[1] + 225 * beta[2] + 328 * beta[3] == 0);
    }
}

TEST_CASE("kernel vectors map to zero on random semigroups") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> sdist(1, 3), pdist(1, 6), entry(-5, 5);
    for (int iter = 0; iter < 200; ++iter) {
        std::size_t s = sdist(rng), p = pdist(rng);
        std::vector<IntVector> gens;
        for (std::size_t i = 0; i < p; ++i) {
            IntVector g(s);
            bool zero = true;
            for (std::size_t j = 0; j < s; ++j) {
                g[j] = entry(rng);
                if (g[j] != 0) zero = false;
            }
            if (zero) g[0] = 1;
            gens.push_back(g);
        }
        auto basis = kernel_basis(gens);
        CHECK(basis.size() == p - hermite_normal_form(IntMatrix::from_rows(gens)).rank);
        for (const IntVector& alpha : basis) CHECK(vec_is_zero(apply_hom(gens, alpha)));
    }
}

TEST_CASE("lattice span") {
    CHECK(spans_full_lattice(spec2({iv({1, 0}), iv({0, 1})})));
    CHECK_FALSE(spans_full_lattice(spec2({iv({2, 0}), iv({0, 2})})));
    // shear plus two coprime powers always spans
    for (auto [lam, n, m] : {std::array<long long, 3>{1, 2, 3}, {4, 225, 328}, {7, 9, 20}}) {
        CHECK(spans_full_lattice(
            spec2({iv({1, 0}), iv({lam, 1}), iv({0, n}), iv({0, m})})));
    }
}

TEST_CASE("span is invariant under permutation and sign flips of duplicates") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> entry(-4, 4), pdist(2, 5);
    for (int iter = 0; iter < 200; ++iter) {
        std::size_t p = pdist(rng);
        std::vector<IntVector> gens;
        for (std::size_t i = 0; i < p; ++i) {
            IntVector g{Int(entry(rng)), Int(entry(rng))};
            if (vec_is_zero(g)) g[0] = 1;
            gens.push_back(g);
        }
        bool base = spans_full_lattice(gens, 2);
        std::vector<IntVector> shuffled = gens;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        CHECK(spans_full_lattice(shuffled, 2) == base);
        std::vector<IntVector> with_negated = gens;
        with_negated.push_back(vec_negated(gens[0]));
        CHECK(spans_full_lattice(with_negated, 2) == base);
    }
}

TEST_CASE("cone checks on plane examples") {
    ConeReport all = cone_checks(spec2({iv({1, 0}), iv({0, 1})}));
    CHECK(all.strongly_convex);
    CHECK(all.cone_is_orthant == true);
    CHECK(all.saturation_orthant == true);

    ConeReport line = cone_checks(spec2({iv({1, 0}), iv({-1, 0})}));
    CHECK_FALSE(line.strongly_convex);

    ConeReport surf = cone_checks(spec2({iv({1, 0}), iv({3, 1}), iv({0, 225}), iv({0, 328})}));
    CHECK(surf.strongly_convex);
    CHECK(surf.cone_is_orthant == true);
    CHECK(surf.saturation_orthant == true);

    ConeReport interior = cone_checks(spec2({iv({1, 1}), iv({1, 2})}));
    CHECK(interior.strongly_convex);
    CHECK(interior.cone_is_orthant == false);
}

TEST_CASE("orthant test rejects higher dimensions, strong convexity still works") {
    SemigroupSpec s3;
    s3.s = 3;
    s3.generators = {iv({1, 0, 0}), iv({0, 1, 0}), iv({0, 0, 1})};
    CHECK_THROWS_AS(cone_checks(s3), const unsupported_dimension&);
    CHECK(cone_checks(s3, false).strongly_convex);
    s3.generators.push_back(iv({-1, -1, -1}));
    CHECK_FALSE(cone_checks(s3, false).strongly_convex);
    // a hidden three-term dependency
    SemigroupSpec dep;
    dep.s = 3;
    dep.generators = {iv({1, 2, 0}), iv({1, -1, 0}), iv({-2, -1, 0}), iv({0, 0, 1})};
    CHECK_FALSE(cone_checks(dep, false).strongly_convex);
}

TEST_CASE("plane extreme rays") {
    auto rays = plane_cone_rays({iv({2, 1}), iv({1, 3}), iv({3, 9}), iv({4, 2})});
    REQUIRE(rays.has_value());
    CHECK(rays->first == iv({2, 1}));
    CHECK(rays->second == iv({1, 3}));
    CHECK_FALSE(plane_cone_rays({iv({1, 0}), iv({-1, 0})}).has_value());
}

TEST_CASE("sign split") {
    KernelVector zero = split_kernel_vector(iv({0, 0, 0, 0}));
    CHECK(vec_is_zero(zero.plus));
    CHECK(vec_is_zero(zero.minus));

    KernelVector kv = split_kernel_vector(iv({-3, 1, -2, 1}));
    CHECK(kv.plus == iv({0, 1, 0, 1}));
    CHECK(kv.minus == iv({3, 0, 2, 0}));

    KernelVector paper_row = split_kernel_vector(iv({-366, 122, -2, 1}));
    CHECK(paper_row.plus == iv({0, 122, 0, 1}));
    CHECK(paper_row.minus == iv({366, 0, 2, 0}));
}

TEST_CASE("split then recombine is the identity") {
    std::mt19937_64 rng(404);
    std::uniform_int_distribution<int> entry(-50, 50), dims(1, 8);
    for (int iter = 0; iter < 500; ++iter) {
        IntVector v(dims(rng));
        for (Int& x : v) x = entry(rng);
        KernelVector kv = split_kernel_vector(v);
        CHECK(vec_sub(kv.plus, kv.minus) == v);
        for (std::size_t i = 0; i < v.size(); ++i)
            CHECK((kv.plus[i] == 0 || kv.minus[i] == 0));
    }
}

TEST_CASE("canonical sign") {
    CHECK(canonical_sign(iv({5, -2, 1})) == iv({-5, 2, -1}));
    CHECK(canonical_sign(iv({-3, 0, 1})) == iv({3, 0, -1}));
    CHECK(canonical_sign(iv({0, 0, -4, 2})) == iv({0, 0, 4, -2}));
    CHECK(canonical_sign(iv({0, 0})) == iv({0, 0}));
}
