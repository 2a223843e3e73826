#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <torisol/errors.hpp>
#include <torisol/semigroup.hpp>

#include <algorithm>
#include <random>

using namespace torisol;

namespace {

IntVector iv(std::initializer_list<long long> vals) {
    IntVector v;
    for (long long x : vals) v.push_back(Int(x));
    return v;
}

SemigroupSpec make_spec(std::size_t s, std::initializer_list<IntVector> gens) {
    SemigroupSpec spec;
    spec.s = s;
    spec.generators = gens;
    return spec;
}

SemigroupSpec surface_spec(long long lambda, long long n, long long m) {
    return make_spec(2, {iv({1, 0}), iv({lambda, 1}), iv({0, n}), iv({0, m})});
}

bool evidence_failed(const ClassificationResult& r, const std::string& check) {
    for (const EvidenceItem& e : r.evidence)
        if (e.check == check && !e.passed) return true;
    return false;
}

SqParams sample_sq_params(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> sdist(1, 4);
    SqParams p;
    p.s = sdist(rng);
    p.q = std::uniform_int_distribution<int>(1, p.s)(rng);
    std::uniform_int_distribution<int> kdist(2, 3), mdist(2, 12), ldist(1, 4), mudist(1, 3);
    for (int j = 0; j < p.q; ++j) {
        std::vector<Int> row;
        for (;;) {
            std::set<long long> vals;
            int k = kdist(rng);
            while (static_cast<int>(vals.size()) < k) vals.insert(mdist(rng));
            Int g = 0;
            for (long long v : vals) g = gcd(g, Int(v));
            if (g != 1) continue;
            row.assign(vals.begin(), vals.end());
            break;
        }
        p.powers.push_back(row);
    }
    p.lambda.assign(p.s - p.q, std::vector<Int>(p.q));
    for (auto& row : p.lambda)
        for (Int& v : row) v = ldist(rng);
    p.mu.assign(p.q, std::vector<Int>(p.q, Int(0)));
    for (int j = 0; j < p.q; ++j)
        for (int t = j + 1; t < p.q; ++t) {
            // avoid the ambiguous mix where exactly one direction is 1
            int a = mudist(rng), b = mudist(rng);
            if ((a == 1) != (b == 1)) b = a;
            p.mu[j][t] = a;
            p.mu[t][j] = b;
        }
    return p;
}

}  // namespace

TEST_CASE("embedding bound") {
    CHECK(embedding_bound_check(surface_spec(3, 225, 328)));
    CHECK_FALSE(embedding_bound_check(make_spec(2, {iv({1, 0}), iv({1, 1}), iv({0, 2})})));
    SemigroupSpec s3 = make_spec(3, {iv({1, 0, 0}), iv({0, 1, 0}), iv({2, 0, 1}), iv({0, 3, 1}),
                                     iv({0, 0, 2}), iv({0, 0, 5})});
    CHECK(embedding_bound_check(s3));
}

TEST_CASE("corank") {
    CHECK(corank(surface_spec(5, 2, 3)) == 1);
    CHECK(corank(make_spec(2, {iv({2, 0}), iv({3, 0}), iv({0, 2}), iv({0, 3}), iv({1, 1})})) == 2);
    CHECK(corank(make_spec(2, {iv({1, 0}), iv({0, 1})})) == 0);
    CHECK_THROWS_AS(corank(make_spec(2, {iv({1, -1})})), const not_prenormalized&);
}

TEST_CASE("classify_surface matches the four-generator surface") {
    ClassificationResult r = classify_surface(surface_spec(3, 225, 328));
    CHECK(r.verdict == Verdict::SurfaceCorank1);
    REQUIRE(r.case1.has_value());
    CHECK(r.case1->lambda == 3);
    CHECK(r.case1->powers == std::vector<Int>{Int(225), Int(328)});
    CHECK(r.case1->free_monomials.empty());
}

TEST_CASE("classify_surface with a free monomial") {
    ClassificationResult r = classify_surface(
        make_spec(2, {iv({1, 0}), iv({0, 2}), iv({0, 3}), iv({1, 1}), iv({5, 7})}));
    CHECK(r.verdict == Verdict::SurfaceCorank1);
    REQUIRE(r.case1.has_value());
    CHECK(r.case1->lambda == 1);
    CHECK(r.case1->powers == std::vector<Int>{Int(2), Int(3)});
    REQUIRE(r.case1->free_monomials.size() == 1);
    CHECK(r.case1->free_monomials[0] == std::pair<Int, Int>{Int(5), Int(7)});
}

TEST_CASE("classify_surface structural failures") {
    ClassificationResult r = classify_surface(make_spec(2, {iv({2, 0}), iv({0, 2})}));
    CHECK(r.verdict == Verdict::NotIsolatedOrNotSmoothNormalization);
    CHECK(evidence_failed(r, "embedding-dimension-bound"));

    // enough generators but an index-2 sublattice
    ClassificationResult r2 =
        classify_surface(make_spec(2, {iv({2, 0}), iv({0, 2}), iv({2, 2}), iv({4, 2})}));
    CHECK(r2.verdict == Verdict::NotIsolatedOrNotSmoothNormalization);
    CHECK(evidence_failed(r2, "lattice-span"));

    // both unit vectors: the semigroup is all of N^2
    ClassificationResult r3 = classify_surface(
        make_spec(2, {iv({1, 0}), iv({0, 1}), iv({0, 2}), iv({5, 7})}));
    CHECK(r3.verdict == Verdict::NotIsolatedOrNotSmoothNormalization);
    CHECK(evidence_failed(r3, "unit-vector-structure"));

    // cone spans a half plane
    ClassificationResult r4 = classify_surface(
        make_spec(2, {iv({1, 0}), iv({-1, 0}), iv({0, 1}), iv({1, 1})}));
    CHECK(r4.verdict == Verdict::NotIsolatedOrNotSmoothNormalization);
    CHECK(evidence_failed(r4, "cone-strongly-convex"));

    // non-unimodular cone: rays (1,0) and (1,2)
    ClassificationResult r5 = classify_surface(
        make_spec(2, {iv({1, 0}), iv({1, 1}), iv({1, 2}), iv({2, 3})}));
    CHECK(r5.verdict == Verdict::NotIsolatedOrNotSmoothNormalization);
    CHECK(evidence_failed(r5, "cone-unimodular"));

    CHECK_THROWS_AS(classify_surface(make_spec(3, {iv({1, 0, 0})})), const wrong_rank&);
}

TEST_CASE("classify_surface corank two") {
    ClassificationResult r = classify_surface(
        make_spec(2, {iv({2, 0}), iv({3, 0}), iv({0, 2}), iv({0, 3}), iv({1, 1})}));
    CHECK(r.verdict == Verdict::SurfaceCorank2);
    REQUIRE(r.case2.has_value());
    CHECK(r.case2->lambda == 1);
    CHECK(r.case2->b1 == 1);
    CHECK(r.case2->x_powers == std::vector<Int>{Int(2), Int(3)});
    CHECK(r.case2->y_powers == std::vector<Int>{Int(2), Int(3)});

    // a lone mixed generator (2,1) has no (1,b) companion
    ClassificationResult bad = classify_surface(
        make_spec(2, {iv({2, 0}), iv({3, 0}), iv({0, 2}), iv({0, 3}), iv({2, 1})}));
    CHECK(bad.verdict == Verdict::NotIsolatedOrNotSmoothNormalization);
    CHECK(evidence_failed(bad, "co-shear-present"));

    ClassificationResult two = classify_surface(make_spec(
        2, {iv({2, 0}), iv({3, 0}), iv({0, 2}), iv({0, 3}), iv({2, 1}), iv({1, 3})}));
    CHECK(two.verdict == Verdict::SurfaceCorank2);
    REQUIRE(two.case2.has_value());
    CHECK(two.case2->lambda == 2);
    CHECK(two.case2->b1 == 3);
}

TEST_CASE("classification is exact under plane lattice isomorphisms") {
    // (x, y) -> (x, y + c x) maps the normal form off its literal shape; the
    // exact ray normalization must recover the same parameters.
    for (long long c : {1, 2, 3, -1, -2}) {
        SemigroupSpec spec = surface_spec(3, 225, 328);
        for (IntVector& g : spec.generators) g[1] += Int(c) * g[0];
        ClassificationResult r = classify_surface(spec);
        CHECK(r.verdict == Verdict::SurfaceCorank1);
        REQUIRE(r.case1.has_value());
        CHECK(r.case1->lambda == 3);
        CHECK(r.case1->powers == std::vector<Int>{Int(225), Int(328)});
    }
}

TEST_CASE("classify_2s on plane and space forms") {
    ClassificationResult r = classify_2s(surface_spec(7, 2, 5));
    CHECK(r.verdict == Verdict::NormalForm2s);
    REQUIRE(r.two_s.has_value());
    CHECK(r.two_s->lambdas == std::vector<Int>{Int(7)});
    CHECK(r.two_s->n == 2);
    CHECK(r.two_s->m == 5);

    SemigroupSpec s3 = make_spec(3, {iv({1, 0, 0}), iv({0, 1, 0}), iv({2, 0, 1}), iv({0, 3, 1}),
                                     iv({0, 0, 2}), iv({0, 0, 5})});
    ClassificationResult r3 = classify_2s(s3);
    CHECK(r3.verdict == Verdict::NormalForm2s);
    REQUIRE(r3.two_s.has_value());
    CHECK(r3.two_s->lambdas == std::vector<Int>{Int(2), Int(3)});
    CHECK(r3.two_s->n == 2);
    CHECK(r3.two_s->m == 5);

    ClassificationResult bad = classify_2s(surface_spec(1, 2, 4));
    CHECK(bad.verdict == Verdict::NotIsolatedOrNotSmoothNormalization);
    CHECK(evidence_failed(bad, "pure-power-gcd"));

    CHECK_THROWS_AS(classify_2s(make_spec(2, {iv({1, 0}), iv({1, 1}), iv({0, 2})})),
                    const wrong_count&);
}

TEST_CASE("classify_2s verdict is invariant under generator permutation") {
    std::mt19937_64 rng(42);
    SemigroupSpec base = surface_spec(4, 3, 7);
    ClassificationResult expect = classify_2s(base);
    for (int iter = 0; iter < 10; ++iter) {
        SemigroupSpec shuffled = base;
        std::shuffle(shuffled.generators.begin(), shuffled.generators.end(), rng);
        ClassificationResult got = classify_2s(shuffled);
        CHECK(got.verdict == expect.verdict);
        CHECK(got.two_s == expect.two_s);
    }
}

TEST_CASE("classify_2s recovers a sheared space form through the bounded search") {
    SemigroupSpec s3 = make_spec(3, {iv({1, 0, 0}), iv({0, 1, 0}), iv({2, 0, 1}), iv({0, 3, 1}),
                                     iv({0, 0, 2}), iv({0, 0, 5})});
    for (IntVector& g : s3.generators) g[0] += g[1];  // elementary shear
    ClassificationResult r = classify_2s(s3);
    CHECK(r.verdict == Verdict::NormalForm2s);
    REQUIRE(r.two_s.has_value());
    CHECK(r.two_s->n == 2);
    CHECK(r.two_s->m == 5);
}

TEST_CASE("build_sq emits the pattern in order") {
    SqParams p;
    p.s = 2;
    p.q = 1;
    p.powers = {{Int(225), Int(328)}};
    p.lambda = {{Int(3)}};
    p.mu = {{Int(0)}};
    SemigroupSpec spec = build_sq(p);
    CHECK(spec.s == 2);
    REQUIRE(spec.p() == 4);
    CHECK(spec.generators[0] == iv({1, 0}));
    CHECK(spec.generators[1] == iv({0, 225}));
    CHECK(spec.generators[2] == iv({0, 328}));
    CHECK(spec.generators[3] == iv({3, 1}));

    EmbeddingDimBounds b = embedding_dim_bounds(p);
    CHECK(b.lower == 4);
    CHECK(b.upper == 4);
    CHECK(b.r == 4);
}

TEST_CASE("build_sq boundary and validation") {
    SqParams curve;
    curve.s = 1;
    curve.q = 1;
    curve.powers = {{Int(2), Int(3)}};
    curve.mu = {{Int(0)}};
    SemigroupSpec spec = build_sq(curve);  // empty unit block is accepted
    CHECK(spec.p() == 2);

    SqParams bad = curve;
    bad.powers = {{Int(2)}};
    CHECK_THROWS_AS(build_sq(bad), const invalid_params&);
    bad = curve;
    bad.powers = {{Int(2), Int(4)}};
    CHECK_THROWS_AS(build_sq(bad), const invalid_params&);
    bad = curve;
    bad.q = 2;
    CHECK_THROWS_AS(build_sq(bad), const invalid_params&);
}

TEST_CASE("ten-generator corank-two pattern") {
    SqParams p;
    p.s = 3;
    p.q = 2;
    p.powers = {{Int(2), Int(3)}, {Int(3), Int(4), Int(5)}};
    p.lambda = {{Int(2), Int(3)}};
    p.mu = {{Int(0), Int(1)}, {Int(1), Int(0)}};
    SemigroupSpec spec = build_sq(p);
    REQUIRE(spec.p() == 10);
    CHECK(spec.generators[0] == iv({1, 0, 0}));
    CHECK(spec.generators[6] == iv({2, 1, 0}));
    CHECK(spec.generators[7] == iv({3, 0, 1}));
    CHECK(spec.generators[8] == iv({0, 1, 1}));
    CHECK(spec.generators[9] == iv({0, 1, 1}));
    CHECK(spec.has_duplicates());

    EmbeddingDimBounds b = embedding_dim_bounds(p);
    CHECK(b.r == 10);
    CHECK(b.lower == 8);
    CHECK(embedded_dimension(spec) == 9);

    CHECK(corank(spec) == 2);
    ClassificationResult r = classify(spec);
    CHECK(r.verdict == Verdict::ContainsSq);
    REQUIRE(r.sq.has_value());
    CHECK(r.sq->params == p);
}

TEST_CASE("contains_sq witnesses") {
    SemigroupSpec nf = surface_spec(7, 2, 5);
    auto w = contains_sq(nf, 1);
    REQUIRE(w.has_value());
    CHECK(w->generator_indices == std::vector<std::size_t>{0, 1, 2, 3});

    SemigroupSpec with_free =
        make_spec(2, {iv({1, 0}), iv({0, 2}), iv({0, 3}), iv({1, 1}), iv({5, 7})});
    auto w2 = contains_sq(with_free, 1);
    REQUIRE(w2.has_value());
    CHECK(w2->generator_indices == std::vector<std::size_t>{0, 1, 2, 3});

    SemigroupSpec no_shear = make_spec(2, {iv({2, 0}), iv({3, 0}), iv({0, 2}), iv({0, 3})});
    CHECK_FALSE(contains_sq(no_shear, 2).has_value());

    CHECK_THROWS_AS(contains_sq(make_spec(2, {iv({1, -1})}), 1), const not_prenormalized&);
}

TEST_CASE("pattern round trip on random parameters") {
    std::mt19937_64 rng(20240101);
    for (int iter = 0; iter < 40; ++iter) {
        SqParams p = sample_sq_params(rng);
        SemigroupSpec spec = build_sq(p);
        CHECK(embedding_bound_check(spec));
        CHECK(corank(spec) == p.q);
        EmbeddingDimBounds b = embedding_dim_bounds(p);
        Int embedded(static_cast<long long>(embedded_dimension(spec)));
        CHECK(b.lower <= embedded);
        CHECK(embedded <= b.r);
        CHECK(b.r >= 2 * Int(p.s));

        ClassificationResult r = classify(spec);
        bool two_s_case = p.q == 1 && p.powers[0].size() == 2;
        if (two_s_case) {
            CHECK(r.verdict == Verdict::NormalForm2s);
            REQUIRE(r.two_s.has_value());
            CHECK(r.two_s->n == p.powers[0][0]);
            CHECK(r.two_s->m == p.powers[0][1]);
            std::vector<Int> lams;
            for (const auto& row : p.lambda) lams.push_back(row[0]);
            CHECK(r.two_s->lambdas == lams);
        } else if (p.q == p.s) {
            CHECK(r.verdict == Verdict::Indeterminate);
            REQUIRE(r.sq.has_value());
            CHECK(r.sq->params == p);
        } else {
            CHECK(r.verdict == Verdict::ContainsSq);
            REQUIRE(r.sq.has_value());
            CHECK(r.sq->params == p);
        }
    }
}
