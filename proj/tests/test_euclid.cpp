#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <torisol/errors.hpp>
#include <torisol/euclid.hpp>

#include <numeric>

using namespace torisol;

namespace {

std::vector<Int> ints(std::initializer_list<long long> vals) {
    std::vector<Int> v;
    for (long long x : vals) v.push_back(Int(x));
    return v;
}

template <typename F>
void for_coprime_pairs(long long max_m, F&& fn) {
    for (long long m = 3; m <= max_m; ++m)
        for (long long n = 2; n < m; ++n)
            if (std::gcd(n, m) == 1) fn(Int(n), Int(m));
}

}  // namespace

TEST_CASE("successive division of 225 and 328") {
    EuclidTrace t = successive_division(225, 328);
    CHECK(t.h == ints({1, 2, 5, 2, 2, 1, 2}));
    CHECK(t.r == ints({225, 103, 19, 8, 3, 2, 1}));
    CHECK(t.q() == 6);
    CHECK(t.valid());
}

TEST_CASE("successive division of 2 and 3") {
    EuclidTrace t = successive_division(2, 3);
    CHECK(t.h == ints({1, 2}));
    CHECK(t.r == ints({2, 1}));
    CHECK(t.valid());
}

TEST_CASE("remainder one after the first step gives q = 1") {
    for (long long n : {2, 3, 7, 50})
        for (long long h0 : {1, 2, 5}) {
            EuclidTrace t = successive_division(n, h0 * n + 1);
            CHECK(t.q() == 1);
            CHECK(t.h == ints({h0, n}));
            CHECK(t.r == ints({n, 1}));
        }
}

TEST_CASE("successive division rejects bad input") {
    CHECK_THROWS_AS(successive_division(1, 5), const invalid_params&);
    CHECK_THROWS_AS(successive_division(4, 2), const invalid_params&);
    CHECK_THROWS_AS(successive_division(2, 4), const invalid_params&);
    CHECK_THROWS_AS(successive_division(6, 9), const invalid_params&);
}

TEST_CASE("exponent rows reproduce the worked 225/328 table") {
    EuclidTrace t = successive_division(225, 328);
    auto rows = exponent_sequences(t);
    REQUIRE(rows.size() == 14);  // sum of h_1..h_6

    auto row = [&](int k, int j) {
        for (const ExponentRow& r : rows)
            if (r.k == k && r.j == j) return r;
        FAIL("row not found");
        return rows[0];
    };
    for (int j = 1; j <= 2; ++j) {
        CHECK(row(1, j).a == 225 - 103 * j);
        CHECK(row(1, j).b == j);
        CHECK(row(1, j).d == j + 1);
    }
    CHECK(row(5, 1).a == 1);
    CHECK(row(5, 1).b == 83);
    CHECK(row(5, 1).d == 121);
    CHECK(row(6, 2).a == 0);
    CHECK(row(6, 2).b == 225);
    CHECK(row(6, 2).d == 328);
}

TEST_CASE("defining identity, boundary collapse and monotonicity") {
    for_coprime_pairs(500, [](const Int& n, const Int& m) {
        EuclidTrace t = successive_division(n, m);
        auto rows = exponent_sequences(t);
        Int prev_b = 0;
        int prev_k = 0, prev_j = 0;
        for (const ExponentRow& r : rows) {
            CHECK(r.a >= 0);
            if (r.k % 2 == 1)
                CHECK(n * r.d - r.a == m * r.b);
            else
                CHECK(n * r.d + r.a == m * r.b);
            // b strictly increases in lexicographic (k, j) order
            CHECK(((r.k > prev_k) || (r.k == prev_k && r.j > prev_j)));
            CHECK(r.b > prev_b);
            prev_b = r.b;
            prev_k = r.k;
            prev_j = r.j;
            // boundary collapse at j = h_k
            if (r.j == t.h_at(r.k)) {
                CHECK(r.a == t.r_at(r.k + 1));
                if (r.k == t.q()) {
                    CHECK(r.a == 0);
                    CHECK(r.d == m);
                    CHECK(r.b == n);
                }
            }
        }
    });
}

TEST_CASE("c sequence seeds and identity") {
    EuclidTrace t = successive_division(225, 328);
    CSequence c = c_sequence(t);
    REQUIRE(c.values.size() == 6);
    // the recursion with seeds c_{-1}=1, c_0=0 forces c_1 = 1 and c_2 = h_2
    CHECK(c.at(1) == 1);
    CHECK(c.at(2) == t.h_at(2));
    CHECK(c.values == ints({1, 5, 11, 27, 38, 103}));
    CHECK(c_sequence_identity_holds(t));

    // r_1 b_{1,h_1} = r_1 h_1 = n - r_2
    CHECK(t.r_at(1) * t.h_at(1) == t.n - t.r_at(2));

    for_coprime_pairs(200, [](const Int& n, const Int& m) {
        EuclidTrace t2 = successive_division(n, m);
        CHECK(c_sequence_identity_holds(t2));
        CSequence c2 = c_sequence(t2);
        CHECK(c2.at(1) == 1);
        if (t2.q() >= 2) CHECK(c2.at(2) == t2.h_at(2));
    });
}

TEST_CASE("minimal Diophantine solutions from the worked example") {
    DiophantineSolution s1 = minimal_diophantine(225, 328, 0, -1);
    CHECK(s1.d == 1);
    CHECK(s1.a == 225);
    CHECK_FALSE(s1.degenerate);

    DiophantineSolution s2 = minimal_diophantine(225, 328, 1, 1);
    CHECK(s2.d == 1);
    CHECK(s2.a == 103);

    DiophantineSolution s3 = minimal_diophantine(225, 328, 1, -1);
    CHECK(s3.d == 2);
    CHECK(s3.a == 122);

    DiophantineSolution degen = minimal_diophantine(225, 328, 0, 1);
    CHECK(degen.degenerate);
    CHECK(degen.d == 0);
    CHECK(degen.a == 0);
}

TEST_CASE("minimal Diophantine agrees with brute force") {
    // independent oracle: scan a = 0..n-1 for the smallest nonnegative solution
    for (long long m = 3; m <= 100; ++m) {
        for (long long n = 2; n < m; ++n) {
            if (std::gcd(n, m) != 1) continue;
            for (long long b0 = 1; b0 <= 2 * m; ++b0) {
                for (int l : {1, -1}) {
                    long long best_a = -1, best_d = -1;
                    for (long long a = 0; a < n; ++a) {
                        long long rhs = m * b0 - l * a;
                        if (rhs >= 0 && rhs % n == 0) {
                            best_a = a;
                            best_d = rhs / n;
                            break;
                        }
                    }
                    REQUIRE(best_a >= 0);
                    DiophantineSolution sol = minimal_diophantine(n, m, b0, l);
                    CHECK(sol.a == best_a);
                    CHECK(sol.d == best_d);
                    CHECK(sol.d * n + l * sol.a == m * b0);
                }
            }
        }
    }
}

TEST_CASE("solution family shifts") {
    DiophantineSolution base = minimal_diophantine(225, 328, 1, 1);
    CHECK(solution_family(base, 225, 0) == base);

    DiophantineSolution up = solution_family(base, 225, 1);
    CHECK(up.d == 0);
    CHECK(up.a == 328);
    CHECK(225 * up.d + up.a == 328);

    DiophantineSolution neg = minimal_diophantine(225, 328, 1, -1);
    DiophantineSolution moved = solution_family(neg, 225, 1);
    CHECK(moved.d == 3);
    CHECK(moved.a == 347);
    CHECK(225 * moved.d - moved.a == 328);

    CHECK_THROWS_AS(solution_family(up, 225, 1), const out_of_range_shift&);
}
