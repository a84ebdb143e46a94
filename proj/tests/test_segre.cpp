#include <catch2/catch_amalgamated.hpp>
#include <cohp1/segre.hpp>

#include <algorithm>
#include <set>
#include <vector>

using namespace cohp1;

TEST_CASE("degree-gain upper bounds at frozen parameters") {
    CHECK(r_upper_bound(SegreParams{6, 2, 4, 1}) == 3);
    CHECK(r_upper_bound(SegreParams{6, 2, 4, 2}) == 2);
    CHECK(r_upper_bound(SegreParams{6, 2, 4, 3}) == 0);
    CHECK(r_upper_bound(SegreParams{6, 2, 4, 4}) == 0);
    CHECK(r_upper_bound(SegreParams{3, 2, 2, 1}) == 1);
    CHECK(r_upper_bound(SegreParams{4, 2, 3, 1}) == 2);
    CHECK(r_upper_bound(SegreParams{4, 2, 3, 2}) == 0);
    CHECK(r_upper_bound(SegreParams{2, 0, 1, 1}) == 1);
    CHECK(r_upper_bound(SegreParams{5, 1, 4, 4}) == 0);
    CHECK(r_upper_bound(SegreParams{5, 0, 4, 4}) == 1);
    CHECK(r_upper_bound(SegreParams{5, 1, 2, 1}) == 3);
    CHECK(r_upper_bound(SegreParams{5, 1, 2, 2}) == 1);
}

TEST_CASE("bound structure across a parameter sweep") {
    for (long long n = 2; n <= 12; ++n)
        for (long long k = 1; k < n; ++k)
            for (long long a = 0; a <= 8; ++a) {
                Int prev = -1;
                for (long long q = 1; q <= k; ++q) {
                    const Int b = r_upper_bound(SegreParams{n, a, k, q});
                    CHECK(b >= 0);
                    // At q = k the radicand is a perfect square and the bound
                    // collapses to max(n - k(a+1), 0).
                    if (q == k) {
                        const Int A = n - k * (a + 1);
                        CHECK(b == (A > 0 ? A : Int(0)));
                    }
                    // Larger a never increases the bound.
                    const Int next_a = r_upper_bound(SegreParams{n, a + 1, k, q});
                    CHECK(next_a <= b);
                    (void)prev;
                    prev = b;
                }
            }
}

TEST_CASE("bound parameter validation") {
    CHECK_THROWS_AS(r_upper_bound(SegreParams{4, 2, 3, 0}), std::domain_error);
    CHECK_THROWS_AS(r_upper_bound(SegreParams{4, 2, 3, 4}), std::domain_error);
    CHECK_THROWS_AS(r_upper_bound(SegreParams{4, 2, 4, 1}), std::domain_error);
    CHECK_THROWS_AS(r_upper_bound(SegreParams{4, -1, 3, 1}), std::domain_error);
    CHECK_THROWS_AS(zero_plus_exists(4, 2, 0), std::domain_error);
    CHECK_THROWS_AS(zero_plus_exists(4, 2, 4), std::domain_error);
    CHECK_THROWS_AS(zero_plus_exists(4, -1, 2), std::domain_error);
    CHECK_THROWS_AS(stability_bound_check(4, 2, 4), std::domain_error);
}

TEST_CASE("balanced existence at small alpha is the sign of the expected dimension") {
    for (long long n = 2; n <= 15; ++n)
        for (long long k = 1; k < n; ++k)
            for (long long a = 0; a <= 8; ++a) {
                INFO("n=" << n << " a=" << a << " k=" << k);
                CHECK(zero_plus_exists(n, a, k) == (beta(SystemType{n, n * a, k}) >= 0));
            }
}

TEST_CASE("stability certificates at frozen parameters") {
    const StabilityCheck good = stability_bound_check(6, 2, 4);
    CHECK(good.ok);
    REQUIRE(good.witnesses.size() == 4);
    CHECK(good.witnesses[0].bound == 3);
    CHECK(good.witnesses[0].threshold == Rational(9, 2));
    CHECK(good.witnesses[3].bound == 0);
    CHECK(good.witnesses[3].threshold == Rational(0));

    const StabilityCheck bad = stability_bound_check(5, 1, 2);
    CHECK_FALSE(bad.ok);
    REQUIRE(bad.witnesses.size() == 2);
    CHECK(bad.witnesses[0].bound == 3);         // needs < 5/2
    CHECK_FALSE(bad.witnesses[0].ok);
    CHECK(bad.witnesses[1].bound == 1);         // needs 0 at q = k
    CHECK_FALSE(bad.witnesses[1].ok);
}

TEST_CASE("balanced existence implies the per-subspace certificates") {
    for (long long n = 2; n <= 15; ++n)
        for (long long k = 1; k < n; ++k)
            for (long long a = 0; a <= 8; ++a) {
                if (!zero_plus_exists(n, a, k)) continue;
                INFO("n=" << n << " a=" << a << " k=" << k);
                CHECK(stability_bound_check(n, a, k).ok);
            }
}

TEST_CASE("modular arithmetic helpers") {
    CHECK(fp::pow_mod(2, 10, 1000) == 24);
    CHECK(fp::pow_mod(5, 0, 7) == 1);
    CHECK(fp::pow_mod(7, 100, 101) == 1);  // Fermat
    CHECK(fp::is_prime(2));
    CHECK(fp::is_prime(101));
    CHECK(fp::is_prime(103));
    CHECK(fp::is_prime(7919));
    CHECK(fp::is_prime(2147483647));
    CHECK_FALSE(fp::is_prime(1));
    CHECK_FALSE(fp::is_prime(100));
    CHECK_FALSE(fp::is_prime(7917));
    CHECK_FALSE(fp::is_prime(2147483647LL * 2 - 1));  // 4294967293 = 9241 * 464773
}

TEST_CASE("rank over a prime field") {
    using fp::Matrix;
    CHECK(fp::rank(Matrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 5) == 3);
    CHECK(fp::rank(Matrix{{1, 2}, {2, 4}}, 5) == 1);
    CHECK(fp::rank(Matrix{{1, 2}, {2, 4}}, 3) == 1);
    CHECK(fp::rank(Matrix{{1, 1}, {1, 0}}, 2) == 2);
    CHECK(fp::rank(Matrix{{0, 0}, {0, 0}}, 7) == 0);
    CHECK(fp::rank(Matrix{{2, 4, 6}}, 101) == 1);
    // Singular over every field; rank 2 away from characteristic 3, where the
    // rows all reduce to (1, 2, 0).
    CHECK(fp::rank(Matrix{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}, 101) == 2);
    CHECK(fp::rank(Matrix{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}, 3) == 1);
}

TEST_CASE("subspace counting") {
    CHECK(fp::subspace_count(3, 1, 2) == 7);
    CHECK(fp::subspace_count(4, 2, 2) == 35);
    CHECK(fp::subspace_count(3, 2, 3) == 13);
    CHECK(fp::subspace_count(3, 1, 101) == 10303);
    CHECK(fp::subspace_count(3, 2, 101) == 10303);  // duality q <-> k-q
    CHECK(fp::subspace_count(2, 1, 101) == 102);
    CHECK(fp::subspace_count(4, 4, 7) == 1);
}

TEST_CASE("echelon representatives enumerate each subspace once") {
    struct Case {
        int k, q;
        std::int64_t p;
    };
    for (const Case c : {Case{3, 1, 2}, Case{3, 2, 3}, Case{4, 2, 2}, Case{2, 1, 101}}) {
        std::vector<fp::Matrix> reps;
        fp::for_each_subspace_rep(c.k, c.q, c.p, [&](const fp::Matrix& m) { reps.push_back(m); });
        INFO("k=" << c.k << " q=" << c.q << " p=" << c.p);
        CHECK(Int(reps.size()) == fp::subspace_count(c.k, c.q, c.p));

        std::set<fp::Matrix> distinct(reps.begin(), reps.end());
        CHECK(distinct.size() == reps.size());

        for (const fp::Matrix& m : reps) {
            CHECK(m.size() == std::size_t(c.k));
            CHECK(m[0].size() == std::size_t(c.q));
            CHECK(fp::rank(m, c.p) == c.q);
        }

        // Distinct representatives span distinct subspaces: stacking two of
        // them side by side must exceed rank q.
        for (std::size_t i = 0; i < reps.size(); ++i)
            for (std::size_t j = i + 1; j < reps.size(); ++j) {
                fp::Matrix joined(c.k);
                for (int r = 0; r < c.k; ++r) {
                    joined[r] = reps[i][r];
                    joined[r].insert(joined[r].end(), reps[j][r].begin(), reps[j][r].end());
                }
                CHECK(fp::rank(joined, c.p) > c.q);
            }
    }
}

TEST_CASE("finite-field oracle on frozen seeds") {
    const OracleParams op{101, 7, 8};

    SECTION("rank three, two sections") {
        const OracleRun q1 = sample_delta_q(SegreParams{3, 2, 2, 1}, op);
        CHECK(q1.exhaustive);
        CHECK(q1.reps_per_trial == 102);
        REQUIRE(q1.delta.size() == 8);
        std::vector<int> sorted = q1.delta;
        std::sort(sorted.begin(), sorted.end());
        CHECK(sorted == std::vector<int>{2, 2, 2, 2, 2, 2, 2, 3});
        // delta_q >= n - R holds on every trial: R(3,2,2,1) = 1.
        for (int d : q1.delta) CHECK(d >= 2);

        // 101^4 overflows the exhaustive budget, so q = 2 samples even
        // though the full space is the only subspace; every draw spans it
        // and the observed delta is exact.
        const OracleRun q2 = sample_delta_q(SegreParams{3, 2, 2, 2}, op);
        CHECK_FALSE(q2.exhaustive);
        CHECK(q2.reps_per_trial == kOracleSampleReps);
        for (int d : q2.delta) CHECK(d == 3);
    }

    SECTION("rank four, three sections") {
        // 101^3 just overflows the exhaustive budget: sampled mode.  The
        // lines realizing delta_1 = 2 are scarce, so most trials observe 3.
        const OracleRun q1 = sample_delta_q(SegreParams{4, 2, 3, 1}, op);
        CHECK_FALSE(q1.exhaustive);
        CHECK(q1.reps_per_trial == kOracleSampleReps);
        std::vector<int> sorted = q1.delta;
        std::sort(sorted.begin(), sorted.end());
        CHECK(sorted == std::vector<int>{2, 3, 3, 3, 3, 3, 3, 3});

        // R(4,2,3,2) = 0, so every subspace already moves maximally.
        const OracleRun q2 = sample_delta_q(SegreParams{4, 2, 3, 2}, op);
        CHECK_FALSE(q2.exhaustive);
        for (int d : q2.delta) CHECK(d == 4);

        const OracleRun q3 = sample_delta_q(SegreParams{4, 2, 3, 3}, op);
        CHECK(q3.reps_per_trial == kOracleSampleReps);
        for (int d : q3.delta) CHECK(d == 4);
    }

    SECTION("determinism") {
        const OracleRun first = sample_delta_q(SegreParams{4, 2, 3, 1}, op);
        const OracleRun second = sample_delta_q(SegreParams{4, 2, 3, 1}, op);
        CHECK(first.delta == second.delta);
        const OracleRun other_seed = sample_delta_q(SegreParams{4, 2, 3, 1}, {101, 8, 8});
        CHECK(other_seed.delta.size() == first.delta.size());
    }
}

TEST_CASE("oracle falls back to sampling over a huge field") {
    const OracleRun run = sample_delta_q(SegreParams{3, 2, 2, 1}, {2147483647, 5, 2});
    CHECK_FALSE(run.exhaustive);
    CHECK(run.reps_per_trial == kOracleSampleReps);
    REQUIRE(run.delta.size() == 2);
    for (int d : run.delta) {
        CHECK(d >= 2);
        CHECK(d <= 3);
    }
    const OracleRun again = sample_delta_q(SegreParams{3, 2, 2, 1}, {2147483647, 5, 2});
    CHECK(again.delta == run.delta);
}

TEST_CASE("oracle parameter validation") {
    CHECK_THROWS_AS(sample_delta_q(SegreParams{9, 2, 3, 1}, OracleParams{}), std::domain_error);
    CHECK_THROWS_AS(sample_delta_q(SegreParams{4, 7, 3, 1}, OracleParams{}), std::domain_error);
    CHECK_THROWS_AS(sample_delta_q(SegreParams{4, 2, 3, 1}, {101, 0, 0}), std::domain_error);
    CHECK_THROWS_AS(sample_delta_q(SegreParams{4, 2, 3, 1}, {97, 0, 1}), std::domain_error);
    CHECK_THROWS_AS(sample_delta_q(SegreParams{4, 2, 3, 1}, {102, 0, 1}), std::domain_error);
    CHECK_NOTHROW(sample_delta_q(SegreParams{4, 2, 3, 3}, {103, 0, 1}));
}
