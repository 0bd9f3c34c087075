#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <vector>

#include "support/series_oracle.hpp"
#include "tamecalc/combinatorics.hpp"

using namespace tamecalc::combinatorics;

TEST_CASE("stirling numbers") {
    CHECK(stirling2(1, 1) == 1);
    CHECK(stirling2(2, 4) == 7);
    CHECK(stirling2(2, 6) == 31);
    CHECK(stirling2(3, 6) == 90);
    CHECK(stirling2(4, 6) == 65);
    CHECK(stirling2(5, 6) == 15);
    CHECK_THROWS_AS(stirling2(0, 3), std::domain_error);
    CHECK_THROWS_AS(stirling2(4, 3), std::domain_error);

    StirlingTable table(12);
    for (int m = 1; m <= 12; ++m) {
        CHECK(table.value(1, m) == 1);
        CHECK(table.value(m, m) == 1);
    }
    // recurrence spot check: S^j_{m+1} = S^{j-1}_m + j S^j_m
    for (int m = 2; m <= 11; ++m)
        for (int j = 2; j <= m; ++j)
            CHECK(table.value(j, m + 1) ==
                  table.value(j - 1, m) + BigInt(j) * table.value(j, m));
}

TEST_CASE("pm coefficient routes") {
    CHECK(pm_coeff_recursive(1, 1, 0) == 1);
    CHECK(pm_coeff_recursive(4, 3, 1) == 4);
    CHECK(pm_coeff_recursive(6, 2, 0) == 31);
    CHECK(pm_coeff_explicit(2, 1, 1) == 2);
    CHECK(pm_coeff_explicit(4, 3, 1) == 4);
    for (int m = 1; m <= 12; ++m) CHECK(pm_coeff_explicit(m, m, 0) == 1);

    CHECK_THROWS_AS(pm_coeff_recursive(3, 4, 0), std::domain_error);
    CHECK_THROWS_AS(pm_coeff_explicit(3, 1, 3), std::domain_error);
    CHECK_THROWS_AS(pm_coeff_stirling(0, 1, 0), std::domain_error);
}

TEST_CASE("triple agreement of coefficient routes up to order 12") {
    for (int m = 1; m <= 12; ++m)
        for (int j = 1; j <= m; ++j)
            for (int l = 0; l <= m - j; ++l) {
                const BigInt a = pm_coeff_recursive(m, j, l);
                const BigInt b = pm_coeff_explicit(m, j, l);
                const BigInt c = pm_coeff_stirling(m, j, l);
                CHECK(a == b);
                CHECK(b == c);
                CHECK(a > 0);
            }
}

TEST_CASE("generating-series oracle agrees with the table") {
    for (int m = 1; m <= 9; ++m)
        for (int j = 1; j <= m; ++j)
            for (int l = 0; l <= m - j; ++l)
                CHECK(exact::pm_coeff_series_oracle(m, j, l) == pm_coeff_stirling(m, j, l));
}

TEST_CASE("polynomial table") {
    const auto p2 = PmPolynomial::build(2);
    CHECK(p2.coeff(2, 0) == 1);
    CHECK(p2.coeff(1, 0) == 1);
    CHECK(p2.coeff(1, 1) == 2);
    CHECK(p2.coeffs().size() == 3);

    const auto p1 = PmPolynomial::build(1);
    CHECK(p1.coeff(1, 0) == 1);
    CHECK(p1.coeffs().size() == 1);

    CHECK(PmPolynomial::build(5).coeff(3, 1) == 30);
    CHECK_THROWS_AS(PmPolynomial::build(0), std::domain_error);
    CHECK_THROWS_AS(p2.coeff(1, 2), std::domain_error);
}

TEST_CASE("polynomial json uses decimal strings") {
    const auto doc = PmPolynomial::build(4).to_json();
    CHECK(doc["m"] == 4);
    bool found = false;
    for (const auto& entry : doc["coeffs"])
        if (entry["j"] == 3 && entry["l"] == 1) {
            CHECK(entry["value"] == "4");
            found = true;
        }
    CHECK(found);
}

TEST_CASE("pm_evaluate") {
    const auto p1 = PmPolynomial::build(1);
    const double c = 1.7;
    CHECK(pm_evaluate(p1, [&](int, int) { return c; }, 0.3) == doctest::Approx(c * 0.3));

    const auto p4 = PmPolynomial::build(4);
    CHECK(pm_evaluate(p4, [](int, int) { return 0.0; }, 2.0) == 0.0);

    // monomial substitution nu_j0 = J!/(J-j)!, rho = 1 collapses to J^m
    for (int J = 1; J <= 8; ++J) {
        for (int m = 1; m <= 8; ++m) {
            const auto poly = PmPolynomial::build(m);
            auto nu = [J](int j, int l) -> double {
                if (l != 0 || j > J) return 0.0;
                double ff = 1.0;
                for (int i = 0; i < j; ++i) ff *= J - i;
                return ff;
            };
            CHECK(pm_evaluate(poly, nu, 1.0) ==
                  doctest::Approx(std::pow(double(J), m)).epsilon(1e-12));
        }
    }

    CHECK_THROWS_AS(pm_evaluate(p1, [](int, int) { return 1.0; }, -1.0), std::domain_error);
    CHECK_THROWS_AS(pm_evaluate(p1, [](int, int) { return -1.0; }, 1.0), std::domain_error);
}

TEST_CASE("partition enumeration") {
    for (int w = 1; w <= 9; ++w) {
        const auto single = enumerate_Djw(1, w);
        REQUIRE(single.size() == 1);
        CHECK(single[0].part(w) == 1);
        CHECK(single[0].length() == 1);
        CHECK(single[0].weight() == w);
    }

    const auto d23 = enumerate_Djw(2, 3);
    REQUIRE(d23.size() == 1);
    CHECK(d23[0] == PartitionSeq({1, 1}));

    const auto d24 = enumerate_Djw(2, 4);
    REQUIRE(d24.size() == 2);
    CHECK(d24[0] == PartitionSeq({0, 2}));
    CHECK(d24[1] == PartitionSeq({1, 0, 1}));

    CHECK_THROWS_AS(enumerate_Djw(3, 2), std::domain_error);
    CHECK_THROWS_AS(enumerate_Djw(0, 2), std::domain_error);

    // never empty across the admissible range
    for (int w = 1; w <= 12; ++w)
        for (int j = 1; j <= w; ++j) CHECK(!enumerate_Djw(j, w).empty());
}

TEST_CASE("partition pair enumeration") {
    const auto d112 = enumerate_Dhkw(1, 1, 2);
    REQUIRE(d112.size() == 1);
    CHECK(d112[0].p == PartitionSeq({1}));
    CHECK(d112[0].q == PartitionSeq({1}));

    // q forced to the empty sequence when k = 0
    for (int w = 1; w <= 8; ++w)
        for (int h = 1; h <= w; ++h) {
            const auto pairs = enumerate_Dhkw(h, 0, w);
            const auto plain = enumerate_Djw(h, w);
            REQUIRE(pairs.size() == plain.size());
            for (std::size_t i = 0; i < pairs.size(); ++i) {
                CHECK(pairs[i].p == plain[i]);
                CHECK(pairs[i].q == PartitionSeq{});
            }
            // mirror case
            const auto mirrored = enumerate_Dhkw(0, h, w);
            REQUIRE(mirrored.size() == plain.size());
            for (std::size_t i = 0; i < mirrored.size(); ++i) {
                CHECK(mirrored[i].q == plain[i]);
                CHECK(mirrored[i].p == PartitionSeq{});
            }
        }

    CHECK_THROWS_AS(enumerate_Dhkw(0, 0, 2), std::domain_error);
    CHECK_THROWS_AS(enumerate_Dhkw(2, 1, 2), std::domain_error);
    CHECK_THROWS_AS(enumerate_Dhkw(-1, 1, 2), std::domain_error);

    for (int w = 1; w <= 9; ++w)
        for (int h = 0; h <= w; ++h)
            for (int k = (h == 0) ? 1 : 0; h + k <= w; ++k)
                CHECK(!enumerate_Dhkw(h, k, w).empty());
}

TEST_CASE("chain-rule coefficients") {
    CHECK(fdb_coeff_real(3, PartitionSeq({3})) == 1);
    CHECK(fdb_coeff_real(3, PartitionSeq({1, 1})) == 3);
    CHECK(fdb_coeff_real(4, PartitionSeq({0, 2})) == 3);
    CHECK_THROWS_AS(fdb_coeff_real(2, PartitionSeq({3})), std::domain_error);
    CHECK_THROWS_AS(fdb_coeff_real(2, PartitionSeq{}), std::domain_error);

    CHECK(fdb_coeff_complex(2, {PartitionSeq({1}), PartitionSeq({1})}) == 2);
    CHECK(fdb_coeff_complex(3, {PartitionSeq({1}), PartitionSeq({0, 1})}) == 3);
    // k = 0 reduction
    for (int m = 1; m <= 6; ++m)
        for (int j = 1; j <= m; ++j)
            for (const auto& p : enumerate_Djw(j, m))
                CHECK(fdb_coeff_complex(m, {p, PartitionSeq{}}) == fdb_coeff_real(m, p));

    // positivity across the index set
    for (int m = 1; m <= 8; ++m)
        for (int w = 1; w <= m; ++w)
            for (int j = 1; j <= w; ++j)
                for (const auto& p : enumerate_Djw(j, w)) CHECK(fdb_coeff_real(m, p) >= 1);
}

TEST_CASE("sum identities") {
    for (int m = 1; m <= 7; ++m) {
        const auto report = check_sum_identities(m);
        CHECK(report.all_pass());
        CHECK(report.failures.empty());
    }
    // m=3, j=2, l=0: D_{2,3} = {(1,1)}, so the sum is 3 = P_320
    BigInt sum = 0;
    for (const auto& p : enumerate_Djw(2, 3)) sum += fdb_coeff_real(3, p);
    CHECK(sum == pm_coeff_stirling(3, 2, 0));
    // m=2, h=k=1, l=0: single pair with coefficient 2 = binom(2,1) P_220
    BigInt pair_sum = 0;
    for (const auto& pq : enumerate_Dhkw(1, 1, 2)) pair_sum += fdb_coeff_complex(2, pq);
    CHECK(pair_sum == binomial(2, 1) * pm_coeff_stirling(2, 2, 0));
}

TEST_CASE("bell polynomials") {
    CHECK(bell_polynomial_value(1, std::vector<double>{2.5}) == doctest::Approx(2.5));
    CHECK(bell_polynomial_value(2, std::vector<double>{1.0, 1.0}) == doctest::Approx(2.0));
    CHECK(bell_polynomial_value(3, std::vector<double>{1.0, 1.0, 1.0}) == doctest::Approx(5.0));
    CHECK_THROWS_AS(bell_polynomial_value(3, std::vector<double>{1.0}), std::domain_error);

    // row sums of the coefficient table are Bell numbers
    for (int m = 1; m <= 12; ++m) {
        BigInt row = 0;
        for (int j = 1; j <= m; ++j) row += pm_coeff_stirling(m, j, 0);
        CHECK(row == bell_number(m));
        const std::vector<double> ones(m, 1.0);
        CHECK(bell_polynomial_value(m, ones) ==
              doctest::Approx(static_cast<double>(bell_number(m))).epsilon(1e-12));
    }
}
