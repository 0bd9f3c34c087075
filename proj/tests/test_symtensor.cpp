#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <complex>
#include <numeric>
#include <random>
#include <vector>

#include "support/exact_poly.hpp"
#include "tamecalc/errors.hpp"
#include "tamecalc/symtensor.hpp"

using namespace tamecalc;
using namespace tamecalc::symtensor;
using Complex = std::complex<double>;

namespace {

std::mt19937_64 rng(20240517);

SymTensor random_tensor(int dim, int order) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    SymTensor t(dim, order);
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = {dist(rng), dist(rng)};
    return t;
}

std::vector<int> random_permutation(int m) {
    std::vector<int> sigma(m);
    std::iota(sigma.begin(), sigma.end(), 0);
    std::shuffle(sigma.begin(), sigma.end(), rng);
    return sigma;
}

double rel_diff(const SymTensor& a, const SymTensor& b) {
    const double scale = std::max({norm(a), norm(b), 1e-300});
    return norm(a - b) / scale;
}

}  // namespace

TEST_CASE("tensor product") {
    // order-0 factor acts as a scalar
    SymTensor u(2, 1);
    u[0] = {3.0, 0.0};
    u[1] = {4.0, 0.0};
    const auto scaled = tensor_product(SymTensor::scalar(2, {2.0, 0.0}), u);
    CHECK(scaled.order() == 1);
    CHECK(scaled[0] == Complex{6.0, 0.0});
    CHECK(scaled[1] == Complex{8.0, 0.0});

    SymTensor t(2, 1);
    t[0] = {1.0, 0.0};
    t[1] = {2.0, 0.0};
    const auto outer = tensor_product(t, u);
    CHECK(outer.order() == 2);
    CHECK(outer.at(std::vector<int>{0, 0}) == Complex{3.0, 0.0});
    CHECK(outer.at(std::vector<int>{0, 1}) == Complex{4.0, 0.0});
    CHECK(outer.at(std::vector<int>{1, 0}) == Complex{6.0, 0.0});
    CHECK(outer.at(std::vector<int>{1, 1}) == Complex{8.0, 0.0});

    SymTensor t3(3, 1);
    CHECK_THROWS_AS(tensor_product(t, t3), std::domain_error);

    for (int trial = 0; trial < 500; ++trial) {
        const int dim = 1 + trial % 4;
        const auto a = random_tensor(dim, 1 + trial % 3);
        const auto b = random_tensor(dim, trial % 3);
        CHECK(norm(tensor_product(a, b)) == doctest::Approx(norm(a) * norm(b)).epsilon(1e-12));
    }
}

TEST_CASE("symmetrize") {
    const auto v = random_tensor(3, 1);
    CHECK(rel_diff(symmetrize(v), v) == 0.0);

    SymTensor t(2, 2);
    t.at(std::vector<int>{0, 1}) = {1.0, 0.0};
    const auto s = symmetrize(t);
    CHECK(s.at(std::vector<int>{0, 1}) == Complex{0.5, 0.0});
    CHECK(s.at(std::vector<int>{1, 0}) == Complex{0.5, 0.0});
    CHECK(s.at(std::vector<int>{0, 0}) == Complex{0.0, 0.0});

    for (int trial = 0; trial < 200; ++trial) {
        const auto a = random_tensor(1 + trial % 4, 2 + trial % 2);
        const auto once = symmetrize(a);
        CHECK(rel_diff(symmetrize(once), once) < 1e-15);
    }

    CHECK_THROWS_AS(symmetrize(random_tensor(2, 7)), ResourceError);
}

TEST_CASE("symmetrizer absorbs permutations") {
    for (int trial = 0; trial < 1000; ++trial) {
        const int dim = 1 + trial % 4;
        const int order = 2 + trial % 2;
        const auto t = random_tensor(dim, order);
        const auto sigma = random_permutation(order);
        const auto permuted = permute(t, sigma);
        CHECK(norm(permuted) == doctest::Approx(norm(t)).epsilon(1e-15));  // isometry, exact
        CHECK(rel_diff(symmetrize(permuted), symmetrize(t)) < 1e-12);
    }
}

TEST_CASE("absorption in products") {
    for (int trial = 0; trial < 1000; ++trial) {
        const int dim = 1 + trial % 4;
        const auto t = random_tensor(dim, 1 + trial % 2);
        const auto u = random_tensor(dim, 1 + (trial / 2) % 2);
        const auto lhs = symmetrize(tensor_product(symmetrize(t), u));
        const auto mid = symmetrize(tensor_product(t, symmetrize(u)));
        const auto rhs = symmetrize(tensor_product(t, u));
        CHECK(rel_diff(lhs, rhs) < 1e-12);
        CHECK(rel_diff(mid, rhs) < 1e-12);
    }
}

TEST_CASE("vee product") {
    for (int trial = 0; trial < 1000; ++trial) {
        const int dim = 1 + trial % 4;
        const auto t = random_tensor(dim, 1 + trial % 2);
        const auto u = random_tensor(dim, 1 + (trial / 3) % 2);
        CHECK(rel_diff(vee(t, u), vee(u, t)) < 1e-12);
        CHECK(norm(vee(t, u)) <= norm(t) * norm(u) * (1.0 + 1e-12));
    }
    for (int trial = 0; trial < 1000; ++trial) {
        const int dim = 1 + trial % 3;
        const auto t = random_tensor(dim, 1);
        const auto u = random_tensor(dim, 1 + trial % 2);
        const auto v = random_tensor(dim, 1);
        CHECK(rel_diff(vee(vee(t, u), v), vee(t, vee(u, v))) < 1e-12);
    }
}

TEST_CASE("vee power") {
    const auto t = random_tensor(3, 2);
    const auto one = vee_power(t, 0);
    CHECK(one.order() == 0);
    CHECK(one[0] == Complex{1.0, 0.0});
    CHECK(rel_diff(vee_power(t, 1), symmetrize(t)) < 1e-15);
    CHECK(norm(vee_power(t, 2)) <= norm(t) * norm(t) * (1.0 + 1e-12));
    CHECK_THROWS_AS(vee_power(t, -1), std::domain_error);
}

TEST_CASE("norm") {
    CHECK(norm(SymTensor(3, 2)) == 0.0);
    SymTensor t(2, 1);
    t[0] = {3.0, 0.0};
    t[1] = {4.0, 0.0};
    CHECK(norm(t) == doctest::Approx(5.0));

    // |(ik) (x) ... (x) (ik)| = |k|^m
    const std::vector<double> k = {0.7, -1.3, 2.1};
    const double k_abs = std::sqrt(0.7 * 0.7 + 1.3 * 1.3 + 2.1 * 2.1);
    SymTensor ik(3, 1);
    for (int i = 0; i < 3; ++i) ik[i] = {0.0, k[i]};
    SymTensor power = SymTensor::scalar(3, {1.0, 0.0});
    for (int m = 1; m <= 4; ++m) {
        power = tensor_product(power, ik);
        CHECK(norm(power) == doctest::Approx(std::pow(k_abs, m)).epsilon(1e-13));
    }
}

TEST_CASE("conjugate") {
    SymTensor real(2, 2);
    for (std::size_t i = 0; i < real.size(); ++i) real[i] = {0.5 * i, 0.0};
    CHECK(rel_diff(conjugate(real), real) == 0.0);

    for (int trial = 0; trial < 100; ++trial) {
        const auto t = random_tensor(2 + trial % 3, trial % 4);
        CHECK(rel_diff(conjugate(conjugate(t)), t) == 0.0);
        CHECK(norm(conjugate(t)) == doctest::Approx(norm(t)).epsilon(1e-15));
    }
}

TEST_CASE("component cap") {
    CHECK_THROWS_AS(SymTensor(10, 7), ResourceError);
    CHECK_NOTHROW(SymTensor(10, 6));
}

TEST_CASE("debug serialization") {
    SymTensor t(2, 1);
    t[0] = {1.0, -2.0};
    t[1] = {0.0, 3.5};
    const auto doc = to_json(t);
    CHECK(doc["dim"] == 2);
    CHECK(doc["order"] == 1);
    CHECK(doc["components"][0][0] == 1.0);
    CHECK(doc["components"][0][1] == -2.0);
    CHECK(doc["components"][1][1] == 3.5);
}

TEST_CASE("exact ring: vee is exact on rational tensors") {
    using exact::MultiPoly;
    using PolyTensor = Tensor<MultiPoly>;

    // symmetrize halves the off-diagonal exactly
    PolyTensor t(2, 2);
    t[1] = MultiPoly(1);  // component (0,1)
    const auto s = symmetrize(t);
    CHECK(s[1] == MultiPoly(1) / MultiPoly(2));
    CHECK(s[2] == MultiPoly(1) / MultiPoly(2));
    CHECK(s[0].is_zero());

    // commutativity is exact over the polynomial ring
    PolyTensor a(2, 1), b(2, 1);
    a[0] = MultiPoly::variable(0);
    a[1] = MultiPoly::variable(1) * MultiPoly::variable(1);
    b[0] = MultiPoly(3);
    b[1] = MultiPoly::variable(0) + MultiPoly(1);
    CHECK(vee(a, b) == vee(b, a));
    const auto left = vee(vee(a, b), a);
    const auto right = vee(a, vee(b, a));
    CHECK(left == right);
}
