#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "support/fdb_exact.hpp"

using namespace exact;

namespace {

// classical single-variable spot case: g(u) = u^3, f(x) = x^2 + 1/2
FdbCase cubic_case() {
    FdbCase c;
    c.d = 1;
    c.complex_slot = false;
    c.g = MultiPoly::variable(1).pow(3);
    c.f = MultiPoly::variable(0).pow(2) +
          MultiPoly::constant(CRational(Rational(1, 2), Rational(0)));
    return c;
}

}  // namespace

TEST_CASE("hand-checkable composite derivatives") {
    const FdbCase c = cubic_case();
    // compose = (x^2 + 1/2)^3; first derivative 6x (x^2+1/2)^2
    const MultiPoly composed = compose_case(c);
    const MultiPoly dx = composed.derivative(0);
    const MultiPoly expected =
        MultiPoly(6) * MultiPoly::variable(0) *
        (MultiPoly::variable(0).pow(2) +
         MultiPoly::constant(CRational(Rational(1, 2), Rational(0)))).pow(2);
    CHECK(dx == expected);

    for (int m = 1; m <= 4; ++m) CHECK(direct_gradient(c, m) == expansion_gradient(c, m));
}

TEST_CASE("first-order expansion is the chain rule") {
    std::mt19937_64 rng(777);
    for (int d = 1; d <= 3; ++d) {
        const FdbCase c = random_case(rng, d, false, 3, 2, 2);
        // expansion at m=1: dG/du (f, x) grad f + grad_x G(f, x)
        const auto expansion = expansion_gradient(c, 1);
        const MultiPoly du = eval_along(c, c.g.derivative(d));
        PolyTensor manual(d, 1);
        for (int i = 0; i < d; ++i)
            manual[i] = du * c.f.derivative(i) + eval_along(c, c.g.derivative(i));
        CHECK(expansion == manual);
    }
}

TEST_CASE("second-order complex expansion carries the mixed factor 2") {
    // G = z zbar, f arbitrary: d^2/dx^2 (f fbar) must produce the cross term
    // 2 f' conj(f'), i.e. the pair ((1),(1)) coefficient.
    std::mt19937_64 rng(778);
    FdbCase c;
    c.d = 1;
    c.complex_slot = true;
    c.g = MultiPoly::variable(1) * MultiPoly::variable(2);
    c.f = random_x_poly(rng, 1, 2, true);
    CHECK(direct_gradient(c, 2) == expansion_gradient(c, 2));
}

TEST_CASE("random rational pairs, real scalar slot") {
    std::mt19937_64 rng(20240518);
    for (int d = 1; d <= 3; ++d) {
        const int scalar_deg = d == 1 ? 4 : (d == 2 ? 3 : 2);
        for (int m = 1; m <= 4; ++m) {
            for (int trial = 0; trial < 4; ++trial) {
                const FdbCase c = random_case(rng, d, false, scalar_deg, 2, 2);
                CHECK(direct_gradient(c, m) == expansion_gradient(c, m));
            }
        }
    }
}

TEST_CASE("random rational pairs, conjugate slot") {
    std::mt19937_64 rng(20240519);
    for (int d = 1; d <= 3; ++d) {
        const int scalar_deg = d == 1 ? 3 : 2;
        for (int m = 1; m <= 4; ++m) {
            for (int trial = 0; trial < 4; ++trial) {
                const FdbCase c = random_case(rng, d, true, scalar_deg, 2, 2);
                CHECK(direct_gradient(c, m) == expansion_gradient(c, m));
            }
        }
    }
}

TEST_CASE("exact symmetrized product rule on polynomial tensor fields") {
    std::mt19937_64 rng(20240520);
    for (int trial = 0; trial < 50; ++trial) {
        const int d = 1 + trial % 3;
        const int ot = trial % 3;
        const int ou = (trial / 3) % 2;
        PolyTensor t(d, ot), u(d, ou);
        for (std::size_t i = 0; i < t.size(); ++i) t[i] = random_x_poly(rng, d, 2, true);
        for (std::size_t i = 0; i < u.size(); ++i) u[i] = random_x_poly(rng, d, 2, true);

        auto grad_s = [&](const PolyTensor& a) {
            PolyTensor out(d, a.order() + 1);
            std::vector<int> idx(a.order() + 1);
            for (std::size_t flat = 0; flat < out.size(); ++flat) {
                out.unflatten(flat, idx);
                std::vector<int> head(idx.begin(), idx.end() - 1);
                out[flat] = a.at(head).derivative(idx.back());
            }
            return tamecalc::symtensor::symmetrize(out);
        };

        const PolyTensor lhs = grad_s(tamecalc::symtensor::vee(t, u));
        const PolyTensor rhs = tamecalc::symtensor::vee(grad_s(t), u) +
                               tamecalc::symtensor::vee(t, grad_s(u));
        CHECK(lhs == rhs);
    }
}
