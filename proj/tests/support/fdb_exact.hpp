// Exact chain-rule test bench: random rational-coefficient polynomial pairs
// (G, f), the composed field's derivative tensors by direct symbolic
// differentiation (the oracle), and by the library's partition-sum expansion.
// Variable layout: indices 0..d-1 are the x variables, index d is the scalar
// slot z (or u), index d+1 is the conjugate slot.
#pragma once

#include <random>
#include <vector>

#include "support/exact_poly.hpp"
#include "tamecalc/fdb_expansion.hpp"

namespace exact {

using PolyTensor = tamecalc::symtensor::Tensor<MultiPoly>;

struct FdbCase {
    int d = 1;
    bool complex_slot = false;  // whether g uses the conjugate variable d+1
    MultiPoly g;                // polynomial in (z[, zbar], x)
    MultiPoly f;                // polynomial in x only
};

// G(f(x), x): substitute z -> f, zbar -> conj(f), x -> x.
inline MultiPoly compose_case(const FdbCase& c) {
    std::vector<MultiPoly> repl;
    repl.reserve(c.d + 2);
    for (int i = 0; i < c.d; ++i) repl.push_back(MultiPoly::variable(i));
    repl.push_back(c.f);
    repl.push_back(conj(c.f));
    return c.g.substitute(repl);
}

inline MultiPoly eval_along(const FdbCase& c, const MultiPoly& p) {
    std::vector<MultiPoly> repl;
    repl.reserve(c.d + 2);
    for (int i = 0; i < c.d; ++i) repl.push_back(MultiPoly::variable(i));
    repl.push_back(c.f);
    repl.push_back(conj(c.f));
    return p.substitute(repl);
}

// Order-m derivative tensor of an x-polynomial, built order by order so each
// component is a single derivative of a cached lower-order component.
inline PolyTensor gradient_tensor(int d, const MultiPoly& p, int m) {
    PolyTensor cur(d, 0);
    cur[0] = p;
    for (int order = 1; order <= m; ++order) {
        PolyTensor next(d, order);
        for (std::size_t flat = 0; flat < next.size(); ++flat)
            next[flat] = cur[flat / d].derivative(static_cast<int>(flat % d));
        cur = std::move(next);
    }
    return cur;
}

// Oracle side: differentiate the composed polynomial directly.
inline PolyTensor direct_gradient(const FdbCase& c, int m) {
    return gradient_tensor(c.d, compose_case(c), m);
}

// Expansion side: the library's partition sums over the exact ring, plus the
// trailing pure-x derivative term.
inline PolyTensor expansion_gradient(const FdbCase& c, int m) {
    using tamecalc::symtensor::fdb_sum_complex;
    using tamecalc::symtensor::fdb_sum_real;

    auto g_block = [&](int h, int k, int l) -> PolyTensor {
        MultiPoly base = c.g;
        for (int i = 0; i < h; ++i) base = base.derivative(c.d);
        for (int i = 0; i < k; ++i) base = base.derivative(c.d + 1);
        PolyTensor out = gradient_tensor(c.d, base, l);
        for (std::size_t flat = 0; flat < out.size(); ++flat)
            out[flat] = eval_along(c, out[flat]);
        return out;
    };
    auto f_grad = [&](int s) { return gradient_tensor(c.d, c.f, s); };
    auto f_grad_conj = [&](int s) { return gradient_tensor(c.d, conj(c.f), s); };

    PolyTensor sum(c.d, m);
    if (c.complex_slot) {
        sum = fdb_sum_complex<MultiPoly>(
            m, c.d, [&](int h, int k, int l) { return g_block(h, k, l); }, f_grad, f_grad_conj);
    } else {
        sum = fdb_sum_real<MultiPoly>(
            m, c.d, [&](int j, int l) { return g_block(j, 0, l); }, f_grad);
    }
    return sum + g_block(0, 0, m);
}

inline Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-3, 3);
    std::uniform_int_distribution<int> den(1, 3);
    return Rational(num(rng), den(rng));
}

// Random x-polynomial of total degree <= deg with ~60% term density.
inline MultiPoly random_x_poly(std::mt19937_64& rng, int d, int deg, bool complex_coeffs) {
    std::uniform_real_distribution<double> keep(0.0, 1.0);
    MultiPoly out;
    std::vector<int> expo(d, 0);
    // enumerate exponent vectors with total degree <= deg
    const auto total = [&]() {
        int t = 0;
        for (int e : expo) t += e;
        return t;
    };
    while (true) {
        if (total() <= deg && keep(rng) < 0.6) {
            CRational coeff(random_rational(rng),
                            complex_coeffs ? random_rational(rng) : Rational(0));
            MultiPoly mono = MultiPoly::constant(coeff);
            for (int i = 0; i < d; ++i)
                if (expo[i] > 0) mono = mono * MultiPoly::variable(i).pow(expo[i]);
            out = out + mono;
        }
        int axis = 0;
        while (axis < d) {
            if (++expo[axis] <= deg) break;
            expo[axis] = 0;
            ++axis;
        }
        if (axis == d) break;
    }
    return out;
}

inline FdbCase random_case(std::mt19937_64& rng, int d, bool complex_slot, int scalar_deg,
                           int x_deg, int f_deg) {
    FdbCase c;
    c.d = d;
    c.complex_slot = complex_slot;
    c.f = random_x_poly(rng, d, f_deg, complex_slot);

    std::uniform_real_distribution<double> keep(0.0, 1.0);
    for (int a = 0; a <= scalar_deg; ++a) {
        for (int b = 0; b <= (complex_slot ? scalar_deg : 0); ++b) {
            if (keep(rng) > 0.7) continue;
            MultiPoly block = random_x_poly(rng, d, x_deg, complex_slot);
            if (block.is_zero()) continue;
            MultiPoly mono = MultiPoly(1);
            if (a > 0) mono = mono * MultiPoly::variable(d).pow(a);
            if (b > 0) mono = mono * MultiPoly::variable(d + 1).pow(b);
            c.g = c.g + mono * block;
        }
    }
    // always include a pure scalar-slot term so the top derivative is active
    c.g = c.g + MultiPoly::variable(d).pow(scalar_deg);
    if (complex_slot) c.g = c.g + MultiPoly::variable(d + 1).pow(scalar_deg);
    return c;
}

}  // namespace exact
