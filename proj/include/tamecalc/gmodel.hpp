#pragma once

#include <complex>
#include <limits>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "tamecalc/symtensor.hpp"

namespace tamecalc::gmodel {

// u^J on the real line, J >= 1.
struct RealMonomial {
    int degree = 1;
};

// z^H conj(z)^K on the complex plane, H + K >= 1.
struct ComplexMonomial {
    int h_power = 1;
    int k_power = 0;
};

// sinh(u) on the real line.
struct Sinh {};

// sum_k coeffs[k] u^k; derivative suprema use the coefficient triangle
// inequality, an upper bound that may not be sharp but is sound for the
// inequality direction being certified.
struct RealPolynomial {
    std::vector<double> coeffs;
};

// u * psi(x) with the fixed profile psi(x) = exp(-|x|^2 / 2) on R^dim.
struct SeparableLinear {
    int dim = 1;
};

// A composition-function description with analytically controlled derivative
// suprema, plus pointwise evaluation and exact scalar-slot derivatives.
class GModel {
public:
    using Kind = std::variant<RealMonomial, ComplexMonomial, Sinh, RealPolynomial, SeparableLinear>;

    explicit GModel(Kind kind, double radius = std::numeric_limits<double>::infinity());

    static GModel real_monomial(int degree);
    static GModel complex_monomial(int h_power, int k_power);
    static GModel sinh_model();
    static GModel real_polynomial(std::vector<double> coeffs,
                                  double radius = std::numeric_limits<double>::infinity());
    static GModel separable_linear(int dim);

    // {"kind":"complex_monomial","H":2,"K":1}, {"kind":"sinh"},
    // {"kind":"real_monomial","J":3}, {"kind":"real_polynomial","coeffs":[...]},
    // {"kind":"separable_linear","d":2}; optional "radius".
    static GModel from_json(const nlohmann::json& spec);

    const Kind& kind() const { return kind_; }
    double radius() const { return radius_; }
    bool is_complex_kind() const;
    bool is_x_dependent() const;
    std::string kind_name() const;

private:
    Kind kind_;
    double radius_;
};

// sup over |u| <= rho, x of |(grad_x^m G(u,x) - grad_x^m G(0,x)) / u|, by
// closed form per kind; the rho = 0 value is the analytic limit.
double flat_m(const GModel& model, int m, double rho);

// sup of |d^j/du^j grad_x^l G| over the radius-rho ball. For the complex kind
// this is the binomial-weighted sum over the conjugate splits.
double sigma_jl(const GModel& model, int j, int l, double rho);

// Conjugate-split supremum sup |d^h dbar^k grad_x^l G|; for real kinds the
// k > 0 entries vanish and the k = 0 entries match sigma_jl.
double sigma_hkl(const GModel& model, int h, int k, int l, double rho);

// Pointwise G(value, x); x is ignored by x-independent kinds. Real kinds are
// evaluated through their entire extension, which agrees on real inputs.
std::complex<double> evaluate(const GModel& model, std::complex<double> value,
                              std::span<const double> x);

// Exact mixed scalar-slot derivative d^h dbar^k G at (value, x).
// Over-differentiating a polynomial kind returns 0, not an error.
std::complex<double> partial_derivative(const GModel& model, int h, int k,
                                        std::complex<double> value, std::span<const double> x);

// Gaussian profile helpers used by SeparableLinear.
double psi_profile(std::span<const double> x);
// Order-l derivative tensor of psi at x (real-valued components).
symtensor::SymTensor psi_grad_tensor(int d, int l, std::span<const double> x);
// sup_x |grad^l psi| over R^d, maximized on a dense radial grid; cached.
double psi_grad_sup(int d, int l);

}  // namespace tamecalc::gmodel
