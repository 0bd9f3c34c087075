#include "tamecalc/estimates.hpp"

#include <cmath>
#include <stdexcept>

#include "tamecalc/combinatorics.hpp"
#include "tamecalc/constants.hpp"
#include "tamecalc/errors.hpp"

namespace tamecalc::estimates {

namespace comb = tamecalc::combinatorics;

namespace {

// Shared kernel for beta_md / b_md: evaluates P_m at
// nu_jl = weight(l) * U_{m-l,jd} * sigma_jl(rho) * rho^{j-1}, where the
// rho^{j-1} power absorbs the 1/rho of the definitions so that rho = 0 takes
// its analytic limit (std::pow(0,0) = 1 keeps the j = 1 terms).
template <class WeightFn>
double pm_weighted(const gmodel::GModel& model, int m, int d, double rho, bool freeze_u,
                   WeightFn&& weight) {
    if (m < 1) throw std::domain_error("per-order coefficient: m must be >= 1");
    if (d < 1) throw std::domain_error("per-order coefficient: d must be >= 1");
    const comb::PmPolynomial poly = comb::PmPolynomial::build(m);
    double sum = 0.0;
    for (const auto& [key, coeff] : poly.coeffs()) {
        const auto [j, l] = key;
        const double w = weight(l);
        if (w == 0.0) continue;
        const double sig = gmodel::sigma_jl(model, j, l, rho);
        if (sig == 0.0) continue;
        const double u = freeze_u ? 1.0 : constants::adams_frazier_U(m - l, j, d);
        sum += static_cast<double>(coeff) * w * u * sig * std::pow(rho, j - 1);
    }
    return sum;
}

}  // namespace

double beta_md(const gmodel::GModel& model, int m, int d, double rho, bool freeze_u) {
    return pm_weighted(model, m, d, rho, freeze_u,
                       [m](int l) { return 1.0 - static_cast<double>(l) / m; });
}

double b_md(const gmodel::GModel& model, int m, int d, double rho, bool freeze_u) {
    return pm_weighted(model, m, d, rho, freeze_u,
                       [m](int l) { return static_cast<double>(l) / m; });
}

double gamma_nd(const gmodel::GModel& model, int n, int d, double rho, bool freeze_u) {
    if (n < 0) throw std::domain_error("gamma_nd: n must be >= 0");
    double best = gmodel::flat_m(model, 0, rho);
    for (int m = 1; m <= n; ++m) best = std::max(best, beta_md(model, m, d, rho, freeze_u));
    return best;
}

double c_nd(const gmodel::GModel& model, int n, int d, double rho, bool freeze_u) {
    if (n < 0) throw std::domain_error("c_nd: n must be >= 0");
    double sum = 0.0;
    for (int m = 1; m <= n; ++m) {
        const double term = b_md(model, m, d, rho, freeze_u) + gmodel::flat_m(model, m, rho);
        sum += static_cast<double>(comb::binomial(n, m)) * term * term;
    }
    return std::sqrt(sum);
}

BoundReport tame_bound(const gmodel::GModel& model, int n, int a, int d, double norm_a,
                       double norm_n, double norm_l2, bool freeze_u) {
    if (n < 0) throw std::domain_error("tame_bound: n must be >= 0");
    if (2 * a <= d) throw std::domain_error("tame_bound: requires a > d/2");
    if (!(norm_a >= 0.0) || !(norm_n >= 0.0) || !(norm_l2 >= 0.0))
        throw std::domain_error("tame_bound: norms must be >= 0");

    const double s_ad = constants::embedding_constant({a, d});
    const double rho = s_ad * norm_a;
    if (!(rho < model.radius()))
        throw BallViolation("tame_bound: ball condition S_ad*|f|_a < r violated (S_ad*|f|_a = " +
                            std::to_string(rho) + ", r = " + std::to_string(model.radius()) + ")");

    BoundReport report;
    report.n = n;
    report.a = a;
    report.d = d;
    report.rho = rho;
    report.norm_a = norm_a;
    report.norm_n = norm_n;
    report.norm_l2 = norm_l2;
    report.per_order.push_back({0, gmodel::flat_m(model, 0, rho), 0.0});
    for (int m = 1; m <= n; ++m)
        report.per_order.push_back(
            {m, beta_md(model, m, d, rho, freeze_u),
             b_md(model, m, d, rho, freeze_u) + gmodel::flat_m(model, m, rho)});
    report.gamma = gamma_nd(model, n, d, rho, freeze_u);
    report.c = c_nd(model, n, d, rho, freeze_u);
    report.upsilon = report.gamma + report.c;
    report.rhs = report.gamma * norm_n + report.c * norm_l2;
    report.rhs_weak = report.upsilon * norm_n;
    return report;
}

double monomial_B(int degree, int m, int d) {
    if (degree < 1) throw std::domain_error("monomial_B: degree must be >= 1");
    if (m < 1) throw std::domain_error("monomial_B: m must be >= 1");
    const comb::PmPolynomial poly = comb::PmPolynomial::build(m);
    double sum = 0.0;
    for (int j = 1; j <= std::min(m, degree); ++j) {
        double ff = 1.0;
        for (int i = 0; i < j; ++i) ff *= degree - i;
        sum += static_cast<double>(poly.coeff(j, 0)) * ff * constants::adams_frazier_U(m, j, d);
    }
    return sum;
}

double monomial_Gamma(int degree, int n, int d) {
    if (n < 0) throw std::domain_error("monomial_Gamma: n must be >= 0");
    double best = 1.0;
    for (int m = 1; m <= n; ++m) best = std::max(best, monomial_B(degree, m, d));
    return best;
}

nlohmann::ordered_json BoundReport::to_json() const {
    nlohmann::ordered_json out;
    out["n"] = n;
    out["a"] = a;
    out["d"] = d;
    out["rho"] = rho;
    out["norms"] = {{"a", norm_a}, {"n", norm_n}, {"l2", norm_l2}};
    out["gamma"] = gamma;
    out["c"] = c;
    out["upsilon"] = upsilon;
    out["rhs"] = rhs;
    out["rhs_weak"] = rhs_weak;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& po : per_order) {
        nlohmann::ordered_json entry;
        entry["m"] = po.m;
        entry["grad_coeff"] = po.grad_coeff;
        entry["l2_coeff"] = po.l2_coeff;
        arr.push_back(entry);
    }
    out["per_order"] = std::move(arr);
    return out;
}

}  // namespace tamecalc::estimates
