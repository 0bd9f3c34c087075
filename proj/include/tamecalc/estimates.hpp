#pragma once

#include <vector>

#include "json.hpp"
#include "tamecalc/gmodel.hpp"

namespace tamecalc::estimates {

// Gradient-term coefficient of the composed field's order-m derivative bound
//   |grad^m(G(f,x)) - grad^m(G(0,x))|_{L2}
//       <= grad_coeff * |grad^m f|_{L2} + l2_coeff * |f|_{L2};
// grad_coeff is flat_0 at m = 0 and beta_md for m >= 1, l2_coeff is 0 at
// m = 0 and b_md + flat_m for m >= 1.
struct PerOrderCoeffs {
    int m = 0;
    double grad_coeff = 0.0;
    double l2_coeff = 0.0;
};

struct BoundReport {
    int n = 0, a = 0, d = 0;
    double rho = 0.0;  // S_ad * |f|_a
    double norm_a = 0.0, norm_n = 0.0, norm_l2 = 0.0;
    double gamma = 0.0;    // max(flat_0, beta_md for m = 1..n)
    double c = 0.0;        // sqrt(sum binom(n,m) (b_md + flat_m)^2)
    double upsilon = 0.0;  // gamma + c, single-coefficient form
    double rhs = 0.0;      // gamma * |f|_n + c * |f|_L2
    double rhs_weak = 0.0; // upsilon * |f|_n
    std::vector<PerOrderCoeffs> per_order;  // m = 0..n

    nlohmann::ordered_json to_json() const;
};

// P_m evaluated at nu_jl = (1 - l/m) U_{m-l,jd} sigma_jl(rho) rho^{j-1};
// the rho = 0 value is the analytic limit (only j = 1 terms survive).
// freeze_u replaces every U constant by 1, a weaker but simpler bound.
double beta_md(const gmodel::GModel& model, int m, int d, double rho, bool freeze_u = false);

// Same with the complementary weight l/m; the l = 0 entries vanish.
double b_md(const gmodel::GModel& model, int m, int d, double rho, bool freeze_u = false);

// max(flat_0(rho), beta_md(rho) for m = 1..n); flat_0 alone for n = 0.
double gamma_nd(const gmodel::GModel& model, int n, int d, double rho, bool freeze_u = false);

// sqrt(sum_{m=1}^n binom(n,m) (b_md + flat_m)^2); 0 for n = 0.
double c_nd(const gmodel::GModel& model, int n, int d, double rho, bool freeze_u = false);

// Full report for the composition bound
//   |G(f,x) - G(0,x)|_n <= gamma |f|_n + c |f|_L2
// with rho = S_ad * |f|_a. Throws BallViolation when S_ad |f|_a >= radius.
BoundReport tame_bound(const gmodel::GModel& model, int n, int a, int d, double norm_a,
                       double norm_n, double norm_l2, bool freeze_u = false);

// Monomial closed forms: B^J_md = P_m(nu_j0 = J!/(J-j)! U_mjd, rho = 1) and
// Gamma^J_nd = max(1, B^J_md for m = 1..n); Gamma^J_nd <= J^n.
double monomial_B(int degree, int m, int d);
double monomial_Gamma(int degree, int n, int d);

}  // namespace tamecalc::estimates
