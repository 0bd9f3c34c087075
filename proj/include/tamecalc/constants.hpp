#pragma once

#include "tamecalc/exponent.hpp"

namespace tamecalc::constants {

// E(s) = s^s for s > 0, with the limit value E(0) = 1.
double func_E(double s);

// ln E(s) = s ln s, 0 at s = 0. Ratio products are assembled in log space.
double log_E(double s);

// Gamma function for x > 0. Integer and half-integer arguments take an exact
// factorial / sqrt(pi) path; everything else goes through a Lanczos
// approximation good to ~15 significant digits on the positive half-line.
double gamma_fn(double x);

struct EmbeddingParams {
    int a = 0;  // Sobolev order
    int d = 0;  // space dimension
};

// Sharp sup-norm embedding constant
//   S_ad = (4 pi)^{-d/4} sqrt(Gamma(a - d/2) / Gamma(a)),  a > d/2.
double embedding_constant(const EmbeddingParams& params);

// Constant of the derivative-product inequality, 1 <= j <= m:
//   U_mjd = (E(1/2 - (j-1)/(2m)) / E(1/2 + (j-1)/(2m)))^{d/2}
//         * (E(1/(2m)) / E(1 - 1/(2m)))^{(j-1)d/2}.
// Always in (0, 1].
double adams_frazier_U(int m, int j, int d);

// Sharp constant of the inverse-transform bound L^p -> L^r, 1/p + 1/r = 1:
//   C_rd = (2 pi)^{-(d/2 - d/r)} (E(1/r) / E(1 - 1/r))^{d/2},  r in [2, inf].
double hausdorff_young_C(const Exponent& r, int d);

}  // namespace tamecalc::constants
