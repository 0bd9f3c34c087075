#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "tamecalc/estimates.hpp"
#include "tamecalc/spectral.hpp"

namespace tamecalc::spectral {

// One certified inequality: pass iff lhs <= rhs * (1 + tol), recursively for
// any sub-checks.
struct CheckRecord {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    double ratio = 0.0;  // lhs / rhs, 0 when both sides vanish
    bool pass = false;
    std::vector<CheckRecord> details;

    bool all_pass() const;
    nlohmann::ordered_json to_json() const;
};

CheckRecord make_check(std::string name, double lhs, double rhs, double tol);

// Full composition bound |G(f,x) - G(0,x)|_n <= gamma |f|_n + c |f|_L2 with
// every per-order derivative bound as a sub-check. Throws BallViolation when
// the low-norm ball condition fails.
CheckRecord verify_tame(const gmodel::GModel& model, const GridField& f, int n, int a,
                        double tol, bool freeze_u = false);

// |f|_Linf <= S_ad |f|_a.
CheckRecord verify_embedding(const GridField& f, int a, double tol);

// |grad^l f|_L2 <= |f|_L2^{1-l/m} |grad^m f|_L2^{l/m}
//              <= (1 - l/m)|f|_L2 + (l/m)|grad^m f|_L2, both chained forms.
CheckRecord verify_interpolation(const GridField& f, int l, int m, double tol);

// |grad^l f|_{L^{2m/l}} <= (E(l/2m)/E(1-l/2m))^{d/2} (S_ad |f|_a)^{1-l/m}
//                          |grad^m f|_L2^{l/m}.
CheckRecord verify_gagliardo(const GridField& f, int l, int m, int a, double tol);

// | grad^{i_1} f v ... v conj(grad^{g_k} f) |_L2
//   <= U_{m,h+k,d} (S_ad |f|_a)^{h+k-1} |grad^m f|_L2, m = sum of orders.
CheckRecord verify_adams_frazier(const GridField& f, const std::vector<int>& orders,
                                 const std::vector<int>& conj_orders, int a, double tol);

// Componentwise agreement of grad^m(G(f,x)) computed directly against the
// partition-sum expansion; lhs is the max pointwise deviation, rhs the
// tolerance times the field scale.
CheckRecord verify_faadibruno(const gmodel::GModel& model, const GridField& f, int m,
                              double tol = 1e-8);

}  // namespace tamecalc::spectral
