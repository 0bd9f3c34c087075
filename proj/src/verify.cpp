#include "tamecalc/verify.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "tamecalc/constants.hpp"
#include "tamecalc/errors.hpp"
#include "tamecalc/fdb_expansion.hpp"

namespace tamecalc::spectral {

bool CheckRecord::all_pass() const {
    if (!pass) return false;
    for (const auto& sub : details)
        if (!sub.all_pass()) return false;
    return true;
}

nlohmann::ordered_json CheckRecord::to_json() const {
    nlohmann::ordered_json out;
    out["name"] = name;
    out["lhs"] = lhs;
    out["rhs"] = rhs;
    out["ratio"] = ratio;
    out["pass"] = pass;
    if (!details.empty()) {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& sub : details) arr.push_back(sub.to_json());
        out["details"] = std::move(arr);
    }
    return out;
}

CheckRecord make_check(std::string name, double lhs, double rhs, double tol) {
    CheckRecord rec;
    rec.name = std::move(name);
    rec.lhs = lhs;
    rec.rhs = rhs;
    rec.ratio = rhs > 0.0 ? lhs / rhs : (lhs > 0.0 ? std::numeric_limits<double>::infinity() : 0.0);
    rec.pass = lhs <= rhs * (1.0 + tol);
    return rec;
}

CheckRecord verify_tame(const gmodel::GModel& model, const GridField& f, int n, int a,
                        double tol, bool freeze_u) {
    const int d = f.spec().d;
    const double norm_a = sobolev_norm(f, a);
    const double norm_n = sobolev_norm(f, n);
    const double norm_l2 = lp_norm(f, Exponent::finite(2.0));

    const estimates::BoundReport bound =
        estimates::tame_bound(model, n, a, d, norm_a, norm_n, norm_l2, freeze_u);

    const GridField composed = compose(model, f);
    const GridField base = compose(model, GridField::zero(f.spec()));
    const GridField diff = composed - base;

    CheckRecord rec = make_check("tame_n" + std::to_string(n), sobolev_norm(diff, n),
                                 bound.rhs, tol);
    for (int m = 0; m <= n; ++m) {
        const TensorField dm = grad_m(diff, m);
        const double lhs_m = lp_norm(dm, Exponent::finite(2.0));
        const double grad_norm = grad_l2_norm(f, m);
        const double rhs_m = bound.per_order[m].grad_coeff * grad_norm +
                             bound.per_order[m].l2_coeff * norm_l2;
        rec.details.push_back(
            make_check("tame_n" + std::to_string(n) + ".order" + std::to_string(m), lhs_m,
                       rhs_m, tol));
    }
    return rec;
}

CheckRecord verify_embedding(const GridField& f, int a, double tol) {
    const double s_ad = constants::embedding_constant({a, f.spec().d});
    const double lhs = lp_norm(f, Exponent::infinity());
    const double rhs = s_ad * sobolev_norm(f, a);
    return make_check("embedding_a" + std::to_string(a), lhs, rhs, tol);
}

CheckRecord verify_interpolation(const GridField& f, int l, int m, double tol) {
    if (l < 0 || m < l) throw std::domain_error("verify_interpolation: requires 0 <= l <= m");
    const std::string tag = "interpolation_l" + std::to_string(l) + "_m" + std::to_string(m);
    const double norm_l = grad_l2_norm(f, l);
    const double norm_0 = grad_l2_norm(f, 0);
    const double norm_m = grad_l2_norm(f, m);
    const double theta = (m == 0) ? 1.0 : static_cast<double>(l) / m;
    auto powz = [](double v, double e) { return (v == 0.0 && e == 0.0) ? 1.0 : std::pow(v, e); };
    const double geometric = powz(norm_0, 1.0 - theta) * powz(norm_m, theta);
    const double arithmetic = (1.0 - theta) * norm_0 + theta * norm_m;
    CheckRecord rec = make_check(tag, norm_l, geometric, tol);
    rec.details.push_back(make_check(tag + ".mean_form", geometric, arithmetic, tol));
    return rec;
}

CheckRecord verify_gagliardo(const GridField& f, int l, int m, int a, double tol) {
    if (l < 0 || m < l || m < 1)
        throw std::domain_error("verify_gagliardo: requires 0 <= l <= m, m >= 1");
    const int d = f.spec().d;
    const std::string tag =
        "gagliardo_l" + std::to_string(l) + "_m" + std::to_string(m) + "_a" + std::to_string(a);
    const Exponent p = (l == 0) ? Exponent::infinity() : Exponent::finite(2.0 * m / l);
    const double lhs = lp_norm(grad_m(f, l), p);

    const double theta = static_cast<double>(l) / m;
    const double s = static_cast<double>(l) / (2.0 * m);
    const double e_ratio =
        std::exp(0.5 * d * (constants::log_E(s) - constants::log_E(1.0 - s)));
    const double s_ad = constants::embedding_constant({a, d});
    const double low = s_ad * sobolev_norm(f, a);
    const double high = grad_l2_norm(f, m);
    auto powz = [](double v, double e) { return (v == 0.0 && e == 0.0) ? 1.0 : std::pow(v, e); };
    const double rhs = e_ratio * powz(low, 1.0 - theta) * powz(high, theta);
    return make_check(tag, lhs, rhs, tol);
}

CheckRecord verify_adams_frazier(const GridField& f, const std::vector<int>& orders,
                                 const std::vector<int>& conj_orders, int a, double tol) {
    if (orders.empty() && conj_orders.empty())
        throw std::domain_error("verify_adams_frazier: needs at least one factor");
    for (int i : orders)
        if (i < 1) throw std::domain_error("verify_adams_frazier: orders must be >= 1");
    for (int g : conj_orders)
        if (g < 1) throw std::domain_error("verify_adams_frazier: orders must be >= 1");

    const int d = f.spec().d;
    int m = 0;
    std::string tag = "adams_frazier";
    for (int i : orders) {
        m += i;
        tag += "_" + std::to_string(i);
    }
    for (int g : conj_orders) {
        m += g;
        tag += "_c" + std::to_string(g);
    }
    tag += "_a" + std::to_string(a);

    TensorField product(f.spec(), 0);
    for (std::size_t i = 0; i < f.spec().total_points(); ++i)
        product.set_point(i, symtensor::SymTensor::scalar(d, {1.0, 0.0}));
    for (int i : orders) product = vee_fields(product, grad_m(f, i));
    for (int g : conj_orders) product = vee_fields(product, conjugate_field(grad_m(f, g)));

    const double lhs = lp_norm(product, Exponent::finite(2.0));
    const int factors = static_cast<int>(orders.size() + conj_orders.size());
    const double u = constants::adams_frazier_U(m, factors, d);
    const double s_ad = constants::embedding_constant({a, d});
    const double low = s_ad * sobolev_norm(f, a);
    const double rhs = u * std::pow(low, factors - 1) * grad_l2_norm(f, m);
    return make_check(tag, lhs, rhs, tol);
}

CheckRecord verify_faadibruno(const gmodel::GModel& model, const GridField& f, int m,
                              double tol) {
    if (m < 1 || m > 4) throw std::domain_error("verify_faadibruno: requires 1 <= m <= 4");
    if (f.spec().d > 3) throw std::domain_error("verify_faadibruno: requires d <= 3");
    const int d = f.spec().d;
    const std::size_t points = f.spec().total_points();

    const TensorField direct = grad_m(compose(model, f), m);

    std::vector<TensorField> grads;
    grads.reserve(m + 1);
    for (int s = 0; s <= m; ++s) grads.push_back(grad_m(f, s));

    using symtensor::SymTensor;
    const bool complex_kind = model.is_complex_kind();
    const auto& values = f.values();

    double max_diff = 0.0;
    double max_scale = 0.0;
    std::vector<double> x(d);
    for (std::size_t i = 0; i < points; ++i) {
        f.point(i, x);
        const std::complex<double> u = values[i];

        auto g_deriv_tensor = [&](int h, int k, int l) -> SymTensor {
            // x-derivative blocks vanish for x-independent kinds; the
            // separable kind carries the profile's derivative tensor.
            if (!model.is_x_dependent()) {
                if (l > 0) return SymTensor(d, l);
                return SymTensor::scalar(d, gmodel::partial_derivative(model, h, k, u, x));
            }
            if (k > 0 || h > 1) return SymTensor(d, l);
            SymTensor psi = gmodel::psi_grad_tensor(d, l, x);
            if (h == 1) return psi;
            return symtensor::scale(psi, u);  // h == 0: z * grad^l psi
        };
        auto f_grad = [&](int s) { return grads[s].at_point(i); };
        auto f_grad_conj = [&](int s) { return symtensor::conjugate(grads[s].at_point(i)); };

        SymTensor expansion(d, m);
        if (complex_kind) {
            expansion = symtensor::fdb_sum_complex<std::complex<double>>(
                m, d, [&](int h, int k, int l) { return g_deriv_tensor(h, k, l); }, f_grad,
                f_grad_conj);
        } else {
            expansion = symtensor::fdb_sum_real<std::complex<double>>(
                m, d, [&](int j, int l) { return g_deriv_tensor(j, 0, l); }, f_grad);
        }
        // Trailing pure-x derivative term.
        if (model.is_x_dependent())
            expansion = expansion + symtensor::scale(gmodel::psi_grad_tensor(d, m, x), u);

        const SymTensor direct_t = direct.at_point(i);
        max_diff = std::max(max_diff, symtensor::norm(direct_t - expansion));
        max_scale = std::max(max_scale, symtensor::norm(direct_t));
    }

    CheckRecord rec;
    rec.name = "faadibruno_" + model.kind_name() + "_m" + std::to_string(m);
    rec.lhs = max_diff;
    rec.rhs = tol * std::max(max_scale, 1e-30);
    rec.ratio = rec.lhs / rec.rhs;
    rec.pass = rec.lhs <= rec.rhs;
    return rec;
}

}  // namespace tamecalc::spectral
