#include "tamecalc/gmodel.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "tamecalc/combinatorics.hpp"

namespace tamecalc::gmodel {

namespace {

using std::complex;

double falling_factorial(int n, int k) {
    // n (n-1) ... (n-k+1); 0 when k > n.
    if (k > n) return 0.0;
    double r = 1.0;
    for (int i = 0; i < k; ++i) r *= n - i;
    return r;
}

complex<double> int_pow(complex<double> z, int e) {
    complex<double> r{1.0, 0.0};
    for (int i = 0; i < e; ++i) r *= z;
    return r;
}

void check_rho(double rho, double radius, const char* fn) {
    if (!(rho >= 0.0)) throw std::domain_error(std::string(fn) + ": rho must be >= 0");
    if (rho >= radius)
        throw std::domain_error(std::string(fn) + ": rho = " + std::to_string(rho) +
                                " outside the domain radius " + std::to_string(radius));
}

// Probabilists' Hermite polynomial He_n(t).
double hermite(int n, double t) {
    double h0 = 1.0, h1 = t;
    if (n == 0) return h0;
    for (int i = 1; i < n; ++i) {
        const double h2 = t * h1 - i * h0;
        h0 = h1;
        h1 = h2;
    }
    return h1;
}

}  // namespace

GModel::GModel(Kind kind, double radius) : kind_(std::move(kind)), radius_(radius) {
    if (!(radius_ > 0.0)) throw std::domain_error("GModel: radius must be positive");
    if (const auto* rm = std::get_if<RealMonomial>(&kind_)) {
        if (rm->degree < 1) throw std::domain_error("RealMonomial: degree must be >= 1");
    } else if (const auto* cm = std::get_if<ComplexMonomial>(&kind_)) {
        if (cm->h_power < 0 || cm->k_power < 0 || cm->h_power + cm->k_power < 1)
            throw std::domain_error("ComplexMonomial: requires H, K >= 0 and H + K >= 1");
    } else if (const auto* sl = std::get_if<SeparableLinear>(&kind_)) {
        if (sl->dim < 1) throw std::domain_error("SeparableLinear: dim must be >= 1");
    }
}

GModel GModel::real_monomial(int degree) { return GModel(RealMonomial{degree}); }
GModel GModel::complex_monomial(int h_power, int k_power) {
    return GModel(ComplexMonomial{h_power, k_power});
}
GModel GModel::sinh_model() { return GModel(Sinh{}); }
GModel GModel::real_polynomial(std::vector<double> coeffs, double radius) {
    return GModel(RealPolynomial{std::move(coeffs)}, radius);
}
GModel GModel::separable_linear(int dim) { return GModel(SeparableLinear{dim}); }

GModel GModel::from_json(const nlohmann::json& spec) {
    if (!spec.is_object() || !spec.contains("kind"))
        throw ParseError("model: expected an object with a \"kind\" field");
    const std::string kind = spec.at("kind").get<std::string>();
    const double radius = spec.value("radius", std::numeric_limits<double>::infinity());
    try {
        if (kind == "real_monomial") return GModel(RealMonomial{spec.at("J").get<int>()}, radius);
        if (kind == "complex_monomial")
            return GModel(ComplexMonomial{spec.at("H").get<int>(), spec.at("K").get<int>()}, radius);
        if (kind == "sinh") return GModel(Sinh{}, radius);
        if (kind == "real_polynomial")
            return GModel(RealPolynomial{spec.at("coeffs").get<std::vector<double>>()}, radius);
        if (kind == "separable_linear")
            return GModel(SeparableLinear{spec.at("d").get<int>()}, radius);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("model: ") + e.what());
    } catch (const std::domain_error& e) {
        throw ParseError(std::string("model: ") + e.what());
    }
    throw ParseError("model: unknown kind \"" + kind + "\"");
}

bool GModel::is_complex_kind() const { return std::holds_alternative<ComplexMonomial>(kind_); }
bool GModel::is_x_dependent() const { return std::holds_alternative<SeparableLinear>(kind_); }

std::string GModel::kind_name() const {
    return std::visit(
        [](const auto& k) -> std::string {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, RealMonomial>) return "real_monomial";
            else if constexpr (std::is_same_v<T, ComplexMonomial>) return "complex_monomial";
            else if constexpr (std::is_same_v<T, Sinh>) return "sinh";
            else if constexpr (std::is_same_v<T, RealPolynomial>) return "real_polynomial";
            else return "separable_linear";
        },
        kind_);
}

double psi_profile(std::span<const double> x) {
    double r2 = 0.0;
    for (double xi : x) r2 += xi * xi;
    return std::exp(-0.5 * r2);
}

symtensor::SymTensor psi_grad_tensor(int d, int l, std::span<const double> x) {
    if (static_cast<int>(x.size()) != d)
        throw std::domain_error("psi_grad_tensor: point dimension mismatch");
    symtensor::SymTensor out(d, l);
    const double base = psi_profile(x);
    std::vector<int> idx(l), mult(d);
    for (std::size_t flat = 0; flat < out.size(); ++flat) {
        out.unflatten(flat, idx);
        std::fill(mult.begin(), mult.end(), 0);
        for (int i : idx) ++mult[i];
        double v = base;
        for (int axis = 0; axis < d; ++axis) {
            const int n = mult[axis];
            if (n == 0) continue;
            v *= (n % 2 == 0 ? 1.0 : -1.0) * hermite(n, x[axis]);
        }
        out[flat] = {v, 0.0};
    }
    return out;
}

double psi_grad_sup(int d, int l) {
    if (d < 1 || l < 0) throw std::domain_error("psi_grad_sup: bad arguments");
    static std::map<std::pair<int, int>, double> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    const auto key = std::make_pair(d, l);
    if (auto it = cache.find(key); it != cache.end()) return it->second;

    // The profile is radial, so the derivative-tensor norm depends on |x|
    // only; maximize along one axis: 2^14-point grid on [0, 12], then a local
    // ternary refinement around the grid argmax.
    constexpr int kGridPoints = 1 << 14;
    constexpr double kRadiusMax = 12.0;
    std::vector<double> x(d, 0.0);
    auto value_at = [&](double r) {
        x[0] = r;
        return symtensor::norm(psi_grad_tensor(d, l, x));
    };
    double best = 0.0;
    int best_i = 0;
    for (int i = 0; i <= kGridPoints; ++i) {
        const double v = value_at(kRadiusMax * i / kGridPoints);
        if (v > best) {
            best = v;
            best_i = i;
        }
    }
    const double step = kRadiusMax / kGridPoints;
    double lo = std::max(0.0, step * (best_i - 1));
    double hi = std::min(kRadiusMax, step * (best_i + 1));
    for (int iter = 0; iter < 200; ++iter) {
        const double m1 = lo + (hi - lo) / 3.0;
        const double m2 = hi - (hi - lo) / 3.0;
        if (value_at(m1) < value_at(m2)) lo = m1;
        else hi = m2;
    }
    best = std::max(best, value_at(0.5 * (lo + hi)));
    cache[key] = best;
    return best;
}

double flat_m(const GModel& model, int m, double rho) {
    if (m < 0) throw std::domain_error("flat_m: m must be >= 0");
    check_rho(rho, model.radius(), "flat_m");
    return std::visit(
        [&](const auto& kind) -> double {
            using T = std::decay_t<decltype(kind)>;
            if constexpr (std::is_same_v<T, RealMonomial>) {
                return m == 0 ? std::pow(rho, kind.degree - 1) : 0.0;
            } else if constexpr (std::is_same_v<T, ComplexMonomial>) {
                return m == 0 ? std::pow(rho, kind.h_power + kind.k_power - 1) : 0.0;
            } else if constexpr (std::is_same_v<T, Sinh>) {
                if (m > 0) return 0.0;
                return rho == 0.0 ? 1.0 : std::sinh(rho) / rho;
            } else if constexpr (std::is_same_v<T, RealPolynomial>) {
                if (m > 0) return 0.0;
                double sum = 0.0;
                for (std::size_t k = 1; k < kind.coeffs.size(); ++k)
                    sum += std::abs(kind.coeffs[k]) * std::pow(rho, static_cast<double>(k - 1));
                return sum;
            } else {
                return psi_grad_sup(kind.dim, m);
            }
        },
        model.kind());
}

double sigma_hkl(const GModel& model, int h, int k, int l, double rho) {
    if (h < 0 || k < 0 || l < 0 || h + k < 1)
        throw std::domain_error("sigma_hkl: requires h, k, l >= 0 and h + k >= 1");
    check_rho(rho, model.radius(), "sigma_hkl");
    if (const auto* cm = std::get_if<ComplexMonomial>(&model.kind())) {
        if (l > 0 || h > cm->h_power || k > cm->k_power) return 0.0;
        const double ff = falling_factorial(cm->h_power, h) * falling_factorial(cm->k_power, k);
        return ff * std::pow(rho, cm->h_power + cm->k_power - h - k);
    }
    // Real kinds extend holomorphically in the scalar slot: every conjugate
    // derivative vanishes and the disc supremum equals the real-interval one.
    return k == 0 ? sigma_jl(model, h, l, rho) : 0.0;
}

double sigma_jl(const GModel& model, int j, int l, double rho) {
    if (j < 1 || l < 0) throw std::domain_error("sigma_jl: requires j >= 1 and l >= 0");
    check_rho(rho, model.radius(), "sigma_jl");
    return std::visit(
        [&](const auto& kind) -> double {
            using T = std::decay_t<decltype(kind)>;
            if constexpr (std::is_same_v<T, RealMonomial>) {
                if (l > 0 || j > kind.degree) return 0.0;
                return falling_factorial(kind.degree, j) * std::pow(rho, kind.degree - j);
            } else if constexpr (std::is_same_v<T, ComplexMonomial>) {
                const int total = kind.h_power + kind.k_power;
                if (l > 0 || j > total) return 0.0;
                return falling_factorial(total, j) * std::pow(rho, total - j);
            } else if constexpr (std::is_same_v<T, Sinh>) {
                if (l > 0) return 0.0;
                return j % 2 == 0 ? std::sinh(rho) : std::cosh(rho);
            } else if constexpr (std::is_same_v<T, RealPolynomial>) {
                if (l > 0) return 0.0;
                double sum = 0.0;
                for (std::size_t deg = j; deg < kind.coeffs.size(); ++deg)
                    sum += std::abs(kind.coeffs[deg]) *
                           falling_factorial(static_cast<int>(deg), j) *
                           std::pow(rho, static_cast<double>(deg) - j);
                return sum;
            } else {
                return j == 1 ? psi_grad_sup(kind.dim, l) : 0.0;
            }
        },
        model.kind());
}

std::complex<double> evaluate(const GModel& model, std::complex<double> value,
                              std::span<const double> x) {
    if (!(std::abs(value) < model.radius()))
        throw std::domain_error("evaluate: |value| = " + std::to_string(std::abs(value)) +
                                " outside the domain radius");
    return std::visit(
        [&](const auto& kind) -> complex<double> {
            using T = std::decay_t<decltype(kind)>;
            if constexpr (std::is_same_v<T, RealMonomial>) {
                return int_pow(value, kind.degree);
            } else if constexpr (std::is_same_v<T, ComplexMonomial>) {
                return int_pow(value, kind.h_power) * int_pow(std::conj(value), kind.k_power);
            } else if constexpr (std::is_same_v<T, Sinh>) {
                return std::sinh(value);
            } else if constexpr (std::is_same_v<T, RealPolynomial>) {
                complex<double> acc{0.0, 0.0};
                for (std::size_t k = kind.coeffs.size(); k-- > 0;)
                    acc = acc * value + kind.coeffs[k];
                return acc;
            } else {
                return value * psi_profile(x.subspan(0, kind.dim));
            }
        },
        model.kind());
}

std::complex<double> partial_derivative(const GModel& model, int h, int k,
                                        std::complex<double> value, std::span<const double> x) {
    if (h < 0 || k < 0) throw std::domain_error("partial_derivative: orders must be >= 0");
    if (!(std::abs(value) < model.radius()))
        throw std::domain_error("partial_derivative: |value| outside the domain radius");
    return std::visit(
        [&](const auto& kind) -> complex<double> {
            using T = std::decay_t<decltype(kind)>;
            if constexpr (std::is_same_v<T, RealMonomial>) {
                if (k > 0 || h > kind.degree) return {0.0, 0.0};
                return falling_factorial(kind.degree, h) * int_pow(value, kind.degree - h);
            } else if constexpr (std::is_same_v<T, ComplexMonomial>) {
                if (h > kind.h_power || k > kind.k_power) return {0.0, 0.0};
                return falling_factorial(kind.h_power, h) * falling_factorial(kind.k_power, k) *
                       int_pow(value, kind.h_power - h) *
                       int_pow(std::conj(value), kind.k_power - k);
            } else if constexpr (std::is_same_v<T, Sinh>) {
                if (k > 0) return {0.0, 0.0};
                return h % 2 == 0 ? std::sinh(value) : std::cosh(value);
            } else if constexpr (std::is_same_v<T, RealPolynomial>) {
                if (k > 0) return {0.0, 0.0};
                complex<double> acc{0.0, 0.0};
                for (std::size_t deg = h; deg < kind.coeffs.size(); ++deg)
                    acc += kind.coeffs[deg] * falling_factorial(static_cast<int>(deg), h) *
                           int_pow(value, static_cast<int>(deg) - h);
                return acc;
            } else {
                const double psi = psi_profile(x.subspan(0, kind.dim));
                if (h == 0 && k == 0) return value * psi;
                if (h == 1 && k == 0) return {psi, 0.0};
                return {0.0, 0.0};
            }
        },
        model.kind());
}

}  // namespace tamecalc::gmodel
