#include "tamecalc/spectral.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <numbers>
#include <stdexcept>

#include "tamecalc/errors.hpp"
#include "tamecalc/parallel.hpp"

namespace tamecalc::spectral {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::size_t kMaxGridPoints = 1u << 25;  // memory cap per field

// FFTW planning is not thread-safe; execution of distinct plans is.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

std::vector<Complex> dft(const GridSpec& spec, const std::vector<Complex>& in, int sign) {
    std::vector<Complex> out(in.size());
    std::vector<int> dims(spec.d, spec.points_per_axis);
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        plan = fftw_plan_dft(spec.d, dims.data(),
                             reinterpret_cast<fftw_complex*>(const_cast<Complex*>(in.data())),
                             reinterpret_cast<fftw_complex*>(out.data()), sign,
                             FFTW_ESTIMATE | FFTW_PRESERVE_INPUT);
    }
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        fftw_destroy_plan(plan);
    }
    return out;
}

// Parity of the index sum: the phase factor translating the sample origin
// -L/2 onto the DFT's origin, valid for even N.
inline double origin_phase(const GridSpec& spec, std::size_t flat) {
    int sum = 0;
    for (int axis = 0; axis < spec.d; ++axis) {
        sum += static_cast<int>(flat % spec.points_per_axis);
        flat /= spec.points_per_axis;
    }
    return (sum % 2 == 0) ? 1.0 : -1.0;
}

void unflatten_indices(const GridSpec& spec, std::size_t flat, std::span<int> idx) {
    for (int axis = spec.d - 1; axis >= 0; --axis) {
        idx[axis] = static_cast<int>(flat % spec.points_per_axis);
        flat /= spec.points_per_axis;
    }
}

}  // namespace

GridSpec::GridSpec(int dim, int n, double length) : d(dim), points_per_axis(n), box_length(length) {
    if (d < 1) throw std::domain_error("GridSpec: d must be >= 1");
    if (n < 2 || (n & (n - 1)) != 0)
        throw std::domain_error("GridSpec: points per axis must be a power of two >= 2");
    if (!(length > 0.0)) throw std::domain_error("GridSpec: box length must be positive");
    std::size_t total = 1;
    for (int i = 0; i < d; ++i) {
        if (total > kMaxGridPoints / static_cast<std::size_t>(n))
            throw ResourceError("GridSpec: N^d exceeds the grid memory cap");
        total *= static_cast<std::size_t>(n);
    }
}

std::size_t GridSpec::total_points() const {
    std::size_t total = 1;
    for (int i = 0; i < d; ++i) total *= static_cast<std::size_t>(points_per_axis);
    return total;
}

double GridSpec::dk() const { return 2.0 * kPi / box_length; }

double GridSpec::coordinate(int index) const {
    return -0.5 * box_length + spacing() * index;
}

double GridSpec::wavenumber(int index) const {
    const int m = (index < points_per_axis / 2) ? index : index - points_per_axis;
    return dk() * m;
}

GridField::GridField(GridSpec spec, std::vector<Complex> values)
    : spec_(spec), values_(std::move(values)) {
    if (values_.size() != spec_.total_points())
        throw std::domain_error("GridField: value count does not match the grid");
}

GridField GridField::zero(const GridSpec& spec) {
    return GridField(spec, std::vector<Complex>(spec.total_points(), Complex{0.0, 0.0}));
}

void GridField::point(std::size_t flat, std::span<double> x) const {
    for (int axis = spec_.d - 1; axis >= 0; --axis) {
        x[axis] = spec_.coordinate(static_cast<int>(flat % spec_.points_per_axis));
        flat /= spec_.points_per_axis;
    }
}

GridField GridField::from_function(const GridSpec& spec,
                                   const std::function<Complex(std::span<const double>)>& fn) {
    std::vector<Complex> values(spec.total_points());
    parallel_for(values.size(), [&](std::size_t i) {
        std::vector<double> x(spec.d);
        std::size_t flat = i;
        for (int axis = spec.d - 1; axis >= 0; --axis) {
            x[axis] = spec.coordinate(static_cast<int>(flat % spec.points_per_axis));
            flat /= spec.points_per_axis;
        }
        values[i] = fn(x);
    });
    return GridField(spec, std::move(values));
}

GridField GridField::from_spectrum(const GridSpec& spec,
                                   const std::function<Complex(std::span<const double>)>& fn) {
    // Fill the FFT-ordered spectrum, then invert:
    // f(x_i) = (2 pi)^{-d/2} dk^d sum_k F(k) e^{ikx_i}.
    std::vector<Complex> spec_values(spec.total_points());
    parallel_for(spec_values.size(), [&](std::size_t i) {
        std::vector<double> k(spec.d);
        std::vector<int> idx(spec.d);
        unflatten_indices(spec, i, idx);
        for (int axis = 0; axis < spec.d; ++axis) k[axis] = spec.wavenumber(idx[axis]);
        spec_values[i] = fn(k) * origin_phase(spec, i);
    });
    std::vector<Complex> values = dft(spec, spec_values, FFTW_BACKWARD);
    const double scale = std::pow(2.0 * kPi, -0.5 * spec.d) * std::pow(spec.dk(), spec.d);
    for (auto& v : values) v *= scale;
    GridField field(spec, std::move(values));
    return field;
}

const std::vector<Complex>& GridField::spectrum() const {
    if (!spectrum_) {
        std::vector<Complex> out = dft(spec_, values_, FFTW_FORWARD);
        const double scale =
            std::pow(2.0 * kPi, -0.5 * spec_.d) * std::pow(spec_.spacing(), spec_.d);
        for (std::size_t i = 0; i < out.size(); ++i) out[i] *= scale * origin_phase(spec_, i);
        spectrum_ = std::move(out);
    }
    return *spectrum_;
}

GridField GridField::operator-(const GridField& other) const {
    if (!(spec_ == other.spec_)) throw std::domain_error("GridField: grid mismatch");
    std::vector<Complex> values(values_.size());
    for (std::size_t i = 0; i < values.size(); ++i) values[i] = values_[i] - other.values_[i];
    return GridField(spec_, std::move(values));
}

TensorField::TensorField(GridSpec spec, int order) : spec_(spec), order_(order) {
    if (order < 0) throw std::domain_error("TensorField: order must be >= 0");
    std::size_t count = 1;
    for (int i = 0; i < order; ++i) count *= static_cast<std::size_t>(spec_.d);
    comps_.assign(count, std::vector<Complex>(spec_.total_points(), Complex{0.0, 0.0}));
}

symtensor::SymTensor TensorField::at_point(std::size_t flat) const {
    symtensor::SymTensor t(spec_.d, order_);
    for (std::size_t c = 0; c < comps_.size(); ++c) t[c] = comps_[c][flat];
    return t;
}

void TensorField::set_point(std::size_t flat, const symtensor::SymTensor& value) {
    if (value.size() != comps_.size())
        throw std::domain_error("TensorField: tensor shape mismatch");
    for (std::size_t c = 0; c < comps_.size(); ++c) comps_[c][flat] = value[c];
}

double TensorField::pointwise_norm(std::size_t flat) const {
    double sum = 0.0;
    for (const auto& comp : comps_) sum += std::norm(comp[flat]);
    return std::sqrt(sum);
}

double sobolev_norm(const GridField& f, int n) {
    if (n < 0) throw std::domain_error("sobolev_norm: n must be >= 0");
    const auto& spec = f.spec();
    const auto& spectrum = f.spectrum();
    double sum = 0.0;
    std::vector<int> idx(spec.d);
    for (std::size_t i = 0; i < spectrum.size(); ++i) {
        unflatten_indices(spec, i, idx);
        double k2 = 0.0;
        for (int axis = 0; axis < spec.d; ++axis) {
            const double k = spec.wavenumber(idx[axis]);
            k2 += k * k;
        }
        sum += std::pow(1.0 + k2, n) * std::norm(spectrum[i]);
    }
    return std::sqrt(sum * std::pow(spec.dk(), spec.d));
}

double grad_l2_norm(const GridField& f, int m) {
    if (m < 0) throw std::domain_error("grad_l2_norm: m must be >= 0");
    const auto& spec = f.spec();
    const auto& spectrum = f.spectrum();
    double sum = 0.0;
    std::vector<int> idx(spec.d);
    for (std::size_t i = 0; i < spectrum.size(); ++i) {
        unflatten_indices(spec, i, idx);
        double k2 = 0.0;
        for (int axis = 0; axis < spec.d; ++axis) {
            const double k = spec.wavenumber(idx[axis]);
            k2 += k * k;
        }
        sum += std::pow(k2, m) * std::norm(spectrum[i]);
    }
    return std::sqrt(sum * std::pow(spec.dk(), spec.d));
}

double sobolev_norm_binomial(const GridField& f, int n) {
    if (n < 0) throw std::domain_error("sobolev_norm_binomial: n must be >= 0");
    double sum = 0.0;
    double binom = 1.0;
    for (int m = 0; m <= n; ++m) {
        if (m > 0) binom = binom * (n - m + 1) / m;
        const TensorField g = grad_m(f, m);
        double l2sq = 0.0;
        for (std::size_t i = 0; i < f.spec().total_points(); ++i) {
            const double pn = g.pointwise_norm(i);
            l2sq += pn * pn;
        }
        sum += binom * l2sq * std::pow(f.spec().spacing(), f.spec().d);
    }
    return std::sqrt(sum);
}

TensorField grad_m(const GridField& f, int m) {
    if (m < 0) throw std::domain_error("grad_m: m must be >= 0");
    const auto& spec = f.spec();
    if (m > symtensor::kMaxSymmetrizeOrder)
        throw ResourceError("grad_m: order exceeds the tensor order cap");
    TensorField out(spec, m);
    if (m == 0) {
        out.component(0) = f.values();
        return out;
    }
    const auto& spectrum = f.spectrum();
    const double scale = std::pow(2.0 * kPi, -0.5 * spec.d) * std::pow(spec.dk(), spec.d);
    std::vector<Complex> modes(spectrum.size());
    std::vector<int> idx(spec.d), axes(m);
    for (std::size_t c = 0; c < out.component_count(); ++c) {
        std::size_t rem = c;
        for (int i = m - 1; i >= 0; --i) {
            axes[i] = static_cast<int>(rem % spec.d);
            rem /= spec.d;
        }
        for (std::size_t i = 0; i < spectrum.size(); ++i) {
            unflatten_indices(spec, i, idx);
            Complex mult{1.0, 0.0};
            for (int t = 0; t < m; ++t) mult *= Complex{0.0, spec.wavenumber(idx[axes[t]])};
            modes[i] = mult * spectrum[i] * origin_phase(spec, i);
        }
        std::vector<Complex> values = dft(spec, modes, FFTW_BACKWARD);
        for (auto& v : values) v *= scale;
        out.component(c) = std::move(values);
    }
    return out;
}

double lp_norm(const GridField& f, const Exponent& p) {
    const auto& values = f.values();
    if (p.is_infinite()) {
        double best = 0.0;
        for (const auto& v : values) best = std::max(best, std::abs(v));
        return best;
    }
    const double pv = p.value();
    double sum = 0.0;
    for (const auto& v : values) sum += std::pow(std::abs(v), pv);
    return std::pow(sum * std::pow(f.spec().spacing(), f.spec().d), 1.0 / pv);
}

double lp_norm(const TensorField& t, const Exponent& p) {
    const std::size_t n = t.spec().total_points();
    if (p.is_infinite()) {
        double best = 0.0;
        for (std::size_t i = 0; i < n; ++i) best = std::max(best, t.pointwise_norm(i));
        return best;
    }
    const double pv = p.value();
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) sum += std::pow(t.pointwise_norm(i), pv);
    return std::pow(sum * std::pow(t.spec().spacing(), t.spec().d), 1.0 / pv);
}

GridField compose(const gmodel::GModel& model, const GridField& f) {
    const Exponent inf = Exponent::infinity();
    const double fmax = lp_norm(f, inf);
    if (!(fmax < model.radius()))
        throw std::domain_error("compose: grid maximum |f| = " + std::to_string(fmax) +
                                " is not below the model radius " +
                                std::to_string(model.radius()));
    const auto& spec = f.spec();
    std::vector<Complex> values(spec.total_points());
    const auto& in = f.values();
    parallel_for(values.size(), [&](std::size_t i) {
        std::vector<double> x(spec.d);
        f.point(i, x);
        values[i] = gmodel::evaluate(model, in[i], x);
    });
    return GridField(spec, std::move(values));
}

TensorField vee_fields(const TensorField& t, const TensorField& u) {
    if (!(t.spec() == u.spec())) throw std::domain_error("vee_fields: grid mismatch");
    TensorField out(t.spec(), t.order() + u.order());
    const std::size_t n = t.spec().total_points();
    for (std::size_t i = 0; i < n; ++i)
        out.set_point(i, symtensor::vee(t.at_point(i), u.at_point(i)));
    return out;
}

TensorField conjugate_field(const TensorField& t) {
    TensorField out(t.spec(), t.order());
    for (std::size_t c = 0; c < t.component_count(); ++c) {
        auto& dst = out.component(c);
        const auto& src = t.component(c);
        for (std::size_t i = 0; i < src.size(); ++i) dst[i] = std::conj(src[i]);
    }
    return out;
}

}  // namespace tamecalc::spectral
