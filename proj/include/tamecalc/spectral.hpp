#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "tamecalc/exponent.hpp"
#include "tamecalc/gmodel.hpp"
#include "tamecalc/symtensor.hpp"

namespace tamecalc::spectral {

using Complex = std::complex<double>;

// Periodic box [-L/2, L/2)^d sampled at N points per axis (N a power of two).
// Wavenumber lattice k = 2 pi m / L with m in [-N/2, N/2).
struct GridSpec {
    int d = 1;
    int points_per_axis = 0;
    double box_length = 0.0;

    GridSpec(int dim, int n, double length);

    std::size_t total_points() const;
    double spacing() const { return box_length / points_per_axis; }
    double dk() const;

    // Sample coordinate along one axis: x_i = -L/2 + i h.
    double coordinate(int index) const;
    // Lattice wavenumber for FFT-ordered index j in [0, N).
    double wavenumber(int index) const;

    bool operator==(const GridSpec&) const = default;
};

// Complex scalar field sampled on the box, with a lazily cached spectrum in
// the continuum normalization F f(k) = (2 pi)^{-d/2} Int f(x) e^{-ikx} dx
// (rectangle-rule surrogate on the box).
class GridField {
public:
    GridField(GridSpec spec, std::vector<Complex> values);

    static GridField zero(const GridSpec& spec);
    static GridField from_function(const GridSpec& spec,
                                   const std::function<Complex(std::span<const double>)>& fn);
    static GridField from_spectrum(const GridSpec& spec,
                                   const std::function<Complex(std::span<const double>)>& fn);

    const GridSpec& spec() const { return spec_; }
    const std::vector<Complex>& values() const { return values_; }
    const std::vector<Complex>& spectrum() const;

    // Sample coordinates of the flat point index.
    void point(std::size_t flat, std::span<double> x) const;

    GridField operator-(const GridField& other) const;

private:
    GridSpec spec_;
    std::vector<Complex> values_;
    mutable std::optional<std::vector<Complex>> spectrum_;
};

// Order-m tensor field: d^m component arrays over the same grid.
class TensorField {
public:
    TensorField(GridSpec spec, int order);

    const GridSpec& spec() const { return spec_; }
    int order() const { return order_; }
    std::size_t component_count() const { return comps_.size(); }

    const std::vector<Complex>& component(std::size_t c) const { return comps_[c]; }
    std::vector<Complex>& component(std::size_t c) { return comps_[c]; }

    symtensor::SymTensor at_point(std::size_t flat) const;
    void set_point(std::size_t flat, const symtensor::SymTensor& value);
    double pointwise_norm(std::size_t flat) const;

private:
    GridSpec spec_;
    int order_;
    std::vector<std::vector<Complex>> comps_;
};

// Sobolev norm via the Fourier-side weight sqrt(1 + |k|^2)^n.
double sobolev_norm(const GridField& f, int n);
// Same norm via the binomial sum of derivative L2 norms; the two routes are
// cross-checked in tests.
double sobolev_norm_binomial(const GridField& f, int n);

// All order-m partials as a tensor field, via multipliers (ik)^{(x) m}.
TensorField grad_m(const GridField& f, int m);

// |grad^m f|_{L2} computed on the Fourier side as | |k|^m F f |_{L2}.
double grad_l2_norm(const GridField& f, int m);

double lp_norm(const GridField& f, const Exponent& p);
double lp_norm(const TensorField& t, const Exponent& p);

// Pointwise composition G(f(x), x). Requires max |f| strictly below the model
// radius; the error message reports the offending grid maximum.
GridField compose(const gmodel::GModel& model, const GridField& f);

// Pointwise symmetrized product and conjugation of tensor fields.
TensorField vee_fields(const TensorField& t, const TensorField& u);
TensorField conjugate_field(const TensorField& t);

}  // namespace tamecalc::spectral
