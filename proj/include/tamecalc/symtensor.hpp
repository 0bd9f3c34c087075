#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "tamecalc/errors.hpp"

namespace tamecalc::symtensor {

// Symmetrization enumerates all order! index permutations; kept explicit and
// refused beyond this order.
inline constexpr int kMaxSymmetrizeOrder = 6;
// Dense-storage guard: dim^order components.
inline constexpr std::size_t kMaxComponents = 1'000'000;

// Scalar ring plug-in point. Specializations exist for std::complex<double>
// (production) and for exact coefficient rings used by tests.
template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<std::complex<double>> {
    static std::complex<double> zero() { return {0.0, 0.0}; }
    static std::complex<double> from_int(long long v) { return {static_cast<double>(v), 0.0}; }
    static std::complex<double> div_int(const std::complex<double>& v, long long n) {
        return v / static_cast<double>(n);
    }
    static std::complex<double> conjugate(const std::complex<double>& v) { return std::conj(v); }
};

// Dense tensor of the given order over dimension dim, components indexed
// row-major by lambda in {0..dim-1}^order. Order 0 is a single scalar.
template <class S>
class Tensor {
public:
    Tensor(int dim, int order)
        : dim_(dim), order_(order), comps_(checked_size(dim, order), ScalarTraits<S>::zero()) {}

    static Tensor scalar(int dim, S value) {
        Tensor t(dim, 0);
        t.comps_[0] = std::move(value);
        return t;
    }

    int dim() const { return dim_; }
    int order() const { return order_; }
    std::size_t size() const { return comps_.size(); }

    const S& operator[](std::size_t flat) const { return comps_[flat]; }
    S& operator[](std::size_t flat) { return comps_[flat]; }

    const std::vector<S>& components() const { return comps_; }
    std::vector<S>& components() { return comps_; }

    std::size_t flat_index(std::span<const int> idx) const {
        std::size_t flat = 0;
        for (int i : idx) flat = flat * dim_ + static_cast<std::size_t>(i);
        return flat;
    }
    void unflatten(std::size_t flat, std::span<int> idx) const {
        for (int i = order_ - 1; i >= 0; --i) {
            idx[static_cast<std::size_t>(i)] = static_cast<int>(flat % dim_);
            flat /= dim_;
        }
    }

    const S& at(std::span<const int> idx) const { return comps_[flat_index(idx)]; }
    S& at(std::span<const int> idx) { return comps_[flat_index(idx)]; }

    bool operator==(const Tensor& other) const {
        return dim_ == other.dim_ && order_ == other.order_ && comps_ == other.comps_;
    }

private:
    static std::size_t checked_size(int dim, int order) {
        if (dim < 1) throw std::domain_error("Tensor: dim must be >= 1");
        if (order < 0) throw std::domain_error("Tensor: order must be >= 0");
        std::size_t n = 1;
        for (int i = 0; i < order; ++i) {
            if (n > kMaxComponents / static_cast<std::size_t>(dim))
                throw ResourceError("Tensor: component count exceeds cap of " +
                                    std::to_string(kMaxComponents));
            n *= static_cast<std::size_t>(dim);
        }
        return n;
    }

    int dim_;
    int order_;
    std::vector<S> comps_;
};

namespace detail {
template <class S>
void require_same_dim(const Tensor<S>& t, const Tensor<S>& u, const char* op) {
    if (t.dim() != u.dim())
        throw std::domain_error(std::string(op) + ": dimension mismatch (" +
                                std::to_string(t.dim()) + " vs " + std::to_string(u.dim()) + ")");
}
}  // namespace detail

template <class S>
Tensor<S> operator+(const Tensor<S>& t, const Tensor<S>& u) {
    detail::require_same_dim(t, u, "tensor add");
    if (t.order() != u.order()) throw std::domain_error("tensor add: order mismatch");
    Tensor<S> out = t;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = out[i] + u[i];
    return out;
}

template <class S>
Tensor<S> operator-(const Tensor<S>& t, const Tensor<S>& u) {
    detail::require_same_dim(t, u, "tensor sub");
    if (t.order() != u.order()) throw std::domain_error("tensor sub: order mismatch");
    Tensor<S> out = t;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = out[i] - u[i];
    return out;
}

template <class S>
Tensor<S> scale(const Tensor<S>& t, const S& factor) {
    Tensor<S> out = t;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = out[i] * factor;
    return out;
}

// (T (x) U)_{lambda mu} = T_lambda U_mu; order-0 factors act as plain scalars.
template <class S>
Tensor<S> tensor_product(const Tensor<S>& t, const Tensor<S>& u) {
    detail::require_same_dim(t, u, "tensor_product");
    Tensor<S> out(t.dim(), t.order() + u.order());
    const std::size_t nu = u.size();
    for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = 0; j < nu; ++j) out[i * nu + j] = t[i] * u[j];
    return out;
}

// (P_sigma T)_{l_1..l_m} = T_{l_{sigma(1)}..l_{sigma(m)}}; sigma 0-based.
template <class S>
Tensor<S> permute(const Tensor<S>& t, std::span<const int> sigma) {
    const int m = t.order();
    if (static_cast<int>(sigma.size()) != m)
        throw std::domain_error("permute: permutation size does not match order");
    Tensor<S> out(t.dim(), m);
    std::vector<int> idx(m), pidx(m);
    for (std::size_t flat = 0; flat < t.size(); ++flat) {
        out.unflatten(flat, idx);
        for (int i = 0; i < m; ++i) pidx[i] = idx[sigma[i]];
        out[flat] = t[t.flat_index(pidx)];
    }
    return out;
}

// Average of T over all order! index permutations. Identity on orders 0, 1;
// idempotent; projects onto the symmetric subspace.
template <class S>
Tensor<S> symmetrize(const Tensor<S>& t) {
    const int m = t.order();
    if (m <= 1) return t;
    if (m > kMaxSymmetrizeOrder)
        throw ResourceError("symmetrize: order " + std::to_string(m) + " exceeds cap " +
                            std::to_string(kMaxSymmetrizeOrder));
    Tensor<S> acc(t.dim(), m);
    std::vector<int> sigma(m), idx(m), pidx(m);
    std::iota(sigma.begin(), sigma.end(), 0);
    long long count = 0;
    do {
        for (std::size_t flat = 0; flat < t.size(); ++flat) {
            acc.unflatten(flat, idx);
            for (int i = 0; i < m; ++i) pidx[i] = idx[sigma[i]];
            acc[flat] = acc[flat] + t[t.flat_index(pidx)];
        }
        ++count;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    for (std::size_t i = 0; i < acc.size(); ++i)
        acc[i] = ScalarTraits<S>::div_int(acc[i], count);
    return acc;
}

// T v U = symmetrize(T (x) U); commutative and associative.
template <class S>
Tensor<S> vee(const Tensor<S>& t, const Tensor<S>& u) {
    return symmetrize(tensor_product(t, u));
}

// q-fold v power; q = 0 gives the order-0 tensor with value 1.
template <class S>
Tensor<S> vee_power(const Tensor<S>& t, int q) {
    if (q < 0) throw std::domain_error("vee_power: q must be >= 0");
    if (q == 0) return Tensor<S>::scalar(t.dim(), ScalarTraits<S>::from_int(1));
    Tensor<S> out = symmetrize(t);
    for (int i = 1; i < q; ++i) out = vee(out, t);
    return out;
}

template <class S>
Tensor<S> conjugate(const Tensor<S>& t) {
    Tensor<S> out = t;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = ScalarTraits<S>::conjugate(out[i]);
    return out;
}

using SymTensor = Tensor<std::complex<double>>;

inline double norm(const SymTensor& t) {
    double sum = 0.0;
    for (std::size_t i = 0; i < t.size(); ++i) sum += std::norm(t[i]);
    return std::sqrt(sum);
}

// Debug serialization: dim, order, flat component list as [re, im] pairs.
inline nlohmann::ordered_json to_json(const SymTensor& t) {
    nlohmann::ordered_json out;
    out["dim"] = t.dim();
    out["order"] = t.order();
    auto comps = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < t.size(); ++i)
        comps.push_back({t[i].real(), t[i].imag()});
    out["components"] = std::move(comps);
    return out;
}

}  // namespace tamecalc::symtensor
