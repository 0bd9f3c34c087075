#pragma once

#include <functional>

#include "tamecalc/combinatorics.hpp"
#include "tamecalc/symtensor.hpp"

namespace tamecalc::symtensor {

// Assembly of the partition-sum side of the higher-order chain rule for a
// composite map, generic over the component ring (grid values, exact
// coefficient rings in tests). The pure-x derivative term of order m is NOT
// included; callers add it when the outer map depends on x.
//
// g_deriv(j, l) must return the order-l tensor of mixed derivatives of the
// outer map (j in the scalar slot, l in x), already evaluated along the inner
// map. f_grad(s) must return the order-s derivative tensor of the inner map.
template <class S>
Tensor<S> fdb_sum_real(int m, int dim,
                       const std::function<Tensor<S>(int j, int l)>& g_deriv,
                       const std::function<Tensor<S>(int s)>& f_grad) {
    if (m < 1) throw std::domain_error("fdb_sum_real: m must be >= 1");
    Tensor<S> total(dim, m);
    for (int j = 1; j <= m; ++j) {
        for (int l = 0; l <= m - j; ++l) {
            Tensor<S> part_sum(dim, m - l);
            for (const auto& p : combinatorics::enumerate_Djw(j, m - l)) {
                Tensor<S> prod = Tensor<S>::scalar(dim, ScalarTraits<S>::from_int(1));
                for (int s = 1; s <= p.max_part_index(); ++s)
                    if (p.part(s) > 0) prod = vee(prod, vee_power(f_grad(s), p.part(s)));
                const long long coeff =
                    combinatorics::fdb_coeff_real(m, p).convert_to<long long>();
                part_sum = part_sum + scale(prod, ScalarTraits<S>::from_int(coeff));
            }
            total = total + vee(g_deriv(j, l), part_sum);
        }
    }
    return total;
}

// Two-slot analogue: the outer map carries a conjugate scalar slot, and the
// partition products mix derivative tensors of the inner map with their
// conjugates. g_deriv(h, k, l) is the order-l tensor with h plain and k
// conjugate scalar derivatives.
template <class S>
Tensor<S> fdb_sum_complex(int m, int dim,
                          const std::function<Tensor<S>(int h, int k, int l)>& g_deriv,
                          const std::function<Tensor<S>(int s)>& f_grad,
                          const std::function<Tensor<S>(int s)>& f_grad_conj) {
    if (m < 1) throw std::domain_error("fdb_sum_complex: m must be >= 1");
    Tensor<S> total(dim, m);
    for (int h = 0; h <= m; ++h) {
        for (int k = 0; h + k <= m; ++k) {
            if (h + k < 1) continue;
            for (int l = 0; l <= m - h - k; ++l) {
                Tensor<S> part_sum(dim, m - l);
                for (const auto& pq : combinatorics::enumerate_Dhkw(h, k, m - l)) {
                    Tensor<S> prod = Tensor<S>::scalar(dim, ScalarTraits<S>::from_int(1));
                    for (int s = 1; s <= pq.p.max_part_index(); ++s)
                        if (pq.p.part(s) > 0)
                            prod = vee(prod, vee_power(f_grad(s), pq.p.part(s)));
                    for (int s = 1; s <= pq.q.max_part_index(); ++s)
                        if (pq.q.part(s) > 0)
                            prod = vee(prod, vee_power(f_grad_conj(s), pq.q.part(s)));
                    const long long coeff =
                        combinatorics::fdb_coeff_complex(m, pq).convert_to<long long>();
                    part_sum = part_sum + scale(prod, ScalarTraits<S>::from_int(coeff));
                }
                total = total + vee(g_deriv(h, k, l), part_sum);
            }
        }
    }
    return total;
}

}  // namespace tamecalc::symtensor
