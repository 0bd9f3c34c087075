#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace tamecalc::combinatorics {

using BigInt = boost::multiprecision::cpp_int;

BigInt factorial(int n);
BigInt binomial(int n, int k);

// Stirling number of the second kind S^j_m: number of partitions of an
// m-element set into j nonempty blocks. Requires 1 <= j <= m.
BigInt stirling2(int j, int m);

// Triangular table of S^j_m for 1 <= j <= m <= max_order, built once via the
// recurrence S^j_{m+1} = S^{j-1}_m + j S^j_m.
class StirlingTable {
public:
    explicit StirlingTable(int max_order);
    int max_order() const { return max_order_; }
    const BigInt& value(int j, int m) const;

private:
    int max_order_;
    std::vector<std::vector<BigInt>> rows_;  // rows_[m-1][j-1] = S^j_m
};

// The three independent routes to the universal-polynomial coefficients
// P_{mjl}, valid on the triangle m >= 1, 1 <= j <= m, 0 <= l <= m - j.
// All routes are exact integer arithmetic and must agree entrywise.
BigInt pm_coeff_recursive(int m, int j, int l);
BigInt pm_coeff_explicit(int m, int j, int l);
BigInt pm_coeff_stirling(int m, int j, int l);  // binom(m,l) * S^j_{m-l}

// Coefficient table of the universal polynomial
//   P_m((nu_jl), rho) = sum_{j,l} P_{mjl} nu_jl rho^j.
class PmPolynomial {
public:
    static PmPolynomial build(int m);

    int order() const { return order_; }
    // P_{mjl}; throws std::domain_error outside the triangular index range.
    const BigInt& coeff(int j, int l) const;
    const std::map<std::pair<int, int>, BigInt>& coeffs() const { return coeffs_; }

    // {"m": 4, "coeffs": [{"j":1,"l":0,"value":"1"}, ...]} with values as
    // decimal strings so downstream consumers never overflow 64-bit ints.
    nlohmann::ordered_json to_json() const;

private:
    explicit PmPolynomial(int order) : order_(order) {}
    int order_ = 0;
    std::map<std::pair<int, int>, BigInt> coeffs_;
};

// Evaluates sum P_{mjl} * nu(j,l) * rho^j. nu must return finite nonnegative
// values on the triangle (absent variables read as 0); rho must be >= 0.
double pm_evaluate(const PmPolynomial& poly,
                   const std::function<double(int j, int l)>& nu, double rho);

// Finitely supported sequence p = (p_1, p_2, ...) of nonnegative integers,
// stored with trailing zeros trimmed. Indexes one term of the higher-order
// chain rule: weight(p) = sum s*p_s, length(p) = sum p_s.
class PartitionSeq {
public:
    PartitionSeq() = default;
    explicit PartitionSeq(std::vector<int> parts);

    int weight() const;
    int length() const;
    int part(int s) const;  // p_s, 1-based; 0 beyond the stored range
    int max_part_index() const { return static_cast<int>(parts_.size()); }
    const std::vector<int>& parts() const { return parts_; }

    auto operator<=>(const PartitionSeq&) const = default;
    std::string str() const;

private:
    std::vector<int> parts_;
};

struct PartitionPair {
    PartitionSeq p;
    PartitionSeq q;
    auto operator<=>(const PartitionPair&) const = default;
    std::string str() const;
};

// All p with length(p) = j and weight(p) = w, in lexicographic order of the
// part vectors. Requires 1 <= j <= w; the result is never empty.
std::vector<PartitionSeq> enumerate_Djw(int j, int w);

// All (p, q) with length(p) = h, length(q) = k, weight(p) + weight(q) = w,
// lexicographic in (p, q). Requires h, k >= 0 and 1 <= h + k <= w.
std::vector<PartitionPair> enumerate_Dhkw(int h, int k, int w);

// Chain-rule coefficient m! / ((m - weight(p))! * prod_s (s!)^{p_s} p_s!).
// Requires 1 <= weight(p) <= m; the value is a strictly positive integer.
BigInt fdb_coeff_real(int m, const PartitionSeq& p);

// Two-sequence analogue with the conjugate block:
// m! / ((m - w)! * prod (s!)^{p_s} p_s! * prod (s!)^{q_s} q_s!),
// w = weight(p) + weight(q).
BigInt fdb_coeff_complex(int m, const PartitionPair& pq);

// Verifies, for every admissible index combination at order m, that the
// partition sums reproduce the P_{mjl} table:
//   sum_{p in D_{j,m-l}} coeff(p)            == P_{mjl}
//   sum_{(p,q) in D_{hk,m-l}} coeff(p,q)     == binom(h+k,h) P_{m,h+k,l}
struct SumIdentityReport {
    struct Failure {
        int j = -1, l = -1, h = -1, k = -1;
        BigInt lhs, rhs;
    };
    int m = 0;
    bool single_sequence_pass = false;
    bool pair_sequence_pass = false;
    std::vector<Failure> failures;
    bool all_pass() const { return single_sequence_pass && pair_sequence_pass; }
};
SumIdentityReport check_sum_identities(int m);

// Bell polynomial Y_w(t_1, ..., t_w) as the partition sum
// sum_{weight(p)=w} w!/(prod (s!)^{p_s} p_s!) prod t_s^{p_s}.
double bell_polynomial_value(int w, std::span<const double> t);

// Bell number B_w = Y_w(1, ..., 1), exact.
BigInt bell_number(int w);

}  // namespace tamecalc::combinatorics
