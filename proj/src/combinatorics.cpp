#include "tamecalc/combinatorics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace tamecalc::combinatorics {

namespace {

std::string idx_str(int m, int j, int l) {
    std::ostringstream os;
    os << "(m=" << m << ", j=" << j << ", l=" << l << ")";
    return os.str();
}

void require_triangle(int m, int j, int l) {
    if (m < 1 || j < 1 || j > m || l < 0 || l > m - j)
        throw std::domain_error("coefficient index outside triangular range " + idx_str(m, j, l));
}

}  // namespace

BigInt factorial(int n) {
    if (n < 0) throw std::domain_error("factorial: negative argument");
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

BigInt binomial(int n, int k) {
    if (n < 0 || k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (int i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;  // exact: product of i+1 consecutive integers
    }
    return r;
}

StirlingTable::StirlingTable(int max_order) : max_order_(max_order) {
    if (max_order < 1) throw std::domain_error("StirlingTable: max_order must be >= 1");
    rows_.resize(max_order);
    rows_[0] = {BigInt(1)};
    for (int m = 2; m <= max_order; ++m) {
        auto& row = rows_[m - 1];
        row.assign(m, 0);
        const auto& prev = rows_[m - 2];
        auto prev_at = [&](int j) -> BigInt {
            return (j >= 1 && j <= m - 1) ? prev[j - 1] : BigInt(0);
        };
        for (int j = 1; j <= m; ++j)
            row[j - 1] = prev_at(j - 1) + BigInt(j) * prev_at(j);
    }
}

const BigInt& StirlingTable::value(int j, int m) const {
    if (m < 1 || m > max_order_ || j < 1 || j > m)
        throw std::domain_error("StirlingTable: (j,m) out of range");
    return rows_[m - 1][j - 1];
}

BigInt stirling2(int j, int m) {
    if (m < 1 || j < 1 || j > m)
        throw std::domain_error("stirling2: requires 1 <= j <= m");
    return StirlingTable(m).value(j, m);
}

BigInt pm_coeff_stirling(int m, int j, int l) {
    require_triangle(m, j, l);
    return binomial(m, l) * stirling2(j, m - l);
}

BigInt pm_coeff_explicit(int m, int j, int l) {
    require_triangle(m, j, l);
    BigInt sum = 0;
    for (int s = 0; s <= j; ++s) {
        BigInt term = binomial(j, s);
        BigInt p = 1;
        for (int e = 0; e < m - l; ++e) p *= s;
        term *= p;
        sum += ((j - s) % 2 == 0) ? term : -term;
    }
    const BigInt jf = factorial(j);
    if (sum % jf != 0)
        throw std::logic_error("pm_coeff_explicit: alternating sum not divisible by j! at " +
                               idx_str(m, j, l));
    return binomial(m, l) * (sum / jf);
}

BigInt pm_coeff_recursive(int m, int j, int l) {
    require_triangle(m, j, l);
    // Dense DP over the triangle; out-of-range entries read as zero.
    std::vector<std::vector<BigInt>> cur(2), nxt;  // cur[j-1][l]
    cur[0] = {BigInt(1)};  // P_{110} = 1
    cur[1] = {};
    for (int mm = 1; mm < m; ++mm) {
        auto at = [&](int jj, int ll) -> BigInt {
            if (jj < 1 || jj > mm || ll < 0 || ll > mm - jj) return 0;
            return cur[jj - 1][ll];
        };
        nxt.assign(mm + 2, {});
        for (int jj = 1; jj <= mm + 1; ++jj) {
            nxt[jj - 1].assign(mm + 2 - jj, 0);
            for (int ll = 0; ll <= mm + 1 - jj; ++ll) {
                BigInt v = at(jj, ll - 1) + at(jj - 1, ll) + BigInt(jj) * at(jj, ll);
                if (jj == 1 && ll == mm) v += 1;
                nxt[jj - 1][ll] = v;
            }
        }
        cur = std::move(nxt);
    }
    return cur[j - 1][l];
}

PmPolynomial PmPolynomial::build(int m) {
    if (m < 1) throw std::domain_error("PmPolynomial: order must be >= 1");
    PmPolynomial poly(m);
    StirlingTable table(m);
    for (int j = 1; j <= m; ++j)
        for (int l = 0; l <= m - j; ++l)
            poly.coeffs_[{j, l}] = binomial(m, l) * table.value(j, m - l);
    return poly;
}

const BigInt& PmPolynomial::coeff(int j, int l) const {
    require_triangle(order_, j, l);
    return coeffs_.at({j, l});
}

nlohmann::ordered_json PmPolynomial::to_json() const {
    nlohmann::ordered_json out;
    out["m"] = order_;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& [key, value] : coeffs_) {
        nlohmann::ordered_json entry;
        entry["j"] = key.first;
        entry["l"] = key.second;
        entry["value"] = value.str();
        arr.push_back(entry);
    }
    out["coeffs"] = std::move(arr);
    return out;
}

double pm_evaluate(const PmPolynomial& poly,
                   const std::function<double(int, int)>& nu, double rho) {
    if (!(rho >= 0.0)) throw std::domain_error("pm_evaluate: rho must be >= 0");
    double sum = 0.0;
    for (const auto& [key, value] : poly.coeffs()) {
        const double v = nu(key.first, key.second);
        if (!(v >= 0.0) || !std::isfinite(v))
            throw std::domain_error("pm_evaluate: nu entries must be finite and >= 0");
        if (v == 0.0) continue;
        sum += static_cast<double>(value) * v * std::pow(rho, key.first);
    }
    return sum;
}

PartitionSeq::PartitionSeq(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p < 0) throw std::domain_error("PartitionSeq: entries must be >= 0");
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

int PartitionSeq::weight() const {
    int w = 0;
    for (std::size_t i = 0; i < parts_.size(); ++i) w += static_cast<int>(i + 1) * parts_[i];
    return w;
}

int PartitionSeq::length() const {
    int j = 0;
    for (int p : parts_) j += p;
    return j;
}

int PartitionSeq::part(int s) const {
    if (s < 1) throw std::domain_error("PartitionSeq: part index is 1-based");
    return s <= static_cast<int>(parts_.size()) ? parts_[s - 1] : 0;
}

std::string PartitionSeq::str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(parts_[i]);
    }
    return out + ")";
}

std::string PartitionPair::str() const { return p.str() + "x" + q.str(); }

namespace {

// Emits every sequence with the given length and weight using parts <= s_max.
void enumerate_rec(int s_max, int length, int weight, std::vector<int>& scratch,
                   std::vector<PartitionSeq>& out) {
    if (length == 0) {
        if (weight == 0) out.emplace_back(scratch);
        return;
    }
    if (weight < length || weight > length * s_max) return;
    if (s_max == 1) {
        if (weight == length) {
            scratch[0] += length;
            out.emplace_back(scratch);
            scratch[0] -= length;
        }
        return;
    }
    const int max_count = std::min(length, weight / s_max);
    for (int c = 0; c <= max_count; ++c) {
        scratch[s_max - 1] = c;
        enumerate_rec(s_max - 1, length - c, weight - c * s_max, scratch, out);
    }
    scratch[s_max - 1] = 0;
}

}  // namespace

std::vector<PartitionSeq> enumerate_Djw(int j, int w) {
    if (j < 1 || w < j)
        throw std::domain_error("enumerate_Djw: requires 1 <= j <= w");
    std::vector<PartitionSeq> out;
    std::vector<int> scratch(w, 0);
    enumerate_rec(w, j, w, scratch, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<PartitionPair> enumerate_Dhkw(int h, int k, int w) {
    if (h < 0 || k < 0 || h + k < 1 || h + k > w)
        throw std::domain_error("enumerate_Dhkw: requires h,k >= 0 and 1 <= h+k <= w");
    std::vector<PartitionPair> out;
    const int wp_lo = (h == 0) ? 0 : h;
    const int wp_hi = w - ((k == 0) ? 0 : k);
    for (int wp = wp_lo; wp <= wp_hi; ++wp) {
        std::vector<PartitionSeq> ps =
            (h == 0) ? (wp == 0 ? std::vector<PartitionSeq>{PartitionSeq{}}
                                : std::vector<PartitionSeq>{})
                     : enumerate_Djw(h, wp);
        if (ps.empty()) continue;
        const int wq = w - wp;
        std::vector<PartitionSeq> qs =
            (k == 0) ? (wq == 0 ? std::vector<PartitionSeq>{PartitionSeq{}}
                                : std::vector<PartitionSeq>{})
                     : (wq >= k ? enumerate_Djw(k, wq) : std::vector<PartitionSeq>{});
        for (const auto& p : ps)
            for (const auto& q : qs) out.push_back({p, q});
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

BigInt block_denominator(const PartitionSeq& p) {
    BigInt den = 1;
    for (int s = 1; s <= p.max_part_index(); ++s) {
        const int c = p.part(s);
        if (c == 0) continue;
        BigInt sf = factorial(s);
        for (int i = 0; i < c; ++i) den *= sf;
        den *= factorial(c);
    }
    return den;
}

}  // namespace

BigInt fdb_coeff_real(int m, const PartitionSeq& p) {
    const int w = p.weight();
    if (w < 1 || w > m)
        throw std::domain_error("fdb_coeff_real: requires 1 <= weight(p) <= m");
    const BigInt num = factorial(m) / factorial(m - w);
    const BigInt den = block_denominator(p);
    if (num % den != 0)
        throw std::logic_error("fdb_coeff_real: non-integer coefficient (bug)");
    return num / den;
}

BigInt fdb_coeff_complex(int m, const PartitionPair& pq) {
    const int w = pq.p.weight() + pq.q.weight();
    if (w < 1 || w > m)
        throw std::domain_error("fdb_coeff_complex: requires 1 <= total weight <= m");
    const BigInt num = factorial(m) / factorial(m - w);
    const BigInt den = block_denominator(pq.p) * block_denominator(pq.q);
    if (num % den != 0)
        throw std::logic_error("fdb_coeff_complex: non-integer coefficient (bug)");
    return num / den;
}

SumIdentityReport check_sum_identities(int m) {
    if (m < 1) throw std::domain_error("check_sum_identities: m must be >= 1");
    SumIdentityReport report;
    report.m = m;
    report.single_sequence_pass = true;
    report.pair_sequence_pass = true;

    const PmPolynomial poly = PmPolynomial::build(m);

    for (int j = 1; j <= m; ++j) {
        for (int l = 0; l <= m - j; ++l) {
            BigInt lhs = 0;
            for (const auto& p : enumerate_Djw(j, m - l)) lhs += fdb_coeff_real(m, p);
            const BigInt& rhs = poly.coeff(j, l);
            if (lhs != rhs) {
                report.single_sequence_pass = false;
                report.failures.push_back({j, l, -1, -1, lhs, rhs});
            }
        }
    }
    for (int h = 0; h <= m; ++h) {
        for (int k = 0; h + k <= m; ++k) {
            if (h + k < 1) continue;
            for (int l = 0; l <= m - h - k; ++l) {
                BigInt lhs = 0;
                for (const auto& pq : enumerate_Dhkw(h, k, m - l))
                    lhs += fdb_coeff_complex(m, pq);
                const BigInt rhs = binomial(h + k, h) * poly.coeff(h + k, l);
                if (lhs != rhs) {
                    report.pair_sequence_pass = false;
                    report.failures.push_back({-1, l, h, k, lhs, rhs});
                }
            }
        }
    }
    return report;
}

double bell_polynomial_value(int w, std::span<const double> t) {
    if (w < 1) throw std::domain_error("bell_polynomial_value: w must be >= 1");
    if (static_cast<int>(t.size()) < w)
        throw std::domain_error("bell_polynomial_value: needs at least w arguments");
    double sum = 0.0;
    for (int j = 1; j <= w; ++j) {
        for (const auto& p : enumerate_Djw(j, w)) {
            double term = static_cast<double>(fdb_coeff_real(w, p));
            for (int s = 1; s <= p.max_part_index(); ++s)
                for (int c = 0; c < p.part(s); ++c) term *= t[s - 1];
            sum += term;
        }
    }
    return sum;
}

BigInt bell_number(int w) {
    if (w < 1) throw std::domain_error("bell_number: w must be >= 1");
    BigInt sum = 0;
    StirlingTable table(w);
    for (int j = 1; j <= w; ++j) sum += table.value(j, w);
    return sum;
}

}  // namespace tamecalc::combinatorics
