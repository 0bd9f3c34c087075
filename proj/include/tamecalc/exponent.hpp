#pragma once

#include <stdexcept>
#include <string>

namespace tamecalc {

// Lebesgue exponent p in [1, +inf]. Infinity is a distinct state, never a
// float sentinel.
class Exponent {
public:
    static Exponent finite(double p) {
        if (!(p >= 1.0))
            throw std::domain_error("Exponent: p must be >= 1, got " + std::to_string(p));
        return Exponent(p, false);
    }
    static Exponent infinity() { return Exponent(0.0, true); }

    bool is_infinite() const { return inf_; }
    double value() const {
        if (inf_) throw std::logic_error("Exponent: value() called on infinity");
        return p_;
    }
    // 1/p, with the convention 1/inf = 0.
    double reciprocal() const { return inf_ ? 0.0 : 1.0 / p_; }

    std::string str() const { return inf_ ? "inf" : std::to_string(p_); }

private:
    Exponent(double p, bool inf) : p_(p), inf_(inf) {}
    double p_;
    bool inf_;
};

}  // namespace tamecalc
