#pragma once

#include <cmath>
#include <complex>
#include <numbers>

#include "alcove/root_system.hpp"

namespace alcove {

using ComplexValue = std::complex<double>;

inline constexpr double kDefaultTolerance = 1e-9;

/// A rational angle reduced to [0, 1), stored as p/q with 0 <= p < q.
struct Angle {
    Integer num = 0;
    Integer den = 1;

    Rational value() const { return Rational(num, den); }
    bool is_zero() const { return num == 0; }
    /// e^{2 pi i angle}; the reduction happens before the float conversion.
    ComplexValue exp() const {
        if (num == 0) return {1.0, 0.0};
        if (2 * num == den) return {-1.0, 0.0};
        if (4 * num == den) return {0.0, 1.0};
        if (4 * num == 3 * den) return {0.0, -1.0};
        double t = 2.0 * std::numbers::pi * static_cast<double>(num) / static_cast<double>(den);
        return {std::cos(t), std::sin(t)};
    }
};

inline Angle reduce_angle(const Rational& r) {
    Rational f = frac(r);
    return Angle{f.numerator(), f.denominator()};
}

inline Angle reduce_angle(Integer num, Integer den) {
    Integer p = num % den;
    if (p < 0) p += den;
    Integer g = std::gcd(p, den);
    if (g == 0) g = den;
    return Angle{p / g, den / g};
}

/// A point of t*, standing for the torus element exp(2 pi i nu^{-1}(mu_star)).
///
/// Pairings <lambda, nu^{-1}(mu)> = (lambda|mu) for integral lambda are computed
/// through a cached integer functional: (lambda|mu) = sum_i lambda_i num_i / den.
class TorusPoint {
public:
    TorusPoint() = default;
    TorusPoint(const RootSystem& rs, Weight mu_star) : mu_star_(std::move(mu_star)) {
        if (mu_star_.rank() != rs.rank()) throw DomainError("torus point rank mismatch");
        RationalVector g = rs.gram_weights() * mu_star_.coords;
        den_ = common_denominator(g);
        num_.resize(g.size());
        for (std::size_t i = 0; i < g.size(); ++i) num_[i] = (g[i] * Rational(den_)).numerator();
    }

    const Weight& mu_star() const { return mu_star_; }
    std::size_t rank() const { return mu_star_.rank(); }

    /// (lambda|mu) mod 1 for an integral weight lambda.
    Angle angle(const IntVector& lambda) const {
        Integer s = 0;
        for (std::size_t i = 0; i < num_.size(); ++i) s = (s + (lambda[i] % den_) * (num_[i] % den_)) % den_;
        return reduce_angle(s, den_);
    }
    /// (lambda|mu) exactly, for any rational weight.
    Rational pairing(const RationalVector& lambda) const {
        Rational s(0);
        for (std::size_t i = 0; i < num_.size(); ++i) s += lambda[i] * Rational(num_[i], den_);
        return s;
    }
    Angle angle(const Weight& lambda) const { return reduce_angle(pairing(lambda.coords)); }

    friend bool operator==(const TorusPoint& a, const TorusPoint& b) { return a.mu_star_ == b.mu_star_; }

private:
    Weight mu_star_;
    IntVector num_;
    Integer den_ = 1;
};

/// exp(2 pi i (lambda|mu)).
inline ComplexValue eval_exp(const Weight& lambda, const TorusPoint& x) { return x.angle(lambda).exp(); }

}  // namespace alcove
