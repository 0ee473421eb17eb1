#pragma once

#include <cmath>
#include <cstdio>
#include <complex>
#include <numbers>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "alcove/characters.hpp"
#include "alcove/errors.hpp"
#include "alcove/parallel.hpp"

namespace alcove {

inline std::string format_scientific(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6e", v);
    return buf;
}

struct IdentityReport {
    std::string name;
    std::string system;
    Integer level = -1;  ///< -1 when the identity has no level
    std::vector<std::string> sample_points;
    std::vector<double> residuals;
    double max_residual = 0.0;
    double tolerance = kDefaultTolerance;
    bool passed = false;
    std::vector<std::pair<std::string, std::string>> details;

    void finalize() {
        max_residual = 0.0;
        for (double r : residuals) max_residual = std::max(max_residual, std::isnan(r) ? INFINITY : r);
        passed = max_residual < tolerance;
    }
};

/// Random rational torus points mu = n/p with p a prime in [101, 499] and 1 <= n_i < p.
class PointSampler {
public:
    explicit PointSampler(std::uint64_t seed) : rng_(seed) {
        for (Integer p = 101; p <= 499; ++p) {
            bool prime = true;
            for (Integer d = 2; d * d <= p; ++d)
                if (p % d == 0) prime = false;
            if (prime) primes_.push_back(p);
        }
    }

    TorusPoint next(const RootSystem& rs) {
        Integer p = primes_[std::uniform_int_distribution<std::size_t>(0, primes_.size() - 1)(rng_)];
        std::uniform_int_distribution<Integer> num(1, p - 1);
        RationalVector c(rs.rank());
        for (auto& v : c) v = Rational(num(rng_), p);
        return TorusPoint(rs, Weight(c));
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
    std::vector<Integer> primes_;
};

namespace detail {

inline ComplexValue one_minus(const Angle& a) { return ComplexValue(1.0, 0.0) - a.exp(); }

/// Angles (w Lambda_i | x) for every w, as exact rationals mod 1.
inline std::vector<std::vector<Rational>> fundamental_angles(const WeylGroup& W, const TorusPoint& x) {
    const std::size_t n = W.root_system().rank();
    std::vector<std::vector<Rational>> out;
    out.reserve(W.order());
    for (const auto& w : W.elements()) {
        std::vector<Rational> row(n);
        for (std::size_t i = 0; i < n; ++i) row[i] = x.angle(w.action.column(i)).value();
        out.push_back(std::move(row));
    }
    return out;
}

using WideComplex = std::complex<long double>;

inline WideComplex wide_exp(const Rational& angle) {
    Rational f = frac(angle);
    long double t = 2.0L * std::numbers::pi_v<long double> * static_cast<long double>(f.numerator()) /
                    static_cast<long double>(f.denominator());
    return {std::cos(t), std::sin(t)};
}

inline WideComplex wide_one_minus(const Rational& angle) { return WideComplex(1.0L, 0.0L) - wide_exp(angle); }

/// prod_{alpha>0} (1 - e^{-w alpha}) at x for every w; PoleError if a factor vanishes.
inline std::vector<WideComplex> denominators_over_w(const WeylGroup& W, const TorusPoint& x) {
    const RootSystem& rs = W.root_system();
    std::vector<WideComplex> out;
    out.reserve(W.order());
    for (const auto& w : W.elements()) {
        WideComplex d(1.0L, 0.0L);
        for (const auto& a : rs.positive_roots()) {
            Angle t = x.angle(-w.apply(a.weight.integral()));
            if (t.is_zero()) throw PoleError("root vanishes at " + to_string(x.mu_star()));
            d *= wide_one_minus(t.value());
        }
        out.push_back(d);
    }
    return out;
}

}  // namespace detail

/// sum_{w,v} 1 / ( prod_a (1 - z^{-w a}) prod_i (1 - z^{w Lambda_i} z1^{v Lambda_i}) prod_a (1 - z1^{-v a}) )
/// with z = e^{2 pi i x}, z1 = e^{2 pi i y}. The sum is expected to vanish.
inline ComplexValue fundamental_formula_residual(const WeylGroup& W, const TorusPoint& x, const TorusPoint& y) {
    auto dx = detail::denominators_over_w(W, x);
    auto dy = detail::denominators_over_w(W, y);
    auto ax = detail::fundamental_angles(W, x);
    auto ay = detail::fundamental_angles(W, y);
    const std::size_t n = W.root_system().rank();
    for (std::size_t w = 0; w < W.order(); ++w)
        for (std::size_t v = 0; v < W.order(); ++v)
            for (std::size_t i = 0; i < n; ++i)
                if (is_integer(ax[w][i] + ay[v][i])) throw PoleError("mixed factor vanishes");
    // long double: the terms are large near poles and cancel to 0
    detail::WideComplex sum(0.0L, 0.0L);
    for (std::size_t w = 0; w < W.order(); ++w)
        for (std::size_t v = 0; v < W.order(); ++v) {
            detail::WideComplex d = dx[w] * dy[v];
            for (std::size_t i = 0; i < n; ++i) d *= detail::wide_one_minus(ax[w][i] + ay[v][i]);
            sum += detail::WideComplex(1.0L, 0.0L) / d;
        }
    return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
}

/// sum_{w} sum_{S} (-1)^{|S|} / prod_{i in S} (1 - e^{2 pi i (w Lambda_i | x)}), S over subsets of the
/// fundamental weights; the empty subset contributes 1 per w only when include_empty is set.
inline ComplexValue subset_identity_residual(const WeylGroup& W, const TorusPoint& x, bool include_empty) {
    const std::size_t n = W.root_system().rank();
    auto ax = detail::fundamental_angles(W, x);
    ComplexValue sum(0.0, 0.0);
    for (const auto& row : ax) {
        std::vector<ComplexValue> inv(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (row[i] == 0) throw PoleError("fundamental weight pairs integrally at " + to_string(x.mu_star()));
            inv[i] = ComplexValue(1.0, 0.0) / detail::one_minus(reduce_angle(row[i]));
        }
        for (std::size_t mask = include_empty ? 0 : 1; mask < (std::size_t{1} << n); ++mask) {
            ComplexValue term(1.0, 0.0);
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (std::size_t{1} << i)) term *= -inv[i];
            sum += term;
        }
    }
    return sum;
}

/// Density and normalization of the grid sums.
///   Hermitian:       |D|^2
///   LiteralSquare:   (-1)^l D^2, D = prod_{a>0} (1 - e^{-a})
///   SymmetricSquare: (-1)^l (e^{rho} D)^2
enum class Density { Hermitian, LiteralSquare, SymmetricSquare };

inline std::string to_string(Density d) {
    switch (d) {
        case Density::Hermitian: return "hermitian";
        case Density::LiteralSquare: return "literal-square";
        case Density::SymmetricSquare: return "symmetric-square";
    }
    return "?";
}

struct GridConvention {
    GridMode grid = GridMode::Shifted;
    Density density = Density::Hermitian;
    bool divide_by_weyl_order = false;  ///< orbit correction 1/|W|
};

/// The convention fixed by the rank-1 oracle (see tests/identities_test.cpp).
inline GridConvention frozen_convention() { return {GridMode::Shifted, Density::Hermitian, false}; }

/// The normalization a given grid mode needs to reproduce delta_{ab}.
inline GridConvention convention_for(GridMode mode) {
    return {mode, Density::Hermitian, mode == GridMode::Full};
}

inline ComplexValue grid_density(const RootSystem& rs, const TorusPoint& x, Density d) {
    ComplexValue den = weyl_denominator(rs, x);
    switch (d) {
        case Density::Hermitian: return ComplexValue(std::norm(den), 0.0);
        case Density::LiteralSquare: return den * den;
        case Density::SymmetricSquare: {
            IntVector two_rho = (Rational(2) * rs.rho()).integral();
            return den * den * x.angle(two_rho).exp();
        }
    }
    return {};
}

/// Overall factor: 1/|M*/(k+h^vee)M|, times (-1)^l for the squared densities, times 1/|W| if requested.
inline double grid_prefactor(const WeylGroup& W, Integer k, const GridConvention& c) {
    const RootSystem& rs = W.root_system();
    double f = 1.0 / static_cast<double>(lattice_index(rs, k));
    if (c.density != Density::Hermitian && rs.rank() % 2 == 1) f = -f;
    if (c.divide_by_weyl_order) f /= static_cast<double>(W.order());
    return f;
}

/// Densities for every grid column of a table (0 at non-regular points).
inline std::vector<ComplexValue> grid_densities(const RootSystem& rs, const CharacterTable& t, Density d) {
    std::vector<ComplexValue> out(t.grid.size(), ComplexValue(0.0, 0.0));
    for (std::size_t j = 0; j < t.grid.size(); ++j)
        if (t.regular[j]) out[j] = grid_density(rs, t.grid[j].point, d);
    return out;
}

using ComplexMatrix = std::vector<std::vector<ComplexValue>>;

/// Entry (a,b) = prefactor * sum_tau chi_b(tau) chi_abar(tau) density(tau), a, b in P_+^k.
inline ComplexMatrix orthogonality_matrix(const WeylGroup& W, Integer k, const GridConvention& c) {
    const RootSystem& rs = W.root_system();
    CharacterTable t = character_table(W, k, c.grid);
    auto dens = grid_densities(rs, t, c.density);
    const double pref = grid_prefactor(W, k, c);
    const std::size_t n = t.weights.size();
    std::vector<std::size_t> bar(n);
    for (std::size_t a = 0; a < n; ++a) bar[a] = t.row_of(contragredient(rs, t.weights[a]));
    ComplexMatrix m(n, std::vector<ComplexValue>(n));
    parallel_for(n, [&](std::size_t a) {
        for (std::size_t b = 0; b < n; ++b) {
            ComplexValue s(0.0, 0.0);
            for (std::size_t j = 0; j < t.grid.size(); ++j) s += t.values[b][j] * t.values[bar[a]][j] * dens[j];
            m[a][b] = pref * s;
        }
    });
    return m;
}

inline ComplexMatrix orthogonality_matrix(const WeylGroup& W, Integer k, GridMode mode) {
    return orthogonality_matrix(W, k, convention_for(mode));
}

/// max_{a,b} |m_ab - delta_ab|.
inline double identity_deviation(const ComplexMatrix& m) {
    double d = 0.0;
    for (std::size_t a = 0; a < m.size(); ++a)
        for (std::size_t b = 0; b < m[a].size(); ++b)
            d = std::max(d, std::abs(m[a][b] - ComplexValue(a == b ? 1.0 : 0.0, 0.0)));
    return d;
}

// Suites. Points are drawn sequentially from the sampler so a seed fixes them irrespective of threads.

inline IdentityReport fundamental_formula_report(const WeylGroup& W, std::size_t samples, std::uint64_t seed,
                                                 double tol) {
    const RootSystem& rs = W.root_system();
    PointSampler sampler(seed);
    std::vector<std::pair<TorusPoint, TorusPoint>> pts;
    std::size_t rejected = 0;
    while (pts.size() < samples) {
        TorusPoint x = sampler.next(rs), y = sampler.next(rs);
        try {
            fundamental_formula_residual(W, x, y);  // pole screening is exact, before any summation is used
            pts.emplace_back(x, y);
        } catch (const PoleError&) {
            ++rejected;
        }
    }
    IdentityReport r;
    r.name = "fundamental_formula";
    r.system = rs.type().name();
    r.tolerance = tol;
    r.residuals.assign(samples, 0.0);
    parallel_for(samples, [&](std::size_t i) {
        r.residuals[i] = std::abs(fundamental_formula_residual(W, pts[i].first, pts[i].second));
    });
    for (const auto& [x, y] : pts) r.sample_points.push_back(to_string(x.mu_star()) + ";" + to_string(y.mu_star()));
    r.details.emplace_back("terms_per_point", std::to_string(W.order() * W.order()));
    r.details.emplace_back("rejected_samples", std::to_string(rejected));
    r.finalize();
    return r;
}

/// |sum - 1| over random points; also reports the spread of the sum across points.
inline IdentityReport subset_identity_report(const WeylGroup& W, std::size_t samples, std::uint64_t seed, double tol,
                                             bool include_empty = true) {
    const RootSystem& rs = W.root_system();
    PointSampler sampler(seed);
    IdentityReport r;
    r.name = include_empty ? "subset_identity" : "subset_identity_without_empty";
    r.system = rs.type().name();
    r.tolerance = tol;
    std::vector<ComplexValue> sums;
    std::size_t rejected = 0;
    while (sums.size() < samples) {
        TorusPoint x = sampler.next(rs);
        try {
            sums.push_back(subset_identity_residual(W, x, include_empty));
            r.sample_points.push_back(to_string(x.mu_star()));
        } catch (const PoleError&) {
            ++rejected;
        }
    }
    double spread = 0.0;
    for (const auto& s : sums) {
        r.residuals.push_back(std::abs(s - ComplexValue(1.0, 0.0)));
        spread = std::max(spread, std::abs(s - sums.front()));
    }
    if (!sums.empty()) {
        r.details.emplace_back("observed_value_re", format_scientific(sums.front().real()));
        r.details.emplace_back("observed_value_im", format_scientific(sums.front().imag()));
    }
    r.details.emplace_back("spread_across_points", format_scientific(spread));
    r.details.emplace_back("rejected_samples", std::to_string(rejected));
    r.finalize();
    return r;
}

inline IdentityReport orthogonality_report(const WeylGroup& W, Integer k, const GridConvention& c, double tol) {
    IdentityReport r;
    r.name = "orthogonality";
    r.system = W.root_system().type().name();
    r.level = k;
    r.tolerance = tol;
    r.residuals.push_back(identity_deviation(orthogonality_matrix(W, k, c)));
    r.details.emplace_back("grid", to_string(c.grid));
    r.details.emplace_back("density", to_string(c.density));
    r.details.emplace_back("divide_by_weyl_order", c.divide_by_weyl_order ? "true" : "false");
    r.finalize();
    return r;
}

}  // namespace alcove
