#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "alcove/errors.hpp"
#include "alcove/lattice.hpp"
#include "alcove/parallel.hpp"
#include "alcove/weyl.hpp"

namespace alcove {

inline bool is_regular(const RootSystem& rs, const TorusPoint& x) {
    for (const auto& a : rs.positive_roots())
        if (x.angle(a.weight.integral()).is_zero()) return false;
    return true;
}

/// D(x) = prod_{alpha>0} (1 - e^{-alpha}(x)).
inline ComplexValue weyl_denominator(const RootSystem& rs, const TorusPoint& x) {
    ComplexValue d(1.0, 0.0);
    for (const auto& a : rs.positive_roots()) d *= ComplexValue(1.0, 0.0) - x.angle(-a.weight.integral()).exp();
    return d;
}

/// prod_{alpha>0} (lambda+rho|alpha)/(rho|alpha), exact.
inline Integer weyl_dimension(const RootSystem& rs, const Weight& lambda) {
    Rational d(1);
    Weight shifted = lambda + rs.rho();
    for (const auto& a : rs.positive_roots()) d *= rs.inner(shifted, a.weight) / rs.inner(rs.rho(), a.weight);
    if (!is_integer(d)) throw DomainError("Weyl dimension not integral for " + to_string(lambda));
    return d.numerator();
}

/// sum_w sign(w) e^{(w lambda | mu)} for an integral weight lambda.
inline ComplexValue alternating_sum(const WeylGroup& W, const IntVector& lambda, const TorusPoint& x) {
    ComplexValue s(0.0, 0.0);
    const std::size_t n = lambda.size();
    IntVector image(n);
    for (const auto& w : W.elements()) {
        for (std::size_t r = 0; r < n; ++r) {
            Integer v = 0;
            for (std::size_t c = 0; c < n; ++c) v += w.action(r, c) * lambda[c];
            image[r] = v;
        }
        ComplexValue e = x.angle(image).exp();
        s += w.sign > 0 ? e : -e;
    }
    return s;
}

inline void require_dominant_integral(const Weight& lambda) {
    if (!lambda.is_integral() || !lambda.is_dominant())
        throw DomainError("weight " + to_string(lambda) + " is not dominant integral");
}

/// Irreducible character by the Weyl quotient; x = 0 falls back to the dimension formula.
inline ComplexValue character(const WeylGroup& W, const Weight& lambda, const TorusPoint& x) {
    const RootSystem& rs = W.root_system();
    require_dominant_integral(lambda);
    if (x.mu_star().is_zero()) return {static_cast<double>(weyl_dimension(rs, lambda)), 0.0};
    if (!is_regular(rs, x)) throw SingularPointError("character quotient at non-regular point " + to_string(x.mu_star()));
    IntVector top = (lambda + rs.rho()).integral();
    return alternating_sum(W, top, x) / alternating_sum(W, rs.rho().integral(), x);
}

/// sum_w e^{w lambda} / prod_{alpha>0} (1 - e^{-w alpha}) at x.
inline ComplexValue localization_sum(const WeylGroup& W, const Weight& lambda, const TorusPoint& x) {
    const RootSystem& rs = W.root_system();
    if (!is_regular(rs, x)) throw SingularPointError("localization sum at non-regular point " + to_string(x.mu_star()));
    IntVector lam = lambda.integral();
    std::vector<IntVector> roots;
    for (const auto& a : rs.positive_roots()) roots.push_back(a.weight.integral());
    ComplexValue s(0.0, 0.0);
    for (const auto& w : W.elements()) {
        ComplexValue den(1.0, 0.0);
        for (const auto& a : roots) den *= ComplexValue(1.0, 0.0) - x.angle(-w.apply(a)).exp();
        s += x.angle(w.apply(lam)).exp() / den;
    }
    return s;
}

enum class GridMode { Shifted, Full };

inline std::string to_string(GridMode m) { return m == GridMode::Shifted ? "shifted" : "full"; }

inline GridMode parse_grid_mode(const std::string& s) {
    if (s == "shifted") return GridMode::Shifted;
    if (s == "full") return GridMode::Full;
    throw ConfigurationError("unknown grid mode '" + s + "'");
}

struct GridPoint {
    std::string label;
    Weight lambda;          ///< SHIFTED: the dominant weight lambda
    IntVector mstar_coords; ///< FULL: coset representative in M* basis coordinates
    TorusPoint point;
};

/// P_+^k: dominant integral lambda with (lambda|theta) <= k, lexicographic order.
inline std::vector<Weight> level_weights(const RootSystem& rs, Integer k) {
    if (k < 0) throw DomainError("level must be nonnegative");
    const std::size_t n = rs.rank();
    const IntVector& a = rs.comarks();
    std::vector<Weight> out;
    IntVector cur(n, 0);
    // (lambda|theta) = sum_i lambda_i a_i^vee
    auto rec = [&](auto&& self, std::size_t i, Integer budget) -> void {
        if (i == n) {
            out.emplace_back(cur);
            return;
        }
        for (Integer v = 0; v * a[i] <= budget; ++v) {
            cur[i] = v;
            self(self, i + 1, budget - v * a[i]);
        }
        cur[i] = 0;
    };
    rec(rec, 0, k);
    std::sort(out.begin(), out.end());
    return out;
}

inline std::string label_of(const std::string& prefix, const RationalVector& v) {
    return prefix + to_string(Weight(v));
}

/// SHIFTED: nu^{-1}((lambda+rho)/(k+h^vee)), lambda in P_+^k.
/// FULL: nu^{-1}(m)/(k+h^vee) over coset representatives m of M*/(k+h^vee)M.
inline std::vector<GridPoint> special_grid(const RootSystem& rs, Integer k, GridMode mode) {
    if (k < 0) throw DomainError("level must be nonnegative");
    const Rational shift(1, k + rs.dual_coxeter());
    std::vector<GridPoint> grid;
    if (mode == GridMode::Shifted) {
        for (const auto& lam : level_weights(rs, k)) {
            GridPoint g;
            g.label = label_of("lambda=", lam.coords);
            g.lambda = lam;
            g.point = TorusPoint(rs, shift * (lam + rs.rho()));
            grid.push_back(std::move(g));
        }
        return grid;
    }
    for (const auto& m : mstar_coset_representatives(rs, k)) {
        GridPoint g;
        g.label = label_of("m=", to_rational(m));
        g.mstar_coords = m;
        g.point = TorusPoint(rs, shift * Weight(rs.lattice_mstar_weights() * to_rational(m)));
        grid.push_back(std::move(g));
    }
    return grid;
}

/// Contragredient weight w_L(-a).
inline Weight contragredient(const RootSystem& rs, const Weight& a) {
    if (!a.is_dominant()) throw DomainError("contragredient needs a dominant weight");
    return longest_element(rs).apply(-a);
}

/// Characters chi_lambda(tau) for lambda in P_+^k (rows) and grid points tau (columns).
/// Non-regular points (FULL grid only) have regular[j] = false and are left at 0; their
/// Weyl denominator vanishes, so they carry no weight in any orthogonality sum.
struct CharacterTable {
    Integer level = 0;
    GridMode mode = GridMode::Shifted;
    std::vector<Weight> weights;
    std::vector<GridPoint> grid;
    std::vector<bool> regular;
    std::vector<std::vector<ComplexValue>> values;  ///< values[row][column]

    std::size_t row_of(const Weight& lambda) const {
        auto it = std::lower_bound(weights.begin(), weights.end(), lambda);
        if (it == weights.end() || !(*it == lambda)) throw DomainError("weight " + to_string(lambda) + " not in P_+^k");
        return static_cast<std::size_t>(it - weights.begin());
    }
};

inline CharacterTable character_table(const WeylGroup& W, Integer k, GridMode mode) {
    const RootSystem& rs = W.root_system();
    CharacterTable t;
    t.level = k;
    t.mode = mode;
    t.weights = level_weights(rs, k);
    t.grid = special_grid(rs, k, mode);
    const std::size_t cols = t.grid.size();
    t.values.assign(t.weights.size(), std::vector<ComplexValue>(cols, ComplexValue(0.0, 0.0)));
    std::vector<char> reg(cols, 0);
    std::vector<IntVector> tops;
    for (const auto& lam : t.weights) tops.push_back((lam + rs.rho()).integral());
    const IntVector rho = rs.rho().integral();
    parallel_for(cols, [&](std::size_t j) {
        const TorusPoint& x = t.grid[j].point;
        if (!is_regular(rs, x)) return;
        reg[j] = 1;
        ComplexValue den = alternating_sum(W, rho, x);
        for (std::size_t r = 0; r < tops.size(); ++r) t.values[r][j] = alternating_sum(W, tops[r], x) / den;
    });
    t.regular.assign(reg.begin(), reg.end());
    return t;
}

}  // namespace alcove
