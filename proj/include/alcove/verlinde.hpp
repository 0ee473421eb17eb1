#pragma once

#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "alcove/characters.hpp"
#include "alcove/errors.hpp"
#include "alcove/identities.hpp"
#include "alcove/parallel.hpp"

namespace alcove {

inline constexpr double kInconsistentResidual = 1e-4;
inline constexpr double kIntegralityResidual = 1e-6;
inline constexpr std::size_t kDefaultFusionCap = 1'000'000;

struct LevelWeightSet {
    Integer level = 0;
    std::vector<Weight> weights;  ///< lexicographic on fundamental-weight coordinates
};

inline LevelWeightSet dominant_weights(const RootSystem& rs, Integer k) { return {k, level_weights(rs, k)}; }

struct Extraction {
    std::vector<Integer> multiplicities;  ///< aligned with the level weights
    double max_residual = 0.0;            ///< distance to the nearest integer, over all entries
};

/// Grid data shared by every extraction at one level: characters, densities, contragredients.
class VerlindeContext {
public:
    VerlindeContext(const WeylGroup& W, Integer k, GridConvention c = frozen_convention())
        : W_(&W), convention_(c), table_(character_table(W, k, c.grid)) {
        const RootSystem& rs = W.root_system();
        densities_ = grid_densities(rs, table_, c.density);
        prefactor_ = grid_prefactor(W, k, c);
        for (const auto& a : table_.weights) bar_.push_back(table_.row_of(contragredient(rs, a)));
        for (std::size_t j = 0; j < table_.grid.size(); ++j) column_of_[table_.grid[j].label] = j;
    }

    const WeylGroup& weyl() const { return *W_; }
    const RootSystem& root_system() const { return W_->root_system(); }
    Integer level() const { return table_.level; }
    const GridConvention& convention() const { return convention_; }
    const CharacterTable& table() const { return table_; }
    const std::vector<Weight>& weights() const { return table_.weights; }
    std::size_t contragredient_index(std::size_t a) const { return bar_[a]; }

    /// f = sum_a m_a chi_a on the grid (0 at non-regular columns).
    std::vector<ComplexValue> synthesize(const std::vector<Integer>& m) const {
        if (m.size() != table_.weights.size()) throw DomainError("multiplicity vector has the wrong length");
        std::vector<ComplexValue> f(table_.grid.size(), ComplexValue(0.0, 0.0));
        for (std::size_t a = 0; a < m.size(); ++a)
            if (m[a] != 0)
                for (std::size_t j = 0; j < f.size(); ++j) f[j] += static_cast<double>(m[a]) * table_.values[a][j];
        return f;
    }

    std::map<std::string, ComplexValue> synthesize_labeled(const std::vector<Integer>& m) const {
        auto f = synthesize(m);
        std::map<std::string, ComplexValue> out;
        for (std::size_t j = 0; j < f.size(); ++j)
            if (table_.regular[j]) out[table_.grid[j].label] = f[j];
        return out;
    }

    /// prefactor * sum_tau f(tau) density(tau) chi_abar(tau) for each a, before rounding.
    /// Non-regular columns are skipped: their density is 0.
    std::vector<ComplexValue> raw_sums(const std::vector<ComplexValue>& f) const {
        if (f.size() != table_.grid.size()) throw DomainError("value vector does not match the grid");
        std::vector<ComplexValue> out;
        for (std::size_t a = 0; a < table_.weights.size(); ++a) {
            const auto& chi_bar = table_.values[bar_[a]];
            ComplexValue s(0.0, 0.0);
            for (std::size_t j = 0; j < f.size(); ++j)
                if (table_.regular[j]) s += f[j] * densities_[j] * chi_bar[j];
            out.push_back(prefactor_ * s);
        }
        return out;
    }

    const std::vector<ComplexValue>& densities() const { return densities_; }
    double prefactor() const { return prefactor_; }

    /// m_a = prefactor * sum_tau f(tau) density(tau) chi_abar(tau), rounded.
    Extraction extract(const std::vector<ComplexValue>& f) const {
        Extraction e;
        for (const ComplexValue& s : raw_sums(f)) {
            double r = std::round(s.real());
            e.max_residual = std::max(e.max_residual, std::abs(s - ComplexValue(r, 0.0)));
            e.multiplicities.push_back(static_cast<Integer>(r));
        }
        if (!(e.max_residual <= kInconsistentResidual))
            throw InconsistentInputError("grid values are not an integral character combination (residual " +
                                         std::to_string(e.max_residual) + ")");
        return e;
    }

    /// Same, keyed by grid label. Non-regular columns may be omitted; their weight is 0.
    Extraction extract(const std::map<std::string, ComplexValue>& values) const {
        std::vector<ComplexValue> f(table_.grid.size(), ComplexValue(0.0, 0.0));
        for (const auto& [label, v] : values) {
            auto it = column_of_.find(label);
            if (it == column_of_.end()) throw InconsistentInputError("unknown grid label " + label);
            f[it->second] = v;
        }
        for (std::size_t j = 0; j < f.size(); ++j)
            if (table_.regular[j] && !values.count(table_.grid[j].label))
                throw InconsistentInputError("missing value at grid point " + table_.grid[j].label);
        return extract(f);
    }

    /// N_{ab}^c for all c, from the pointwise product chi_a chi_b.
    Extraction fusion_row(std::size_t a, std::size_t b) const {
        std::vector<ComplexValue> f(table_.grid.size());
        for (std::size_t j = 0; j < f.size(); ++j) f[j] = table_.values[a][j] * table_.values[b][j];
        return extract(f);
    }

private:
    const WeylGroup* W_;
    GridConvention convention_;
    CharacterTable table_;
    std::vector<ComplexValue> densities_;
    double prefactor_ = 1.0;
    std::vector<std::size_t> bar_;
    std::map<std::string, std::size_t> column_of_;
};

inline std::map<Weight, Integer> extract_multiplicities(const VerlindeContext& ctx,
                                                        const std::map<std::string, ComplexValue>& values) {
    Extraction e = ctx.extract(values);
    std::map<Weight, Integer> out;
    for (std::size_t a = 0; a < e.multiplicities.size(); ++a) out[ctx.weights()[a]] = e.multiplicities[a];
    return out;
}

inline std::map<Weight, Integer> fusion_coefficients(const VerlindeContext& ctx, const Weight& a, const Weight& b) {
    require_dominant_integral(a);
    require_dominant_integral(b);
    Extraction e = ctx.fusion_row(ctx.table().row_of(a), ctx.table().row_of(b));
    std::map<Weight, Integer> out;
    for (std::size_t c = 0; c < e.multiplicities.size(); ++c) out[ctx.weights()[c]] = e.multiplicities[c];
    return out;
}

struct FusionTable {
    Integer level = 0;
    std::vector<Weight> weights;
    std::vector<std::size_t> contragredient;  ///< index of the contragredient of each weight
    std::vector<Integer> entries;             ///< N_{ab}^c at (a*n + b)*n + c
    double max_residual = 0.0;

    std::size_t size() const { return weights.size(); }
    Integer operator()(std::size_t a, std::size_t b, std::size_t c) const { return entries[(a * size() + b) * size() + c]; }
};

/// Violated invariants (empty if none): nonnegativity, symmetry, unit, N_ab^c = N_{a cbar}^{bbar}, associativity.
inline std::vector<std::string> fusion_invariant_violations(const FusionTable& t) {
    std::vector<std::string> bad;
    const std::size_t n = t.size();
    auto note = [&](const std::string& s) {
        if (std::find(bad.begin(), bad.end(), s) == bad.end()) bad.push_back(s);
    };
    std::size_t unit = 0;  // the zero weight is first in lexicographic order
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                Integer v = t(a, b, c);
                if (v < 0) note("nonnegativity");
                if (v != t(b, a, c)) note("symmetry");
                if (a == unit && v != (b == c ? 1 : 0)) note("unit");
                if (v != t(a, t.contragredient[c], t.contragredient[b])) note("contragredient");
            }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                for (std::size_t d = 0; d < n; ++d) {
                    Integer l = 0, r = 0;
                    for (std::size_t e = 0; e < n; ++e) {
                        l += t(a, b, e) * t(e, c, d);
                        r += t(b, c, e) * t(a, e, d);
                    }
                    if (l != r) note("associativity");
                }
    return bad;
}

inline FusionTable fusion_table(const VerlindeContext& ctx, std::size_t cap = kDefaultFusionCap) {
    const std::size_t n = ctx.weights().size();
    if (n * n * n > cap)
        throw ResourceError("fusion table with " + std::to_string(n) + "^3 entries exceeds the cap " + std::to_string(cap));
    FusionTable t;
    t.level = ctx.level();
    t.weights = ctx.weights();
    for (std::size_t a = 0; a < n; ++a) t.contragredient.push_back(ctx.contragredient_index(a));
    t.entries.assign(n * n * n, 0);
    std::vector<double> residual(n * n, 0.0);
    parallel_for(n * n, [&](std::size_t ab) {
        std::size_t a = ab / n, b = ab % n;
        if (b < a) return;
        Extraction e = ctx.fusion_row(a, b);
        residual[ab] = e.max_residual;
        for (std::size_t c = 0; c < n; ++c) {
            t.entries[(a * n + b) * n + c] = e.multiplicities[c];
            t.entries[(b * n + a) * n + c] = e.multiplicities[c];
        }
    });
    for (double r : residual) t.max_residual = std::max(t.max_residual, r);
    return t;
}

}  // namespace alcove
