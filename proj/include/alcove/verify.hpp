#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "alcove/characters.hpp"
#include "alcove/identities.hpp"
#include "alcove/levelshift.hpp"
#include "alcove/stabilizers.hpp"
#include "alcove/verlinde.hpp"

namespace alcove {

inline const std::vector<std::string>& all_suites() {
    static const std::vector<std::string> names = {"fundamental", "subset",      "rhoshift",   "phase",
                                                   "isotropy",    "characters",  "regularity", "orthogonality",
                                                   "multiplicity", "fusion",     "levelshift"};
    return names;
}

struct VerifyConfig {
    std::vector<CartanType> systems;
    std::vector<Integer> levels{1, 2};
    std::size_t samples = 100;
    std::uint64_t seed = 1;
    double tolerance = 1e-8;
    std::set<std::string> suites;  ///< empty: all
    GridMode grid = GridMode::Shifted;

    bool wants(const std::string& s) const { return suites.empty() || suites.count(s) > 0; }
};

namespace detail {

inline IdentityReport exact_report(std::string name, const RootSystem& rs, Integer level) {
    IdentityReport r;
    r.name = std::move(name);
    r.system = rs.type().name();
    r.level = level;
    r.tolerance = 0.5;  // exact checks record 0 (holds) or 1 (fails)
    return r;
}

inline std::uint64_t suite_seed(std::uint64_t seed, const std::string& suite, const CartanType& t, Integer k) {
    std::uint64_t h = seed * 0x9E3779B97F4A7C15ull;
    for (char c : suite + t.name()) h = (h ^ static_cast<unsigned char>(c)) * 0x100000001B3ull;
    return h ^ static_cast<std::uint64_t>(k + 1) * 0xBF58476D1CE4E5B9ull;
}

}  // namespace detail

/// w(rho_mu) - rho_mu vs w(rho) - rho for every face and generator; expected correction 0 or h^vee theta.
inline IdentityReport rho_shift_report(const RootSystem& rs) {
    IdentityReport r = detail::exact_report("rho_shift", rs, -1);
    std::size_t checks = 0;
    Weight expected_wall = Rational(rs.dual_coxeter()) * rs.highest_root().weight;
    for (const auto& fd : enumerate_faces(rs)) {
        auto gens = stabilizer_generators(fd);
        gens.push_back(StabilizerGenerator::identity());
        for (const auto& g : gens) {
            RhoShift s = rho_shift(rs, fd, g);
            Weight expected = g.kind == StabilizerGenerator::Kind::AffineTheta ? expected_wall : Weight::zero(rs.rank());
            r.residuals.push_back(s.correction == expected ? 0.0 : 1.0);
            ++checks;
        }
    }
    r.details.emplace_back("checks", std::to_string(checks));
    r.finalize();
    return r;
}

/// Phase law at t = b/(k+h^vee) for the M* basis vectors b (and t = 0), every face, every v in W_mu^0.
/// The same law at b/(k+h^vee+1) must fail somewhere.
inline IdentityReport phase_law_report(const RootSystem& rs, Integer k) {
    IdentityReport r = detail::exact_report("phase_law", rs, k);
    const Integer s = k + rs.dual_coxeter();
    const RationalMatrix& mstar = rs.lattice_mstar_weights();
    std::vector<Weight> gens{Weight::zero(rs.rank())};
    for (std::size_t j = 0; j < rs.rank(); ++j) gens.emplace_back(mstar.column(j));
    bool probe_failed = false;
    std::size_t checks = 0;
    for (const auto& fd : enumerate_faces(rs))
        for (const auto& b : gens) {
            r.residuals.push_back(lattice_phase_check(rs, fd, k, TorusPoint(rs, Rational(1, s) * b)) ? 0.0 : 1.0);
            ++checks;
            if (!phase_law_holds(rs, fd, k, TorusPoint(rs, Rational(1, s + 1) * b))) probe_failed = true;
        }
    r.residuals.push_back(probe_failed ? 0.0 : 1.0);
    r.details.emplace_back("checks", std::to_string(checks));
    r.details.emplace_back("off_lattice_probe_fails", probe_failed ? "true" : "false");
    r.finalize();
    return r;
}

/// Isotropy orders against the lattice-minor index; n = 1 for type A; epsilon^vee primitive where nonzero.
inline IdentityReport isotropy_report(const RootSystem& rs) {
    IdentityReport r = detail::exact_report("isotropy", rs, -1);
    for (const auto& fd : enumerate_faces(rs)) {
        bool ok = fd.isotropy_order == isotropy_order_by_lattice(rs, fd);
        ok = ok && (is_zero(fd.epsilon_covee) || content(fd.epsilon_covee) == 1);  // 0 only at mu = 0
        if (rs.type().series == 'A') ok = ok && fd.n_value == 1;
        r.residuals.push_back(ok ? 0.0 : 1.0);
    }
    r.details.emplace_back("faces", std::to_string(r.residuals.size()));
    r.finalize();
    return r;
}

/// Weyl quotient vs localization sum at random regular points for lambda in P_+^2.
inline IdentityReport character_report(const WeylGroup& W, std::size_t samples, std::uint64_t seed, double tol) {
    const RootSystem& rs = W.root_system();
    IdentityReport r;
    r.name = "characters";
    r.system = rs.type().name();
    r.tolerance = tol;
    PointSampler sampler(seed);
    std::vector<TorusPoint> pts;
    while (pts.size() < samples) {
        TorusPoint x = sampler.next(rs);
        if (is_regular(rs, x)) pts.push_back(x);
    }
    auto lambdas = level_weights(rs, 2);
    r.residuals.assign(samples, 0.0);
    parallel_for(samples, [&](std::size_t i) {
        double d = 0.0;
        for (const auto& lam : lambdas)
            d = std::max(d, std::abs(character(W, lam, pts[i]) - localization_sum(W, lam, pts[i])));
        r.residuals[i] = d;
    });
    for (const auto& x : pts) r.sample_points.push_back(to_string(x.mu_star()));
    r.finalize();
    return r;
}

struct RegularitySummary {
    std::size_t shifted_points = 0, shifted_regular = 0;
    std::size_t full_points = 0, full_regular = 0;
    bool denominator_matches = true;  ///< D(tau) = 0 exactly at the non-regular FULL points
};

inline RegularitySummary regularity_summary(const RootSystem& rs, Integer k) {
    RegularitySummary s;
    for (const auto& g : special_grid(rs, k, GridMode::Shifted)) {
        ++s.shifted_points;
        if (is_regular(rs, g.point)) ++s.shifted_regular;
    }
    for (const auto& g : special_grid(rs, k, GridMode::Full)) {
        ++s.full_points;
        bool reg = is_regular(rs, g.point);
        if (reg) ++s.full_regular;
        bool vanishes = weyl_denominator(rs, g.point) == ComplexValue(0.0, 0.0);
        if (vanishes == reg) s.denominator_matches = false;
    }
    return s;
}

inline IdentityReport regularity_report(const RootSystem& rs, Integer k) {
    IdentityReport r = detail::exact_report("regularity", rs, k);
    RegularitySummary s = regularity_summary(rs, k);
    r.residuals.push_back(s.shifted_regular == s.shifted_points ? 0.0 : 1.0);
    r.residuals.push_back(s.denominator_matches ? 0.0 : 1.0);
    r.details.emplace_back("shifted_points", std::to_string(s.shifted_points));
    r.details.emplace_back("shifted_regular", std::to_string(s.shifted_regular));
    r.details.emplace_back("full_points", std::to_string(s.full_points));
    r.details.emplace_back("full_regular", std::to_string(s.full_regular));
    r.finalize();
    return r;
}

/// Random m in {0..9}^{P_+^k}: synthesize, extract, compare exactly.
inline IdentityReport multiplicity_report(const VerlindeContext& ctx, std::size_t samples, std::uint64_t seed) {
    IdentityReport r = detail::exact_report("multiplicity_round_trip", ctx.root_system(), ctx.level());
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Integer> digit(0, 9);
    double worst = 0.0;
    for (std::size_t i = 0; i < samples; ++i) {
        std::vector<Integer> m(ctx.weights().size());
        for (auto& v : m) v = digit(rng);
        Extraction e = ctx.extract(ctx.synthesize(m));
        worst = std::max(worst, e.max_residual);
        r.residuals.push_back(e.multiplicities == m ? 0.0 : 1.0);
    }
    r.details.emplace_back("max_rounding_residual", format_scientific(worst));
    r.finalize();
    return r;
}

inline IdentityReport fusion_report(const VerlindeContext& ctx) {
    IdentityReport r = detail::exact_report("fusion", ctx.root_system(), ctx.level());
    FusionTable t = fusion_table(ctx);
    auto bad = fusion_invariant_violations(t);
    r.residuals.push_back(bad.empty() ? 0.0 : 1.0);
    r.residuals.push_back(t.max_residual < kIntegralityResidual ? 0.0 : 1.0);
    std::string joined;
    for (const auto& b : bad) joined += (joined.empty() ? "" : ",") + b;
    r.details.emplace_back("violations", joined.empty() ? "none" : joined);
    r.details.emplace_back("max_rounding_residual", format_scientific(t.max_residual));
    r.finalize();
    return r;
}

/// Runs the selected suites over every (system, level) in order; output order is deterministic.
inline std::vector<IdentityReport> run_verification(const VerifyConfig& cfg) {
    std::vector<IdentityReport> out;
    for (const auto& type : cfg.systems) {
        WeylGroup W(RootSystem(type, cartan_matrix(type)));
        const RootSystem& rs = W.root_system();
        auto seed = [&](const std::string& s, Integer k) { return detail::suite_seed(cfg.seed, s, type, k); };
        if (cfg.wants("fundamental"))
            out.push_back(fundamental_formula_report(W, cfg.samples, seed("fundamental", 0), cfg.tolerance));
        if (cfg.wants("subset")) out.push_back(subset_identity_report(W, cfg.samples, seed("subset", 0), cfg.tolerance));
        if (cfg.wants("rhoshift")) out.push_back(rho_shift_report(rs));
        if (cfg.wants("isotropy")) out.push_back(isotropy_report(rs));
        if (cfg.wants("characters"))
            out.push_back(character_report(W, cfg.samples, seed("characters", 0), cfg.tolerance));
        for (Integer k : cfg.levels) {
            if (cfg.wants("phase")) out.push_back(phase_law_report(rs, k));
            if (cfg.wants("regularity")) out.push_back(regularity_report(rs, k));
            if (cfg.wants("orthogonality")) {
                GridConvention c = frozen_convention();
                c.grid = cfg.grid;  // an override keeps the frozen normalization
                out.push_back(orthogonality_report(W, k, c, cfg.tolerance));
            }
            if (cfg.wants("multiplicity") || cfg.wants("fusion")) {
                VerlindeContext ctx(W, k);
                if (cfg.wants("multiplicity")) out.push_back(multiplicity_report(ctx, cfg.samples, seed("multiplicity", k)));
                if (cfg.wants("fusion")) out.push_back(fusion_report(ctx));
            }
            if (cfg.wants("levelshift")) out.push_back(levelshift_report(W, k, cfg.tolerance));
        }
    }
    return out;
}

}  // namespace alcove
