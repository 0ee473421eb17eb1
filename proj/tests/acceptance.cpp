// Acceptance run: one PASS/FAIL line per criterion. Tolerances are fixed here, not configurable.

#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "alcove/alcove.hpp"
#include "oracles.hpp"

using namespace alcove;

namespace {

constexpr double kFundamentalTol = 1e-8;
constexpr double kSubsetTol = 1e-8;
constexpr double kDiscriminator = 2.0;
constexpr double kDiscriminatorTol = 1e-9;
constexpr double kOrthogonalityTol = 1e-7;
constexpr double kIntegralityTol = 1e-6;
constexpr double kCharacterTol = 1e-9;
constexpr double kExcludedPointTol = 1e-12;
constexpr std::size_t kSamples = 100;
constexpr std::uint64_t kSeed = 20240601;

const std::vector<std::string> kSystems = {"A1", "A2", "B2", "G2"};

// (system, max level) for the grid criteria
const std::vector<std::pair<std::string, Integer>> kGridSweep = {{"A1", 6}, {"A2", 4}, {"B2", 3}, {"G2", 2}};

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        if (pass) detail.clear();
        pass = false;
        if (!detail.empty()) detail += "; ";
        detail += why;
    }
};

std::string sci(double v) { return format_scientific(v); }

Outcome criterion1() {
    Outcome o;
    double worst = 0.0;
    for (const auto& n : kSystems) {
        WeylGroup W(build_root_system(n));
        IdentityReport r = fundamental_formula_report(W, kSamples, kSeed, kFundamentalTol);
        worst = std::max(worst, r.max_residual);
        if (!r.passed || r.residuals.size() != kSamples) o.fail(n + " max residual " + sci(r.max_residual));
    }
    if (o.pass) o.detail = "max residual " + sci(worst);
    return o;
}

Outcome criterion2() {
    Outcome o;
    for (const auto& n : kSystems) {
        WeylGroup W(build_root_system(n));
        IdentityReport r = subset_identity_report(W, kSamples, kSeed, kSubsetTol, true);
        if (!r.passed) o.fail(n + " |sum-1| = " + sci(r.max_residual));
    }
    WeylGroup a1(build_root_system("A1"));
    IdentityReport rejected = subset_identity_report(a1, kSamples, kSeed, kSubsetTol, false);
    bool disc = !rejected.residuals.empty();
    for (double r : rejected.residuals) disc = disc && std::abs(r - kDiscriminator) <= kDiscriminatorTol;
    if (!disc) o.fail("A1 rejected convention residual " + sci(rejected.max_residual));
    if (o.pass) o.detail = "A1 discriminator " + sci(rejected.max_residual);
    return o;
}

Outcome criterion3() {
    Outcome o;
    std::size_t checks = 0;
    for (const auto& n : kSystems) {
        IdentityReport r = rho_shift_report(build_root_system(n));
        checks += r.residuals.size();
        if (!r.passed) o.fail(n);
    }
    if (o.pass) o.detail = std::to_string(checks) + " exact checks";
    return o;
}

Outcome criterion4() {
    Outcome o;
    for (const auto& n : kSystems)
        for (Integer k : {1, 2, 3}) {
            IdentityReport r = phase_law_report(build_root_system(n), k);
            if (!r.passed) o.fail(n + " k=" + std::to_string(k));
        }
    if (o.pass) o.detail = "lattice holds, off-lattice probe fails";
    return o;
}

Outcome criterion5() {
    Outcome o;
    double worst = 0.0;
    for (const auto& [n, kmax] : kGridSweep) {
        WeylGroup W(build_root_system(n));
        for (Integer k = 1; k <= kmax; ++k) {
            double d = identity_deviation(orthogonality_matrix(W, k, frozen_convention()));
            worst = std::max(worst, d);
            if (!(d < kOrthogonalityTol)) o.fail(n + " k=" + std::to_string(k) + " " + sci(d));
        }
    }
    if (o.pass) o.detail = "grid " + to_string(frozen_convention().grid) + ", max deviation " + sci(worst);
    return o;
}

Outcome criterion6() {
    Outcome o;
    for (const auto& [n, kmax] : kGridSweep) {
        WeylGroup W(build_root_system(n));
        for (Integer k = 1; k <= kmax; ++k) {
            IdentityReport r = multiplicity_report(VerlindeContext(W, k), kSamples, kSeed + static_cast<std::uint64_t>(k));
            if (!r.passed) o.fail(n + " k=" + std::to_string(k));
        }
    }
    if (o.pass) o.detail = "exact round trips";
    return o;
}

Outcome criterion7() {
    Outcome o;
    auto check = [&](const std::string& n, Integer k, const FusionTable& t) {
        auto bad = fusion_invariant_violations(t);
        if (!bad.empty()) o.fail(n + " k=" + std::to_string(k) + " violates " + bad.front());
        if (!(t.max_residual < kIntegralityTol)) o.fail(n + " k=" + std::to_string(k) + " residual " + sci(t.max_residual));
    };
    WeylGroup a1(build_root_system("A1"));
    for (Integer k = 1; k <= 8; ++k) {
        FusionTable t = fusion_table(VerlindeContext(a1, k));
        check("A1", k, t);
        for (Integer a = 0; a <= k; ++a)
            for (Integer b = 0; b <= k; ++b)
                for (Integer c = 0; c <= k; ++c)
                    if (t(a, b, c) != oracle::su2_fusion(a, b, c, k)) o.fail("A1 k=" + std::to_string(k) + " CG mismatch");
    }
    WeylGroup a2(build_root_system("A2"));
    FusionTable z3 = fusion_table(VerlindeContext(a2, 1));
    // every product of two simple objects is a single simple object, and the group is cyclic of order 3
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 3; ++b) {
            Integer total = 0;
            for (std::size_t c = 0; c < 3; ++c) total += z3(a, b, c);
            if (total != 1) o.fail("A2 k=1 not a group");
        }
    if (z3(1, 1, 2) != 1 || z3(2, 2, 1) != 1 || z3(1, 2, 0) != 1) o.fail("A2 k=1 not Z/3");
    for (const auto& [n, kmax] : kGridSweep) {
        WeylGroup W(build_root_system(n));
        for (Integer k = 1; k <= kmax; ++k) check(n, k, fusion_table(VerlindeContext(W, k)));
    }
    if (o.pass) o.detail = "CG match for A1 k<=8, Z/3 at A2 k=1";
    return o;
}

Outcome criterion8() {
    Outcome o;
    double worst = 0.0;
    for (const auto& n : kSystems) {
        WeylGroup W(build_root_system(n));
        IdentityReport r = character_report(W, kSamples, kSeed, kCharacterTol);
        worst = std::max(worst, r.max_residual);
        if (!r.passed) o.fail(n + " " + sci(r.max_residual));
        const RootSystem& rs = W.root_system();
        TorusPoint zero(rs, Weight::zero(rs.rank()));
        for (const auto& lam : level_weights(rs, 3)) {
            Integer dim = weyl_dimension(rs, lam);
            if (dim != oracle::dimension(oracle::freudenthal(rs, lam.integral())) ||
                character(W, lam, zero) != ComplexValue(static_cast<double>(dim), 0.0))
                o.fail(n + " dimension at " + to_string(lam));
        }
    }
    if (o.pass) o.detail = "max residual " + sci(worst);
    return o;
}

Outcome criterion9() {
    Outcome o;
    std::size_t faces = 0;
    for (const auto& n : kSystems) {
        RootSystem rs = build_root_system(n);
        IdentityReport r = isotropy_report(rs);
        if (!r.passed) o.fail(n + " isotropy report");
        for (const auto& fd : enumerate_faces(rs)) {
            ++faces;
            if (rs.type().series == 'A' && fd.n_value != 1) o.fail(n + " n != 1");
            IntVector u(rs.rank(), 0);
            for (std::size_t i = 0; i < rs.rank(); ++i)
                if (std::find(fd.delta0.begin(), fd.delta0.end(), i) == fd.delta0.end()) u[i] = rs.comarks()[i];
            Integer expected = fd.on_affine_wall ? std::max<Integer>(content(u), 1) : 1;
            for (auto i : fd.delta0) expected *= rs.comarks()[i];
            if (fd.isotropy_order != expected) o.fail(n + " product formula");
            if (oracle::isotropy_by_counting(rs, fd) != expected) o.fail(n + " enumeration");
        }
    }
    if (o.pass) o.detail = std::to_string(faces) + " faces";
    return o;
}

Outcome criterion10() {
    Outcome o;
    double worst = 0.0;
    std::size_t singular = 0;
    for (const auto& [n, kmax] : kGridSweep) {
        WeylGroup W(build_root_system(n));
        const RootSystem& rs = W.root_system();
        for (Integer k = 1; k <= kmax; ++k) {
            RegularitySummary s = regularity_summary(rs, k);
            if (s.shifted_regular != s.shifted_points) o.fail(n + " k=" + std::to_string(k) + " singular SHIFTED point");
            if (!s.denominator_matches) o.fail(n + " k=" + std::to_string(k) + " D(tau)=0 mismatch");
            singular += s.full_points - s.full_regular;

            // Same sums with the non-regular points put back. Their character values come from weight
            // multiplicities, since the quotient formula is undefined there.
            VerlindeContext ctx(W, k, convention_for(GridMode::Full));
            const CharacterTable& t = ctx.table();
            std::vector<std::map<IntVector, Integer>> mult;
            for (const auto& w : t.weights) mult.push_back(oracle::freudenthal(rs, w.integral()));
            auto chi = [&](std::size_t a, std::size_t j) {
                return t.regular[j] ? t.values[a][j] : oracle::character(mult[a], t.grid[j].point);
            };
            std::mt19937_64 rng(kSeed + static_cast<std::uint64_t>(k));
            std::uniform_int_distribution<Integer> digit(0, 9);
            std::vector<Integer> m(t.weights.size());
            for (auto& v : m) v = digit(rng);
            std::vector<ComplexValue> f(t.grid.size(), ComplexValue(0.0, 0.0));
            for (std::size_t j = 0; j < t.grid.size(); ++j)
                for (std::size_t a = 0; a < m.size(); ++a) f[j] += static_cast<double>(m[a]) * chi(a, j);
            std::vector<ComplexValue> excluded = ctx.raw_sums(f);
            for (std::size_t a = 0; a < m.size(); ++a) {
                const std::size_t bar = ctx.contragredient_index(a);
                ComplexValue s(0.0, 0.0);
                for (std::size_t j = 0; j < t.grid.size(); ++j)
                    s += f[j] * std::norm(weyl_denominator(rs, t.grid[j].point)) * chi(bar, j);
                double diff = std::abs(ctx.prefactor() * s - excluded[a]);
                worst = std::max(worst, diff);
                if (!(diff < kExcludedPointTol)) o.fail(n + " k=" + std::to_string(k) + " excluded-point difference " + sci(diff));
            }
        }
    }
    if (o.pass) o.detail = std::to_string(singular) + " non-regular FULL points, max difference " + sci(worst);
    return o;
}

}  // namespace

int main() {
    const std::vector<std::function<Outcome()>> criteria = {criterion1, criterion2, criterion3, criterion4, criterion5,
                                                            criterion6, criterion7, criterion8, criterion9, criterion10};
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i]();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        if (!o.pass) ++failures;
        std::printf("criterion %zu: %s %s\n", i + 1, o.pass ? "PASS" : "FAIL", o.detail.c_str());
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
