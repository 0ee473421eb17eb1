#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "alcove/identities.hpp"
#include "oracles.hpp"

using namespace alcove;

namespace {

TorusPoint a1_point(const RootSystem& rs, Rational mu) { return TorusPoint(rs, Weight(RationalVector{mu})); }

using Matrix2 = std::vector<std::vector<std::complex<double>>>;

// A1 at level k by hand. (alpha|x) = s for mu = s, chi_n = sum_i e^{i pi (n - 2i) s}.
struct A1Candidate {
    const char* name;
    std::complex<double> (*density)(double s);
    double sign;
};

std::complex<double> chi(Integer n, double s) {
    std::complex<double> v(0.0, 0.0);
    for (Integer i = 0; i <= n; ++i) v += std::polar(1.0, std::numbers::pi * static_cast<double>(n - 2 * i) * s);
    return v;
}

Matrix2 a1_matrix(Integer k, bool full, const A1Candidate& c, bool divide) {
    const Integer h = k + 2;
    std::vector<double> pts;
    if (full)
        for (Integer m = 0; m < 2 * h; ++m) pts.push_back(static_cast<double>(m) / static_cast<double>(h));
    else
        for (Integer j = 0; j <= k; ++j) pts.push_back(static_cast<double>(j + 1) / static_cast<double>(h));
    double pref = c.sign / static_cast<double>(2 * h) / (divide ? 2.0 : 1.0);
    Matrix2 m(k + 1, std::vector<std::complex<double>>(k + 1));
    for (Integer a = 0; a <= k; ++a)
        for (Integer b = 0; b <= k; ++b) {
            std::complex<double> s(0.0, 0.0);
            for (double p : pts) s += c.density(p) * chi(a, p) * chi(b, p);
            m[a][b] = pref * s;
        }
    return m;
}

double deviation(const Matrix2& m) {
    double d = 0.0;
    for (std::size_t a = 0; a < m.size(); ++a)
        for (std::size_t b = 0; b < m.size(); ++b) d = std::max(d, std::abs(m[a][b] - double(a == b)));
    return d;
}

const A1Candidate kHermitian{"hermitian", [](double s) { return std::complex<double>(4 * std::pow(std::sin(std::numbers::pi * s), 2), 0.0); }, 1.0};
const A1Candidate kLiteral{"literal", [](double s) { auto d = 1.0 - std::polar(1.0, -2 * std::numbers::pi * s); return d * d; }, -1.0};
const A1Candidate kSymmetric{"symmetric", [](double s) { return std::complex<double>(-4 * std::pow(std::sin(std::numbers::pi * s), 2), 0.0); }, -1.0};

}  // namespace

TEST(FundamentalFormula, A1HandPoint) {
    WeylGroup W(build_root_system("A1"));
    const RootSystem& rs = W.root_system();
    EXPECT_LT(std::abs(fundamental_formula_residual(W, a1_point(rs, Rational(1, 5)), a1_point(rs, Rational(1, 7)))), 1e-9);
}

TEST(FundamentalFormula, SymmetricInArguments) {
    WeylGroup W(build_root_system("A2"));
    const RootSystem& rs = W.root_system();
    PointSampler sampler(3);
    for (int i = 0; i < 20; ++i) {
        TorusPoint x = sampler.next(rs), y = sampler.next(rs);
        if (!is_regular(rs, x) || !is_regular(rs, y)) continue;
        EXPECT_LT(std::abs(fundamental_formula_residual(W, x, y)), 1e-8);
        EXPECT_LT(std::abs(fundamental_formula_residual(W, y, x)), 1e-8);
    }
}

TEST(FundamentalFormula, PoleIsReported) {
    WeylGroup W(build_root_system("A1"));
    const RootSystem& rs = W.root_system();
    EXPECT_THROW(fundamental_formula_residual(W, a1_point(rs, Rational(0)), a1_point(rs, Rational(1, 7))), PoleError);
}

TEST(FundamentalFormula, ReportsPass) {
    for (const char* n : {"A1", "A2", "B2", "G2"}) {
        WeylGroup W(build_root_system(n));
        IdentityReport r = fundamental_formula_report(W, 50, 5, 1e-8);
        EXPECT_TRUE(r.passed) << n << " " << r.max_residual;
        EXPECT_EQ(r.residuals.size(), 50u);
    }
}

TEST(SubsetIdentity, A1Values) {
    WeylGroup W(build_root_system("A1"));
    const RootSystem& rs = W.root_system();
    // (lambda|x) = 1/3 for lambda = Lambda_1 at mu = 2/3
    TorusPoint x = a1_point(rs, Rational(2, 3));
    EXPECT_LT(std::abs(subset_identity_residual(W, x, true) - 1.0), 1e-12);
    EXPECT_LT(std::abs(subset_identity_residual(W, x, false) + 1.0), 1e-12);
}

TEST(SubsetIdentity, ObservedConstantPerType) {
    // the sum is constant in x but equals 1 only in rank one
    const std::vector<std::pair<const char*, double>> observed = {{"A1", 1}, {"A2", 2}, {"B2", 3}, {"G2", 5}};
    for (const auto& [n, v] : observed) {
        WeylGroup W(build_root_system(n));
        IdentityReport r = subset_identity_report(W, 20, 9, 1e-8);
        PointSampler sampler(9);
        for (int i = 0; i < 5; ++i) {
            TorusPoint x = sampler.next(W.root_system());
            if (!is_regular(W.root_system(), x)) continue;
            EXPECT_LT(std::abs(subset_identity_residual(W, x, true) - v), 1e-8) << n;
        }
        EXPECT_EQ(r.passed, std::string(n) == "A1");
    }
}

TEST(Orthogonality, A1OracleFixesConvention) {
    for (Integer k = 1; k <= 4; ++k) {
        EXPECT_LT(deviation(a1_matrix(k, false, kHermitian, false)), 1e-12);
        EXPECT_LT(deviation(a1_matrix(k, true, kHermitian, true)), 1e-12);
        EXPECT_GT(deviation(a1_matrix(k, true, kHermitian, false)), 0.5);
        EXPECT_GT(deviation(a1_matrix(k, false, kLiteral, false)), 0.1);
        EXPECT_LT(deviation(a1_matrix(k, false, kSymmetric, false)), 1e-12);
    }
}

TEST(Orthogonality, A1LibraryMatchesOracle) {
    WeylGroup W(build_root_system("A1"));
    for (Integer k = 1; k <= 4; ++k) {
        const std::vector<std::tuple<GridConvention, const A1Candidate*, bool>> cases = {
            {frozen_convention(), &kHermitian, false},
            {convention_for(GridMode::Full), &kHermitian, true},
            {{GridMode::Shifted, Density::LiteralSquare, false}, &kLiteral, false},
            {{GridMode::Shifted, Density::SymmetricSquare, false}, &kSymmetric, false},
        };
        for (const auto& [conv, cand, divide] : cases) {
            ComplexMatrix lib = orthogonality_matrix(W, k, conv);
            Matrix2 ref = a1_matrix(k, conv.grid == GridMode::Full, *cand, divide);
            for (std::size_t a = 0; a < lib.size(); ++a)
                for (std::size_t b = 0; b < lib.size(); ++b) EXPECT_LT(std::abs(lib[a][b] - ref[a][b]), 1e-12) << cand->name;
        }
    }
}

TEST(Orthogonality, FrozenConventionAcrossTypes) {
    for (const char* n : {"A2", "B2", "G2", "A3"}) {
        WeylGroup W(build_root_system(n));
        for (Integer k = 1; k <= 2; ++k) {
            EXPECT_LT(identity_deviation(orthogonality_matrix(W, k, frozen_convention())), 1e-7) << n;
            EXPECT_LT(identity_deviation(orthogonality_matrix(W, k, GridMode::Full)), 1e-7) << n;
        }
    }
}

TEST(Orthogonality, SquaredDensitiesAreNotUniversal) {
    WeylGroup W(build_root_system("A2"));
    ComplexMatrix sym = orthogonality_matrix(W, 1, GridConvention{GridMode::Shifted, Density::SymmetricSquare, false});
    for (std::size_t a = 0; a < sym.size(); ++a) EXPECT_LT(std::abs(sym[a][a] + 1.0), 1e-9);
    EXPECT_GT(identity_deviation(orthogonality_matrix(W, 1, GridConvention{GridMode::Shifted, Density::LiteralSquare, false})), 0.1);
}

TEST(Orthogonality, FullGridWithoutWeylFactorIsOff) {
    WeylGroup W(build_root_system("A1"));
    GridConvention c = frozen_convention();
    c.grid = GridMode::Full;
    IdentityReport r = orthogonality_report(W, 1, c, 1e-8);
    EXPECT_FALSE(r.passed);
    EXPECT_NEAR(r.max_residual, 1.0, 1e-9);
}

TEST(Sampler, Deterministic) {
    RootSystem rs = build_root_system("B3");
    PointSampler a(42), b(42);
    for (int i = 0; i < 10; ++i) EXPECT_EQ(a.next(rs).mu_star(), b.next(rs).mu_star());
}

TEST(Report, NanFails) {
    IdentityReport r;
    r.tolerance = 1.0;
    r.residuals = {0.0, std::nan("")};
    r.finalize();
    EXPECT_FALSE(r.passed);
    EXPECT_TRUE(std::isinf(r.max_residual));
}
