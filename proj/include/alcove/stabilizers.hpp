#pragma once

#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "alcove/errors.hpp"
#include "alcove/weyl.hpp"

namespace alcove {

/// A simple root of the stabilizer: a simple root of g, or the affine root delta - theta.
struct RootLabel {
    bool affine = false;
    std::size_t index = 0;  ///< simple-root index when !affine

    friend bool operator==(const RootLabel&, const RootLabel&) = default;
};

/// Stabilizer and isotropy data of a point mu of the closed alcove C (level 1).
struct FaceData {
    std::vector<std::size_t> walls;  ///< 0 = affine wall, i >= 1 = wall alpha_{i-1} = 0
    Weight mu;
    bool on_affine_wall = false;
    std::vector<std::size_t> delta0;        ///< simple roots vanishing at mu
    std::vector<RootLabel> delta_mu;        ///< affine root first when on the wall
    std::vector<Weight> delta_mu_roots;     ///< finite parts (-theta for the affine root)
    std::vector<Weight> fund_weights_mu;    ///< dual to delta_mu_roots, in their span
    Weight rho_mu;
    Integer n_value = 1;
    IntVector epsilon_covee;                ///< epsilon^vee in simple-coroot coordinates
    Integer isotropy_order = 1;
};

namespace detail {

inline Weight project_onto_span(const RootSystem& rs, const std::vector<Weight>& span, const Weight& u) {
    const std::size_t r = span.size();
    if (r == 0) return Weight::zero(rs.rank());
    RationalMatrix g(r, r);
    RationalVector rhs(r);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) g(i, j) = rs.inner(span[i], span[j]);
        rhs[i] = rs.inner(span[i], u);
    }
    RationalVector c = inverse(g) * rhs;
    Weight p = Weight::zero(rs.rank());
    for (std::size_t i = 0; i < r; ++i) p = p + c[i] * span[i];
    return p;
}

}  // namespace detail

inline bool in_closed_alcove(const RootSystem& rs, const Weight& mu) {
    return mu.is_dominant() && rs.inner(mu, rs.highest_root().weight) <= Rational(1);
}

inline FaceData face_data(const RootSystem& rs, const Weight& mu) {
    if (mu.rank() != rs.rank()) throw DomainError("rank mismatch");
    if (!in_closed_alcove(rs, mu)) throw DomainError("point " + to_string(mu) + " is outside the closed alcove");
    const std::size_t n = rs.rank();
    const Weight& theta = rs.highest_root().weight;
    const IntVector& a = rs.comarks();

    FaceData fd;
    fd.mu = mu;
    fd.on_affine_wall = rs.inner(mu, theta) == Rational(1);
    if (fd.on_affine_wall) fd.walls.push_back(0);
    for (std::size_t i = 0; i < n; ++i)
        if (mu[i] == 0) {
            fd.delta0.push_back(i);
            fd.walls.push_back(i + 1);
        }

    std::vector<Weight> duals;
    if (fd.on_affine_wall) {
        fd.delta_mu.push_back(RootLabel{true, 0});
        fd.delta_mu_roots.push_back(-theta);
        duals.push_back(-mu);
    }
    for (std::size_t i : fd.delta0) {
        fd.delta_mu.push_back(RootLabel{false, i});
        fd.delta_mu_roots.push_back(rs.simple_root(i));
        Weight d = rs.fundamental_weight(i);
        if (fd.on_affine_wall) d = d - Rational(a[i]) * mu;
        duals.push_back(d);
    }

    fd.rho_mu = Weight::zero(n);
    for (const auto& d : duals) {
        fd.fund_weights_mu.push_back(detail::project_onto_span(rs, fd.delta_mu_roots, d));
        fd.rho_mu = fd.rho_mu + fd.fund_weights_mu.back();
    }
    // 2(lambda_i|beta_j)/(beta_j|beta_j) = delta_ij
    for (std::size_t i = 0; i < duals.size(); ++i)
        for (std::size_t j = 0; j < duals.size(); ++j) {
            const Weight& b = fd.delta_mu_roots[j];
            Rational v = Rational(2) * rs.inner(fd.fund_weights_mu[i], b) / rs.inner(b, b);
            if (v != Rational(i == j ? 1 : 0)) throw std::logic_error("stabilizer fundamental weights are not dual");
        }

    // n = content of sum_{alpha_i not in Delta^0} a_i^vee alpha_i^vee; epsilon^vee = that sum / n
    IntVector u(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        if (std::find(fd.delta0.begin(), fd.delta0.end(), i) == fd.delta0.end()) u[i] = a[i];
    fd.n_value = std::max<Integer>(content(u), 1);
    fd.epsilon_covee = u;
    for (auto& x : fd.epsilon_covee) x /= fd.n_value;

    fd.isotropy_order = fd.on_affine_wall ? fd.n_value : 1;
    for (std::size_t i : fd.delta0) fd.isotropy_order *= a[i];
    return fd;
}

/// Barycenter of the vertices of C off the given walls (0 = affine wall, i = alpha_{i-1}).
inline Weight face_point(const RootSystem& rs, const std::vector<std::size_t>& walls) {
    const std::size_t n = rs.rank();
    std::vector<bool> on(n + 1, false);
    for (auto w : walls) on.at(w) = true;
    Weight sum = Weight::zero(n);
    Integer count = 0;
    for (std::size_t j = 0; j <= n; ++j) {
        if (on[j]) continue;
        ++count;
        if (j > 0) sum = sum + Rational(1, rs.comarks()[j - 1]) * rs.fundamental_weight(j - 1);
    }
    if (count == 0) throw DomainError("all walls of the alcove have empty intersection");
    return Rational(1, count) * sum;
}

/// All 2^{l+1}-1 faces of C, including the interior (no walls).
inline std::vector<FaceData> enumerate_faces(const RootSystem& rs) {
    const std::size_t n = rs.rank();
    std::vector<FaceData> faces;
    for (std::size_t mask = 0; mask + 1 < (std::size_t{1} << (n + 1)); ++mask) {
        std::vector<std::size_t> walls;
        for (std::size_t j = 0; j <= n; ++j)
            if (mask & (std::size_t{1} << j)) walls.push_back(j);
        faces.push_back(face_data(rs, face_point(rs, walls)));
    }
    return faces;
}

/// |T'_z/T_z| as the index of Z{a_beta beta^vee} (theta^vee for the affine root) in its saturation
/// inside the coroot lattice: the gcd of the maximal minors of the generator matrix.
inline Integer isotropy_order_by_lattice(const RootSystem& rs, const FaceData& fd) {
    const std::size_t n = rs.rank();
    std::vector<IntVector> gens;
    for (const auto& lab : fd.delta_mu) {
        if (lab.affine) {
            gens.push_back(rs.highest_coroot());
        } else {
            IntVector g(n, 0);
            g[lab.index] = rs.comarks()[lab.index];
            gens.push_back(g);
        }
    }
    const std::size_t r = gens.size();
    if (r == 0) return 1;
    Integer g = 0;
    std::vector<std::size_t> rows(r);
    std::iota(rows.begin(), rows.end(), 0);
    // iterate over r-subsets of coordinates
    while (true) {
        IntMatrix minor(r, r);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) minor(i, j) = gens[j][rows[i]];
        g = std::gcd(g, determinant(minor));
        std::size_t i = r;
        while (i > 0 && rows[i - 1] == n - r + i - 1) --i;
        if (i == 0) break;
        ++rows[i - 1];
        for (std::size_t j = i; j < r; ++j) rows[j] = rows[j - 1] + 1;
    }
    return std::llabs(g);
}

/// A generator of W_mu: identity, a simple reflection in Delta^0, or the affine reflection r_theta.
struct StabilizerGenerator {
    enum class Kind { Identity, Simple, AffineTheta } kind = Kind::Identity;
    std::size_t index = 0;

    static StabilizerGenerator identity() { return {}; }
    static StabilizerGenerator simple(std::size_t i) { return {Kind::Simple, i}; }
    static StabilizerGenerator affine_theta() { return {Kind::AffineTheta, 0}; }
};

struct RhoShift {
    Weight sub_shift;    ///< w(rho_mu) - rho_mu
    Weight full_shift;   ///< w(rho) - rho
    Weight correction;   ///< sub_shift - full_shift
};

/// The finite counterpart in W_mu^0: s_theta for r_theta, s_i otherwise.
inline WeylElement finite_counterpart(const RootSystem& rs, const FaceData& fd, const StabilizerGenerator& g) {
    switch (g.kind) {
        case StabilizerGenerator::Kind::Identity:
            return identity_element(rs);
        case StabilizerGenerator::Kind::Simple:
            if (std::find(fd.delta0.begin(), fd.delta0.end(), g.index) == fd.delta0.end())
                throw DomainError("simple reflection " + std::to_string(g.index) + " does not fix the face");
            return simple_reflection(rs, g.index);
        case StabilizerGenerator::Kind::AffineTheta:
            if (!fd.on_affine_wall) throw DomainError("r_theta does not fix a face off the affine wall");
            return theta_reflection(rs);
    }
    throw DomainError("unknown generator");
}

inline AffineWeylElement affine_counterpart(const RootSystem& rs, const FaceData& fd, const StabilizerGenerator& g) {
    if (g.kind == StabilizerGenerator::Kind::AffineTheta) {
        finite_counterpart(rs, fd, g);
        return affine_theta_reflection(rs);
    }
    return affine_from_finite(rs, finite_counterpart(rs, fd, g));
}

/// Finite-part shifts for a generator of W_mu; the affine reflection acts on level-0 vectors as s_theta.
/// Off the wall the correction is 0; for r_theta it is h^vee theta.
inline RhoShift rho_shift(const RootSystem& rs, const FaceData& fd, const StabilizerGenerator& g) {
    WeylElement w = finite_counterpart(rs, fd, g);
    RhoShift out;
    out.sub_shift = w.apply(fd.rho_mu) - fd.rho_mu;
    out.full_shift = w.apply(rs.rho()) - rs.rho();
    out.correction = out.sub_shift - out.full_shift;
    return out;
}

inline std::vector<StabilizerGenerator> stabilizer_generators(const FaceData& fd) {
    std::vector<StabilizerGenerator> gens;
    for (const auto& lab : fd.delta_mu)
        gens.push_back(lab.affine ? StabilizerGenerator::affine_theta() : StabilizerGenerator::simple(lab.index));
    return gens;
}

struct StabilizerElement {
    std::vector<std::size_t> word;  ///< indices into stabilizer_generators(fd), applied right to left
    WeylElement finite;             ///< element of W_mu^0
    AffineWeylElement affine;       ///< corresponding element of W_mu
};

/// W_mu^0 together with the isomorphic affine copy W_mu, matched generator by generator.
inline std::vector<StabilizerElement> stabilizer_group(const RootSystem& rs, const FaceData& fd) {
    auto gens = stabilizer_generators(fd);
    std::vector<WeylElement> fin;
    std::vector<AffineWeylElement> aff;
    for (const auto& g : gens) {
        fin.push_back(finite_counterpart(rs, fd, g));
        aff.push_back(affine_counterpart(rs, fd, g));
    }
    std::vector<StabilizerElement> out{{{}, identity_element(rs), affine_identity(rs)}};
    std::set<std::vector<Integer>> seen{out[0].finite.action.data()};
    for (std::size_t head = 0; head < out.size(); ++head)
        for (std::size_t i = 0; i < gens.size(); ++i) {
            IntMatrix m = out[head].finite.action * fin[i].action;
            if (!seen.insert(m.data()).second) continue;
            StabilizerElement e;
            e.word = out[head].word;
            e.word.push_back(i);
            e.finite = make_weyl_element(rs, std::move(m));
            e.affine = compose(rs, out[head].affine, aff[i]);
            out.push_back(std::move(e));
        }
    return out;
}

/// Positive roots (finite parts) of the root subsystem with simple roots delta_mu_roots.
inline std::vector<Weight> face_positive_roots(const RootSystem& rs, const FaceData& fd) {
    const auto& simple = fd.delta_mu_roots;
    const std::size_t r = simple.size();
    if (r == 0) return {};
    auto reflect = [&](const Weight& b, const Weight& g) {
        return b - (Rational(2) * rs.inner(b, g) / rs.inner(g, g)) * g;
    };
    std::set<RationalVector> roots;
    std::vector<Weight> queue(simple.begin(), simple.end());
    for (const auto& s : simple) roots.insert(s.coords);
    while (!queue.empty()) {
        Weight b = queue.back();
        queue.pop_back();
        for (const auto& g : simple) {
            Weight c = reflect(b, g);
            if (roots.insert(c.coords).second) queue.push_back(c);
        }
    }
    RationalMatrix basis(rs.rank(), r);
    for (std::size_t j = 0; j < r; ++j)
        for (std::size_t i = 0; i < rs.rank(); ++i) basis(i, j) = simple[j][i];
    std::vector<Weight> positive;
    for (const auto& v : roots) {
        RationalVector c = solve_full_column_rank(basis, v);
        if (!all_integer(c)) throw std::logic_error("subsystem root with fractional coordinates");
        if (std::all_of(c.begin(), c.end(), [](const Rational& x) { return x >= 0; })) positive.emplace_back(v);
    }
    return positive;
}

/// Checks e^{2 pi i <v(k phi) - rho + v rho - v rho_mu, t>} = e^{2 pi i <k phi - rho_mu, t>} for all v in W_mu^0.
inline bool phase_law_holds(const RootSystem& rs, const FaceData& fd, Integer k, const TorusPoint& t) {
    Weight kphi = Rational(k) * fd.mu;
    Rational target = frac(t.pairing((kphi - fd.rho_mu).coords));
    for (const auto& e : stabilizer_group(rs, fd)) {
        const WeylElement& v = e.finite;
        Weight lhs = v.apply(kphi) - rs.rho() + v.apply(rs.rho()) - v.apply(fd.rho_mu);
        if (frac(t.pairing(lhs.coords)) != target) return false;
    }
    return true;
}

/// phase_law_holds restricted to t in nu^{-1}(M*)/(k+h^vee); other t are a domain error.
inline bool lattice_phase_check(const RootSystem& rs, const FaceData& fd, Integer k, const TorusPoint& t) {
    if (k < 1) throw DomainError("level must be positive");
    if (!rs.in_mstar(Rational(k + rs.dual_coxeter()) * t.mu_star()))
        throw DomainError("point is not in M*/(k+h^vee)");
    return phase_law_holds(rs, fd, k, t);
}

}  // namespace alcove
