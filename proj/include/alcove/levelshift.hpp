#pragma once

#include <string>
#include <vector>

#include "alcove/characters.hpp"
#include "alcove/errors.hpp"
#include "alcove/identities.hpp"
#include "alcove/stabilizers.hpp"

namespace alcove {

/// w_aff = t_v w_fin in W_mu, paired with a weight of level k.
struct ShiftWitness {
    AffineWeylElement w_aff;
    WeylElement w_fin;
    IntVector v;  ///< translation, M coordinates
    Integer level = 1;
    Weight lambda;
    FaceData face;
    std::vector<Weight> face_roots;  ///< positive roots of the face subsystem
};

inline ShiftWitness make_witness(const RootSystem& rs, const FaceData& fd, const StabilizerElement& e, Integer k,
                                 const Weight& lambda) {
    if (k < 1) throw DomainError("level must be positive");
    require_dominant_integral(lambda);
    ShiftWitness s;
    s.w_aff = e.affine;
    s.w_fin = e.finite;
    s.v = factor_affine(rs, e.affine, e.finite);
    s.level = k;
    s.lambda = lambda;
    s.face = fd;
    s.face_roots = face_positive_roots(rs, fd);
    return s;
}

/// The pairing (k+h^vee)(nu(v)|x), exact.
inline Rational lattice_factor_angle(const RootSystem& rs, const ShiftWitness& s, const TorusPoint& x) {
    Weight nv = rs.coroot_to_weight(rs.m_to_coroot(s.v));
    return Rational(s.level + rs.dual_coxeter()) * x.pairing(nv.coords);
}

struct ShiftSides {
    ComplexValue lhs;           ///< w(e^lambda / D)
    ComplexValue rhs_full;      ///< e^{-(k+h^vee)v} (D_box/D) w'(e^lambda / D_box)
    ComplexValue rhs_lattice;   ///< the same without the exponential factor
};

/// Both sides at a regular point x. w' is the affine element acting on e^lambda at level k.
inline ShiftSides shift_rule_sides(const RootSystem& rs, const ShiftWitness& s, const TorusPoint& x) {
    if (!is_regular(rs, x)) throw PoleError("level-shift rule at non-regular point " + to_string(x.mu_star()));
    const WeylElement& w = s.w_fin;
    auto one_minus_exp = [&](const IntVector& beta) { return ComplexValue(1.0, 0.0) - x.angle(beta).exp(); };

    ComplexValue wd(1.0, 0.0), d(1.0, 0.0);
    for (const auto& a : rs.positive_roots()) {
        IntVector al = a.weight.integral();
        wd *= one_minus_exp(-w.apply(al));
        d *= one_minus_exp(-al);
    }
    ComplexValue dbox(1.0, 0.0), wdbox(1.0, 0.0);
    for (const auto& b : s.face_roots) {
        IntVector be = b.integral();
        dbox *= one_minus_exp(-be);
        wdbox *= one_minus_exp(-w.apply(be));
    }
    Weight wl = w.apply(s.lambda);
    Weight affine_image = affine_act_weight(rs, s.w_aff, s.lambda, s.level);

    ShiftSides out;
    out.lhs = eval_exp(wl, x) / wd;
    out.rhs_lattice = (dbox / d) * eval_exp(affine_image, x) / wdbox;
    out.rhs_full = reduce_angle(-lattice_factor_angle(rs, s, x)).exp() * out.rhs_lattice;
    return out;
}

/// lhs - rhs of the lattice form, for x = nu^{-1}(m)/(k+h^vee), m in M*.
inline ComplexValue shift_rule_residual(const RootSystem& rs, const ShiftWitness& s, const TorusPoint& x) {
    if (!rs.in_mstar(Rational(s.level + rs.dual_coxeter()) * x.mu_star()))
        throw DomainError("point is not in M*/(k+h^vee)");
    ShiftSides sides = shift_rule_sides(rs, s, x);
    return sides.lhs - sides.rhs_lattice;
}

/// Witnesses from every face on the affine wall and every element of its stabilizer.
inline std::vector<ShiftWitness> level_shift_witnesses(const RootSystem& rs, Integer k, const Weight& lambda) {
    std::vector<ShiftWitness> out;
    for (const auto& fd : enumerate_faces(rs)) {
        if (!fd.on_affine_wall) continue;
        for (const auto& e : stabilizer_group(rs, fd)) out.push_back(make_witness(rs, fd, e, k, lambda));
    }
    return out;
}

/// Full rule everywhere, lattice form on the lattice, factor e^{(k+h^vee)v} = 1 exactly,
/// and an off-lattice probe at nu^{-1}(m)/(k+h^vee+1) that must break the lattice form.
inline IdentityReport levelshift_report(const WeylGroup& W, Integer k, double tol) {
    const RootSystem& rs = W.root_system();
    IdentityReport r;
    r.name = "levelshift";
    r.system = rs.type().name();
    r.level = k;
    r.tolerance = tol;
    const Integer s = k + rs.dual_coxeter();
    auto reps = mstar_coset_representatives(rs, k);
    std::vector<TorusPoint> lattice, probe;
    for (const auto& m : reps) {
        Weight mw(rs.lattice_mstar_weights() * to_rational(m));
        TorusPoint x(rs, Rational(1, s) * mw), y(rs, Rational(1, s + 1) * mw);
        if (is_regular(rs, x)) lattice.push_back(x);
        if (is_regular(rs, y)) probe.push_back(y);
    }
    std::size_t witnesses = 0, nontrivial = 0, factor_failures = 0;
    double full = 0.0, lat = 0.0, off = 0.0;
    for (const auto& lambda : level_weights(rs, k)) {
        for (const auto& wit : level_shift_witnesses(rs, k, lambda)) {
            ++witnesses;
            bool trivial = is_zero(wit.v);
            if (!trivial) ++nontrivial;
            for (const auto& x : lattice) {
                if (!is_integer(lattice_factor_angle(rs, wit, x))) ++factor_failures;
                ShiftSides sd = shift_rule_sides(rs, wit, x);
                full = std::max(full, std::abs(sd.lhs - sd.rhs_full));
                lat = std::max(lat, std::abs(shift_rule_residual(rs, wit, x)));
            }
            if (trivial) continue;
            for (const auto& y : probe) {
                ShiftSides sd = shift_rule_sides(rs, wit, y);
                full = std::max(full, std::abs(sd.lhs - sd.rhs_full));
                off = std::max(off, std::abs(sd.lhs - sd.rhs_lattice));
            }
        }
    }
    r.residuals = {full, lat, factor_failures == 0 ? 0.0 : INFINITY, nontrivial == 0 || off >= 0.1 ? 0.0 : INFINITY};
    r.details.emplace_back("witnesses", std::to_string(witnesses));
    r.details.emplace_back("translating_witnesses", std::to_string(nontrivial));
    r.details.emplace_back("lattice_points", std::to_string(lattice.size()));
    r.details.emplace_back("full_rule_residual", format_scientific(full));
    r.details.emplace_back("lattice_rule_residual", format_scientific(lat));
    r.details.emplace_back("lattice_factor_failures", std::to_string(factor_failures));
    r.details.emplace_back("off_lattice_probe_residual", format_scientific(off));
    r.finalize();
    return r;
}

}  // namespace alcove
