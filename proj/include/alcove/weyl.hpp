#pragma once

#include <map>
#include <optional>
#include <vector>

#include "alcove/errors.hpp"
#include "alcove/root_system.hpp"
#include "alcove/torus.hpp"

namespace alcove {

/// Finite Weyl group element acting on fundamental-weight coordinates.
struct WeylElement {
    IntMatrix action;
    int sign = 1;
    std::vector<int> word;  ///< reduced word in simple reflections, applied right to left

    std::size_t length() const { return word.size(); }
    Weight apply(const Weight& a) const { return Weight(to_rational(action) * a.coords); }
    IntVector apply(const IntVector& a) const { return action * a; }

    friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.action == b.action; }
};

inline IntMatrix simple_reflection_matrix(const RootSystem& rs, std::size_t i) {
    const std::size_t n = rs.rank();
    IntMatrix s = IntMatrix::identity(n);
    for (std::size_t r = 0; r < n; ++r) s(r, i) -= rs.cartan()(r, i);
    return s;
}

/// Matrix of s_theta: lambda -> lambda - (lambda|theta) theta.
inline IntMatrix theta_reflection_matrix(const RootSystem& rs) {
    const std::size_t n = rs.rank();
    IntMatrix s = IntMatrix::identity(n);
    IntVector theta = rs.highest_root().weight.integral();
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) s(r, c) -= theta[r] * rs.comarks()[c];
    return s;
}

namespace detail {

inline bool is_positive_root(const RootSystem& rs, const IntVector& beta_weight) {
    Rational h(0);
    RationalVector root = rs.inverse_cartan() * to_rational(beta_weight);
    for (const auto& c : root) h += c;
    return h > 0;
}

}  // namespace detail

/// Reduced word by greedy descent: peel off any right descent s_i (w(alpha_i) < 0).
inline std::vector<int> reduced_word(const RootSystem& rs, IntMatrix w) {
    std::vector<int> reversed;
    const std::size_t n = rs.rank();
    while (true) {
        bool found = false;
        for (std::size_t i = 0; i < n; ++i) {
            IntVector image = w * rs.cartan().column(i);
            if (!detail::is_positive_root(rs, image)) {
                reversed.push_back(static_cast<int>(i));
                w = w * simple_reflection_matrix(rs, i);
                found = true;
                break;
            }
        }
        if (!found) break;
    }
    if (!(w == IntMatrix::identity(n))) throw DomainError("matrix is not a Weyl group element");
    return {reversed.rbegin(), reversed.rend()};
}

inline WeylElement make_weyl_element(const RootSystem& rs, IntMatrix action) {
    WeylElement w;
    w.word = reduced_word(rs, action);
    w.sign = (w.word.size() % 2 == 0) ? 1 : -1;
    w.action = std::move(action);
    return w;
}

inline WeylElement identity_element(const RootSystem& rs) {
    return WeylElement{IntMatrix::identity(rs.rank()), 1, {}};
}

inline WeylElement simple_reflection(const RootSystem& rs, std::size_t i) {
    return WeylElement{simple_reflection_matrix(rs, i), -1, {static_cast<int>(i)}};
}

inline WeylElement theta_reflection(const RootSystem& rs) { return make_weyl_element(rs, theta_reflection_matrix(rs)); }

inline WeylElement compose(const RootSystem& rs, const WeylElement& a, const WeylElement& b) {
    return make_weyl_element(rs, a.action * b.action);
}

inline WeylElement inverse(const RootSystem& rs, const WeylElement& w) {
    return make_weyl_element(rs, to_integer(alcove::inverse(to_rational(w.action))));
}

inline Weight act(const WeylElement& w, const Weight& a) { return w.apply(a); }

/// w_L: the element sending every positive root to a negative root.
inline WeylElement longest_element(const RootSystem& rs) {
    const std::size_t n = rs.rank();
    IntMatrix w = IntMatrix::identity(n);
    // multiply on the right by s_i while w(alpha_i) > 0; each step raises the length by one
    while (true) {
        bool grew = false;
        for (std::size_t i = 0; i < n; ++i) {
            IntVector image = w * rs.cartan().column(i);
            if (detail::is_positive_root(rs, image)) {
                w = w * simple_reflection_matrix(rs, i);
                grew = true;
                break;
            }
        }
        if (!grew) break;
    }
    return make_weyl_element(rs, w);
}

inline constexpr std::size_t kDefaultWeylCap = 1'000'000;

/// The enumerated finite Weyl group, together with the root system it belongs to.
class WeylGroup {
public:
    explicit WeylGroup(RootSystem rs, std::size_t cap = kDefaultWeylCap) : rs_(std::move(rs)) { enumerate(cap); }

    const RootSystem& root_system() const { return rs_; }
    const std::vector<WeylElement>& elements() const { return elements_; }
    std::size_t order() const { return elements_.size(); }
    const WeylElement& operator[](std::size_t i) const { return elements_[i]; }

    std::optional<std::size_t> find(const IntMatrix& action) const {
        auto it = index_.find(action.data());
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }
    std::size_t index_of(const WeylElement& w) const {
        auto i = find(w.action);
        if (!i) throw DomainError("element not in the Weyl group");
        return *i;
    }
    const WeylElement& product(const WeylElement& a, const WeylElement& b) const {
        return elements_[index_of(WeylElement{a.action * b.action, 1, {}})];
    }
    const WeylElement& inverse(const WeylElement& w) const {
        return elements_[index_of(WeylElement{to_integer(alcove::inverse(to_rational(w.action))), 1, {}})];
    }
    const WeylElement& longest() const { return elements_.back(); }

private:
    void enumerate(std::size_t cap) {
        const std::size_t n = rs_.rank();
        std::vector<IntMatrix> gens;
        for (std::size_t i = 0; i < n; ++i) gens.push_back(simple_reflection_matrix(rs_, i));
        elements_.push_back(identity_element(rs_));
        index_.emplace(elements_.back().action.data(), 0);
        // breadth-first in the Cayley graph, so the first word reaching an element is reduced
        for (std::size_t head = 0; head < elements_.size(); ++head) {
            for (std::size_t i = 0; i < n; ++i) {
                IntMatrix m = elements_[head].action * gens[i];
                if (index_.count(m.data())) continue;
                if (elements_.size() >= cap)
                    throw ResourceError("Weyl group of " + rs_.name() + " exceeds cap " + std::to_string(cap));
                WeylElement w;
                w.word = elements_[head].word;
                w.word.push_back(static_cast<int>(i));
                w.sign = -elements_[head].sign;
                w.action = std::move(m);
                index_.emplace(w.action.data(), elements_.size());
                elements_.push_back(std::move(w));
            }
        }
    }

    RootSystem rs_;
    std::vector<WeylElement> elements_;
    std::map<std::vector<Integer>, std::size_t> index_;
};

inline std::vector<WeylElement> enumerate_weyl(const RootSystem& rs, std::size_t cap = kDefaultWeylCap) {
    return WeylGroup(rs, cap).elements();
}

/// Element of W ⋉ M: x -> finite(x) + k nu(translation) at level k.
struct AffineWeylElement {
    WeylElement finite;
    IntVector translation;  ///< coordinates in the basis of M

    friend bool operator==(const AffineWeylElement& a, const AffineWeylElement& b) {
        return a.finite == b.finite && a.translation == b.translation;
    }
};

inline AffineWeylElement affine_identity(const RootSystem& rs) {
    return AffineWeylElement{identity_element(rs), IntVector(rs.rank(), 0)};
}

inline AffineWeylElement affine_from_finite(const RootSystem& rs, const WeylElement& w) {
    return AffineWeylElement{w, IntVector(rs.rank(), 0)};
}

inline AffineWeylElement translation_element(const RootSystem& rs, const IntVector& m_coords) {
    return AffineWeylElement{identity_element(rs), m_coords};
}

/// Action of a finite element on a coroot vector, via nu-equivariance.
inline IntVector act_on_coroot(const RootSystem& rs, const WeylElement& w, const IntVector& h) {
    Weight image = w.apply(rs.coroot_to_weight(h));
    return to_integer(rs.weight_to_coroot(image));
}

/// The reflection in the affine wall (theta|x) = k: r_theta = t_{theta^vee} s_theta.
inline AffineWeylElement affine_theta_reflection(const RootSystem& rs) {
    return AffineWeylElement{theta_reflection(rs), rs.coroot_to_m(rs.highest_coroot())};
}

/// (w1, m1)(w2, m2) = (w1 w2, m1 + w1(m2)).
inline AffineWeylElement compose(const RootSystem& rs, const AffineWeylElement& a, const AffineWeylElement& b) {
    IntVector moved = act_on_coroot(rs, a.finite, rs.m_to_coroot(b.translation));
    return AffineWeylElement{compose(rs, a.finite, b.finite), a.translation + rs.coroot_to_m(moved)};
}

inline AffineWeylElement inverse(const RootSystem& rs, const AffineWeylElement& g) {
    WeylElement winv = inverse(rs, g.finite);
    IntVector moved = act_on_coroot(rs, winv, rs.m_to_coroot(g.translation));
    return AffineWeylElement{winv, -rs.coroot_to_m(moved)};
}

inline Weight affine_act_weight(const RootSystem& rs, const AffineWeylElement& g, const Weight& x, Integer k) {
    Weight shift = rs.coroot_to_weight(rs.m_to_coroot(g.translation));
    return g.finite.apply(x) + Rational(k) * shift;
}

inline TorusPoint affine_act(const RootSystem& rs, const AffineWeylElement& g, const TorusPoint& x, Integer k) {
    if (k < 1) throw DomainError("affine action needs level k >= 1");
    return TorusPoint(rs, affine_act_weight(rs, g, x.mu_star(), k));
}

/// A point of the closed alcove kC with its wall pairings.
struct AlcovePoint {
    TorusPoint point;
    Integer level = 1;
    RationalVector chamber_certificate;  ///< <alpha_i^vee, x> for each i, then (theta|x)

    bool verify(const RootSystem& rs) const {
        RationalVector fresh = point.mu_star().coords;
        fresh.push_back(rs.inner(rs.highest_root().weight, point.mu_star()));
        if (fresh != chamber_certificate) return false;
        for (std::size_t i = 0; i + 1 < fresh.size(); ++i)
            if (fresh[i] < 0) return false;
        return fresh.back() <= Rational(level);
    }
};

inline AlcovePoint make_alcove_point(const RootSystem& rs, TorusPoint x, Integer k) {
    AlcovePoint p{std::move(x), k, {}};
    p.chamber_certificate = p.point.mu_star().coords;
    p.chamber_certificate.push_back(rs.inner(rs.highest_root().weight, p.point.mu_star()));
    return p;
}

/// Folds x into the closed alcove kC by reflecting through violated walls.
/// Returns g with affine_act(g, x, k) in kC.
inline std::pair<AffineWeylElement, AlcovePoint> find_alcove(const RootSystem& rs, Integer k, const TorusPoint& x) {
    if (k < 1) throw DomainError("find_alcove needs level k >= 1");
    const std::size_t n = rs.rank();
    AffineWeylElement g = affine_identity(rs);
    AffineWeylElement r_theta = affine_theta_reflection(rs);
    Weight y = x.mu_star();
    const Weight& theta = rs.highest_root().weight;
    while (true) {
        std::optional<std::size_t> bad;
        for (std::size_t i = 0; i < n && !bad; ++i)
            if (y[i] < 0) bad = i;
        if (bad) {
            AffineWeylElement s = affine_from_finite(rs, simple_reflection(rs, *bad));
            y = affine_act_weight(rs, s, y, k);
            g = compose(rs, s, g);
            continue;
        }
        if (rs.inner(theta, y) > Rational(k)) {
            y = affine_act_weight(rs, r_theta, y, k);
            g = compose(rs, r_theta, g);
            continue;
        }
        break;
    }
    return {g, make_alcove_point(rs, TorusPoint(rs, y), k)};
}

/// Translation v in M with w_aff = t_v w_fin; throws MismatchError if the finite parts differ.
inline IntVector factor_affine(const RootSystem& rs, const AffineWeylElement& w_aff, const WeylElement& w_fin) {
    if (!(w_aff.finite == w_fin)) throw MismatchError("affine element does not correspond to the finite element");
    // the representation already is t_v w; re-derive v through the coroot lattice to check M-membership
    IntVector v = rs.coroot_to_m(rs.m_to_coroot(w_aff.translation));
    return v;
}

/// Translation part of a product of affine generators g_1 ... g_n, built by induction on the word length:
/// for g r w_1 with w_1 = t_{v_1} w_1', one gets v = r(v_1) + v_r.
inline IntVector translation_by_induction(const RootSystem& rs, const std::vector<AffineWeylElement>& generators) {
    IntVector v(rs.rank(), 0);
    for (auto it = generators.rbegin(); it != generators.rend(); ++it) {
        IntVector moved = act_on_coroot(rs, it->finite, rs.m_to_coroot(v));
        v = rs.coroot_to_m(moved) + it->translation;
    }
    return v;
}

}  // namespace alcove
