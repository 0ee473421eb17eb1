#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "alcove/errors.hpp"
#include "alcove/matrix.hpp"
#include "alcove/rational.hpp"

namespace alcove {

/// Element of t* in fundamental-weight coordinates.
struct Weight {
    RationalVector coords;

    Weight() = default;
    explicit Weight(RationalVector c) : coords(std::move(c)) {}
    explicit Weight(const IntVector& c) : coords(to_rational(c)) {}

    static Weight zero(std::size_t rank) { return Weight(RationalVector(rank, Rational(0))); }

    std::size_t rank() const { return coords.size(); }
    const Rational& operator[](std::size_t i) const { return coords[i]; }
    Rational& operator[](std::size_t i) { return coords[i]; }

    bool is_integral() const { return all_integer(coords); }
    bool is_dominant() const {
        return std::all_of(coords.begin(), coords.end(), [](const Rational& r) { return r >= 0; });
    }
    bool is_zero() const { return alcove::is_zero(coords); }
    IntVector integral() const { return to_integer(coords); }

    friend Weight operator+(const Weight& a, const Weight& b) { return Weight(a.coords + b.coords); }
    friend Weight operator-(const Weight& a, const Weight& b) { return Weight(a.coords - b.coords); }
    friend Weight operator-(const Weight& a) { return Weight(-a.coords); }
    friend Weight operator*(const Rational& s, const Weight& a) { return Weight(scale(a.coords, s)); }
    friend bool operator==(const Weight& a, const Weight& b) { return a.coords == b.coords; }
    /// Lexicographic on fundamental-weight coordinates (canonical table order).
    friend bool operator<(const Weight& a, const Weight& b) { return a.coords < b.coords; }
};

inline std::string to_string(const Weight& w) {
    std::string s = "(";
    for (std::size_t i = 0; i < w.rank(); ++i) {
        if (i) s += ",";
        s += to_string(w[i]);
    }
    return s + ")";
}

struct CartanType {
    char series = 'A';
    int rank = 1;

    std::string name() const { return std::string(1, series) + std::to_string(rank); }
    friend auto operator<=>(const CartanType&, const CartanType&) = default;
};

/// Parses names like "A2", "g2", "E6".
inline CartanType parse_cartan_type(const std::string& text) {
    if (text.size() < 2) throw ConfigurationError("bad root system name '" + text + "'");
    CartanType t;
    t.series = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
    try {
        std::size_t pos = 0;
        t.rank = std::stoi(text.substr(1), &pos);
        if (pos != text.size() - 1) throw std::invalid_argument(text);
    } catch (const std::exception&) {
        throw ConfigurationError("bad root system name '" + text + "'");
    }
    return t;
}

struct Root {
    Weight weight;        ///< fundamental-weight coordinates
    IntVector simple;     ///< simple-root coordinates
    Integer height() const {
        Integer h = 0;
        for (Integer c : simple) h += c;
        return h;
    }
};

/// Cartan matrix C_ij = <alpha_j, alpha_i^vee> in Bourbaki numbering (0-based).
inline IntMatrix cartan_matrix(CartanType t) {
    const char s = t.series;
    const int l = t.rank;
    bool ok = l >= 1 && ((s == 'A') || (s == 'B' && l >= 2) || (s == 'C' && l >= 2) || (s == 'D' && l >= 4) ||
                         (s == 'E' && l >= 6 && l <= 8) || (s == 'F' && l == 4) || (s == 'G' && l == 2));
    if (!ok) throw ConfigurationError("invalid simple type " + t.name());
    const auto n = static_cast<std::size_t>(l);
    IntMatrix c(n, n);
    for (std::size_t i = 0; i < n; ++i) c(i, i) = 2;
    auto link = [&](std::size_t i, std::size_t j) { c(i, j) = c(j, i) = -1; };
    switch (s) {
        case 'A':
            for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1);
            break;
        case 'B':
            for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1);
            c(n - 1, n - 2) = -2;  // last node short
            break;
        case 'C':
            for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1);
            c(n - 2, n - 1) = -2;  // last node long
            break;
        case 'D':
            for (std::size_t i = 0; i + 2 < n; ++i) link(i, i + 1);
            link(n - 3, n - 1);
            break;
        case 'E':
            link(0, 2);
            link(1, 3);
            for (std::size_t i = 2; i + 1 < n; ++i) link(i, i + 1);
            break;
        case 'F':
            link(0, 1);
            link(1, 2);
            link(2, 3);
            c(2, 1) = -2;
            break;
        case 'G':
            c(0, 1) = -3;  // alpha_1 short
            c(1, 0) = -1;
            break;
    }
    return c;
}

/// Immutable root-system datum with (theta|theta) = 2.
class RootSystem {
public:
    RootSystem(CartanType type, IntMatrix cartan) : type_(type), cartan_(std::move(cartan)) { build(); }

    const CartanType& type() const { return type_; }
    std::string name() const { return type_.name(); }
    std::size_t rank() const { return cartan_.rows(); }

    const IntMatrix& cartan() const { return cartan_; }
    const RationalMatrix& inverse_cartan() const { return inverse_cartan_; }
    const RationalVector& symmetrizers() const { return symmetrizers_; }
    const RationalMatrix& gram_weights() const { return gram_weights_; }
    /// (alpha_i^vee | alpha_j^vee); also the weight coordinates of nu(alpha_j^vee) as columns.
    const RationalMatrix& gram_coroots() const { return gram_coroots_; }

    const std::vector<Root>& positive_roots() const { return positive_roots_; }
    const Root& highest_root() const { return highest_root_; }
    const IntVector& highest_coroot() const { return comarks_; }
    const IntVector& marks() const { return marks_; }
    const IntVector& comarks() const { return comarks_; }
    Integer dual_coxeter() const { return dual_coxeter_; }
    const Weight& rho() const { return rho_; }

    /// Basis of M = Z-span of W(theta^vee), simple-coroot coordinates (columns).
    const IntMatrix& lattice_m_basis() const { return lattice_m_; }
    /// Basis of M*, simple-coroot coordinates (columns, rational).
    const RationalMatrix& lattice_mstar_basis() const { return lattice_mstar_; }
    /// Basis of nu(M*) in fundamental-weight coordinates (columns).
    const RationalMatrix& lattice_mstar_weights() const { return lattice_mstar_weights_; }
    /// Gram matrix (b_i|b_j) of the M basis; integral since M is contained in M*.
    const IntMatrix& lattice_m_gram() const { return lattice_m_gram_; }

    Weight fundamental_weight(std::size_t i) const {
        Weight w = Weight::zero(rank());
        w[i] = 1;
        return w;
    }
    Weight simple_root(std::size_t i) const { return Weight(to_rational(cartan_.column(i))); }

    Rational inner(const Weight& a, const Weight& b) const { return bilinear(gram_weights_, a.coords, b.coords); }

    RationalVector to_root_coords(const Weight& w) const { return inverse_cartan_ * w.coords; }
    Weight from_root_coords(const IntVector& c) const { return Weight(cartan_ * c); }

    /// nu: t -> t*, from simple-coroot coordinates to fundamental-weight coordinates.
    Weight coroot_to_weight(const RationalVector& h) const { return Weight(gram_coroots_ * h); }
    Weight coroot_to_weight(const IntVector& h) const { return coroot_to_weight(to_rational(h)); }
    RationalVector weight_to_coroot(const Weight& w) const { return inverse_gram_coroots_ * w.coords; }

    /// Coroot coordinates of a translation given in M-basis coordinates.
    IntVector m_to_coroot(const IntVector& m) const { return lattice_m_ * m; }
    /// M-basis coordinates of an element of M given in coroot coordinates; throws if not in M.
    IntVector coroot_to_m(const IntVector& h) const {
        RationalVector c = inverse_lattice_m_ * to_rational(h);
        if (!all_integer(c)) throw DomainError("vector is not in the lattice M");
        return to_integer(c);
    }

    /// <lambda, n> for every generator n of M.
    RationalVector pair_with_m(const Weight& w) const { return to_rational(lattice_m_).transpose() * w.coords; }
    bool in_mstar(const Weight& w) const { return all_integer(pair_with_m(w)); }
    bool in_m(const Weight& w) const {
        RationalVector h = weight_to_coroot(w);
        if (!all_integer(h)) return false;
        return all_integer(inverse_lattice_m_ * h);
    }

private:
    void build();

    CartanType type_;
    IntMatrix cartan_;
    RationalMatrix inverse_cartan_;
    RationalVector symmetrizers_;
    RationalMatrix gram_weights_;
    RationalMatrix gram_coroots_;
    RationalMatrix inverse_gram_coroots_;
    std::vector<Root> positive_roots_;
    Root highest_root_;
    IntVector marks_;
    IntVector comarks_;
    Integer dual_coxeter_ = 0;
    Weight rho_;
    IntMatrix lattice_m_;
    RationalMatrix inverse_lattice_m_;
    RationalMatrix lattice_mstar_;
    RationalMatrix lattice_mstar_weights_;
    IntMatrix lattice_m_gram_;
};

inline void RootSystem::build() {
    const std::size_t n = rank();
    if (n == 0 || cartan_.cols() != n) throw ConfigurationError("Cartan matrix must be square and nonempty");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j && cartan_(i, j) != 2) throw ConfigurationError("Cartan diagonal must be 2");
            if (i != j && cartan_(i, j) > 0) throw ConfigurationError("Cartan off-diagonal must be <= 0");
            if ((cartan_(i, j) == 0) != (cartan_(j, i) == 0)) throw ConfigurationError("Cartan zero pattern not symmetric");
        }
    if (determinant(cartan_) <= 0) throw ConfigurationError("Cartan matrix must have positive determinant");
    inverse_cartan_ = inverse(to_rational(cartan_));

    // symmetrizers by propagation along the Dynkin diagram, d_i C_ij = d_j C_ji
    symmetrizers_.assign(n, Rational(0));
    symmetrizers_[0] = 1;
    std::vector<std::size_t> stack{0};
    while (!stack.empty()) {
        std::size_t i = stack.back();
        stack.pop_back();
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i || cartan_(i, j) == 0 || symmetrizers_[j] != 0) continue;
            symmetrizers_[j] = symmetrizers_[i] * Rational(cartan_(i, j), cartan_(j, i));
            stack.push_back(j);
        }
    }
    if (std::any_of(symmetrizers_.begin(), symmetrizers_.end(), [](const Rational& d) { return d == 0; }))
        throw ConfigurationError("Dynkin diagram is not connected");
    Rational dmax = *std::max_element(symmetrizers_.begin(), symmetrizers_.end());
    for (auto& d : symmetrizers_) d /= dmax;

    gram_weights_ = RationalMatrix(n, n);
    gram_coroots_ = RationalMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            gram_weights_(i, j) = inverse_cartan_(j, i) * symmetrizers_[j];
            gram_coroots_(i, j) = Rational(cartan_(i, j)) / symmetrizers_[j];
        }
    inverse_gram_coroots_ = inverse(gram_coroots_);

    // all roots by reflection closure of the simple roots (simple-root coordinates)
    auto reflect_root = [&](const IntVector& beta, std::size_t i) {
        Integer pairing = 0;
        for (std::size_t j = 0; j < n; ++j) pairing += cartan_(i, j) * beta[j];
        IntVector out = beta;
        out[i] -= pairing;
        return out;
    };
    std::set<IntVector> roots;
    std::vector<IntVector> queue;
    for (std::size_t i = 0; i < n; ++i) {
        IntVector e(n, 0);
        e[i] = 1;
        roots.insert(e);
        queue.push_back(e);
    }
    while (!queue.empty()) {
        IntVector beta = queue.back();
        queue.pop_back();
        for (std::size_t i = 0; i < n; ++i) {
            IntVector r = reflect_root(beta, i);
            if (roots.insert(r).second) queue.push_back(r);
        }
    }
    for (const auto& r : roots) {
        bool positive = std::all_of(r.begin(), r.end(), [](Integer c) { return c >= 0; });
        bool negative = std::all_of(r.begin(), r.end(), [](Integer c) { return c <= 0; });
        if (!positive && !negative) throw ConfigurationError("root neither positive nor negative");
        if (positive) positive_roots_.push_back(Root{from_root_coords(r), r});
    }
    std::stable_sort(positive_roots_.begin(), positive_roots_.end(), [](const Root& a, const Root& b) {
        if (a.height() != b.height()) return a.height() < b.height();
        return a.simple < b.simple;
    });

    highest_root_ = positive_roots_.back();
    for (const auto& r : positive_roots_)
        for (std::size_t i = 0; i < n; ++i)
            if (r.simple[i] > highest_root_.simple[i]) throw ConfigurationError("no unique highest root");
    marks_ = highest_root_.simple;

    if (inner(highest_root_.weight, highest_root_.weight) != Rational(2))
        throw ConfigurationError("normalization (theta|theta)=2 failed");

    // theta^vee = theta under nu since (theta|theta)=2; comark_i = <Lambda_i, theta^vee> = (Lambda_i|theta)
    comarks_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        Rational a = inner(fundamental_weight(i), highest_root_.weight);
        if (!is_integer(a)) throw ConfigurationError("non-integral comark");
        comarks_[i] = a.numerator();
    }
    dual_coxeter_ = 1;
    for (Integer a : comarks_) dual_coxeter_ += a;
    rho_ = Weight(RationalVector(n, Rational(1)));

    // M: span of the W-orbit of theta^vee acting on coroot coordinates
    auto reflect_coroot = [&](const IntVector& h, std::size_t i) {
        Integer pairing = 0;  // <alpha_i, h>
        for (std::size_t j = 0; j < n; ++j) pairing += cartan_(j, i) * h[j];
        IntVector out = h;
        out[i] -= pairing;
        return out;
    };
    std::set<IntVector> orbit{comarks_};
    queue = {comarks_};
    while (!queue.empty()) {
        IntVector h = queue.back();
        queue.pop_back();
        for (std::size_t i = 0; i < n; ++i) {
            IntVector r = reflect_coroot(h, i);
            if (orbit.insert(r).second) queue.push_back(r);
        }
    }
    auto basis = hermite_basis(std::vector<IntVector>(orbit.begin(), orbit.end()), n);
    if (basis.size() != n) throw ConfigurationError("orbit of theta^vee does not span t");
    lattice_m_ = IntMatrix::from_columns(basis, n);
    inverse_lattice_m_ = inverse(to_rational(lattice_m_));

    RationalMatrix gm = to_rational(lattice_m_).transpose() * gram_coroots_ * to_rational(lattice_m_);
    lattice_m_gram_ = to_integer(gm);
    lattice_mstar_ = to_rational(lattice_m_) * inverse(gm);
    lattice_mstar_weights_ = gram_coroots_ * lattice_mstar_;
}

inline RootSystem build_root_system(char series, int rank) {
    CartanType t{static_cast<char>(std::toupper(static_cast<unsigned char>(series))), rank};
    return RootSystem(t, cartan_matrix(t));
}

inline RootSystem build_root_system(const std::string& name) {
    CartanType t = parse_cartan_type(name);
    return RootSystem(t, cartan_matrix(t));
}

/// |M* / (k + h^vee) M| from the Smith normal form of (k+h^vee) G_M.
inline Integer lattice_index(const RootSystem& rs, Integer k) {
    if (k < 0) throw DomainError("level must be nonnegative");
    IntMatrix scaled = rs.lattice_m_gram();
    const Integer s = k + rs.dual_coxeter();
    for (std::size_t i = 0; i < scaled.rows(); ++i)
        for (std::size_t j = 0; j < scaled.cols(); ++j) scaled(i, j) *= s;
    Integer index = 1;
    for (Integer d : smith_normal_form(scaled).divisors) index *= d;
    return index;
}

}  // namespace alcove
