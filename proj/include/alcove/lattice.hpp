#pragma once

#include <vector>

#include "alcove/root_system.hpp"

namespace alcove {

/// Coset representatives of M* / (k+h^vee) M, in M*-basis coordinates.
///
/// In the M* basis the sublattice (k+h^vee)M is spanned by the columns of
/// (k+h^vee) G_M. With U K V = diag(d), the classes are U^{-1} c, 0 <= c_i < d_i.
inline std::vector<IntVector> mstar_coset_representatives(const RootSystem& rs, Integer k) {
    const std::size_t n = rs.rank();
    IntMatrix scaled = rs.lattice_m_gram();
    const Integer s = k + rs.dual_coxeter();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) scaled(i, j) *= s;
    SmithForm snf = smith_normal_form(scaled);

    std::vector<IntVector> reps;
    IntVector c(n, 0);
    while (true) {
        reps.push_back(snf.left_inverse * c);
        std::size_t i = n;
        while (i > 0) {
            --i;
            if (++c[i] < snf.divisors[i]) break;
            c[i] = 0;
            if (i == 0) return reps;
        }
        if (n == 0) return reps;
    }
}

/// |M*/M| = det G_M.
inline Integer mstar_over_m(const RootSystem& rs) { return determinant(rs.lattice_m_gram()); }

}  // namespace alcove
