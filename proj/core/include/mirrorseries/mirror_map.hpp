#ifndef MIRRORSERIES_MIRROR_MAP_HPP
#define MIRRORSERIES_MIRROR_MAP_HPP

#include "mirrorseries/picard_fuchs.hpp"

#include <vector>

namespace mirrorseries {

/// The mirror coordinate. All series work happens in w := -q = z e^{f(z)},
/// which has unit slope in z, so no branch-of-log question ever arises;
/// the alternating signs of the actual q-coefficients are applied only at
/// the boundary, when an expansion is read off.
struct MirrorMap {
    PowerSeries w_of_z; // z e^{f(z)}
    PowerSeries z_of_w; // compositional inverse
    int order;
};

/// Coefficients c_1..c_order of the double-log period rewritten in q,
/// plus the flag for the structural (log(-q))^2/2 head term (carried as a
/// flag, never as series data).
struct QExpansion {
    bool has_log_head = false;
    std::vector<Rational> c; // degree-indexed; c[0] is the constant term, always 0
    int order = 0;

    const Rational& coeff(int d) const { return c.at(static_cast<std::size_t>(d)); }
};

/// w_of_z = z exp(f), z_of_w = revert(w_of_z). The reversion round-trip
/// is re-checked exactly; a failure means a reversion bug, not bad data.
MirrorMap build_map(const FrobeniusBasis& basis);

/// Substitutes z = z_of_w(w) into h := g - f^2/2 (so that
/// I3 = I2^2/2 + h(z)) and reads off c_d = (-1)^d [w^d] h(z_of_w).
/// h is recomputed through the log algebra as a redundant route; any
/// mismatch or a nonzero constant term throws.
QExpansion q_expand_I3(const FrobeniusBasis& basis, const MirrorMap& map);

/// Degrees d > 8 where sign(c_d) != (-1)^d. Alternation through d = 8 is
/// enforced inside q_expand_I3; beyond that it is conjecture evidence and
/// merely reported.
std::vector<int> sign_violations(const QExpansion& q);

} // namespace mirrorseries

#endif
