#include "mirrorseries/mirror_map.hpp"

#include "mirrorseries/errors.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace mirrorseries {

MirrorMap build_map(const FrobeniusBasis& basis) {
    if (basis.order < 1)
        throw std::invalid_argument("build_map: basis order must be >= 1");
    const PowerSeries w_of_z = shift_up(exp_series(basis.f())); // z e^{f(z)}
    const PowerSeries z_of_w = revert(w_of_z);
    if (compose(w_of_z, z_of_w) != PowerSeries::monomial(basis.order, 1))
        throw ConsistencyFailure("build_map: reversion round-trip failed");
    return MirrorMap{w_of_z, z_of_w, basis.order};
}

QExpansion q_expand_I3(const FrobeniusBasis& basis, const MirrorMap& map) {
    const int N = std::min(basis.order, map.order);

    // h = g - f^2/2, so that I3 = I2^2/2 + h(z).
    const PowerSeries f = truncate(basis.f(), N);
    const PowerSeries g = truncate(basis.g(), N);
    const PowerSeries h = g - Rational(1, 2) * (f * f);

    // Redundant route through the log algebra; catches sign slips in the
    // lambda bookkeeping.
    const LogSeries via_log = basis.i3 - Rational(1, 2) * (basis.i2 * basis.i2);
    if (!via_log.p1().is_zero() || !via_log.p2().is_zero() ||
        truncate(via_log.p0(), N) != h)
        throw ConsistencyFailure(
            "q_expand_I3: I3 - I2^2/2 disagrees between the closed form and the log algebra");

    const PowerSeries z_of_w = map.order == N ? map.z_of_w : truncate(map.z_of_w, N);
    const PowerSeries in_w = compose(h, z_of_w);
    if (!in_w[0].is_zero())
        throw NonzeroConstantTerm(
            "q_expand_I3: expansion has a nonzero constant term");

    QExpansion out;
    out.has_log_head = true; // I2^2/2 = (log(-q))^2/2 by the definition of q
    out.order = N;
    out.c.resize(static_cast<std::size_t>(N) + 1);
    for (int d = 1; d <= N; ++d) {
        const Rational& a = in_w[d];
        out.c[static_cast<std::size_t>(d)] = (d % 2 == 0) ? a : -a;
    }

    // Alternation is proven data through d = 8; a violation there means an
    // upstream bug. Higher degrees are left to sign_violations().
    for (int d = 1; d <= std::min(N, 8); ++d)
        if (out.c[static_cast<std::size_t>(d)].sign() != (d % 2 == 0 ? 1 : -1))
            throw ConsistencyFailure("q_expand_I3: sign alternation broken at degree " +
                                     std::to_string(d));
    return out;
}

std::vector<int> sign_violations(const QExpansion& q) {
    std::vector<int> out;
    for (int d = 9; d <= q.order; ++d)
        if (q.coeff(d).sign() != (d % 2 == 0 ? 1 : -1))
            out.push_back(d);
    return out;
}

} // namespace mirrorseries
