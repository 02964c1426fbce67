#ifndef MIRRORSERIES_PICARD_FUCHS_HPP
#define MIRRORSERIES_PICARD_FUCHS_HPP

#include "mirrorseries/log_series.hpp"

namespace mirrorseries {

/// Frobenius solutions of theta^3 - 3z theta(3theta+1)(3theta+2) around
/// z = 0, normalized as
///   I1 = 1
///   I2 = log z + f(z),                        f(0) = 0
///   I3 = (log z)^2/2 + f(z) log z + g(z),     g(0) = 0.
/// solve_basis() guarantees the operator annihilates all three through
/// the stored order.
struct FrobeniusBasis {
    LogSeries i1;
    LogSeries i2;
    LogSeries i3;
    int order;

    const PowerSeries& f() const { return i2.p0(); }
    const PowerSeries& g() const { return i3.p0(); }
};

/// Applies theta^3 - 3z theta(3theta+1)(3theta+2).
LogSeries apply_operator(const LogSeries& s);

/// Solves for the normalized basis order by order; order >= 1.
///
/// f comes from the recurrence n^3 f_n = 3(n-1)(3n-2)(3n-1) f_{n-1} + 6[n=1];
/// g comes from generic elimination against the operator itself, and the
/// result is re-verified by apply_operator as an independent route.
FrobeniusBasis solve_basis(int order);

/// Yukawa coupling (theta I2)^3 * d^2 I3 / dI2^2 as a plain power series;
/// basis order must be >= 2. Throws LogTermsDidNotCancel if the log
/// terms fail to cancel structurally.
PowerSeries yukawa(const FrobeniusBasis& basis);

} // namespace mirrorseries

#endif
