#include "mirrorseries/picard_fuchs.hpp"

#include "mirrorseries/errors.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace mirrorseries {

LogSeries apply_operator(const LogSeries& s) {
    // theta(3theta+1)(3theta+2) = 9 theta^3 + 9 theta^2 + 2 theta.
    const LogSeries t1 = theta_log(s);
    const LogSeries t2 = theta_log(t1);
    const LogSeries t3 = theta_log(t2);
    const LogSeries inner = Rational(9) * t3 + Rational(9) * t2 + Rational(2) * t1;
    return t3 - Rational(3) * shift_up(inner);
}

FrobeniusBasis solve_basis(int order) {
    if (order < 1)
        throw std::invalid_argument(
            "solve_basis: order must be >= 1 (the mirror map needs the linear term)");
    const int N = order;
    const auto idx = [](int n) { return static_cast<std::size_t>(n); };

    // Holomorphic part of I2 from the recurrence
    //   n^3 f_n = 3(n-1)(3n-2)(3n-1) f_{n-1} + 6 [n=1].
    std::vector<Rational> f(idx(N) + 1);
    for (int n = 1; n <= N; ++n) {
        Rational rhs = Rational(3L * (n - 1) * (3 * n - 2) * (3 * n - 1)) * f[idx(n - 1)];
        if (n == 1)
            rhs += Rational(6);
        f[idx(n)] = rhs / Rational(static_cast<long>(n) * n * n);
    }
    PowerSeries fs(N, std::move(f));

    // The operator maps z^k to alpha_k z^k + beta_{k+1} z^{k+1}; read both
    // coefficient sequences off the operator itself rather than deriving a
    // second recurrence by hand.
    std::vector<Rational> alpha(idx(N) + 1), beta(idx(N) + 1);
    for (int k = 0; k <= N; ++k) {
        const LogSeries image = apply_operator(LogSeries(PowerSeries::monomial(N, k)));
        alpha[idx(k)] = image.p0()[k];
        if (k + 1 <= N)
            beta[idx(k + 1)] = image.p0()[k + 1];
    }

    // Holomorphic part of I3: the log-free slot of L(g) must cancel the
    // inhomogeneity L(lambda^2/2 + f lambda) order by order. The log slots
    // of the inhomogeneity vanish exactly when f solves its own equation.
    const PowerSeries zero(N);
    const PowerSeries half = PowerSeries::constant(N, Rational(1, 2));
    const LogSeries inhom = apply_operator(LogSeries(zero, fs, half));
    if (!inhom.p1().is_zero() || !inhom.p2().is_zero())
        throw ConsistencyFailure(
            "solve_basis: log parts of the I3 elimination did not vanish");
    std::vector<Rational> g(idx(N) + 1);
    for (int n = 1; n <= N; ++n)
        g[idx(n)] = -(inhom.p0()[n] + beta[idx(n)] * g[idx(n - 1)]) / alpha[idx(n)];
    PowerSeries gs(N, std::move(g));

    const PowerSeries one = PowerSeries::constant(N, Rational(1));
    FrobeniusBasis basis{LogSeries(one),
                         LogSeries(fs, one, zero),
                         LogSeries(std::move(gs), fs, half),
                         N};

    // Independent route: the operator must annihilate every basis element
    // through the full order, at every log degree.
    for (const LogSeries* s : {&basis.i1, &basis.i2, &basis.i3})
        if (!apply_operator(*s).is_zero())
            throw ConsistencyFailure(
                "solve_basis: operator does not annihilate the computed basis");
    return basis;
}

PowerSeries yukawa(const FrobeniusBasis& basis) {
    if (basis.order < 2)
        throw std::invalid_argument("yukawa: basis order must be >= 2");
    const LogSeries tI2 = theta_log(basis.i2);
    const LogSeries tI3 = theta_log(basis.i3);
    // theta I2 must be log-free and theta I3 must equal W + (theta I2) L;
    // only then is dI3/dI2 = L + W with a log-free W, and every further
    // step stays inside plain power series.
    if (!tI2.p1().is_zero() || !tI2.p2().is_zero() || !tI3.p2().is_zero() ||
        tI3.p1() != tI2.p0())
        throw LogTermsDidNotCancel("yukawa: log terms do not cancel");

    const PowerSeries& dI2 = tI2.p0(); // 1 + theta f
    const PowerSeries w = div(tI3.p0(), dI2);
    // d^2 I3/dI2^2 = theta(L + W)/theta I2 = (1 + theta W)/(1 + theta f).
    const PowerSeries second =
        div(PowerSeries::constant(basis.order, Rational(1)) + theta(w), dI2);
    return dI2 * dI2 * dI2 * second;
}

} // namespace mirrorseries
