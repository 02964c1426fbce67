#ifndef MIRRORSERIES_TEST_SUPPORT_HPP
#define MIRRORSERIES_TEST_SUPPORT_HPP

#include "mirrorseries/power_series.hpp"

#include <random>
#include <vector>

// Shared generators and brute-force oracles. The oracles deliberately use
// the defining sums, not the recurrences the library runs on, so that a
// slip in either route cannot hide.

namespace testsupport {

using mirrorseries::PowerSeries;
using mirrorseries::Rational;

inline Rational random_rational(std::mt19937& rng, long max_num = 20, long max_den = 12) {
    std::uniform_int_distribution<long> num(-max_num, max_num), den(1, max_den);
    return Rational(num(rng), den(rng));
}

inline PowerSeries random_series(std::mt19937& rng, int order) {
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
    for (auto& x : c)
        x = random_rational(rng);
    return PowerSeries(order, std::move(c));
}

// k-th coefficient vector update helper for hand-rolled oracles.
inline PowerSeries with_coeff(const PowerSeries& a, int k, const Rational& value) {
    std::vector<Rational> c = a.coeffs();
    c[static_cast<std::size_t>(k)] = value;
    return PowerSeries(a.order(), std::move(c));
}

// sum_{k=0}^{order} a^k / k!  by explicit powers and factorials.
inline PowerSeries naive_exp(const PowerSeries& a) {
    const int n = a.order();
    PowerSeries acc = PowerSeries::constant(n, Rational(1));
    PowerSeries power = PowerSeries::constant(n, Rational(1));
    Rational factorial(1);
    for (int k = 1; k <= n; ++k) {
        power = power * a;
        factorial *= Rational(k);
        acc = acc + Rational(Rational(1) / factorial) * power;
    }
    return acc;
}

// sum_{k=1}^{order} (-1)^{k+1} (a-1)^k / k.
inline PowerSeries naive_log(const PowerSeries& a) {
    const int n = a.order();
    const PowerSeries u = a - PowerSeries::constant(n, Rational(1));
    PowerSeries acc(n);
    PowerSeries power = PowerSeries::constant(n, Rational(1));
    for (int k = 1; k <= n; ++k) {
        power = power * u;
        const Rational coeff = Rational(k % 2 ? 1 : -1) / Rational(k);
        acc = acc + coeff * power;
    }
    return acc;
}

// sum_k f_k g^k by explicit powers.
inline PowerSeries naive_compose(const PowerSeries& f, const PowerSeries& g) {
    const int n = std::min(f.order(), g.order());
    PowerSeries acc = PowerSeries::constant(n, f[0]);
    PowerSeries power = PowerSeries::constant(n, Rational(1));
    const PowerSeries gn = n == g.order() ? g : truncate(g, n);
    for (int k = 1; k <= n; ++k) {
        power = power * gn;
        acc = acc + f[k] * power;
    }
    return acc;
}

// Order-by-order undetermined coefficients: g_n fixed by requiring
// [z^n] f(g) = [z^n] z, using naive_compose at each step.
inline PowerSeries naive_revert(const PowerSeries& f) {
    const int n = f.order();
    PowerSeries g(n);
    g = with_coeff(g, 1, Rational(1) / f[1]);
    for (int k = 2; k <= n; ++k) {
        const Rational residue = naive_compose(f, g)[k];
        g = with_coeff(g, k, -residue / f[1]);
    }
    return g;
}

// Forward weighted divisor sum, written out independently of the library.
inline std::vector<Rational> naive_cover_sum(const std::vector<Rational>& a, int weight) {
    std::vector<Rational> out(a.size());
    const int n = static_cast<int>(a.size()) - 1;
    for (int d = 1; d <= n; ++d)
        for (int k = 1; k <= d; ++k) {
            if (d % k)
                continue;
            long kw = 1;
            for (int i = 0; i < weight; ++i)
                kw *= k;
            out[static_cast<std::size_t>(d)] +=
                a[static_cast<std::size_t>(d / k)] / Rational(kw);
        }
    return out;
}

} // namespace testsupport

// Reference coefficients for the local P^2 model, degrees 1..8. All exact.
namespace reference {

using mirrorseries::Rational;

// I2^(0), the holomorphic part of the single-log solution.
inline std::vector<Rational> f8() {
    return {Rational(6),            Rational(45),          Rational(560),
            Rational(17325, 2),     Rational(756756, 5),   Rational(2858856),
            Rational(399072960, 7), Rational(4732755885L, 4)};
}

// I3^(0), the holomorphic part of the double-log solution.
inline std::vector<Rational> g8() {
    return {Rational(9),
            Rational(423, 4),
            Rational(1486),
            Rational(389415, 16),
            Rational(21981393, 50),
            Rational(16973929, 2),
            Rational(8421450228L, 49),
            Rational(1616340007953L, 448)};
}

// h = g - f^2/2, the log-free remainder of the double-log solution.
inline std::vector<Rational> h8() {
    return {Rational(9),
            Rational(351, 4),
            Rational(1216),
            Rational(319455, 16),
            Rational(18122643, 50),
            Rational(35161224, 5),
            Rational(7009518168L, 49),
            Rational(1350681750297L, 448)};
}

// q-expansion coefficients c_1..c_8.
inline std::vector<Rational> c8() {
    return {Rational(-9),
            Rational(135, 4),
            Rational(-244),
            Rational(36999, 16),
            Rational(-635634, 25),
            Rational(307095),
            Rational(-193919175L, 49),
            Rational(3422490759L, 64)};
}

// Curve counts m_1..m_8.
inline std::vector<long> m8() {
    return {1, 1, 3, 16, 113, 948, 8974, 92840};
}

// Local Gromov-Witten invariants n_1..n_8.
inline std::vector<long> n8() {
    return {3, -6, 27, -192, 1695, -17064, 188454, -2228160};
}

} // namespace reference

#endif
