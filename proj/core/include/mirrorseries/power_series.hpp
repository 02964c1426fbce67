#ifndef MIRRORSERIES_POWER_SERIES_HPP
#define MIRRORSERIES_POWER_SERIES_HPP

#include "mirrorseries/rational.hpp"

#include <iosfwd>
#include <vector>

namespace mirrorseries {

/// Dense truncated power series sum_{n=0}^{order} a_n z^n over Rational.
/// Zeros are stored explicitly, so coefficient count is always order + 1.
///
/// Values are immutable once built and every operation returns a fresh
/// series. Binary operations truncate to the shorter operand: a result
/// never carries a coefficient that further terms of an input could have
/// changed.
class PowerSeries {
public:
    /// Zero series of the given truncation order.
    explicit PowerSeries(int order);

    /// Series with the given leading coefficients (a_0 first). Missing
    /// entries up to the order are zero; more entries than the order
    /// admits is an error.
    PowerSeries(int order, std::vector<Rational> coeffs);

    static PowerSeries constant(int order, const Rational& value);

    /// coeff * z^degree, degree <= order.
    static PowerSeries monomial(int order, int degree,
                                const Rational& coeff = Rational(1));

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rational& operator[](int n) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;

    /// Diagnostic rendering, e.g. "1 + 27*z + 729*z^2".
    std::string str(const char* var = "z") const;

    friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

private:
    std::vector<Rational> coeffs_; // size order + 1
};

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
PowerSeries operator-(const PowerSeries& a);

/// Cauchy product, truncated at min(a.order, b.order).
PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
PowerSeries operator*(const Rational& c, const PowerSeries& a);

/// Restriction to a lower truncation order (new_order <= a.order).
PowerSeries truncate(const PowerSeries& a, int new_order);

/// Multiplication by z: coefficients shift up one degree, the top one
/// drops off, the order is unchanged.
PowerSeries shift_up(const PowerSeries& a);

/// True when a and b agree coefficient-for-coefficient for all n <= through.
bool equal_through(const PowerSeries& a, const PowerSeries& b, int through);

/// q with q*b = a through the truncation order. b(0) must be a unit.
PowerSeries div(const PowerSeries& a, const PowerSeries& b);

/// The logarithmic derivative z d/dz: a_n -> n a_n.
PowerSeries theta(const PowerSeries& a);

/// sum a^k / k!, for a with zero constant term. Result has constant term 1.
PowerSeries exp_series(const PowerSeries& a);

/// Inverse of exp_series, for a with constant term 1.
PowerSeries log_series(const PowerSeries& a);

/// f(g(z)) truncated at min(f.order, g.order); g must have g(0) = 0.
PowerSeries compose(const PowerSeries& f, const PowerSeries& g);

/// Compositional inverse: g with f(g(z)) = z through the order.
/// Requires f(0) = 0 and f'(0) != 0.
PowerSeries revert(const PowerSeries& f);

std::ostream& operator<<(std::ostream& os, const PowerSeries& a);

} // namespace mirrorseries

#endif
