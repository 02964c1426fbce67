#ifndef MIRRORSERIES_LOG_SERIES_HPP
#define MIRRORSERIES_LOG_SERIES_HPP

#include "mirrorseries/power_series.hpp"

#include <array>
#include <iosfwd>

namespace mirrorseries {

/// P0 + P1*log z + P2*(log z)^2 with power-series parts that share one
/// truncation order. Log-degree is capped at 2: the Frobenius basis of a
/// third-order operator with maximally unipotent monodromy needs exactly
/// degrees 0, 1, 2, and a product that would exceed the cap throws
/// LogDegreeOverflow.
class LogSeries {
public:
    /// Pure power series (no log terms).
    explicit LogSeries(PowerSeries p0);

    /// Parts must share one order.
    LogSeries(PowerSeries p0, PowerSeries p1, PowerSeries p2);

    static LogSeries zero(int order);

    int order() const { return parts_[0].order(); }
    const PowerSeries& p0() const { return parts_[0]; }
    const PowerSeries& p1() const { return parts_[1]; }
    const PowerSeries& p2() const { return parts_[2]; }
    const PowerSeries& part(int k) const { return parts_.at(static_cast<std::size_t>(k)); }

    /// Largest k with a nonzero part; 0 for the zero element.
    int log_degree() const;

    bool is_zero() const;
    bool is_pure() const { return parts_[1].is_zero() && parts_[2].is_zero(); }

    std::string str() const;

    friend bool operator==(const LogSeries&, const LogSeries&) = default;

private:
    std::array<PowerSeries, 3> parts_;
};

LogSeries operator+(const LogSeries& a, const LogSeries& b);
LogSeries operator-(const LogSeries& a, const LogSeries& b);
LogSeries operator-(const LogSeries& a);

/// Product with the log-degree-2 guard.
LogSeries operator*(const LogSeries& a, const LogSeries& b);
LogSeries operator*(const Rational& c, const LogSeries& a);
LogSeries operator*(const PowerSeries& p, const LogSeries& a);

/// Multiplication by z, part-wise.
LogSeries shift_up(const LogSeries& a);

/// z d/dz extended by theta(log z) = 1:
///   theta(P0 + P1 L + P2 L^2) = (theta P0 + P1) + (theta P1 + 2 P2) L + (theta P2) L^2.
LogSeries theta_log(const LogSeries& s);

bool equal_through(const LogSeries& a, const LogSeries& b, int through);

std::ostream& operator<<(std::ostream& os, const LogSeries& s);

} // namespace mirrorseries

#endif
