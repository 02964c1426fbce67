#include "mirrorseries/log_series.hpp"

#include "mirrorseries/errors.hpp"

#include <ostream>
#include <stdexcept>
#include <utility>

namespace mirrorseries {

LogSeries::LogSeries(PowerSeries p0)
    : parts_{p0, PowerSeries(p0.order()), PowerSeries(p0.order())} {}

LogSeries::LogSeries(PowerSeries p0, PowerSeries p1, PowerSeries p2)
    : parts_{std::move(p0), std::move(p1), std::move(p2)} {
    if (parts_[0].order() != parts_[1].order() ||
        parts_[0].order() != parts_[2].order())
        throw std::invalid_argument("LogSeries: parts must share one order");
}

LogSeries LogSeries::zero(int order) {
    return LogSeries(PowerSeries(order));
}

int LogSeries::log_degree() const {
    if (!parts_[2].is_zero())
        return 2;
    if (!parts_[1].is_zero())
        return 1;
    return 0;
}

bool LogSeries::is_zero() const {
    return parts_[0].is_zero() && parts_[1].is_zero() && parts_[2].is_zero();
}

std::string LogSeries::str() const {
    std::string out = "(" + parts_[0].str() + ")";
    out += " + (" + parts_[1].str() + ")*L";
    out += " + (" + parts_[2].str() + ")*L^2";
    return out;
}

LogSeries operator+(const LogSeries& a, const LogSeries& b) {
    return LogSeries(a.p0() + b.p0(), a.p1() + b.p1(), a.p2() + b.p2());
}

LogSeries operator-(const LogSeries& a, const LogSeries& b) {
    return LogSeries(a.p0() - b.p0(), a.p1() - b.p1(), a.p2() - b.p2());
}

LogSeries operator-(const LogSeries& a) {
    return LogSeries(-a.p0(), -a.p1(), -a.p2());
}

LogSeries operator*(const LogSeries& a, const LogSeries& b) {
    if (a.log_degree() + b.log_degree() > 2)
        throw LogDegreeOverflow("LogSeries: product would exceed log-degree 2");
    return LogSeries(a.p0() * b.p0(),
                     a.p0() * b.p1() + a.p1() * b.p0(),
                     a.p0() * b.p2() + a.p1() * b.p1() + a.p2() * b.p0());
}

LogSeries operator*(const Rational& c, const LogSeries& a) {
    return LogSeries(c * a.p0(), c * a.p1(), c * a.p2());
}

LogSeries operator*(const PowerSeries& p, const LogSeries& a) {
    return LogSeries(p * a.p0(), p * a.p1(), p * a.p2());
}

LogSeries shift_up(const LogSeries& a) {
    return LogSeries(shift_up(a.p0()), shift_up(a.p1()), shift_up(a.p2()));
}

LogSeries theta_log(const LogSeries& s) {
    return LogSeries(theta(s.p0()) + s.p1(),
                     theta(s.p1()) + Rational(2) * s.p2(),
                     theta(s.p2()));
}

bool equal_through(const LogSeries& a, const LogSeries& b, int through) {
    return equal_through(a.p0(), b.p0(), through) &&
           equal_through(a.p1(), b.p1(), through) &&
           equal_through(a.p2(), b.p2(), through);
}

std::ostream& operator<<(std::ostream& os, const LogSeries& s) {
    return os << s.str();
}

} // namespace mirrorseries
