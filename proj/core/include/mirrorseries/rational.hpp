#ifndef MIRRORSERIES_RATIONAL_HPP
#define MIRRORSERIES_RATIONAL_HPP

#include <gmpxx.h>

#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace mirrorseries {

using Integer = mpz_class;

/// Exact arbitrary-precision rational. Always canonical: lowest terms,
/// positive denominator. All arithmetic is exact; there is no floating
/// point anywhere in this library.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}
    Rational(const Integer& n) : q_(n) {}
    Rational(Integer num, Integer den) {
        if (sgn(den) == 0)
            throw std::domain_error("Rational: zero denominator");
        q_ = mpq_class(std::move(num), std::move(den));
        q_.canonicalize();
    }
    Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

    Integer num() const { return q_.get_num(); }
    Integer den() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    /// Renders "p/q" in lowest terms, or just "p" when the denominator is 1.
    std::string str() const { return q_.get_str(); }

    /// Parses exactly the formats str() produces (optionally non-canonical,
    /// e.g. "6/4"); throws std::invalid_argument on anything else.
    static Rational parse(std::string_view s);

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.q_ + b.q_));
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.q_ - b.q_));
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.q_ * b.q_));
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero())
            throw std::domain_error("Rational: division by zero");
        return Rational(mpq_class(a.q_ / b.q_));
    }
    Rational operator-() const { return Rational(mpq_class(-q_)); }

    Rational& operator+=(const Rational& b) { q_ += b.q_; return *this; }
    Rational& operator-=(const Rational& b) { q_ -= b.q_; return *this; }
    Rational& operator*=(const Rational& b) { q_ *= b.q_; return *this; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

private:
    explicit Rational(mpq_class q) : q_(std::move(q)) {}
    mpq_class q_;
};

inline Rational Rational::parse(std::string_view s) {
    const auto fail = [&] {
        return std::invalid_argument("Rational::parse: malformed rational '" +
                                     std::string(s) + "'");
    };
    const auto digits = [](std::string_view t, bool allow_sign) {
        if (allow_sign && !t.empty() && t.front() == '-')
            t.remove_prefix(1);
        if (t.empty())
            return false;
        for (char ch : t)
            if (ch < '0' || ch > '9')
                return false;
        return true;
    };
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) {
        if (!digits(s, true))
            throw fail();
        return Rational(Integer(std::string(s)));
    }
    const std::string_view nums = s.substr(0, slash);
    const std::string_view dens = s.substr(slash + 1);
    if (!digits(nums, true) || !digits(dens, false))
        throw fail();
    Integer den{std::string(dens)};
    if (den == 0)
        throw fail();
    return Rational(Integer(std::string(nums)), std::move(den));
}

inline std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

} // namespace mirrorseries

#endif
