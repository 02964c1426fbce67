#include "mirrorseries/power_series.hpp"

#include "mirrorseries/errors.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace mirrorseries {

namespace {

std::size_t index(int n) { return static_cast<std::size_t>(n); }

} // namespace

PowerSeries::PowerSeries(int order) {
    if (order < 0)
        throw std::invalid_argument("PowerSeries: negative order");
    coeffs_.resize(index(order) + 1);
}

PowerSeries::PowerSeries(int order, std::vector<Rational> coeffs) {
    if (order < 0)
        throw std::invalid_argument("PowerSeries: negative order");
    if (coeffs.size() > index(order) + 1)
        throw std::invalid_argument(
            "PowerSeries: more coefficients than the order admits");
    coeffs_ = std::move(coeffs);
    coeffs_.resize(index(order) + 1);
}

PowerSeries PowerSeries::constant(int order, const Rational& value) {
    PowerSeries out(order);
    out.coeffs_[0] = value;
    return out;
}

PowerSeries PowerSeries::monomial(int order, int degree, const Rational& coeff) {
    if (degree < 0 || degree > order)
        throw std::invalid_argument("PowerSeries::monomial: degree out of range");
    PowerSeries out(order);
    out.coeffs_[index(degree)] = coeff;
    return out;
}

const Rational& PowerSeries::operator[](int n) const {
    if (n < 0 || n > order())
        throw std::out_of_range("PowerSeries: coefficient index out of range");
    return coeffs_[index(n)];
}

bool PowerSeries::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Rational& r) { return r.is_zero(); });
}

std::string PowerSeries::str(const char* var) const {
    std::string out;
    for (int n = 0; n <= order(); ++n) {
        const Rational& a = coeffs_[index(n)];
        if (a.is_zero())
            continue;
        const Rational mag = a.sign() < 0 ? -a : a;
        if (out.empty())
            out += a.sign() < 0 ? "-" : "";
        else
            out += a.sign() < 0 ? " - " : " + ";
        out += mag.str();
        if (n >= 1) {
            out += "*";
            out += var;
            if (n >= 2)
                out += "^" + std::to_string(n);
        }
    }
    return out.empty() ? "0" : out;
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
    const int n = std::min(a.order(), b.order());
    std::vector<Rational> c(index(n) + 1);
    for (int k = 0; k <= n; ++k)
        c[index(k)] = a[k] + b[k];
    return PowerSeries(n, std::move(c));
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
    const int n = std::min(a.order(), b.order());
    std::vector<Rational> c(index(n) + 1);
    for (int k = 0; k <= n; ++k)
        c[index(k)] = a[k] - b[k];
    return PowerSeries(n, std::move(c));
}

PowerSeries operator-(const PowerSeries& a) {
    std::vector<Rational> c(index(a.order()) + 1);
    for (int k = 0; k <= a.order(); ++k)
        c[index(k)] = -a[k];
    return PowerSeries(a.order(), std::move(c));
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    const int n = std::min(a.order(), b.order());
    std::vector<Rational> c(index(n) + 1);
    for (int i = 0; i <= n; ++i) {
        if (a[i].is_zero())
            continue;
        for (int j = 0; i + j <= n; ++j) {
            if (b[j].is_zero())
                continue;
            c[index(i + j)] += a[i] * b[j];
        }
    }
    return PowerSeries(n, std::move(c));
}

PowerSeries operator*(const Rational& c, const PowerSeries& a) {
    std::vector<Rational> out(index(a.order()) + 1);
    for (int k = 0; k <= a.order(); ++k)
        out[index(k)] = c * a[k];
    return PowerSeries(a.order(), std::move(out));
}

PowerSeries truncate(const PowerSeries& a, int new_order) {
    if (new_order < 0 || new_order > a.order())
        throw std::invalid_argument("truncate: order out of range");
    return PowerSeries(new_order,
                       std::vector<Rational>(a.coeffs().begin(),
                                             a.coeffs().begin() + new_order + 1));
}

PowerSeries shift_up(const PowerSeries& a) {
    std::vector<Rational> c(index(a.order()) + 1);
    for (int k = 1; k <= a.order(); ++k)
        c[index(k)] = a[k - 1];
    return PowerSeries(a.order(), std::move(c));
}

bool equal_through(const PowerSeries& a, const PowerSeries& b, int through) {
    if (through < 0 || through > a.order() || through > b.order())
        throw std::invalid_argument("equal_through: order out of range");
    for (int k = 0; k <= through; ++k)
        if (a[k] != b[k])
            return false;
    return true;
}

PowerSeries div(const PowerSeries& a, const PowerSeries& b) {
    if (b[0].is_zero())
        throw DivisionByNonUnit("div: denominator has zero constant term");
    const int n = std::min(a.order(), b.order());
    std::vector<Rational> q(index(n) + 1);
    for (int k = 0; k <= n; ++k) {
        Rational acc = a[k];
        for (int j = 0; j < k; ++j) {
            if (q[index(j)].is_zero() || b[k - j].is_zero())
                continue;
            acc -= q[index(j)] * b[k - j];
        }
        q[index(k)] = acc / b[0];
    }
    return PowerSeries(n, std::move(q));
}

PowerSeries theta(const PowerSeries& a) {
    std::vector<Rational> c(index(a.order()) + 1);
    for (int k = 1; k <= a.order(); ++k)
        c[index(k)] = Rational(k) * a[k];
    return PowerSeries(a.order(), std::move(c));
}

PowerSeries exp_series(const PowerSeries& a) {
    if (!a[0].is_zero())
        throw NonzeroConstantTerm("exp_series: argument has nonzero constant term");
    const int n = a.order();
    // theta(e) = theta(a) e gives k e_k = sum_{j=1}^{k} j a_j e_{k-j}.
    std::vector<Rational> e(index(n) + 1);
    e[0] = Rational(1);
    for (int k = 1; k <= n; ++k) {
        Rational acc;
        for (int j = 1; j <= k; ++j) {
            if (a[j].is_zero() || e[index(k - j)].is_zero())
                continue;
            acc += Rational(j) * a[j] * e[index(k - j)];
        }
        e[index(k)] = acc / Rational(k);
    }
    return PowerSeries(n, std::move(e));
}

PowerSeries log_series(const PowerSeries& a) {
    if (a[0] != Rational(1))
        throw ConstantTermNotOne("log_series: constant term is not 1");
    // theta(log a) = theta(a)/a, then divide coefficient k by k.
    const PowerSeries t = div(theta(a), a);
    std::vector<Rational> b(index(a.order()) + 1);
    for (int k = 1; k <= a.order(); ++k)
        b[index(k)] = t[k] / Rational(k);
    return PowerSeries(a.order(), std::move(b));
}

PowerSeries compose(const PowerSeries& f, const PowerSeries& g) {
    if (!g[0].is_zero())
        throw NonzeroConstantTerm("compose: inner series has nonzero constant term");
    const int n = std::min(f.order(), g.order());
    const PowerSeries gn = g.order() == n ? g : truncate(g, n);
    // Horner from the top; f_k with k > n cannot reach degree <= n.
    PowerSeries r = PowerSeries::constant(n, f[n]);
    for (int k = n - 1; k >= 0; --k)
        r = r * gn + PowerSeries::constant(n, f[k]);
    return r;
}

PowerSeries revert(const PowerSeries& f) {
    if (f.order() < 1 || !f[0].is_zero() || f[1].is_zero())
        throw NotReversible("revert: need f(0) = 0 and f'(0) != 0");
    const int n = f.order();
    const int m = n - 1;
    // Lagrange inversion: with f = z u(z), g_k = (1/k) [z^{k-1}] u^{-k}.
    std::vector<Rational> shifted(index(m) + 1);
    for (int k = 0; k <= m; ++k)
        shifted[index(k)] = f[k + 1];
    const PowerSeries v =
        div(PowerSeries::constant(m, Rational(1)), PowerSeries(m, std::move(shifted)));
    std::vector<Rational> g(index(n) + 1);
    PowerSeries p = PowerSeries::constant(m, Rational(1));
    for (int k = 1; k <= n; ++k) {
        p = p * v; // p = u^{-k}
        g[index(k)] = p[k - 1] / Rational(k);
    }
    return PowerSeries(n, std::move(g));
}

std::ostream& operator<<(std::ostream& os, const PowerSeries& a) {
    return os << a.str();
}

} // namespace mirrorseries
