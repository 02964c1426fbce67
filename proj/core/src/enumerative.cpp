#include "mirrorseries/enumerative.hpp"

#include "mirrorseries/errors.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace mirrorseries {

namespace {

std::size_t idx(int n) { return static_cast<std::size_t>(n); }

void require_degree_indexed(const std::vector<Rational>& v, const char* who) {
    if (v.empty() || !v[0].is_zero())
        throw std::invalid_argument(std::string(who) +
                                    ": sequence must be degree-indexed with entry 0 zero");
}

Rational int_pow(long base, int exponent) {
    Integer out(1);
    for (int i = 0; i < exponent; ++i)
        out *= base;
    return Rational(out);
}

} // namespace

int moebius(long k) {
    if (k < 1)
        throw std::invalid_argument("moebius: k must be positive");
    int primes = 0;
    for (long p = 2; p * p <= k; ++p) {
        if (k % p)
            continue;
        k /= p;
        if (k % p == 0)
            return 0;
        ++primes;
    }
    if (k > 1)
        ++primes;
    return primes % 2 ? -1 : 1;
}

std::vector<Rational> strip_covers(const std::vector<Rational>& c) {
    require_degree_indexed(c, "strip_covers");
    const int N = static_cast<int>(c.size()) - 1;
    std::vector<Rational> b(c.size());
    for (int d = 1; d <= N; ++d)
        for (int k = 1; k <= d; ++k) {
            if (d % k)
                continue;
            const int mu = moebius(k);
            if (!mu)
                continue;
            b[idx(d)] += Rational(mu) * c[idx(d / k)] / int_pow(k, 2);
        }
    return b;
}

std::vector<Rational> cover_sum(const std::vector<Rational>& a, int weight) {
    require_degree_indexed(a, "cover_sum");
    if (weight < 0)
        throw std::invalid_argument("cover_sum: negative weight");
    const int N = static_cast<int>(a.size()) - 1;
    std::vector<Rational> out(a.size());
    for (int d = 1; d <= N; ++d)
        for (int k = 1; k <= d; ++k) {
            if (d % k)
                continue;
            out[idx(d)] += a[idx(d / k)] / int_pow(k, weight);
        }
    return out;
}

MExtraction extract_m(const std::vector<Rational>& b) {
    require_degree_indexed(b, "extract_m");
    const int N = static_cast<int>(b.size()) - 1;
    MExtraction out;
    out.m.resize(b.size());
    for (int d = 1; d <= N; ++d) {
        Rational m = b[idx(d)] / Rational(9L * d * d);
        if (d % 2)
            m = -m;
        if (d <= 8) {
            if (!m.is_integer() || m.sign() < 0)
                throw IntegralityFailure("extract_m: m_" + std::to_string(d) + " = " +
                                         m.str() + " is not a non-negative integer");
        } else if (!m.is_integer() || m.sign() <= 0) {
            out.violations.push_back(d);
        }
        out.m[idx(d)] = std::move(m);
    }
    return out;
}

std::vector<Rational> derive_n(const std::vector<Rational>& m) {
    require_degree_indexed(m, "derive_n");
    const int N = static_cast<int>(m.size()) - 1;
    std::vector<Rational> n(m.size());
    for (int d = 1; d <= N; ++d) {
        n[idx(d)] = Rational(3L * d) * m[idx(d)];
        if (d % 2 == 0)
            n[idx(d)] = -n[idx(d)];
    }
    return n;
}

std::vector<Rational> derive_K(const std::vector<Rational>& n) {
    return cover_sum(n, 3);
}

std::vector<Rational> derive_R(const std::vector<Rational>& m) {
    require_degree_indexed(m, "derive_R");
    const int N = static_cast<int>(m.size()) - 1;
    std::vector<Rational> R(m.size());
    for (int d = 1; d <= N; ++d) {
        Rational acc;
        for (int k = 1; k <= d; ++k) {
            if (d % k)
                continue;
            const Rational term = m[idx(d / k)] / int_pow(k, 4);
            acc += ((d - d / k) % 2) ? -term : term;
        }
        R[idx(d)] = Rational(9L * d * d) * acc;
    }
    return R;
}

InvariantTable build_table(const QExpansion& q) {
    if (!q.has_log_head)
        throw std::invalid_argument(
            "build_table: expansion lacks the (log(-q))^2/2 head term");
    const std::vector<Rational>& c = q.c;
    const int N = q.order;

    const std::vector<Rational> b = strip_covers(c);
    MExtraction ext = extract_m(b);
    const std::vector<Rational> n = derive_n(ext.m);
    const std::vector<Rational> K = derive_K(n);
    const std::vector<Rational> R = derive_R(ext.m);

    InvariantTable table;
    for (int d : ext.violations)
        table.findings.push_back("m_" + std::to_string(d) + " = " + ext.m[idx(d)].str() +
                                 " is not a positive integer");

    for (int d = 1; d <= N; ++d) {
        const Rational sign(d % 2 ? -1 : 1);
        if (b[idx(d)] != sign * Rational(9L * d * d) * ext.m[idx(d)])
            throw ConsistencyFailure("build_table: b_d != (-1)^d (3d)^2 m_d at d = " +
                                     std::to_string(d));
        if (n[idx(d)] != -sign * Rational(3L * d) * ext.m[idx(d)])
            throw ConsistencyFailure("build_table: n_d != (-1)^{d-1} 3d m_d at d = " +
                                     std::to_string(d));
        if (c[idx(d)] != Rational(-3L * d) * K[idx(d)])
            throw ConsistencyFailure("build_table: c_d != -3d K_d at d = " +
                                     std::to_string(d));
        if (c[idx(d)] != sign * R[idx(d)])
            throw ConsistencyFailure("build_table: c_d != (-1)^d R_d at d = " +
                                     std::to_string(d));
        table.rows.push_back(InvariantRow{d, c[idx(d)], b[idx(d)], ext.m[idx(d)],
                                          n[idx(d)], K[idx(d)], R[idx(d)]});
    }
    return table;
}

} // namespace mirrorseries
