#ifndef MIRRORSERIES_ENUMERATIVE_HPP
#define MIRRORSERIES_ENUMERATIVE_HPP

#include "mirrorseries/mirror_map.hpp"

#include <string>
#include <vector>

namespace mirrorseries {

// Sequence convention for this module: vectors are degree-indexed, entry
// [d] belongs to degree d, and entry [0] is unused and kept zero.

/// Moebius function: 0 on non-squarefree k, else (-1)^{#prime factors}.
int moebius(long k);

/// Inverts the weighted divisor sum c_d = sum_{k|d} b_{d/k}/k^2:
///   b_d = sum_{k|d} mu(k) c_{d/k}/k^2.
std::vector<Rational> strip_covers(const std::vector<Rational>& c);

/// Forward divisor sum  sum_{k|d} a_{d/k}/k^weight.
std::vector<Rational> cover_sum(const std::vector<Rational>& a, int weight);

struct MExtraction {
    std::vector<Rational> m;     // exact (-1)^d b_d/(3d)^2, degree-indexed
    std::vector<int> violations; // d > 8 where m_d is not a positive integer
};

/// m_d = (-1)^d b_d/(3d)^2. A value that is not a non-negative integer at
/// d <= 8 throws IntegralityFailure (bug, or a counterexample where the
/// counts are proven); beyond d = 8 it is recorded as a finding instead.
MExtraction extract_m(const std::vector<Rational>& b);

/// n_d = (-1)^{d-1} 3d m_d.
std::vector<Rational> derive_n(const std::vector<Rational>& m);

/// K_d = sum_{k|d} n_{d/k}/k^3.
std::vector<Rational> derive_K(const std::vector<Rational>& n);

/// R_d = (3d)^2 sum_{k|d} (-1)^{d-d/k} m_{d/k}/k^4.
std::vector<Rational> derive_R(const std::vector<Rational>& m);

/// One degree of the extracted data. m and n are integral in every
/// consistent run; they stay exact rationals so that a hypothetical
/// high-degree violation is surfaced verbatim instead of masked.
struct InvariantRow {
    int d;
    Rational c; // q-expansion coefficient
    Rational b; // cover-stripped coefficient
    Rational m; // count of degree-d curves through a fixed 3d-torsion point
    Rational n; // local Gromov-Witten invariant
    Rational K; // Chern number sum_{k|d} n_{d/k}/k^3
    Rational R; // conjectural relative-GW virtual degree
};

struct InvariantTable {
    std::vector<InvariantRow> rows;    // rows[i] holds degree i + 1
    std::vector<std::string> findings; // conjecture evidence above d = 8
};

/// strip_covers -> extract_m -> derive_n / derive_K / derive_R, then
/// checks, exactly and for every degree, the defining relations
///   b_d = (-1)^d (3d)^2 m_d,   n_d = (-1)^{d-1} 3d m_d
/// and the cross-identities
///   c_d = -3d K_d,             c_d = (-1)^d R_d.
/// Requires q.has_log_head; propagates IntegralityFailure and throws
/// ConsistencyFailure if any identity breaks.
InvariantTable build_table(const QExpansion& q);

} // namespace mirrorseries

#endif
