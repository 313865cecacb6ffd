// Truncated trivariate power series with exact integer coefficients.
//
// A MultiSeries stores finitely many terms c * q^qe * t^te * a^ae, with c an
// arbitrary-precision integer, qe <= q_cutoff and all exponents >= 0.
// Truncation is by q-exponent only; t and a exponents are never bounded.
// Dropping terms with qe > q_cutoff is the only lossy step, and it is closed
// under + and * because every stored term has qe >= 0.

#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace koszulkh {

using Int = mpz_class;
using Rat = mpq_class;

// Exponent triple.  Ordering is lexicographic on (q, t, a); this is the
// canonical term order used by serialization and iteration.
struct TermKey {
    int q = 0;
    int t = 0;
    int a = 0;
    friend auto operator<=>(const TermKey&, const TermKey&) = default;
};

class MultiSeries {
  public:
    explicit MultiSeries(int q_cutoff);

    static MultiSeries zero(int q_cutoff);
    static MultiSeries one(int q_cutoff);
    static MultiSeries monomial(Int coeff, int qe, int te, int ae, int q_cutoff);
    // Polynomial from (coeff, qe, te) triples, a-exponent zero.
    static MultiSeries poly(const std::vector<std::array<long, 3>>& cqt, int q_cutoff);

    int q_cutoff() const { return q_cutoff_; }
    const std::map<TermKey, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    Int coeff(int qe, int te, int ae = 0) const;

    // Adds c * q^qe t^te a^ae; silently drops terms beyond the cutoff,
    // erases entries that cancel to zero.  Exponents must be >= 0.
    void add_term(int qe, int te, int ae, const Int& c);

    MultiSeries& operator+=(const MultiSeries& o);
    MultiSeries& operator-=(const MultiSeries& o);
    friend MultiSeries operator+(MultiSeries a, const MultiSeries& b) { return a += b; }
    friend MultiSeries operator-(MultiSeries a, const MultiSeries& b) { return a -= b; }
    friend MultiSeries operator*(const MultiSeries& a, const MultiSeries& b);
    MultiSeries operator-() const;
    MultiSeries scaled(const Int& c) const;
    bool operator==(const MultiSeries& o) const = default;

    // Restricts to terms with qe <= new_cutoff (new_cutoff <= q_cutoff()).
    MultiSeries truncated(int new_cutoff) const;

    // Substitutes t = -1.  Requires every term to have a-exponent zero.
    MultiSeries eval_t_minus1() const;

    // Largest q-exponent present (-1 for the zero series).
    int max_q() const;

    // Sum of all coefficients (used for fixture checksums).
    Int coeff_sum() const;

    std::string to_json() const;
    static MultiSeries from_json(const std::string& text);

  private:
    int q_cutoff_;
    std::map<TermKey, Int> terms_;
};

// Series expansion of 1 / (1 - sign * q^qe t^te a^ae) up to the cutoff.
// Requires qe >= 1 so that the geometric expansion terminates; sign is +1
// for 1/(1-m) and -1 for 1/(1+m).
MultiSeries geometric_inverse(int qe, int te, int ae, int sign, int q_cutoff);

// Gaussian binomial [m choose l] in the variable z = q^2 t^2, computed by
// the Pascal recursion binom(m,l) = binom(m-1,l) + z^(m-l) binom(m-1,l-1).
// Zero when l < 0, l > m, or m < 0.
MultiSeries z_binomial(int m, int l, int q_cutoff);

// True when a and b agree on every term with q-exponent <= cutoff.
bool equal_up_to(const MultiSeries& a, const MultiSeries& b, int cutoff);

}  // namespace koszulkh
