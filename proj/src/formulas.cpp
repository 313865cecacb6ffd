#include "koszulkh/formulas.hpp"

#include <stdexcept>
#include <vector>

namespace koszulkh {

namespace {

MultiSeries mono(int qe, int te, int c) {
    return MultiSeries::monomial(1, qe, te, 0, c);
}

// 1 + sign * q^qe t^te
MultiSeries fac(int sign, int qe, int te, int c) {
    MultiSeries s = MultiSeries::one(c);
    s.add_term(qe, te, 0, sign);
    return s;
}

// 1 + a^2 q^qe t^te
MultiSeries afac(int qe, int te, int c) {
    MultiSeries s = MultiSeries::one(c);
    s.add_term(qe, te, 2, 1);
    return s;
}

// 1 + z + ... + z^k with z = q^2 t^2 (the [k+1 choose 1] Gaussian binomial).
MultiSeries zrun(int k, int c) {
    MultiSeries s = MultiSeries::zero(c);
    for (int i = 0; i <= k; ++i) s.add_term(2 * i, 2 * i, 0, 1);
    return s;
}

// Generator-degree factor for mu_j, present only when the generator exists.
MultiSeries cap_mu(int j, int n, int c) {
    if (j < 0 || j > n - 2) return MultiSeries::one(c);
    return fac(+1, 2 * j + 8, 2 * j + 3, c);
}

// Generator-degree factor for xi_i in the unreduced algebra.
MultiSeries cap_xi(int i, int c) {
    if (i < 0) return MultiSeries::one(c);
    return fac(+1, 2 * i + 4, 2 * i + 1, c);
}

// Reduced mu-type factor, indices 1..n-3.
MultiSeries cap_red(int k, int n, int c) {
    if (k < 1 || k > n - 3) return MultiSeries::one(c);
    return fac(+1, 2 * k + 12, 2 * k + 7, c);
}

}  // namespace

MultiSeries bosonic_lower(int n, int q_cutoff) {
    if (n < 1) throw std::invalid_argument("bosonic_lower needs n >= 1");
    const int c = q_cutoff;
    MultiSeries pre = MultiSeries::one(c);
    for (int k = 1; k <= n; ++k)
        pre = pre * geometric_inverse(2 * k, 2 * k - 2, 0, +1, c);
    MultiSeries sum = MultiSeries::zero(c);
    for (int p = 0; 3 * p <= n + 1; ++p) {
        MultiSeries outer = MultiSeries::one(c);
        for (int k = 1; k <= p; ++k) outer = outer * fac(-1, 2 * k, 2 * k - 2, c);
        MultiSeries bracket =
            mono(5 * p * p + p, 5 * p * p - 3 * p, c) * z_binomial(n - 2 * p + 1, p, c) -
            mono((p + 1) * (5 * p + 4), 5 * p * p + 5 * p, c) * z_binomial(n - 2 * p - 1, p, c);
        if (p % 2 == 1) bracket = -bracket;
        sum += outer * bracket;
    }
    return pre * sum;
}

MultiSeries bosonic_full(int n, int q_cutoff) {
    if (n < 1) throw std::invalid_argument("bosonic_full needs n >= 1");
    const int c = q_cutoff;
    MultiSeries pre = MultiSeries::one(c);
    for (int k = 1; k <= n; ++k)
        pre = pre * geometric_inverse(2 * k, 2 * k - 2, 0, +1, c);
    MultiSeries sum = MultiSeries::zero(c);
    for (int p = 0; 3 * p <= n + 1; ++p) {
        MultiSeries outer = MultiSeries::one(c);
        for (int k = 1; k <= p; ++k) outer = outer * fac(-1, 2 * k, 2 * k - 2, c);
        for (int k = 1; k <= 2 * p - 1; ++k)
            outer = outer * fac(+1, 2 * k + 2, 2 * k - 1, c);
        for (int k = 3 * p + 1; k <= n - 1; ++k)
            outer = outer * fac(+1, 2 * k + 6, 2 * k + 1, c);
        MultiSeries t1 = mono(5 * p * p + p, 5 * p * p - 3 * p, c) *
                         cap_mu(3 * p - 2, n, c) * cap_mu(3 * p - 1, n, c) *
                         z_binomial(n - 2 * p + 1, p, c);
        MultiSeries t2 = MultiSeries::zero(c);
        if (p >= 1)
            t2 = mono(5 * p * p + 7 * p + 2, 5 * p * p + 3 * p - 1, c) *
                 cap_mu(3 * p - 1, n, c) * fac(-1, 2 * p + 2, 2 * p, c) *
                 z_binomial(n - 2 * p, p, c);
        MultiSeries t3 = mono(5 * p * p + 9 * p + 4, 5 * p * p + 5 * p, c) *
                         (p >= 1 ? fac(+1, 2 * p + 2, 2 * p + 1, c) : MultiSeries::one(c)) *
                         cap_xi(2 * p - 1, c) * z_binomial(n - 2 * p - 1, p, c);
        MultiSeries bracket = t1 + t2 - t3;
        if (p % 2 == 1) bracket = -bracket;
        sum += outer * bracket;
    }
    return pre * sum;
}

MultiSeries bosonic_reduced(int n, int q_cutoff) {
    if (n < 2) throw std::invalid_argument("bosonic_reduced needs n >= 2");
    const int c = q_cutoff;
    MultiSeries pre = fac(+1, 6, 3, c);
    for (int k = 1; k <= n - 1; ++k)
        pre = pre * geometric_inverse(2 * k + 2, 2 * k, 0, +1, c);
    MultiSeries sum = MultiSeries::zero(c);
    for (int p = 0; 3 * p <= n - 1; ++p) {
        MultiSeries outer = MultiSeries::one(c);
        for (int k = 1; k <= p; ++k) outer = outer * fac(-1, 2 * k + 2, 2 * k, c);
        for (int k = 1; k <= 2 * p - 1; ++k)
            outer = outer * fac(+1, 2 * k + 6, 2 * k + 3, c);
        for (int k = 3 * p + 1; k <= n - 3; ++k)
            outer = outer * fac(+1, 2 * k + 12, 2 * k + 7, c);
        MultiSeries t1 = mono(5 * p * p + 5 * p, 5 * p * p + p, c) *
                         cap_red(3 * p - 1, n, c) * cap_red(3 * p, n, c) *
                         z_binomial(n - 2 * p - 1, p, c);
        MultiSeries t2 = MultiSeries::zero(c);
        if (p >= 1)
            t2 = mono(5 * p * p + 11 * p + 6, 5 * p * p + 7 * p + 3, c) *
                 cap_red(3 * p, n, c) * fac(-1, 2 * p + 4, 2 * p + 2, c) *
                 z_binomial(n - 2 * p - 2, p, c);
        MultiSeries t3 = mono(5 * p * p + 13 * p + 8, 5 * p * p + 9 * p + 4, c) *
                         (p >= 1 ? fac(+1, 2 * p + 4, 2 * p + 3, c) : MultiSeries::one(c)) *
                         (p >= 1 ? fac(+1, 4 * p + 6, 4 * p + 3, c) : MultiSeries::one(c)) *
                         z_binomial(n - 2 * p - 3, p, c);
        MultiSeries bracket = t1 + t2 - t3;
        if (p % 2 == 1) bracket = -bracket;
        sum += outer * bracket;
    }
    return pre * sum;
}

MultiSeries z2_closed_form(int n, int q_cutoff) {
    if (n < 1) throw std::invalid_argument("z2_closed_form needs n >= 1");
    const int c = q_cutoff;
    MultiSeries out = MultiSeries::one(c);
    for (int i = 0; i < n; ++i) {
        out = out * fac(+1, 2 * i + 4, 2 * i + 1, c);
        out = out * geometric_inverse(2 * i + 2, 2 * i, 0, +1, c);
    }
    for (int i = 0; 2 * i <= n - 1; ++i) {
        out = out * fac(-1, 4 * i + 4, 4 * i, c);
        out = out * geometric_inverse(4 * i + 4, 4 * i + 1, 0, -1, c);
    }
    return out;
}

MultiSeries fermionic_recursive(int n, int q_cutoff) {
    if (n < 0) throw std::invalid_argument("fermionic_recursive needs n >= 0");
    const int c = q_cutoff;
    // Seeds match the state sums for n = 1, 2, 3; the leading triple block
    // makes them irreducible to a shorter recursion.
    std::vector<MultiSeries> k;
    k.push_back(MultiSeries::one(c));  // n = 0: empty sequence
    k.push_back(MultiSeries::poly({{1, 0, 0}, {1, 2, 0}}, c));
    k.push_back(MultiSeries::poly({{1, 0, 0}, {1, 2, 0}, {1, 4, 2}, {1, 8, 3}}, c));
    k.push_back(MultiSeries::poly({{1, 0, 0}, {1, 2, 0}, {1, 4, 2}, {1, 6, 4},
                                   {1, 8, 3}, {1, 8, 4}, {1, 10, 5}, {1, 12, 5}},
                                  c));
    for (int m = 4; m <= n; ++m) {
        MultiSeries next = k[static_cast<std::size_t>(m) - 1];
        next += mono(2 * m, 2 * m - 2, c) * k[static_cast<std::size_t>(m) - 2];
        next += mono(2 * m + 4, 2 * m - 1, c) * k[static_cast<std::size_t>(m) - 3];
        k.push_back(std::move(next));
    }
    return k[static_cast<std::size_t>(n)];
}

MultiSeries fermionic_limit(int q_cutoff) {
    const int c = q_cutoff;
    MultiSeries out = MultiSeries::zero(c);
    for (int p = 0; 2 * p * p <= c; ++p) {
        MultiSeries u = mono(2 * p * p, 2 * p * (p - 1), c);
        for (int j = 1; j <= p; ++j) {
            u = u * fac(+1, 2 * j + 4, 2 * j + 1, c);
            u = u * geometric_inverse(2 * j, 2 * j, 0, +1, c);
        }
        out += fac(+1, 8 * p + 12, 8 * p + 5, c) * u;
    }
    return out;
}

MultiSeries state_sum(int n, int q_cutoff) {
    if (n < 0 || n > 20) throw std::invalid_argument("state_sum needs 0 <= n <= 20");
    const int c = q_cutoff;
    MultiSeries out = MultiSeries::zero(c);
    for (unsigned long s = 0; s < (1ul << n); ++s) {
        int qe = 0, te = 0;
        bool ok = true;
        for (int i = 0; i < n && ok;) {
            if (!((s >> i) & 1ul)) {
                ++i;
                continue;
            }
            int len = 0;
            while (i + len < n && ((s >> (i + len)) & 1ul)) ++len;
            if (len == 1) {
                qe += 2 * i + 2;
                te += 2 * i;
            } else if (len == 2) {
                qe += 2 * i + 8;
                te += 2 * i + 3;
            } else if (len == 3 && i == 0) {
                qe += 12;
                te += 5;
            } else {
                ok = false;  // triple away from the start, or longer run
            }
            i += len;
        }
        if (ok) out.add_term(qe, te, 0, 1);
    }
    return out;
}

MultiSeries presentation_hilbert(int n, int q_cutoff) {
    if (n < 0) throw std::invalid_argument("presentation_hilbert needs n >= 0");
    const int c = q_cutoff;
    // h[k] = Hilbert series of arrangements supported on slots k..n-1, where
    // x_k occupies slot k and mu_j occupies slots j, j+1, and occupied
    // regions of distinct generators must be separated by an empty slot.
    std::vector<MultiSeries> h(static_cast<std::size_t>(n) + 3,
                               MultiSeries::one(c));
    for (int k = n - 1; k >= 0; --k) {
        MultiSeries v = h[static_cast<std::size_t>(k) + 1];
        v += mono(2 * k + 2, 2 * k, c) * h[static_cast<std::size_t>(k) + 2];
        if (k <= n - 2)
            v += mono(2 * k + 8, 2 * k + 3, c) * h[static_cast<std::size_t>(k) + 3];
        h[static_cast<std::size_t>(k)] = std::move(v);
    }
    MultiSeries out = h[0];
    // The one surviving cubic class x_0 mu_1 occupies slots 0..2.
    if (n >= 3) {
        std::size_t next = std::min<std::size_t>(4, static_cast<std::size_t>(n));
        out += mono(12, 5, c) * h[next];
    }
    return out;
}

MultiSeries rr_side(RogersSide side, int q_cutoff) {
    const int c = q_cutoff;
    MultiSeries out = MultiSeries::zero(c);
    if (side == RogersSide::left) {
        for (int p = 0; 2 * p * p <= c; ++p) {
            MultiSeries term = mono(2 * p * p, 2 * p * p - 2 * p, c);
            for (int j = 1; j <= p; ++j)
                term = term * geometric_inverse(2 * j, 2 * j, 0, +1, c);
            out += term;
        }
        return out;
    }
    for (int n = 0; 5 * n * n + n <= c; ++n) {
        MultiSeries term = MultiSeries::one(c);
        for (int k = 1; k <= n; ++k) {
            term = term * fac(-1, 2 * k, 2 * k - 2, c);
            term = term * geometric_inverse(2 * k, 2 * k, 0, +1, c);
        }
        MultiSeries bracket =
            mono(5 * n * n + n, 5 * n * n - 3 * n, c) -
            mono((n + 1) * (5 * n + 4), 5 * n * n + 5 * n, c);
        if (n % 2 == 1) bracket = -bracket;
        out += term * bracket;
    }
    MultiSeries pre = MultiSeries::one(c);
    for (int k = 1; 2 * k <= c; ++k)
        pre = pre * geometric_inverse(2 * k, 2 * k - 2, 0, +1, c);
    return pre * out;
}

MultiSeries krr_side(RogersSide side, int q_cutoff) {
    const int c = q_cutoff;
    MultiSeries out = MultiSeries::zero(c);
    if (side == RogersSide::left) {
        for (int p = 0; 2 * p * p <= c; ++p) {
            MultiSeries term =
                mono(2 * p * p, 2 * p * (p - 1), c) * afac(8 * p + 8, 8 * p + 5, c);
            for (int j = 1; j <= p; ++j) {
                term = term * afac(2 * j, 2 * j + 1, c);
                term = term * geometric_inverse(2 * j, 2 * j, 0, +1, c);
            }
            out += term;
        }
        return out;
    }
    for (int p = 0; 5 * p * p + p <= c; ++p) {
        MultiSeries term = MultiSeries::one(c);
        for (int k = 1; k <= p; ++k) {
            term = term * fac(-1, 2 * k, 2 * k - 2, c);
            term = term * geometric_inverse(2 * k, 2 * k, 0, +1, c);
        }
        for (int k = 3 * p + 1; 2 * k + 2 <= c; ++k)
            term = term * afac(2 * k + 2, 2 * k + 1, c);
        for (int k = 1; k <= 2 * p - 1; ++k)
            term = term * afac(2 * k - 2, 2 * k - 1, c);
        MultiSeries bracket = MultiSeries::zero(c);
        if (p == 0) {
            bracket = fac(-1, 4, 0, c);
        } else {
            bracket += mono(5 * p * p + p, 5 * p * p - 3 * p, c) *
                       afac(6 * p, 6 * p - 1, c) * afac(6 * p + 2, 6 * p + 1, c);
            MultiSeries mid = mono(5 * p * p + 7 * p - 2, 5 * p * p + 3 * p - 1, c) *
                              afac(6 * p + 2, 6 * p + 1, c) * fac(-1, 2 * p + 2, 2 * p, c);
            // The middle term carries an overall a^2.
            MultiSeries a2 = MultiSeries::zero(c);
            a2.add_term(0, 0, 2, 1);
            bracket += a2 * mid;
            bracket -= mono(5 * p * p + 9 * p + 4, 5 * p * p + 5 * p, c) *
                       afac(2 * p - 2, 2 * p + 1, c) * afac(4 * p - 2, 4 * p - 1, c);
        }
        if (p % 2 == 1) bracket = -bracket;
        out += term * bracket;
    }
    MultiSeries pre = MultiSeries::one(c);
    for (int k = 1; 2 * k <= c; ++k)
        pre = pre * geometric_inverse(2 * k, 2 * k - 2, 0, +1, c);
    return pre * out;
}

MultiSeries appendix_series(int n, bool reduced, int q_cutoff) {
    const int c = q_cutoff;
    auto P = [&](int qe, int te) { return fac(+1, qe, te, c); };
    auto M = [&](int qe, int te) { return fac(-1, qe, te, c); };
    auto Z = [&](int k) { return zrun(k, c); };
    auto mo = [&](int qe, int te) { return mono(qe, te, c); };
    // Products of consecutive odd-generator degree factors.
    auto xiprod = [&](int lo, int hi) {
        MultiSeries s = MultiSeries::one(c);
        for (int i = lo; i <= hi; ++i) s = s * P(2 * i + 6, 2 * i + 1);
        return s;
    };
    auto redprod = [&](int lo, int hi) {
        MultiSeries s = MultiSeries::one(c);
        for (int i = lo; i <= hi; ++i) s = s * P(2 * i + 12, 2 * i + 7);
        return s;
    };

    if (!reduced) {
        MultiSeries r = MultiSeries::zero(c);
        switch (n) {
            case 2:
                r = P(8, 3) - mo(4, 0) * P(8, 3) - mo(6, 2) * M(2, 0) * P(4, 1);
                break;
            case 3:
                r = xiprod(1, 2) - mo(4, 0) * xiprod(1, 2) -
                    mo(6, 2) * M(2, 0) * P(4, 1) * Z(1) * P(10, 5) -
                    mo(14, 7) * M(2, 0) * M(4, 2) * P(4, 1);
                break;
            case 4:
                r = xiprod(1, 3) - mo(4, 0) * xiprod(1, 3) -
                    mo(6, 2) * M(2, 0) * P(4, 1) * P(10, 5) * P(12, 7) * Z(2) -
                    mo(14, 7) * M(2, 0) * M(4, 2) * P(4, 1) * P(12, 7) * Z(1) +
                    mo(18, 10) * M(2, 0) * P(4, 1) * P(6, 3) * P(4, 3);
                break;
            case 5:
                r = xiprod(1, 4) - mo(4, 0) * xiprod(1, 4) -
                    mo(6, 2) * M(2, 0) * P(4, 1) * Z(3) * xiprod(2, 4) -
                    mo(14, 7) * M(2, 0) * M(4, 2) * P(4, 1) * P(12, 7) * P(14, 9) * Z(2) +
                    mo(18, 10) * M(2, 0) * P(4, 1) * P(6, 3) * Z(1) * P(14, 9) * P(4, 3) +
                    mo(22, 14) * M(2, 0) * M(4, 2) * P(4, 1) * P(6, 3) * P(8, 5);
                break;
            case 6:
                r = xiprod(1, 5) - mo(4, 0) * xiprod(1, 5) -
                    mo(6, 2) * M(2, 0) * P(4, 1) * Z(4) * xiprod(2, 5) -
                    mo(14, 7) * M(2, 0) * M(4, 2) * P(4, 1) * P(12, 7) * P(14, 9) *
                        P(16, 11) * Z(3) +
                    mo(18, 10) * M(2, 0) * P(4, 1) * P(6, 3) * Z(2) * P(14, 9) *
                        P(16, 11) * P(4, 3) +
                    mo(22, 14) * M(2, 0) * M(4, 2) * P(4, 1) * P(6, 3) * P(8, 5) *
                        P(16, 11) * Z(2) +
                    mo(36, 25) * M(2, 0) * M(4, 2) * M(6, 4) * P(4, 1) * P(6, 3) * P(8, 5);
                break;
            case 7: {
                // The two-variable [4 choose 2] Gaussian binomial in z.
                MultiSeries zb42 = MultiSeries::poly(
                    {{1, 0, 0}, {1, 2, 2}, {2, 4, 4}, {1, 6, 6}, {1, 8, 8}}, c);
                r = xiprod(1, 6) - mo(4, 0) * xiprod(1, 6) -
                    mo(6, 2) * M(2, 0) * P(4, 1) * Z(5) * xiprod(2, 6) -
                    mo(14, 7) * M(2, 0) * M(4, 2) * P(4, 1) * Z(4) * xiprod(3, 6) +
                    mo(18, 10) * M(2, 0) * P(4, 1) * P(6, 3) * P(4, 3) * Z(3) *
                        P(14, 9) * P(16, 11) * P(18, 13) +
                    mo(22, 14) * M(2, 0) * M(4, 2) * P(4, 1) * P(6, 3) * P(8, 5) *
                        P(16, 11) * P(18, 13) * zb42 +
                    mo(36, 25) * M(2, 0) * M(4, 2) * M(6, 4) * P(4, 1) * P(6, 3) *
                        P(8, 5) * P(18, 13) * Z(2) -
                    mo(42, 30) * M(2, 0) * M(4, 2) * P(4, 1) * P(6, 3) * P(8, 5) *
                        P(10, 7) * P(6, 5);
                break;
            }
            default:
                throw std::invalid_argument("appendix_series: unreduced n must be 2..7");
        }
        MultiSeries pre = MultiSeries::one(c);
        for (int i = 1; i <= n; ++i)
            pre = pre * geometric_inverse(2 * i, 2 * i - 2, 0, +1, c);
        return pre * r;
    }

    MultiSeries b = MultiSeries::zero(c);
    switch (n) {
        case 3:
            b = M(8, 4);
            break;
        case 4:
            b = P(14, 9) - mo(8, 4) * P(14, 9) - mo(10, 6) * M(4, 2) * P(8, 5);
            break;
        case 5:
            b = redprod(1, 2) - mo(8, 4) * redprod(1, 2) -
                mo(10, 6) * M(4, 2) * P(8, 5) * Z(1) * P(16, 11) -
                mo(22, 15) * M(4, 2) * M(6, 4) * P(8, 5);
            break;
        case 6:
            b = redprod(1, 3) - mo(8, 4) * redprod(1, 3) -
                mo(10, 6) * M(4, 2) * P(8, 5) * P(16, 11) * P(18, 13) * Z(2) -
                mo(22, 15) * M(4, 2) * M(6, 4) * P(8, 5) * P(18, 13) * Z(1) +
                mo(26, 18) * M(4, 2) * P(8, 5) * P(10, 7) * P(6, 5);
            break;
        case 7:
            b = redprod(1, 4) - mo(8, 4) * redprod(1, 4) -
                mo(10, 6) * M(4, 2) * P(8, 5) * Z(3) * redprod(2, 4) -
                mo(22, 15) * M(4, 2) * M(6, 4) * P(8, 5) * P(18, 13) * P(20, 15) * Z(2) +
                mo(26, 18) * M(4, 2) * P(8, 5) * P(10, 7) * Z(1) * P(20, 15) * P(6, 5) +
                mo(30, 22) * M(4, 2) * M(6, 4) * P(8, 5) * P(10, 7) * P(12, 9);
            break;
        default:
            throw std::invalid_argument("appendix_series: reduced n must be 3..7");
    }
    MultiSeries pre = P(6, 3);
    for (int i = 1; i <= n - 1; ++i)
        pre = pre * geometric_inverse(2 * i + 2, 2 * i, 0, +1, c);
    return pre * b;
}

}  // namespace koszulkh
