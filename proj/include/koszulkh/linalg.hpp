// Exact linear algebra over Z, Q and Z/p: fraction-free rank, Smith normal
// form, and a rational solver.  Matrices are dense with GMP integer entries;
// the blocks of the Koszul differential at desk scale stay small enough that
// sparsity is not worth the bookkeeping.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "koszulkh/series.hpp"

namespace koszulkh {

struct Ring {
    enum class Kind { rational, integer, mod_p };
    Kind kind = Kind::rational;
    long p = 0; // used when kind == mod_p

    static Ring rational();
    static Ring integer();
    static Ring mod_p(long p);
    // "q" -> rationals, "int" -> integers, "zp:<p>" -> Z/p (p prime, checked)
    static Ring parse(const std::string& token);
    std::string name() const;
    bool is_field() const { return kind != Kind::integer; }
    friend bool operator==(const Ring&, const Ring&) = default;
};

struct Mat {
    int rows = 0;
    int cols = 0;
    std::vector<Int> a; // row-major, rows*cols entries

    Mat() = default;
    Mat(int r, int c);

    Int& at(int r, int c);
    const Int& at(int r, int c) const;
    bool is_zero() const;
    Mat transposed() const;
    Mat operator*(const Mat& o) const;
    bool operator==(const Mat& o) const = default;
};

// Rank over Q (fraction-free Bareiss elimination) or over Z/p; the integer
// ring delegates to the rational rank.  Pivot choice: smallest nonzero
// magnitude, lowest row index on ties.
long rank_over(const Mat& m, const Ring& ring);

struct SNFResult {
    std::vector<Int> divisors; // d_1 | d_2 | ... | d_r, all positive
    long rank = 0;             // r = number of divisors
};

// Smith normal form over Z.  Deterministic: pivots are chosen smallest
// magnitude first, lowest (row, col) on ties.
SNFResult smith_normal_form(Mat m);

// Solve A x = b over Q.  Returns nullopt when inconsistent.
std::optional<std::vector<Rat>> solve_rational(const Mat& A, const std::vector<Rat>& b);

// Solve A x = b over Z/p with b already reduced to 0..p-1.
std::optional<std::vector<long>> solve_mod_p(const Mat& A, const std::vector<long>& b, long p);

// Sparse triplet text: '#'-prefixed header lines (caller supplies them),
// then "rows cols nnz", then one "row col value" line per nonzero entry in
// row-major order.  Over Z/p entries are reduced to 0..p-1 first.
std::string to_triplet_text(const Mat& m, const std::vector<std::string>& header_lines,
                            const Ring& ring);

// FNV-1a 64-bit hash of a string, used to fingerprint basis orderings in
// exported matrix headers.
std::uint64_t fnv1a64(const std::string& s);

} // namespace koszulkh
