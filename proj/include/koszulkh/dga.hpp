// Bigraded Koszul complex on n even generators x_0..x_{n-1} and n odd
// generators xi_0..xi_{n-1}.  Bidegrees: x_k has (q,t) = (2k+2, 2k), xi_i has
// (2i+4, 2i+1).  The quadratic differential sends xi_k to the k-th coefficient
// of x(z)^2, the Lee perturbation sends xi_i to x_i, and the generic variant
// replaces the x(z)^2 coefficients with pseudorandom ones so that the
// homology can be contrasted against the convolution differential.
//
// The reduced variant keeps indices 1..n-1 for both alphabets and sends xi_m
// to sum_{k=1}^{m-1} x_k x_{m-k}.
#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "koszulkh/linalg.hpp"
#include "koszulkh/series.hpp"

namespace koszulkh {

struct Bidegree {
    int q = 0;
    int t = 0;
    friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
};

struct GeneratorSpec {
    int n = 0;
    bool reduced = false;
    // lowest usable generator index: 0 unreduced, 1 reduced
    int min_index() const { return reduced ? 1 : 0; }
};

// A monomial x^a * xi_S with a_k >= 0 and S a subset of {0..n-1} stored as a
// bitmask.  xexp may be shorter than n; missing exponents are zero.
struct Monomial {
    std::vector<int> xexp;
    std::uint32_t ximask = 0;

    friend auto operator<=>(const Monomial&, const Monomial&) = default;

    int xdeg() const;     // total x-exponent
    int xi_count() const; // |S|
    Bidegree degree() const;
    std::string to_string() const; // e.g. "x0^2*xi1", "1" for the unit
};

// Finite Q-linear combination of monomials.  Zero coefficients are never
// stored.  Multiplication applies the Koszul sign rule for the odd part and
// kills overlapping xi sets.
class Element {
  public:
    Element() = default;

    static Element zero();
    static Element unit();
    static Element x_gen(int k);
    static Element xi_gen(int i);
    static Element term(const Monomial& m, const Rat& c);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, Rat>& terms() const { return terms_; }

    void add_term(const Monomial& m, const Rat& c);
    Rat coeff(const Monomial& m) const;

    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    Element operator+(const Element& o) const;
    Element operator-(const Element& o) const;
    Element operator-() const;
    Element operator*(const Element& o) const;
    Element scaled(const Rat& c) const;
    bool operator==(const Element& o) const = default;

    // bidegree if homogeneous and nonzero, nullopt otherwise
    std::optional<Bidegree> degree() const;

    std::string to_string() const; // "2*x1^2*xi0 - x0*x1*xi1"

  private:
    std::map<Monomial, Rat> terms_;
};

enum class DiffKind { standard, generic, lee };

struct DifferentialSpec {
    DiffKind kind = DiffKind::standard;
    std::uint64_t seed = 0;
    static DifferentialSpec parse(const std::string& token); // "standard" | "generic:<seed>" | "lee"
    std::string name() const;
};

// Coefficient table alpha[k][i] for the generic quadratic differential
// d(xi_k) = sum_{i=0}^k alpha[k][i] x_i x_{k-i}.  Drawn from mt19937(seed) in
// the fixed order k = 0..n-1 outer, i = 0..k inner, so the table for n is a
// prefix of the table for any larger n.
std::vector<std::vector<Int>> generic_alpha(int n, std::uint64_t seed);

// Sorted monomial basis of the bidegree-deg piece: ascending total x-degree,
// then lexicographic xexp, then ximask.
std::vector<Monomial> basis(const GeneratorSpec& spec, Bidegree deg);

// The ordering used by basis(); exposed so callers can binary-search a basis.
bool basis_order_less(const Monomial& a, const Monomial& b);

// Image of one monomial or a whole element under the differential.
Element apply_differential(const GeneratorSpec& spec, const DifferentialSpec& d,
                           const Monomial& m);
Element apply_differential(const GeneratorSpec& spec, const DifferentialSpec& d,
                           const Element& e);

// Matrix block of the differential out of bidegree src.  Column j is the
// image of src_basis[j] expanded in dst_basis.  All entries are integers for
// the differentials used here; non-integer images would throw.
struct DiffBlock {
    Bidegree source;
    Bidegree target;
    std::vector<Monomial> src_basis;
    std::vector<Monomial> dst_basis;
    Mat mat;
};
DiffBlock differential_block(const GeneratorSpec& spec, const DifferentialSpec& d,
                             Bidegree src);

// Triplet text export of a block, with a header documenting what it is.
std::string block_to_triplet_text(const GeneratorSpec& spec, const DifferentialSpec& d,
                                  const DiffBlock& blk, const Ring& ring);

// Coefficient of z^j in x(z)^power for power in {2, 3}, as an Element.
Element xpow_coeff(const GeneratorSpec& spec, int power, int j);

// Cubic potential W_n = -(1/6) coef_{n-1}[x(z)^3] on n unreduced generators;
// its x_{n-1-i} partial recovers -(1/2) coef_i[x(z)^2].
Element potential(int n);

// Partial derivative with respect to x_k; element must have no odd part.
Element partial_x(const Element& e, int k);

// Shift generator indices (x_i -> x_{i+x_delta}, xi_i -> xi_{i+xi_delta});
// throws if a shifted index would go negative.  Index order is preserved, so
// no Koszul signs appear.
Element relabel(const Element& e, int x_delta, int xi_delta);

// Dimension of the bidegree-deg piece of the ideal generated by the
// coefficients of x(z)^2 inside the polynomial ring Q[x_0..x_{n-1}]
// (x-only monomials).  The quotient dimension at deg is
// (number of x-monomials of that bidegree) - this value.
long lower_ideal_dim(int n, Bidegree deg, const Ring& ring);

// Hilbert series of Q[x]/(coefficients of x(z)^2) up to the q cutoff.
MultiSeries lower_quotient_series(int n, int q_cutoff);

} // namespace koszulkh
