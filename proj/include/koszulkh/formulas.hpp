// Closed-form generating series for the stable homology of the Koszul
// complexes built in dga.hpp, plus the combinatorial limits they converge to.
//
// All functions return series truncated at the given q-cutoff (inclusive).
// Conventions: z = q^2 t^2 inside Gaussian binomials, and superpolynomial
// series carry the framing variable through the a-exponent slot.

#pragma once

#include "koszulkh/series.hpp"

namespace koszulkh {

// Poincare series of the x-polynomial subalgebra on x_0..x_{n-1} modulo the
// lower ideal of cross products, i.e. the d2-image in weight two and below.
MultiSeries bosonic_lower(int n, int q_cutoff);

// Poincare series of the full unreduced homology over Q for n strands.
MultiSeries bosonic_full(int n, int q_cutoff);

// Reduced variant: generators x_1..x_{n-1}, xi_1..xi_{n-1}.
MultiSeries bosonic_reduced(int n, int q_cutoff);

// Poincare series of the unreduced homology with Z/2 coefficients.
MultiSeries z2_closed_form(int n, int q_cutoff);

// K_n by the three-term recursion K_n = K_{n-1} + q^{2n} t^{2n-2} K_{n-2}
// + q^{2n+4} t^{2n-1} K_{n-3}, with explicit small seeds.
MultiSeries fermionic_recursive(int n, int q_cutoff);

// Stable limit K = lim K_n as a single q-series (n large enough that the
// recursion has converged below the cutoff).
MultiSeries fermionic_limit(int q_cutoff);

// Normalized monomial state sum over admissible binary sequences of length
// n: no 1111 anywhere and no 111 except as a leading block.  Equals the
// fermionic recursion value.
MultiSeries state_sum(int n, int q_cutoff);

// Hilbert series of the quadratic-monomial presentation model on generators
// x_k, mu_j and the leading cube class; equals state_sum by a bijection of
// supports.
MultiSeries presentation_hilbert(int n, int q_cutoff);

enum class RogersSide { left, right };

// The two sides of the Rogers-Ramanujan style identity satisfied by the
// stable series at a = 0.
MultiSeries rr_side(RogersSide side, int q_cutoff);

// The two sides of the refined identity with the framing variable a kept.
MultiSeries krr_side(RogersSide side, int q_cutoff);

// Tabulated Poincare series for small n, entered factor-by-factor from the
// rational normal forms; used to cross-check the generic formulas.
// Supported: unreduced n = 2..7, reduced n = 3..7.
MultiSeries appendix_series(int n, bool reduced, int q_cutoff);

}  // namespace koszulkh
