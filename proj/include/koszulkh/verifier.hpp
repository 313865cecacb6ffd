// Structured checks for the closed-form cycles, relations, preimages, torsion
// witnesses and series identities of the Koszul complex.  Every check returns
// a CheckReport that serializes to one JSON line, so suites can be streamed
// and diffed.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "koszulkh/dga.hpp"
#include "koszulkh/series.hpp"
#include "json.hpp"

namespace koszulkh {

struct CheckReport {
    std::string check;
    nlohmann::json params;
    bool pass = false;
    nlohmann::json witness;
    std::string to_json_line() const; // {"check","params","verdict","witness"}
};

// Coefficient weight used by the degree-one cycles: epsilon(a, b) = 2a - b.
long epsilon(long a, long b);

// The cycle mu_s = sum_{k=0}^{s+1} epsilon(k, s+1-k) x_k xi_{s+1-k},
// bidegree (2s+8, 2s+3).  Defined for 0 <= s <= n-2 on unreduced generators.
Element mu_cycle(const GeneratorSpec& spec, int s);

// Coefficient families of the relation generating functions, all cycles:
//   xx_j        = coef_j[x(z)^2],                   0 <= j <= n-1
//   xmu_j       = coef_j[x(z) mu(z)],               0 <= j <= n-2
//   xddot_mu_j  = coef_j[x''(z) mu(z) - x'(z) mu'(z)], 0 <= j <= n-3
//   mu_mudot_j  = coef_j[mu(z) mu'(z)],             0 <= j <= n-3
// The upper bounds are where every generator referenced by the coefficient
// still exists at strand count n; beyond them the truncated expressions are
// no longer boundaries (x1*mu0 at n=2 spans a nonzero homology class).
enum class RelKind { xx, xmu, xddot_mu, mu_mudot };

RelKind parse_rel_kind(const std::string& token);
std::string rel_kind_name(RelKind kind);
int relation_max_j(const GeneratorSpec& spec, RelKind kind);
Element relation_element(const GeneratorSpec& spec, RelKind kind, int j);

// Closed-form preimage candidates (up to an overall scalar):
//   xx:        xi_j
//   xmu:       sum_{a<b, a+b=j+1} (b-a) xi_a xi_b
//   xddot_mu:  sum_{a<b, a+b=j+3} a b (b-a) xi_a xi_b
//   mu_mudot:  sum_{a+b+c=j+3} b c (c-1) xi_a xi_b xi_c
Element relation_preimage(const GeneratorSpec& spec, RelKind kind, int j);

// Checks relation_element is a cycle and equals d2 of a scalar multiple of
// relation_preimage; the witness records the scalar.
CheckReport relation_boundary_check(const GeneratorSpec& spec, RelKind kind, int j);

// Solve d(u) = e for u; nullopt when e is not a boundary.  Exact rational
// solve, so the integer ring is rejected.
std::optional<Element> is_boundary(const GeneratorSpec& spec, const DifferentialSpec& diff,
                                   const Element& e, const Ring& ring = Ring::rational());

// mu_s is a d2 cycle and not a boundary.
CheckReport mu_cycle_check(const GeneratorSpec& spec, int s);

// Integral witness for p-torsion at n = p: m = sum_{i=1}^{p-1} (3i-p) x_i xi_{p-i}
// has d2(m) = p*v with v a nonzero integral cycle, and the incoming Smith form
// at bidegree (2p+6, 2p) shows a divisor divisible by p.
CheckReport torsion_witness_check(int p);

// d1(mu_s) = ((s+1)/2) d2(xi_{s+1}), the epsilon symmetry sums, and
// d1 d2 + d2 d1 = 0 on a monomial sample (the commutator d1 d2 - d2 d1 is
// reported in the witness, not asserted).
CheckReport lee_identity_check(const GeneratorSpec& spec, int s);

// partial_{x_{n-1-i}} of the cubic potential equals -(1/2) coef_i[x(z)^2].
CheckReport potential_identity_check(int n);

// The index shift x_i -> x_{i-1}, xi_i -> xi_{i-2} intertwines the reduced
// differential at n with the unreduced differential at n-2 on the subalgebra
// that avoids x_{n-1} and xi_1.
CheckReport reduction_check(int n, int q_max);

// Standard vs generic(seed 42) differential at n=7, bidegree (18,13):
// the convolution structure keeps a rank drop (6 vs 7) and a Betti class
// (1 vs 0) that a generic quadratic differential destroys.
CheckReport generic_contrast_check();

// Series window comparison; t_max < 0 disables the t bound.
struct Window {
    int q_max = 0;
    int t_max = -1;
};
CheckReport compare_series_check(const std::string& name, const MultiSeries& lhs,
                                 const MultiSeries& rhs, Window w);

// Bundled reference data (JavaKh torus-knot computations) shipped with the
// repo: load by manifest name, verifying the recorded total dimension.
MultiSeries fixture_series(const std::string& name);
std::string fixture_dir();

// Map a^2 -> q^4 (each a-exponent contributes two q powers).
MultiSeries substitute_a_to_q2(const MultiSeries& s);

// Named suites: mu | relations | lee | potential | torsion:<p> | identities |
// reduction | generic-contrast | all.  n <= 0 and q_max <= 0 pick defaults.
std::vector<CheckReport> run_suite(const std::string& suite, int n, int q_max, bool slow);

} // namespace koszulkh
