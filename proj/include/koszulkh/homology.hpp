// Bidegree-by-bidegree homology of the Koszul complex: Betti numbers over Q
// and Z/p, and integral torsion via Smith normal form of the incoming
// differential (valid because the kernel of an integer matrix is a saturated
// sublattice, so all torsion of the quotient comes from the image).
#pragma once

#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "koszulkh/dga.hpp"
#include "koszulkh/linalg.hpp"
#include "koszulkh/series.hpp"

namespace koszulkh {

struct HomologyEntry {
    long betti = 0;            // free rank (Q-rank for the integer ring)
    std::vector<Int> torsion;  // elementary divisors > 1, integer ring only
};

struct HomologyTable {
    GeneratorSpec spec;
    DifferentialSpec diff;
    Ring ring;
    int q_max = 0;
    std::map<Bidegree, HomologyEntry> entries; // nonzero entries only
};

// Homology in every bidegree with q <= q_max.  The Lee perturbation is not a
// bigraded differential, so only standard/generic are accepted here.
HomologyTable homology_table(const GeneratorSpec& spec, const DifferentialSpec& diff,
                             const Ring& ring, int q_max);

// Elementary divisors > 1 of the incoming differential at deg; the torsion
// subgroup of the integral homology there is the direct sum of Z/d over these.
std::vector<Int> torsion_at(const GeneratorSpec& spec, const DifferentialSpec& diff,
                            Bidegree deg);

// Alternating sum over t of Betti numbers in one q column.
long euler_column(const HomologyTable& table, int q);

// Alternating sum over t of chain-space dimensions in one q column; agrees
// with euler_column and telescopes to (1 - q^{2n+2})/(1 - q^2) across q.
long chain_euler_column(const GeneratorSpec& spec, int q);

// Betti numbers of the table as a two-variable series.
MultiSeries betti_series(const HomologyTable& table);

std::string table_to_json(const HomologyTable& table);

// q-by-t grid of Betti numbers with torsion annotations.
void print_table(std::ostream& os, const HomologyTable& table);

} // namespace koszulkh
