#include "koszulkh/homology.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace koszulkh {

namespace {

nlohmann::json divisors_to_json(const std::vector<Int>& divs) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& d : divs) {
        if (d.fits_slong_p())
            arr.push_back(d.get_si());
        else
            arr.push_back(d.get_str());
    }
    return arr;
}

} // namespace

HomologyTable homology_table(const GeneratorSpec& spec, const DifferentialSpec& diff,
                             const Ring& ring, int q_max) {
    if (diff.kind == DiffKind::lee)
        throw std::invalid_argument(
            "homology_table: the Lee perturbation is not bigraded, no table for it");
    if (q_max < 0) throw std::invalid_argument("homology_table: negative q_max");
    HomologyTable table{spec, diff, ring, q_max, {}};
    const bool integral = ring.kind == Ring::Kind::integer;
    // every generator has even q, so odd columns are empty
    for (int q = 0; q <= q_max; q += 2) {
        // ranks[t] = rank of the block leaving (q, t); dims[t] = dim C(q, t)
        std::vector<long> dims(q + 3, 0), ranks(q + 3, 0);
        std::vector<std::vector<Int>> snf_divs(q + 3);
        for (int t = 0; t <= q + 1; ++t) {
            DiffBlock blk = differential_block(spec, diff, Bidegree{q, t});
            dims[t] = static_cast<long>(blk.src_basis.size());
            if (dims[t] == 0) continue;
            if (integral) {
                SNFResult snf = smith_normal_form(blk.mat);
                ranks[t] = snf.rank;
                snf_divs[t] = std::move(snf.divisors);
            } else {
                ranks[t] = rank_over(blk.mat, ring);
            }
        }
        for (int t = 0; t <= q; ++t) {
            HomologyEntry entry;
            entry.betti = dims[t] - ranks[t] - ranks[t + 1];
            if (integral)
                for (const auto& d : snf_divs[t + 1])
                    if (d > 1) entry.torsion.push_back(d);
            if (entry.betti != 0 || !entry.torsion.empty())
                table.entries.emplace(Bidegree{q, t}, std::move(entry));
        }
    }
    return table;
}

std::vector<Int> torsion_at(const GeneratorSpec& spec, const DifferentialSpec& diff,
                            Bidegree deg) {
    if (diff.kind == DiffKind::lee)
        throw std::invalid_argument("torsion_at: the Lee perturbation is not bigraded");
    DiffBlock blk = differential_block(spec, diff, Bidegree{deg.q, deg.t + 1});
    std::vector<Int> out;
    if (blk.src_basis.empty() || blk.dst_basis.empty()) return out;
    for (const auto& d : smith_normal_form(blk.mat).divisors)
        if (d > 1) out.push_back(d);
    return out;
}

long euler_column(const HomologyTable& table, int q) {
    if (q > table.q_max) throw std::invalid_argument("euler_column: q beyond table range");
    long sum = 0;
    for (const auto& [deg, entry] : table.entries)
        if (deg.q == q) sum += (deg.t % 2 == 0 ? entry.betti : -entry.betti);
    return sum;
}

long chain_euler_column(const GeneratorSpec& spec, int q) {
    long sum = 0;
    for (int t = 0; t <= q; ++t) {
        long dim = static_cast<long>(basis(spec, Bidegree{q, t}).size());
        sum += (t % 2 == 0 ? dim : -dim);
    }
    return sum;
}

MultiSeries betti_series(const HomologyTable& table) {
    MultiSeries s = MultiSeries::zero(table.q_max);
    for (const auto& [deg, entry] : table.entries)
        if (entry.betti != 0) s.add_term(deg.q, deg.t, 0, Int(entry.betti));
    return s;
}

std::string table_to_json(const HomologyTable& table) {
    nlohmann::json j;
    j["n"] = table.spec.n;
    j["reduced"] = table.spec.reduced;
    j["ring"] = table.ring.name();
    j["diff"] = table.diff.name();
    j["q_max"] = table.q_max;
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [deg, entry] : table.entries) { // map order is (q, t) order
        nlohmann::json e;
        e["q"] = deg.q;
        e["t"] = deg.t;
        e["betti"] = entry.betti;
        e["torsion"] = divisors_to_json(entry.torsion);
        entries.push_back(std::move(e));
    }
    j["entries"] = std::move(entries);
    return j.dump(2);
}

void print_table(std::ostream& os, const HomologyTable& table) {
    int t_max = 0;
    for (const auto& [deg, entry] : table.entries) t_max = std::max(t_max, deg.t);
    os << "homology of n=" << table.spec.n << (table.spec.reduced ? " reduced" : "")
       << " diff=" << table.diff.name() << " ring=" << table.ring.name()
       << " up to q=" << table.q_max << "\n";
    std::vector<std::string> cells;
    std::size_t width = std::to_string(t_max).size() + 1; // column labels "t0".."tN"
    for (int q = 0; q <= table.q_max; q += 2)
        for (int t = 0; t <= t_max; ++t) {
            auto it = table.entries.find(Bidegree{q, t});
            std::string cell = ".";
            if (it != table.entries.end()) {
                cell = std::to_string(it->second.betti);
                if (!it->second.torsion.empty()) {
                    cell += "+T";
                    for (std::size_t i = 0; i < it->second.torsion.size(); ++i) {
                        if (i) cell += ",";
                        cell += it->second.torsion[i].get_str();
                    }
                }
            }
            width = std::max(width, cell.size());
            cells.push_back(std::move(cell));
        }
    const int cols = t_max + 1;
    os << std::setw(6) << " ";
    for (int t = 0; t <= t_max; ++t) os << " " << std::setw(static_cast<int>(width)) << ("t" + std::to_string(t));
    os << "\n";
    int row = 0;
    for (int q = 0; q <= table.q_max; q += 2, ++row) {
        os << std::setw(6) << ("q" + std::to_string(q));
        for (int t = 0; t <= t_max; ++t)
            os << " " << std::setw(static_cast<int>(width)) << cells[row * cols + t];
        os << "\n";
    }
}

} // namespace koszulkh
