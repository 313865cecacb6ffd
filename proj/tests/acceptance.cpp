// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit when any
// criterion fails.  --slow enables the deep identity windows, the p=7 torsion
// case and the torus-knot fixture comparison.
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "koszulkh/dga.hpp"
#include "koszulkh/formulas.hpp"
#include "koszulkh/homology.hpp"
#include "koszulkh/linalg.hpp"
#include "koszulkh/series.hpp"
#include "koszulkh/verifier.hpp"

using namespace koszulkh;

namespace {

const DifferentialSpec kStd{DiffKind::standard, 0};

struct Gate {
    int failed = 0;

    void run(const std::string& name, const std::function<bool()>& body) {
        auto t0 = std::chrono::steady_clock::now();
        bool ok = false;
        std::string note;
        try {
            ok = body();
        } catch (const std::exception& e) {
            ok = false;
            note = std::string("  [exception: ") + e.what() + "]";
        }
        auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.1fs", secs);
        std::cout << (ok ? "PASS " : "FAIL ") << name << " (" << buf << ")" << note << std::endl;
        if (!ok) ++failed;
    }

    void skip(const std::string& name) {
        std::cout << "SKIP " << name << " (enable with --slow)" << std::endl;
    }
};

bool sum_is_zero(const Mat& a, const Mat& b) {
    if (a.rows != b.rows || a.cols != b.cols) return false;
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j)
            if (a.at(i, j) + b.at(i, j) != 0) return false;
    return true;
}

// d^2 = 0 and d1 d + d d1 = 0 as exact matrix identities, plus the degree
// bookkeeping q - t = 2*xdeg + 3*#xi on every basis monomial.
bool chain_axioms(int n_max, int q_max) {
    const DifferentialSpec lee{DiffKind::lee, 0};
    for (int n = 1; n <= n_max; ++n) {
        GeneratorSpec spec{n, false};
        for (DifferentialSpec d : {kStd, DifferentialSpec{DiffKind::generic, 42}}) {
            for (int q = 0; q <= q_max; q += 2) {
                for (int t = 0; t <= q + 1; ++t) {
                    for (const auto& m : basis(spec, {q, t}))
                        if (q - t != 2 * m.xdeg() + 3 * m.xi_count()) return false;
                    auto b1 = differential_block(spec, d, {q, t});
                    auto b0 = differential_block(spec, d, {q, t - 1});
                    if (!(b0.mat * b1.mat).is_zero()) return false;
                    auto l_src = differential_block(spec, lee, {q, t});
                    auto l_mid = differential_block(spec, lee, {q, t - 1});
                    auto d_mid = differential_block(spec, d, {q - 2, t - 1});
                    if (!sum_is_zero(d_mid.mat * l_src.mat, l_mid.mat * b1.mat)) return false;
                }
            }
        }
    }
    return true;
}

bool all_pass(const std::vector<CheckReport>& reports) {
    if (reports.empty()) return false;
    for (const auto& r : reports)
        if (!r.pass) return false;
    return true;
}

bool torsion_criterion(int p, Bidegree deg) {
    if (!torsion_witness_check(p).pass) return false;
    for (const auto& d : torsion_at({p, false}, kStd, deg))
        if (d % p == 0) return true;
    return false;
}

}  // namespace

int main(int argc, char** argv) {
    bool slow = false;
    for (int i = 1; i < argc; ++i)
        if (std::string(argv[i]) == "--slow") slow = true;

    Gate gate;

    // rational tables at q <= 24, shared across several criteria
    std::map<int, HomologyTable> qtable;
    auto table = [&](int n) -> const HomologyTable& {
        auto it = qtable.find(n);
        if (it == qtable.end())
            it = qtable.emplace(n, homology_table({n, false}, kStd, Ring::rational(), 24)).first;
        return it->second;
    };

    gate.run("c01 chain-axioms n<=6 q<=24 standard+generic", [&] {
        return chain_axioms(6, 24);
    });

    gate.run("c02 rational homology equals closed form, n=2,3 q<=20", [&] {
        for (int n = 2; n <= 3; ++n)
            if (betti_series(table(n)).truncated(20) != bosonic_full(n, 20)) return false;
        return true;
    });

    gate.run("c03 rational homology equals closed form and tables, n=4,5 q<=24", [&] {
        for (int n = 4; n <= 5; ++n) {
            auto computed = betti_series(table(n));
            if (computed != bosonic_full(n, 24)) return false;
            if (computed != appendix_series(n, false, 24)) return false;
        }
        return true;
    });

    gate.run("c04 mod-2 homology equals closed form, n=2..5 q<=24", [&] {
        for (int n = 2; n <= 5; ++n) {
            auto t = homology_table({n, false}, kStd, Ring::mod_p(2), 24);
            if (betti_series(t) != z2_closed_form(n, 24)) return false;
        }
        return true;
    });

    gate.run(slow ? "c05 integral torsion: 5 at n=5 (16,10), 7 at n=7 (20,14)"
                  : "c05 integral torsion: 5 at n=5 (16,10)",
             [&] {
                 if (!torsion_criterion(5, {16, 10})) return false;
                 if (slow && !torsion_criterion(7, {20, 14})) return false;
                 return true;
             });

    gate.run("c06 generic coefficients kill the convolution class, n=7 seed 42", [&] {
        return generic_contrast_check().pass;
    });

    gate.run("c07 mu cycles and relation boundaries, n<=8", [&] {
        return all_pass(run_suite("mu", 0, 0, slow)) &&
               all_pass(run_suite("relations", 0, 0, slow));
    });

    gate.run("c08 filtration differential identities, n<=8", [&] {
        return all_pass(run_suite("lee", 0, 0, slow));
    });

    int qc = slow ? 100 : 60;
    gate.run("c09 series identities to q<=" + std::to_string(qc), [&] {
        if (rr_side(RogersSide::left, qc) != rr_side(RogersSide::right, qc)) return false;
        if (krr_side(RogersSide::left, qc) != krr_side(RogersSide::right, qc)) return false;
        auto ev = fermionic_limit(40).eval_t_minus1();
        MultiSeries geom(40);
        for (int k = 0; 2 * k <= 40; ++k) geom.add_term(2 * k, 0, 0, Int(1));
        return ev == geom;
    });

    gate.run("c10 state sum = recursion = presentation, n<=12; stable match q<=24", [&] {
        for (int n = 0; n <= 12; ++n) {
            auto direct = state_sum(n, 100);
            if (direct != fermionic_recursive(n, 100)) return false;
            if (direct != presentation_hilbert(n, 100)) return false;
        }
        return fermionic_recursive(12, 24) == bosonic_full(12, 24);
    });

    gate.run("c11 reduced homology and substitution invariance", [&] {
        for (int n = 3; n <= 5; ++n) {
            auto t = homology_table({n, true}, kStd, Ring::rational(), 24);
            auto computed = betti_series(t);
            if (computed != bosonic_reduced(n, 24)) return false;
            if (computed != appendix_series(n, true, 24)) return false;
        }
        for (int n = 3; n <= 7; ++n)
            if (!reduction_check(n, 16).pass) return false;
        return true;
    });

    gate.run("c12 lower filtration quotient dimensions, n<=6 q<=24", [&] {
        for (int n = 1; n <= 6; ++n)
            if (lower_quotient_series(n, 24) != bosonic_lower(n, 24)) return false;
        return true;
    });

    gate.run("c13 potential gradient identity, n<=8", [&] {
        for (int n = 1; n <= 8; ++n)
            if (!potential_identity_check(n).pass) return false;
        return true;
    });

    if (slow) {
        gate.run("c14 torus-knot fixture comparison, n=7 window q<=18 t<=13", [&] {
            auto rat = fixture_series("t79-rational");
            auto z2 = fixture_series("t79-z2");
            if (rat.coeff_sum() != 134 || z2.coeff_sum() != 286) return false;
            Window w{18, 13};
            auto tq = homology_table({7, false}, kStd, Ring::rational(), 18);
            if (!compare_series_check("rational-vs-fixture", betti_series(tq), rat, w).pass)
                return false;
            auto t2 = homology_table({7, false}, kStd, Ring::mod_p(2), 18);
            return compare_series_check("mod2-vs-fixture", betti_series(t2), z2, w).pass;
        });
    } else {
        gate.skip("c14 torus-knot fixture comparison, n=7 window q<=18 t<=13");
    }

    gate.run("c15 euler characteristic telescopes, n<=6 q<=24", [&] {
        // symbolic oracle first: the defining product telescopes
        const int c = 24;
        for (int n = 1; n <= 6; ++n) {
            auto lhs = MultiSeries::one(c);
            for (int k = 0; k < n; ++k) {
                lhs = lhs *
                      (MultiSeries::one(c) - MultiSeries::monomial(Int(1), 2 * k + 4, 0, 0, c));
                lhs = lhs * geometric_inverse(2 * k + 2, 0, 0, +1, c);
            }
            auto rhs = (MultiSeries::one(c) - MultiSeries::monomial(Int(1), 2 * n + 2, 0, 0, c)) *
                       geometric_inverse(2, 0, 0, +1, c);
            if (lhs != rhs) return false;
        }
        // every computed table's columns against the chain-level and closed forms
        for (int n = 1; n <= 6; ++n) {
            for (int q = 0; q <= 24; q += 2) {
                long via_homology = euler_column(table(n), q);
                long via_chain = chain_euler_column({n, false}, q);
                long closed = q <= 2 * n ? 1 : 0;
                if (via_homology != via_chain || via_chain != closed) return false;
            }
        }
        return true;
    });

    std::cout << "acceptance: " << (15 - gate.failed) << "/15 criteria passed"
              << (slow ? "" : " (slow criteria reduced or skipped)") << std::endl;
    return gate.failed == 0 ? 0 : 1;
}
