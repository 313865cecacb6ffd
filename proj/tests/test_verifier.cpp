#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "koszulkh/verifier.hpp"

using namespace koszulkh;

namespace {

const GeneratorSpec full2{2, false};
const GeneratorSpec full3{3, false};
const GeneratorSpec full4{4, false};
const DifferentialSpec d2{DiffKind::standard, 0};

Element x(int k) { return Element::x_gen(k); }
Element xi(int i) { return Element::xi_gen(i); }

}  // namespace

TEST_CASE("epsilon weights") {
    CHECK(epsilon(0, 1) == -1);
    CHECK(epsilon(1, 0) == 2);
    // arithmetic progression across a fixed diagonal
    long expected[] = {-6, -3, 0, 3, 6, 9, 12};
    for (int k = 0; k <= 6; ++k) CHECK(epsilon(k, 6 - k) == expected[k]);
    // pair and triple symmetries behind the cycle identities
    for (long a = 0; a <= 5; ++a)
        for (long b = 0; b <= 5; ++b) {
            CHECK(epsilon(a, b) + epsilon(b, a) == a + b);
            for (long c = 0; c <= 5; ++c)
                CHECK(epsilon(a, b + c) + epsilon(b, a + c) + epsilon(c, a + b) == 0);
        }
}

TEST_CASE("mu cycles") {
    auto mu0 = mu_cycle(full2, 0);
    CHECK(mu0 == (x(1) * xi(0)).scaled(Rat(2)) - x(0) * xi(1));
    CHECK(mu0.to_string() == "2*x1*xi0 - x0*xi1");
    CHECK(mu0.degree() == Bidegree{8, 3});

    auto mu1 = mu_cycle(full3, 1);
    CHECK(mu1 == (x(0) * xi(2)).scaled(Rat(-2)) + x(1) * xi(1) + (x(2) * xi(0)).scaled(Rat(4)));
    CHECK(mu1.degree() == Bidegree{10, 5});

    for (int s = 0; s <= 3; ++s) {
        GeneratorSpec spec{5, false};
        CHECK(apply_differential(spec, d2, mu_cycle(spec, s)).is_zero());
        CHECK(mu_cycle_check(spec, s).pass);
    }

    CHECK_THROWS_AS(mu_cycle(full2, 1), std::invalid_argument);
    CHECK_THROWS_AS(mu_cycle({3, true}, 0), std::invalid_argument);
}

TEST_CASE("mu cycles are not boundaries") {
    CHECK(!is_boundary(full2, d2, mu_cycle(full2, 0)).has_value());
    // x1*mu0 spans homology at n=2; it pins the relation index ranges
    CHECK(!is_boundary(full2, d2, x(1) * mu_cycle(full2, 0)).has_value());
    // over F_3 the same class survives
    CHECK(!is_boundary(full2, d2, mu_cycle(full2, 0), Ring::mod_p(3)).has_value());
}

TEST_CASE("boundary solver") {
    // xi0 xi3 and xi1 xi2 share the bidegree (14,8)
    auto u = xi(0) * xi(3) + (xi(1) * xi(2)).scaled(Rat(3));
    auto e = apply_differential(full4, d2, u);
    auto sol = is_boundary(full4, d2, e);
    REQUIRE(sol.has_value());
    CHECK(apply_differential(full4, d2, *sol) == e);

    // x0*mu0 = -d2(xi0 xi1)
    auto target = x(0) * mu_cycle(full2, 0);
    auto sol2 = is_boundary(full2, d2, target);
    REQUIRE(sol2.has_value());
    CHECK(apply_differential(full2, d2, *sol2) == target);
    CHECK(target == -apply_differential(full2, d2, xi(0) * xi(1)));

    // mod p path
    auto sol3 = is_boundary(full3, d2, apply_differential(full3, d2, xi(2)), Ring::mod_p(3));
    CHECK(sol3.has_value());
    CHECK_THROWS_AS(is_boundary(full3, d2, e, Ring::integer()), std::invalid_argument);
    // inhomogeneous elements are rejected
    CHECK_THROWS_AS(is_boundary(full3, d2, x(0) + xi(0)), std::invalid_argument);
}

TEST_CASE("relation families") {
    CHECK(parse_rel_kind("xmu") == RelKind::xmu);
    CHECK(rel_kind_name(RelKind::xddot_mu) == "xddot_mu");
    CHECK_THROWS_AS(parse_rel_kind("zz"), std::invalid_argument);

    CHECK(relation_max_j(full4, RelKind::xx) == 3);
    CHECK(relation_max_j(full4, RelKind::xmu) == 2);
    CHECK(relation_max_j(full4, RelKind::xddot_mu) == 1);
    CHECK(relation_max_j(full4, RelKind::mu_mudot) == 1);

    // the quadratic family is literally the image of the odd generators
    for (int j = 0; j <= 2; ++j)
        CHECK(relation_element(full3, RelKind::xx, j) ==
              apply_differential(full3, d2, xi(j)));

    CHECK(relation_element(full3, RelKind::xmu, 1) ==
          x(0) * mu_cycle(full3, 1) + x(1) * mu_cycle(full3, 0));

    // expected bidegrees
    CHECK(relation_element(full4, RelKind::xx, 2).degree() == Bidegree{8, 4});
    CHECK(relation_element(full4, RelKind::xmu, 2).degree() == Bidegree{14, 7});
    CHECK(relation_element(full4, RelKind::xddot_mu, 1).degree() == Bidegree{16, 9});
    CHECK(relation_element(full4, RelKind::mu_mudot, 1).degree() == Bidegree{20, 10});

    // truncation boundaries are enforced, not padded
    CHECK_THROWS_AS(relation_element(full2, RelKind::xmu, 1), std::invalid_argument);
    CHECK_THROWS_AS(relation_element(full3, RelKind::xddot_mu, 1), std::invalid_argument);
    CHECK_THROWS_AS(relation_element(full3, RelKind::mu_mudot, 1), std::invalid_argument);
}

TEST_CASE("relation preimages") {
    CHECK(relation_preimage(full3, RelKind::xx, 1) == xi(1));
    // j=0: only (a,b) = (0,1), weight b-a = 1
    CHECK(relation_preimage(full3, RelKind::xmu, 0) == xi(0) * xi(1));
    // j=0: only (a,b,c) = (0,1,2), weight b*c*(c-1) = 2
    CHECK(relation_preimage(full3, RelKind::mu_mudot, 0) == (xi(0) * xi(1) * xi(2)).scaled(Rat(2)));

    // mu0 * mu1 is the boundary of 2 xi0 xi1 xi2 up to sign
    auto lhs = mu_cycle(full3, 0) * mu_cycle(full3, 1);
    auto rhs = apply_differential(full3, d2, (xi(0) * xi(1) * xi(2)).scaled(Rat(2)));
    bool plus = (lhs == rhs), minus = (lhs == -rhs);
    CHECK((plus || minus));

    for (RelKind kind : {RelKind::xx, RelKind::xmu, RelKind::xddot_mu, RelKind::mu_mudot}) {
        GeneratorSpec spec{5, false};
        for (int j = 0; j <= relation_max_j(spec, kind); ++j) {
            auto rep = relation_boundary_check(spec, kind, j);
            CHECK(rep.pass);
            CHECK(rep.witness.contains("scalar"));
        }
    }
}

TEST_CASE("torsion witness") {
    auto rep = torsion_witness_check(5);
    CHECK(rep.pass);
    // full divisor list at (16,10): Z/2 + Z/10, the 10 carrying the 5-torsion
    CHECK(rep.witness["divisors"] == nlohmann::json::array({"2", "10"}));
    CHECK_THROWS_AS(torsion_witness_check(4), std::invalid_argument);
    CHECK_THROWS_AS(torsion_witness_check(3), std::invalid_argument);
}

TEST_CASE("filtration differential identities") {
    for (int s = 0; s <= 2; ++s) CHECK(lee_identity_check(full4, s).pass);
    auto rep = lee_identity_check(full3, 1);
    CHECK(rep.pass);
    // the two differentials anticommute but do not commute
    CHECK(rep.witness["commutator_nonzero_terms"].get<long>() > 0);
}

TEST_CASE("potential gradient identity") {
    for (int n = 1; n <= 4; ++n) CHECK(potential_identity_check(n).pass);
}

TEST_CASE("reduced-to-unreduced substitution") {
    auto rep = reduction_check(5, 14);
    CHECK(rep.pass);
    CHECK(rep.witness["monomials_checked"].get<long>() > 0);
    CHECK_THROWS_AS(reduction_check(2, 10), std::invalid_argument);
}

TEST_CASE("generic coefficients break the convolution") {
    auto rep = generic_contrast_check();
    CHECK(rep.pass);
    CHECK(rep.witness["rank_standard"] == 6);
    CHECK(rep.witness["rank_generic"] == 7);
    CHECK(rep.witness["betti_standard"] == 1);
    CHECK(rep.witness["betti_generic"] == 0);
}

TEST_CASE("series comparison windows") {
    auto a = MultiSeries::poly({{1, 0, 0}, {1, 4, 2}}, 8);
    auto b = MultiSeries::poly({{1, 0, 0}, {2, 4, 2}}, 8);
    auto bad = compare_series_check("demo", a, b, {8, -1});
    CHECK(!bad.pass);
    REQUIRE(bad.witness["mismatches"].size() == 1);
    CHECK(bad.witness["mismatches"][0]["q"] == 4);

    // a tight window hides the difference
    CHECK(compare_series_check("demo", a, b, {2, -1}).pass);
    CHECK(compare_series_check("demo", a, b, {8, 1}).pass);
    CHECK_THROWS_AS(compare_series_check("demo", a, b, {10, -1}), std::invalid_argument);
}

TEST_CASE("fixture loading") {
    auto rat = fixture_series("t79-rational");
    CHECK(rat.coeff(0, 0) == 1);
    CHECK(rat.coeff_sum() == 134);

    auto z2 = fixture_series("t79-z2");
    CHECK(z2.coeff_sum() == 286);
    // mod 2 dominates the rational table coefficientwise
    for (const auto& [key, coeff] : rat.terms()) CHECK(z2.coeff(key.q, key.t) >= coeff);

    CHECK_THROWS(fixture_series("no-such-fixture"));

    // byte-stable round trip against the shipped file
    std::ifstream f(fixture_dir() + "/t79_rational.json");
    REQUIRE(f.good());
    std::stringstream buf;
    buf << f.rdbuf();
    auto text = buf.str();
    while (!text.empty() && (text.back() == '\n' || text.back() == ' ')) text.pop_back();
    CHECK(rat.to_json() == text);
}

TEST_CASE("a to q substitution") {
    MultiSeries s(12);
    s.add_term(2, 3, 2, Int(7));
    s.add_term(4, 0, 0, Int(1));
    auto out = substitute_a_to_q2(s);
    CHECK(out.coeff(6, 3) == 7);
    CHECK(out.coeff(4, 0) == 1);
    CHECK(out.coeff(2, 3, 2) == 0);
}

TEST_CASE("report serialization") {
    CheckReport rep;
    rep.check = "demo";
    rep.params = {{"n", 2}};
    rep.pass = true;
    rep.witness = {{"note", "ok"}};
    CHECK(rep.to_json_line() ==
          R"({"check":"demo","params":{"n":2},"verdict":"pass","witness":{"note":"ok"}})");
    rep.pass = false;
    CHECK(rep.to_json_line().find("\"verdict\":\"fail\"") != std::string::npos);
}

TEST_CASE("suites") {
    auto reports = run_suite("mu", 3, 0, false);
    CHECK(!reports.empty());
    for (const auto& r : reports) CHECK(r.pass);

    auto rel = run_suite("relations", 4, 0, false);
    CHECK(!rel.empty());
    for (const auto& r : rel) CHECK(r.pass);

    CHECK_THROWS_AS(run_suite("bogus", 0, 0, false), std::invalid_argument);
}
