#include "koszulkh/verifier.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "koszulkh/formulas.hpp"
#include "koszulkh/homology.hpp"
#include "koszulkh/linalg.hpp"

#ifndef KOSZULKH_FIXTURE_DIR
#define KOSZULKH_FIXTURE_DIR "fixtures"
#endif

namespace koszulkh {

namespace {

const DifferentialSpec kStd{DiffKind::standard, 0};
const DifferentialSpec kLee{DiffKind::lee, 0};

// mpq_class(a, b) does not canonicalize; comparisons need canonical form
Rat frac(long num, long den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

nlohmann::json deg_json(Bidegree d) { return nlohmann::json{{"q", d.q}, {"t", d.t}}; }

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// try to match e = c * d(pre) over a small scalar candidate set
std::optional<Rat> match_scalar(const GeneratorSpec& spec, const DifferentialSpec& d,
                                const Element& e, const Element& pre) {
    Element img = apply_differential(spec, d, pre);
    if (img.is_zero()) return std::nullopt;
    static const Rat candidates[] = {Rat(1),    Rat(-1),   Rat(1, 2),
                                     Rat(-1, 2), Rat(2),    Rat(-2)};
    for (const Rat& c : candidates)
        if (img.scaled(c) == e) return c;
    return std::nullopt;
}

int exp_of(const Monomial& m, int k) {
    return k < static_cast<int>(m.xexp.size()) ? m.xexp[k] : 0;
}

std::string rat_str(const Rat& r) { return r.get_str(); }

} // namespace

std::string CheckReport::to_json_line() const {
    nlohmann::json j;
    j["check"] = check;
    j["params"] = params;
    j["verdict"] = pass ? "pass" : "fail";
    j["witness"] = witness;
    return j.dump();
}

long epsilon(long a, long b) { return 2 * a - b; }

Element mu_cycle(const GeneratorSpec& spec, int s) {
    if (spec.reduced)
        throw std::invalid_argument("mu_cycle: defined on unreduced generators");
    if (s < 0 || s > spec.n - 2) throw std::invalid_argument("mu_cycle: s out of range");
    Element out;
    for (int k = 0; k <= s + 1; ++k)
        out += (Element::x_gen(k) * Element::xi_gen(s + 1 - k)).scaled(Rat(epsilon(k, s + 1 - k)));
    return out;
}

RelKind parse_rel_kind(const std::string& token) {
    if (token == "xx") return RelKind::xx;
    if (token == "xmu") return RelKind::xmu;
    if (token == "xddot_mu") return RelKind::xddot_mu;
    if (token == "mu_mudot") return RelKind::mu_mudot;
    throw std::invalid_argument("parse_rel_kind: unknown relation kind '" + token + "'");
}

std::string rel_kind_name(RelKind kind) {
    switch (kind) {
        case RelKind::xx: return "xx";
        case RelKind::xmu: return "xmu";
        case RelKind::xddot_mu: return "xddot_mu";
        case RelKind::mu_mudot: return "mu_mudot";
    }
    return "?";
}

int relation_max_j(const GeneratorSpec& spec, RelKind kind) {
    switch (kind) {
        case RelKind::xx: return spec.n - 1;
        case RelKind::xmu: return spec.n - 2;
        case RelKind::xddot_mu:
        case RelKind::mu_mudot: return spec.n - 3;
    }
    return -1;
}

Element relation_element(const GeneratorSpec& spec, RelKind kind, int j) {
    if (spec.reduced)
        throw std::invalid_argument("relation_element: defined on unreduced generators");
    if (j < 0 || j > relation_max_j(spec, kind))
        throw std::invalid_argument("relation_element: j out of range");
    Element out;
    switch (kind) {
        case RelKind::xx:
            out = xpow_coeff(spec, 2, j);
            break;
        case RelKind::xmu:
            for (int k = 0; k <= j; ++k)
                out += Element::x_gen(k) * mu_cycle(spec, j - k);
            break;
        case RelKind::xddot_mu:
            for (int k = 1; k <= j + 2; ++k) {
                int s = j + 2 - k;
                long c = static_cast<long>(k) * (k - 1 - s);
                if (c == 0) continue;
                out += (Element::x_gen(k) * mu_cycle(spec, s)).scaled(Rat(c));
            }
            break;
        case RelKind::mu_mudot:
            for (int r = 1; r <= j + 1; ++r)
                out += (mu_cycle(spec, j + 1 - r) * mu_cycle(spec, r)).scaled(Rat(r));
            break;
    }
    return out;
}

Element relation_preimage(const GeneratorSpec& spec, RelKind kind, int j) {
    if (j < 0 || j > relation_max_j(spec, kind))
        throw std::invalid_argument("relation_preimage: j out of range");
    Element out;
    switch (kind) {
        case RelKind::xx:
            out = Element::xi_gen(j);
            break;
        case RelKind::xmu:
            for (int a = 0; 2 * a < j + 1; ++a) {
                int b = j + 1 - a;
                out += (Element::xi_gen(a) * Element::xi_gen(b)).scaled(Rat(b - a));
            }
            break;
        case RelKind::xddot_mu:
            for (int a = 1; 2 * a < j + 3; ++a) {
                int b = j + 3 - a;
                out += (Element::xi_gen(a) * Element::xi_gen(b))
                           .scaled(Rat(static_cast<long>(a) * b * (b - a)));
            }
            break;
        case RelKind::mu_mudot:
            for (int a = 0; a <= j + 3; ++a)
                for (int b = 0; a + b <= j + 3; ++b) {
                    int c = j + 3 - a - b;
                    long w = static_cast<long>(b) * c * (c - 1);
                    if (w == 0 || a >= spec.n || b >= spec.n || c >= spec.n) continue;
                    out += (Element::xi_gen(a) * Element::xi_gen(b) * Element::xi_gen(c))
                               .scaled(Rat(w));
                }
            break;
    }
    return out;
}

CheckReport relation_boundary_check(const GeneratorSpec& spec, RelKind kind, int j) {
    CheckReport rep;
    rep.check = "relation-boundary";
    rep.params = {{"kind", rel_kind_name(kind)}, {"n", spec.n}, {"j", j}};
    Element r = relation_element(spec, kind, j);
    Element pre = relation_preimage(spec, kind, j);
    bool cycle = apply_differential(spec, kStd, r).is_zero();
    rep.witness["element"] = r.to_string();
    rep.witness["cycle"] = cycle;
    auto deg = r.degree();
    if (deg) rep.witness["degree"] = deg_json(*deg);
    if (auto c = match_scalar(spec, kStd, r, pre)) {
        rep.witness["preimage"] = pre.scaled(*c).to_string();
        rep.witness["scalar"] = rat_str(*c);
        rep.pass = cycle;
        return rep;
    }
    auto solved = is_boundary(spec, kStd, r);
    rep.witness["scalar"] = "solved";
    if (solved) rep.witness["preimage"] = solved->to_string();
    rep.pass = cycle && solved.has_value();
    return rep;
}

std::optional<Element> is_boundary(const GeneratorSpec& spec, const DifferentialSpec& diff,
                                   const Element& e, const Ring& ring) {
    if (!ring.is_field()) throw std::invalid_argument("is_boundary: field rings only");
    auto deg = e.degree();
    if (!deg) throw std::invalid_argument("is_boundary: element must be homogeneous");
    Bidegree src = diff.kind == DiffKind::lee ? Bidegree{deg->q + 2, deg->t + 1}
                                              : Bidegree{deg->q, deg->t + 1};
    DiffBlock blk = differential_block(spec, diff, src);
    std::vector<Rat> b(blk.dst_basis.size(), Rat(0));
    for (const auto& [m, c] : e.terms()) {
        auto it = std::lower_bound(blk.dst_basis.begin(), blk.dst_basis.end(), m,
                                   basis_order_less);
        if (it == blk.dst_basis.end() || !(*it == m))
            throw std::invalid_argument("is_boundary: element outside the complex");
        b[static_cast<std::size_t>(it - blk.dst_basis.begin())] = c;
    }
    if (ring.kind == Ring::Kind::mod_p) {
        std::vector<long> bm(b.size());
        for (std::size_t i = 0; i < b.size(); ++i) {
            Int den = b[i].get_den();
            if (den % ring.p == 0)
                throw std::invalid_argument("is_boundary: denominator not invertible mod p");
            Int num = b[i].get_num() % ring.p;
            Int denr = den % ring.p;
            long n0 = num.get_si(), d0 = denr.get_si();
            long inv = 1, base = ((d0 % ring.p) + ring.p) % ring.p, ex = ring.p - 2;
            while (ex) { // p prime, so Fermat inverse
                if (ex & 1) inv = inv * base % ring.p;
                base = base * base % ring.p;
                ex >>= 1;
            }
            bm[i] = (((n0 % ring.p) + ring.p) % ring.p) * inv % ring.p;
        }
        auto x = solve_mod_p(blk.mat, bm, ring.p);
        if (!x) return std::nullopt;
        Element u;
        for (std::size_t i = 0; i < x->size(); ++i)
            if ((*x)[i] != 0) u.add_term(blk.src_basis[i], Rat((*x)[i]));
        return u;
    }
    auto x = solve_rational(blk.mat, b);
    if (!x) return std::nullopt;
    Element u;
    for (std::size_t i = 0; i < x->size(); ++i)
        if ((*x)[i] != 0) u.add_term(blk.src_basis[i], (*x)[i]);
    return u;
}

CheckReport mu_cycle_check(const GeneratorSpec& spec, int s) {
    CheckReport rep;
    rep.check = "mu-cycle";
    rep.params = {{"n", spec.n}, {"s", s}};
    Element mu = mu_cycle(spec, s);
    Bidegree want{2 * s + 8, 2 * s + 3};
    auto deg = mu.degree();
    bool deg_ok = deg && *deg == want;
    bool closed = apply_differential(spec, kStd, mu).is_zero();
    bool not_boundary = !is_boundary(spec, kStd, mu).has_value();
    rep.pass = deg_ok && closed && not_boundary;
    rep.witness = {{"element", mu.to_string()},
                   {"degree", deg_json(want)},
                   {"closed", closed},
                   {"boundary", !not_boundary}};
    return rep;
}

CheckReport torsion_witness_check(int p) {
    CheckReport rep;
    rep.check = "torsion-witness";
    rep.params = {{"p", p}};
    if (p < 5 || !is_prime(p))
        throw std::invalid_argument("torsion_witness_check: p must be a prime >= 5");
    GeneratorSpec spec{p, false};
    Element m;
    for (int i = 1; i <= p - 1; ++i)
        m += (Element::x_gen(i) * Element::xi_gen(p - i)).scaled(Rat(3 * i - p));
    Bidegree want{2 * p + 6, 2 * p + 1};
    auto deg = m.degree();
    bool deg_ok = deg && *deg == want;
    Element dm = apply_differential(spec, kStd, m);
    bool divisible = !dm.is_zero();
    for (const auto& [mon, c] : dm.terms()) {
        if (c.get_den() != 1 || c.get_num() % p != 0) {
            divisible = false;
            break;
        }
    }
    Element v = dm.scaled(Rat(1, p));
    std::vector<Int> divs = torsion_at(spec, kStd, Bidegree{2 * p + 6, 2 * p});
    bool torsion_seen = std::any_of(divs.begin(), divs.end(),
                                    [&](const Int& d) { return d % p == 0; });
    rep.pass = deg_ok && divisible && !v.is_zero() && torsion_seen;
    nlohmann::json divs_json = nlohmann::json::array();
    for (const auto& d : divs) divs_json.push_back(d.get_str());
    rep.witness = {{"element", m.to_string()},
                   {"degree", deg_json(want)},
                   {"d2_over_p", v.to_string()},
                   {"torsion_degree", deg_json({2 * p + 6, 2 * p})},
                   {"divisors", divs_json}};
    return rep;
}

CheckReport lee_identity_check(const GeneratorSpec& spec, int s) {
    CheckReport rep;
    rep.check = "lee-identity";
    rep.params = {{"n", spec.n}, {"s", s}};
    Element mu = mu_cycle(spec, s);
    Element lhs = apply_differential(spec, kLee, mu);
    Element rhs = apply_differential(spec, kStd, Element::xi_gen(s + 1)).scaled(frac(s + 1, 2));
    bool transfer = lhs == rhs;

    bool eps_pairs = true;
    for (int k = 0; k <= s + 1; ++k)
        if (epsilon(k, s + 1 - k) + epsilon(s + 1 - k, k) != s + 1) eps_pairs = false;
    bool eps_triples = true;
    for (long a = 0; a <= 4; ++a)
        for (long b = 0; b <= 4; ++b)
            for (long c = 0; c <= 4; ++c)
                if (epsilon(a, b + c) + epsilon(b, a + c) + epsilon(c, a + b) != 0)
                    eps_triples = false;

    // d1 d2 + d2 d1 vanishes elementwise; the commutator d1 d2 - d2 d1 need
    // not, so it is only reported
    bool anti = true;
    long commutator_terms = 0;
    DifferentialSpec gen{DiffKind::generic, 42};
    const int top = std::min(spec.n, 5);
    std::vector<Monomial> sample;
    for (std::uint32_t mask = 0; mask < (1u << top); ++mask) {
        if (std::popcount(mask) > 3) continue;
        for (int pattern = 0; pattern < 4; ++pattern) {
            Monomial mono;
            mono.ximask = mask;
            if (pattern == 1) mono.xexp = {1};
            if (pattern == 2) mono.xexp = {0, 1};
            if (pattern == 3) mono.xexp = {1, 1};
            sample.push_back(mono);
        }
    }
    for (const auto& mono : sample) {
        Element e = Element::term(mono, Rat(1));
        for (const DifferentialSpec& d2 : {kStd, gen}) {
            Element ab = apply_differential(spec, kLee, apply_differential(spec, d2, e));
            Element ba = apply_differential(spec, d2, apply_differential(spec, kLee, e));
            if (!(ab + ba).is_zero()) anti = false;
            commutator_terms += static_cast<long>((ab - ba).term_count());
        }
    }

    rep.pass = transfer && eps_pairs && eps_triples && anti;
    rep.witness = {{"d1_mu", lhs.to_string()},
                   {"transfer", "d1(mu_" + std::to_string(s) + ") = " +
                                    frac(s + 1, 2).get_str() + " * d2(xi_" +
                                    std::to_string(s + 1) + ")"},
                   {"knight_move", "delta(mu_" + std::to_string(s) + ") = " +
                                       frac(s + 1, 2).get_str() + " * x_" +
                                       std::to_string(s + 1)},
                   {"epsilon_pairs", eps_pairs},
                   {"epsilon_triples", eps_triples},
                   {"anticommutator_zero", anti},
                   {"commutator_nonzero_terms", commutator_terms},
                   {"sample_size", static_cast<long>(sample.size())}};
    return rep;
}

CheckReport potential_identity_check(int n) {
    CheckReport rep;
    rep.check = "potential-identity";
    rep.params = {{"n", n}};
    GeneratorSpec spec{n, false};
    Element w = potential(n);
    Bidegree want{2 * n + 4, 2 * n - 2};
    auto deg = w.degree();
    bool deg_ok = deg && *deg == want;
    bool grads = true;
    for (int i = 0; i < n; ++i) {
        Element lhs = partial_x(w, n - 1 - i);
        Element rhs = xpow_coeff(spec, 2, i).scaled(Rat(-1, 2));
        if (!(lhs == rhs)) grads = false;
    }
    rep.pass = deg_ok && grads;
    rep.witness = {{"potential", w.to_string()},
                   {"degree", deg_json(want)},
                   {"gradient_identity", grads}};
    return rep;
}

CheckReport reduction_check(int n, int q_max) {
    CheckReport rep;
    rep.check = "reduction-substitution";
    rep.params = {{"n", n}, {"q_max", q_max}};
    if (n < 3) throw std::invalid_argument("reduction_check: n must be at least 3");
    GeneratorSpec red{n, true}, sub{n - 2, false};
    long checked = 0;
    bool ok = true;
    std::string bad;
    for (int q = 0; q <= q_max && ok; q += 2)
        for (int t = 0; t <= q && ok; ++t)
            for (const Monomial& m : basis(red, Bidegree{q, t})) {
                // restrict to the image of the shift: no x_{n-1}, no xi_1
                if (exp_of(m, n - 1) != 0 || (m.ximask & 2u)) continue;
                Element e = Element::term(m, Rat(1));
                Element lhs = relabel(apply_differential(red, kStd, e), -1, -2);
                Element rhs = apply_differential(sub, kStd, relabel(e, -1, -2));
                ++checked;
                if (!(lhs == rhs)) {
                    ok = false;
                    bad = m.to_string();
                    break;
                }
            }
    rep.pass = ok && checked > 0;
    rep.witness = {{"monomials_checked", checked}};
    if (!ok) rep.witness["first_failure"] = bad;
    return rep;
}

CheckReport generic_contrast_check() {
    CheckReport rep;
    rep.check = "generic-contrast";
    rep.params = {{"n", 7}, {"seed", 42}, {"degree", deg_json({18, 13})}};
    GeneratorSpec spec{7, false};
    DifferentialSpec gen{DiffKind::generic, 42};
    Bidegree deg{18, 13};
    Ring q = Ring::rational();

    DiffBlock out_std = differential_block(spec, kStd, deg);
    DiffBlock out_gen = differential_block(spec, gen, deg);
    DiffBlock in_std = differential_block(spec, kStd, Bidegree{18, 14});
    DiffBlock in_gen = differential_block(spec, gen, Bidegree{18, 14});
    long dim = static_cast<long>(out_std.src_basis.size());
    long r_std = rank_over(out_std.mat, q), r_gen = rank_over(out_gen.mat, q);
    long ri_std = rank_over(in_std.mat, q), ri_gen = rank_over(in_gen.mat, q);
    long b_std = dim - r_std - ri_std;
    long b_gen = dim - r_gen - ri_gen;
    rep.pass = dim == 7 && r_std == 6 && r_gen == 7 && b_std == 1 && b_gen == 0;
    rep.witness = {{"dim", dim},
                   {"rank_standard", r_std},
                   {"rank_generic", r_gen},
                   {"betti_standard", b_std},
                   {"betti_generic", b_gen}};
    return rep;
}

CheckReport compare_series_check(const std::string& name, const MultiSeries& lhs,
                                 const MultiSeries& rhs, Window w) {
    if (w.q_max > lhs.q_cutoff() || w.q_max > rhs.q_cutoff())
        throw std::invalid_argument("compare_series_check: window exceeds a cutoff");
    CheckReport rep;
    rep.check = "series-compare";
    rep.params = {{"name", name}, {"q_max", w.q_max}, {"t_max", w.t_max}};
    auto in_window = [&](const TermKey& k) {
        return k.q <= w.q_max && (w.t_max < 0 || k.t <= w.t_max);
    };
    nlohmann::json mismatches = nlohmann::json::array();
    long compared = 0;
    for (const auto& [k, c] : lhs.terms()) {
        if (!in_window(k)) continue;
        ++compared;
        Int other = rhs.coeff(k.q, k.t, k.a);
        if (c != other && mismatches.size() < 10)
            mismatches.push_back({{"q", k.q}, {"t", k.t}, {"a", k.a},
                                  {"lhs", c.get_str()}, {"rhs", other.get_str()}});
    }
    for (const auto& [k, c] : rhs.terms()) {
        if (!in_window(k)) continue;
        if (lhs.coeff(k.q, k.t, k.a) == 0 && c != 0) {
            ++compared;
            if (mismatches.size() < 10)
                mismatches.push_back({{"q", k.q}, {"t", k.t}, {"a", k.a},
                                      {"lhs", "0"}, {"rhs", c.get_str()}});
        }
    }
    rep.pass = mismatches.empty();
    rep.witness = {{"terms_compared", compared}, {"mismatches", mismatches}};
    return rep;
}

std::string fixture_dir() {
    if (const char* env = std::getenv("KOSZULKH_FIXTURES")) return env;
    return KOSZULKH_FIXTURE_DIR;
}

MultiSeries fixture_series(const std::string& name) {
    std::ifstream mf(fixture_dir() + "/manifest.json");
    if (!mf) throw std::runtime_error("fixture_series: cannot open manifest");
    nlohmann::json manifest = nlohmann::json::parse(mf);
    for (const auto& entry : manifest) {
        if (entry.at("name").get<std::string>() != name) continue;
        std::ifstream f(fixture_dir() + "/" + entry.at("file").get<std::string>());
        if (!f) throw std::runtime_error("fixture_series: cannot open " +
                                         entry.at("file").get<std::string>());
        std::stringstream buf;
        buf << f.rdbuf();
        MultiSeries s = MultiSeries::from_json(buf.str());
        Int want(entry.at("coeff_sum").get<long>());
        if (s.coeff_sum() != want)
            throw std::runtime_error("fixture_series: total dimension mismatch for " + name);
        return s;
    }
    throw std::runtime_error("fixture_series: no fixture named '" + name + "'");
}

MultiSeries substitute_a_to_q2(const MultiSeries& s) {
    MultiSeries out = MultiSeries::zero(s.q_cutoff());
    for (const auto& [k, c] : s.terms()) out.add_term(k.q + 2 * k.a, k.t, 0, c);
    return out;
}

namespace {

void run_mu(std::vector<CheckReport>& out, int n) {
    std::vector<int> ns;
    if (n > 0) ns.push_back(n);
    else for (int i = 2; i <= 8; ++i) ns.push_back(i);
    for (int nn : ns) {
        GeneratorSpec spec{nn, false};
        for (int s = 0; s <= nn - 2; ++s) out.push_back(mu_cycle_check(spec, s));
    }
}

void run_relations(std::vector<CheckReport>& out, int n) {
    std::vector<int> ns;
    if (n > 0) ns.push_back(n);
    else for (int i = 2; i <= 8; ++i) ns.push_back(i);
    for (int nn : ns) {
        GeneratorSpec spec{nn, false};
        for (RelKind kind : {RelKind::xx, RelKind::xmu, RelKind::xddot_mu, RelKind::mu_mudot})
            for (int j = 0; j <= relation_max_j(spec, kind); ++j)
                out.push_back(relation_boundary_check(spec, kind, j));
    }
}

void run_lee(std::vector<CheckReport>& out, int n) {
    std::vector<int> ns;
    if (n > 0) ns.push_back(n);
    else for (int i = 2; i <= 8; ++i) ns.push_back(i);
    for (int nn : ns) {
        GeneratorSpec spec{nn, false};
        for (int s = 0; s <= nn - 2; ++s) out.push_back(lee_identity_check(spec, s));
    }
}

void run_potential(std::vector<CheckReport>& out, int n) {
    if (n > 0) {
        out.push_back(potential_identity_check(n));
        return;
    }
    for (int nn = 1; nn <= 8; ++nn) out.push_back(potential_identity_check(nn));
}

void run_reduction(std::vector<CheckReport>& out, int n, int q_max) {
    int qm = q_max > 0 ? q_max : 16;
    if (n > 0) {
        out.push_back(reduction_check(n, qm));
        return;
    }
    for (int nn = 3; nn <= 7; ++nn) out.push_back(reduction_check(nn, qm));
}

void run_identities(std::vector<CheckReport>& out, int q_max, bool slow) {
    int qc = q_max > 0 ? q_max : (slow ? 100 : 60);
    out.push_back(compare_series_check("rogers-ramanujan",
                                       rr_side(RogersSide::left, qc),
                                       rr_side(RogersSide::right, qc), {qc, -1}));
    out.push_back(compare_series_check("knot-rogers-ramanujan",
                                       krr_side(RogersSide::left, qc),
                                       krr_side(RogersSide::right, qc), {qc, -1}));
    out.push_back(compare_series_check("a2-to-q4-specialization",
                                       substitute_a_to_q2(krr_side(RogersSide::left, 40)),
                                       fermionic_limit(40), {40, -1}));
    {
        MultiSeries lhs = fermionic_limit(40).eval_t_minus1();
        MultiSeries rhs = MultiSeries::zero(40);
        for (int k = 0; 2 * k <= 40; ++k) rhs.add_term(2 * k, 0, 0, 1);
        out.push_back(compare_series_check("limit-at-t-minus1", lhs, rhs, {40, -1}));
    }
    for (int nn = 1; nn <= 12; ++nn) {
        MultiSeries ss = state_sum(nn, 100);
        out.push_back(compare_series_check("state-sum-vs-recursion n=" + std::to_string(nn),
                                           ss, fermionic_recursive(nn, 100), {100, -1}));
        out.push_back(compare_series_check("state-sum-vs-presentation n=" + std::to_string(nn),
                                           ss, presentation_hilbert(nn, 100), {100, -1}));
    }
    out.push_back(compare_series_check("recursion-vs-bosonic-stable",
                                       fermionic_recursive(12, 24), bosonic_full(12, 24),
                                       {24, -1}));
}

} // namespace

std::vector<CheckReport> run_suite(const std::string& suite, int n, int q_max, bool slow) {
    std::vector<CheckReport> out;
    if (suite == "mu") {
        run_mu(out, n);
    } else if (suite == "relations") {
        run_relations(out, n);
    } else if (suite == "lee") {
        run_lee(out, n);
    } else if (suite == "potential") {
        run_potential(out, n);
    } else if (suite == "reduction") {
        run_reduction(out, n, q_max);
    } else if (suite == "generic-contrast") {
        out.push_back(generic_contrast_check());
    } else if (suite == "identities") {
        run_identities(out, q_max, slow);
    } else if (suite == "torsion" || suite.rfind("torsion:", 0) == 0) {
        if (suite == "torsion") {
            out.push_back(torsion_witness_check(5));
            if (slow) out.push_back(torsion_witness_check(7));
        } else {
            out.push_back(torsion_witness_check(std::stoi(suite.substr(8))));
        }
    } else if (suite == "all") {
        run_mu(out, n);
        run_relations(out, n);
        run_lee(out, n);
        run_potential(out, n);
        run_reduction(out, n, q_max);
        out.push_back(generic_contrast_check());
        out.push_back(torsion_witness_check(5));
        if (slow) out.push_back(torsion_witness_check(7));
        run_identities(out, q_max, slow);
    } else {
        throw std::invalid_argument("run_suite: unknown suite '" + suite + "'");
    }
    return out;
}

} // namespace koszulkh
