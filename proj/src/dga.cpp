#include "koszulkh/dga.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <sstream>
#include <stdexcept>

namespace koszulkh {

namespace {

// monomials keep no trailing zero exponents so map keys are canonical
void normalize(std::vector<int>& xexp) {
    while (!xexp.empty() && xexp.back() == 0) xexp.pop_back();
}

int exp_at(const Monomial& m, int k) {
    return k < static_cast<int>(m.xexp.size()) ? m.xexp[k] : 0;
}

// number of inversions between the two xi sets: pairs (s, t), s in mask1,
// t in mask2, with s > t
int xi_inversions(std::uint32_t mask1, std::uint32_t mask2) {
    int inv = 0;
    while (mask2) {
        int b = std::countr_zero(mask2);
        mask2 &= mask2 - 1;
        inv += std::popcount(mask1 >> (b + 1));
    }
    return inv;
}

// x_i * x_j as a monomial
Monomial xx_mono(int i, int j) {
    Monomial m;
    m.xexp.assign(static_cast<std::size_t>(std::max(i, j)) + 1, 0);
    m.xexp[i] += 1;
    m.xexp[j] += 1;
    return m;
}

// image of a single odd generator under the chosen differential, an x-only element
Element dxi(const GeneratorSpec& spec, const DifferentialSpec& d, int k) {
    Element out;
    const int lo = spec.min_index();
    switch (d.kind) {
        case DiffKind::standard:
            for (int i = lo; k - i >= lo && i <= k - i; ++i)
                out.add_term(xx_mono(i, k - i), Rat(i == k - i ? 1 : 2));
            break;
        case DiffKind::generic: {
            auto alpha = generic_alpha(spec.n, d.seed);
            for (int i = lo; k - i >= lo && i <= k; ++i)
                out.add_term(xx_mono(i, k - i), Rat(alpha[k][i]));
            break;
        }
        case DiffKind::lee: {
            Monomial m;
            m.xexp.assign(static_cast<std::size_t>(k) + 1, 0);
            m.xexp[k] = 1;
            out.add_term(m, Rat(1));
            break;
        }
    }
    return out;
}

// x-only monomials with given exponent sum d and weight sum w (weight of x_k
// is k), indices restricted to [lo, n)
void x_compositions(int n, int lo, int d, int w, int k, std::vector<int>& cur,
                    std::vector<std::vector<int>>& out) {
    if (k <= 0) {
        if (lo == 0 && k == 0) {
            // x_0 carries no weight, so all remaining exponent lands there
            if (w == 0) {
                cur[0] = d;
                out.push_back(cur);
                cur[0] = 0;
            }
        } else if (d == 0 && w == 0) {
            out.push_back(cur);
        }
        return;
    }
    if (w > d * k || w < d * lo) return; // unreachable weight
    int amax = k > 0 ? std::min(d, w / k) : d;
    for (int a = 0; a <= amax; ++a) {
        cur[k] = a;
        x_compositions(n, lo, d - a, w - a * k, k - 1, cur, out);
        cur[k] = 0;
    }
}

std::vector<Monomial> x_basis(const GeneratorSpec& spec, int qx, int tx) {
    std::vector<Monomial> res;
    if (qx < 0 || tx < 0 || tx % 2 != 0 || (qx - tx) % 2 != 0 || qx < tx) return res;
    int d = (qx - tx) / 2;
    std::vector<int> cur(spec.n, 0);
    std::vector<std::vector<int>> exps;
    x_compositions(spec.n, spec.min_index(), d, tx / 2, spec.n - 1, cur, exps);
    for (auto& e : exps) {
        Monomial m;
        m.xexp = std::move(e);
        normalize(m.xexp);
        res.push_back(std::move(m));
    }
    return res;
}

std::string hash_basis(const std::vector<Monomial>& b) {
    std::string s;
    for (const auto& m : b) {
        s += m.to_string();
        s += ';';
    }
    std::ostringstream os;
    os << std::hex << fnv1a64(s);
    return os.str();
}

} // namespace

int Monomial::xdeg() const {
    int d = 0;
    for (int a : xexp) d += a;
    return d;
}

int Monomial::xi_count() const { return std::popcount(ximask); }

Bidegree Monomial::degree() const {
    Bidegree deg;
    for (int k = 0; k < static_cast<int>(xexp.size()); ++k) {
        deg.q += (2 * k + 2) * xexp[k];
        deg.t += 2 * k * xexp[k];
    }
    for (std::uint32_t m = ximask; m;) {
        int i = std::countr_zero(m);
        m &= m - 1;
        deg.q += 2 * i + 4;
        deg.t += 2 * i + 1;
    }
    return deg;
}

std::string Monomial::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k < static_cast<int>(xexp.size()); ++k) {
        if (xexp[k] == 0) continue;
        if (!first) os << "*";
        os << "x" << k;
        if (xexp[k] > 1) os << "^" << xexp[k];
        first = false;
    }
    for (std::uint32_t m = ximask; m;) {
        int i = std::countr_zero(m);
        m &= m - 1;
        if (!first) os << "*";
        os << "xi" << i;
        first = false;
    }
    if (first) os << "1";
    return os.str();
}

// ascending total x-degree, then lex on exponents, then xi set
bool basis_order_less(const Monomial& a, const Monomial& b) {
    int da = a.xdeg(), db = b.xdeg();
    if (da != db) return da < db;
    if (a.xexp != b.xexp) return a.xexp < b.xexp;
    return a.ximask < b.ximask;
}

Element Element::zero() { return Element(); }

Element Element::unit() {
    Element e;
    e.add_term(Monomial{}, Rat(1));
    return e;
}

Element Element::x_gen(int k) {
    if (k < 0) throw std::invalid_argument("x_gen: negative index");
    Monomial m;
    m.xexp.assign(static_cast<std::size_t>(k) + 1, 0);
    m.xexp[k] = 1;
    return term(m, Rat(1));
}

Element Element::xi_gen(int i) {
    if (i < 0 || i > 31) throw std::invalid_argument("xi_gen: index out of range");
    Monomial m;
    m.ximask = 1u << i;
    return term(m, Rat(1));
}

Element Element::term(const Monomial& m, const Rat& c) {
    Element e;
    e.add_term(m, c);
    return e;
}

void Element::add_term(const Monomial& m, const Rat& c) {
    if (c == 0) return;
    Monomial key = m;
    normalize(key.xexp);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rat Element::coeff(const Monomial& m) const {
    Monomial key = m;
    normalize(key.xexp);
    auto it = terms_.find(key);
    return it == terms_.end() ? Rat(0) : it->second;
}

Element& Element::operator+=(const Element& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Element& Element::operator-=(const Element& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Element Element::operator+(const Element& o) const {
    Element r = *this;
    r += o;
    return r;
}

Element Element::operator-(const Element& o) const {
    Element r = *this;
    r -= o;
    return r;
}

Element Element::operator-() const {
    Element r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Element Element::operator*(const Element& o) const {
    Element r;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) {
            if (ma.ximask & mb.ximask) continue; // odd square
            Monomial m;
            m.xexp.assign(std::max(ma.xexp.size(), mb.xexp.size()), 0);
            for (std::size_t k = 0; k < m.xexp.size(); ++k)
                m.xexp[k] = exp_at(ma, static_cast<int>(k)) + exp_at(mb, static_cast<int>(k));
            m.ximask = ma.ximask | mb.ximask;
            int sign = xi_inversions(ma.ximask, mb.ximask) % 2 ? -1 : 1;
            r.add_term(m, ca * cb * sign);
        }
    return r;
}

Element Element::scaled(const Rat& c) const {
    Element r;
    if (c == 0) return r;
    for (const auto& [m, cc] : terms_) r.terms_.emplace(m, cc * c);
    return r;
}

std::optional<Bidegree> Element::degree() const {
    if (terms_.empty()) return std::nullopt;
    Bidegree deg = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
        if (m.degree() != deg) return std::nullopt;
    return deg;
}

std::string Element::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rat ac = c < 0 ? Rat(-c) : c;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (ac != 1)
            os << ac.get_str() << "*" << m.to_string();
        else
            os << m.to_string();
        first = false;
    }
    return os.str();
}

DifferentialSpec DifferentialSpec::parse(const std::string& token) {
    if (token == "standard") return {DiffKind::standard, 0};
    if (token == "lee") return {DiffKind::lee, 0};
    if (token.rfind("generic:", 0) == 0) {
        std::uint64_t seed = 0;
        try {
            seed = std::stoull(token.substr(8));
        } catch (const std::exception&) {
            throw std::invalid_argument("DifferentialSpec::parse: bad seed in '" + token + "'");
        }
        return {DiffKind::generic, seed};
    }
    throw std::invalid_argument("DifferentialSpec::parse: unknown differential '" + token + "'");
}

std::string DifferentialSpec::name() const {
    switch (kind) {
        case DiffKind::standard: return "standard";
        case DiffKind::lee: return "lee";
        case DiffKind::generic: return "generic:" + std::to_string(seed);
    }
    return "?";
}

std::vector<std::vector<Int>> generic_alpha(int n, std::uint64_t seed) {
    // fixed draw order (k outer, i inner) so tables for different n agree on
    // the common prefix; coefficients are nonzero mod every small prime used
    std::mt19937 rng(static_cast<std::uint32_t>(seed));
    std::vector<std::vector<Int>> alpha(n);
    for (int k = 0; k < n; ++k) {
        alpha[k].resize(k + 1);
        for (int i = 0; i <= k; ++i) alpha[k][i] = 1 + static_cast<long>(rng() % 9973);
    }
    return alpha;
}

std::vector<Monomial> basis(const GeneratorSpec& spec, Bidegree deg) {
    std::vector<Monomial> res;
    if (spec.n <= 0 || spec.n > 31) throw std::invalid_argument("basis: n out of range");
    const int lo = spec.min_index();
    const std::uint32_t full = (spec.n >= 31 ? 0x7fffffffu : ((1u << spec.n) - 1u)) &
                               ~((1u << lo) - 1u);
    // enumerate xi subsets of the allowed index window
    for (std::uint32_t sub = full;; sub = (sub - 1) & full) {
        int qxi = 0, txi = 0;
        for (std::uint32_t m = sub; m;) {
            int i = std::countr_zero(m);
            m &= m - 1;
            qxi += 2 * i + 4;
            txi += 2 * i + 1;
        }
        if (qxi <= deg.q && txi <= deg.t) {
            for (auto& xm : x_basis(spec, deg.q - qxi, deg.t - txi)) {
                xm.ximask = sub;
                res.push_back(std::move(xm));
            }
        }
        if (sub == 0) break;
    }
    std::sort(res.begin(), res.end(), basis_order_less);
    return res;
}

Element apply_differential(const GeneratorSpec& spec, const DifferentialSpec& d,
                           const Monomial& m) {
    Element out;
    Monomial base = m;
    int j = 0;
    for (std::uint32_t rest = m.ximask; rest;) {
        int i = std::countr_zero(rest);
        rest &= rest - 1;
        ++j;
        base.ximask = m.ximask & ~(1u << i);
        int sign = (j % 2 == 1) ? 1 : -1;
        out += Element::term(base, Rat(sign)) * dxi(spec, d, i);
    }
    return out;
}

Element apply_differential(const GeneratorSpec& spec, const DifferentialSpec& d,
                           const Element& e) {
    Element out;
    for (const auto& [m, c] : e.terms())
        out += apply_differential(spec, d, m).scaled(c);
    return out;
}

DiffBlock differential_block(const GeneratorSpec& spec, const DifferentialSpec& d,
                             Bidegree src) {
    DiffBlock blk;
    blk.source = src;
    blk.target = d.kind == DiffKind::lee ? Bidegree{src.q - 2, src.t - 1}
                                         : Bidegree{src.q, src.t - 1};
    blk.src_basis = basis(spec, src);
    blk.dst_basis = basis(spec, blk.target);
    blk.mat = Mat(static_cast<int>(blk.dst_basis.size()),
                  static_cast<int>(blk.src_basis.size()));
    for (int col = 0; col < static_cast<int>(blk.src_basis.size()); ++col) {
        Element img = apply_differential(spec, d, blk.src_basis[col]);
        for (const auto& [m, c] : img.terms()) {
            auto it = std::lower_bound(blk.dst_basis.begin(), blk.dst_basis.end(), m,
                                       basis_order_less);
            if (it == blk.dst_basis.end() || !(*it == m))
                throw std::logic_error("differential_block: image term outside target basis");
            if (c.get_den() != 1)
                throw std::logic_error("differential_block: non-integer matrix entry");
            blk.mat.at(static_cast<int>(it - blk.dst_basis.begin()), col) = c.get_num();
        }
    }
    return blk;
}

std::string block_to_triplet_text(const GeneratorSpec& spec, const DifferentialSpec& d,
                                  const DiffBlock& blk, const Ring& ring) {
    std::vector<std::string> header;
    header.push_back("koszul differential block");
    header.push_back("spec: n=" + std::to_string(spec.n) +
                     " reduced=" + std::to_string(spec.reduced ? 1 : 0));
    header.push_back("diff: " + d.name());
    header.push_back("ring: " + ring.name());
    header.push_back("source: q=" + std::to_string(blk.source.q) +
                     " t=" + std::to_string(blk.source.t));
    header.push_back("target: q=" + std::to_string(blk.target.q) +
                     " t=" + std::to_string(blk.target.t));
    header.push_back("basis-hash: src=" + hash_basis(blk.src_basis) +
                     " dst=" + hash_basis(blk.dst_basis));
    return to_triplet_text(blk.mat, header, ring);
}

Element xpow_coeff(const GeneratorSpec& spec, int power, int j) {
    if (power != 2 && power != 3)
        throw std::invalid_argument("xpow_coeff: power must be 2 or 3");
    if (j < 0) throw std::invalid_argument("xpow_coeff: negative coefficient index");
    const int lo = spec.min_index(), hi = spec.n - 1;
    Element out;
    if (power == 2) {
        for (int i = lo; i <= j - i; ++i) {
            int k = j - i;
            if (k > hi || i > hi) continue;
            out.add_term(xx_mono(i, k), Rat(i == k ? 1 : 2));
        }
        return out;
    }
    for (int a = lo; 3 * a <= j; ++a)
        for (int b = a; a + 2 * b <= j; ++b) {
            int c = j - a - b;
            if (c < b || a > hi || b > hi || c > hi) continue;
            int mult = (a == b && b == c) ? 1 : (a == b || b == c) ? 3 : 6;
            Monomial m;
            m.xexp.assign(static_cast<std::size_t>(c) + 1, 0);
            m.xexp[a] += 1;
            m.xexp[b] += 1;
            m.xexp[c] += 1;
            out.add_term(m, Rat(mult));
        }
    return out;
}

Element potential(int n) {
    if (n < 1) throw std::invalid_argument("potential: n must be positive");
    GeneratorSpec spec{n, false};
    return xpow_coeff(spec, 3, n - 1).scaled(Rat(-1, 6));
}

Element partial_x(const Element& e, int k) {
    if (k < 0) throw std::invalid_argument("partial_x: negative index");
    Element out;
    for (const auto& [m, c] : e.terms()) {
        if (m.ximask != 0)
            throw std::invalid_argument("partial_x: element has odd generators");
        int a = exp_at(m, k);
        if (a == 0) continue;
        Monomial d = m;
        d.xexp[k] -= 1;
        out.add_term(d, c * a);
    }
    return out;
}

Element relabel(const Element& e, int x_delta, int xi_delta) {
    Element out;
    for (const auto& [m, c] : e.terms()) {
        Monomial r;
        for (int k = 0; k < static_cast<int>(m.xexp.size()); ++k) {
            if (m.xexp[k] == 0) continue;
            int nk = k + x_delta;
            if (nk < 0) throw std::invalid_argument("relabel: x index would go negative");
            if (static_cast<int>(r.xexp.size()) <= nk) r.xexp.resize(nk + 1, 0);
            r.xexp[nk] = m.xexp[k];
        }
        if (xi_delta >= 0) {
            r.ximask = m.ximask << xi_delta;
        } else {
            if (m.ximask & ((1u << -xi_delta) - 1u))
                throw std::invalid_argument("relabel: xi index would go negative");
            r.ximask = m.ximask >> -xi_delta;
        }
        out.add_term(r, c);
    }
    return out;
}

long lower_ideal_dim(int n, Bidegree deg, const Ring& ring) {
    if (!ring.is_field())
        throw std::invalid_argument("lower_ideal_dim: field rings only");
    GeneratorSpec spec{n, false};
    std::vector<Monomial> ambient = x_basis(spec, deg.q, deg.t);
    if (ambient.empty()) return 0;
    std::sort(ambient.begin(), ambient.end(), basis_order_less);
    // the quadratic images of the n odd generators; coefficients beyond
    // j = n-1 are truncations, not relations of the complex
    std::vector<Element> gens;
    for (int j = 0; j <= n - 1; ++j) {
        Element f = xpow_coeff(spec, 2, j);
        if (f.is_zero()) continue;
        Bidegree fd = *f.degree();
        for (const auto& m : x_basis(spec, deg.q - fd.q, deg.t - fd.t))
            gens.push_back(Element::term(m, Rat(1)) * f);
    }
    if (gens.empty()) return 0;
    Mat mat(static_cast<int>(ambient.size()), static_cast<int>(gens.size()));
    for (int col = 0; col < static_cast<int>(gens.size()); ++col)
        for (const auto& [m, c] : gens[col].terms()) {
            auto it = std::lower_bound(ambient.begin(), ambient.end(), m, basis_order_less);
            if (it == ambient.end() || !(*it == m))
                throw std::logic_error("lower_ideal_dim: product escaped ambient space");
            mat.at(static_cast<int>(it - ambient.begin()), col) = c.get_num();
        }
    return rank_over(mat, ring);
}

MultiSeries lower_quotient_series(int n, int q_cutoff) {
    MultiSeries out = MultiSeries::zero(q_cutoff);
    GeneratorSpec spec{n, false};
    for (int q = 0; q <= q_cutoff; q += 2)
        for (int t = 0; t <= q; t += 2) {
            long total = static_cast<long>(x_basis(spec, q, t).size());
            if (total == 0) continue;
            long dim = total - lower_ideal_dim(n, Bidegree{q, t}, Ring::rational());
            if (dim != 0) out.add_term(q, t, 0, Int(dim));
        }
    return out;
}

} // namespace koszulkh
