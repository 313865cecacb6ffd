#include "koszulkh/series.hpp"

#include <array>
#include <stdexcept>
#include <utility>

#include "json.hpp"

namespace koszulkh {

MultiSeries::MultiSeries(int q_cutoff) : q_cutoff_(q_cutoff) {
    if (q_cutoff < 0) throw std::invalid_argument("q_cutoff must be >= 0");
}

MultiSeries MultiSeries::zero(int q_cutoff) { return MultiSeries(q_cutoff); }

MultiSeries MultiSeries::one(int q_cutoff) {
    MultiSeries s(q_cutoff);
    s.add_term(0, 0, 0, 1);
    return s;
}

MultiSeries MultiSeries::monomial(Int coeff, int qe, int te, int ae, int q_cutoff) {
    MultiSeries s(q_cutoff);
    s.add_term(qe, te, ae, coeff);
    return s;
}

MultiSeries MultiSeries::poly(const std::vector<std::array<long, 3>>& cqt, int q_cutoff) {
    MultiSeries s(q_cutoff);
    for (const auto& [c, qe, te] : cqt)
        s.add_term(static_cast<int>(qe), static_cast<int>(te), 0, Int(c));
    return s;
}

Int MultiSeries::coeff(int qe, int te, int ae) const {
    auto it = terms_.find(TermKey{qe, te, ae});
    return it == terms_.end() ? Int(0) : it->second;
}

void MultiSeries::add_term(int qe, int te, int ae, const Int& c) {
    if (qe < 0 || te < 0 || ae < 0)
        throw std::invalid_argument("negative exponent in series term");
    if (qe > q_cutoff_ || c == 0) return;
    TermKey k{qe, te, ae};
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiSeries& MultiSeries::operator+=(const MultiSeries& o) {
    if (o.q_cutoff_ != q_cutoff_)
        throw std::invalid_argument("series cutoff mismatch in +");
    for (const auto& [k, c] : o.terms_) add_term(k.q, k.t, k.a, c);
    return *this;
}

MultiSeries& MultiSeries::operator-=(const MultiSeries& o) {
    if (o.q_cutoff_ != q_cutoff_)
        throw std::invalid_argument("series cutoff mismatch in -");
    for (const auto& [k, c] : o.terms_) add_term(k.q, k.t, k.a, -c);
    return *this;
}

MultiSeries operator*(const MultiSeries& a, const MultiSeries& b) {
    if (a.q_cutoff_ != b.q_cutoff_)
        throw std::invalid_argument("series cutoff mismatch in *");
    MultiSeries out(a.q_cutoff_);
    // Keys are (q,t,a)-lex ordered, so once qa + qb overflows the cutoff for
    // the inner term's q we can stop that inner scan.
    for (const auto& [ka, ca] : a.terms_) {
        if (ka.q > a.q_cutoff_) break;
        for (const auto& [kb, cb] : b.terms_) {
            if (ka.q + kb.q > a.q_cutoff_) break;
            out.add_term(ka.q + kb.q, ka.t + kb.t, ka.a + kb.a, ca * cb);
        }
    }
    return out;
}

MultiSeries MultiSeries::operator-() const {
    MultiSeries out(q_cutoff_);
    for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
    return out;
}

MultiSeries MultiSeries::scaled(const Int& c) const {
    MultiSeries out(q_cutoff_);
    if (c == 0) return out;
    for (const auto& [k, v] : terms_) out.terms_.emplace(k, v * c);
    return out;
}

MultiSeries MultiSeries::truncated(int new_cutoff) const {
    if (new_cutoff > q_cutoff_)
        throw std::invalid_argument("cannot extend a truncated series");
    MultiSeries out(new_cutoff);
    for (const auto& [k, c] : terms_) {
        if (k.q > new_cutoff) break;
        out.terms_.emplace(k, c);
    }
    return out;
}

MultiSeries MultiSeries::eval_t_minus1() const {
    MultiSeries out(q_cutoff_);
    for (const auto& [k, c] : terms_) {
        if (k.a != 0)
            throw std::domain_error("t = -1 evaluation requires a-free series");
        out.add_term(k.q, 0, 0, (k.t % 2 == 0) ? c : -c);
    }
    return out;
}

int MultiSeries::max_q() const {
    return terms_.empty() ? -1 : terms_.rbegin()->first.q;
}

Int MultiSeries::coeff_sum() const {
    Int s = 0;
    for (const auto& [k, c] : terms_) s += c;
    return s;
}

std::string MultiSeries::to_json() const {
    nlohmann::json j;
    j["q_cutoff"] = q_cutoff_;
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [k, c] : terms_) {
        nlohmann::json t;
        t["q"] = k.q;
        t["t"] = k.t;
        t["a"] = k.a;
        t["c"] = c.get_str();
        arr.push_back(std::move(t));
    }
    j["terms"] = std::move(arr);
    return j.dump(2);
}

MultiSeries MultiSeries::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    MultiSeries s(j.at("q_cutoff").get<int>());
    for (const auto& t : j.at("terms")) {
        Int c(t.at("c").get<std::string>());
        s.add_term(t.at("q").get<int>(), t.at("t").get<int>(),
                   t.value("a", 0), c);
    }
    return s;
}

MultiSeries geometric_inverse(int qe, int te, int ae, int sign, int q_cutoff) {
    if (qe < 1) throw std::invalid_argument("geometric_inverse needs qe >= 1");
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("geometric_inverse sign must be +-1");
    MultiSeries out(q_cutoff);
    Int c = 1;
    for (int k = 0; k * qe <= q_cutoff; ++k) {
        out.add_term(k * qe, k * te, k * ae, c);
        c *= sign;
    }
    return out;
}

MultiSeries z_binomial(int m, int l, int q_cutoff) {
    if (l < 0 || m < 0 || l > m) return MultiSeries::zero(q_cutoff);
    // binom(m, l) over rows; row r holds binom(r, j) for j = 0..l.
    std::vector<MultiSeries> row(static_cast<std::size_t>(l) + 1,
                                 MultiSeries::zero(q_cutoff));
    row[0] = MultiSeries::one(q_cutoff);
    for (int r = 1; r <= m; ++r) {
        for (int j = std::min(r, l); j >= 1; --j) {
            // z^(r-j) with z = q^2 t^2.
            MultiSeries shifted(q_cutoff);
            for (const auto& [k, c] : row[static_cast<std::size_t>(j) - 1].terms())
                shifted.add_term(k.q + 2 * (r - j), k.t + 2 * (r - j), k.a, c);
            row[static_cast<std::size_t>(j)] += shifted;
        }
    }
    return row[static_cast<std::size_t>(l)];
}

bool equal_up_to(const MultiSeries& a, const MultiSeries& b, int cutoff) {
    if (cutoff > a.q_cutoff() || cutoff > b.q_cutoff())
        throw std::invalid_argument("comparison window exceeds a cutoff");
    return a.truncated(cutoff) == b.truncated(cutoff);
}

}  // namespace koszulkh
