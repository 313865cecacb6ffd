#include "koszulkh/linalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace koszulkh {

namespace {

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

long mod_reduce(const Int& v, long p) {
    Int r = v % p;
    if (r < 0) r += p;
    return r.get_si();
}

long inv_mod(long a, long p) {
    // extended euclid; a nonzero mod p
    long t = 0, nt = 1, r = p, nr = a % p;
    if (nr < 0) nr += p;
    while (nr != 0) {
        long q = r / nr;
        long tmp = t - q * nt; t = nt; nt = tmp;
        tmp = r - q * nr; r = nr; nr = tmp;
    }
    if (r != 1) throw std::runtime_error("inv_mod: not invertible");
    return t < 0 ? t + p : t;
}

long rank_rational(Mat m) {
    // one-step fraction-free elimination; entries stay minors of the input
    int r = 0;
    Int prev = 1;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int piv = -1;
        for (int i = r; i < m.rows; ++i) {
            const Int& v = m.at(i, c);
            if (v == 0) continue;
            if (piv < 0 || mpz_cmpabs(v.get_mpz_t(), m.at(piv, c).get_mpz_t()) < 0) piv = i;
        }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(r, j), m.at(piv, j));
        for (int i = r + 1; i < m.rows; ++i) {
            for (int j = c + 1; j < m.cols; ++j) {
                Int num = m.at(r, c) * m.at(i, j) - m.at(i, c) * m.at(r, j);
                mpz_divexact(m.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            m.at(i, c) = 0;
        }
        prev = m.at(r, c);
        ++r;
    }
    return r;
}

long rank_mod_p(const Mat& m, long p) {
    std::vector<std::vector<long>> a(m.rows, std::vector<long>(m.cols));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            a[i][j] = mod_reduce(m.at(i, j), p);
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int piv = -1;
        for (int i = r; i < m.rows; ++i)
            if (a[i][c] != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(a[r], a[piv]);
        long inv = inv_mod(a[r][c], p);
        for (int i = r + 1; i < m.rows; ++i) {
            if (a[i][c] == 0) continue;
            long f = (a[i][c] * inv) % p;
            for (int j = c; j < m.cols; ++j)
                a[i][j] = ((a[i][j] - f * a[r][j]) % p + p) % p;
        }
        ++r;
    }
    return r;
}

} // namespace

Ring Ring::rational() { return Ring{Kind::rational, 0}; }
Ring Ring::integer() { return Ring{Kind::integer, 0}; }

Ring Ring::mod_p(long p) {
    if (!is_prime(p)) throw std::invalid_argument("Ring::mod_p: p must be prime");
    return Ring{Kind::mod_p, p};
}

Ring Ring::parse(const std::string& token) {
    if (token == "q") return rational();
    if (token == "int") return integer();
    if (token.rfind("zp:", 0) == 0) {
        long p = 0;
        try {
            p = std::stol(token.substr(3));
        } catch (const std::exception&) {
            throw std::invalid_argument("Ring::parse: bad modulus in '" + token + "'");
        }
        return mod_p(p);
    }
    throw std::invalid_argument("Ring::parse: unknown ring token '" + token + "'");
}

std::string Ring::name() const {
    switch (kind) {
        case Kind::rational: return "q";
        case Kind::integer: return "int";
        case Kind::mod_p: return "zp:" + std::to_string(p);
    }
    return "?";
}

Mat::Mat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {
    if (r < 0 || c < 0) throw std::invalid_argument("Mat: negative dimension");
}

Int& Mat::at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
const Int& Mat::at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

bool Mat::is_zero() const {
    return std::all_of(a.begin(), a.end(), [](const Int& v) { return v == 0; });
}

Mat Mat::transposed() const {
    Mat t(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    return t;
}

Mat Mat::operator*(const Mat& o) const {
    if (cols != o.rows) throw std::invalid_argument("Mat::operator*: shape mismatch");
    Mat r(rows, o.cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            if (at(i, k) == 0) continue;
            for (int j = 0; j < o.cols; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
        }
    return r;
}

long rank_over(const Mat& m, const Ring& ring) {
    if (m.rows == 0 || m.cols == 0) return 0;
    if (ring.kind == Ring::Kind::mod_p) return rank_mod_p(m, ring.p);
    return rank_rational(m);
}

SNFResult smith_normal_form(Mat m) {
    int corner = 0;
    const int lim = std::min(m.rows, m.cols);
    while (corner < lim) {
        // pick smallest-magnitude nonzero in the trailing submatrix
        int pr = -1, pc = -1;
        for (int i = corner; i < m.rows; ++i)
            for (int j = corner; j < m.cols; ++j) {
                const Int& v = m.at(i, j);
                if (v == 0) continue;
                if (pr < 0 || mpz_cmpabs(v.get_mpz_t(), m.at(pr, pc).get_mpz_t()) < 0) {
                    pr = i;
                    pc = j;
                }
            }
        if (pr < 0) break; // submatrix is zero
        if (pr != corner)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(corner, j), m.at(pr, j));
        if (pc != corner)
            for (int i = 0; i < m.rows; ++i) std::swap(m.at(i, corner), m.at(i, pc));

        bool clean = true;
        for (int i = corner + 1; i < m.rows; ++i) {
            if (m.at(i, corner) == 0) continue;
            Int q = m.at(i, corner) / m.at(corner, corner); // truncated
            if (q != 0)
                for (int j = corner; j < m.cols; ++j)
                    m.at(i, j) -= q * m.at(corner, j);
            if (m.at(i, corner) != 0) clean = false; // remainder left, re-pivot
        }
        for (int j = corner + 1; j < m.cols; ++j) {
            if (m.at(corner, j) == 0) continue;
            Int q = m.at(corner, j) / m.at(corner, corner);
            if (q != 0)
                for (int i = corner; i < m.rows; ++i)
                    m.at(i, j) -= q * m.at(i, corner);
            if (m.at(corner, j) != 0) clean = false;
        }
        if (!clean) continue; // smaller pivot now exists somewhere

        // corner must divide the rest of the submatrix for the divisor chain
        bool divides = true;
        for (int i = corner + 1; i < m.rows && divides; ++i)
            for (int j = corner + 1; j < m.cols; ++j)
                if (m.at(i, j) % m.at(corner, corner) != 0) {
                    for (int jj = 0; jj < m.cols; ++jj)
                        m.at(corner, jj) += m.at(i, jj);
                    divides = false;
                    break;
                }
        if (!divides) continue;
        ++corner;
    }

    SNFResult res;
    for (int i = 0; i < corner; ++i) {
        Int d = m.at(i, i);
        if (d < 0) d = -d;
        res.divisors.push_back(d);
    }
    res.rank = corner;
    return res;
}

std::optional<std::vector<Rat>> solve_rational(const Mat& A, const std::vector<Rat>& b) {
    if (static_cast<int>(b.size()) != A.rows)
        throw std::invalid_argument("solve_rational: rhs size mismatch");
    const int rows = A.rows, cols = A.cols;
    std::vector<std::vector<Rat>> w(rows, std::vector<Rat>(cols + 1));
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) w[i][j] = Rat(A.at(i, j));
        w[i][cols] = b[i];
    }
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (w[i][c] != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(w[r], w[piv]);
        Rat inv = 1 / w[r][c];
        for (int j = c; j <= cols; ++j) w[r][j] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || w[i][c] == 0) continue;
            Rat f = w[i][c];
            for (int j = c; j <= cols; ++j) w[i][j] -= f * w[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (int i = r; i < rows; ++i)
        if (w[i][cols] != 0) return std::nullopt;
    std::vector<Rat> x(cols, Rat(0));
    for (int i = 0; i < r; ++i) x[pivot_col[i]] = w[i][cols];
    return x;
}

std::optional<std::vector<long>> solve_mod_p(const Mat& A, const std::vector<long>& b, long p) {
    if (static_cast<int>(b.size()) != A.rows)
        throw std::invalid_argument("solve_mod_p: rhs size mismatch");
    const int rows = A.rows, cols = A.cols;
    std::vector<std::vector<long>> w(rows, std::vector<long>(cols + 1));
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) w[i][j] = mod_reduce(A.at(i, j), p);
        w[i][cols] = ((b[i] % p) + p) % p;
    }
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (w[i][c] != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(w[r], w[piv]);
        long inv = inv_mod(w[r][c], p);
        for (int j = c; j <= cols; ++j) w[r][j] = (w[r][j] * inv) % p;
        for (int i = 0; i < rows; ++i) {
            if (i == r || w[i][c] == 0) continue;
            long f = w[i][c];
            for (int j = c; j <= cols; ++j)
                w[i][j] = ((w[i][j] - f * w[r][j]) % p + p) % p;
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (int i = r; i < rows; ++i)
        if (w[i][cols] != 0) return std::nullopt;
    std::vector<long> x(cols, 0);
    for (int i = 0; i < r; ++i) x[pivot_col[i]] = w[i][cols];
    return x;
}

std::string to_triplet_text(const Mat& m, const std::vector<std::string>& header_lines,
                            const Ring& ring) {
    std::ostringstream os;
    for (const auto& h : header_lines) os << "# " << h << "\n";
    std::vector<std::pair<std::pair<int, int>, Int>> entries;
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) {
            Int v = m.at(i, j);
            if (ring.kind == Ring::Kind::mod_p) v = mod_reduce(v, ring.p);
            if (v != 0) entries.push_back({{i, j}, v});
        }
    os << m.rows << " " << m.cols << " " << entries.size() << "\n";
    for (const auto& [rc, v] : entries)
        os << rc.first << " " << rc.second << " " << v.get_str() << "\n";
    return os.str();
}

std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

} // namespace koszulkh
