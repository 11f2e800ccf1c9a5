#pragma once

// Sparse multivariate polynomials over the rationals in two families of
// variables x_1..x_m and y_1..y_n, enough to express supersymmetric
// polynomials and evaluate them elsewhere.  Exponent vectors have length m+n
// with the x-block first.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "wbr/rational.hpp"

namespace wbr {

class MultiPoly {
public:
    MultiPoly(int m, int n) : m_(m), n_(n) {
        if (m < 0 || n < 0) throw std::invalid_argument("negative variable count");
    }

    static MultiPoly constant(int m, int n, const Rational& c) {
        MultiPoly p(m, n);
        p.add_term(std::vector<int>(m + n, 0), c);
        return p;
    }
    static MultiPoly x(int m, int n, int i) {  // 1-based
        if (i < 1 || i > m) throw std::invalid_argument("x variable index out of range");
        MultiPoly p(m, n);
        std::vector<int> e(m + n, 0);
        e[i - 1] = 1;
        p.add_term(e, Rational(1));
        return p;
    }
    static MultiPoly y(int m, int n, int j) {  // 1-based
        if (j < 1 || j > n) throw std::invalid_argument("y variable index out of range");
        MultiPoly p(m, n);
        std::vector<int> e(m + n, 0);
        e[m + j - 1] = 1;
        p.add_term(e, Rational(1));
        return p;
    }

    int xvars() const { return m_; }
    int yvars() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::vector<int>, Rational>& terms() const { return terms_; }

    void add_term(const std::vector<int>& exps, const Rational& c) {
        if (static_cast<int>(exps.size()) != m_ + n_)
            throw std::invalid_argument("exponent vector length mismatch");
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.emplace(exps, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    MultiPoly operator-() const {
        MultiPoly out(m_, n_);
        for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
        return out;
    }

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
        a.check(b);
        MultiPoly out = a;
        for (const auto& [e, c] : b.terms_) out.add_term(e, c);
        return out;
    }
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        a.check(b);
        MultiPoly out(a.m_, a.n_);
        for (const auto& [e1, c1] : a.terms_)
            for (const auto& [e2, c2] : b.terms_) {
                std::vector<int> e(e1);
                for (std::size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
                out.add_term(e, c1 * c2);
            }
        return out;
    }
    MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    MultiPoly pow(unsigned k) const {
        MultiPoly acc = constant(m_, n_, Rational(1));
        for (unsigned i = 0; i < k; ++i) acc *= *this;
        return acc;
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.m_ == b.m_ && a.n_ == b.n_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    MultiPoly swap_adjacent(bool xfamily, int i) const {  // swap var i, i+1 (1-based)
        MultiPoly out(m_, n_);
        int base = xfamily ? 0 : m_;
        for (const auto& [e, c] : terms_) {
            std::vector<int> e2(e);
            std::swap(e2[base + i - 1], e2[base + i]);
            out.add_term(e2, c);
        }
        return out;
    }

    // Text form like "x1^2*y1 - 3/2*x2"; terms in descending lexicographic
    // exponent order (mirroring the descending-degree polynomial convention),
    // so printing is deterministic and parse(str()) round-trips.
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            Rational mag = c.abs();
            if (out.empty()) {
                if (c.sign() < 0) out += "-";
            } else {
                out += c.sign() < 0 ? " - " : " + ";
            }
            std::string vars;
            for (int i = 0; i < m_ + n_; ++i) {
                if (e[i] == 0) continue;
                if (!vars.empty()) vars += "*";
                vars += (i < m_ ? "x" + std::to_string(i + 1) : "y" + std::to_string(i - m_ + 1));
                if (e[i] > 1) vars += "^" + std::to_string(e[i]);
            }
            if (vars.empty())
                out += mag.str();
            else if (mag == Rational(1))
                out += vars;
            else
                out += mag.str() + "*" + vars;
        }
        return out;
    }

    static MultiPoly parse(const std::string& text, int m, int n) {
        MultiPoly out(m, n);
        if (text == "0") return out;
        if (text.empty()) throw std::invalid_argument("multipoly: empty text");
        std::size_t i = 0;
        int sign = 1;
        if (text[0] == '-' || text[0] == '+') {
            sign = text[0] == '-' ? -1 : 1;
            i = 1;
        }
        while (true) {
            std::size_t j = text.find(' ', i);
            parse_term(text.substr(i, j == std::string::npos ? j : j - i), sign, out);
            if (j == std::string::npos) break;
            if (j + 3 > text.size() || text[j + 2] != ' ' ||
                (text[j + 1] != '+' && text[j + 1] != '-'))
                throw std::invalid_argument("multipoly: malformed text");
            sign = text[j + 1] == '-' ? -1 : 1;
            i = j + 3;
        }
        return out;
    }

private:
    void check(const MultiPoly& o) const {
        if (m_ != o.m_ || n_ != o.n_)
            throw std::invalid_argument("variable count mismatch");
    }

    static void parse_term(const std::string& term, int sign, MultiPoly& out) {
        if (term.empty()) throw std::invalid_argument("multipoly: empty term");
        Rational coeff(1);
        std::vector<int> e(out.m_ + out.n_, 0);
        std::size_t i = 0;
        bool saw_factor = false;
        while (i < term.size()) {
            std::size_t j = term.find('*', i);
            std::string f = term.substr(i, j == std::string::npos ? j : j - i);
            if (f.empty()) throw std::invalid_argument("multipoly: malformed term");
            if (f[0] == 'x' || f[0] == 'y') {
                auto caret = f.find('^');
                int idx = std::stoi(f.substr(1, caret == std::string::npos
                                                    ? std::string::npos
                                                    : caret - 1));
                int exp = caret == std::string::npos ? 1 : std::stoi(f.substr(caret + 1));
                int slot = f[0] == 'x' ? idx - 1 : out.m_ + idx - 1;
                if (slot < 0 || slot >= out.m_ + out.n_ ||
                    (f[0] == 'x' && idx > out.m_) || (f[0] == 'y' && idx > out.n_) || exp < 1)
                    throw std::invalid_argument("multipoly: bad variable '" + f + "'");
                e[slot] += exp;
            } else {
                if (saw_factor) throw std::invalid_argument("multipoly: malformed term");
                coeff = Rational::parse(f);
            }
            saw_factor = true;
            i = j == std::string::npos ? term.size() : j + 1;
        }
        if (sign < 0) coeff = -coeff;
        out.add_term(e, coeff);
    }

    int m_, n_;
    std::map<std::vector<int>, Rational> terms_;
};

// p_k(x; y) = sum_i x_i^k + (-1)^{k+1} sum_j y_j^k, the supersymmetric power
// sums; these generate the ring of supersymmetric polynomials.
inline MultiPoly supersym_power_sum(int k, int m, int n) {
    if (k < 1) throw std::invalid_argument("power sum degree must be positive");
    MultiPoly p(m, n);
    for (int i = 1; i <= m; ++i) p += MultiPoly::x(m, n, i).pow(k);
    Rational sign = (k % 2 == 1) ? Rational(1) : Rational(-1);
    for (int j = 1; j <= n; ++j) {
        MultiPoly q = MultiPoly::y(m, n, j).pow(k);
        for (const auto& [e, c] : q.terms()) p.add_term(e, c * sign);
    }
    return p;
}

// Supersymmetric = symmetric in the x's and in the y's separately, and the
// substitution x_m = t, y_1 = -t eliminates t entirely.
inline bool is_supersymmetric(const MultiPoly& p) {
    const int m = p.xvars(), n = p.yvars();
    for (int i = 1; i < m; ++i)
        if (p.swap_adjacent(true, i) != p) return false;
    for (int j = 1; j < n; ++j)
        if (p.swap_adjacent(false, j) != p) return false;
    if (m == 0 || n == 0) return true;
    // Substitute: collapse the x_m and y_1 exponents onto a fresh variable t
    // (with the sign (-1)^{y_1 exponent}) and demand that every monomial with
    // positive t-degree cancels.
    std::map<std::vector<int>, Rational> sub;
    for (const auto& [e, c] : p.terms()) {
        std::vector<int> key;
        key.reserve(m + n - 1);
        for (int i = 0; i < m - 1; ++i) key.push_back(e[i]);
        for (int j = 1; j < n; ++j) key.push_back(e[m + j]);
        key.push_back(e[m - 1] + e[m]);  // t-degree
        Rational v = (e[m] % 2 == 0) ? c : -c;
        auto [it, fresh] = sub.emplace(key, v);
        if (!fresh) {
            it->second += v;
            if (it->second.is_zero()) sub.erase(it);
        }
    }
    for (const auto& [key, c] : sub)
        if (key.back() > 0) return false;
    return true;
}

}  // namespace wbr
