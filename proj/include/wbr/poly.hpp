#pragma once

// Dense univariate polynomials over the rationals in the formal variable z.
// The coefficient vector never has trailing zeros; the zero polynomial is the
// empty vector and reports degree -1.

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wbr/rational.hpp"

namespace wbr {

class Poly {
public:
    Poly() = default;
    Poly(const Rational& constant) {
        if (!constant.is_zero()) c_.push_back(constant);
    }
    Poly(long constant) : Poly(Rational(constant)) {}
    explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly z() { return Poly(std::vector<Rational>{Rational(0), Rational(1)}); }
    static Poly monomial(const Rational& coeff, int deg) {
        if (coeff.is_zero()) return Poly();
        std::vector<Rational> c(deg + 1);
        c[deg] = coeff;
        return Poly(std::move(c));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == Rational(1); }
    bool is_constant() const { return c_.size() <= 1; }
    Rational coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : Rational(0);
    }
    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }
    const std::vector<Rational>& coeffs() const { return c_; }

    Poly operator-() const {
        Poly out = *this;
        for (auto& c : out.c_) c = -c;
        return out;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
        return Poly(std::move(c));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(c));
    }
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly scaled(const Rational& f) const {
        if (f.is_zero()) return Poly();
        Poly out = *this;
        for (auto& c : out.c_) c *= f;
        return out;
    }

    Rational eval(const Rational& v) const {
        Rational acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v + *it;
        return acc;
    }

    Poly pow(unsigned e) const {
        Poly acc(Rational(1)), base = *this;
        for (; e; e >>= 1) {
            if (e & 1) acc *= base;
            if (e > 1) base *= base;
        }
        return acc;
    }

    std::string str() const {
        if (c_.empty()) return "0";
        std::string out;
        for (int k = degree(); k >= 0; --k) {
            const Rational& c = c_[k];
            if (c.is_zero()) continue;
            if (out.empty()) {
                if (c.sign() < 0) out += "-";
            } else {
                out += c.sign() < 0 ? " - " : " + ";
            }
            out += term_str(c.abs(), k);
        }
        return out;
    }

    // Accepts the str() grammar: signed terms joined by " + " / " - ", each
    // term one of "<rat>", "z", "z^k", "<rat>*z", "<rat>*z^k".
    static Poly parse(const std::string& text) {
        if (text.empty()) throw std::invalid_argument("poly: empty text");
        std::vector<Rational> c;
        std::size_t i = 0;
        int sign = 1;
        if (text[0] == '-' || text[0] == '+') {
            sign = text[0] == '-' ? -1 : 1;
            i = 1;
        }
        while (true) {
            std::size_t j = text.find(' ', i);
            std::string term = text.substr(i, j == std::string::npos ? j : j - i);
            parse_term(term, sign, c);
            if (j == std::string::npos) break;
            if (j + 3 > text.size() || text[j + 2] != ' ' ||
                (text[j + 1] != '+' && text[j + 1] != '-'))
                throw std::invalid_argument("poly: malformed text '" + text + "'");
            sign = text[j + 1] == '-' ? -1 : 1;
            i = j + 3;
        }
        return Poly(std::move(c));
    }

private:
    static std::string term_str(const Rational& mag, int k) {
        if (k == 0) return mag.str();
        std::string var = k == 1 ? "z" : "z^" + std::to_string(k);
        if (mag == Rational(1)) return var;
        return mag.str() + "*" + var;
    }

    static void parse_term(const std::string& term, int sign, std::vector<Rational>& c) {
        if (term.empty()) throw std::invalid_argument("poly: empty term");
        std::string coeff = "1", var = term;
        auto star = term.find('*');
        if (star != std::string::npos) {
            coeff = term.substr(0, star);
            var = term.substr(star + 1);
        } else if (term[0] != 'z') {
            coeff = term;
            var = "";
        }
        int deg = 0;
        if (!var.empty()) {
            if (var == "z") {
                deg = 1;
            } else if (var.rfind("z^", 0) == 0) {
                for (char ch : var.substr(2))
                    if (ch < '0' || ch > '9')
                        throw std::invalid_argument("poly: malformed exponent '" + var + "'");
                if (var.size() == 2) throw std::invalid_argument("poly: malformed exponent");
                deg = std::stoi(var.substr(2));
            } else {
                throw std::invalid_argument("poly: malformed term '" + term + "'");
            }
        }
        Rational r = Rational::parse(coeff);
        if (sign < 0) r = -r;
        if (static_cast<int>(c.size()) <= deg) c.resize(deg + 1);
        c[deg] += r;
    }

    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Rational> c_;
};

// Quotient and remainder over the rationals: a = q*b + r with deg r < deg b.
inline std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("poly: division by zero");
    std::vector<Rational> rem(a.coeffs());
    std::vector<Rational> quo;
    int db = b.degree();
    Rational lb = b.leading();
    if (a.degree() >= db) quo.resize(a.degree() - db + 1);
    for (int k = a.degree(); k >= db; --k) {
        if (static_cast<int>(rem.size()) <= k || rem[k].is_zero()) continue;
        Rational f = rem[k] / lb;
        quo[k - db] = f;
        for (int i = 0; i <= db; ++i) rem[k - db + i] -= f * b.coeff(i);
    }
    return {Poly(std::move(quo)), Poly(std::move(rem))};
}

inline Poly poly_div_exact(const Poly& a, const Poly& b) {
    auto [q, r] = poly_divmod(a, b);
    if (!r.is_zero()) throw std::domain_error("poly: inexact division");
    return q;
}

// Monic gcd (Euclid over the rationals); gcd(0, 0) = 0.
inline Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = poly_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.scaled(Rational(1) / a.leading());
}

// Value of p at z = v.
inline Rational specialize(const Poly& p, const Rational& v) { return p.eval(v); }

// Factors out (z - root) as often as possible: returns (q, m) with
// p = (z - root)^m * q and q(root) != 0.
inline std::pair<Poly, int> divide_out(const Poly& p, const Rational& root) {
    if (p.is_zero()) throw std::domain_error("divide_out: zero polynomial");
    Poly factor = Poly::z() - Poly(root);
    Poly q = p;
    int m = 0;
    while (q.eval(root).is_zero()) {
        q = poly_div_exact(q, factor);
        ++m;
    }
    return {q, m};
}

}  // namespace wbr
