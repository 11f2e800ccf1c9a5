#pragma once

// Exact rational arithmetic, backed by GMP's mpq_class.  Values are kept
// canonical at all times: gcd(numerator, denominator) = 1 and denominator > 0.

#include <gmpxx.h>

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace wbr {

class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long n, long d) {
        if (d == 0) throw std::invalid_argument("rational: zero denominator");
        v_ = mpq_class(n, d);
        v_.canonicalize();
    }
    explicit Rational(const mpz_class& n) : v_(n) {}
    Rational(const mpz_class& n, const mpz_class& d) {
        if (d == 0) throw std::invalid_argument("rational: zero denominator");
        v_ = mpq_class(n, d);
        v_.canonicalize();
    }

    // Accepts "p" or "p/q" with optional sign on p; no whitespace, no decimals.
    static Rational parse(const std::string& text) {
        auto slash = text.find('/');
        std::string num = text.substr(0, slash);
        std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
        if (!valid_int(num, true) || !valid_int(den, false))
            throw std::invalid_argument("rational: malformed text '" + text + "'");
        mpz_class n(num), d(den);
        if (d == 0) throw std::invalid_argument("rational: zero denominator");
        return Rational(n, d);
    }

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }
    Rational abs() const { return Rational(::abs(v_)); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    std::string str() const {
        std::string out = v_.get_num().get_str();
        if (v_.get_den() != 1) out += "/" + v_.get_den().get_str();
        return out;
    }

private:
    explicit Rational(const mpq_class& v) : v_(v) {}

    static bool valid_int(const std::string& t, bool allow_sign) {
        std::size_t i = 0;
        if (allow_sign && i < t.size() && (t[i] == '-' || t[i] == '+')) ++i;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    }

    mpq_class v_;
};

inline mpz_class gcd(const mpz_class& a, const mpz_class& b) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline mpz_class lcm(const mpz_class& a, const mpz_class& b) {
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

}  // namespace wbr
