#pragma once

// Coefficient arithmetic for the two supported ground rings:
//   * rationals           — the parameter is a fixed rational number
//   * rational_functions  — the parameter is the indeterminate z, and scalars
//                           live in Q(z)
// A Scalar carries its ring kind and refuses mixed-kind arithmetic.  Rational
// functions are kept reduced (monic denominator, coprime with the numerator)
// and collapse to plain polynomials whenever the denominator is 1, so
// structural equality coincides with mathematical equality.

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

#include "wbr/poly.hpp"
#include "wbr/rational.hpp"

namespace wbr {

class RatFun {
public:
    RatFun() : num_(), den_(Rational(1)) {}
    RatFun(Poly num, Poly den) {
        if (den.is_zero()) throw std::domain_error("ratfun: zero denominator");
        if (num.is_zero()) {
            num_ = Poly();
            den_ = Poly(Rational(1));
            return;
        }
        Poly g = poly_gcd(num, den);
        num = poly_div_exact(num, g);
        den = poly_div_exact(den, g);
        Rational lead = den.leading();
        num_ = num.scaled(Rational(1) / lead);
        den_ = den.scaled(Rational(1) / lead);
    }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_poly() const { return den_.is_one(); }

    friend RatFun operator+(const RatFun& a, const RatFun& b) {
        return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFun operator-(const RatFun& a, const RatFun& b) {
        return RatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFun operator*(const RatFun& a, const RatFun& b) {
        return RatFun(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFun operator/(const RatFun& a, const RatFun& b) {
        if (b.is_zero()) throw std::domain_error("ratfun: division by zero");
        return RatFun(a.num_ * b.den_, a.den_ * b.num_);
    }
    friend bool operator==(const RatFun& a, const RatFun& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string str() const { return "(" + num_.str() + ")/(" + den_.str() + ")"; }

private:
    Poly num_, den_;
};

enum class RingKind { rationals, rational_functions };

class Scalar;

class Ring {
public:
    static Ring rationals(const Rational& delta) { return Ring(RingKind::rationals, delta); }
    static Ring generic() { return Ring(RingKind::rational_functions, std::nullopt); }

    RingKind kind() const { return kind_; }
    bool is_generic() const { return kind_ == RingKind::rational_functions; }
    const Rational& delta_value() const {
        if (!delta_) throw std::logic_error("ring: generic ring has no fixed parameter");
        return *delta_;
    }

    Scalar zero() const;
    Scalar one() const;
    Scalar delta() const;
    Scalar from_rational(const Rational& r) const;
    Scalar from_int(long n) const;
    Scalar parse(const std::string& text) const;

    // "generic" or the parameter value, as used in reports.
    std::string delta_str() const { return delta_ ? delta_->str() : "generic"; }

    friend bool operator==(const Ring& a, const Ring& b) {
        if (a.kind_ != b.kind_) return false;
        if (a.kind_ == RingKind::rationals) return *a.delta_ == *b.delta_;
        return true;
    }
    friend bool operator!=(const Ring& a, const Ring& b) { return !(a == b); }

private:
    Ring(RingKind kind, std::optional<Rational> delta) : kind_(kind), delta_(std::move(delta)) {}

    RingKind kind_;
    std::optional<Rational> delta_;
};

class Scalar {
public:
    Scalar() : kind_(RingKind::rationals), v_(Rational(0)) {}
    Scalar(RingKind kind, Rational r) : kind_(kind), v_(std::move(r)) {
        if (kind == RingKind::rational_functions) v_ = Poly(std::get<Rational>(v_));
    }
    Scalar(Poly p) : kind_(RingKind::rational_functions), v_(std::move(p)) {}
    Scalar(RatFun f) : kind_(RingKind::rational_functions), v_(std::move(f)) { collapse(); }

    RingKind kind() const { return kind_; }

    bool is_zero() const {
        return std::visit([](const auto& x) { return x.is_zero(); }, v_);
    }
    bool is_one() const { return *this == Scalar(kind_, Rational(1)); }

    const Rational& rat() const { return std::get<Rational>(v_); }
    bool holds_poly() const { return std::holds_alternative<Poly>(v_); }
    const Poly& poly() const { return std::get<Poly>(v_); }
    RatFun ratfun() const {
        if (std::holds_alternative<RatFun>(v_)) return std::get<RatFun>(v_);
        return RatFun(std::get<Poly>(v_), Poly(Rational(1)));
    }

    Scalar operator-() const {
        if (kind_ == RingKind::rationals) return Scalar(kind_, -rat());
        if (holds_poly()) return Scalar(-poly());
        RatFun f = std::get<RatFun>(v_);
        return Scalar(RatFun(-f.num(), f.den()));
    }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        check(a, b);
        if (a.kind_ == RingKind::rationals) return Scalar(a.kind_, a.rat() + b.rat());
        if (a.holds_poly() && b.holds_poly()) return Scalar(a.poly() + b.poly());
        return Scalar(a.ratfun() + b.ratfun());
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        check(a, b);
        if (a.kind_ == RingKind::rationals) return Scalar(a.kind_, a.rat() * b.rat());
        if (a.holds_poly() && b.holds_poly()) return Scalar(a.poly() * b.poly());
        return Scalar(a.ratfun() * b.ratfun());
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) {
        check(a, b);
        if (b.is_zero()) throw std::domain_error("scalar: division by zero");
        if (a.kind_ == RingKind::rationals) return Scalar(a.kind_, a.rat() / b.rat());
        return Scalar(a.ratfun() / b.ratfun());
    }
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        check(a, b);
        if (a.kind_ == RingKind::rationals) return a.rat() == b.rat();
        if (a.holds_poly() != b.holds_poly()) return false;
        if (a.holds_poly()) return a.poly() == b.poly();
        return std::get<RatFun>(a.v_) == std::get<RatFun>(b.v_);
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    Scalar pow(unsigned e) const {
        Scalar acc(kind_, Rational(1)), base = *this;
        for (; e; e >>= 1) {
            if (e & 1) acc *= base;
            if (e > 1) base *= base;
        }
        return acc;
    }

    std::string str() const {
        if (kind_ == RingKind::rationals) return rat().str();
        if (holds_poly()) return poly().str();
        return std::get<RatFun>(v_).str();
    }

private:
    static void check(const Scalar& a, const Scalar& b) {
        if (a.kind_ != b.kind_) throw std::invalid_argument("ring mismatch");
    }

    void collapse() {
        if (std::holds_alternative<RatFun>(v_)) {
            const RatFun& f = std::get<RatFun>(v_);
            if (f.is_poly()) v_ = f.num();
        }
    }

    RingKind kind_;
    std::variant<Rational, Poly, RatFun> v_;
};

inline Scalar Ring::zero() const { return Scalar(kind_, Rational(0)); }
inline Scalar Ring::one() const { return Scalar(kind_, Rational(1)); }
inline Scalar Ring::from_rational(const Rational& r) const { return Scalar(kind_, r); }
inline Scalar Ring::from_int(long n) const { return Scalar(kind_, Rational(n)); }

inline Scalar Ring::delta() const {
    if (kind_ == RingKind::rationals) return Scalar(kind_, *delta_);
    return Scalar(Poly::z());
}

inline Scalar Ring::parse(const std::string& text) const {
    if (kind_ == RingKind::rationals) return Scalar(kind_, Rational::parse(text));
    // "(num)/(den)" with balanced parens, otherwise a plain polynomial.
    if (!text.empty() && text.front() == '(' && text.back() == ')') {
        int depth = 0;
        for (std::size_t i = 0; i < text.size(); ++i) {
            if (text[i] == '(') ++depth;
            if (text[i] == ')') {
                --depth;
                if (depth == 0 && i + 2 < text.size() && text[i + 1] == '/' && text[i + 2] == '(') {
                    Poly num = Poly::parse(text.substr(1, i - 1));
                    Poly den = Poly::parse(text.substr(i + 3, text.size() - i - 4));
                    return Scalar(RatFun(num, den));
                }
            }
        }
    }
    return Scalar(Poly::parse(text));
}

}  // namespace wbr
