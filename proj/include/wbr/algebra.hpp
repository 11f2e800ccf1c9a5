#pragma once

// The linear span of walled Brauer diagrams over a fixed coefficient ring:
// finitely supported diagram -> scalar maps with bilinear multiplication
// (each closed middle loop contributing one factor of the loop parameter),
// the flip anti-automorphism, and commutators.

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wbr/diagram.hpp"
#include "wbr/scalar.hpp"

namespace wbr {

class AlgebraElement {
public:
    AlgebraElement(WalledShape shape, Ring ring) : shape_(shape), ring_(ring) {}

    static AlgebraElement unit(const WalledShape& shape, const Ring& ring) {
        AlgebraElement e(shape, ring);
        e.add_term(identity(shape), ring.one());
        return e;
    }
    static AlgebraElement from_diagram(const WalledDiagram& d, const Ring& ring) {
        AlgebraElement e(d.shape(), ring);
        e.add_term(d, ring.one());
        return e;
    }

    const WalledShape& shape() const { return shape_; }
    const Ring& ring() const { return ring_; }
    const std::map<WalledDiagram, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int term_count() const { return static_cast<int>(terms_.size()); }

    Scalar coeff(const WalledDiagram& d) const {
        auto it = terms_.find(d);
        return it == terms_.end() ? ring_.zero() : it->second;
    }

    void add_term(const WalledDiagram& d, const Scalar& c) {
        if (d.shape() != shape_) throw std::invalid_argument("shape mismatch");
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.emplace(d, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    AlgebraElement operator-() const {
        AlgebraElement out(shape_, ring_);
        for (const auto& [d, c] : terms_) out.terms_.emplace(d, -c);
        return out;
    }

    friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
        a.check(b);
        AlgebraElement out = a;
        for (const auto& [d, c] : b.terms_) out.add_term(d, c);
        return out;
    }
    friend AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) {
        return a + (-b);
    }
    AlgebraElement& operator+=(const AlgebraElement& o) { return *this = *this + o; }
    AlgebraElement& operator-=(const AlgebraElement& o) { return *this = *this - o; }

    friend AlgebraElement operator*(const Scalar& c, const AlgebraElement& a) {
        AlgebraElement out(a.shape_, a.ring_);
        for (const auto& [d, x] : a.terms_) out.add_term(d, c * x);
        return out;
    }

    friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
        a.check(b);
        AlgebraElement out(a.shape_, a.ring_);
        for (const auto& [d1, c1] : a.terms_) {
            for (const auto& [d2, c2] : b.terms_) {
                auto [d, loops] = multiply(d1, d2);
                out.add_term(d, c1 * c2 * a.ring_.delta().pow(loops));
            }
        }
        return out;
    }
    AlgebraElement& operator*=(const AlgebraElement& o) { return *this = *this * o; }

    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
        a.check(b);
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const AlgebraElement& a, const AlgebraElement& b) {
        return !(a == b);
    }

    // Terms are "(<scalar>)*<diagram>" joined by " + " in diagram order.
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [d, c] : terms_) {
            if (!out.empty()) out += " + ";
            out += "(" + c.str() + ")*" + d.str();
        }
        return out;
    }

    static AlgebraElement parse(const std::string& text, const Ring& ring) {
        if (text == "0") throw std::invalid_argument("element parse needs a shape for zero");
        return parse_impl(text, ring, nullptr);
    }
    static AlgebraElement parse(const std::string& text, const Ring& ring,
                                const WalledShape& shape) {
        if (text == "0") return AlgebraElement(shape, ring);
        return parse_impl(text, ring, &shape);
    }

private:
    void check(const AlgebraElement& o) const {
        if (shape_ != o.shape_) throw std::invalid_argument("shape mismatch");
        if (ring_ != o.ring_) throw std::invalid_argument("ring mismatch");
    }

    static AlgebraElement parse_impl(const std::string& text, const Ring& ring,
                                     const WalledShape* shape) {
        std::vector<std::pair<WalledDiagram, Scalar>> parsed;
        std::size_t i = 0;
        while (i < text.size()) {
            if (text[i] != '(') throw std::invalid_argument("malformed element text");
            int depth = 0;
            std::size_t j = i;
            for (; j < text.size(); ++j) {
                if (text[j] == '(') ++depth;
                if (text[j] == ')' && --depth == 0) break;
            }
            if (depth != 0 || j + 1 >= text.size() || text[j + 1] != '*')
                throw std::invalid_argument("malformed element text");
            Scalar c = ring.parse(text.substr(i + 1, j - i - 1));
            // The diagram token contains no spaces, so the next space (if any)
            // begins the " + " separator.
            std::size_t k = text.find(' ', j + 2);
            std::string dtext =
                text.substr(j + 2, k == std::string::npos ? k : k - (j + 2));
            parsed.emplace_back(WalledDiagram::parse(dtext), c);
            if (k == std::string::npos) {
                i = text.size();
            } else {
                if (text.compare(k, 3, " + ") != 0)
                    throw std::invalid_argument("malformed element text");
                i = k + 3;
            }
        }
        if (parsed.empty()) throw std::invalid_argument("malformed element text");
        AlgebraElement out(shape ? *shape : parsed.front().first.shape(), ring);
        for (auto& [d, c] : parsed) out.add_term(d, c);
        return out;
    }

    WalledShape shape_;
    Ring ring_;
    std::map<WalledDiagram, Scalar> terms_;
};

inline AlgebraElement commutator(const AlgebraElement& a, const AlgebraElement& b) {
    return a * b - b * a;
}

// Linear extension of the diagram flip; an anti-automorphism of the algebra.
inline AlgebraElement flip(const AlgebraElement& a) {
    AlgebraElement out(a.shape(), a.ring());
    for (const auto& [d, c] : a.terms()) out.add_term(flip(d), c);
    return out;
}

// The generating set {s_1,..,s_{r-1}, s_{r+1},..,s_{r+s-1}} plus e when both
// sides of the wall are nonempty (degenerate shapes are plain symmetric-group
// algebras and have no e).
inline std::vector<WalledDiagram> generator_diagrams(const WalledShape& shape) {
    std::vector<WalledDiagram> gens;
    for (int i = 1; i < shape.n(); ++i)
        if (i != shape.r) gens.push_back(gen_s(shape, i));
    if (shape.r >= 1 && shape.s >= 1) gens.push_back(gen_e(shape));
    return gens;
}

}  // namespace wbr
