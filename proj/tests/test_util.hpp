#pragma once

// Shared helpers for the test suites: a deterministic RNG and small random
// value generators used by the property checks.

#include <random>
#include <vector>

#include "wbr/algebra.hpp"
#include "wbr/diagram.hpp"
#include "wbr/poly.hpp"
#include "wbr/rational.hpp"

namespace wbrtest {

inline std::mt19937& rng() {
    static std::mt19937 gen(20260825u);
    return gen;
}

inline int rand_int(int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    return d(rng());
}

inline wbr::Rational rand_rational() {
    return wbr::Rational(rand_int(-9, 9), rand_int(1, 9));
}

inline wbr::Poly rand_poly(int max_deg) {
    std::vector<wbr::Rational> c(rand_int(0, max_deg) + 1);
    for (auto& x : c) x = rand_rational();
    return wbr::Poly(std::move(c));
}

// Uniform draw from the full diagram basis of the shape (cached per shape).
inline const std::vector<wbr::WalledDiagram>& diagram_basis(const wbr::WalledShape& shape) {
    static std::map<wbr::WalledShape, std::vector<wbr::WalledDiagram>> cache;
    auto it = cache.find(shape);
    if (it == cache.end()) it = cache.emplace(shape, wbr::enumerate_diagrams(shape)).first;
    return it->second;
}

inline wbr::WalledDiagram rand_diagram(const wbr::WalledShape& shape) {
    const auto& basis = diagram_basis(shape);
    return basis[rand_int(0, static_cast<int>(basis.size()) - 1)];
}

inline wbr::AlgebraElement rand_element(const wbr::WalledShape& shape, const wbr::Ring& ring,
                                        int max_terms = 3) {
    wbr::AlgebraElement out(shape, ring);
    int terms = rand_int(1, max_terms);
    for (int t = 0; t < terms; ++t)
        out.add_term(rand_diagram(shape), ring.from_rational(rand_rational()));
    return out;
}

}  // namespace wbrtest
