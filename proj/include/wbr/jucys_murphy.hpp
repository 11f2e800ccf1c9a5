#pragma once

// Jucys-Murphy elements of the walled Brauer algebra, evaluation of
// multivariate polynomials at them, and the span of supersymmetric power-sum
// monomials evaluated at the full Jucys-Murphy family.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "wbr/algebra.hpp"
#include "wbr/matrix.hpp"
#include "wbr/multipoly.hpp"

namespace wbr {

// L_1 = 0; L_k = sum_{j<k} (j,k) up to the wall; past the wall the
// transpositions on the left are replaced by negated contractions and the
// loop parameter enters as a multiple of the identity.
inline AlgebraElement jm_element(const WalledShape& shape, int k, const Ring& ring) {
    if (k < 1 || k > shape.n()) throw std::invalid_argument("jm index out of range");
    AlgebraElement out(shape, ring);
    if (k == 1) return out;
    if (k <= shape.r) {
        for (int j = 1; j < k; ++j)
            out += AlgebraElement::from_diagram(transposition(shape, j, k), ring);
    } else {
        for (int j = 1; j <= shape.r; ++j)
            out -= AlgebraElement::from_diagram(contraction(shape, j, k), ring);
        for (int j = shape.r + 1; j < k; ++j)
            out += AlgebraElement::from_diagram(transposition(shape, j, k), ring);
        out += ring.delta() * AlgebraElement::unit(shape, ring);
    }
    return out;
}

inline std::vector<AlgebraElement> jm_family(const WalledShape& shape, const Ring& ring) {
    std::vector<AlgebraElement> out;
    out.reserve(shape.n());
    for (int k = 1; k <= shape.n(); ++k) out.push_back(jm_element(shape, k, ring));
    return out;
}

// Substitute x_i -> L_i, y_j -> L_{r+j}; every monomial is expanded as the
// ordered product L_1^{a_1} ... L_{r+s}^{a_{r+s}} so the result is
// well-defined without assuming commutation.
inline AlgebraElement eval_at_jm(const MultiPoly& p, const WalledShape& shape,
                                 const Ring& ring) {
    if (p.xvars() != shape.r || p.yvars() != shape.s)
        throw std::invalid_argument("variable count mismatch");
    auto jm = jm_family(shape, ring);
    AlgebraElement out(shape, ring);
    for (const auto& [exps, c] : p.terms()) {
        AlgebraElement prod = AlgebraElement::unit(shape, ring);
        for (int i = 0; i < shape.n(); ++i)
            for (int a = 0; a < exps[i]; ++a) prod *= jm[i];
        out += ring.from_rational(c) * prod;
    }
    return out;
}

struct SpanResult {
    std::vector<AlgebraElement> elements;  // monomial evaluations, degree order
    int dimension = 0;
    int degree_used = 0;   // largest total degree of evaluated monomials
    bool capped = false;   // degree cap reached before the span stabilized
};

namespace detail {

// Exponent vectors (a_1..a_n) with sum k*a_k == d, emitted in a fixed
// deterministic order.
inline void weighted_compositions(int d, int maxpart, std::vector<int>& cur,
                                  std::vector<std::vector<int>>& out) {
    if (maxpart == 0) {
        if (d == 0) out.push_back(cur);
        return;
    }
    for (int a = 0; a * maxpart <= d; ++a) {
        cur[maxpart - 1] = a;
        weighted_compositions(d - a * maxpart, maxpart - 1, cur, out);
    }
    cur[maxpart - 1] = 0;
}

}  // namespace detail

// Evaluations at the Jucys-Murphy family of all monomials in the power sums
// p_1..p_{r+s} of total degree <= D, where D starts at r+s and grows until
// the span dimension repeats for two consecutive degrees (capped at 2(r+s)).
// The Jucys-Murphy family is verified to commute pairwise first; failure is a
// hard logic error, not a recoverable condition.
inline SpanResult supersym_span(const WalledShape& shape, const Ring& ring,
                                int enum_bound = 7) {
    const int n = shape.n();
    auto basis = enumerate_diagrams(shape, enum_bound);
    auto jm = jm_family(shape, ring);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!commutator(jm[i], jm[j]).is_zero())
                throw std::logic_error("Jucys-Murphy elements fail to commute at " +
                                       shape.str());

    std::map<WalledDiagram, int> index;
    for (std::size_t i = 0; i < basis.size(); ++i)
        index.emplace(basis[i], static_cast<int>(i));
    auto coords = [&](const AlgebraElement& a) {
        std::vector<Scalar> v(basis.size(), ring.zero());
        for (const auto& [d, c] : a.terms()) v[index.at(d)] = c;
        return v;
    };

    // P[k] = p_k evaluated at the family; power cache P[k]^j grown on demand.
    std::vector<std::vector<AlgebraElement>> powers(n + 1);
    for (int k = 1; k <= n; ++k)
        powers[k].push_back(eval_at_jm(supersym_power_sum(k, shape.r, shape.s), shape, ring));
    auto power = [&](int k, int j) -> const AlgebraElement& {
        while (static_cast<int>(powers[k].size()) < j)
            powers[k].push_back(powers[k].back() * powers[k][0]);
        return powers[k][j - 1];
    };

    SpanResult out;
    RowSpace space(static_cast<int>(basis.size()), ring);
    std::vector<int> dims;  // dims[d] = span dimension using degrees <= d
    const int cap = 2 * n;
    for (int d = 0; d <= cap; ++d) {
        std::vector<std::vector<int>> expvecs;
        std::vector<int> cur(n, 0);
        detail::weighted_compositions(d, n, cur, expvecs);
        for (const auto& e : expvecs) {
            AlgebraElement m = AlgebraElement::unit(shape, ring);
            for (int k = 1; k <= n; ++k)
                if (e[k - 1] > 0) m *= power(k, e[k - 1]);
            space.insert(coords(m));
            out.elements.push_back(std::move(m));
        }
        dims.push_back(space.rank());
        out.degree_used = d;
        if (d >= n && dims[d] == dims[d - 1]) break;  // stabilized
    }
    out.dimension = space.rank();
    out.capped = out.degree_used == cap && dims[cap] != dims[cap - 1];
    return out;
}

}  // namespace wbr
