#pragma once

// Centre computation by two independent routes, the semisimplicity
// criterion, and the conjecture-verification report combining them with the
// supersymmetric span.

#include <chrono>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wbr/cycle_type.hpp"
#include "wbr/jucys_murphy.hpp"
#include "wbr/partitions.hpp"
#include "wbr/subspace.hpp"

namespace wbr {

struct SolveBounds {
    int enumeration = 7;    // max r+s for full diagram enumeration
    long bruteforce = 720;  // max (r+s)! for the generator-kernel route
};

namespace detail {

inline long factorial_checked(int n, long cap) {
    long f = 1;
    for (int i = 2; i <= n; ++i) {
        f *= i;
        if (f > cap) return -1;
    }
    return f;
}

}  // namespace detail

// Centre as the intersection of the commutant kernels of the generators:
// start from the whole algebra and intersect, one generator at a time, the
// kernel of X -> Xg - gX.  Transposition generators keep all coefficients
// constant, so the lone contraction generator is processed last.
inline Subspace centre_bruteforce(const WalledShape& shape, const Ring& ring,
                                  const SolveBounds& bounds = {}) {
    if (detail::factorial_checked(shape.n(), bounds.bruteforce) < 0)
        throw std::invalid_argument("brute-force bound exceeded");
    auto basis = enumerate_diagrams(shape, bounds.enumeration);
    const int N = static_cast<int>(basis.size());
    std::map<WalledDiagram, int> index;
    for (int i = 0; i < N; ++i) index.emplace(basis[i], i);

    // Current kernel candidates as coordinate vectors; initially the basis.
    std::vector<std::vector<Scalar>> K;
    K.reserve(N);
    for (int i = 0; i < N; ++i) {
        std::vector<Scalar> v(N, ring.zero());
        v[i] = ring.one();
        K.push_back(std::move(v));
    }

    for (const auto& g : generator_diagrams(shape)) {
        // Sparse commutator columns of the basis diagrams with g.
        std::vector<std::vector<std::pair<int, Scalar>>> comm(N);
        for (int i = 0; i < N; ++i) {
            auto [dg, l1] = multiply(basis[i], g);
            auto [gd, l2] = multiply(g, basis[i]);
            AlgebraElement c(shape, ring);
            c.add_term(dg, ring.delta().pow(l1));
            c.add_term(gd, -ring.delta().pow(l2));
            for (const auto& [d, x] : c.terms()) comm[i].emplace_back(index.at(d), x);
        }
        ExactMatrix M(N, static_cast<int>(K.size()), ring);
        for (std::size_t j = 0; j < K.size(); ++j)
            for (int i = 0; i < N; ++i) {
                if (K[j][i].is_zero()) continue;
                for (const auto& [row, x] : comm[i]) {
                    Scalar& slot = M.at(row, static_cast<int>(j));
                    slot = slot + K[j][i] * x;
                }
            }
        auto rk = rank_kernel(M);
        std::vector<std::vector<Scalar>> next;
        next.reserve(rk.kernel.size());
        for (const auto& alpha : rk.kernel) {
            std::vector<Scalar> v(N, ring.zero());
            for (std::size_t j = 0; j < K.size(); ++j) {
                if (alpha[j].is_zero()) continue;
                for (int i = 0; i < N; ++i)
                    if (!K[j][i].is_zero()) v[i] = v[i] + alpha[j] * K[j][i];
            }
            next.push_back(std::move(v));
        }
        K.swap(next);
        if (K.empty()) break;
    }
    return Subspace::from_vectors(basis, ring, K);
}

// Centre via the centralizer: a central element is a combination of class
// sums, so it suffices to solve, in the class-sum coefficients a_mu, the
// system given by commutation with the single contraction generator.
inline Subspace centre_reduced(const WalledShape& shape, const Ring& ring,
                               const SolveBounds& bounds = {}) {
    if (shape.r == 0 || shape.s == 0)
        throw std::invalid_argument("no generator e; use brute force");
    auto basis = enumerate_diagrams(shape, bounds.enumeration);
    const int N = static_cast<int>(basis.size());
    std::map<WalledDiagram, int> index;
    for (int i = 0; i < N; ++i) index.emplace(basis[i], i);

    auto census = cycle_type_census(shape, bounds.enumeration);
    const int C = static_cast<int>(census.size());
    AlgebraElement e = AlgebraElement::from_diagram(gen_e(shape), ring);

    std::vector<AlgebraElement> sums;
    sums.reserve(C);
    for (const auto& [mu, cls] : census) {
        AlgebraElement sum(shape, ring);
        for (const auto& d : cls) sum.add_term(d, ring.one());
        sums.push_back(std::move(sum));
    }

    ExactMatrix M(N, C, ring);
    for (int j = 0; j < C; ++j) {
        AlgebraElement comm = sums[j] * e - e * sums[j];
        for (const auto& [d, x] : comm.terms()) M.at(index.at(d), j) = x;
    }
    auto rk = rank_kernel(M);

    std::vector<std::vector<Scalar>> vectors;
    vectors.reserve(rk.kernel.size());
    for (const auto& a : rk.kernel) {
        AlgebraElement z(shape, ring);
        for (int j = 0; j < C; ++j)
            if (!a[j].is_zero()) z += a[j] * sums[j];
        vectors.push_back(element_coordinates(z, basis));
    }
    return Subspace::from_vectors(basis, ring, vectors);
}

// Semisimplicity criterion for B_{r,s}(delta); nullopt means generic delta.
inline bool is_semisimple(const WalledShape& shape, const std::optional<Rational>& delta) {
    if (shape.r == 0 || shape.s == 0) return true;
    if (!delta || !delta->is_integer()) return true;
    if (delta->abs() > Rational(shape.r + shape.s - 2)) return true;
    if (delta->is_zero()) {
        auto rs = std::pair(shape.r, shape.s);
        return rs == std::pair(1, 2) || rs == std::pair(1, 3) ||
               rs == std::pair(2, 1) || rs == std::pair(3, 1);
    }
    return false;
}

inline bool is_semisimple(const WalledShape& shape, const Ring& ring) {
    return is_semisimple(shape, ring.is_generic() ? std::optional<Rational>()
                                                  : std::optional<Rational>(ring.delta_value()));
}

struct ConjectureReport {
    WalledShape shape{1, 0};
    std::string delta;
    int span_dim = 0;
    int centre_dim = 0;
    long lambda_count = 0;
    long cycle_type_count = 0;
    SubspaceRelation relation = SubspaceRelation::incomparable;
    bool semisimple = false;
    bool proven = false;        // the span = centre statement is a theorem here
    bool lower_bound_ok = false;
    bool both_methods = false;
    bool methods_agree = false;
    bool span_capped = false;
    int span_degree = 0;
    std::string verdict;        // "holds" | "exploratory" | "fails"
    long timing_ms = 0;
    std::vector<AlgebraElement> centre_basis;
};

// Compare the span of supersymmetric polynomials in the Jucys-Murphy elements
// with the centre.  "holds"/"fails" are reserved for parameter ranges where
// span = centre is a theorem (semisimple, or one column past the wall); all
// other shapes report "exploratory" and carry the computed relation.
inline ConjectureReport verify_conjecture(const WalledShape& shape, const Ring& ring,
                                          const SolveBounds& bounds = {}) {
    auto start = std::chrono::steady_clock::now();
    ConjectureReport rep;
    rep.shape = shape;
    rep.delta = ring.delta_str();
    rep.semisimple = is_semisimple(shape, ring);
    rep.proven = rep.semisimple || shape.s == 1;
    rep.lambda_count = static_cast<long>(bipartitions(shape).size());
    rep.cycle_type_count =
        static_cast<long>(enumerate_cycle_types(shape, bounds.enumeration).size());

    auto basis = enumerate_diagrams(shape, bounds.enumeration);
    std::optional<Subspace> reduced, brute;
    if (shape.r >= 1 && shape.s >= 1) reduced = centre_reduced(shape, ring, bounds);
    if (detail::factorial_checked(shape.n(), bounds.bruteforce) > 0)
        brute = centre_bruteforce(shape, ring, bounds);
    if (!reduced && !brute) throw std::invalid_argument("brute-force bound exceeded");
    rep.both_methods = reduced && brute;
    rep.methods_agree =
        !rep.both_methods || subspace_relate(*reduced, *brute) == SubspaceRelation::equal;
    const Subspace& centre = reduced ? *reduced : *brute;
    rep.centre_dim = centre.dimension();
    rep.centre_basis = centre.elements();
    rep.lower_bound_ok = rep.centre_dim >= rep.lambda_count;

    SpanResult span = supersym_span(shape, ring, bounds.enumeration);
    rep.span_capped = span.capped;
    rep.span_degree = span.degree_used;
    Subspace S = Subspace::from_elements(basis, ring, span.elements);
    rep.span_dim = S.dimension();
    rep.relation = subspace_relate(S, centre);

    bool span_inside = rep.relation == SubspaceRelation::equal ||
                       rep.relation == SubspaceRelation::a_subset_b;
    bool internal_ok = rep.lower_bound_ok && span_inside && rep.methods_agree;
    if (!internal_ok)
        rep.verdict = "fails";
    else if (rep.proven)
        rep.verdict = (rep.relation == SubspaceRelation::equal &&
                       rep.centre_dim == rep.lambda_count)
                          ? "holds"
                          : "fails";
    else
        rep.verdict = "exploratory";
    rep.timing_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    return rep;
}

}  // namespace wbr
