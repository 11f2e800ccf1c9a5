#pragma once

// Subspaces of the algebra in a fixed diagram basis: reduced-echelon bases
// with unit pivots over the coefficient field, exact membership tests, and
// containment comparison of two subspaces.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "wbr/algebra.hpp"
#include "wbr/matrix.hpp"

namespace wbr {

enum class SubspaceRelation { equal, a_subset_b, b_subset_a, incomparable };

inline std::string relation_str(SubspaceRelation r) {
    switch (r) {
        case SubspaceRelation::equal: return "equal";
        case SubspaceRelation::a_subset_b: return "A_subset_B";
        case SubspaceRelation::b_subset_a: return "B_subset_A";
        default: return "incomparable";
    }
}

inline std::vector<Scalar> element_coordinates(const AlgebraElement& a,
                                               const std::vector<WalledDiagram>& ambient) {
    std::map<WalledDiagram, int> index;
    for (std::size_t i = 0; i < ambient.size(); ++i)
        index.emplace(ambient[i], static_cast<int>(i));
    std::vector<Scalar> v(ambient.size(), a.ring().zero());
    for (const auto& [d, c] : a.terms()) {
        auto it = index.find(d);
        if (it == index.end()) throw std::invalid_argument("diagram outside ambient basis");
        v[it->second] = c;
    }
    return v;
}

inline AlgebraElement element_from_coordinates(const std::vector<Scalar>& v,
                                               const std::vector<WalledDiagram>& ambient,
                                               const Ring& ring) {
    if (v.size() != ambient.size())
        throw std::invalid_argument("coordinate length mismatch");
    WalledShape shape = ambient.empty() ? WalledShape(1, 0) : ambient.front().shape();
    AlgebraElement out(shape, ring);
    for (std::size_t i = 0; i < v.size(); ++i) out.add_term(ambient[i], v[i]);
    return out;
}

class Subspace {
public:
    Subspace(std::vector<WalledDiagram> ambient, Ring ring)
        : ambient_(std::move(ambient)), ring_(std::move(ring)) {}

    static Subspace from_vectors(std::vector<WalledDiagram> ambient, Ring ring,
                                 const std::vector<std::vector<Scalar>>& vectors) {
        Subspace out(std::move(ambient), std::move(ring));
        const int cols = static_cast<int>(out.ambient_.size());
        if (out.ring_.kind() == RingKind::rationals) {
            EchelonCore<detail::RationalDomain> ech(cols);
            for (const auto& v : vectors) {
                if (static_cast<int>(v.size()) != cols)
                    throw std::invalid_argument("coordinate length mismatch");
                ech.insert(detail::to_rational_row(v));
            }
            ech.back_eliminate();
            for (std::size_t i = 0; i < ech.rows().size(); ++i) {
                const auto& row = ech.rows()[i];
                Rational lead = row[ech.pivots()[i]];
                std::vector<Scalar> r;
                r.reserve(cols);
                for (const auto& x : row) r.push_back(out.ring_.from_rational(x / lead));
                out.rows_.push_back(std::move(r));
                out.pivots_.push_back(ech.pivots()[i]);
            }
        } else {
            EchelonCore<detail::PolyDomain> ech(cols);
            for (const auto& v : vectors) {
                if (static_cast<int>(v.size()) != cols)
                    throw std::invalid_argument("coordinate length mismatch");
                ech.insert(detail::to_poly_row(v));
            }
            ech.back_eliminate();
            for (std::size_t i = 0; i < ech.rows().size(); ++i) {
                const auto& row = ech.rows()[i];
                Poly lead = row[ech.pivots()[i]];
                std::vector<Scalar> r;
                r.reserve(cols);
                for (const auto& x : row) r.push_back(Scalar(RatFun(x, lead)));
                out.rows_.push_back(std::move(r));
                out.pivots_.push_back(ech.pivots()[i]);
            }
        }
        return out;
    }

    static Subspace from_elements(const std::vector<WalledDiagram>& ambient, const Ring& ring,
                                  const std::vector<AlgebraElement>& elems) {
        std::vector<std::vector<Scalar>> vectors;
        vectors.reserve(elems.size());
        for (const auto& a : elems) vectors.push_back(element_coordinates(a, ambient));
        return from_vectors(ambient, ring, vectors);
    }

    const std::vector<WalledDiagram>& ambient() const { return ambient_; }
    const Ring& ring() const { return ring_; }
    int dimension() const { return static_cast<int>(rows_.size()); }
    const std::vector<std::vector<Scalar>>& basis() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

    bool contains_vector(std::vector<Scalar> v) const {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            Scalar c = v[pivots_[i]];
            if (c.is_zero()) continue;
            for (std::size_t j = 0; j < v.size(); ++j) v[j] = v[j] - c * rows_[i][j];
        }
        for (const auto& x : v)
            if (!x.is_zero()) return false;
        return true;
    }

    bool contains(const AlgebraElement& a) const {
        return contains_vector(element_coordinates(a, ambient_));
    }

    std::vector<AlgebraElement> elements() const {
        std::vector<AlgebraElement> out;
        out.reserve(rows_.size());
        for (const auto& r : rows_) out.push_back(element_from_coordinates(r, ambient_, ring_));
        return out;
    }

private:
    std::vector<WalledDiagram> ambient_;
    Ring ring_;
    std::vector<std::vector<Scalar>> rows_;  // reduced echelon, unit pivots
    std::vector<int> pivots_;
};

inline SubspaceRelation subspace_relate(const Subspace& A, const Subspace& B) {
    if (A.ambient() != B.ambient() || !(A.ring() == B.ring()))
        throw std::invalid_argument("ambient mismatch");
    bool a_in_b = true, b_in_a = true;
    for (const auto& r : A.basis())
        if (!B.contains_vector(r)) {
            a_in_b = false;
            break;
        }
    for (const auto& r : B.basis())
        if (!A.contains_vector(r)) {
            b_in_a = false;
            break;
        }
    if (a_in_b && b_in_a) return SubspaceRelation::equal;
    if (a_in_b) return SubspaceRelation::a_subset_b;
    if (b_in_a) return SubspaceRelation::b_subset_a;
    return SubspaceRelation::incomparable;
}

}  // namespace wbr
