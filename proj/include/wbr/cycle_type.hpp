#pragma once

// Walled generalized cycle types: overlay the vertical identifications Ti-Bi
// on a diagram, traverse the resulting closed loops, and record one letter per
// diagram edge (N northern arc, S southern arc, L/R propagating line left or
// right of the wall).  Each loop's word is canonicalized up to rotation and
// reversal; the multiset of words classifies diagrams up to conjugation by
// wall-respecting permutations.

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wbr/algebra.hpp"
#include "wbr/diagram.hpp"
#include "wbr/partitions.hpp"

namespace wbr {

class PartWord {
public:
    // Canonical form: lexicographic minimum (L < N < R < S) over all cyclic
    // rotations of the word and of the reversed word.  Reversal does NOT
    // exchange N and S: that choice keeps {NS} ~ {SN} while leaving words like
    // NSNRSL and NSLNRS distinct, as required.
    static PartWord canonical(const std::string& raw) {
        if (raw.empty()) throw std::invalid_argument("empty part word");
        for (char c : raw)
            if (c != 'L' && c != 'N' && c != 'R' && c != 'S')
                throw std::invalid_argument("foreign letter in part word");
        std::string best;
        std::string w = raw;
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t i = 0; i < w.size(); ++i) {
                std::string rot = w.substr(i) + w.substr(0, i);
                if (best.empty() || rot < best) best = rot;
            }
            std::reverse(w.begin(), w.end());
        }
        PartWord p;
        p.w_ = best;
        return p;
    }

    const std::string& str() const { return w_; }
    int count(char letter) const {
        return static_cast<int>(std::count(w_.begin(), w_.end(), letter));
    }
    int size() const { return static_cast<int>(w_.size()); }

    friend bool operator==(const PartWord&, const PartWord&) = default;
    auto operator<=>(const PartWord&) const = default;

private:
    std::string w_;
};

// Trivial parts: a run of L's, a run of R's, or the two-letter word NS.
inline bool is_trivial_part(const PartWord& p) {
    const std::string& w = p.str();
    if (w == "NS") return true;
    return w.find_first_not_of('L') == std::string::npos ||
           w.find_first_not_of('R') == std::string::npos;
}

class CycleType {
public:
    CycleType(const WalledShape& shape, std::vector<PartWord> parts)
        : shape_(shape), parts_(std::move(parts)) {
        std::sort(parts_.begin(), parts_.end());
        int nn = 0, ss = 0, ll = 0, rr = 0;
        for (const auto& p : parts_) {
            nn += p.count('N');
            ss += p.count('S');
            ll += p.count('L');
            rr += p.count('R');
        }
        if (nn != ss || nn > std::min(shape.r, shape.s) || ll != shape.r - nn ||
            rr != shape.s - nn)
            throw std::invalid_argument("type does not fit shape");
        t_ = nn;
    }

    const WalledShape& shape() const { return shape_; }
    const std::vector<PartWord>& parts() const { return parts_; }
    int t() const { return t_; }  // number of N's = number of S's

    bool all_parts_trivial() const {
        return std::all_of(parts_.begin(), parts_.end(),
                           [](const PartWord& p) { return is_trivial_part(p); });
    }

    friend bool operator==(const CycleType& a, const CycleType& b) {
        return a.shape_ == b.shape_ && a.parts_ == b.parts_;
    }
    friend auto operator<=>(const CycleType& a, const CycleType& b) {
        if (auto c = a.shape_ <=> b.shape_; c != 0) return c;
        return a.parts_ <=> b.parts_;
    }

    std::string str() const {
        std::string out;
        for (const auto& p : parts_) {
            if (!out.empty()) out += "+";
            out += p.str();
        }
        return out;
    }

    static CycleType parse(const std::string& text, const WalledShape& shape) {
        std::vector<PartWord> parts;
        std::size_t i = 0;
        while (i <= text.size()) {
            auto j = text.find('+', i);
            parts.push_back(
                PartWord::canonical(text.substr(i, j == std::string::npos ? j : j - i)));
            if (j == std::string::npos) break;
            i = j + 1;
        }
        return CycleType(shape, std::move(parts));
    }

private:
    WalledShape shape_;
    std::vector<PartWord> parts_;
    int t_ = 0;
};

inline CycleType cycle_type(const WalledDiagram& d) {
    const int n = d.shape().n();
    auto mirror = [n](int v) { return v < n ? v + n : v - n; };
    std::vector<char> visited(2 * n, 0);
    std::vector<PartWord> parts;
    for (int v = 0; v < 2 * n; ++v) {
        if (visited[v]) continue;
        std::string word;
        int cur = v;
        do {
            int u = d.partner(cur);
            visited[cur] = visited[u] = 1;
            if (cur < n && u < n)
                word += 'N';
            else if (cur >= n && u >= n)
                word += 'S';
            else
                word += (std::min(cur, u) < d.shape().r) ? 'L' : 'R';
            cur = mirror(u);  // cross to the other row and continue the loop
        } while (cur != v);
        parts.push_back(PartWord::canonical(word));
    }
    return CycleType(d.shape(), std::move(parts));
}

// All cycle types of a shape together with their diagram classes B_mu,
// deterministically ordered by type.
inline std::vector<std::pair<CycleType, std::vector<WalledDiagram>>> cycle_type_census(
    const WalledShape& shape, int bound = 7) {
    std::map<CycleType, std::vector<WalledDiagram>> classes;
    for (const auto& d : enumerate_diagrams(shape, bound))
        classes[cycle_type(d)].push_back(d);
    return {classes.begin(), classes.end()};
}

inline std::vector<CycleType> enumerate_cycle_types(const WalledShape& shape, int bound = 7) {
    std::vector<CycleType> out;
    for (const auto& [type, cls] : cycle_type_census(shape, bound)) out.push_back(type);
    return out;
}

// Sum of all diagrams with the given cycle type, each with coefficient 1.
inline AlgebraElement class_sum(const CycleType& mu, const Ring& ring, int bound = 7) {
    for (const auto& [type, cls] : cycle_type_census(mu.shape(), bound)) {
        if (type == mu) {
            AlgebraElement out(mu.shape(), ring);
            for (const auto& d : cls) out.add_term(d, ring.one());
            return out;
        }
    }
    throw std::invalid_argument("unknown type");
}

enum class ConjugacyMode { cycle_type, brute_force };

// Conjugacy under S_r x S_s: either compare cycle types or search all
// wall-respecting permutations directly.
inline bool is_conjugate(const WalledDiagram& d1, const WalledDiagram& d2, ConjugacyMode mode,
                         long bound = 720) {
    if (d1.shape() != d2.shape()) throw std::invalid_argument("shape mismatch");
    if (mode == ConjugacyMode::cycle_type) return cycle_type(d1) == cycle_type(d2);
    long group = 1;
    for (int i = 2; i <= d1.shape().r; ++i) group *= i;
    for (int i = 2; i <= d1.shape().s; ++i) group *= i;
    if (group > bound) throw std::invalid_argument("conjugacy search too large");
    for (const auto& sigma : enumerate_wall_permutations(d1.shape()))
        if (conjugate(sigma, d1) == d2) return true;
    return false;
}

// For a type with only trivial parts, the bipartition (L-run lengths, R-run
// lengths, number of NS parts); none otherwise.
inline std::optional<Bipartition> bipartition_of_type(const CycleType& mu) {
    std::vector<int> lambda, mupart;
    int k = 0;
    for (const auto& p : mu.parts()) {
        if (!is_trivial_part(p)) return std::nullopt;
        if (p.str() == "NS")
            ++k;
        else if (p.str()[0] == 'L')
            lambda.push_back(p.size());
        else
            mupart.push_back(p.size());
    }
    std::sort(lambda.rbegin(), lambda.rend());
    std::sort(mupart.rbegin(), mupart.rend());
    return Bipartition{lambda, mupart, k};
}

// The evident inverse: build the trivial-parts type L^{lambda_1},...,R^{mu_1},
// ...,NS,...,NS of a bipartition.
inline CycleType type_of_bipartition(const Bipartition& bp, const WalledShape& shape) {
    std::vector<PartWord> parts;
    for (int a : bp.lambda) parts.push_back(PartWord::canonical(std::string(a, 'L')));
    for (int b : bp.mu) parts.push_back(PartWord::canonical(std::string(b, 'R')));
    for (int i = 0; i < bp.k; ++i) parts.push_back(PartWord::canonical("NS"));
    return CycleType(shape, std::move(parts));
}

}  // namespace wbr
