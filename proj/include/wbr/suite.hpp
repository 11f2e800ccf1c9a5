#pragma once

// Structure theory of the class-sum commutator system at shapes (r, 1): the
// single-arc diagram family carrying all nonzero coefficients, the companion
// diagrams sigma_x and z_x that factor each family member through the
// contraction generator, and the rank argument showing the system determines
// the centre dimension p(r) + p(r-1).

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "wbr/cycle_type.hpp"
#include "wbr/matrix.hpp"
#include "wbr/partitions.hpp"

namespace wbr {

// At (r, 1) a diagram with one arc pair has a northern arc (north, r+1) and a
// southern arc (south, r+1); all other lines propagate.  prop[k] is the
// bottom column of the line from top column k (1-based, 0 at arc columns).
struct ArcFamilyInfo {
    int north = 0;
    int south = 0;
    std::vector<int> prop;
};

inline std::optional<ArcFamilyInfo> arc_family_info(const WalledDiagram& d) {
    const WalledShape& shape = d.shape();
    if (shape.s != 1) return std::nullopt;
    const int n = shape.n();
    if (d.partner(n - 1) >= n) return std::nullopt;  // right top column must arc left
    ArcFamilyInfo info;
    info.north = d.partner(n - 1) + 1;
    info.south = d.partner(2 * n - 1) - n + 1;
    info.prop.assign(n + 1, 0);
    for (int k = 1; k < n; ++k) {
        if (k == info.north) continue;
        info.prop[k] = d.partner(k - 1) - n + 1;
    }
    return info;
}

inline WalledDiagram arc_family_diagram(const WalledShape& shape, const ArcFamilyInfo& info) {
    const int n = shape.n();
    std::vector<std::pair<int, int>> edges = {{info.north - 1, n - 1},
                                              {n + info.south - 1, 2 * n - 1}};
    for (int k = 1; k < n; ++k)
        if (k != info.north) edges.emplace_back(k - 1, n + info.prop[k] - 1);
    return WalledDiagram(shape, edges);
}

// For x with northern arc (r, r+1) and southern arc (i, r+1), i != r:
// sigma_x is the permutation sending k to the propagating image f_x(k) for
// k < r, r to i, and fixing r+1.  Then e * sigma_x = x with no closed loop.
inline WalledDiagram sigma_of(const WalledDiagram& x) {
    auto info = arc_family_info(x);
    const int r = x.shape().r;
    if (!info || info->north != r || info->south == r)
        throw std::invalid_argument("diagram outside the sigma_x family");
    const int n = x.shape().n();
    std::vector<std::pair<int, int>> edges = {{r - 1, n + info->south - 1},
                                              {n - 1, 2 * n - 1}};
    for (int k = 1; k < r; ++k) edges.emplace_back(k - 1, n + info->prop[k] - 1);
    return WalledDiagram(x.shape(), edges);
}

// z_x moves both arcs of x to column i: northern and southern arcs (i, r+1),
// propagating lines k -> f_x(k) for k != i, r and r -> f_x(i).  Then
// e * z_x = x with no closed loop.
inline WalledDiagram z_of(const WalledDiagram& x) {
    auto info = arc_family_info(x);
    const int r = x.shape().r;
    if (!info || info->north != r || info->south == r)
        throw std::invalid_argument("diagram outside the z_x family");
    const int n = x.shape().n();
    const int i = info->south;
    std::vector<std::pair<int, int>> edges = {{i - 1, n - 1},
                                              {n + i - 1, 2 * n - 1},
                                              {r - 1, n + info->prop[i] - 1}};
    for (int k = 1; k < r; ++k)
        if (k != i) edges.emplace_back(k - 1, n + info->prop[k] - 1);
    return WalledDiagram(x.shape(), edges);
}

struct SuiteCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SuiteReport {
    int r = 0;
    std::string delta;
    long cycle_type_count = 0;
    long lambda_count = 0;
    long nontrivial_types = 0;
    int selected_rank = -1;
    int total_rank = -1;
    std::vector<SuiteCheck> checks;
    bool all_pass = false;

    std::string str() const {
        std::string out = "arc-family suite at r=" + std::to_string(r) +
                          ", s=1, delta=" + delta + "\n";
        for (const auto& c : checks)
            out += std::string(c.pass ? "  [pass] " : "  [FAIL] ") + c.name +
                   (c.detail.empty() ? "" : " -- " + c.detail) + "\n";
        out += "  cycle types: " + std::to_string(cycle_type_count) +
               ", bipartitions: " + std::to_string(lambda_count) +
               ", selected rank: " + std::to_string(selected_rank) +
               ", total rank: " + std::to_string(total_rank) + "\n";
        return out;
    }
};

namespace detail {

// The part containing N in a one-arc type at (r, 1) canonicalizes to
// "L...LNS"; returns its L-count, or -1 if the type has no such part.
inline int ns_part_lcount(const CycleType& mu) {
    for (const auto& p : mu.parts())
        if (p.count('N') == 1) {
            std::string expect(p.size() - 2, 'L');
            expect += "NS";
            if (p.str() != expect) return -2;  // N-part of an unexpected form
            return static_cast<int>(p.size()) - 2;
        }
    return -1;
}

inline std::vector<PartWord> parts_without_n(const CycleType& mu) {
    std::vector<PartWord> out;
    for (const auto& p : mu.parts())
        if (p.count('N') == 0) out.push_back(p);
    return out;
}

inline bool same_parts(std::vector<PartWord> a, std::vector<PartWord> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

}  // namespace detail

// Runs the full battery of structural checks on the class-sum commutator
// system E_mu = C_mu e - e C_mu at shape (r, 1).
inline SuiteReport suite_r1(int r, const Ring& ring, int enum_bound = 7) {
    if (r < 1) throw std::invalid_argument("invalid shape");
    if (r > 5) throw std::invalid_argument("suite supports r <= 5 only");
    WalledShape shape(r, 1);
    const int n = shape.n();
    SuiteReport rep;
    rep.r = r;
    rep.delta = ring.delta_str();

    auto basis = enumerate_diagrams(shape, enum_bound);
    auto census = cycle_type_census(shape, enum_bound);
    const int C = static_cast<int>(census.size());
    rep.cycle_type_count = C;
    rep.lambda_count = static_cast<long>(bipartitions(shape).size());

    WalledDiagram e_diag = gen_e(shape);
    AlgebraElement e = AlgebraElement::from_diagram(e_diag, ring);
    std::vector<AlgebraElement> sums, comms;
    for (const auto& [mu, cls] : census) {
        AlgebraElement sum(shape, ring);
        for (const auto& d : cls) sum.add_term(d, ring.one());
        comms.push_back(sum * e - e * sum);
        sums.push_back(std::move(sum));
    }

    auto add = [&](const std::string& name, bool pass, const std::string& detail = "") {
        rep.checks.push_back({name, pass, detail});
    };

    // (a) every class is stable under the flip anti-automorphism
    {
        bool ok = true;
        std::string bad;
        for (const auto& [mu, cls] : census) {
            std::set<WalledDiagram> int_set(cls.begin(), cls.end());
            for (const auto& d : cls)
                if (!int_set.count(flip(d))) {
                    ok = false;
                    bad = mu.str();
                    break;
                }
            if (!ok) break;
        }
        add("classes closed under flip", ok, bad);
    }

    // (b) flip antisymmetry of every commutator, so self-flipped diagrams
    // carry coefficient zero
    {
        bool ok = true;
        for (const auto& cm : comms)
            if (flip(cm) != -cm) ok = false;
        bool self_zero = true;
        for (const auto& cm : comms)
            for (const auto& [d, c] : cm.terms())
                if (d == flip(d) && !c.is_zero()) self_zero = false;
        add("commutators flip-antisymmetric", ok && self_zero);
    }

    // support: nonzero coefficients only on diagrams whose northern or
    // southern arc sits at the wall columns (r, r+1)
    {
        bool ok = true;
        for (const auto& cm : comms)
            for (const auto& [d, c] : cm.terms()) {
                auto info = arc_family_info(d);
                if (!info || (info->north != r && info->south != r)) ok = false;
            }
        add("commutator support in the wall-arc family", ok);
    }

    // (c) vanishing on diagrams with both arcs at the wall columns
    {
        bool ok = true;
        for (const auto& d : basis) {
            auto info = arc_family_info(d);
            if (!info || info->north != r || info->south != r) continue;
            for (const auto& cm : comms)
                if (!cm.coeff(d).is_zero()) ok = false;
        }
        add("vanishing on wall-block diagrams", ok);
    }

    // (d) coefficients constant under conjugation by permutations fixing
    // column r (and the right column)
    {
        bool ok = true;
        std::vector<WalledDiagram> small_sigmas;
        for (const auto& sigma : enumerate_wall_permutations(shape))
            if (sigma.partner(r - 1) == n + r - 1) small_sigmas.push_back(sigma);
        for (const auto& d : basis) {
            auto info = arc_family_info(d);
            if (!info || info->north != r) continue;
            for (const auto& sigma : small_sigmas) {
                WalledDiagram y = conjugate(sigma, d);
                for (const auto& cm : comms)
                    if (!(cm.coeff(d) == cm.coeff(y))) ok = false;
            }
        }
        add("conjugation invariance of coefficients", ok);
    }

    // (e) sigma_x and z_x: factorizations through e, the induced cycle-type
    // transformations, and uniqueness among all preimages
    {
        bool ok = true;
        std::string bad;
        for (const auto& x : basis) {
            auto info = arc_family_info(x);
            if (!info || info->north != r || info->south == r) continue;
            WalledDiagram sx = sigma_of(x), zx = z_of(x);
            auto [esx, l1] = multiply(e_diag, sx);
            auto [ezx, l2] = multiply(e_diag, zx);
            if (!(esx == x) || l1 != 0 || !(ezx == x) || l2 != 0) {
                ok = false;
                bad = "factorization at " + x.str();
                break;
            }
            CycleType cx = cycle_type(x), csx = cycle_type(sx), czx = cycle_type(zx);
            int a = detail::ns_part_lcount(cx);
            if (a < 1) {
                ok = false;
                bad = "unexpected type " + cx.str();
                break;
            }
            auto rest = detail::parts_without_n(cx);
            auto with = [&](const std::string& extra1, const std::string& extra2) {
                std::vector<PartWord> v = rest;
                v.push_back(PartWord::canonical(extra1));
                if (!extra2.empty()) v.push_back(PartWord::canonical(extra2));
                return v;
            };
            if (!detail::same_parts(csx.parts(), with(std::string(a + 1, 'L'), "R"))) {
                ok = false;
                bad = "sigma_x type at " + x.str() + ": " + csx.str();
                break;
            }
            if (!detail::same_parts(czx.parts(), with(std::string(a, 'L'), "NS"))) {
                ok = false;
                bad = "z_x type at " + x.str() + ": " + czx.str();
                break;
            }
            // preimage scan: sigma_x is the only loop-free preimage without
            // arc letters; z_x the only one whose N-part is the bare NS
            int perm_preimages = 0, trivial_ns_preimages = 0;
            for (const auto& y : basis) {
                auto [ey, l] = multiply(e_diag, y);
                if (!(ey == x) || l != 0) continue;
                CycleType cy = cycle_type(y);
                int k = detail::ns_part_lcount(cy);
                if (k == -1) {
                    ++perm_preimages;
                    if (!(y == sx)) ok = false;
                } else if (k == 0) {
                    ++trivial_ns_preimages;
                    if (!(y == zx)) ok = false;
                }
            }
            if (perm_preimages != 1 || trivial_ns_preimages != 1) {
                ok = false;
                bad = "preimage count at " + x.str();
                break;
            }
        }
        add("sigma_x and z_x factorizations unique", ok, bad);
    }

    // (f) one equation per type with a non-trivial part: independent rows,
    // rank = #types - #bipartitions, matching the full system rank
    {
        std::map<CycleType, WalledDiagram> selected;
        for (const auto& d : basis) {
            auto info = arc_family_info(d);
            if (!info || info->north != r || info->south == r) continue;
            selected.emplace(cycle_type(d), d);
        }
        long nontrivial = 0;
        bool cover = true;
        for (const auto& [mu, cls] : census)
            if (!mu.all_parts_trivial()) {
                ++nontrivial;
                if (!selected.count(mu)) cover = false;
            }
        rep.nontrivial_types = nontrivial;
        add("non-trivial types covered by the arc family",
            cover && static_cast<long>(selected.size()) == nontrivial);

        RowSpace sel_rows(C, ring);
        for (const auto& [mu, x] : selected) {
            std::vector<Scalar> row;
            row.reserve(C);
            for (const auto& cm : comms) row.push_back(cm.coeff(x));
            sel_rows.insert(row);
        }
        rep.selected_rank = sel_rows.rank();

        std::map<WalledDiagram, int> index;
        for (std::size_t i = 0; i < basis.size(); ++i)
            index.emplace(basis[i], static_cast<int>(i));
        ExactMatrix M(static_cast<int>(basis.size()), C, ring);
        for (int j = 0; j < C; ++j)
            for (const auto& [d, c] : comms[j].terms()) M.at(index.at(d), j) = c;
        rep.total_rank = rank_kernel(M).rank;

        long expect = rep.cycle_type_count - rep.lambda_count;
        add("selected equations independent",
            rep.selected_rank == static_cast<int>(selected.size()) &&
                rep.selected_rank == expect,
            "rank " + std::to_string(rep.selected_rank) + ", expected " +
                std::to_string(expect));
        add("full system rank matches",
            rep.total_rank == expect && nontrivial == expect);
    }

    rep.all_pass = true;
    for (const auto& c : rep.checks) rep.all_pass = rep.all_pass && c.pass;
    return rep;
}

}  // namespace wbr
