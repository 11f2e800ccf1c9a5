#pragma once

// Integer partitions and the bipartition index set: pairs (lambda, mu) with
// |lambda| = r-k and |mu| = s-k for some 0 <= k <= min(r,s).  Its size counts
// the simple modules of the algebra when it is semisimple and, conjecturally,
// the dimension of its centre in general.

#include <compare>
#include <string>
#include <vector>

#include "wbr/diagram.hpp"

namespace wbr {

// All partitions of n as weakly decreasing sequences, largest part first;
// partitions_of(0) = { () }.
inline std::vector<std::vector<int>> partitions_of(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest, int maxpart) -> void {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

inline long partition_count(int n) { return static_cast<long>(partitions_of(n).size()); }

struct Bipartition {
    std::vector<int> lambda;
    std::vector<int> mu;
    int k = 0;

    friend bool operator==(const Bipartition&, const Bipartition&) = default;
    auto operator<=>(const Bipartition&) const = default;

    std::string str() const {
        auto part = [](const std::vector<int>& p) {
            std::string out = "(";
            for (std::size_t i = 0; i < p.size(); ++i)
                out += (i ? "," : "") + std::to_string(p[i]);
            return out + ")";
        };
        return "(" + part(lambda) + "," + part(mu) + ",k=" + std::to_string(k) + ")";
    }
};

// The index set Lambda_{r,s}, ordered by k ascending and then by the partition
// enumeration order.
inline std::vector<Bipartition> bipartitions(const WalledShape& shape) {
    std::vector<Bipartition> out;
    for (int k = 0; k <= std::min(shape.r, shape.s); ++k)
        for (const auto& lambda : partitions_of(shape.r - k))
            for (const auto& mu : partitions_of(shape.s - k))
                out.push_back({lambda, mu, k});
    return out;
}

}  // namespace wbr
