#pragma once

// Walled Brauer diagrams on r+s strands: perfect matchings on the 2(r+s)
// vertices {T1..Tn, B1..Bn} in which propagating lines stay on one side of the
// wall (between columns r and r+1) and arcs cross it.  Vertices are encoded as
// 0..2n-1 with Ti -> i-1 and Bi -> n+i-1, and a diagram is the `partner` array
// of that matching, which makes equality, ordering and hashing canonical.

#include <algorithm>
#include <compare>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wbr {

struct WalledShape {
    int r = 0;
    int s = 0;

    WalledShape(int r_, int s_) : r(r_), s(s_) {
        if (r < 0 || s < 0 || r + s < 1) throw std::invalid_argument("invalid shape");
    }
    int n() const { return r + s; }
    friend bool operator==(const WalledShape&, const WalledShape&) = default;
    auto operator<=>(const WalledShape&) const = default;
    std::string str() const { return "r=" + std::to_string(r) + ",s=" + std::to_string(s); }
};

class WalledDiagram {
public:
    WalledDiagram(WalledShape shape, const std::vector<std::pair<int, int>>& edges)
        : shape_(shape), partner_(2 * shape.n(), -1) {
        const int n = shape_.n();
        for (auto [a, b] : edges) {
            if (a < 0 || b < 0 || a >= 2 * n || b >= 2 * n || a == b ||
                partner_[a] != -1 || partner_[b] != -1)
                throw std::invalid_argument("not a matching");
            partner_[a] = b;
            partner_[b] = a;
        }
        for (int v = 0; v < 2 * n; ++v)
            if (partner_[v] == -1) throw std::invalid_argument("not a matching");
        for (int v = 0; v < 2 * n; ++v)
            if (!edge_ok(shape_, v, partner_[v])) throw std::invalid_argument("wall violation");
    }

    const WalledShape& shape() const { return shape_; }
    int partner(int v) const { return partner_[v]; }
    const std::vector<int>& partners() const { return partner_; }

    // Left side of the wall <=> column index (0-based) below r; valid edges are
    // propagating lines within one side or arcs with one endpoint on each side.
    static bool edge_ok(const WalledShape& shape, int a, int b) {
        const int n = shape.n();
        bool a_top = a < n, b_top = b < n;
        bool a_left = (a_top ? a : a - n) < shape.r;
        bool b_left = (b_top ? b : b - n) < shape.r;
        return (a_top == b_top) ? (a_left != b_left) : (a_left == b_left);
    }

    bool is_permutation() const {
        const int n = shape_.n();
        for (int v = 0; v < n; ++v)
            if (partner_[v] < n) return false;
        return true;
    }

    friend bool operator==(const WalledDiagram& a, const WalledDiagram& b) {
        return a.shape_ == b.shape_ && a.partner_ == b.partner_;
    }
    friend auto operator<=>(const WalledDiagram& a, const WalledDiagram& b) {
        if (auto c = a.shape_ <=> b.shape_; c != 0) return c;
        return a.partner_ <=> b.partner_;
    }

    // Text form: "r=R,s=S;" then edges "t1-b2,..." with endpoints ordered
    // (top row first, then lower column) and edges sorted the same way.
    std::string str() const {
        const int n = shape_.n();
        std::string out = shape_.str() + ";";
        bool first = true;
        for (int v = 0; v < 2 * n; ++v) {
            int u = partner_[v];
            if (u < v) continue;
            if (!first) out += ",";
            first = false;
            out += vertex_str(v) + "-" + vertex_str(u);
        }
        return out;
    }

    static WalledDiagram parse(const std::string& text) {
        auto semi = text.find(';');
        if (semi == std::string::npos || text.rfind("r=", 0) != 0)
            throw std::invalid_argument("malformed diagram text '" + text + "'");
        auto comma = text.find(",s=");
        if (comma == std::string::npos || comma > semi)
            throw std::invalid_argument("malformed diagram text '" + text + "'");
        WalledShape shape(parse_uint(text.substr(2, comma - 2)),
                          parse_uint(text.substr(comma + 3, semi - comma - 3)));
        std::vector<std::pair<int, int>> edges;
        std::size_t i = semi + 1;
        while (i < text.size()) {
            auto j = text.find(',', i);
            std::string tok = text.substr(i, j == std::string::npos ? j : j - i);
            auto dash = tok.find('-');
            if (dash == std::string::npos)
                throw std::invalid_argument("malformed diagram text '" + text + "'");
            edges.emplace_back(parse_vertex(tok.substr(0, dash), shape),
                               parse_vertex(tok.substr(dash + 1), shape));
            i = j == std::string::npos ? text.size() : j + 1;
        }
        return WalledDiagram(shape, edges);
    }

private:
    std::string vertex_str(int v) const {
        const int n = shape_.n();
        return v < n ? "t" + std::to_string(v + 1) : "b" + std::to_string(v - n + 1);
    }

    static int parse_uint(const std::string& t) {
        if (t.empty()) throw std::invalid_argument("malformed diagram text");
        for (char c : t)
            if (c < '0' || c > '9') throw std::invalid_argument("malformed diagram text");
        return std::stoi(t);
    }

    static int parse_vertex(const std::string& t, const WalledShape& shape) {
        if (t.size() < 2 || (t[0] != 't' && t[0] != 'b'))
            throw std::invalid_argument("malformed diagram text");
        int i = parse_uint(t.substr(1));
        if (i < 1 || i > shape.n()) throw std::invalid_argument("not a matching");
        return t[0] == 't' ? i - 1 : shape.n() + i - 1;
    }

    WalledShape shape_;
    std::vector<int> partner_;
};

inline WalledDiagram identity(const WalledShape& shape) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < shape.n(); ++i) edges.emplace_back(i, shape.n() + i);
    return WalledDiagram(shape, edges);
}

// Transposition of columns a < b on one side of the wall (1-based).
inline WalledDiagram transposition(const WalledShape& shape, int a, int b) {
    if (a < 1 || b > shape.n() || a >= b) throw std::invalid_argument("invalid transposition");
    if ((a <= shape.r) != (b <= shape.r)) throw std::invalid_argument("wall violation");
    const int n = shape.n();
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= n; ++i) {
        int target = i == a ? b : i == b ? a : i;
        edges.emplace_back(i - 1, n + target - 1);
    }
    return WalledDiagram(shape, edges);
}

// Adjacent transposition s_i; i = r is forbidden (it would cross the wall).
inline WalledDiagram gen_s(const WalledShape& shape, int i) {
    if (i < 1 || i >= shape.n() || i == shape.r)
        throw std::invalid_argument("generator index crosses wall");
    return transposition(shape, i, i + 1);
}

// Contraction e_{j,k}: northern arc Tj-Tk and southern arc Bj-Bk (1-based),
// identity elsewhere; requires j left of the wall and k right of it.
inline WalledDiagram contraction(const WalledShape& shape, int j, int k) {
    if (j < 1 || j > shape.r || k <= shape.r || k > shape.n())
        throw std::invalid_argument("invalid contraction");
    const int n = shape.n();
    std::vector<std::pair<int, int>> edges = {{j - 1, k - 1}, {n + j - 1, n + k - 1}};
    for (int i = 1; i <= n; ++i)
        if (i != j && i != k) edges.emplace_back(i - 1, n + i - 1);
    return WalledDiagram(shape, edges);
}

inline WalledDiagram gen_e(const WalledShape& shape) {
    if (shape.r == 0 || shape.s == 0) throw std::invalid_argument("no wall-adjacent pair");
    return contraction(shape, shape.r, shape.r + 1);
}

// Concatenation: d1 above d2, middle rows identified.  Returns the resulting
// diagram and the number of closed middle loops (each contributes a factor of
// the loop parameter).  Every diagram edge is traversed at most once.
inline std::pair<WalledDiagram, int> multiply(const WalledDiagram& d1, const WalledDiagram& d2) {
    if (d1.shape() != d2.shape()) throw std::invalid_argument("shape mismatch");
    const int n = d1.shape().n();
    std::vector<int> endpoint(2 * n, -1);
    std::vector<char> seen(n, 0);  // middle columns touched by a through-path

    for (int v = 0; v < 2 * n; ++v) {
        if (endpoint[v] != -1) continue;
        bool in_top = v < n;  // walking inside d1 (true) or d2 (false)
        int pos = v;
        int w;
        while (true) {
            int u = in_top ? d1.partner(pos) : d2.partner(pos);
            if (in_top && u < n) { w = u; break; }
            if (!in_top && u >= n) { w = u; break; }
            int c = in_top ? u - n : u;
            seen[c] = 1;
            in_top = !in_top;
            pos = in_top ? n + c : c;
        }
        endpoint[v] = w;
        endpoint[w] = v;
    }

    int loops = 0;
    for (int c = 0; c < n; ++c) {
        if (seen[c]) continue;
        ++loops;
        int cur = c;
        while (!seen[cur]) {
            seen[cur] = 1;
            int u = d2.partner(cur);  // northern arc of d2 within the middle
            seen[u] = 1;
            cur = d1.partner(n + u) - n;  // southern arc of d1 back up
        }
    }

    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < 2 * n; ++v)
        if (endpoint[v] > v) edges.emplace_back(v, endpoint[v]);
    return {WalledDiagram(d1.shape(), edges), loops};
}

// The anti-automorphism *: exchange top and bottom rows.
inline WalledDiagram flip(const WalledDiagram& d) {
    const int n = d.shape().n();
    auto mirror = [n](int v) { return v < n ? v + n : v - n; };
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < 2 * n; ++v)
        if (d.partner(v) > v) edges.emplace_back(mirror(v), mirror(d.partner(v)));
    return WalledDiagram(d.shape(), edges);
}

// sigma d sigma^{-1} for a permutation diagram sigma (no loops can close).
inline WalledDiagram conjugate(const WalledDiagram& sigma, const WalledDiagram& d) {
    if (!sigma.is_permutation()) throw std::invalid_argument("not a permutation");
    return multiply(multiply(sigma, d).first, flip(sigma)).first;
}

inline std::vector<WalledDiagram> enumerate_diagrams(const WalledShape& shape,
                                                     int bound = 7) {
    if (shape.n() > bound) throw std::invalid_argument("enumeration too large");
    const int n = shape.n();
    std::vector<int> partner(2 * n, -1);
    std::vector<std::pair<int, int>> edges;
    std::vector<WalledDiagram> out;
    auto rec = [&](auto&& self, int v) -> void {
        while (v < 2 * n && partner[v] != -1) ++v;
        if (v == 2 * n) {
            out.emplace_back(shape, edges);
            return;
        }
        for (int u = v + 1; u < 2 * n; ++u) {
            if (partner[u] != -1 || !WalledDiagram::edge_ok(shape, v, u)) continue;
            partner[v] = u;
            partner[u] = v;
            edges.emplace_back(v, u);
            self(self, v + 1);
            edges.pop_back();
            partner[v] = -1;
            partner[u] = -1;
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

// All permutation diagrams of S_r x S_s (wall-respecting permutations).
inline std::vector<WalledDiagram> enumerate_wall_permutations(const WalledShape& shape) {
    const int n = shape.n();
    std::vector<int> left(shape.r), right(shape.s);
    for (int i = 0; i < shape.r; ++i) left[i] = i;
    for (int i = 0; i < shape.s; ++i) right[i] = shape.r + i;
    std::vector<WalledDiagram> out;
    std::vector<int> l = left;
    do {
        std::vector<int> rt = right;
        do {
            std::vector<std::pair<int, int>> edges;
            for (int i = 0; i < shape.r; ++i) edges.emplace_back(i, n + l[i]);
            for (int i = 0; i < shape.s; ++i) edges.emplace_back(shape.r + i, n + rt[i]);
            out.emplace_back(shape, edges);
        } while (std::next_permutation(rt.begin(), rt.end()));
    } while (std::next_permutation(l.begin(), l.end()));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace wbr
