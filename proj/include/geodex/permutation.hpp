#pragma once

#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "geodex/bigint.hpp"
#include "geodex/digraph.hpp"
#include "geodex/walks.hpp"

namespace geodex {

// Bijection on 0..n-1.
class VertexPermutation {
public:
    VertexPermutation() = default;

    explicit VertexPermutation(std::vector<Vertex> map) : map_(std::move(map)) {
        std::vector<char> seen(map_.size(), 0);
        for (Vertex v : map_) {
            if (v < 0 || v >= static_cast<Vertex>(map_.size()) || seen[static_cast<std::size_t>(v)])
                throw Error("not a permutation of 0..n-1");
            seen[static_cast<std::size_t>(v)] = 1;
        }
    }

    static VertexPermutation identity(int n) {
        std::vector<Vertex> m(static_cast<std::size_t>(n));
        std::iota(m.begin(), m.end(), 0);
        return VertexPermutation(std::move(m));
    }

    // Build from disjoint cycles; vertices not mentioned are fixed.
    static VertexPermutation from_cycles(int n, const std::vector<std::vector<Vertex>>& cycles) {
        std::vector<Vertex> m(static_cast<std::size_t>(n));
        std::iota(m.begin(), m.end(), 0);
        for (const auto& cyc : cycles)
            for (std::size_t i = 0; i < cyc.size(); ++i)
                m[static_cast<std::size_t>(cyc[i])] = cyc[(i + 1) % cyc.size()];
        return VertexPermutation(std::move(m));
    }

    int size() const { return static_cast<int>(map_.size()); }
    Vertex operator()(Vertex u) const { return map_[static_cast<std::size_t>(u)]; }
    const std::vector<Vertex>& map() const { return map_; }

    VertexPermutation inverse() const {
        std::vector<Vertex> inv(map_.size());
        for (Vertex u = 0; u < size(); ++u) inv[static_cast<std::size_t>(map_[static_cast<std::size_t>(u)])] = u;
        return VertexPermutation(std::move(inv));
    }

    // this^r (r >= 0) by repeated application along each cycle.
    VertexPermutation power(long r) const {
        if (r < 0) throw std::invalid_argument("negative permutation power");
        std::vector<Vertex> m(map_.size());
        for (const auto& cyc : cycles()) {
            const long len = static_cast<long>(cyc.size());
            for (std::size_t i = 0; i < cyc.size(); ++i)
                m[static_cast<std::size_t>(cyc[i])] = cyc[static_cast<std::size_t>((static_cast<long>(i) + r) % len)];
        }
        return VertexPermutation(std::move(m));
    }

    std::vector<std::vector<Vertex>> cycles() const {
        std::vector<std::vector<Vertex>> result;
        std::vector<char> seen(map_.size(), 0);
        for (Vertex u = 0; u < size(); ++u) {
            if (seen[static_cast<std::size_t>(u)]) continue;
            std::vector<Vertex> cyc;
            Vertex w = u;
            while (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                cyc.push_back(w);
                w = map_[static_cast<std::size_t>(w)];
            }
            result.push_back(std::move(cyc));
        }
        return result;
    }

    bool is_fixed_point_free() const {
        for (Vertex u = 0; u < size(); ++u)
            if (map_[static_cast<std::size_t>(u)] == u) return false;
        return true;
    }

    // One line of n space-separated images.
    std::string to_string() const {
        std::ostringstream os;
        for (Vertex u = 0; u < size(); ++u) {
            if (u) os << ' ';
            os << map_[static_cast<std::size_t>(u)];
        }
        return os.str();
    }

    static VertexPermutation parse(const std::string& text) {
        std::istringstream is(text);
        std::vector<Vertex> m;
        long v = 0;
        while (is >> v) m.push_back(static_cast<Vertex>(v));
        return VertexPermutation(std::move(m));
    }

    bool operator==(const VertexPermutation& other) const = default;

private:
    std::vector<Vertex> map_;
};

// phi is an automorphism iff it maps arcs to arcs; for a bijection on a
// finite arc set that is already bijective on arcs.
inline bool is_automorphism(const Digraph& g, const VertexPermutation& phi) {
    if (phi.size() != g.order()) throw std::invalid_argument("permutation length != digraph order");
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v : g.out(u))
            if (!g.has_arc(phi(u), phi(v))) return false;
    return true;
}

inline std::vector<Vertex> fix_set(const VertexPermutation& phi) {
    std::vector<Vertex> fixed;
    for (Vertex u = 0; u < phi.size(); ++u)
        if (phi(u) == u) fixed.push_back(u);
    return fixed;
}

// Census of cycle lengths: m[j] = number of cycles of length j.
struct PermutationVector {
    std::map<long, long> m;

    long n() const {
        long total = 0;
        for (const auto& [j, mj] : m) total += j * mj;
        return total;
    }

    long count(long j) const {
        auto it = m.find(j);
        return it == m.end() ? 0 : it->second;
    }

    long total_cycles() const {
        long total = 0;
        for (const auto& [j, mj] : m) total += mj;
        return total;
    }

    // "j:m_j" pairs sorted by j.
    std::string to_string() const {
        std::ostringstream os;
        bool first = true;
        for (const auto& [j, mj] : m) {
            if (mj == 0) continue;
            if (!first) os << ' ';
            os << j << ':' << mj;
            first = false;
        }
        return os.str();
    }

    static PermutationVector parse(const std::string& text) {
        PermutationVector pv;
        std::istringstream is(text);
        std::string tok;
        while (is >> tok) {
            auto colon = tok.find(':');
            if (colon == std::string::npos) throw Error("permutation vector token \"" + tok + "\" lacks ':'");
            long j = std::stol(tok.substr(0, colon));
            long mj = std::stol(tok.substr(colon + 1));
            if (j < 1 || mj < 0) throw Error("invalid permutation vector entry \"" + tok + "\"");
            if (mj > 0) pv.m[j] += mj;
        }
        return pv;
    }

    bool operator==(const PermutationVector& other) const = default;
};

inline PermutationVector permutation_vector(const VertexPermutation& phi) {
    PermutationVector pv;
    for (const auto& cyc : phi.cycles()) ++pv.m[static_cast<long>(cyc.size())];
    return pv;
}

// m'(j): odd-length cycles with length divisible by j; m''(j): even-length
// ones; m(j) their sum.
struct MStats {
    long odd = 0;    // m'(j)
    long even = 0;   // m''(j)
    long total = 0;  // m(j)
};

inline MStats m_stats(const PermutationVector& pv, long j) {
    if (j < 1) throw std::invalid_argument("m_stats requires j >= 1");
    MStats s;
    for (const auto& [len, count] : pv.m) {
        if (len % j != 0) continue;
        if (len % 2 == 0)
            s.even += count;
        else
            s.odd += count;
    }
    s.total = s.odd + s.even;
    return s;
}

// Length of u's cycle: the least r >= 1 with phi^r(u) = u.
inline long vertex_order(const VertexPermutation& phi, Vertex u) {
    long len = 1;
    Vertex w = phi(u);
    while (w != u) {
        w = phi(w);
        ++len;
    }
    return len;
}

// Smallest vertex order; 1 for the identity.
inline long perm_index(const VertexPermutation& phi) {
    long best = 0;
    for (Vertex u = 0; u < phi.size(); ++u) {
        long len = vertex_order(phi, u);
        if (best == 0 || len < best) best = len;
    }
    return best;
}

enum class OutlierClass { OutlierRegular, TypeA, TypeB, Other };

struct OutlierStructure {
    OutlierClass tag = OutlierClass::Other;
    long index = 0;  // omega(G), the minimum vertex order
    long omega = 0;  // common cycle length when OutlierRegular
};

// Permutation-side trichotomy. TypeA here is the necessary condition on the
// cycle census alone (a unique minimal cycle of length k+2); whether those
// vertices induce a directed (k+2)-cycle in G is the caller's geometric check.
inline OutlierStructure classify_outlier_structure(const VertexPermutation& o, int k) {
    if (!o.is_fixed_point_free()) throw std::invalid_argument("outlier function must be fixed-point-free");
    PermutationVector pv = permutation_vector(o);
    OutlierStructure s;
    s.index = pv.m.begin()->first;
    if (pv.m.size() == 1) {
        s.tag = OutlierClass::OutlierRegular;
        s.omega = s.index;
        return s;
    }
    if (pv.count(2) == 1 && s.index == 2) {
        s.tag = OutlierClass::TypeB;
        return s;
    }
    if (s.index == k + 2 && pv.count(k + 2) == 1) {
        s.tag = OutlierClass::TypeA;
        return s;
    }
    s.tag = OutlierClass::Other;
    return s;
}

// Along every path u_0 ... u_r (r <= k) each interior order must divide
// lcm(order(u_0), order(u_r)); a violation proves the input was not a valid
// excess-one digraph with outlier o.
inline bool check_path_order_divisibility(const Digraph& g, int k, const VertexPermutation& o) {
    if (o.size() != g.order()) throw std::invalid_argument("permutation length != digraph order");
    std::vector<long> order(static_cast<std::size_t>(g.order()));
    for (Vertex u = 0; u < g.order(); ++u) order[static_cast<std::size_t>(u)] = vertex_order(o, u);

    std::vector<char> on_path(static_cast<std::size_t>(g.order()), 0);
    std::vector<Vertex> path;
    bool ok = true;
    auto dfs = [&](auto&& self, Vertex at) -> void {
        if (!ok) return;
        if (path.size() >= 3) {
            BigInt t = big_lcm(order[static_cast<std::size_t>(path.front())],
                               order[static_cast<std::size_t>(path.back())]);
            for (std::size_t i = 1; i + 1 < path.size(); ++i)
                if (t % order[static_cast<std::size_t>(path[i])] != 0) {
                    ok = false;
                    return;
                }
        }
        if (static_cast<int>(path.size()) - 1 >= k) return;
        for (Vertex w : g.out(at)) {
            if (on_path[static_cast<std::size_t>(w)]) continue;
            on_path[static_cast<std::size_t>(w)] = 1;
            path.push_back(w);
            self(self, w);
            path.pop_back();
            on_path[static_cast<std::size_t>(w)] = 0;
        }
    };
    for (Vertex u = 0; u < g.order() && ok; ++u) {
        on_path[static_cast<std::size_t>(u)] = 1;
        path.assign(1, u);
        dfs(dfs, u);
        on_path[static_cast<std::size_t>(u)] = 0;
    }
    return ok;
}

enum class FixTag { Null, TwoIsolated, CycleKplus2, SubExcessOne, WholeGraph, Inconsistent };

struct FixClassification {
    FixTag tag = FixTag::Inconsistent;
    int fix_size = 0;
    int sub_degree = 0;  // d' when SubExcessOne
};

namespace detail {

inline Digraph induced_subdigraph(const Digraph& g, const std::vector<Vertex>& vertices) {
    std::vector<Vertex> index(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) index[static_cast<std::size_t>(vertices[i])] = static_cast<Vertex>(i);
    std::vector<std::vector<Vertex>> out(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (Vertex w : g.out(vertices[i]))
            if (index[static_cast<std::size_t>(w)] >= 0) out[i].push_back(index[static_cast<std::size_t>(w)]);
    return Digraph(std::move(out));
}

inline bool is_directed_cycle(const Digraph& g, int length) {
    if (g.order() != length) return false;
    if (!is_diregular(g, 1)) return false;
    // connected single cycle: follow the unique out-arcs and count the orbit
    Vertex w = 0;
    for (int i = 0; i < length; ++i) w = g.out(w)[0];
    if (w != 0) return false;
    std::vector<char> seen(static_cast<std::size_t>(length), 0);
    w = 0;
    int steps = 0;
    while (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        w = g.out(w)[0];
        ++steps;
    }
    return steps == length;
}

}  // namespace detail

// The subdigraph induced by fix(phi) must be one of the shapes the fix-set
// structure theory allows; anything else proves the input was not a valid
// excess-one digraph.
inline FixClassification classify_fix_subdigraph(const Digraph& g, int k, const VertexPermutation& phi) {
    if (!is_automorphism(g, phi)) throw NotAutomorphismError("classify_fix_subdigraph: not an automorphism");
    std::vector<Vertex> fixed = fix_set(phi);
    FixClassification c;
    c.fix_size = static_cast<int>(fixed.size());
    if (c.fix_size == static_cast<int>(g.order())) {
        c.tag = FixTag::WholeGraph;
        return c;
    }
    if (c.fix_size == 0) {
        c.tag = FixTag::Null;
        return c;
    }
    Digraph sub = detail::induced_subdigraph(g, fixed);
    if (c.fix_size == 2 && sub.arc_count() == 0) {
        c.tag = FixTag::TwoIsolated;
        return c;
    }
    if (detail::is_directed_cycle(sub, k + 2)) {
        c.tag = FixTag::CycleKplus2;
        return c;
    }
    if (sub.order() > 0 && sub.out_degree(0) > 0) {
        int d_sub = sub.out_degree(0);
        if (excess_profile(sub, d_sub, k).is_excess_one) {
            c.tag = FixTag::SubExcessOne;
            c.sub_degree = d_sub;
            return c;
        }
    }
    c.tag = FixTag::Inconsistent;
    return c;
}

}  // namespace geodex
