#pragma once

#include <optional>
#include <vector>

#include "geodex/arithmetic.hpp"
#include "geodex/bigint.hpp"
#include "geodex/digraph.hpp"

namespace geodex {

// counts[u][v] = number of directed walks u -> v of length <= k, the length-0
// walk included (so at(u,u) >= 1). Exact: these numbers certify geodecity.
struct WalkCountTable {
    int k = 0;
    int n = 0;
    std::vector<BigInt> counts;  // row-major n*n

    const BigInt& at(Vertex u, Vertex v) const {
        return counts[static_cast<std::size_t>(u) * static_cast<std::size_t>(n) + static_cast<std::size_t>(v)];
    }
    BigInt& at(Vertex u, Vertex v) {
        return counts[static_cast<std::size_t>(u) * static_cast<std::size_t>(n) + static_cast<std::size_t>(v)];
    }
};

inline WalkCountTable walk_counts(const Digraph& g, int k) {
    if (k < 1) throw std::invalid_argument("walk_counts requires k >= 1");
    const int n = g.order();
    WalkCountTable table{k, n, std::vector<BigInt>(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0)};
    std::vector<BigInt> cur(static_cast<std::size_t>(n)), next(static_cast<std::size_t>(n));
    for (Vertex u = 0; u < n; ++u) {
        std::fill(cur.begin(), cur.end(), 0);
        cur[static_cast<std::size_t>(u)] = 1;
        table.at(u, u) += 1;
        for (int t = 1; t <= k; ++t) {
            std::fill(next.begin(), next.end(), 0);
            for (Vertex w = 0; w < n; ++w) {
                const BigInt& c = cur[static_cast<std::size_t>(w)];
                if (c == 0) continue;
                for (Vertex v : g.out(w)) next[static_cast<std::size_t>(v)] += c;
            }
            std::swap(cur, next);
            for (Vertex v = 0; v < n; ++v) table.at(u, v) += cur[static_cast<std::size_t>(v)];
        }
    }
    return table;
}

struct GeodecityWitness {
    Vertex from = 0;
    Vertex to = 0;
    std::vector<Vertex> walk1;  // vertex sequences including both endpoints
    std::vector<Vertex> walk2;
};

struct GeodecityReport {
    bool ok = true;
    std::optional<GeodecityWitness> witness;
};

namespace detail {

// Collect up to `limit` distinct walks u -> v of length <= k as vertex
// sequences, in lexicographic order of the sequence.
inline void enumerate_walks(const Digraph& g, Vertex from, Vertex to, int k,
                            std::vector<std::vector<Vertex>>& found, std::size_t limit) {
    std::vector<Vertex> path{from};
    auto dfs = [&](auto&& self) -> void {
        if (found.size() >= limit) return;
        if (path.back() == to) found.push_back(path);
        if (static_cast<int>(path.size()) - 1 >= k) return;
        for (Vertex w : g.out(path.back())) {
            path.push_back(w);
            self(self);
            path.pop_back();
            if (found.size() >= limit) return;
        }
    };
    dfs(dfs);
}

}  // namespace detail

// k-geodetic <=> every walk count is <= 1. On failure the witness pair is
// re-derived by a DFS limited to the violating (u,v); the table itself only
// stores counts.
inline GeodecityReport is_k_geodetic(const Digraph& g, int k) {
    if (k < 1) throw std::invalid_argument("is_k_geodetic requires k >= 1");
    WalkCountTable table = walk_counts(g, k);
    for (Vertex u = 0; u < g.order(); ++u) {
        for (Vertex v = 0; v < g.order(); ++v) {
            if (table.at(u, v) <= 1) continue;
            std::vector<std::vector<Vertex>> walks;
            detail::enumerate_walks(g, u, v, k, walks, 2);
            GeodecityWitness w{u, v, walks.at(0), walks.at(1)};
            return GeodecityReport{false, std::move(w)};
        }
    }
    return GeodecityReport{true, std::nullopt};
}

// Trace of A^r: closed walks of length exactly r, summed over start vertices.
inline BigInt closed_walk_trace(const Digraph& g, int r) {
    if (r < 1) throw std::invalid_argument("closed_walk_trace requires r >= 1");
    const int n = g.order();
    BigInt total = 0;
    std::vector<BigInt> cur(static_cast<std::size_t>(n)), next(static_cast<std::size_t>(n));
    for (Vertex u = 0; u < n; ++u) {
        std::fill(cur.begin(), cur.end(), 0);
        cur[static_cast<std::size_t>(u)] = 1;
        for (int t = 0; t < r; ++t) {
            std::fill(next.begin(), next.end(), 0);
            for (Vertex w = 0; w < n; ++w) {
                const BigInt& c = cur[static_cast<std::size_t>(w)];
                if (c == 0) continue;
                for (Vertex v : g.out(w)) next[static_cast<std::size_t>(v)] += c;
            }
            std::swap(cur, next);
        }
        total += cur[static_cast<std::size_t>(u)];
    }
    return total;
}

// Number of distinct directed cycles of length L, each counted once (not per
// rotation). Roots every cycle at its minimum vertex and walks only through
// larger vertices.
inline BigInt count_cycles_of_length(const Digraph& g, int L) {
    if (L < 2) throw std::invalid_argument("count_cycles_of_length requires L >= 2");
    const int n = g.order();
    BigInt total = 0;
    std::vector<char> on_path(static_cast<std::size_t>(n), 0);
    for (Vertex root = 0; root < n; ++root) {
        on_path[static_cast<std::size_t>(root)] = 1;
        auto dfs = [&](auto&& self, Vertex at, int len) -> void {
            for (Vertex w : g.out(at)) {
                if (w == root) {
                    if (len + 1 == L) total += 1;
                    continue;
                }
                if (w < root || on_path[static_cast<std::size_t>(w)] || len + 1 >= L) continue;
                on_path[static_cast<std::size_t>(w)] = 1;
                self(self, w, len + 1);
                on_path[static_cast<std::size_t>(w)] = 0;
            }
        };
        dfs(dfs, root, 0);
        on_path[static_cast<std::size_t>(root)] = 0;
    }
    return total;
}

// Everything the excess-one definition asks of a digraph, in one verdict.
struct ExcessProfile {
    int d = 0;
    int k = 0;
    int order = 0;
    BigInt moore;
    BigInt excess;
    bool diregular = false;
    bool geodetic = false;
    bool is_excess_one = false;
};

inline ExcessProfile excess_profile(const Digraph& g, int d, int k) {
    if (d < 1 || k < 1) throw std::invalid_argument("excess_profile requires d >= 1, k >= 1");
    ExcessProfile p;
    p.d = d;
    p.k = k;
    p.order = g.order();
    p.moore = moore_bound(d, k);
    p.excess = BigInt(g.order()) - p.moore;
    p.diregular = is_diregular(g, d);
    p.geodetic = is_k_geodetic(g, k).ok;
    p.is_excess_one = p.diregular && p.geodetic && p.excess == 1;
    return p;
}

}  // namespace geodex
