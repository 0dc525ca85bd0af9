#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "geodex/digraph.hpp"

namespace geodex {

// Canonical byte string: equal iff isomorphic. Backtracking over vertex
// orderings restricted to (out-degree, in-degree) classes, minimizing the
// staircase encoding of the adjacency matrix (for each placed position p the
// entries (0,p)..(p-1,p) then (p,0)..(p,p)); the staircase grows with the
// ordering, so lexicographic pruning is exact. Intended for the n <= 20 desk
// scale of the search.
inline std::string canonical_form(const Digraph& g) {
    const int n = g.order();
    if (n == 0) return "0:";

    auto in_deg = g.in_degrees();
    auto class_key = [&](Vertex v) {
        return std::pair<int, int>(g.out_degree(v), in_deg[static_cast<std::size_t>(v)]);
    };
    // Position p must receive a vertex of the p-th smallest class key.
    std::vector<std::pair<int, int>> class_seq(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) class_seq[static_cast<std::size_t>(v)] = class_key(v);
    std::sort(class_seq.begin(), class_seq.end());

    std::string best;  // empty = none found yet
    std::string cur;
    cur.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    std::vector<Vertex> placed;
    std::vector<char> used(static_cast<std::size_t>(n), 0);

    auto segment_for = [&](Vertex v) {
        // Bits this placement appends: column above, then row up to diagonal.
        std::string seg;
        seg.reserve(2 * placed.size() + 1);
        for (Vertex w : placed) seg.push_back(g.has_arc(w, v) ? '1' : '0');
        for (Vertex w : placed) seg.push_back(g.has_arc(v, w) ? '1' : '0');
        seg.push_back('0');  // diagonal: never a self-loop
        return seg;
    };

    // tie == true: cur equals best on the shared prefix, so best still binds.
    auto dfs = [&](auto&& self, bool tie) -> void {
        const std::size_t p = placed.size();
        if (p == static_cast<std::size_t>(n)) {
            if (best.empty() || cur < best) best = cur;
            return;
        }
        std::vector<std::pair<std::string, Vertex>> options;
        for (Vertex v = 0; v < n; ++v) {
            if (used[static_cast<std::size_t>(v)] || class_key(v) != class_seq[p]) continue;
            options.emplace_back(segment_for(v), v);
        }
        if (options.empty()) return;
        std::sort(options.begin(), options.end());
        // Given the prefix, the minimal completion starts with the minimal
        // segment, so only ties for the local minimum need exploring.
        const std::string local_min = options.front().first;
        bool child_tie = false;
        if (tie && !best.empty()) {
            // Complete strings all have length n^2, so best covers this span.
            int cmp = local_min.compare(0, local_min.size(), best, cur.size(), local_min.size());
            if (cmp > 0) return;
            child_tie = cmp == 0;
        }
        for (const auto& [seg, v] : options) {
            if (seg != local_min) break;
            used[static_cast<std::size_t>(v)] = 1;
            placed.push_back(v);
            cur.append(seg);
            self(self, child_tie);
            cur.resize(cur.size() - seg.size());
            placed.pop_back();
            used[static_cast<std::size_t>(v)] = 0;
        }
    };
    dfs(dfs, true);

    std::string result = std::to_string(n) + ":";
    result += best;
    return result;
}

}  // namespace geodex
