#pragma once

#include <vector>

#include "geodex/digraph.hpp"
#include "geodex/permutation.hpp"
#include "geodex/walks.hpp"

namespace geodex {

// The outlier function o of an excess-one digraph: o(u) is the unique vertex
// the <=k walk table cannot reach from u. Always fixed-point-free (the
// length-0 walk reaches u), and an automorphism by the structure theory.
struct OutlierMap {
    VertexPermutation perm;

    Vertex o(Vertex u) const { return perm(u); }
    Vertex o_inv(Vertex u) const { return perm.inverse()(u); }
};

inline OutlierMap outlier_map(const Digraph& g, int k) {
    WalkCountTable table = walk_counts(g, k);
    const int n = g.order();
    std::vector<Vertex> map(static_cast<std::size_t>(n), -1);
    std::vector<char> hit(static_cast<std::size_t>(n), 0);
    for (Vertex u = 0; u < n; ++u) {
        Vertex zero_at = -1;
        for (Vertex v = 0; v < n; ++v) {
            if (table.at(u, v) != 0) continue;
            if (zero_at >= 0)
                throw NotExcessOneError("vertex " + std::to_string(u) + " misses more than one vertex");
            zero_at = v;
        }
        if (zero_at < 0) throw NotExcessOneError("vertex " + std::to_string(u) + " reaches every vertex");
        map[static_cast<std::size_t>(u)] = zero_at;
        hit[static_cast<std::size_t>(zero_at)] = 1;
    }
    for (Vertex v = 0; v < n; ++v)
        if (!hit[static_cast<std::size_t>(v)])
            throw NotExcessOneError("outlier assignment is not a bijection");
    OutlierMap result{VertexPermutation(std::move(map))};
    // The outlier function of a genuine excess-one digraph is an
    // automorphism; failure proves the input was not one.
    if (!is_automorphism(g, result.perm))
        throw NotAutomorphismError("outlier function is not an automorphism");
    return result;
}

enum class VertexClass { TypeI, TypeII };

// Type II iff the arc o(u) -> u exists.
inline VertexClass vertex_type(const Digraph& g, int /*k*/, const OutlierMap& o, Vertex u) {
    return g.has_arc(o.o(u), u) ? VertexClass::TypeII : VertexClass::TypeI;
}

// Walk-count identity: I + A + ... + A^k = J - P, entrywise.
inline bool verify_path_identity(const Digraph& g, int k, const OutlierMap& o) {
    WalkCountTable table = walk_counts(g, k);
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = 0; v < g.order(); ++v) {
            BigInt expect = (o.o(u) == v) ? 0 : 1;
            if (table.at(u, v) != expect) return false;
        }
    return true;
}

}  // namespace geodex
