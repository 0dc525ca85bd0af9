#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "geodex/error.hpp"

namespace geodex {

using Vertex = std::int32_t;

// Immutable digraph on dense 0-based vertices, stored as sorted out-adjacency
// lists. No self-loops, no parallel arcs; both are rejected at construction
// (a self-loop is a closed 1-walk and kills k-geodecity outright).
class Digraph {
public:
    Digraph() = default;

    explicit Digraph(std::vector<std::vector<Vertex>> out) : out_(std::move(out)) {
        const auto n = static_cast<Vertex>(out_.size());
        for (Vertex u = 0; u < n; ++u) {
            auto& row = out_[u];
            std::sort(row.begin(), row.end());
            for (std::size_t i = 0; i < row.size(); ++i) {
                Vertex v = row[i];
                if (v < 0 || v >= n)
                    throw Error("arc target " + std::to_string(v) + " out of range for order " +
                                std::to_string(n));
                if (v == u) throw Error("self-loop at vertex " + std::to_string(u));
                if (i > 0 && row[i - 1] == v)
                    throw Error("duplicate arc (" + std::to_string(u) + "," + std::to_string(v) + ")");
            }
        }
    }

    int order() const { return static_cast<int>(out_.size()); }

    std::span<const Vertex> out(Vertex u) const { return out_[static_cast<std::size_t>(u)]; }

    int out_degree(Vertex u) const { return static_cast<int>(out_[static_cast<std::size_t>(u)].size()); }

    bool has_arc(Vertex u, Vertex v) const {
        const auto& row = out_[static_cast<std::size_t>(u)];
        return std::binary_search(row.begin(), row.end(), v);
    }

    long long arc_count() const {
        long long m = 0;
        for (const auto& row : out_) m += static_cast<long long>(row.size());
        return m;
    }

    std::vector<int> in_degrees() const {
        std::vector<int> deg(out_.size(), 0);
        for (const auto& row : out_)
            for (Vertex v : row) ++deg[static_cast<std::size_t>(v)];
        return deg;
    }

    // All arcs reversed. An involution: converse(converse(G)) == G.
    Digraph converse() const {
        std::vector<std::vector<Vertex>> rev(out_.size());
        for (Vertex u = 0; u < order(); ++u)
            for (Vertex v : out_[static_cast<std::size_t>(u)])
                rev[static_cast<std::size_t>(v)].push_back(u);
        return Digraph(std::move(rev));
    }

    // Canonical text form: header line n, then one sorted adjacency line per
    // vertex. Inverse of parse() on valid digraphs.
    std::string to_text() const {
        std::ostringstream os;
        os << order() << '\n';
        for (Vertex u = 0; u < order(); ++u) {
            os << u << ':';
            for (Vertex v : out_[static_cast<std::size_t>(u)]) os << ' ' << v;
            os << '\n';
        }
        return os.str();
    }

    // Digraph text format: line 1 = n; then n lines "u: v1 v2 ..." with u
    // strictly increasing from 0. Blank lines and lines starting with '#' are
    // ignored. Faults carry the 1-based line number.
    static Digraph parse(std::string_view text) {
        std::vector<std::string> lines;
        {
            std::string cur;
            for (char ch : text) {
                if (ch == '\n') {
                    lines.push_back(cur);
                    cur.clear();
                } else {
                    cur.push_back(ch);
                }
            }
            if (!cur.empty()) lines.push_back(cur);
        }

        auto significant = [](const std::string& s) {
            auto pos = s.find_first_not_of(" \t\r");
            return pos != std::string::npos && s[pos] != '#';
        };

        std::size_t li = 0;
        auto next_line = [&](int& lineno) -> const std::string* {
            while (li < lines.size()) {
                ++li;
                if (significant(lines[li - 1])) {
                    lineno = static_cast<int>(li);
                    return &lines[li - 1];
                }
            }
            lineno = static_cast<int>(lines.size());
            return nullptr;
        };

        int lineno = 0;
        const std::string* header = next_line(lineno);
        if (!header) throw ParseError(ParseFault::Syntax, 1, "missing order line");
        long n = 0;
        {
            std::istringstream is(*header);
            std::string tail;
            if (!(is >> n) || n < 0 || (is >> tail))
                throw ParseError(ParseFault::Syntax, lineno, "expected vertex count, got \"" + *header + "\"");
        }

        std::vector<std::vector<Vertex>> out(static_cast<std::size_t>(n));
        for (long u = 0; u < n; ++u) {
            const std::string* line = next_line(lineno);
            if (!line)
                throw ParseError(ParseFault::Syntax, lineno,
                                 "missing adjacency line for vertex " + std::to_string(u));
            auto colon = line->find(':');
            if (colon == std::string::npos)
                throw ParseError(ParseFault::Syntax, lineno, "expected \"u: ...\", got \"" + *line + "\"");
            long label = 0;
            {
                std::istringstream is(line->substr(0, colon));
                std::string tail;
                if (!(is >> label) || (is >> tail) || label != u)
                    throw ParseError(ParseFault::Syntax, lineno,
                                     "expected vertex " + std::to_string(u) + " on this line");
            }
            std::istringstream is(line->substr(colon + 1));
            std::string tok;
            auto& row = out[static_cast<std::size_t>(u)];
            while (is >> tok) {
                long v = 0;
                try {
                    std::size_t used = 0;
                    v = std::stol(tok, &used);
                    if (used != tok.size()) throw std::invalid_argument(tok);
                } catch (const std::exception&) {
                    throw ParseError(ParseFault::Syntax, lineno, "bad neighbour token \"" + tok + "\"");
                }
                if (v < 0 || v >= n)
                    throw ParseError(ParseFault::OutOfRange, lineno,
                                     "neighbour " + std::to_string(v) + " out of range [0," +
                                         std::to_string(n - 1) + "]");
                if (v == u) throw ParseError(ParseFault::SelfLoop, lineno, "self-loop at vertex " + std::to_string(u));
                if (std::find(row.begin(), row.end(), static_cast<Vertex>(v)) != row.end())
                    throw ParseError(ParseFault::DuplicateArc, lineno,
                                     "duplicate arc (" + std::to_string(u) + "," + std::to_string(v) + ")");
                row.push_back(static_cast<Vertex>(v));
            }
        }
        const std::string* extra = next_line(lineno);
        if (extra) throw ParseError(ParseFault::Syntax, lineno, "trailing content after last vertex line");
        return Digraph(std::move(out));
    }

    // Directed cycle 0 -> 1 -> ... -> length-1 -> 0.
    static Digraph cycle(int length) {
        std::vector<std::vector<Vertex>> out(static_cast<std::size_t>(length));
        for (Vertex u = 0; u < length; ++u) out[static_cast<std::size_t>(u)] = {static_cast<Vertex>((u + 1) % length)};
        return Digraph(std::move(out));
    }

    // Complete digraph: every ordered pair (u,v), u != v, is an arc.
    static Digraph complete(int n) {
        std::vector<std::vector<Vertex>> out(static_cast<std::size_t>(n));
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = 0; v < n; ++v)
                if (u != v) out[static_cast<std::size_t>(u)].push_back(v);
        return Digraph(std::move(out));
    }

    bool operator==(const Digraph& other) const = default;

private:
    std::vector<std::vector<Vertex>> out_;
};

inline std::vector<Vertex> common_out_neighbours(const Digraph& g, Vertex u, Vertex v) {
    if (u == v) throw std::invalid_argument("common_out_neighbours requires distinct vertices");
    std::vector<Vertex> result;
    auto a = g.out(u), b = g.out(v);
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(result));
    return result;
}

// Out-degree and in-degree both equal d at every vertex.
inline bool is_diregular(const Digraph& g, int d) {
    for (Vertex u = 0; u < g.order(); ++u)
        if (g.out_degree(u) != d) return false;
    auto in = g.in_degrees();
    return std::all_of(in.begin(), in.end(), [d](int x) { return x == d; });
}

}  // namespace geodex
