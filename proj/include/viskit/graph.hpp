#ifndef VISKIT_GRAPH_HPP
#define VISKIT_GRAPH_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace viskit {

// undirected simple graph over vertices 0..n-1, adjacency kept as bitset rows
struct Graph {
    int n = 0;
    int w = 0;
    std::vector<std::uint64_t> bits;

    Graph() = default;
    explicit Graph(int n_) : n(n_), w((n_ + 63) / 64), bits(static_cast<size_t>(n_) * w, 0) {}

    void add(int u, int v) {
        if (u == v) return;
        bits[static_cast<size_t>(u) * w + v / 64] |= 1ull << (v % 64);
        bits[static_cast<size_t>(v) * w + u / 64] |= 1ull << (u % 64);
    }
    void remove(int u, int v) {
        bits[static_cast<size_t>(u) * w + v / 64] &= ~(1ull << (v % 64));
        bits[static_cast<size_t>(v) * w + u / 64] &= ~(1ull << (u % 64));
    }
    bool has(int u, int v) const {
        return bits[static_cast<size_t>(u) * w + v / 64] >> (v % 64) & 1;
    }
    const std::uint64_t* row(int u) const { return bits.data() + static_cast<size_t>(u) * w; }

    int degree(int u) const {
        int d = 0;
        for (int j = 0; j < w; ++j) d += __builtin_popcountll(row(u)[j]);
        return d;
    }
    long long edge_count() const {
        long long total = 0;
        for (int u = 0; u < n; ++u) total += degree(u);
        return total / 2;
    }
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (has(u, v)) out.push_back({u, v});
        return out;
    }
    std::vector<int> neighbors(int u) const {
        std::vector<int> out;
        for (int v = 0; v < n; ++v)
            if (has(u, v)) out.push_back(v);
        return out;
    }
    bool operator==(const Graph& o) const { return n == o.n && bits == o.bits; }
    bool operator!=(const Graph& o) const { return !(*this == o); }
};

inline Graph graph_union(const Graph& a, const Graph& b) {
    Graph g(a.n);
    for (size_t i = 0; i < g.bits.size(); ++i) g.bits[i] = a.bits[i] | b.bits[i];
    return g;
}

inline Graph graph_difference(const Graph& a, const Graph& b) {
    Graph g(a.n);
    for (size_t i = 0; i < g.bits.size(); ++i) g.bits[i] = a.bits[i] & ~b.bits[i];
    return g;
}

inline Graph from_edges(int n, const std::vector<std::pair<int, int>>& es) {
    Graph g(n);
    for (auto [u, v] : es) g.add(u, v);
    return g;
}

}

#endif
