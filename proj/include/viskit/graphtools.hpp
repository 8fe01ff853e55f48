#ifndef VISKIT_GRAPHTOOLS_HPP
#define VISKIT_GRAPHTOOLS_HPP

#include <viskit/graph.hpp>
#include <viskit/representation.hpp>
#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <algorithm>
#include <numeric>
#include <optional>
#include <queue>
#include <vector>

namespace viskit {

inline bool is_planar(const Graph& g) {
    using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
    BoostGraph bg(g.n);
    for (auto [u, v] : g.edges()) boost::add_edge(u, v, bg);
    return boost::boyer_myrvold_planarity_test(bg);
}

namespace detail {

// maximum cardinality search producing a reverse elimination order
inline std::vector<int> mcs_order(const Graph& g) {
    std::vector<int> weight(g.n, 0), order;
    std::vector<bool> seen(g.n, false);
    for (int step = 0; step < g.n; ++step) {
        int best = -1;
        for (int v = 0; v < g.n; ++v)
            if (!seen[v] && (best < 0 || weight[v] > weight[best])) best = v;
        seen[best] = true;
        order.push_back(best);
        for (int u : g.neighbors(best))
            if (!seen[u]) ++weight[u];
    }
    return order;
}

// connected component labels of g restricted to the vertices where mask holds
inline std::vector<int> component_labels(const Graph& g, const std::vector<bool>& mask) {
    std::vector<int> comp(g.n, -1);
    int c = 0;
    for (int s = 0; s < g.n; ++s) {
        if (!mask[s] || comp[s] >= 0) continue;
        comp[s] = c;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int u : g.neighbors(v))
                if (mask[u] && comp[u] < 0) {
                    comp[u] = c;
                    q.push(u);
                }
        }
        ++c;
    }
    return comp;
}

} // namespace detail

inline bool is_chordal(const Graph& g) {
    auto order = detail::mcs_order(g);
    std::vector<int> pos(g.n);
    for (int i = 0; i < g.n; ++i) pos[order[i]] = i;
    // order reversed is a perfect elimination order iff g is chordal
    for (int v = 0; v < g.n; ++v) {
        int first = -1;
        for (int u : g.neighbors(v))
            if (pos[u] < pos[v] && (first < 0 || pos[u] > pos[first])) first = u;
        if (first < 0) continue;
        for (int u : g.neighbors(v))
            if (u != first && pos[u] < pos[v] && !g.has(u, first)) return false;
    }
    return true;
}

inline bool is_interval(const Graph& g) {
    if (!is_chordal(g)) return false;
    // asteroidal triple: independent triple pairwise joined by paths that
    // avoid the closed neighborhood of the third vertex
    std::vector<std::vector<int>> comp(g.n);
    for (int v = 0; v < g.n; ++v) {
        std::vector<bool> mask(g.n, true);
        mask[v] = false;
        for (int u : g.neighbors(v)) mask[u] = false;
        comp[v] = detail::component_labels(g, mask);
    }
    for (int a = 0; a < g.n; ++a)
        for (int b = a + 1; b < g.n; ++b) {
            if (g.has(a, b)) continue;
            for (int c = b + 1; c < g.n; ++c) {
                if (g.has(a, c) || g.has(b, c)) continue;
                bool ab = comp[c][a] >= 0 && comp[c][a] == comp[c][b];
                bool ac = comp[b][a] >= 0 && comp[b][a] == comp[b][c];
                bool bc = comp[a][b] >= 0 && comp[a][b] == comp[a][c];
                if (ab && ac && bc) return false;
            }
        }
    return true;
}

inline bool is_caterpillar_forest(const Graph& g) {
    std::vector<bool> all(g.n, true);
    auto comp = detail::component_labels(g, all);
    int nc = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
    std::vector<int> verts(nc, 0), edges(nc, 0);
    for (int v = 0; v < g.n; ++v) ++verts[comp[v]];
    for (auto [u, v] : g.edges()) ++edges[comp[u]];
    for (int c = 0; c < nc; ++c)
        if (edges[c] != verts[c] - 1) return false;
    // every tree whose non-leaf vertices induce max degree 2 is a caterpillar
    for (int v = 0; v < g.n; ++v) {
        if (g.degree(v) <= 1) continue;
        int spine = 0;
        for (int u : g.neighbors(v))
            if (g.degree(u) > 1) ++spine;
        if (spine > 2) return false;
    }
    return true;
}

namespace detail {

inline bool clique_search(const Graph& g, std::vector<int>& cand, int need) {
    if (need == 0) return true;
    if ((int)cand.size() < need) return false;
    for (size_t i = 0; i < cand.size(); ++i) {
        if ((int)(cand.size() - i) < need) return false;
        int v = cand[i];
        std::vector<int> next;
        for (size_t j = i + 1; j < cand.size(); ++j)
            if (g.has(v, cand[j])) next.push_back(cand[j]);
        if (clique_search(g, next, need - 1)) return true;
    }
    return false;
}

} // namespace detail

inline bool clique_free(const Graph& g, int l) {
    std::vector<int> all(g.n);
    std::iota(all.begin(), all.end(), 0);
    return !detail::clique_search(g, all, l);
}

inline std::vector<int> cutpoints(const Graph& g) {
    std::vector<int> disc(g.n, -1), low(g.n, 0);
    std::vector<bool> cut(g.n, false);
    int timer = 0;
    auto dfs = [&](auto&& self, int v, int parent) -> void {
        disc[v] = low[v] = timer++;
        int children = 0;
        for (int u : g.neighbors(v)) {
            if (u == parent) continue;
            if (disc[u] >= 0) {
                low[v] = std::min(low[v], disc[u]);
                continue;
            }
            ++children;
            self(self, u, v);
            low[v] = std::min(low[v], low[u]);
            if (parent >= 0 && low[u] >= disc[v]) cut[v] = true;
        }
        if (parent < 0 && children > 1) cut[v] = true;
    };
    for (int v = 0; v < g.n; ++v)
        if (disc[v] < 0) dfs(dfs, v, -1);
    std::vector<int> out;
    for (int v = 0; v < g.n; ++v)
        if (cut[v]) out.push_back(v);
    return out;
}

namespace detail {

inline bool iso_extend(const Graph& g, const Graph& h, std::vector<int>& map,
                       std::vector<bool>& used, int v) {
    if (v == g.n) return true;
    for (int w = 0; w < h.n; ++w) {
        if (used[w] || g.degree(v) != h.degree(w)) continue;
        bool ok = true;
        for (int u = 0; u < v && ok; ++u)
            if (g.has(u, v) != h.has(map[u], w)) ok = false;
        if (!ok) continue;
        map[v] = w;
        used[w] = true;
        if (iso_extend(g, h, map, used, v + 1)) return true;
        used[w] = false;
    }
    return false;
}

} // namespace detail

inline bool are_isomorphic(const Graph& g, const Graph& h) {
    if (g.n > 10 || h.n > 10) throw Error("too_large");
    if (g.n != h.n || g.edge_count() != h.edge_count()) return false;
    auto degs = [](const Graph& x) {
        std::vector<int> d(x.n);
        for (int v = 0; v < x.n; ++v) d[v] = x.degree(v);
        std::sort(d.begin(), d.end());
        return d;
    };
    if (degs(g) != degs(h)) return false;
    std::vector<int> map(g.n, -1);
    std::vector<bool> used(h.n, false);
    return detail::iso_extend(g, h, map, used, 0);
}

inline Graph tensor_product(const Graph& g, const Graph& h) {
    Graph out(g.n * h.n);
    for (auto [a, c] : g.edges())
        for (auto [b, d] : h.edges()) {
            out.add(a * h.n + b, c * h.n + d);
            out.add(a * h.n + d, c * h.n + b);
        }
    return out;
}

inline std::optional<std::vector<int>> is_outerhamiltonian(const Graph& g) {
    if (g.n > 10) throw Error("too_large");
    if (g.n == 0) return std::vector<int>{};
    if (g.n == 1) return std::vector<int>{0};
    std::vector<int> path;
    std::vector<bool> used(g.n, false);
    auto face_ok = [&]() {
        Graph wide(g.n + 1);
        for (auto [u, v] : g.edges()) wide.add(u, v);
        for (int i = 0; i < g.n; ++i) {
            wide.add(path[i], path[(i + 1) % g.n]);
            wide.add(path[i], g.n);
        }
        return is_planar(wide);
    };
    auto search = [&](auto&& self, int v) -> bool {
        path.push_back(v);
        used[v] = true;
        if ((int)path.size() == g.n) {
            if (face_ok()) return true;
        } else {
            for (int u : g.neighbors(v))
                if (!used[u] && self(self, u)) return true;
        }
        path.pop_back();
        used[v] = false;
        return false;
    };
    for (int s = 0; s < g.n; ++s)
        if (search(search, s)) return path;
    return std::nullopt;
}

struct Arboricity {
    int value = 0;
    std::vector<Graph> forests;
};

namespace detail {

// path between u and v inside one forest, as edge indices
inline std::vector<int> forest_path(const std::vector<std::pair<int, int>>& es,
                                    const std::vector<int>& color, int which,
                                    int n, int u, int v) {
    std::vector<std::vector<std::pair<int, int>>> adj(n);
    for (size_t i = 0; i < es.size(); ++i)
        if (color[i] == which) {
            adj[es[i].first].push_back({es[i].second, (int)i});
            adj[es[i].second].push_back({es[i].first, (int)i});
        }
    std::vector<int> via(n, -1), from(n, -1);
    std::queue<int> q;
    q.push(u);
    from[u] = u;
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        if (x == v) break;
        for (auto [y, ei] : adj[x])
            if (from[y] < 0) {
                from[y] = x;
                via[y] = ei;
                q.push(y);
            }
    }
    std::vector<int> out;
    if (from[v] < 0) return out;
    for (int x = v; x != u; x = from[x]) out.push_back(via[x]);
    return out;
}

inline bool partition_into(const std::vector<std::pair<int, int>>& es, int n,
                           int t, std::vector<int>& color) {
    color.assign(es.size(), -1);
    for (size_t e0 = 0; e0 < es.size(); ++e0) {
        // matroid union augmentation: BFS over displaced edges
        std::vector<int> parent(es.size(), -1), via(es.size(), -1);
        std::vector<bool> seen(es.size(), false);
        std::queue<int> q;
        q.push((int)e0);
        seen[e0] = true;
        int placed = -1, into = -1;
        while (!q.empty() && placed < 0) {
            int f = q.front();
            q.pop();
            for (int i = 0; i < t && placed < 0; ++i) {
                if (color[f] == i) continue;
                auto cyc = forest_path(es, color, i, n, es[f].first, es[f].second);
                if (cyc.empty()) {
                    placed = f;
                    into = i;
                } else {
                    for (int ei : cyc)
                        if (!seen[ei]) {
                            seen[ei] = true;
                            parent[ei] = f;
                            via[ei] = i;
                            q.push(ei);
                        }
                }
            }
        }
        if (placed < 0) return false;
        // unwind: each displaced edge takes the slot of the one it evicted
        int f = placed, c = into;
        while (f >= 0) {
            int pf = parent[f];
            color[f] = c;
            if (pf >= 0) c = via[f];
            f = pf;
        }
    }
    return true;
}

} // namespace detail

inline Arboricity arboricity(const Graph& g) {
    auto es = g.edges();
    if (es.empty()) return {};
    for (int t = 1;; ++t) {
        std::vector<int> color;
        if (!detail::partition_into(es, g.n, t, color)) continue;
        Arboricity out;
        out.value = t;
        out.forests.assign(t, Graph(g.n));
        for (size_t i = 0; i < es.size(); ++i)
            out.forests[color[i]].add(es[i].first, es[i].second);
        return out;
    }
}

inline int thickness_bound(const Graph& g, std::optional<std::pair<Kind, int>> class_hint = {}) {
    int b = arboricity(g).value;
    if (class_hint) {
        auto [kind, k] = *class_hint;
        int table = 0;
        switch (kind) {
        case Kind::bar: table = 3 * k + 3; break;
        case Kind::semi_bar: table = 2 * k; break;
        case Kind::arc: table = 3 * k + 3; break;
        case Kind::semi_arc: table = 2 * k + 1; break;
        }
        b = std::min(b, table);
    }
    if (g.edge_count() > 0) b = std::max(b, 1);
    return b;
}

} // namespace viskit

#endif
