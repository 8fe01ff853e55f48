#ifndef VISKIT_ATLAS_HPP
#define VISKIT_ATLAS_HPP

#include <viskit/bounds.hpp>
#include <viskit/ensembles.hpp>
#include <viskit/graphtools.hpp>
#include <viskit/perturb.hpp>
#include <viskit/representation.hpp>
#include <viskit/sightlines.hpp>
#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace viskit {

// ordered cutpoint selection plus the edges their arcs gain through the center
struct DiagonalSpec {
    std::vector<int> b_sequence;
    int j = 0;
    std::vector<std::pair<int, int>> edges;
};

struct CharacterizationWitness {
    Representation semibar_rep;
    DiagonalSpec diagonal;
};

inline bool is_diagonal_graph(const DiagonalSpec& d) {
    int m = static_cast<int>(d.b_sequence.size());
    if (m == 0) return d.edges.empty();
    if (d.j < 1 || d.j > m) throw Error("bad_index");
    std::map<int, int> idx;
    for (int i = 0; i < m; ++i)
        if (!idx.emplace(d.b_sequence[i], i + 1).second) return false;
    std::set<std::pair<int, int>> E;
    for (auto [a, b] : d.edges) {
        auto ia = idx.find(a), ib = idx.find(b);
        if (ia == idx.end() || ib == idx.end()) return false;
        int x = ia->second, y = ib->second;
        if (x == y) return false;
        if (x > y) std::swap(x, y);
        E.insert({x, y});
    }
    int j = d.j;
    if (m == 1) return E.empty();
    // every connection pairs an index at or below j with one at or beyond j
    for (auto [x, y] : E)
        if (x > j || y < j) return false;
    std::vector<int> deg(m + 1, 0);
    std::vector<std::set<int>> U(j + 1);
    for (auto [x, y] : E) {
        U[x].insert(y);
        ++deg[x];
        ++deg[y];
    }
    for (int v = 1; v <= m; ++v)
        if (deg[v] == 0) return false;
    if (j == 1) return static_cast<int>(U[1].size()) == m - 1;
    if (!E.count({1, j})) return false;
    // each lower vertex connects to a contiguous window of upper vertices
    for (int i = 1; i <= j; ++i)
        if (!U[i].empty() && *U[i].rbegin() - *U[i].begin() + 1 != static_cast<int>(U[i].size()))
            return false;
    // consecutive windows form a staircase; a window may vanish only past the top
    for (int i = 1; i < j; ++i) {
        int top = *U[i].rbegin();
        if (U[i + 1].empty()) {
            if (top != m) return false;
        } else {
            int nxt = *U[i + 1].begin();
            if (nxt != top && nxt != top + 1) return false;
        }
    }
    if (!U[j].empty() && *U[j].rbegin() != m) return false;
    return true;
}

namespace detail {

// element indices sorted by rank
inline std::vector<int> by_rank(const Representation& rep) {
    std::vector<int> ord(rep.elems.size());
    for (size_t i = 0; i < ord.size(); ++i) ord[i] = static_cast<int>(i);
    std::sort(ord.begin(), ord.end(),
              [&](int a, int b) { return rep.elems[a].rank < rep.elems[b].rank; });
    return ord;
}

// strict running maxima of the b parameter in rank order
inline std::vector<int> chain_of(const Representation& rep) {
    std::vector<int> ch;
    Rat run(-1);
    for (int i : by_rank(rep))
        if (rep.elems[i].b > run) {
            ch.push_back(i);
            run = rep.elems[i].b;
        }
    return ch;
}

struct GammaBound {
    Rat v;
    bool closed = false;
    bool set = false;
};

inline void raise_lb(GammaBound& b, const Rat& v, bool closed) {
    if (!b.set) {
        b.v = v;
        b.closed = closed;
        b.set = true;
        return;
    }
    if (v > b.v) {
        b.v = v;
        b.closed = closed;
    } else if (v == b.v && !closed)
        b.closed = false;
}

inline void lower_ub(GammaBound& b, const Rat& v, bool closed) {
    if (!b.set) {
        b.v = v;
        b.closed = closed;
        b.set = true;
        return;
    }
    if (v < b.v) {
        b.v = v;
        b.closed = closed;
    } else if (v == b.v && !closed)
        b.closed = false;
}

} // namespace detail

inline CharacterizationWitness extract_witness(const Representation& rep, int k = 0) {
    if (rep.kind != Kind::semi_arc) throw Error("not_semi_arc");
    if (k != 0) throw Error("unsupported_k", "the characterization covers k = 0 only");
    CharacterizationWitness w;
    w.semibar_rep.kind = Kind::semi_bar;
    w.semibar_rep.elems = rep.elems;
    for (auto& e : w.semibar_rep.elems) e.a = Rat(0);
    auto el = by_id(rep);
    std::set<int> inchain;
    for (int i : detail::chain_of(rep)) inchain.insert(rep.elems[i].id);
    CompiledRep C(rep);
    auto fg = family_graphs(C, 0);
    std::vector<std::pair<int, int>> tce;
    std::set<int> part;
    for (auto [u, v] : fg.tc.edges())
        if (inchain.count(u) && inchain.count(v)) {
            tce.push_back({u, v});
            part.insert(u);
            part.insert(v);
        }
    if (part.empty()) return w;
    for (int i : detail::by_rank(rep))
        if (part.count(rep.elems[i].id)) w.diagonal.b_sequence.push_back(rep.elems[i].id);
    w.diagonal.j = 0;
    for (size_t t = 0; t < w.diagonal.b_sequence.size() && w.diagonal.j == 0; ++t)
        if (el[w.diagonal.b_sequence[t]].b >= 1) w.diagonal.j = static_cast<int>(t) + 1;
    if (w.diagonal.j == 0) throw Error("witness_invalid");
    for (auto [u, v] : tce) {
        int a = u, b = v;
        if (el[a].rank > el[b].rank) std::swap(a, b);
        w.diagonal.edges.push_back({a, b});
    }
    if (!is_diagonal_graph(w.diagonal)) throw Error("witness_invalid");
    // sightlines through the center must contribute exactly the diagonal edges
    std::set<std::pair<int, int>> tconly;
    for (auto [u, v] : tce)
        if (!fg.ss.has(u, v)) tconly.insert({std::min(u, v), std::max(u, v)});
    auto cs = center_split(rep, 0);
    std::set<std::pair<int, int>> co(cs.center_only.begin(), cs.center_only.end());
    if (co != tconly) throw Error("witness_invalid");
    return w;
}

inline Representation build_from_witness(const CharacterizationWitness& w) {
    if (w.semibar_rep.kind != Kind::semi_bar) throw Error("witness_invalid");
    Representation sb = w.semibar_rep;
    int n = static_cast<int>(sb.elems.size());
    if (!validate(sb).ok()) throw Error("witness_invalid");
    const DiagonalSpec& d = w.diagonal;
    int m = static_cast<int>(d.b_sequence.size());
    if (m > 0 && !is_diagonal_graph(d)) throw Error("witness_invalid");
    std::map<int, int> id2i;
    for (int i = 0; i < n; ++i) id2i[sb.elems[i].id] = i;
    std::vector<int> bidx;
    for (int id : d.b_sequence) {
        auto it = id2i.find(id);
        if (it == id2i.end()) throw Error("witness_invalid");
        bidx.push_back(it->second);
    }
    for (int t = 1; t < m; ++t) {
        if (sb.elems[bidx[t - 1]].rank >= sb.elems[bidx[t]].rank) throw Error("witness_invalid");
        if (sb.elems[bidx[t - 1]].b > sb.elems[bidx[t]].b) throw Error("witness_invalid");
    }
    Graph target0 = visibility_graph(sb, 0);
    // lengthen the selected cutpoints into strict prefix maxima, topped by the last one
    {
        std::set<int> bset(bidx.begin(), bidx.end());
        Rat run(-1);
        Rat fine = Rat(1, 1024);
        int bumps = 0;
        bool changed = false;
        for (int i : detail::by_rank(sb)) {
            if (bset.count(i) && sb.elems[i].b <= run) {
                sb.elems[i].b = run + fine * (++bumps);
                changed = true;
            }
            run = std::max(run, sb.elems[i].b);
        }
        if (m > 0) {
            Rat mx(-1);
            for (int i = 0; i < n; ++i)
                if (i != bidx[m - 1]) mx = std::max(mx, sb.elems[i].b);
            if (sb.elems[bidx[m - 1]].b <= mx) {
                sb.elems[bidx[m - 1]].b = mx + fine;
                changed = true;
            }
        }
        if (changed && visibility_graph(sb, 0) != target0) throw Error("witness_invalid");
    }
    int j = d.j;
    std::vector<Rat> gam(m + 1);
    Representation out;
    out.kind = Kind::semi_arc;
    out.elems = sb.elems;
    auto finish = [&]() -> Representation {
        // order isomorphism: cutpoint lengths hit the designed extents, everything else
        // squeezes into a thin band just above its lower bracketing cutpoint
        std::map<Rat, Rat> vmap;
        for (int p = 1; p <= m; ++p) vmap[sb.elems[bidx[p - 1]].b] = gam[p];
        std::vector<Rat> bv;
        for (int p = 1; p <= m; ++p) bv.push_back(sb.elems[bidx[p - 1]].b);
        std::map<Rat, int> others;
        std::vector<std::vector<Rat>> gaps(m + 1);
        for (auto& e : sb.elems) {
            Rat v = e.b;
            if (vmap.count(v) || others.count(v)) continue;
            int g = static_cast<int>(std::upper_bound(bv.begin(), bv.end(), v) - bv.begin());
            others[v] = g;
            gaps[g].push_back(v);
        }
        if (m == 0) {
            std::vector<Rat> vs;
            for (auto& [v, g] : others) vs.push_back(v);
            for (size_t r = 0; r < vs.size(); ++r)
                vmap[vs[r]] = Rat(static_cast<int>(r) + 1, static_cast<int>(vs.size()) + 1);
        } else {
            for (int g = 0; g < m; ++g) {
                if (gaps[g].empty()) continue;
                std::sort(gaps[g].begin(), gaps[g].end());
                Rat lo = g == 0 ? Rat(0) : gam[g];
                Rat hi = gam[g + 1];
                Rat wdt = (hi - lo) / 2;
                if (lo < 1 && lo + wdt > (Rat(1) + lo) / 2) wdt = (Rat(1) - lo) / 2;
                int s = static_cast<int>(gaps[g].size());
                for (int r = 0; r < s; ++r) vmap[gaps[g][r]] = lo + wdt * Rat(r + 1, s + 1);
            }
            if (!gaps[m].empty()) throw Error("roundtrip_failed");
        }
        for (int i = 0; i < n; ++i) {
            out.elems[i].a = Rat(0);
            out.elems[i].b = vmap[sb.elems[i].b];
        }
        Graph want = target0;
        for (auto [a, b] : d.edges) want.add(a, b);
        if (visibility_graph(out, 0) != want) throw Error("roundtrip_failed");
        return out;
    };
    if (m == 0) return finish();
    // window of upper partners for each lower index, and its mirror
    std::vector<std::set<int>> U(j + 1), D(m + 2);
    std::map<int, int> bpos;
    for (int q = 0; q < m; ++q) bpos[d.b_sequence[q]] = q + 1;
    for (auto [a, b] : d.edges) {
        int x = bpos[a], y = bpos[b];
        if (x > y) std::swap(x, y);
        U[x].insert(y);
        D[y].insert(x);
    }
    for (int i = 1; i < j; ++i) gam[i] = Rat(i, j);
    for (int r = j; r <= m; ++r) {
        detail::GammaBound lb, ub;
        if (r == j)
            detail::raise_lb(lb, Rat(1), true);
        else
            detail::raise_lb(lb, gam[r - 1], false);
        if (!D[r].empty()) {
            int h = *D[r].rbegin();
            if (h >= 2) detail::raise_lb(lb, Rat(1) + gam[h - 1], false);
        }
        for (int i : D[r])
            if (r < m && *U[i].rbegin() == r) detail::raise_lb(lb, Rat(1) + gam[i], true);
        detail::lower_ub(ub, Rat(2), false);
        if (r < m && !D[r + 1].empty()) {
            int i0 = *D[r + 1].begin();
            if (i0 != r) detail::lower_ub(ub, Rat(1) + gam[i0], false);
        }
        for (int i = 1; i <= j; ++i)
            if (!U[i].empty() && *U[i].begin() > r) {
                detail::lower_ub(ub, Rat(1) + gam[i - 1], true);
                break;
            }
        if (j >= 2 && U[j].empty()) detail::lower_ub(ub, Rat(1) + gam[j - 1], true);
        if (lb.v > ub.v || (lb.v == ub.v && !(lb.closed && ub.closed)))
            throw Error("roundtrip_failed");
        if (lb.v == ub.v)
            gam[r] = lb.v;
        else if (r == j && lb.v == Rat(1) && lb.closed)
            gam[r] = Rat(1);
        else
            gam[r] = (lb.v + ub.v) / 2;
    }
    return finish();
}

namespace detail {

inline void verify_edge_count(const Representation& rep, int k, const Int& want) {
    if (visibility_graph(rep, k).edge_count() != want) throw Error("construction_unverified");
}

} // namespace detail

// five groups of k+1 arcs plus short filler arcs below the first group
inline Representation gen_semiarc_max(int n, int k, Rat eps = Rat(1, 100)) {
    if (k < 0) throw Error("invalid_input");
    if (n < 5 * k + 5) throw Error("n_too_small");
    if (!(eps > 0) || !(Rat(k) * eps < Rat(1, 5))) throw Error("invalid_input");
    static const int num[5] = {1, 3, 5, 7, 9};
    std::vector<Rat> ext;
    for (int g = 0; g < 5; ++g) {
        for (int t = 0; t <= k; ++t) ext.push_back(Rat(num[g], 5) + Rat(t) * eps);
        if (g == 2) {
            int extras = n - (5 * k + 5);
            for (int t = 0; t < extras; ++t)
                ext.push_back(Rat(1, 5) * Rat(t + 1, extras + 2));
        }
    }
    Representation rep;
    rep.kind = Kind::semi_arc;
    for (int i = 0; i < n; ++i) rep.elems.push_back({i, i + 1, Rat(0), ext[i]});
    detail::verify_edge_count(rep, k, max_edges(Kind::semi_arc, n, k).value);
    return rep;
}

// 3k+4 arcs in four bundles whose graph is complete
inline Representation gen_complete_semiarc(int k, Rat eps = Rat(1, 100)) {
    if (k < 0) throw Error("invalid_input");
    if (!(eps > 0) || !(Rat(k) * eps < Rat(1, 3))) throw Error("invalid_input");
    std::vector<Rat> ext;
    for (int t = 0; t <= k; ++t) ext.push_back(Rat(1, 3) - Rat(t) * eps);
    for (int t = 0; t <= k; ++t) ext.push_back(Rat(2, 3) - Rat(t) * eps);
    for (int t = 0; t <= k; ++t) ext.push_back(Rat(1) + Rat(t) * eps);
    ext.push_back(Rat(5, 3));
    int n = 3 * k + 4;
    Representation rep;
    rep.kind = Kind::semi_arc;
    for (int i = 0; i < n; ++i) rep.elems.push_back({i, i + 1, Rat(0), ext[i]});
    detail::verify_edge_count(rep, k, choose2(n));
    return rep;
}

// m arcs whose endpoints land on distinct vertices of a regular (m+1)-gon
inline Representation gen_polygonal(int m) {
    if (m < 3) throw Error("invalid_input");
    Representation rep;
    rep.kind = Kind::semi_arc;
    for (int i = 1; i <= m; ++i) rep.elems.push_back({i - 1, i, Rat(0), Rat(2 * i, m + 1)});
    return rep;
}

namespace detail {

// six arcs forming a complete graph, found once by search and frozen
inline const int arc_core[6][2] = {{229, 98}, {148, 94}, {58, 108},
                                   {149, 113}, {468, 208}, {440, 373}};

} // namespace detail

// frozen complete core extended by a geometric tail of three-edge arcs
inline Representation gen_arc_max(int n) {
    if (n < 6) throw Error("n_too_small");
    Representation rep;
    rep.kind = Kind::arc;
    for (int i = 0; i < 6; ++i)
        rep.elems.push_back(
            {i, i + 1, Rat(detail::arc_core[i][0], 240), Rat(detail::arc_core[i][1], 240)});
    Rat p2(1);
    for (int j = 7; j <= n; ++j) {
        Rat L = Rat(322, 240) + Rat(4, 240) / p2;
        Rat R = Rat(430, 240) - Rat(40, 240) / p2;
        rep.elems.push_back({j - 1, j, L, R - L});
        p2 *= 2;
    }
    detail::verify_edge_count(rep, 0, Int(3 * n - 3));
    return rep;
}

// frozen coordinates for the named constructions, found once by search
inline Representation gen_named(const std::string& name) {
    Representation rep;
    rep.kind = Kind::arc;
    if (name == "K5_arc") {
        static const int coords[5][2] = {{81, 143}, {314, 101}, {375, 174}, {191, 348}, {192, 420}};
        for (int i = 0; i < 5; ++i)
            rep.elems.push_back({i, i + 1, Rat(coords[i][0], 240), Rat(coords[i][1], 240)});
        detail::verify_edge_count(rep, 0, choose2(5));
    } else if (name == "C4_arc") {
        static const Rat coords[4][2] = {{Rat(19, 10), Rat(3, 5)},
                                         {Rat(2, 5), Rat(39, 25)},
                                         {Rat(4, 5), Rat(29, 25)},
                                         {Rat(6, 5), Rat(9, 10)}};
        for (int i = 0; i < 4; ++i) rep.elems.push_back({i, i + 1, coords[i][0], coords[i][1]});
        Graph g = visibility_graph(rep, 0);
        Graph c4(4);
        c4.add(0, 1);
        c4.add(1, 2);
        c4.add(2, 3);
        c4.add(3, 0);
        if (!are_isomorphic(g, c4)) throw Error("construction_unverified");
    } else if (name == "K6_arc") {
        for (int i = 0; i < 6; ++i)
            rep.elems.push_back(
                {i, i + 1, Rat(detail::arc_core[i][0], 240), Rat(detail::arc_core[i][1], 240)});
        detail::verify_edge_count(rep, 0, choose2(6));
    } else {
        throw Error("invalid_input", "unknown name: " + name);
    }
    return rep;
}

namespace detail {

inline std::vector<int> nth_permutation(int n, long idx) {
    std::vector<int> pool(n), out;
    for (int i = 0; i < n; ++i) pool[i] = i;
    std::vector<long> fact(n + 1, 1);
    for (int i = 1; i <= n; ++i) fact[i] = fact[i - 1] * i;
    for (int i = n; i >= 1; --i) {
        int d = static_cast<int>(idx / fact[i - 1]);
        idx %= fact[i - 1];
        out.push_back(pool[d]);
        pool.erase(pool.begin() + d);
    }
    return out;
}

// scans candidate indices in parallel, keeping the lowest-index success
template <class Eval>
inline std::optional<Representation> first_hit(long total, Eval&& eval) {
    if (total <= 0) return std::nullopt;
    int workers = thread_budget(total);
    std::atomic<long> best(total);
    std::mutex mu;
    std::map<long, Representation> hits;
    auto run = [&](int w) {
        for (long i = w; i < total; i += workers) {
            if (i >= best.load(std::memory_order_relaxed)) break;
            auto r = eval(i);
            if (!r) continue;
            std::lock_guard<std::mutex> lk(mu);
            hits.emplace(i, std::move(*r));
            long cur = best.load();
            while (i < cur && !best.compare_exchange_weak(cur, i)) {
            }
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& t : pool) t.join();
    }
    long b = best.load();
    if (b >= total) return std::nullopt;
    return hits.at(b);
}

} // namespace detail

// best-effort hunt for a representation of the target; absence proves nothing
inline std::optional<Representation> search_representation(const Graph& target, Kind kind, int k,
                                                           long budget = 200000) {
    int n = target.n;
    if (n > 8) throw Error("too_large");
    if (budget <= 0) return std::nullopt;
    if (n == 0) return Representation{kind, {}};
    std::vector<long> fact(n + 1, 1);
    for (int i = 1; i <= n; ++i) fact[i] = fact[i - 1] * i;
    auto check = [&](Representation& rep) -> std::optional<Representation> {
        if (are_isomorphic(visibility_graph(rep, k), target)) return rep;
        return std::nullopt;
    };
    if (kind == Kind::semi_bar) {
        long total = std::min(budget, fact[n]);
        return detail::first_hit(total, [&](long i) -> std::optional<Representation> {
            auto perm = detail::nth_permutation(n, i);
            Representation rep;
            rep.kind = Kind::semi_bar;
            for (int t = 0; t < n; ++t) rep.elems.push_back({t, t + 1, Rat(0), Rat(perm[t] + 1)});
            return check(rep);
        });
    }
    if (kind == Kind::semi_arc) {
        long total = std::min(budget, (n + 1) * fact[n]);
        return detail::first_hit(total, [&](long i) -> std::optional<Representation> {
            int s = static_cast<int>(i / fact[n]);
            auto perm = detail::nth_permutation(n, i % fact[n]);
            Representation rep;
            rep.kind = Kind::semi_arc;
            for (int t = 0; t < n; ++t) {
                int v = perm[t];
                Rat ext = v < s ? Rat(v + 1, s + 1) : Rat(1) + Rat(v - s, n + 1);
                rep.elems.push_back({t, t + 1, Rat(0), ext});
            }
            return check(rep);
        });
    }
    if (kind == Kind::bar) {
        return detail::first_hit(budget, [&](long i) -> std::optional<Representation> {
            Splitmix rng(mix64(0xba5eba11u, static_cast<uint64_t>(i)));
            Representation rep;
            rep.kind = Kind::bar;
            for (int t = 0; t < n; ++t) {
                Rat a(static_cast<long>(rng.below(8 * n)), 8);
                Rat len(static_cast<long>(rng.below(8 * n)) + 1, 8);
                rep.elems.push_back({t, t + 1, a, a + len});
            }
            return check(rep);
        });
    }
    return detail::first_hit(budget, [&](long i) -> std::optional<Representation> {
        Splitmix rng(mix64(0xa5c0ffeeu, static_cast<uint64_t>(i)));
        Representation rep;
        rep.kind = Kind::arc;
        for (int t = 0; t < n; ++t) {
            Rat a(static_cast<long>(rng.below(480)), 240);
            Rat ext(static_cast<long>(rng.below(478)) + 1, 240);
            rep.elems.push_back({t, t + 1, a, ext});
        }
        return check(rep);
    });
}

// part 0 is the plain visibility graph; every extra edge is charged to the arc
// whose endpoint closes its highest line of sight, then split by out-slot
inline std::vector<Graph> thickness_decomposition(const Representation& rep0, int k) {
    if (rep0.kind != Kind::semi_arc) throw Error("not_semi_arc");
    if (k < 0) throw Error("invalid_input");
    Representation rep = rep0;
    {
        auto rp = validate(rep);
        if (!rp.ok()) throw Error("invalid_input");
        if (!rp.general_position) rep = general_position(rep, k);
    }
    CompiledRep C(rep);
    auto fg = family_graphs(C, k);
    Graph part0 = visibility_graph(C, 0);
    Graph gk = graph_union(fg.ss, fg.tc);
    int n = C.n;
    std::vector<std::vector<int>> outs(n);
    for (auto [u, v] : gk.edges()) {
        if (part0.has(u, v)) continue;
        const Rat& eu = C.el[u].b;
        const Rat& ev = C.el[v].b;
        int owner = -1;
        auto offer = [&](int c) {
            if (owner == -1 || C.el[c].b > C.el[owner].b) owner = c;
        };
        if (fg.ss.has(u, v)) offer(eu < ev ? u : v);
        if (fg.tc.has(u, v)) {
            int lo = u, hi = v;
            if (C.el[lo].rank > C.el[hi].rank) std::swap(lo, hi);
            auto ok = detail::valid_tc(C, lo, hi, k);
            // highest valid position in each half closes at one arc's endpoint
            int pa = -1, pb = -1;
            for (int p = 0; p < C.P; ++p)
                if (ok[p]) (C.param_of(p) < 1 ? pa : pb) = p;
            for (int p : {pa, pb}) {
                if (p < 0) continue;
                offer(C.param_of(p) == C.el[lo].b ? lo : hi);
            }
        }
        if (owner == -1) throw Error("degenerate_input");
        outs[owner].push_back(owner == u ? v : u);
    }
    std::vector<Graph> parts{part0};
    for (int u = 0; u < n; ++u) {
        if (static_cast<int>(outs[u].size()) > 2 * k) throw Error("outdegree_violation");
        std::sort(outs[u].begin(), outs[u].end());
        for (size_t t = 0; t < outs[u].size(); ++t) {
            while (parts.size() <= t + 1) parts.push_back(Graph(n));
            parts[t + 1].add(u, outs[u][t]);
        }
    }
    return parts;
}

} // namespace viskit

#endif
