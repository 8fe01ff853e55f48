#ifndef VISKIT_SIGHTLINES_HPP
#define VISKIT_SIGHTLINES_HPP

#include "graph.hpp"
#include "representation.hpp"
#include <optional>

namespace viskit {

enum class Family { same_side, through_center, vertical };

inline const char* family_name(Family f) {
    switch (f) {
        case Family::same_side: return "same_side";
        case Family::through_center: return "through_center";
        default: return "vertical";
    }
}

// a witness line of sight; for through_center the parameter sits on the lower arc
struct Sightline {
    Family family;
    Rat parameter;
    int u = -1, v = -1;
};

// maximal closed parameter interval of valid sightlines for one edge and family
struct VisibilityRegion {
    int u = -1, v = -1;
    Family family = Family::same_side;
    Rat lo, hi;
    bool full = false;
    int owner_lo = -1, owner_hi = -1;
};

struct EdgeClassification {
    std::vector<std::vector<std::pair<int, int>>> positive, negative;
    std::vector<std::pair<int, int>> flagged;
};

struct CenterSplit {
    std::vector<std::pair<int, int>> center_only, other;
    long long tc_edge_total = 0;
};

// sweep decomposition: critical parameters plus the open intervals between them.
// positions are indexed 0..P-1: even 2i is the point crit[i], odd 2i+1 the open
// interval after it; arc kinds close the cycle, bar kinds stop at the last point.
struct CompiledRep {
    Kind kind = Kind::semi_arc;
    int n = 0;
    bool circular = false;
    int m = 0, P = 0;
    std::vector<Element> el;
    std::vector<Rat> crit;
    std::vector<int> beg, end;
    std::vector<int> off;
    std::vector<int> dat;

    explicit CompiledRep(const Representation& rep) {
        kind = rep.kind;
        n = rep.n();
        circular = is_arc_kind(kind);
        el = by_id(rep);
        for (const auto& e : el) {
            if (circular) {
                Angle s = norm2(e.start()), t = norm2(e.start() + e.extent());
                crit.push_back(s);
                crit.push_back(t);
                crit.push_back(antipode(s));
                crit.push_back(antipode(t));
            } else {
                crit.push_back(e.left());
                crit.push_back(e.right());
            }
        }
        std::sort(crit.begin(), crit.end());
        crit.erase(std::unique(crit.begin(), crit.end()), crit.end());
        m = static_cast<int>(crit.size());
        P = m == 0 ? 0 : (circular ? 2 * m : 2 * m - 1);

        auto idx_of = [&](const Rat& q) {
            return static_cast<int>(std::lower_bound(crit.begin(), crit.end(), q) - crit.begin());
        };
        beg.resize(n);
        end.resize(n);
        for (int i = 0; i < n; ++i) {
            if (circular) {
                beg[i] = 2 * idx_of(norm2(el[i].start()));
                end[i] = 2 * idx_of(norm2(el[i].start() + el[i].extent()));
            } else {
                beg[i] = 2 * idx_of(el[i].left());
                end[i] = 2 * idx_of(el[i].right());
            }
        }

        // active lists per position in rank order, stored flat
        std::vector<int> order(n);
        for (int i = 0; i < n; ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](int x, int y) { return el[x].rank < el[y].rank; });
        off.assign(P + 1, 0);
        for (int p = 0; p < P; ++p) {
            int c = 0;
            for (int i = 0; i < n; ++i) c += covers(i, p);
            off[p + 1] = off[p] + c;
        }
        dat.resize(off[P]);
        for (int p = 0; p < P; ++p) {
            int at = off[p];
            for (int i : order)
                if (covers(i, p)) dat[at++] = i;
        }
    }

    bool covers(int i, int p) const {
        if (circular) return (p - beg[i] + P) % P <= (end[i] - beg[i] + P) % P;
        return beg[i] <= p && p <= end[i];
    }
    int antip_pos(int p) const { return (p + m) % P; }
    const int* active(int p) const { return dat.data() + off[p]; }
    int active_size(int p) const { return off[p + 1] - off[p]; }
    int index_in_active(int p, int id) const {
        const int* a = active(p);
        int lo = 0, hi = active_size(p);
        while (lo < hi) {
            int mid = (lo + hi) / 2;
            if (el[a[mid]].rank < el[id].rank) lo = mid + 1;
            else hi = mid;
        }
        return lo < active_size(p) && a[lo] == id ? lo : -1;
    }
    Rat param_of(int p) const {
        if (p % 2 == 0) return crit[p / 2];
        int i = (p - 1) / 2;
        if (circular) return circ_mid(crit[i], crit[(i + 1) % m]);
        return (crit[i] + crit[i + 1]) / 2;
    }
    // blockers of the through-center segment from id u at position p to v at antip(p);
    // requires rank(u) < rank(v), u active at p, v active at antip(p)
    int tc_blockers(int p, int u, int v) const {
        int q = antip_pos(p);
        int i = index_in_active(p, u), j = index_in_active(q, v);
        int both = 0;
        const int* a = active(p);
        for (int c = 0; c < i; ++c) both += covers(a[c], q);
        return i + j - both - (covers(u, q) ? 1 : 0);
    }
};

inline std::vector<Rat> critical_parameters(const Representation& rep) {
    return CompiledRep(rep).crit;
}

struct FamilyGraphs {
    Graph ss, tc;
};

// per-family edge sets; ss holds vertical edges for bar kinds, tc stays empty there
inline FamilyGraphs family_graphs(const CompiledRep& C, int k) {
    FamilyGraphs fg{Graph(C.n), Graph(C.n)};
    for (int p = 0; p < C.P; ++p) {
        const int* A = C.active(p);
        int a = C.active_size(p);
        for (int i = 0; i < a; ++i)
            for (int j = i + 1; j <= i + k + 1 && j < a; ++j)
                fg.ss.add(A[i], A[j]);
        if (!C.circular) continue;
        int q = C.antip_pos(p);
        const int* B = C.active(q);
        int b = C.active_size(q);
        for (int i = 0; i < a && i <= k; ++i) {
            int u = A[i];
            int both = 0;
            for (int c = 0; c < i; ++c) both += C.covers(A[c], q);
            int uq = C.covers(u, q) ? 1 : 0;
            for (int j = 0; j < b && j <= k + 1; ++j) {
                int v = B[j];
                if (v == u || C.el[v].rank < C.el[u].rank) continue;
                if (i + j - both - uq <= k) fg.tc.add(u, v);
            }
        }
    }
    return fg;
}

inline Graph visibility_graph(const CompiledRep& C, int k) {
    auto fg = family_graphs(C, k);
    return graph_union(fg.ss, fg.tc);
}

inline Graph visibility_graph(const Representation& rep, int k) {
    return visibility_graph(CompiledRep(rep), k);
}

namespace detail {

inline void check_vertex(const CompiledRep& C, int u) {
    if (u < 0 || u >= C.n) throw Error("bad_vertex", "no element with id " + std::to_string(u));
}

// per-position validity of the pair under each family; u, v by id
inline std::vector<char> valid_ss(const CompiledRep& C, int u, int v, int k) {
    std::vector<char> ok(C.P, 0);
    for (int p = 0; p < C.P; ++p) {
        int i = C.index_in_active(p, u), j = C.index_in_active(p, v);
        if (i < 0 || j < 0) continue;
        ok[p] = std::abs(i - j) - 1 <= k;
    }
    return ok;
}

// u must be the lower-rank arc: the parameter lives on it
inline std::vector<char> valid_tc(const CompiledRep& C, int u, int v, int k) {
    std::vector<char> ok(C.P, 0);
    for (int p = 0; p < C.P; ++p) {
        if (!C.covers(u, p) || !C.covers(v, C.antip_pos(p))) continue;
        ok[p] = C.tc_blockers(p, u, v) <= k;
    }
    return ok;
}

struct Run {
    int a, b;
};

// maximal runs of valid positions; circular wraps, full circle reported separately
inline std::pair<std::vector<Run>, bool> runs_of(const std::vector<char>& ok, bool circular) {
    int P = static_cast<int>(ok.size());
    std::vector<Run> runs;
    if (P == 0) return {runs, false};
    if (!circular) {
        for (int p = 0; p < P; ++p) {
            if (!ok[p]) continue;
            int b = p;
            while (b + 1 < P && ok[b + 1]) ++b;
            runs.push_back({p, b});
            p = b;
        }
        return {runs, false};
    }
    int start = -1;
    for (int p = 0; p < P; ++p)
        if (!ok[p]) {
            start = p;
            break;
        }
    if (start < 0) return {runs, true};
    for (int t = 0; t < P;) {
        int p = (start + 1 + t) % P;
        if (!ok[p]) {
            ++t;
            continue;
        }
        int len = 1;
        while (len < P && ok[(start + 1 + t + len) % P]) ++len;
        runs.push_back({p, (p + len - 1) % P});
        t += len;
    }
    return {runs, false};
}

inline int owner_at(const CompiledRep& C, Family fam, const Rat& psi, int u, int v) {
    int ru = C.el[u].rank, rv = C.el[v].rank;
    int rlo = std::min(ru, rv), rhi = std::max(ru, rv);
    int best = -1;
    for (int c = 0; c < C.n; ++c) {
        bool hit = false;
        if (C.kind == Kind::bar || C.kind == Kind::semi_bar) {
            hit = (C.el[c].left() == psi || C.el[c].right() == psi) && C.el[c].rank >= rlo &&
                  C.el[c].rank <= rhi;
        } else {
            Angle s = norm2(C.el[c].start()), t = norm2(C.el[c].start() + C.el[c].extent());
            if (fam == Family::same_side)
                hit = (s == psi || t == psi) && C.el[c].rank >= rlo && C.el[c].rank <= rhi;
            else {
                Angle ap = antipode(psi);
                hit = ((s == psi || t == psi) && C.el[c].rank <= ru) ||
                      ((s == ap || t == ap) && C.el[c].rank <= rv);
            }
        }
        if (hit && (best < 0 || c < best)) best = c;
    }
    return best;
}

inline std::vector<VisibilityRegion> regions_impl(const CompiledRep& C, int u, int v, int k) {
    check_vertex(C, u);
    check_vertex(C, v);
    std::vector<VisibilityRegion> out;
    if (u == v || C.P == 0) return out;
    int lo_id = C.el[u].rank < C.el[v].rank ? u : v;
    int hi_id = lo_id == u ? v : u;

    auto emit = [&](Family fam, const std::vector<char>& ok) {
        auto [runs, full] = runs_of(ok, C.circular);
        if (full) {
            VisibilityRegion r;
            r.u = lo_id;
            r.v = hi_id;
            r.family = fam;
            r.full = true;
            out.push_back(r);
            return;
        }
        for (const auto& run : runs) {
            VisibilityRegion r;
            r.u = lo_id;
            r.v = hi_id;
            r.family = fam;
            // closure pulls open interval ends back to their bounding criticals
            int ia = run.a % 2 == 0 ? run.a / 2 : (run.a - 1) / 2;
            int ib = run.b % 2 == 0 ? run.b / 2 : (run.b + 1) / 2;
            r.lo = C.crit[ia % C.m];
            r.hi = C.crit[ib % C.m];
            if (r.lo == r.hi && run.a != run.b) {
                // the closure wraps the whole circle: no boundary remains
                r.full = true;
                out.push_back(r);
                continue;
            }
            r.owner_lo = owner_at(C, fam, r.lo, lo_id, hi_id);
            r.owner_hi = owner_at(C, fam, r.hi, lo_id, hi_id);
            out.push_back(r);
        }
    };

    if (C.circular) {
        emit(Family::same_side, valid_ss(C, u, v, k));
        emit(Family::through_center, valid_tc(C, lo_id, hi_id, k));
    } else {
        emit(Family::vertical, valid_ss(C, u, v, k));
    }
    return out;
}

}

inline std::vector<VisibilityRegion> regions(const Representation& rep, int u, int v, int k) {
    CompiledRep C(rep);
    return detail::regions_impl(C, u, v, k);
}

inline std::optional<Sightline> visible_pair(const Representation& rep, int u, int v, int k) {
    CompiledRep C(rep);
    detail::check_vertex(C, u);
    detail::check_vertex(C, v);
    if (u == v) return std::nullopt;
    int lo_id = C.el[u].rank < C.el[v].rank ? u : v;
    int hi_id = lo_id == u ? v : u;
    auto ss = detail::valid_ss(C, u, v, k);
    for (int p = 0; p < C.P; ++p)
        if (ss[p])
            return Sightline{C.circular ? Family::same_side : Family::vertical, C.param_of(p),
                             lo_id, hi_id};
    if (C.circular) {
        auto tc = detail::valid_tc(C, lo_id, hi_id, k);
        for (int p = 0; p < C.P; ++p)
            if (tc[p]) return Sightline{Family::through_center, C.param_of(p), lo_id, hi_id};
    }
    return std::nullopt;
}

inline CenterSplit center_split(const Representation& rep, int k) {
    if (rep.kind != Kind::semi_arc) throw Error("not_semi_arc");
    CompiledRep C(rep);
    auto fg = family_graphs(C, k);
    CenterSplit cs;
    cs.tc_edge_total = fg.tc.edge_count();
    for (auto [u, v] : graph_union(fg.ss, fg.tc).edges()) {
        if (fg.tc.has(u, v) && !fg.ss.has(u, v)) cs.center_only.push_back({u, v});
        else cs.other.push_back({u, v});
    }
    return cs;
}

inline EdgeClassification classify_edges(const Representation& rep, int k) {
    if (rep.kind != Kind::arc) throw Error("degenerate_input", "classification needs full general position");
    auto vr = validate(rep);
    if (!vr.ok() || !vr.general_position)
        throw Error("degenerate_input", "classification needs full general position");
    CompiledRep C(rep);
    EdgeClassification ec;
    ec.positive.resize(C.n);
    ec.negative.resize(C.n);
    for (auto [u, v] : visibility_graph(C, k).edges()) {
        for (const auto& r : detail::regions_impl(C, u, v, k)) {
            if (r.full) {
                ec.negative[u].push_back({u, v});
                ec.negative[v].push_back({u, v});
                ec.flagged.push_back({u, v});
                continue;
            }
            // the limiting line is the boundary with the smaller argument in (-pi, pi]
            bool lo_limits = r.lo == r.hi || to_arg(r.lo) < to_arg(r.hi);
            int owner = lo_limits ? r.owner_lo : r.owner_hi;
            if (owner == u || owner == v) ec.negative[owner].push_back({u, v});
            else if (owner >= 0) ec.positive[owner].push_back({u, v});
        }
    }
    return ec;
}

inline int stab_number(const Representation& rep) {
    if (is_arc_kind(rep.kind)) throw Error("bad_kind", "stab number is defined for bar kinds");
    CompiledRep C(rep);
    int best = 0;
    for (int p = 0; p < C.P; ++p) best = std::max(best, C.active_size(p));
    return best;
}

inline Graph interval_graph_of(const Representation& rep) {
    if (is_arc_kind(rep.kind)) throw Error("bad_kind", "interval graph is defined for bar kinds");
    auto el = by_id(rep);
    Graph g(rep.n());
    for (int u = 0; u < rep.n(); ++u)
        for (int v = u + 1; v < rep.n(); ++v)
            if (el[u].left() <= el[v].right() && el[v].left() <= el[u].right()) g.add(u, v);
    return g;
}

}

#endif
