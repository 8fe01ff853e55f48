#include <catch2/catch_amalgamated.hpp>
#include <viskit/sightlines.hpp>
#include "testutil.hpp"

using namespace viskit;
using testutil::arc_contains;
using testutil::brute_graph;
using testutil::brute_params;
using testutil::make_rep;
using testutil::Rng;
using testutil::semi_arc_rep;
using testutil::semi_bar_rep;

namespace {

// second opinion on per-parameter validity, straight from the definitions
bool ss_at(const std::vector<Element>& el, int u, int v, int k, const Rat& th) {
    if (!arc_contains(el[u], th) || !arc_contains(el[v], th)) return false;
    int lo = std::min(el[u].rank, el[v].rank), hi = std::max(el[u].rank, el[v].rank);
    int blk = 0;
    for (const auto& c : el)
        if (c.rank > lo && c.rank < hi && arc_contains(c, th)) ++blk;
    return blk <= k;
}

bool tc_at(const std::vector<Element>& el, int u, int v, int k, const Rat& th) {
    if (el[u].rank > el[v].rank) return false;
    Rat at = antipode(th);
    if (!arc_contains(el[u], th) || !arc_contains(el[v], at)) return false;
    int blk = 0;
    for (const auto& c : el) {
        if (c.id == u || c.id == v) continue;
        if ((c.rank < el[u].rank && arc_contains(c, th)) ||
            (c.rank < el[v].rank && arc_contains(c, at)))
            ++blk;
    }
    return blk <= k;
}

bool in_region(const VisibilityRegion& r, const Rat& th) {
    if (r.full) return true;
    if (r.lo <= r.hi) return r.lo <= th && th <= r.hi;
    return th >= r.lo || th <= r.hi;
}

bool on_boundary(const VisibilityRegion& r, const Rat& th) {
    return !r.full && (th == r.lo || th == r.hi);
}

std::vector<Rat> k7_extents() {
    Rat eps(1, 100);
    return {Rat(1, 3), Rat(1, 3) - eps, Rat(2, 3), Rat(2, 3) - eps,
            Rat(1),    Rat(1) + eps,    Rat(5, 3)};
}

}

TEST_CASE("critical parameters") {
    auto sa = semi_arc_rep({Rat(1, 2), Rat(1)});
    auto crit = critical_parameters(sa);
    CHECK(crit == std::vector<Rat>{Rat(0), Rat(1, 2), Rat(1), Rat(3, 2)});

    auto bar = make_rep(Kind::bar, {{1, Rat(0), Rat(1)}});
    CHECK(critical_parameters(bar) == std::vector<Rat>{Rat(0), Rat(1)});

    // complete 7-vertex construction at k=1 with eps = pi/100: the eight distinct
    // endpoint angles and eight antipodes overlap in exactly four values
    auto k7 = semi_arc_rep(k7_extents());
    CHECK(critical_parameters(k7).size() == 12);
}

TEST_CASE("visible pair witnesses") {
    auto sa = semi_arc_rep({Rat(1, 4), Rat(1, 4)});
    auto w = visible_pair(sa, 0, 1, 0);
    REQUIRE(w.has_value());
    CHECK(w->family == Family::same_side);
    CHECK((w->parameter >= 0 && w->parameter <= Rat(1, 4)));

    auto arc = make_rep(Kind::arc, {{1, Rat(0), Rat(1, 4)}, {2, Rat(1), Rat(1, 4)}});
    auto wc = visible_pair(arc, 0, 1, 0);
    REQUIRE(wc.has_value());
    CHECK(wc->family == Family::through_center);
    CHECK((wc->parameter >= 0 && wc->parameter <= Rat(1, 4)));
    CHECK(wc->u == 0);

    auto max5 = semi_arc_rep({Rat(1, 5), Rat(3, 5), Rat(1), Rat(7, 5), Rat(9, 5)});
    CHECK_FALSE(visible_pair(max5, 0, 4, 0).has_value());

    CHECK_THROWS_AS(visible_pair(sa, 0, 7, 0), Error);
    try {
        visible_pair(sa, 0, 7, 0);
    } catch (const Error& e) {
        CHECK(e.code == "bad_vertex");
    }
}

TEST_CASE("semi bar ladder graph") {
    // lengths grow as rank drops, so only rank distance decides visibility
    for (int k = 0; k <= 3; ++k) {
        int n = 8;
        std::vector<Rat> lens;
        for (int i = 0; i < n; ++i) lens.push_back(Rat(n - i));
        auto rep = semi_bar_rep(lens);
        auto g = visibility_graph(rep, k);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                CHECK(g.has(u, v) == (v - u <= k + 1));
        CHECK(g == brute_graph(rep, k));
        CHECK(g.edge_count() == (k + 1) * n - (k + 1) * (k + 2) / 2);
    }
}

TEST_CASE("region examples") {
    auto overlap = semi_arc_rep({Rat(1, 2), Rat(5, 4)});
    std::vector<VisibilityRegion> ssr;
    for (const auto& r : regions(overlap, 0, 1, 0))
        if (r.family == Family::same_side) ssr.push_back(r);
    REQUIRE(ssr.size() == 1);
    CHECK(ssr[0].lo == Rat(0));
    CHECK(ssr[0].hi == Rat(1, 2));

    // first and third arc of the five-arc extremal family touch only through the
    // center at the shared start ray
    auto max5 = semi_arc_rep({Rat(1, 5), Rat(3, 5), Rat(1), Rat(7, 5), Rat(9, 5)});
    auto r13 = regions(max5, 0, 2, 0);
    REQUIRE(r13.size() == 1);
    CHECK(r13[0].family == Family::through_center);
    CHECK(r13[0].lo == Rat(0));
    CHECK(r13[0].hi == Rat(0));
    CHECK_FALSE(r13[0].full);

    // a middle arc splitting one long overlap into two visibility windows
    auto split = make_rep(Kind::arc, {{1, Rat(0), Rat(3, 2)},
                                      {2, Rat(1, 2), Rat(1, 2)},
                                      {3, Rat(0), Rat(3, 2)}});
    int ss = 0;
    for (const auto& r : regions(split, 0, 2, 0)) ss += r.family == Family::same_side;
    CHECK(ss == 2);
}

TEST_CASE("region closure matches definitions on fuzzed arcs") {
    Rng rng(0xabcd01);
    for (int trial = 0; trial < 120; ++trial) {
        int n = 2 + rng.below(6);
        int k = rng.below(3);
        auto rep = trial % 2 ? testutil::fuzz_arc(rng, n) : testutil::fuzz_semi_arc(rng, n);
        auto el = by_id(rep);
        auto params = brute_params(rep);
        int u = rng.below(n), v = rng.below(n);
        if (u == v) continue;
        int lo = el[u].rank < el[v].rank ? u : v, hi = lo == u ? v : u;
        auto rs = regions(rep, u, v, k);
        for (const auto& th : params) {
            bool bss = ss_at(el, u, v, k, th);
            bool btc = tc_at(el, lo, hi, k, th);
            bool iss = false, itc = false, bnd_ss = true, bnd_tc = true;
            for (const auto& r : rs) {
                if (!in_region(r, th)) continue;
                if (r.family == Family::same_side) iss = true, bnd_ss &= on_boundary(r, th);
                else itc = true, bnd_tc &= on_boundary(r, th);
            }
            if (bss) CHECK(iss);
            if (btc) CHECK(itc);
            if (iss && !bss) CHECK(bnd_ss);
            if (itc && !btc) CHECK(bnd_tc);
        }
        for (const auto& r : rs) {
            if (r.full) continue;
            CHECK(r.owner_lo >= 0);
            CHECK(r.owner_hi >= 0);
            for (auto [owner, b] : {std::pair{r.owner_lo, r.lo}, {r.owner_hi, r.hi}}) {
                Angle s = norm2(el[owner].start()), t = norm2(el[owner].start() + el[owner].extent());
                bool at = s == b || t == b;
                if (r.family == Family::through_center)
                    at = at || s == antipode(b) || t == antipode(b);
                CHECK(at);
            }
        }
    }
}

TEST_CASE("engine agrees with brute force") {
    Rng rng(0x5eed);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + rng.below(9);
        int k = rng.below(4);
        auto rep = testutil::fuzz_semi_arc(rng, n);
        CHECK(visibility_graph(rep, k) == brute_graph(rep, k));
    }
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + rng.below(8);
        int k = rng.below(4);
        auto rep = testutil::fuzz_arc(rng, n);
        CHECK(visibility_graph(rep, k) == brute_graph(rep, k));
    }
    for (int trial = 0; trial < 150; ++trial) {
        int n = 1 + rng.below(8);
        int k = rng.below(4);
        auto rep = testutil::fuzz_bar(rng, n);
        CHECK(visibility_graph(rep, k) == brute_graph(rep, k));
    }
    for (int trial = 0; trial < 100; ++trial) {
        int n = 1 + rng.below(8);
        int k = rng.below(4);
        auto rep = testutil::fuzz_semi_bar(rng, n);
        CHECK(visibility_graph(rep, k) == brute_graph(rep, k));
    }
}

TEST_CASE("witnesses are valid sightlines") {
    Rng rng(0x77aa);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 2 + rng.below(7);
        int k = rng.below(3);
        auto rep = trial % 2 ? testutil::fuzz_arc(rng, n) : testutil::fuzz_bar(rng, n);
        auto g = visibility_graph(rep, k);
        auto el = by_id(rep);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                auto w = visible_pair(rep, u, v, k);
                CHECK(w.has_value() == g.has(u, v));
                if (!w) continue;
                CHECK(el[w->u].rank < el[w->v].rank);
                if (w->family == Family::same_side) CHECK(ss_at(el, u, v, k, w->parameter));
                else if (w->family == Family::through_center)
                    CHECK(tc_at(el, w->u, w->v, k, w->parameter));
                else {
                    int lo = std::min(el[u].rank, el[v].rank),
                        hi = std::max(el[u].rank, el[v].rank);
                    int blk = 0;
                    bool inu = el[u].left() <= w->parameter && w->parameter <= el[u].right();
                    bool inv = el[v].left() <= w->parameter && w->parameter <= el[v].right();
                    for (const auto& c : el)
                        if (c.rank > lo && c.rank < hi && c.left() <= w->parameter &&
                            w->parameter <= c.right())
                            ++blk;
                    CHECK((inu && inv && blk <= k));
                }
            }
    }
}

TEST_CASE("monotonicity in k") {
    Rng rng(0x1234);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + rng.below(7);
        auto rep = trial % 2 ? testutil::fuzz_arc(rng, n) : testutil::fuzz_bar(rng, n);
        Graph prev;
        for (int k = 0; k <= 3; ++k) {
            auto g = visibility_graph(rep, k);
            if (k > 0)
                for (auto [u, v] : prev.edges()) CHECK(g.has(u, v));
            prev = g;
        }
    }
}

TEST_CASE("center split") {
    auto max5 = semi_arc_rep({Rat(1, 5), Rat(3, 5), Rat(1), Rat(7, 5), Rat(9, 5)});
    auto cs = center_split(max5, 0);
    std::vector<std::pair<int, int>> want{{0, 2}, {0, 3}, {1, 3}, {1, 4}, {2, 4}};
    CHECK(cs.center_only == want);
    CHECK(cs.other.size() == 4);
    CHECK(cs.tc_edge_total >= static_cast<long long>(cs.center_only.size()));

    auto shallow = semi_arc_rep({Rat(1, 4), Rat(1, 2), Rat(3, 4)});
    CHECK(center_split(shallow, 0).center_only.empty());

    CHECK_THROWS_AS(center_split(make_rep(Kind::bar, {{1, Rat(0), Rat(1)}}), 0), Error);

    Rng rng(0xc0de);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 1 + rng.below(8);
        int k = rng.below(3);
        auto rep = testutil::fuzz_semi_arc(rng, n);
        auto el = by_id(rep);
        auto cs2 = center_split(rep, k);
        auto g = visibility_graph(rep, k);
        CHECK(cs2.center_only.size() + cs2.other.size() ==
              static_cast<size_t>(g.edge_count()));
        auto params = brute_params(rep);
        for (auto [u, v] : cs2.center_only) {
            bool any_ss = false;
            for (const auto& th : params) any_ss |= ss_at(el, u, v, k, th);
            CHECK_FALSE(any_ss);
        }
    }
}

TEST_CASE("edge classification") {
    CHECK_THROWS_AS(classify_edges(semi_arc_rep({Rat(1, 2), Rat(1)}), 0), Error);
    auto bad = make_rep(Kind::arc, {{1, Rat(0), Rat(1, 2)}, {2, Rat(1), Rat(1, 2)}});
    CHECK_THROWS_AS(classify_edges(bad, 0), Error);

    // a middle arc whose endpoint is the limiting line of the inner/outer window
    auto rep = make_rep(Kind::arc, {{1, Rat(0), Rat(7, 8)},
                                    {2, Rat(1, 8), Rat(3, 8)},
                                    {3, Rat(1, 16), Rat(3, 2)}});
    REQUIRE(validate(rep).general_position);
    auto ec = classify_edges(rep, 0);
    auto hasp = [](const std::vector<std::pair<int, int>>& v, int a, int b) {
        return std::find(v.begin(), v.end(), std::pair{a, b}) != v.end();
    };
    CHECK(hasp(ec.positive[1], 0, 2));
    CHECK(hasp(ec.negative[0], 0, 2));
    CHECK(hasp(ec.negative[2], 0, 2));
}

TEST_CASE("classification accounting on fuzzed general position arcs") {
    Rng rng(0xfeed);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + rng.below(6);
        int k = rng.below(3);
        auto rep = testutil::fuzz_arc_gp(rng, n);
        auto ec = classify_edges(rep, k);
        size_t assigned = 0;
        for (int a = 0; a < n; ++a) assigned += ec.positive[a].size() + ec.negative[a].size();
        size_t region_count = 0;
        auto g = visibility_graph(rep, k);
        for (auto [u, v] : g.edges()) {
            auto rs = regions(rep, u, v, k);
            region_count += rs.size();
            // within a family, distinct regions have distinct limiting lines
            std::vector<std::pair<int, Rat>> lims;
            for (const auto& r : rs) {
                if (r.full) continue;
                bool lo_limits = r.lo == r.hi || to_arg(r.lo) < to_arg(r.hi);
                lims.push_back({static_cast<int>(r.family), lo_limits ? r.lo : r.hi});
            }
            std::sort(lims.begin(), lims.end());
            CHECK(std::adjacent_find(lims.begin(), lims.end()) == lims.end());
            CHECK(rs.size() >= 1);
        }
        CHECK(assigned == region_count);
        for (int a = 0; a < n; ++a) {
            for (auto [u, v] : ec.positive[a]) {
                CHECK(a != u);
                CHECK(a != v);
            }
            for (auto [u, v] : ec.negative[a]) CHECK((a == u || a == v));
        }
    }
}

TEST_CASE("stab number") {
    auto disjoint = make_rep(Kind::bar, {{1, Rat(0), Rat(1)}, {2, Rat(2), Rat(3)},
                                         {3, Rat(4), Rat(5)}});
    CHECK(stab_number(disjoint) == 1);
    CHECK(stab_number(semi_bar_rep({Rat(1), Rat(2), Rat(3), Rat(4)})) == 4);
    auto mix = make_rep(Kind::bar, {{1, Rat(0), Rat(2)}, {2, Rat(1), Rat(3)},
                                    {3, Rat(4), Rat(5)}});
    CHECK(stab_number(mix) == 2);
    CHECK_THROWS_AS(stab_number(semi_arc_rep({Rat(1, 2)})), Error);
}

TEST_CASE("interval graph of bars") {
    auto disjoint = make_rep(Kind::bar, {{1, Rat(0), Rat(1)}, {2, Rat(2), Rat(3)}});
    CHECK(interval_graph_of(disjoint).edge_count() == 0);
    CHECK(interval_graph_of(semi_bar_rep({Rat(1), Rat(2), Rat(3)})).edge_count() == 3);
    auto mix = make_rep(Kind::bar, {{1, Rat(0), Rat(2)}, {2, Rat(1), Rat(3)},
                                    {3, Rat(4), Rat(5)}});
    auto g = interval_graph_of(mix);
    CHECK(g.edge_count() == 1);
    CHECK(g.has(0, 1));

    // with few enough stabbed bars, k-visibility already saturates the interval graph
    Rng rng(0xbeef);
    for (int trial = 0; trial < 80; ++trial) {
        int n = 1 + rng.below(7);
        int k = rng.below(4);
        auto rep = testutil::fuzz_bar(rng, n);
        auto gi = interval_graph_of(rep);
        auto gv = visibility_graph(rep, k);
        for (auto [u, v] : gv.edges()) CHECK(gi.has(u, v));
        if (stab_number(rep) <= k + 2) CHECK(gv == gi);
    }
}
