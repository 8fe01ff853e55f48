#include <catch2/catch_amalgamated.hpp>
#include <viskit/bounds.hpp>
#include <viskit/sightlines.hpp>
#include "testutil.hpp"
#include <algorithm>
#include <numeric>

using namespace viskit;

namespace {

// oracle: mean edge count over every length permutation of n semi-bars
Rat enumerated_mean_edges(int n, int k) {
    std::vector<Rat> lens(n);
    std::iota(lens.begin(), lens.end(), Rat(1));
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Int total = 0;
    Int count = 0;
    do {
        std::vector<Rat> arranged(n);
        for (int i = 0; i < n; ++i) arranged[i] = lens[perm[i]];
        auto rep = testutil::semi_bar_rep(arranged);
        total += (long)visibility_graph(rep, k).edge_count();
        ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return Rat(total, count);
}

// oracle: mean number of positions whose value is the i-th largest so far
Rat enumerated_mean_records(int i, int n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    Int total = 0;
    Int count = 0;
    do {
        for (int j = 0; j < n; ++j) {
            int larger = 0;
            for (int l = 0; l < j; ++l)
                if (perm[l] > perm[j]) ++larger;
            if (larger == i - 1) ++total;
        }
        ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return Rat(total, count);
}

} // namespace

TEST_CASE("maximum edge counts") {
    auto a = max_edges(Kind::arc, 10, 0);
    CHECK(a.value == 27);
    CHECK(a.tight);
    auto s = max_edges(Kind::semi_arc, 10, 1);
    CHECK(s.value == 37);
    CHECK(s.tight);
    auto small = max_edges(Kind::arc, 4, 0);
    CHECK(small.value == 6);
    CHECK(small.tight);
    CHECK(!max_edges(Kind::arc, 20, 1).tight);
    CHECK(max_edges(Kind::arc, 20, 1).value == 2 * (120 - 9) / 2);

    CHECK(max_edges(Kind::semi_arc, 7, 1).value == choose2(7));
    CHECK(max_edges(Kind::semi_arc, 7, 1).tight);
    CHECK(!max_edges(Kind::semi_arc, 8, 1).tight);
    CHECK(max_edges(Kind::semi_arc, 8, 1).value == 29);

    CHECK(max_edges(Kind::semi_bar, 5, 0).value == 7);
    CHECK(max_edges(Kind::semi_bar, 2, 3).value == 1);
    CHECK(max_edges(Kind::semi_bar, 9, 1).tight);

    CHECK_THROWS_AS(max_edges(Kind::bar, 5, 0), Error);

    // the stated formulas are integral across the supported range
    for (long k = 0; k <= 6; ++k)
        for (long n = 1; n <= 60; ++n) {
            CHECK(max_edges(Kind::arc, n, k).value >= 0);
            CHECK(max_edges(Kind::semi_arc, n, k).value >= 0);
            CHECK(max_edges(Kind::semi_bar, n, k).value >= 0);
        }
}

TEST_CASE("expected semibar edges") {
    CHECK(expected_edges_semibar(3, 0) == Rat(7, 3));
    CHECK(expected_edges_semibar(4, 0) == Rat(23, 6));
    CHECK(expected_edges_semibar(2, 5) == Rat(1));

    for (int k = 0; k <= 2; ++k)
        for (int n = 2; n <= 6; ++n)
            CHECK(expected_edges_semibar(n, k) == enumerated_mean_edges(n, k));

    // regime boundary: the (k+3)rd bar adds (1/2)(k+1)(4 - 2(k+2)/(k+3))
    for (long k = 0; k <= 5; ++k) {
        Rat inc = Rat(k + 1) * (Rat(4) - Rat(2 * (k + 2), k + 3)) / 2;
        CHECK(expected_edges_semibar(k + 3, k) - Rat(choose2(k + 2)) == inc);
    }

    for (long k = 0; k <= 3; ++k)
        for (long n = k + 3; n <= 30; ++n) {
            CHECK(expected_edges_semibar(n, k) <= Rat(max_edges(Kind::semi_bar, n, k).value));
            CHECK(expected_edges_semibar(n, k) >= Rat((k + 1) * n) - Rat((k + 1) * (k + 2), 2));
        }
}

TEST_CASE("azuma tail") {
    CHECK(azuma_tail(10, 0, 0.0) == 1.0);
    CHECK(azuma_tail(100, 2, 30.0) == Catch::Approx(2.0 * std::exp(-18.0)));
    double prev = 2.0;
    for (double t = 0; t <= 20; t += 0.5) {
        double cur = azuma_tail(50, 1, t);
        CHECK(cur <= prev);
        CHECK(cur <= 1.0);
        prev = cur;
    }
}

TEST_CASE("expected records") {
    CHECK(expected_records(1, 3) == Rat(11, 6));
    CHECK(expected_records(4, 4) == Rat(1, 4));
    CHECK(expected_records(2, 4) == Rat(13, 12));

    for (int n = 2; n <= 6; ++n)
        for (int i = 1; i <= std::min(n, 3); ++i)
            CHECK(expected_records(i, n) == enumerated_mean_records(i, n));

    for (int n = 2; n <= 12; ++n)
        for (int i = 1; i < n; ++i) {
            CHECK(expected_records(i, n) > expected_records(i + 1, n));
            CHECK(expected_records(i, n + 1) > expected_records(i, n));
        }
}

TEST_CASE("center expectation bound") {
    CHECK(center_expectation_bound(7, 0) == expected_records(1, 7));
    CHECK(center_expectation_bound(5, 1) == Rat(351, 60));
    // coefficients sum to (k+1)(k+2)/2 leading multiples of the top record count
    for (long k = 0; k <= 4; ++k) {
        Rat top = center_expectation_bound(2, k);
        Rat coeff(0);
        for (long i = 1; i <= k + 1; ++i) coeff += Rat(k + 2 - i);
        CHECK(coeff == Rat((k + 1) * (k + 2), 2));
        CHECK(top <= coeff * expected_records(1, 2));
    }
}
