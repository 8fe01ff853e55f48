#ifndef VISKIT_ENSEMBLES_HPP
#define VISKIT_ENSEMBLES_HPP

#include <viskit/bounds.hpp>
#include <viskit/representation.hpp>
#include <viskit/sightlines.hpp>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

namespace viskit {

struct Splitmix {
    uint64_t state;
    explicit Splitmix(uint64_t seed) : state(seed) {}
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    uint64_t below(uint64_t m) {
        uint64_t threshold = (0 - m) % m;
        for (;;) {
            uint64_t r = next();
            if (r >= threshold) return r % m;
        }
    }
};

inline uint64_t mix64(uint64_t seed, uint64_t i) {
    Splitmix s(seed ^ (i * 0xd1b54a32d192ed03ull));
    return s.next();
}

struct EnsembleStats {
    std::string statistic;
    long trials = 0;
    double mean = 0;
    double sample_stddev = 0;
    double confidence_radius = 0;
    uint64_t seed = 0;
    std::optional<Rat> exact_reference;
};

inline std::pair<Representation, Graph> sample_semibar(int n, int k, uint64_t seed) {
    Splitmix rng(seed);
    std::vector<int> lens(n);
    std::iota(lens.begin(), lens.end(), 1);
    for (int i = n - 1; i > 0; --i)
        std::swap(lens[i], lens[(int)rng.below(i + 1)]);
    Representation rep;
    rep.kind = Kind::semi_bar;
    for (int i = 0; i < n; ++i)
        rep.elems.push_back({i, i + 1, Rat(0), Rat(lens[i])});
    Graph g = visibility_graph(rep, k);
    return {std::move(rep), std::move(g)};
}

inline std::tuple<Representation, Graph, long> sample_semiarc(int n, int k, uint64_t seed) {
    Splitmix rng(seed);
    std::set<uint64_t> used;
    Representation rep;
    rep.kind = Kind::semi_arc;
    for (int i = 0; i < n; ++i) {
        uint64_t key = rng.next() >> 1;
        while (!used.insert(key).second) key = rng.next() >> 1;
        Rat extent(2 * Int(key) + 1, Int(1) << 63);
        rep.elems.push_back({i, i + 1, Rat(0), extent});
    }
    Graph g = visibility_graph(rep, k);
    long center = (long)center_split(rep, k).center_only.size();
    return {std::move(rep), std::move(g), center};
}

enum class Statistic { edges, center_only };

inline const char* statistic_name(Statistic s) {
    return s == Statistic::edges ? "edges" : "center_only";
}

inline Rat exact_expectation_by_enumeration(int n, int k, Statistic stat) {
    if (n > 8) throw Error("too_large");
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    // fixed generic extents used for the semi-arc rank-order model
    std::vector<Rat> grid(n);
    Rat shrink = Rat(1) - Rat(1, 1 << 20);
    for (int i = 0; i < n; ++i) grid[i] = Rat(2 * i + 1, n) * shrink;
    Int total = 0, count = 0;
    do {
        if (stat == Statistic::edges) {
            Representation rep;
            rep.kind = Kind::semi_bar;
            for (int i = 0; i < n; ++i)
                rep.elems.push_back({i, i + 1, Rat(0), Rat(perm[i] + 1)});
            total += (long)visibility_graph(rep, k).edge_count();
        } else {
            Representation rep;
            rep.kind = Kind::semi_arc;
            for (int i = 0; i < n; ++i)
                rep.elems.push_back({i, i + 1, Rat(0), grid[perm[i]]});
            total += (long)center_split(rep, k).center_only.size();
        }
        ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return Rat(total, count);
}

struct SamplerSpec {
    Kind kind = Kind::semi_bar;
    int n = 1;
    int k = 0;
};

inline long sample_statistic(const SamplerSpec& spec, Statistic stat, uint64_t trial_seed) {
    if (spec.kind == Kind::semi_bar) {
        auto [rep, g] = sample_semibar(spec.n, spec.k, trial_seed);
        return (long)g.edge_count();
    }
    auto [rep, g, center] = sample_semiarc(spec.n, spec.k, trial_seed);
    return stat == Statistic::edges ? (long)g.edge_count() : center;
}

inline int thread_budget(long trials) {
    const char* env = std::getenv("VISKIT_THREADS");
    long want = env ? std::atol(env) : 1;
    if (want < 1) want = 1;
    if (want > trials) want = trials;
    return (int)want;
}

inline EnsembleStats monte_carlo(const SamplerSpec& spec, Statistic stat, long trials,
                                 uint64_t seed) {
    int workers = thread_budget(trials);
    std::vector<Int> sums(workers, 0), sqsums(workers, 0);
    auto run = [&](int w) {
        Int s = 0, q = 0;
        for (long i = w; i < trials; i += workers) {
            long v = sample_statistic(spec, stat, mix64(seed, (uint64_t)i));
            s += v;
            q += Int(v) * v;
        }
        sums[w] = s;
        sqsums[w] = q;
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& t : pool) t.join();
    }
    Int sum = 0, sq = 0;
    for (int w = 0; w < workers; ++w) {
        sum += sums[w];
        sq += sqsums[w];
    }
    EnsembleStats out;
    out.statistic = statistic_name(stat);
    out.trials = trials;
    out.seed = seed;
    out.mean = static_cast<double>(Rat(sum, trials));
    if (trials > 1) {
        Rat var = (Rat(sq) - Rat(sum * sum, trials)) / (trials - 1);
        out.sample_stddev = std::sqrt(static_cast<double>(var));
    }
    out.confidence_radius = 4.0 * out.sample_stddev / std::sqrt((double)trials);
    if (spec.kind == Kind::semi_bar && stat == Statistic::edges)
        out.exact_reference = expected_edges_semibar(spec.n, spec.k);
    return out;
}

} // namespace viskit

#endif
