#include <CLI11.hpp>
#include <viskit/atlas.hpp>
#include <viskit/ensembles.hpp>
#include <viskit/graphtools.hpp>
#include <viskit/io.hpp>

#include <fstream>
#include <iostream>
#include <thread>

using namespace viskit;

namespace {

std::string slurp(const std::string& path) {
    if (path.empty() || path == "-")
        return std::string(std::istreambuf_iterator<char>(std::cin), {});
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("io_error", "cannot open '" + path + "'");
    return std::string(std::istreambuf_iterator<char>(in), {});
}

std::string pairs_json(const std::vector<std::pair<int, int>>& ps) {
    std::string s = "[";
    for (size_t i = 0; i < ps.size(); ++i) {
        if (i) s += ',';
        s += "[" + std::to_string(ps[i].first) + "," + std::to_string(ps[i].second) + "]";
    }
    return s + "]";
}

std::string ints_json(const std::vector<int>& v) {
    std::string s = "[";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
    }
    return s + "]";
}

std::string dec12(const Rat& q) { return detail::fixed_str(static_cast<double>(q), 12); }

Kind parse_class(std::string s) {
    if (s == "semibar") s = "semi_bar";
    if (s == "semiarc") s = "semi_arc";
    return kind_from_name(s);
}

int exit_class(const Error& e) {
    return e.code == "parse_error" || e.code == "io_error" ? 3 : 1;
}

struct ComputeOpts {
    std::string input = "-", format = "json";
    int k = 0;
    bool classify = false, censplit = false;
};

int run_compute(const ComputeOpts& o) {
    Representation rep = parse_representation(slurp(o.input));
    Graph g = visibility_graph(rep, o.k);
    if (!o.classify && !o.censplit) {
        std::string s = emit_graph(g, o.format);
        std::cout << s;
        if (o.format == "json") std::cout << "\n";
        return 0;
    }
    if (o.format != "json")
        throw Error("invalid_input", "--classify and --center-split need json output");
    std::string s = emit_graph(g, "json");
    s.pop_back();
    if (o.censplit) {
        auto cs = center_split(rep, o.k);
        s += ",\"center_split\":{\"center_only\":" + pairs_json(cs.center_only) +
             ",\"other\":" + pairs_json(cs.other) + "}";
    }
    if (o.classify) {
        auto ec = classify_edges(rep, o.k);
        auto table = [&](const std::vector<std::vector<std::pair<int, int>>>& t) {
            std::string r = "[";
            for (size_t i = 0; i < t.size(); ++i) {
                if (i) r += ',';
                r += pairs_json(t[i]);
            }
            return r + "]";
        };
        s += ",\"classification\":{\"positive\":" + table(ec.positive) +
             ",\"negative\":" + table(ec.negative) + ",\"flagged\":" + pairs_json(ec.flagged) +
             "}";
    }
    std::cout << s << "}\n";
    return 0;
}

struct GenerateOpts {
    std::string which, name, epsilon;
    int n = 0, k = 0;
};

int run_generate(const GenerateOpts& o) {
    Representation rep;
    if (o.which == "semiarc-max")
        rep = o.epsilon.empty() ? gen_semiarc_max(o.n, o.k)
                                : gen_semiarc_max(o.n, o.k, parse_rat(o.epsilon));
    else if (o.which == "complete-semiarc")
        rep = o.epsilon.empty() ? gen_complete_semiarc(o.k)
                                : gen_complete_semiarc(o.k, parse_rat(o.epsilon));
    else if (o.which == "polygonal")
        rep = gen_polygonal(o.n);
    else if (o.which == "arc-max")
        rep = gen_arc_max(o.n);
    else if (o.which == "named")
        rep = gen_named(o.name);
    else
        throw Error("invalid_input", "unknown generator '" + o.which + "'");
    std::cout << emit_representation(rep) << "\n";
    return 0;
}

struct RandomOpts {
    std::string which;
    int n = 1, k = 0;
    long trials = 0;
    uint64_t seed = 0;
    bool csv = false;
};

int run_random(const RandomOpts& o) {
    if (o.which != "semibar" && o.which != "semiarc")
        throw Error("invalid_input", "unknown ensemble '" + o.which + "'");
    if (o.trials < 1) throw Error("invalid_input", "--trials must be positive");
    if (o.n < 1 || o.k < 0) throw Error("invalid_input", "need n >= 1 and k >= 0");
    const bool bar = o.which == "semibar";
    std::vector<long> edges(o.trials), center(bar ? 0 : o.trials);
    int workers = thread_budget(o.trials);
    auto part = [&](int w) {
        for (long i = w; i < o.trials; i += workers) {
            uint64_t s = mix64(o.seed, (uint64_t)i);
            if (bar) {
                edges[i] = (long)sample_semibar(o.n, o.k, s).second.edge_count();
            } else {
                auto [rep, g, c] = sample_semiarc(o.n, o.k, s);
                edges[i] = (long)g.edge_count();
                center[i] = c;
            }
        }
    };
    if (workers == 1) {
        part(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(part, w);
        for (auto& t : pool) t.join();
    }
    Int se = 0, sc = 0;
    for (long i = 0; i < o.trials; ++i) {
        se += edges[i];
        if (!bar) sc += center[i];
    }
    Rat mean(se, o.trials);
    if (o.csv) {
        std::string out = bar ? "trial,edges\n" : "trial,edges,center_only\n";
        for (long i = 0; i < o.trials; ++i) {
            out += std::to_string(i) + "," + std::to_string(edges[i]);
            if (!bar) out += "," + std::to_string(center[i]);
            out += "\n";
        }
        if (bar) {
            Rat exact = expected_edges_semibar(o.n, o.k);
            out += "summary,mean=" + dec12(mean) + ",exact=" + rat_str(exact) +
                   ",exact_decimal=" + dec12(exact) + "\n";
        } else {
            Rat cmean(sc, o.trials);
            Rat cb = center_expectation_bound(o.n, o.k);
            out += "summary,mean=" + dec12(mean) + ",center_mean=" + dec12(cmean) +
                   ",center_bound=" + rat_str(cb) + ",center_bound_decimal=" + dec12(cb) + "\n";
        }
        std::cout << out;
        return 0;
    }
    std::string s = "{\"ensemble\":\"" + o.which + "\",\"n\":" + std::to_string(o.n) +
                    ",\"k\":" + std::to_string(o.k) + ",\"trials\":" + std::to_string(o.trials) +
                    ",\"seed\":" + std::to_string(o.seed) + ",\"mean\":\"" + rat_str(mean) +
                    "\",\"mean_decimal\":\"" + dec12(mean) + "\"";
    if (bar) {
        Rat exact = expected_edges_semibar(o.n, o.k);
        s += ",\"exact\":\"" + rat_str(exact) + "\",\"exact_decimal\":\"" + dec12(exact) + "\"";
    } else {
        Rat cmean(sc, o.trials);
        Rat cb = center_expectation_bound(o.n, o.k);
        s += ",\"center_mean\":\"" + rat_str(cmean) + "\",\"center_bound\":\"" + rat_str(cb) +
             "\",\"center_bound_decimal\":\"" + dec12(cb) + "\"";
    }
    std::cout << s << "}\n";
    return 0;
}

struct AnalyzeOpts {
    std::string input = "-";
    int k = 0;
};

int run_analyze(const AnalyzeOpts& o) {
    std::string text = slurp(o.input);
    bool isrep;
    {
        nlohmann::json probe;
        try {
            probe = nlohmann::json::parse(text);
        } catch (const std::exception& e) {
            throw Error("parse_error", e.what());
        }
        isrep = probe.is_object() && probe.contains("elements");
    }
    std::optional<Representation> rep;
    std::optional<Kind> kind;
    Graph g;
    if (isrep) {
        rep = parse_representation(text);
        kind = rep->kind;
        g = visibility_graph(*rep, o.k);
    } else {
        auto gf = parse_graph(text);
        g = gf.g;
        kind = gf.kind;
    }
    long long E = g.edge_count();
    bool violated = false;
    std::string s = "{\"n\":" + std::to_string(g.n) + ",\"k\":" + std::to_string(o.k) +
                    ",\"edges\":" + std::to_string(E);
    if (kind) {
        s += ",\"kind\":\"" + std::string(kind_name(*kind)) + "\"";
        if (*kind != Kind::bar) {
            auto b = max_edges(*kind, g.n, o.k);
            violated = Int(E) > b.value;
            s += ",\"max_edges\":\"" + b.value.str() +
                 "\",\"bound_tight\":" + (b.tight ? "true" : "false") +
                 ",\"within_bound\":" + (violated ? "false" : "true");
        }
    }
    auto flag = [&](const char* name, bool v) {
        s += std::string(",\"") + name + "\":" + (v ? "true" : "false");
    };
    flag("planar", is_planar(g));
    flag("chordal", is_chordal(g));
    flag("interval", is_interval(g));
    flag("caterpillar_forest", is_caterpillar_forest(g));
    s += ",\"cutpoints\":" + ints_json(cutpoints(g));
    s += ",\"arboricity\":" + std::to_string(arboricity(g).value);
    long long tlow = 0;
    if (E > 0) tlow = g.n >= 3 ? std::max(1LL, (E + 3LL * g.n - 7) / (3LL * g.n - 6)) : 1;
    int tup = thickness_bound(g, kind ? std::optional(std::pair(*kind, o.k)) : std::nullopt);
    s += ",\"thickness_lower\":" + std::to_string(tlow) +
         ",\"thickness_upper\":" + std::to_string(tup);
    if (rep && !is_arc_kind(rep->kind)) s += ",\"stab_number\":" + std::to_string(stab_number(*rep));
    if (rep && rep->kind == Kind::semi_arc && o.k == 0) {
        auto w = extract_witness(*rep);
        s += ",\"witness\":{\"b_sequence\":" + ints_json(w.diagonal.b_sequence) +
             ",\"j\":" + std::to_string(w.diagonal.j) +
             ",\"edges\":" + pairs_json(w.diagonal.edges) + "}";
    }
    std::cout << s << "}\n";
    if (violated) {
        std::cerr << "edge count " << E << " exceeds the class bound\n";
        return 2;
    }
    return 0;
}

struct SearchOpts {
    std::string target, cls;
    int k = 0;
    long budget = 200000;
};

int run_search(const SearchOpts& o) {
    Graph target;
    if (o.target == "k5" || o.target == "k6") {
        int n = o.target == "k5" ? 5 : 6;
        target = Graph(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) target.add(u, v);
    } else if (o.target == "c4") {
        target = Graph(4);
        for (int v = 0; v < 4; ++v) target.add(v, (v + 1) % 4);
    } else {
        target = parse_graph(slurp(o.target)).g;
    }
    auto found = search_representation(target, parse_class(o.cls), o.k, o.budget);
    if (!found) {
        std::cerr << "no representation found within budget " << o.budget << "\n";
        return 2;
    }
    std::cout << emit_representation(*found) << "\n";
    return 0;
}

struct DecomposeOpts {
    std::string input = "-";
    int k = 0;
};

int run_decompose(const DecomposeOpts& o) {
    Representation rep = parse_representation(slurp(o.input));
    auto parts = thickness_decomposition(rep, o.k);
    std::string s = "{\"n\":" + std::to_string(rep.n()) + ",\"k\":" + std::to_string(o.k) +
                    ",\"parts\":[";
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ',';
        s += pairs_json(parts[i].edges());
    }
    std::cout << s << "]}\n";
    return 0;
}

struct RenderCliOpts {
    std::string input = "-", output;
    std::vector<int> pair;
    int k = 0;
};

int run_render(const RenderCliOpts& o) {
    Representation rep = parse_representation(slurp(o.input));
    RenderOptions ro;
    ro.k = o.k;
    if (o.pair.size() == 2) {
        ro.pair_u = o.pair[0];
        ro.pair_v = o.pair[1];
    }
    std::string svg = render_svg(rep, ro);
    if (o.output == "-") {
        std::cout << svg;
        return 0;
    }
    std::ofstream f(o.output, std::ios::binary);
    if (!f) throw Error("io_error", "cannot write '" + o.output + "'");
    f << svg;
    f.flush();
    if (!f) throw Error("io_error", "write failed for '" + o.output + "'");
    return 0;
}

}

int main(int argc, char** argv) {
    CLI::App app{"exact arithmetic workbench for k-visibility representations"};
    app.require_subcommand(1);
    int rc = 0;

    ComputeOpts co;
    auto* c = app.add_subcommand("compute", "visibility graph of a representation");
    c->add_option("--input", co.input, "representation file, - for stdin");
    c->add_option("--k", co.k, "sightline crossing budget")->required();
    c->add_option("--format", co.format)->check(CLI::IsMember({"json", "dot"}));
    c->add_flag("--classify", co.classify, "per-arc positive/negative edge lists");
    c->add_flag("--center-split", co.censplit, "split edges by through-center necessity");
    c->callback([&] { rc = run_compute(co); });

    GenerateOpts go;
    auto* g = app.add_subcommand("generate", "construct documented representations");
    g->add_option("which", go.which,
                  "semiarc-max | complete-semiarc | polygonal | arc-max | named")
        ->required();
    g->add_option("name", go.name, "construction name for 'named'");
    g->add_option("--n", go.n);
    g->add_option("--k", go.k);
    g->add_option("--epsilon", go.epsilon, "rational spacing, e.g. 1/100");
    g->callback([&] { rc = run_generate(go); });

    RandomOpts ro;
    auto* r = app.add_subcommand("random", "sample random representations");
    r->add_option("which", ro.which, "semibar | semiarc")->required();
    r->add_option("--n", ro.n)->required();
    r->add_option("--k", ro.k)->required();
    r->add_option("--trials", ro.trials)->required();
    r->add_option("--seed", ro.seed)->required();
    r->add_flag("--csv", ro.csv, "per-trial rows plus a summary row");
    r->callback([&] { rc = run_random(ro); });

    AnalyzeOpts ao;
    auto* a = app.add_subcommand("analyze", "structural report for a representation or graph");
    a->add_option("--input", ao.input, "representation or graph file, - for stdin");
    a->add_option("--k", ao.k)->required();
    a->callback([&] { rc = run_analyze(ao); });

    SearchOpts so;
    auto* s = app.add_subcommand("search", "look for a representation of a target graph");
    s->add_option("--target", so.target, "k5 | c4 | k6 | graph file")->required();
    s->add_option("--class", so.cls, "bar | semibar | arc | semiarc")->required();
    s->add_option("--k", so.k)->required();
    s->add_option("--budget", so.budget, "candidates to try");
    s->callback([&] { rc = run_search(so); });

    DecomposeOpts dopt;
    auto* d = app.add_subcommand("decompose", "planar thickness decomposition");
    d->add_option("--input", dopt.input, "representation file, - for stdin");
    d->add_option("--k", dopt.k)->required();
    d->callback([&] { rc = run_decompose(dopt); });

    RenderCliOpts re;
    auto* v = app.add_subcommand("render", "deterministic SVG drawing");
    v->add_option("--input", re.input, "representation file, - for stdin");
    v->add_option("-o,--output", re.output, "output SVG path, - for stdout")->required();
    v->add_option("--pair", re.pair, "overlay sightline regions for two vertices")->expected(2);
    v->add_option("--k", re.k, "crossing budget for the overlay");
    v->callback([&] { rc = run_render(re); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_class(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}
