#ifndef VISKIT_IO_HPP
#define VISKIT_IO_HPP

#include "sightlines.hpp"
#include <cmath>
#include <cstdio>
#include <json.hpp>
#include <string>

namespace viskit {

inline std::string rat_str(const Rat& q) {
    std::string s = num(q).str();
    if (den(q) != 1) s += "/" + den(q).str();
    return s;
}

namespace detail {

// fixed-point formatting with the negative-zero artifact removed
inline std::string fixed_str(double x, int digits) {
    char buf[400];
    std::snprintf(buf, sizeof buf, "%.*f", digits, x);
    std::string s(buf);
    if (s[0] == '-' && s.find_first_not_of("0.", 1) == std::string::npos) s.erase(0, 1);
    return s;
}

inline long long field_int(const nlohmann::json& j, const char* field, size_t idx) {
    auto it = j.find(field);
    if (it == j.end() || !it->is_number_integer())
        throw Error("parse_error",
                    "element " + std::to_string(idx) + ": field '" + field + "' must be an integer");
    return it->get<long long>();
}

inline Rat field_rat(const nlohmann::json& j, const char* field, size_t idx) {
    auto it = j.find(field);
    if (it == j.end())
        throw Error("parse_error",
                    "element " + std::to_string(idx) + ": missing field '" + field + "'");
    if (it->is_string()) return parse_rat(it->get<std::string>());
    if (it->is_number_integer()) return Rat(it->get<long long>());
    throw Error("parse_error", "element " + std::to_string(idx) + ": field '" + field +
                                   "' must be a rational string");
}

}

inline Representation parse_representation(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw Error("parse_error", e.what());
    }
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw Error("parse_error", "top level must be an object with a string field 'kind'");
    Representation rep;
    rep.kind = kind_from_name(j["kind"].get<std::string>());
    auto it = j.find("elements");
    if (it == j.end() || !it->is_array())
        throw Error("parse_error", "field 'elements' must be an array");
    const bool arc = is_arc_kind(rep.kind);
    for (size_t i = 0; i < it->size(); ++i) {
        const auto& ej = (*it)[i];
        if (!ej.is_object())
            throw Error("parse_error", "element " + std::to_string(i) + " must be an object");
        Element e;
        e.id = (int)detail::field_int(ej, "id", i);
        e.rank = (int)detail::field_int(ej, "r", i);
        e.a = detail::field_rat(ej, arc ? "start" : "left", i);
        e.b = detail::field_rat(ej, arc ? "extent" : "right", i);
        rep.elems.push_back(e);
    }
    auto vr = validate(rep);
    if (!vr.ok()) {
        const auto& v = vr.violations.front();
        std::string where;
        for (int id : v.ids) where += (where.empty() ? " (element " : ", ") + std::to_string(id);
        if (!where.empty()) where += ")";
        throw Error(v.code, v.detail + where);
    }
    return rep;
}

inline std::string emit_representation(const Representation& rep) {
    const bool arc = is_arc_kind(rep.kind);
    std::string s = "{\"kind\":\"";
    s += kind_name(rep.kind);
    s += "\",\"elements\":[";
    for (size_t i = 0; i < rep.elems.size(); ++i) {
        const auto& e = rep.elems[i];
        if (i) s += ',';
        s += "{\"id\":" + std::to_string(e.id) + ",\"r\":" + std::to_string(e.rank);
        s += std::string(",\"") + (arc ? "start" : "left") + "\":\"" + rat_str(e.a) + "\"";
        s += std::string(",\"") + (arc ? "extent" : "right") + "\":\"" + rat_str(e.b) + "\"}";
    }
    return s + "]}";
}

inline std::string emit_graph(const Graph& g, const std::string& format = "json") {
    if (format == "json") {
        std::string s = "{\"n\":" + std::to_string(g.n) + ",\"edges\":[";
        bool first = true;
        for (auto [u, v] : g.edges()) {
            if (!first) s += ',';
            first = false;
            s += "[" + std::to_string(u) + "," + std::to_string(v) + "]";
        }
        return s + "]}";
    }
    if (format == "dot") {
        std::string s = "graph G {\n";
        for (int v = 0; v < g.n; ++v) s += "  " + std::to_string(v) + ";\n";
        for (auto [u, v] : g.edges())
            s += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
        return s + "}\n";
    }
    throw Error("invalid_input", "unknown graph format '" + format + "'");
}

struct GraphFile {
    Graph g;
    std::optional<Kind> kind;
};

inline GraphFile parse_graph(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw Error("parse_error", e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer() ||
        !j.contains("edges") || !j["edges"].is_array())
        throw Error("parse_error", "graph file needs integer 'n' and array 'edges'");
    long long n = j["n"].get<long long>();
    if (n < 0 || n > 1000000) throw Error("parse_error", "vertex count out of range");
    GraphFile gf;
    gf.g = Graph((int)n);
    for (const auto& ej : j["edges"]) {
        if (!ej.is_array() || ej.size() != 2 || !ej[0].is_number_integer() ||
            !ej[1].is_number_integer())
            throw Error("parse_error", "each edge must be a pair of integers");
        long long u = ej[0].get<long long>(), v = ej[1].get<long long>();
        if (u < 0 || v < 0 || u >= n || v >= n || u == v)
            throw Error("parse_error", "edge endpoints must be distinct vertices below n");
        gf.g.add((int)u, (int)v);
    }
    if (j.contains("kind")) {
        if (!j["kind"].is_string()) throw Error("parse_error", "field 'kind' must be a string");
        gf.kind = kind_from_name(j["kind"].get<std::string>());
    }
    return gf;
}

struct RenderOptions {
    int pair_u = -1, pair_v = -1;
    int k = 0;
};

inline std::string render_svg(const Representation& rep, const RenderOptions& opt = {}) {
    const double PI = 3.14159265358979323846;
    auto fx = [](double x) { return detail::fixed_str(x, 4); };
    const bool arc = is_arc_kind(rep.kind);
    int maxrank = 1;
    for (const auto& e : rep.elems) maxrank = std::max(maxrank, e.rank);
    double lox, loy, w, h;
    if (arc) {
        double R = 10.0 * maxrank + 10.0;
        lox = loy = -R;
        w = h = 2 * R;
    } else {
        double xmin = 0, xmax = 10;
        for (const auto& e : rep.elems) {
            xmin = std::min(xmin, 10.0 * static_cast<double>(e.left()));
            xmax = std::max(xmax, 10.0 * static_cast<double>(e.right()));
        }
        lox = xmin - 10;
        loy = -10.0 * maxrank - 10;
        w = xmax - xmin + 20;
        h = 10.0 * maxrank + 20;
    }
    std::string s = "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + fx(lox) + " " +
                    fx(loy) + " " + fx(w) + " " + fx(h) + "\">\n";
    s += "<g fill=\"none\" stroke=\"#000\" stroke-width=\"1.5\">\n";
    for (const auto& e : rep.elems) {
        if (arc) {
            double r = 10.0 * e.rank;
            double t0 = PI * static_cast<double>(e.start());
            double t1 = PI * static_cast<double>(e.start() + e.extent());
            int large = e.extent() > 1 ? 1 : 0;
            s += "<path d=\"M " + fx(r * std::cos(t0)) + " " + fx(-r * std::sin(t0)) + " A " +
                 fx(r) + " " + fx(r) + " 0 " + std::to_string(large) + " 0 " +
                 fx(r * std::cos(t1)) + " " + fx(-r * std::sin(t1)) + "\"/>\n";
        } else {
            double y = -10.0 * e.rank;
            s += "<line x1=\"" + fx(10 * static_cast<double>(e.left())) + "\" y1=\"" + fx(y) +
                 "\" x2=\"" + fx(10 * static_cast<double>(e.right())) + "\" y2=\"" + fx(y) +
                 "\"/>\n";
        }
    }
    s += "</g>\n";
    if (opt.pair_u >= 0 && opt.pair_v >= 0) {
        auto el = by_id(rep);
        s += "<g stroke=\"#c00\" stroke-width=\"0.75\" stroke-dasharray=\"2 2\">\n";
        auto line = [&](double x1, double y1, double x2, double y2) {
            s += "<line x1=\"" + fx(x1) + "\" y1=\"" + fx(y1) + "\" x2=\"" + fx(x2) + "\" y2=\"" +
                 fx(y2) + "\"/>\n";
        };
        for (const auto& reg : regions(rep, opt.pair_u, opt.pair_v, opt.k)) {
            std::vector<Rat> ends = {reg.lo};
            if (!(reg.full || reg.hi == reg.lo)) ends.push_back(reg.hi);
            for (const Rat& psi : ends) {
                if (arc) {
                    double ru = 10.0 * el[reg.u].rank, rv = 10.0 * el[reg.v].rank;
                    double t = PI * static_cast<double>(psi);
                    double c = std::cos(t), si = std::sin(t);
                    if (reg.family == Family::through_center)
                        line(ru * c, -ru * si, -rv * c, rv * si);
                    else
                        line(ru * c, -ru * si, rv * c, -rv * si);
                } else {
                    double x = 10.0 * static_cast<double>(psi);
                    line(x, -10.0 * el[reg.u].rank, x, -10.0 * el[reg.v].rank);
                }
            }
        }
        s += "</g>\n";
    }
    return s + "</svg>\n";
}

}

#endif
