#ifndef VISKIT_REPRESENTATION_HPP
#define VISKIT_REPRESENTATION_HPP

#include "angle.hpp"
#include <algorithm>
#include <map>
#include <vector>

namespace viskit {

enum class Kind { bar, semi_bar, arc, semi_arc };

inline bool is_arc_kind(Kind k) { return k == Kind::arc || k == Kind::semi_arc; }
inline bool is_semi_kind(Kind k) { return k == Kind::semi_bar || k == Kind::semi_arc; }

inline const char* kind_name(Kind k) {
    switch (k) {
        case Kind::bar: return "bar";
        case Kind::semi_bar: return "semi_bar";
        case Kind::arc: return "arc";
        default: return "semi_arc";
    }
}

inline Kind kind_from_name(const std::string& s) {
    if (s == "bar") return Kind::bar;
    if (s == "semi_bar") return Kind::semi_bar;
    if (s == "arc") return Kind::arc;
    if (s == "semi_arc") return Kind::semi_arc;
    throw Error("parse_error", "unknown kind '" + s + "'");
}

// one element; for arcs a = start angle, b = extent; for bars a = left, b = right
struct Element {
    int id = 0;
    int rank = 0;
    Rat a, b;
    const Rat& start() const { return a; }
    const Rat& extent() const { return b; }
    const Rat& left() const { return a; }
    const Rat& right() const { return b; }
    bool operator==(const Element&) const = default;
};

struct Representation {
    Kind kind = Kind::semi_arc;
    std::vector<Element> elems;
    int n() const { return static_cast<int>(elems.size()); }
};

// elements reordered so slot i holds id i; assumes ids are a permutation of 0..n-1
inline std::vector<Element> by_id(const Representation& rep) {
    std::vector<Element> v(rep.elems.size());
    for (const auto& e : rep.elems) v[e.id] = e;
    return v;
}

struct Violation {
    std::string code;
    std::vector<int> ids;
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool general_position = false;
    std::vector<std::string> collisions;
    bool ok() const { return violations.empty(); }
};

// structural checks plus the kind-specific general position test
inline ValidationReport validate(const Representation& rep) {
    ValidationReport rp;
    const int n = rep.n();
    auto flag = [&](const char* code, std::vector<int> ids, std::string detail) {
        rp.violations.push_back({code, std::move(ids), std::move(detail)});
    };

    std::vector<int> ids;
    for (const auto& e : rep.elems) ids.push_back(e.id);
    std::sort(ids.begin(), ids.end());
    for (int i = 0; i < n; ++i)
        if (ids[i] != i) {
            flag("bad_ids", {}, "ids must be exactly 0.." + std::to_string(n - 1));
            break;
        }

    std::map<int, std::vector<int>> by_rank;
    for (const auto& e : rep.elems) {
        if (e.rank < 1) flag("bad_rank", {e.id}, "rank must be a positive integer");
        by_rank[e.rank].push_back(e.id);
    }
    for (auto& [r, who] : by_rank)
        if (who.size() > 1) flag("duplicate_rank", who, "rank " + std::to_string(r) + " reused");

    for (const auto& e : rep.elems) {
        if (is_arc_kind(rep.kind)) {
            if (!(e.extent() > 0 && e.extent() < 2))
                flag("extent_out_of_range", {e.id}, "extent must lie strictly between 0 and 2pi");
            if (rep.kind == Kind::semi_arc && norm2(e.start()) != 0)
                flag("semi_arc_start_nonzero", {e.id}, "semi arcs must start at angle 0");
        } else {
            if (!(e.left() < e.right()))
                flag("bad_left_right", {e.id}, "left endpoint must be strictly below right");
            if (rep.kind == Kind::semi_bar && e.left() != 0)
                flag("semi_bar_left_nonzero", {e.id}, "semi bars must have left endpoint 0");
        }
    }

    if (!rp.ok()) return rp;

    // general position: collect the kind's governing parameters and look for collisions
    std::vector<std::pair<Rat, std::string>> params;
    auto tag = [](int id, const char* what) { return "element " + std::to_string(id) + " " + what; };
    if (rep.kind == Kind::arc) {
        for (const auto& e : rep.elems) {
            Angle s = norm2(e.start()), t = norm2(e.start() + e.extent());
            params.push_back({s, tag(e.id, "start")});
            params.push_back({t, tag(e.id, "end")});
            params.push_back({antipode(s), tag(e.id, "start antipode")});
            params.push_back({antipode(t), tag(e.id, "end antipode")});
        }
    } else if (rep.kind == Kind::semi_arc) {
        for (const auto& e : rep.elems) params.push_back({e.extent(), tag(e.id, "end")});
    } else if (rep.kind == Kind::bar) {
        for (const auto& e : rep.elems) {
            params.push_back({e.left(), tag(e.id, "left")});
            params.push_back({e.right(), tag(e.id, "right")});
        }
    } else {
        for (const auto& e : rep.elems) params.push_back({e.right(), tag(e.id, "right")});
    }
    std::stable_sort(params.begin(), params.end(),
                     [](const auto& x, const auto& y) { return x.first < y.first; });
    rp.general_position = true;
    for (size_t i = 0; i + 1 < params.size(); ++i)
        if (params[i].first == params[i + 1].first) {
            rp.general_position = false;
            rp.collisions.push_back(params[i].second + " coincides with " + params[i + 1].second);
        }
    return rp;
}

}

#endif
