#ifndef VISKIT_PERTURB_HPP
#define VISKIT_PERTURB_HPP

#include <viskit/representation.hpp>
#include <viskit/sightlines.hpp>
#include <algorithm>
#include <tuple>
#include <vector>

namespace viskit {

namespace detail {

// a tied parameter value and the element field that moves it
struct TiedParam {
    Rat value;
    int idx;
    int knob; // 0 = field a (start/left), 1 = field b (extent/right)
};

inline std::vector<TiedParam> tied_params(const Representation& rep) {
    std::vector<TiedParam> ps;
    for (int i = 0; i < rep.n(); ++i) {
        const Element& e = rep.elems[i];
        switch (rep.kind) {
        case Kind::arc:
            ps.push_back({norm2(e.start()), i, 0});
            ps.push_back({norm2(e.start() + e.extent()), i, 1});
            ps.push_back({antipode(e.start()), i, 0});
            ps.push_back({antipode(e.start() + e.extent()), i, 1});
            break;
        case Kind::semi_arc:
            ps.push_back({e.extent(), i, 1});
            break;
        case Kind::bar:
            ps.push_back({e.left(), i, 0});
            ps.push_back({e.right(), i, 1});
            break;
        case Kind::semi_bar:
            ps.push_back({e.right(), i, 1});
            break;
        }
    }
    std::sort(ps.begin(), ps.end(), [](const TiedParam& x, const TiedParam& y) {
        return std::tie(x.value, x.idx, x.knob) < std::tie(y.value, y.idx, y.knob);
    });
    return ps;
}

// minimum positive gap between critical parameters, circular for arc kinds
inline Rat min_critical_gap(const Representation& rep) {
    auto crit = critical_parameters(rep);
    Rat g(-1);
    auto consider = [&](const Rat& d) {
        if (d > 0 && (g < 0 || d < g)) g = d;
    };
    for (size_t i = 1; i < crit.size(); ++i) consider(crit[i] - crit[i - 1]);
    if (is_arc_kind(rep.kind) && crit.size() > 1)
        consider(crit.front() + 2 - crit.back());
    return g;
}

} // namespace detail

// breaks parameter ties with distinct binary-fraction bumps, halving the
// scale until the k-visibility graph is unchanged
inline Representation general_position(const Representation& rep, int k) {
    auto report = validate(rep);
    if (!report.violations.empty()) throw Error("invalid_input");
    if (report.general_position) return rep;

    auto ps = detail::tied_params(rep);
    Rat gap = detail::min_critical_gap(rep);
    if (gap <= 0) throw Error("cannot_preserve");
    Graph before = visibility_graph(rep, k);

    for (int attempt = 0; attempt < 40; ++attempt) {
        Rat delta = gap / 2;
        for (int a = 0; a < attempt; ++a) delta /= 2;

        Representation pert = rep;
        Rat unit = delta;
        size_t i = 0;
        while (i < ps.size()) {
            size_t j = i;
            while (j < ps.size() && ps[j].value == ps[i].value) ++j;
            for (size_t m = i + 1; m < j; ++m) {
                unit /= 2;
                Element& e = pert.elems[ps[m].idx];
                if (ps[m].knob == 0) e.a += unit;
                else e.b += unit;
            }
            i = j;
        }

        if (!validate(pert).general_position) continue;
        if (visibility_graph(pert, k) == before) return pert;
    }
    throw Error("cannot_preserve");
}

} // namespace viskit

#endif
