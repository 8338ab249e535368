#include "weakrep/interval.hpp"

#include <stdexcept>

namespace weakrep {

VerifyResult verify_interval(const LabeledGraph& g, const IntervalRep& rep) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!rep.coord.count(v))
            throw std::invalid_argument("verify_interval: missing coordinate for vertex " +
                                        std::to_string(v));
    VerifyResult r;
    for (const Edge& e : g.edges()) {
        Rat gap = (rep.coord.at(e.u) - rep.coord.at(e.v)).abs();
        bool near = gap <= rep.diameter;
        if (near != (e.label == EdgeLabel::Near)) {
            r.ok = false;
            r.violations.emplace_back(e.u, e.v);
        }
    }
    return r;
}

IntervalRep to_interval_rep(const ThresholdColoring& col) {
    IntervalRep rep;
    rep.diameter = Rat(col.threshold);
    for (auto& [v, c] : col.color) rep.coord[v] = Rat(c);
    return rep;
}

}  // namespace weakrep
