#pragma once

#include <vector>

#include "cutbell/equivalence.hpp"
#include "cutbell/hull.hpp"

namespace cutbell {

inline std::vector<LinearInequality> cut_polytope_facets(const GraphPtr& g, const HullOptions& opt = {}) {
    std::vector<std::vector<std::int64_t>> pts;
    for (const auto& c : enumerate_cut_vectors(g)) pts.push_back(c.to_int());
    std::vector<LinearInequality> out;
    for (const auto& r : facet_enumeration(pts, opt).facets) out.emplace_back(g, r.coeffs, r.rhs);
    return out;
}

// Non-triangle facets of CUT(K_n), eliminated to K_{1,m,m} and classified under H.
inline ClassificationResult eliminated_classes(const std::vector<LinearInequality>& facets, unsigned jobs = 1) {
    std::vector<LinearInequality> el;
    int m = 0;
    for (const auto& f : facets) {
        if (is_triangle_type(f)) continue;
        el.push_back(eliminate_to_tripartite(f).result);
        m = (el.back().graph->vertex_count() - 1) / 2;
    }
    if (el.empty()) return {};
    return classify(el, {GroupKind::tripartite_H, m}, jobs);
}

} // namespace cutbell
