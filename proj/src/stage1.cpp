#include "ipath/stage1.hpp"

#include <algorithm>
#include <unordered_set>

#include "ipath/errors.hpp"

namespace ipath {

bool is_reducible(const IntervalGraph& graph, std::span<const VertexId> S) {
    if (S.empty()) {
        return false;
    }
    std::vector<VertexId> sorted(S.begin(), S.end());
    std::sort(sorted.begin(), sorted.end(),
              [&](VertexId a, VertexId b) { return graph.before(a, b); });
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        // Proper: lefts increase with rights.  Connected: consecutive overlap.
        if (graph.left(sorted[i]) < graph.left(sorted[i - 1]) ||
            !graph.adjacent(sorted[i - 1], sorted[i])) {
            return false;
        }
    }
    const Interval hull = span(graph, S);
    std::unordered_set<VertexId> in_s(S.begin(), S.end());
    for (VertexId v = 0; v < graph.size(); ++v) {
        if (interval_contains(hull, graph.interval(v)) && !in_s.count(v)) {
            return false;
        }
    }
    return true;
}

Stage1Families compute_stage1_families(const IntervalGraph& graph, const DeletionSet& deletion) {
    if (!deletion.dummies) {
        throw MissingDummies("stage 1 needs the dummy-augmented deletion set");
    }
    Stage1Families f;
    f.D = deletion.marked;
    std::sort(f.D.begin(), f.D.end(), [&](VertexId a, VertexId b) { return graph.before(a, b); });
    if (f.D.front() != deletion.dummies->first || f.D.back() != deletion.dummies->second) {
        throw MissingDummies("dummies are not sigma-extreme");
    }
    std::vector<char> in_d(graph.size(), 0);
    for (VertexId d : f.D) {
        in_d[d] = 1;
        f.L.push_back(graph.left(d));
        f.R.push_back(graph.right(d));
    }
    std::sort(f.L.begin(), f.L.end());

    for (VertexId v : graph.order()) {
        if (!in_d[v]) {
            f.U.push_back(v);
        }
    }

    const int k = f.k();
    // label(p) = i  iff  r_{d_{i-1}} < p < r_{d_i}.
    auto label = [&](Coord p) {
        return static_cast<int>(std::upper_bound(f.R.begin(), f.R.end(), p) - f.R.begin());
    };

    f.Li.resize(k + 1);
    std::vector<int> cell_base(k + 3, 0);
    for (int i = 1; i <= k + 1; ++i) {
        auto& li = f.Li[i - 1];
        li.push_back(f.R[i - 1]);
        for (Coord l : f.L) {
            if (f.R[i - 1] < l && l < f.R[i]) {
                li.push_back(l);
            }
        }
        li.push_back(f.R[i]);
        cell_base[i + 1] = cell_base[i] + f.p(i);
        for (int x = 1; x <= f.p(i); ++x) {
            f.cells.push_back(Stage1Cell{i, x, {}, {}, {}});
        }
    }

    for (VertexId u : f.U) {
        const int i = label(graph.left(u));
        if (i != label(graph.right(u))) {
            continue;
        }
        f.U_star.push_back(u);
        const auto& li = f.Li[i - 1];
        const int x = static_cast<int>(std::upper_bound(li.begin(), li.end(), graph.right(u)) -
                                       li.begin());
        f.cells[cell_base[i] + x - 1].star.push_back(u);
    }

    for (int i = 1; i <= k + 1; ++i) {
        // Largest right endpoint over the cells U*_{i,j} with j < x.
        Coord reach = f.R[i - 1];
        for (int x = 1; x <= f.p(i); ++x) {
            Stage1Cell& cell = f.cells[cell_base[i] + x - 1];
            for (VertexId u : cell.star) {
                if (graph.left(u) > reach) {
                    cell.star2.push_back(u);
                }
            }
            for (VertexId u : cell.star) {
                reach = std::max(reach, graph.right(u));
            }
            Coord comp_reach = 0;
            for (VertexId u : cell.star2) {
                if (cell.components.empty() || graph.left(u) > comp_reach) {
                    cell.components.emplace_back();
                    comp_reach = graph.right(u);
                }
                cell.components.back().push_back(u);
                comp_reach = std::max(comp_reach, graph.right(u));
            }
            for (const auto& comp : cell.components) {
                f.S1.push_back(comp);
            }
        }
    }
    return f;
}

Stage1Result apply_rule1(const IntervalGraph& graph, const Stage1Families& families) {
    const VertexId n = graph.size();
    std::vector<char> collapsed(n, 0);
    for (const auto& s : families.S1) {
        for (VertexId v : s) {
            collapsed[v] = 1;
        }
    }

    std::vector<VertexId> new_id(n, kNoVertex);
    std::vector<Interval> intervals;
    std::vector<Rational> weights;
    Stage1Result result;
    for (VertexId v = 0; v < n; ++v) {
        if (!collapsed[v]) {
            new_id[v] = static_cast<VertexId>(intervals.size());
            intervals.push_back(graph.interval(v));
            weights.push_back(graph.weight(v));
            result.members.push_back({v});
        }
    }
    std::vector<VertexId> component_id;
    for (const auto& s : families.S1) {
        component_id.push_back(static_cast<VertexId>(intervals.size()));
        // Span endpoints belong to collapsed extremal members, so they stay
        // distinct from every surviving endpoint.
        intervals.push_back(span(graph, s));
        weights.push_back(graph.weight_of(s));
        result.members.push_back(s);
    }
    result.g_sharp =
        normalize_endpoints(IntervalGraph(std::move(intervals), std::move(weights)));
    const IntervalGraph& gs = result.g_sharp;

    result.in_a.assign(gs.size(), 0);
    for (VertexId a : component_id) {
        result.in_a[a] = 1;
    }
    std::vector<char> in_d(gs.size(), 0);
    for (VertexId d : families.D) {
        in_d[new_id[d]] = 1;
    }
    for (VertexId v : gs.order()) {
        if (in_d[v]) {
            result.D.push_back(v);
        } else if (result.in_a[v]) {
            result.A.push_back(v);
        } else {
            result.U_sharp.push_back(v);
        }
    }

    std::size_t next_component = 0;
    for (const auto& cell : families.cells) {
        std::vector<VertexId> ids;
        for (std::size_t t = 0; t < cell.components.size(); ++t) {
            ids.push_back(component_id[next_component++]);
        }
        result.cell_a.push_back(std::move(ids));
    }
    return result;
}

} // namespace ipath
