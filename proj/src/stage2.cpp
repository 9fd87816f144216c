#include "ipath/stage2.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

#include "ipath/errors.hpp"

namespace ipath {

Int kappa_bound(int k) {
    const Int t = 18 * static_cast<Int>(k) + 16;
    return static_cast<Int>(k) + 2 + t * (t - 1) / 2 * (static_cast<Int>(k) + 6);
}

SpecialGraph make_special_graph(IntervalGraph graph, std::vector<char> in_a) {
    SpecialGraph s;
    s.graph = std::move(graph);
    s.in_a = std::move(in_a);
    s.in_a.resize(s.graph.size(), 0);
    for (VertexId v : s.graph.order()) {
        (s.in_a[v] ? s.A : s.B).push_back(v);
    }
    s.kappa = static_cast<Int>(s.B.size());
    return s;
}

bool is_special_partition(const IntervalGraph& graph, const std::vector<char>& in_a, Int kappa) {
    std::vector<VertexId> a_by_left;
    Int b_count = 0;
    for (VertexId v = 0; v < graph.size(); ++v) {
        if (in_a[v]) {
            a_by_left.push_back(v);
        } else {
            ++b_count;
        }
    }
    if (b_count > kappa) {
        return false;
    }
    std::sort(a_by_left.begin(), a_by_left.end(),
              [&](VertexId a, VertexId b) { return graph.left(a) < graph.left(b); });
    for (std::size_t t = 1; t < a_by_left.size(); ++t) {
        if (graph.right(a_by_left[t - 1]) > graph.left(a_by_left[t])) {
            return false;
        }
    }
    // A-intervals are disjoint, so at most one of them can hold l_v.
    for (VertexId v = 0; v < graph.size(); ++v) {
        auto it = std::upper_bound(a_by_left.begin(), a_by_left.end(), graph.left(v),
                                   [&](Coord c, VertexId a) { return c < graph.left(a); });
        if (it == a_by_left.begin()) {
            continue;
        }
        VertexId a = *std::prev(it);
        if (a != v && graph.contains(a, v)) {
            return false;
        }
    }
    return true;
}

bool is_weakly_reducible(const IntervalGraph& graph, std::span<const VertexId> S) {
    if (S.empty()) {
        return false;
    }
    std::vector<VertexId> sorted(S.begin(), S.end());
    std::sort(sorted.begin(), sorted.end(),
              [&](VertexId a, VertexId b) { return graph.before(a, b); });
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        if (graph.left(sorted[i]) < graph.left(sorted[i - 1]) ||
            !graph.adjacent(sorted[i - 1], sorted[i])) {
            return false;
        }
    }
    for (VertexId v = 0; v < graph.size(); ++v) {
        for (VertexId u : S) {
            if (v == u || !graph.contains(u, v)) {
                continue;
            }
            for (VertexId s : S) {
                if (!graph.adjacent(v, s)) {
                    return false;
                }
            }
        }
    }
    // Consequence of the two conditions: S is a clique.
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        for (std::size_t j = i + 1; j < sorted.size(); ++j) {
            if (!graph.adjacent(sorted[i], sorted[j])) {
                return false;
            }
        }
    }
    return true;
}

Stage2Families compute_stage2_families(const Stage1Result& stage1) {
    const IntervalGraph& g = stage1.g_sharp;
    Stage2Families f;
    std::set<Coord> points;
    for (VertexId d : stage1.D) {
        points.insert(g.left(d));
        points.insert(g.right(d));
    }
    for (const auto& comps : stage1.cell_a) {
        const std::size_t q = comps.size();
        for (std::size_t t = 0; t < q; ++t) {
            // First two and last two components of the cell.
            if (t < 2 || t + 2 >= q) {
                points.insert(g.left(comps[t]));
                points.insert(g.right(comps[t]));
            }
        }
    }
    f.T.assign(points.begin(), points.end());

    // 1-based index j with t_{j-1} < p < t_j.
    auto slot = [&](Coord p) {
        return static_cast<int>(std::upper_bound(f.T.begin(), f.T.end(), p) - f.T.begin()) + 1;
    };
    std::map<std::pair<int, int>, std::vector<VertexId>> buckets;
    for (VertexId u : stage1.U_sharp) {
        const int j = slot(g.left(u));
        const int i = slot(g.right(u));
        if (j == i) {
            f.diagonal.push_back(u);
        } else {
            buckets[{j, i}].push_back(u);
        }
    }
    for (auto& [key, members] : buckets) {
        f.groups.push_back(Stage2Group{key.first, key.second, std::move(members)});
    }
    return f;
}

Stage2Result apply_rule2(const Stage1Result& stage1, const Stage2Families& families) {
    const IntervalGraph& g = stage1.g_sharp;
    const VertexId n = g.size();
    const int d_size = static_cast<int>(stage1.D.size());
    const int max_clones = d_size + 4;
    // Refined grid: every G# coordinate c becomes c * scale, and clone j of a
    // group sits j sub-positions to the right of its span.
    const Coord scale = max_clones + 1;

    Stage2Result result;
    result.universe.reserve(n);
    for (VertexId v = 0; v < n; ++v) {
        result.universe.push_back({g.left(v) * scale, g.right(v) * scale});
    }

    std::vector<char> grouped(n, 0);
    for (const auto& group : families.groups) {
        for (VertexId v : group.members) {
            grouped[v] = 1;
        }
    }

    std::vector<Interval> intervals;
    std::vector<Rational> weights;
    std::vector<char> in_a;
    for (VertexId v = 0; v < n; ++v) {
        if (!grouped[v]) {
            intervals.push_back(result.universe[v]);
            weights.push_back(g.weight(v));
            in_a.push_back(stage1.in_a[v]);
            result.origin.push_back(v);
            result.group_of.push_back(-1);
            result.universe_id.push_back(v);
        }
    }
    for (std::size_t gi = 0; gi < families.groups.size(); ++gi) {
        const auto& members = families.groups[gi].members;
        const int count = std::min(static_cast<int>(members.size()), max_clones);
        const Interval hull = span(g, members);
        const Rational share = g.weight_of(members) / Rational(count);
        Stage2Result::CloneGroup clone_group;
        clone_group.members = members;
        for (int j = 1; j <= count; ++j) {
            const Interval clone{hull.left * scale + j, hull.right * scale + j};
            const VertexId key = static_cast<VertexId>(result.universe.size());
            result.universe.push_back(clone);
            clone_group.clone_keys.push_back(key);
            clone_group.clones.push_back(static_cast<VertexId>(intervals.size()));
            intervals.push_back(clone);
            weights.push_back(share);
            in_a.push_back(0);
            result.origin.push_back(kNoVertex);
            result.group_of.push_back(static_cast<int>(gi));
            result.universe_id.push_back(key);
        }
        result.groups.push_back(std::move(clone_group));
    }

    result.special = make_special_graph(
        normalize_endpoints(IntervalGraph(std::move(intervals), std::move(weights))),
        std::move(in_a));
    result.special.kappa = kappa_bound(d_size - 2);

    std::vector<char> is_d(n, 0);
    for (VertexId d : stage1.D) {
        is_d[d] = 1;
    }
    for (VertexId v : result.special.graph.order()) {
        if (result.origin[v] != kNoVertex && is_d[result.origin[v]]) {
            result.D.push_back(v);
        }
    }
    return result;
}

} // namespace ipath
