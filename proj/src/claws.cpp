#include "ipath/claws.hpp"

#include <algorithm>
#include <functional>

#include "ipath/errors.hpp"

namespace ipath {

std::optional<ClawWitness> find_claw_at(const IntervalGraph& graph, VertexId u,
                                        const std::vector<char>& removed) {
    if (removed[u]) {
        return std::nullopt;
    }
    VertexId z1 = kNoVertex;
    VertexId z2 = kNoVertex;
    for (VertexId v : graph.neighbors(u)) {
        if (removed[v]) {
            continue;
        }
        if (z1 == kNoVertex || graph.right(v) < graph.right(z1)) {
            z1 = v;
        }
        if (z2 == kNoVertex || graph.left(v) > graph.left(z2)) {
            z2 = v;
        }
    }
    if (z1 == kNoVertex || z1 == z2 || graph.adjacent(z1, z2)) {
        return std::nullopt;
    }
    for (VertexId v : graph.neighbors(u)) {
        if (!removed[v] && v != z1 && v != z2 && !graph.adjacent(v, z1) &&
            !graph.adjacent(v, z2)) {
            return ClawWitness{u, {z1, v, z2}};
        }
    }
    return std::nullopt;
}

std::optional<ClawWitness> find_claw_at(const IntervalGraph& graph, VertexId u) {
    return find_claw_at(graph, u, std::vector<char>(graph.size(), 0));
}

namespace {

std::optional<ClawWitness> find_any_claw(const IntervalGraph& graph,
                                         const std::vector<char>& removed) {
    for (VertexId u : graph.order()) {
        if (auto claw = find_claw_at(graph, u, removed)) {
            return claw;
        }
    }
    return std::nullopt;
}

} // namespace

bool is_claw_free(const IntervalGraph& graph, const std::vector<char>& removed) {
    return !find_any_claw(graph, removed).has_value();
}

DeletionSet approx_deletion_set(const IntervalGraph& graph) {
    DeletionSet result;
    std::vector<char> removed(graph.size(), 0);
    // Marking only shrinks neighborhoods, so a vertex without a claw when
    // visited never gains one later.
    for (VertexId u : graph.order()) {
        auto claw = find_claw_at(graph, u, removed);
        if (!claw) {
            continue;
        }
        result.certificates.push_back(*claw);
        removed[claw->center] = 1;
        result.marked.push_back(claw->center);
        for (VertexId leaf : claw->leaves) {
            removed[leaf] = 1;
            result.marked.push_back(leaf);
        }
    }
    return result;
}

std::optional<DeletionSet> exact_deletion_set(const IntervalGraph& graph, int k_max,
                                              std::size_t node_cap) {
    std::vector<char> removed(graph.size(), 0);
    std::vector<VertexId> chosen;
    std::size_t nodes = 0;

    std::function<bool(int)> branch = [&](int budget) -> bool {
        if (++nodes > node_cap) {
            throw BudgetExceeded("exact deletion search exceeded " + std::to_string(node_cap) +
                                 " nodes");
        }
        auto claw = find_any_claw(graph, removed);
        if (!claw) {
            return true;
        }
        if (budget == 0) {
            return false;
        }
        std::array<VertexId, 4> options{claw->center, claw->leaves[0], claw->leaves[1],
                                        claw->leaves[2]};
        for (VertexId v : options) {
            removed[v] = 1;
            chosen.push_back(v);
            if (branch(budget - 1)) {
                return true;
            }
            chosen.pop_back();
            removed[v] = 0;
        }
        return false;
    };

    for (int k = 0; k <= k_max; ++k) {
        if (branch(k)) {
            DeletionSet result;
            result.marked = chosen;
            std::sort(result.marked.begin(), result.marked.end());
            return result;
        }
    }
    return std::nullopt;
}

bool is_proper_representation(const IntervalGraph& graph, const std::vector<char>& removed) {
    // With distinct endpoints, no containment means left endpoints increase
    // along sigma.
    Coord last_left = 0;
    bool first = true;
    for (VertexId v : graph.order()) {
        if (removed[v]) {
            continue;
        }
        if (!first && graph.left(v) < last_left) {
            return false;
        }
        last_left = graph.left(v);
        first = false;
    }
    return true;
}

bool is_proper_representation(const IntervalGraph& graph) {
    return is_proper_representation(graph, std::vector<char>(graph.size(), 0));
}

std::pair<IntervalGraph, DeletionSet> add_dummies(const IntervalGraph& graph,
                                                  const DeletionSet& deletion) {
    if (deletion.dummies) {
        throw DoubleAugment("deletion set already carries dummies");
    }
    Coord lo = 0;
    Coord hi = 0;
    if (!graph.empty()) {
        lo = graph.left(graph.order().front());
        hi = graph.right(graph.order().back());
        for (VertexId v = 0; v < graph.size(); ++v) {
            lo = std::min(lo, graph.left(v));
        }
    }
    std::vector<Interval> intervals = graph.intervals();
    std::vector<Rational> weights = graph.weights();
    const VertexId d0 = graph.size();
    const VertexId d_last = d0 + 1;
    intervals.push_back({lo - 3, lo - 2});
    intervals.push_back({hi + 2, hi + 3});
    weights.push_back(Rational(0));
    weights.push_back(Rational(0));

    DeletionSet augmented = deletion;
    augmented.marked.push_back(d0);
    augmented.marked.push_back(d_last);
    augmented.dummies = std::make_pair(d0, d_last);
    return {IntervalGraph(std::move(intervals), std::move(weights)), std::move(augmented)};
}

} // namespace ipath
