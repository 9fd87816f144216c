#ifndef IPATH_CLAWS_HPP
#define IPATH_CLAWS_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "ipath/interval_graph.hpp"

namespace ipath {

// Induced K_{1,3}; leaves are ordered left, middle, right.
struct ClawWitness {
    VertexId center = kNoVertex;
    std::array<VertexId, 3> leaves{kNoVertex, kNoVertex, kNoVertex};
};

struct DeletionSet {
    std::vector<VertexId> marked;
    // Vertex-disjoint claws whose union is `marked` (approximate variant only).
    std::vector<ClawWitness> certificates;
    // (d0, d_{k+1}) once add_dummies ran; both are also in `marked`.
    std::optional<std::pair<VertexId, VertexId>> dummies;
};

// Claw centered at u among vertices with removed[v] == 0, built from the
// neighbors with minimum right and maximum left endpoint.  O(deg(u)).
std::optional<ClawWitness> find_claw_at(const IntervalGraph& graph, VertexId u,
                                        const std::vector<char>& removed);
std::optional<ClawWitness> find_claw_at(const IntervalGraph& graph, VertexId u);

bool is_claw_free(const IntervalGraph& graph, const std::vector<char>& removed);

// Scans vertices in sigma order and deletes every claw it finds, four
// vertices at a time.  |D| is at most four times the optimum.
DeletionSet approx_deletion_set(const IntervalGraph& graph);

// Minimum deletion set of size <= k_max by four-way branching on claws, or
// nullopt.  Throws BudgetExceeded once `node_cap` search nodes are used.
std::optional<DeletionSet> exact_deletion_set(const IntervalGraph& graph, int k_max,
                                              std::size_t node_cap = 1'000'000);

// No interval contains another.
bool is_proper_representation(const IntervalGraph& graph);

// Same, restricted to vertices with removed[v] == 0.
bool is_proper_representation(const IntervalGraph& graph, const std::vector<char>& removed);

// Appends two isolated weight-0 intervals left and right of everything; they
// become d0 and d_{k+1} and join D.  Throws DoubleAugment.
std::pair<IntervalGraph, DeletionSet> add_dummies(const IntervalGraph& graph,
                                                  const DeletionSet& deletion);

} // namespace ipath

#endif
