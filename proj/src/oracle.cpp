#include "ipath/oracle.hpp"

#include <bit>
#include <cstdint>
#include <vector>

#include "ipath/errors.hpp"

namespace ipath {
namespace {

using Mask = std::uint32_t;

// ends[S] holds every vertex at which some path with vertex set exactly S
// ends; a path's weight depends only on its vertex set.
struct Subsets {
    std::vector<Mask> adj;
    std::vector<Mask> ends;

    explicit Subsets(const IntervalGraph& graph)
        : adj(graph.size(), 0), ends(Mask{1} << graph.size(), 0) {
        const VertexId n = graph.size();
        for (VertexId v = 0; v < n; ++v) {
            for (VertexId u : graph.neighbors(v)) {
                adj[v] |= Mask{1} << u;
            }
            ends[Mask{1} << v] = Mask{1} << v;
        }
        for (Mask s = 1; s < ends.size(); ++s) {
            for (Mask last = ends[s]; last; last &= last - 1) {
                for (Mask open = adj[std::countr_zero(last)] & ~s; open; open &= open - 1) {
                    const Mask u = open & -open;
                    ends[s | u] |= u;
                }
            }
        }
    }

    // A path on exactly the vertices of `s`, which must be reachable.
    Path path_of(Mask s) const {
        Path reversed;
        Mask candidates = ends[s];
        while (s) {
            const VertexId v = std::countr_zero(candidates);
            reversed.push_back(v);
            s &= ~(Mask{1} << v);
            candidates = s ? ends[s] & adj[v] : 0;
        }
        return Path(reversed.rbegin(), reversed.rend());
    }
};

void guard(const IntervalGraph& graph) {
    if (graph.size() > kOracleLimit) {
        throw TooLarge("brute force is limited to " + std::to_string(kOracleLimit) + " vertices");
    }
}

} // namespace

BruteResult brute_max_weight_path(const IntervalGraph& graph) {
    guard(graph);
    const Subsets subsets(graph);
    std::vector<Rational> weight(subsets.ends.size(), Rational(0));
    BruteResult best;
    Mask best_set = 0;
    for (Mask s = 1; s < weight.size(); ++s) {
        weight[s] = weight[s & (s - 1)] + graph.weight(std::countr_zero(s));
        if (subsets.ends[s] && (best_set == 0 || weight[s] > best.weight)) {
            best.weight = weight[s];
            best_set = s;
        }
    }
    best.path = subsets.path_of(best_set);
    return best;
}

BruteResult brute_longest_path(const IntervalGraph& graph) {
    guard(graph);
    const Subsets subsets(graph);
    Mask best_set = 0;
    for (Mask s = 1; s < subsets.ends.size(); ++s) {
        if (subsets.ends[s] && std::popcount(s) > std::popcount(best_set)) {
            best_set = s;
        }
    }
    return {Rational(static_cast<Int>(std::popcount(best_set))), subsets.path_of(best_set)};
}

} // namespace ipath
