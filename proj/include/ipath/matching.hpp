#ifndef IPATH_MATCHING_HPP
#define IPATH_MATCHING_HPP

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

namespace ipath {

// Undirected simple graph on 0..n-1 with sorted adjacency lists.
class SimpleGraph {
public:
    SimpleGraph() = default;
    // Throws InvalidGraph on self-loops, repeated edges or bad endpoints.
    SimpleGraph(int n, const std::vector<std::pair<int, int>>& edges);

    int size() const { return static_cast<int>(adjacency_.size()); }
    const std::vector<int>& neighbors(int v) const { return adjacency_[v]; }
    std::size_t degree(int v) const { return adjacency_[v].size(); }
    std::size_t edge_count() const { return edges_; }
    bool adjacent(int u, int v) const;

private:
    std::vector<std::vector<int>> adjacency_;
    std::size_t edges_ = 0;
};

// First line `n m`, then m lines `u v`; `#` starts a comment.  Throws
// ParseError.
SimpleGraph read_edge_list(std::istream& in);

enum class KernelVerdict { Yes, Kernel };

struct KernelOutcome {
    KernelVerdict verdict = KernelVerdict::Kernel;
    SimpleGraph kernel;            // meaningful for Kernel
    int k_prime = 0;               // residual parameter
    int removed_high_degree = 0;   // vertices taken by the degree rule
    std::size_t max_probes = 0;    // largest neighbor scan of a single visit
    int passes = 0;                // marking passes until nothing changed
};

// Degree rule: a vertex with more than 2(k'-1) surviving neighbors is
// removed and k' drops by one; repeated until no vertex qualifies.  Then
// vertices without surviving neighbors go.  Answers Yes once k' hits 0 or
// the residue is too large to have a matching smaller than k'.
KernelOutcome kernelize(const SimpleGraph& graph, int k);

// Edmonds' blossom algorithm, O(V^3).  Returns the matched edges (u < v).
std::vector<std::pair<int, int>> max_matching(const SimpleGraph& graph);

// mm(G) >= k, via kernelize and a matching on the kernel.
bool decide_matching(const SimpleGraph& graph, int k);

} // namespace ipath

#endif
