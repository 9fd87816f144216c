#ifndef IPATH_SPECIAL_DP_HPP
#define IPATH_SPECIAL_DP_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "ipath/interval_graph.hpp"
#include "ipath/normal_path.hpp"
#include "ipath/rational.hpp"
#include "ipath/stage2.hpp"

namespace ipath {

// Appends the isolated weight-0 vertex v0 (id = old size) to B, left of
// everything.  Throws DoubleAugment.
SpecialGraph add_dummy_v0(const SpecialGraph& special);

// Is v a vertex of G_xi(v_i): xi <= l_v and r_v <= r_{v_i}?
bool subgraph_contains(const IntervalGraph& graph, Coord xi, VertexId vi, VertexId v);

enum class EntryCase : std::uint8_t {
    Undefined,
    Init,       // W(v, v) = w(v)
    Copy,       // W(v, y) = W(pi_{y,v}, y): the path avoids v
    SelfAppend, // (P1, v) with P1 ending at x
    Tail,       // (P1, v, y) with P1 ending at x
    Split,      // (P1, v, P2): P1 ends at x, P2 lives right of zeta
};

struct DpStats {
    std::size_t entries = 0;
    std::size_t xi_count = 0;
    std::size_t b_size = 0;
    // Reads of entries owned by a vertex not strictly before the reader.
    std::size_t dependency_violations = 0;
};

// W_xi(v, y): the maximum weight of a normal path of G_xi(v) ending at y,
// for y = v or y an earlier neighbor of v.  Built over the v0-augmented
// graph; input vertex ids are kept and v0 is the last id.
class DpTable {
public:
    static DpTable build(const SpecialGraph& special);

    const IntervalGraph& graph() const { return graph_; }
    VertexId v0() const { return graph_.size() - 1; }
    const std::vector<Coord>& xi() const { return xi_; }
    const DpStats& stats() const { return stats_; }

    // nullopt when the entry does not exist or is undefined.
    std::optional<Rational> value(std::size_t xi_index, VertexId v, VertexId y) const;
    EntryCase entry_case(std::size_t xi_index, VertexId v, VertexId y) const;

    // Replays the parent chain.  Throws CorruptParentChain.
    Path reconstruct(std::size_t xi_index, VertexId v, VertexId y) const;

    // Best entry at the global minimum of Xi, i.e. over the whole graph.
    struct Terminal {
        VertexId v = kNoVertex;
        VertexId y = kNoVertex;
        Rational weight{0};
    };
    Terminal best() const;

private:
    struct Parent {
        EntryCase kind = EntryCase::Undefined;
        std::int32_t x_slot = -1;
        std::int32_t zeta = -1;
    };

    void run();
    std::size_t entry_index(std::size_t xi_index, VertexId v, std::size_t slot) const;
    std::size_t slot_of(VertexId v, VertexId y) const;
    std::size_t prefix_length(VertexId y) const { return prefix_len_[y]; }

    IntervalGraph graph_;
    std::vector<char> in_a_;
    std::vector<Coord> xi_;
    std::vector<std::size_t> prefix_len_; // number of Xi values <= l_y
    // Slots of v: 0 is v itself, s >= 1 is earlier[v][s-1].
    std::vector<std::vector<VertexId>> earlier_;
    std::vector<std::vector<VertexId>> pi_;       // aligned with earlier_
    std::vector<std::vector<std::size_t>> base_;  // per slot, offset into values_
    std::vector<Rational> values_;
    std::vector<Parent> parents_;
    DpStats stats_;
};

struct DpResult {
    Rational weight{0};
    Path path; // ids of the input special graph, v0 removed
    DpStats stats;
};

// Maximum-weight path of a special weighted interval graph.  Throws
// InvalidSpecialPartition.
DpResult max_weight_path(const SpecialGraph& special);

} // namespace ipath

#endif
