#include "ipath/normal_path.hpp"

#include <algorithm>
#include <limits>
#include <unordered_set>

#include "ipath/errors.hpp"

namespace ipath {

namespace {

// Min-tree over left endpoints of the candidates in right-endpoint order;
// removed slots hold +infinity.
class LeftMinTree {
public:
    explicit LeftMinTree(const std::vector<Coord>& values) {
        size_ = 1;
        while (size_ < values.size()) {
            size_ *= 2;
        }
        tree_.assign(2 * size_, kInf);
        for (std::size_t i = 0; i < values.size(); ++i) {
            tree_[size_ + i] = values[i];
        }
        for (std::size_t i = size_ - 1; i >= 1; --i) {
            tree_[i] = std::min(tree_[2 * i], tree_[2 * i + 1]);
        }
    }

    void erase(std::size_t pos) {
        std::size_t i = size_ + pos;
        tree_[i] = kInf;
        for (i /= 2; i >= 1; i /= 2) {
            tree_[i] = std::min(tree_[2 * i], tree_[2 * i + 1]);
        }
    }

    // Smallest position >= from whose value is below `bound`, or npos.
    std::size_t first_below(std::size_t from, Coord bound) const {
        return search(1, 0, size_, from, bound);
    }

    static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

private:
    static constexpr Coord kInf = std::numeric_limits<Coord>::max();

    std::size_t search(std::size_t node, std::size_t lo, std::size_t hi, std::size_t from,
                       Coord bound) const {
        if (hi <= from || tree_[node] >= bound) {
            return npos;
        }
        if (hi - lo == 1) {
            return lo;
        }
        std::size_t mid = (lo + hi) / 2;
        std::size_t found = search(2 * node, lo, mid, from, bound);
        return found != npos ? found : search(2 * node + 1, mid, hi, from, bound);
    }

    std::size_t size_ = 1;
    std::vector<Coord> tree_;
};

} // namespace

bool is_path(std::span<const Interval> intervals, std::span<const VertexId> path) {
    std::unordered_set<VertexId> seen;
    for (std::size_t i = 0; i < path.size(); ++i) {
        VertexId v = path[i];
        if (v < 0 || static_cast<std::size_t>(v) >= intervals.size() || !seen.insert(v).second) {
            return false;
        }
        if (i > 0 && !intervals_intersect(intervals[path[i - 1]], intervals[v])) {
            return false;
        }
    }
    return true;
}

bool is_path(const IntervalGraph& graph, std::span<const VertexId> path) {
    return is_path(std::span<const Interval>(graph.intervals()), path);
}

void check_path(const IntervalGraph& graph, std::span<const VertexId> path) {
    if (!is_path(graph, path)) {
        throw InvalidPath("sequence is not a simple path of the graph");
    }
}

Path normalize_path(std::span<const Interval> intervals, std::span<const VertexId> vertices) {
    Path result;
    if (vertices.empty()) {
        return result;
    }
    std::vector<VertexId> by_right(vertices.begin(), vertices.end());
    std::sort(by_right.begin(), by_right.end(), [&](VertexId a, VertexId b) {
        return intervals[a].right < intervals[b].right;
    });
    std::vector<Coord> rights(by_right.size());
    std::vector<Coord> lefts(by_right.size());
    for (std::size_t i = 0; i < by_right.size(); ++i) {
        rights[i] = intervals[by_right[i]].right;
        lefts[i] = intervals[by_right[i]].left;
    }
    LeftMinTree tree(lefts);

    result.reserve(by_right.size());
    std::size_t cur = 0;
    tree.erase(cur);
    result.push_back(by_right[cur]);
    while (result.size() < by_right.size()) {
        const Interval& c = intervals[by_right[cur]];
        // Candidates with r > l_c; the first one with l < r_c is the
        // sigma-leftmost unvisited neighbor.
        std::size_t from = static_cast<std::size_t>(
            std::upper_bound(rights.begin(), rights.end(), c.left) - rights.begin());
        std::size_t next = tree.first_below(from, c.right);
        if (next == LeftMinTree::npos) {
            throw NormalizationFailed("vertex set admits no normal path");
        }
        tree.erase(next);
        result.push_back(by_right[next]);
        cur = next;
    }
    return result;
}

Path normalize_path(const IntervalGraph& graph, std::span<const VertexId> vertices) {
    return normalize_path(std::span<const Interval>(graph.intervals()), vertices);
}

bool is_normal_path(const IntervalGraph& graph, std::span<const VertexId> path) {
    check_path(graph, path);
    // The greedy walk is forced, so a normal path is the unique greedy output
    // on its own vertex set.
    Path greedy = normalize_path(graph, path);
    return std::equal(greedy.begin(), greedy.end(), path.begin(), path.end());
}

} // namespace ipath
