#include "ipath/interval_graph.hpp"

#include <algorithm>
#include <array>
#include <iterator>
#include <numeric>
#include <set>
#include <string>

#include "ipath/errors.hpp"

namespace ipath {

namespace {

struct Endpoint {
    Coord coord;
    VertexId vertex;
    bool is_left;
};

std::vector<Endpoint> sorted_endpoints(const std::vector<Interval>& intervals) {
    std::vector<Endpoint> events;
    events.reserve(2 * intervals.size());
    for (VertexId v = 0; v < static_cast<VertexId>(intervals.size()); ++v) {
        events.push_back({intervals[v].left, v, true});
        events.push_back({intervals[v].right, v, false});
    }
    std::sort(events.begin(), events.end(),
              [](const Endpoint& a, const Endpoint& b) { return a.coord < b.coord; });
    return events;
}

} // namespace

IntervalGraph::IntervalGraph(std::vector<Interval> intervals, std::vector<Rational> weights)
    : intervals_(std::move(intervals)), weights_(std::move(weights)) {
    const VertexId n = size();
    for (VertexId v = 0; v < n; ++v) {
        if (intervals_[v].left >= intervals_[v].right) {
            throw DegenerateInterval("vertex " + std::to_string(v) + " has left >= right");
        }
    }
    if (weights_.empty()) {
        weights_.assign(n, Rational(1));
    } else if (static_cast<VertexId>(weights_.size()) != n) {
        throw InvalidGraph("weight count does not match interval count");
    }
    for (const Rational& w : weights_) {
        if (w < 0) {
            throw InvalidGraph("negative vertex weight");
        }
    }

    std::vector<Endpoint> events = sorted_endpoints(intervals_);
    for (std::size_t i = 1; i < events.size(); ++i) {
        if (events[i].coord == events[i - 1].coord) {
            throw DuplicateEndpoint("endpoint " + std::to_string(events[i].coord) +
                                    " is shared by vertices " +
                                    std::to_string(events[i - 1].vertex) + " and " +
                                    std::to_string(events[i].vertex));
        }
    }

    order_.reserve(n);
    for (const Endpoint& e : events) {
        if (!e.is_left) {
            order_.push_back(e.vertex);
        }
    }
    rank_.assign(n, 0);
    for (VertexId i = 0; i < n; ++i) {
        rank_[order_[i]] = i;
    }

    // Active intervals form a doubly linked list; sentinel index n.
    std::vector<VertexId> prev(n + 1, n);
    std::vector<VertexId> next(n + 1, n);
    std::vector<std::vector<VertexId>> lists(n);
    for (const Endpoint& e : events) {
        const VertexId v = e.vertex;
        if (e.is_left) {
            for (VertexId a = next[n]; a != n; a = next[a]) {
                lists[v].push_back(a);
                lists[a].push_back(v);
            }
            next[v] = next[n];
            prev[v] = n;
            prev[next[n]] = v;
            next[n] = v;
        } else {
            next[prev[v]] = next[v];
            prev[next[v]] = prev[v];
        }
    }

    offsets_.assign(n + 1, 0);
    for (VertexId v = 0; v < n; ++v) {
        offsets_[v + 1] = offsets_[v] + lists[v].size();
    }
    adjacency_.reserve(offsets_[n]);
    for (VertexId v = 0; v < n; ++v) {
        std::sort(lists[v].begin(), lists[v].end(),
                  [this](VertexId a, VertexId b) { return rank_[a] < rank_[b]; });
        adjacency_.insert(adjacency_.end(), lists[v].begin(), lists[v].end());
    }
}

bool IntervalGraph::unit_weights() const {
    return std::all_of(weights_.begin(), weights_.end(),
                       [](const Rational& w) { return w == Rational(1); });
}

Rational IntervalGraph::total_weight() const {
    return std::accumulate(weights_.begin(), weights_.end(), Rational(0));
}

Rational IntervalGraph::weight_of(std::span<const VertexId> vertices) const {
    Rational total(0);
    for (VertexId v : vertices) {
        total += weights_[v];
    }
    return total;
}

Interval span(const IntervalGraph& graph, std::span<const VertexId> vertices) {
    if (vertices.empty()) {
        throw EmptySet("span of an empty vertex set");
    }
    Interval result = graph.interval(vertices.front());
    for (VertexId v : vertices) {
        result.left = std::min(result.left, graph.left(v));
        result.right = std::max(result.right, graph.right(v));
    }
    return result;
}

std::vector<Interval> normalize_intervals(const std::vector<Interval>& intervals) {
    std::vector<Endpoint> events = sorted_endpoints(intervals);
    std::vector<Interval> result(intervals.size());
    for (std::size_t i = 0; i < events.size(); ++i) {
        Coord c = static_cast<Coord>(i) + 1;
        if (events[i].is_left) {
            result[events[i].vertex].left = c;
        } else {
            result[events[i].vertex].right = c;
        }
    }
    return result;
}

IntervalGraph normalize_endpoints(const IntervalGraph& graph) {
    return IntervalGraph(normalize_intervals(graph.intervals()), graph.weights());
}

namespace {

// Room for stretched endpoints between consecutive original endpoints.
constexpr Coord kScale = Coord{1} << 20;

class StretchState {
public:
    explicit StretchState(const IntervalGraph& graph) : cur_(graph.intervals()) {
        rescale();
    }

    const Interval& operator[](VertexId v) const { return cur_[v]; }
    const std::vector<Interval>& intervals() const { return cur_; }

    // Place the right endpoints of `vs`, in order, just after r_u.
    void stretch_right(VertexId u, const std::vector<VertexId>& vs) {
        const Coord t = static_cast<Coord>(vs.size());
        Coord gap = gap_after(cur_[u].right);
        if (gap <= t) {
            rescale();
            gap = gap_after(cur_[u].right);
        }
        const Coord base = cur_[u].right;
        for (Coord i = 0; i < t; ++i) {
            move(cur_[vs[i]].right, base + gap * (i + 1) / (t + 1));
        }
    }

    // Place the left endpoints of `vs` just before l_u; vs[0] ends up closest.
    void stretch_left(VertexId u, const std::vector<VertexId>& vs) {
        const Coord t = static_cast<Coord>(vs.size());
        Coord gap = gap_before(cur_[u].left);
        if (gap <= t) {
            rescale();
            gap = gap_before(cur_[u].left);
        }
        const Coord base = cur_[u].left;
        for (Coord i = 0; i < t; ++i) {
            move(cur_[vs[i]].left, base - gap * (i + 1) / (t + 1));
        }
    }

private:
    Coord gap_after(Coord c) const {
        auto it = endpoints_.upper_bound(c);
        return it == endpoints_.end() ? kScale : *it - c;
    }

    Coord gap_before(Coord c) const {
        auto it = endpoints_.lower_bound(c);
        return it == endpoints_.begin() ? kScale : c - *std::prev(it);
    }

    void move(Coord& endpoint, Coord target) {
        endpoints_.erase(endpoint);
        endpoint = target;
        endpoints_.insert(target);
    }

    void rescale() {
        cur_ = normalize_intervals(cur_);
        endpoints_.clear();
        for (Interval& iv : cur_) {
            iv.left *= kScale;
            iv.right *= kScale;
            endpoints_.insert(iv.left);
            endpoints_.insert(iv.right);
        }
    }

    std::vector<Interval> cur_;
    std::set<Coord> endpoints_;
};

} // namespace

IntervalGraph make_semi_proper(const IntervalGraph& input) {
    const VertexId n = input.size();
    if (n == 0) {
        return input;
    }
    const IntervalGraph graph = normalize_endpoints(input);
    StretchState cur(graph);

    // z == v counts as membership: v is then extremal among N(u) and the
    // stretch crosses no endpoint of another neighbor of u.
    auto member = [&](VertexId z, VertexId v) {
        return z == v || intervals_intersect(cur[z], cur[v]);
    };
    auto contained_neighbors = [&](VertexId u) {
        std::vector<VertexId> result;
        for (VertexId v : graph.neighbors(u)) {
            if (cur[u].left < cur[v].left && cur[v].right < cur[u].right) {
                result.push_back(v);
            }
        }
        return result;
    };

    // Pass 1 only moves right endpoints, so z2 (max left) is stable.
    std::vector<VertexId> z2(n);
    for (VertexId u = 0; u < n; ++u) {
        z2[u] = u;
        for (VertexId v : graph.neighbors(u)) {
            if (z2[u] == u || cur[v].left > cur[z2[u]].left) {
                z2[u] = v;
            }
        }
    }
    for (VertexId u : graph.order()) {
        std::vector<VertexId> inside = contained_neighbors(u);
        std::sort(inside.begin(), inside.end(),
                  [&](VertexId a, VertexId b) { return cur[a].left < cur[b].left; });
        std::vector<VertexId> stretched;
        for (VertexId v : inside) {
            if (member(z2[u], v)) {
                stretched.push_back(v);
            }
        }
        if (!stretched.empty()) {
            cur.stretch_right(u, stretched);
        }
    }

    // Pass 2 only moves left endpoints, so z1 (min right) is stable.
    std::vector<VertexId> z1(n);
    for (VertexId u = 0; u < n; ++u) {
        z1[u] = u;
        for (VertexId v : graph.neighbors(u)) {
            if (z1[u] == u || cur[v].right < cur[z1[u]].right) {
                z1[u] = v;
            }
        }
    }
    for (VertexId u : graph.order()) {
        std::vector<VertexId> inside = contained_neighbors(u);
        std::sort(inside.begin(), inside.end(),
                  [&](VertexId a, VertexId b) { return cur[a].right > cur[b].right; });
        std::vector<VertexId> stretched;
        for (VertexId v : inside) {
            if (!member(z2[u], v) && member(z1[u], v)) {
                stretched.push_back(v);
            }
        }
        if (!stretched.empty()) {
            cur.stretch_left(u, stretched);
        }
    }

    return IntervalGraph(normalize_intervals(cur.intervals()), graph.weights());
}

bool same_edge_set(const IntervalGraph& a, const IntervalGraph& b) {
    if (a.size() != b.size() || a.edge_count() != b.edge_count()) {
        return false;
    }
    for (VertexId v = 0; v < a.size(); ++v) {
        std::vector<VertexId> na(a.neighbors(v).begin(), a.neighbors(v).end());
        std::vector<VertexId> nb(b.neighbors(v).begin(), b.neighbors(v).end());
        std::sort(na.begin(), na.end());
        std::sort(nb.begin(), nb.end());
        if (na != nb) {
            return false;
        }
    }
    return true;
}

bool induces_claw(const IntervalGraph& graph, VertexId a, VertexId b, VertexId c, VertexId d) {
    const std::array<VertexId, 4> vs{a, b, c, d};
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            if (vs[i] == vs[j]) {
                return false;
            }
        }
    }
    for (int center = 0; center < 4; ++center) {
        bool ok = true;
        for (int i = 0; i < 4 && ok; ++i) {
            if (i == center) {
                continue;
            }
            ok = graph.adjacent(vs[center], vs[i]);
            for (int j = i + 1; j < 4 && ok; ++j) {
                if (j != center) {
                    ok = !graph.adjacent(vs[i], vs[j]);
                }
            }
        }
        if (ok) {
            return true;
        }
    }
    return false;
}

bool is_semi_proper(const IntervalGraph& graph) {
    for (VertexId u = 0; u < graph.size(); ++u) {
        for (VertexId v : graph.neighbors(u)) {
            if (!graph.contains(u, v)) {
                continue;
            }
            // v inside u forces u to be the claw center.
            bool found = false;
            auto nu = graph.neighbors(u);
            for (std::size_t i = 0; i < nu.size() && !found; ++i) {
                for (std::size_t j = i + 1; j < nu.size() && !found; ++j) {
                    found = induces_claw(graph, u, v, nu[i], nu[j]);
                }
            }
            if (!found) {
                return false;
            }
        }
    }
    return true;
}

} // namespace ipath
