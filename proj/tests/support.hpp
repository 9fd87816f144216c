#ifndef IPATH_TESTS_SUPPORT_HPP
#define IPATH_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "ipath/generators.hpp"
#include "ipath/interval_graph.hpp"
#include "ipath/normal_path.hpp"
#include "ipath/stage2.hpp"

#ifdef DOCTEST_LIBRARY_INCLUDED
template <>
struct doctest::StringMaker<ipath::Rational> {
    static doctest::String convert(const ipath::Rational& value) {
        return ipath::to_string(value).c_str();
    }
};
#endif

namespace ipath::test {

// a=[1,4], b=[3,6], c=[5,8].
inline IntervalGraph path3() { return IntervalGraph({{1, 4}, {3, 6}, {5, 8}}); }

// u=[1,8], v1=[0,2], v2=[4,5], v3=[7,9]; ids 0..3 in that order.
inline IntervalGraph claw4() { return IntervalGraph({{1, 8}, {0, 2}, {4, 5}, {7, 9}}); }

// u=[1,6], v=[2,3], z=[5,8].
inline IntervalGraph nest3() { return IntervalGraph({{1, 6}, {2, 3}, {5, 8}}); }

// b=[1,10] (B, weight 1), a1=[0,2] and a2=[8,11] (A, weight 2).
inline SpecialGraph split3() {
    IntervalGraph g({{1, 10}, {0, 2}, {8, 11}}, {Rational(1), Rational(2), Rational(2)});
    return make_special_graph(std::move(g), {0, 1, 1});
}

inline std::mt19937_64 rng_for(std::uint64_t seed) { return std::mt19937_64(seed); }

inline int draw(std::mt19937_64& rng, int lo, int hi) {
    return lo + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

// Random proper representation: lefts and rights are both opened and
// closed first-in first-out.  With `connected`, no prefix closes every
// interval before the last one opens.
inline IntervalGraph random_proper(int n, std::mt19937_64& rng, bool connected) {
    std::vector<Interval> intervals(n);
    int opened = 0;
    int closed = 0;
    Coord x = 0;
    while (closed < n) {
        const int open = opened - closed;
        bool open_next;
        if (opened == n) {
            open_next = false;
        } else if (open == 0 || (connected && open == 1 && opened > 0)) {
            open_next = true;
        } else {
            open_next = uniform_below(rng, 2) == 0;
        }
        if (open_next) {
            intervals[opened++].left = ++x;
        } else {
            intervals[closed++].right = ++x;
        }
    }
    return IntervalGraph(std::move(intervals));
}

inline IntervalGraph random_graph(int n, std::uint64_t seed) {
    return generate({GeneratorKind::Random, n, 0, seed});
}

// Same intervals, weights p/q with p in [0, 4] and q in [1, 3].
inline IntervalGraph with_random_weights(const IntervalGraph& g, std::mt19937_64& rng) {
    std::vector<Rational> weights;
    for (VertexId v = 0; v < g.size(); ++v) {
        weights.emplace_back(draw(rng, 0, 4), draw(rng, 1, 3));
    }
    return IntervalGraph(g.intervals(), std::move(weights));
}

// Random weighted special graph: A is grown greedily from intervals that
// are disjoint from the current A and contain no other interval.
inline SpecialGraph random_special(int n, std::mt19937_64& rng) {
    const IntervalGraph g = with_random_weights(
        generate({GeneratorKind::Random, n, 0, rng()}), rng);
    std::vector<VertexId> order(n);
    for (VertexId v = 0; v < n; ++v) {
        order[v] = v;
    }
    shuffle(order, rng);
    std::vector<char> in_a(n, 0);
    for (VertexId v : order) {
        if (uniform_below(rng, 3) == 0) {
            continue;
        }
        bool ok = true;
        for (VertexId u = 0; u < n && ok; ++u) {
            if (u == v) {
                continue;
            }
            if (g.contains(v, u) || (in_a[u] && g.adjacent(u, v))) {
                ok = false;
            }
        }
        if (ok) {
            in_a[v] = 1;
        }
    }
    return make_special_graph(g, std::move(in_a));
}

// Calls `visit` on every simple path (one direction per vertex sequence
// and both directions of it are distinct sequences).
inline void for_each_path(const IntervalGraph& g, const std::function<void(const Path&)>& visit) {
    Path path;
    std::vector<char> used(g.size(), 0);
    std::function<void()> grow = [&] {
        visit(path);
        for (VertexId u : g.neighbors(path.back())) {
            if (!used[u]) {
                used[u] = 1;
                path.push_back(u);
                grow();
                path.pop_back();
                used[u] = 0;
            }
        }
    };
    for (VertexId v = 0; v < g.size(); ++v) {
        used[v] = 1;
        path.assign(1, v);
        grow();
        used[v] = 0;
    }
}

// Calls `visit` once per vertex set that some path spans, in increasing
// vertex order.  Subset search, so n is limited to about 20.
inline void for_each_path_set(const IntervalGraph& g,
                              const std::function<void(const std::vector<VertexId>&)>& visit) {
    using Mask = std::uint32_t;
    std::vector<Mask> adj(g.size(), 0);
    std::vector<Mask> ends(Mask{1} << g.size(), 0);
    for (VertexId v = 0; v < g.size(); ++v) {
        for (VertexId u : g.neighbors(v)) {
            adj[v] |= Mask{1} << u;
        }
        ends[Mask{1} << v] = Mask{1} << v;
    }
    std::vector<VertexId> set;
    for (Mask s = 1; s < ends.size(); ++s) {
        if (!ends[s]) {
            continue;
        }
        set.clear();
        for (VertexId v = 0; v < g.size(); ++v) {
            if (s >> v & 1) {
                set.push_back(v);
            }
            if (ends[s] >> v & 1) {
                for (VertexId u : g.neighbors(v)) {
                    if (!(s >> u & 1)) {
                        ends[s | Mask{1} << u] |= Mask{1} << u;
                    }
                }
            }
        }
        visit(set);
    }
}

// Calls `visit` on every normal path.  A vertex w may follow the prefix
// (v_0..v_p) only if it is sigma-after v_0 and, for every i < p with w
// adjacent to v_i, sigma-after v_{i+1}; this is exactly normality of the
// final path, checked incrementally.
inline void for_each_normal_path(const IntervalGraph& g,
                                 const std::function<void(const Path&)>& visit) {
    Path path;
    std::vector<char> used(g.size(), 0);
    std::function<void()> grow = [&] {
        visit(path);
        for (VertexId w : g.neighbors(path.back())) {
            if (used[w] || !g.before(path.front(), w)) {
                continue;
            }
            bool ok = true;
            for (std::size_t i = 0; i + 1 < path.size() && ok; ++i) {
                if (g.adjacent(w, path[i]) && !g.before(path[i + 1], w)) {
                    ok = false;
                }
            }
            if (!ok) {
                continue;
            }
            used[w] = 1;
            path.push_back(w);
            grow();
            path.pop_back();
            used[w] = 0;
        }
    };
    for (VertexId v = 0; v < g.size(); ++v) {
        used[v] = 1;
        path.assign(1, v);
        grow();
        used[v] = 0;
    }
}

// Violations of four properties every normal path P must have:
// (i)   u before w on P and w sigma-before u imply uw is an edge;
// (ii)  consecutive u, w with w sigma-before u imply I_w inside I_u;
// (iii) u sigma-before v with neither interval inside the other implies u
//       before v on P;
// (iv)  appending a neighbor of the last vertex that is sigma-after all of
//       P keeps P normal.
struct NormalPathViolations {
    int i = 0, ii = 0, iii = 0, iv = 0;
    int total() const { return i + ii + iii + iv; }
};

inline void check_normal_path_properties(const IntervalGraph& g, const Path& path,
                                     NormalPathViolations& out) {
    for (std::size_t a = 0; a < path.size(); ++a) {
        for (std::size_t b = a + 1; b < path.size(); ++b) {
            const VertexId u = path[a];
            const VertexId w = path[b];
            if (g.before(w, u) && !g.adjacent(u, w)) {
                ++out.i;
            }
            if (b == a + 1 && g.before(w, u) && !g.contains(u, w)) {
                ++out.ii;
            }
            if (g.before(w, u) && !g.contains(u, w) && !g.contains(w, u)) {
                ++out.iii;
            }
        }
    }
    std::vector<char> on_path(g.size(), 0);
    for (VertexId v : path) {
        on_path[v] = 1;
    }
    VertexId last_in_sigma = path.front();
    for (VertexId v : path) {
        if (g.before(last_in_sigma, v)) {
            last_in_sigma = v;
        }
    }
    for (VertexId z : g.neighbors(path.back())) {
        if (!on_path[z] && g.before(last_in_sigma, z)) {
            Path extended = path;
            extended.push_back(z);
            if (!is_normal_path(g, extended)) {
                ++out.iv;
            }
        }
    }
}

inline Rational path_weight(const IntervalGraph& g, const Path& path) {
    return g.weight_of(path);
}

} // namespace ipath::test

#endif
