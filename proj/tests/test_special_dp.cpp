#include <doctest.h>

#include <map>
#include <optional>

#include "ipath/errors.hpp"
#include "ipath/oracle.hpp"
#include "ipath/pipeline.hpp"
#include "ipath/special_dp.hpp"
#include "support.hpp"

using namespace ipath;
using namespace ipath::test;

namespace {

struct Key {
    std::size_t t;
    VertexId v, y;
    auto operator<=>(const Key&) const = default;
};

// Best normal path of G_xi(v) ending at y for every entry, by enumerating
// all normal paths of the graph.
std::map<Key, Rational> brute_entries(const IntervalGraph& g, const std::vector<Coord>& xi) {
    std::map<Key, Rational> best;
    for_each_normal_path(g, [&](const Path& p) {
        Coord lo = g.left(p.front());
        Coord hi = g.right(p.front());
        for (VertexId u : p) {
            lo = std::min(lo, g.left(u));
            hi = std::max(hi, g.right(u));
        }
        const Rational w = g.weight_of(p);
        const VertexId y = p.back();
        for (std::size_t t = 0; t < xi.size() && xi[t] <= lo; ++t) {
            for (VertexId v = 0; v < g.size(); ++v) {
                if (g.right(v) < hi || !(xi[t] < g.right(v))) {
                    continue;
                }
                if (v != y && !(g.adjacent(v, y) && g.before(y, v))) {
                    continue;
                }
                auto [it, fresh] = best.try_emplace(Key{t, v, y}, w);
                if (!fresh && w > it->second) {
                    it->second = w;
                }
            }
        }
    });
    return best;
}

// pi_{u,v}: sigma-last of {u} and the B-neighbors w of u with u < w < v.
VertexId brute_pi(const IntervalGraph& g, const std::vector<char>& in_a, VertexId u, VertexId v) {
    VertexId best = u;
    for (VertexId w = 0; w < g.size(); ++w) {
        if (!in_a[w] && g.adjacent(u, w) && g.before(u, w) && g.before(w, v) && g.before(best, w)) {
            best = w;
        }
    }
    return best;
}

} // namespace

TEST_CASE("add_dummy_v0") {
    const SpecialGraph s = split3();
    const SpecialGraph a = add_dummy_v0(s);
    CHECK(a.has_v0);
    CHECK(a.graph.size() == 4);
    CHECK(a.B.size() == s.B.size() + 1);
    CHECK(a.B.front() == 3);
    CHECK(a.graph.degree(3) == 0);
    CHECK(a.graph.weight(3) == Rational(0));
    CHECK(a.graph.order().front() == 3);
    CHECK_THROWS_AS(add_dummy_v0(a), DoubleAugment);
    CHECK(max_weight_path(a).weight == max_weight_path(s).weight);

    const SpecialGraph empty = add_dummy_v0(make_special_graph(IntervalGraph{}, {}));
    CHECK(empty.graph.size() == 1);
    const DpResult r = max_weight_path(make_special_graph(IntervalGraph{}, {}));
    CHECK(r.weight == Rational(0));
    CHECK(r.path.empty());
}

TEST_CASE("subgraph_contains") {
    const IntervalGraph g = path3();
    CHECK(subgraph_contains(g, g.left(1), 1, 1));
    CHECK_FALSE(subgraph_contains(g, g.left(1) + 1, 1, 1));
    CHECK(subgraph_contains(g, 0, 1, 0));
    CHECK_FALSE(subgraph_contains(g, 0, 1, 2));
}

TEST_CASE("max_weight_path: worked examples") {
    const DpResult single =
        max_weight_path(make_special_graph(IntervalGraph({{1, 2}}, {Rational(5)}), {0}));
    CHECK(single.weight == Rational(5));
    CHECK(single.path == Path{0});

    const DpResult split = max_weight_path(split3());
    CHECK(split.weight == Rational(5));
    CHECK(split.path == Path{1, 0, 2});
    CHECK(is_normal_path(split3().graph, split.path));

    PipelineTrace t;
    longest_path(path3(), &t);
    const DpResult p = max_weight_path(t.stage2.special);
    CHECK(p.weight == Rational(3));
    REQUIRE(p.path.size() == 1);
    CHECK(t.stage2.special.in_a[p.path.front()]);
}

TEST_CASE("max_weight_path rejects invalid partitions") {
    // a1 = [1, 10] contains b = [2, 3].
    SpecialGraph bad = make_special_graph(IntervalGraph({{1, 10}, {2, 3}}), {1, 0});
    CHECK_THROWS_AS(max_weight_path(bad), InvalidSpecialPartition);
    // Two intersecting A-intervals.
    SpecialGraph overlap = make_special_graph(IntervalGraph({{1, 4}, {3, 6}}), {1, 1});
    CHECK_THROWS_AS(max_weight_path(overlap), InvalidSpecialPartition);
    SpecialGraph small = split3();
    small.kappa = 0;
    CHECK_THROWS_AS(max_weight_path(small), InvalidSpecialPartition);
}

TEST_CASE("DP value equals brute force on random special graphs") {
    auto rng = rng_for(7);
    for (int round = 0; round < 400; ++round) {
        const SpecialGraph s = random_special(1 + round % 12, rng);
        const DpResult r = max_weight_path(s);
        REQUIRE(r.weight == brute_max_weight_path(s.graph).weight);
        REQUIRE(r.stats.dependency_violations == 0);
        if (!r.path.empty()) {
            REQUIRE(is_normal_path(s.graph, r.path));
            REQUIRE(s.graph.weight_of(r.path) == r.weight);
        }
        REQUIRE(r.stats.xi_count <= 2 * r.stats.b_size);
    }
}

TEST_CASE("every DP entry is the best normal path of its subgraph") {
    auto rng = rng_for(11);
    for (int round = 0; round < 150; ++round) {
        const SpecialGraph s = random_special(1 + round % 9, rng);
        const DpTable table = DpTable::build(s);
        const IntervalGraph& g = table.graph();
        const auto& xi = table.xi();
        const auto expected = brute_entries(g, xi);
        for (std::size_t t = 0; t < xi.size(); ++t) {
            for (VertexId v = 0; v < g.size(); ++v) {
                if (!(xi[t] < g.right(v))) {
                    continue;
                }
                std::vector<VertexId> ends{v};
                for (VertexId y : g.neighbors(v)) {
                    if (g.before(y, v)) {
                        ends.push_back(y);
                    }
                }
                for (VertexId y : ends) {
                    if (!subgraph_contains(g, xi[t], v, y)) {
                        continue;
                    }
                    const auto it = expected.find(Key{t, v, y});
                    const std::optional<Rational> got = table.value(t, v, y);
                    REQUIRE(got.has_value() == (it != expected.end()));
                    if (!got) {
                        CHECK(table.entry_case(t, v, y) == EntryCase::Undefined);
                        continue;
                    }
                    REQUIRE(*got == it->second);
                    const Path p = table.reconstruct(t, v, y);
                    REQUIRE(is_normal_path(g, p));
                    REQUIRE(p.back() == y);
                    REQUIRE(g.weight_of(p) == *got);
                    for (VertexId u : p) {
                        REQUIRE(subgraph_contains(g, xi[t], v, u));
                    }
                }
            }
        }
    }
}

TEST_CASE("prefix maxima follow the incremental recurrence") {
    auto rng = rng_for(13);
    for (int round = 0; round < 100; ++round) {
        const SpecialGraph s = random_special(2 + round % 10, rng);
        const SpecialGraph aug = add_dummy_v0(s);
        const DpTable table = DpTable::build(s);
        const IntervalGraph& g = table.graph();
        const auto& xi = table.xi();
        for (VertexId v = 0; v < g.size(); ++v) {
            for (std::size_t t = 0; t < xi.size() && xi[t] < g.right(v); ++t) {
                // W(pi_{x,v}, x) for the earlier neighbors x inside G_xi(v).
                std::map<Coord, std::optional<Rational>> by_right;
                for (VertexId x : g.neighbors(v)) {
                    if (g.before(x, v) && subgraph_contains(g, xi[t], v, x)) {
                        by_right[g.right(x)] =
                            table.value(t, brute_pi(g, aug.in_a, x, v), x);
                    }
                }
                auto from_scratch = [&](Coord q) {
                    std::optional<Rational> best;
                    for (const auto& [r, w] : by_right) {
                        if (r < q && w && (!best || *w > *best)) {
                            best = w;
                        }
                    }
                    return best;
                };
                std::optional<Rational> running;
                for (const auto& [r, w] : by_right) {
                    REQUIRE(from_scratch(r + 1) ==
                            (w && (!running || *w > *running) ? w : running));
                    if (w && (!running || *w > *running)) {
                        running = w;
                    }
                }
            }
        }
    }
}

TEST_CASE("self entries satisfy the append recurrence") {
    auto rng = rng_for(17);
    for (int round = 0; round < 150; ++round) {
        const SpecialGraph s = random_special(1 + round % 11, rng);
        const SpecialGraph aug = add_dummy_v0(s);
        const DpTable table = DpTable::build(s);
        const IntervalGraph& g = table.graph();
        const auto& xi = table.xi();
        for (VertexId v = 0; v < g.size(); ++v) {
            for (std::size_t t = 0; t < xi.size() && xi[t] <= g.left(v); ++t) {
                Rational expected = g.weight(v);
                for (VertexId x : g.neighbors(v)) {
                    if (!g.before(x, v) || !subgraph_contains(g, xi[t], v, x)) {
                        continue;
                    }
                    if (auto w = table.value(t, brute_pi(g, aug.in_a, x, v), x)) {
                        expected = std::max(expected, *w + g.weight(v));
                    }
                }
                REQUIRE(table.value(t, v, v) == expected);
            }
        }
    }
}

TEST_CASE("corrupt requests are rejected") {
    const DpTable table = DpTable::build(split3());
    CHECK_FALSE(table.value(0, 0, 2).has_value());
    CHECK_THROWS_AS(table.reconstruct(0, 0, 2), CorruptParentChain);
    const auto best = table.best();
    CHECK(best.weight == Rational(5));
}
