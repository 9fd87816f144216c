#include <doctest.h>

#include <algorithm>
#include <set>

#include "ipath/claws.hpp"
#include "ipath/errors.hpp"
#include "support.hpp"

using namespace ipath;
using namespace ipath::test;

namespace {

// CLAW4 twice, the second copy shifted right by 20; ids 0..3 and 4..7.
IntervalGraph two_claws() {
    return IntervalGraph({{1, 8}, {0, 2}, {4, 5}, {7, 9}, {21, 28}, {20, 22}, {24, 25}, {27, 29}});
}

std::vector<char> mask(VertexId n, const std::vector<VertexId>& vertices) {
    std::vector<char> m(n, 0);
    for (VertexId v : vertices) {
        m[v] = 1;
    }
    return m;
}

void check_certificates(const IntervalGraph& g, const DeletionSet& d) {
    REQUIRE(d.marked.size() == 4 * d.certificates.size());
    std::set<VertexId> seen;
    for (const ClawWitness& c : d.certificates) {
        REQUIRE(induces_claw(g, c.center, c.leaves[0], c.leaves[1], c.leaves[2]));
        for (VertexId v : {c.center, c.leaves[0], c.leaves[1], c.leaves[2]}) {
            REQUIRE(g.adjacent(c.center, v) == (v != c.center));
            REQUIRE(seen.insert(v).second);
        }
    }
    REQUIRE(seen == std::set<VertexId>(d.marked.begin(), d.marked.end()));
    REQUIRE(is_claw_free(g, mask(g.size(), d.marked)));
}

} // namespace

TEST_CASE("find_claw_at: worked examples") {
    const auto w = find_claw_at(claw4(), 0);
    REQUIRE(w.has_value());
    CHECK(w->center == 0);
    CHECK(std::set<VertexId>(w->leaves.begin(), w->leaves.end()) == std::set<VertexId>{1, 2, 3});
    CHECK_FALSE(find_claw_at(path3(), 1).has_value());
    CHECK_FALSE(find_claw_at(claw4(), 2).has_value());
    std::vector<char> removed{0, 0, 1, 0};
    CHECK_FALSE(find_claw_at(claw4(), 0, removed).has_value());
}

TEST_CASE("find_claw_at agrees with brute-force claw search") {
    for (std::uint64_t seed = 1; seed <= 150; ++seed) {
        const IntervalGraph g = random_graph(1 + static_cast<int>(seed % 14), seed);
        for (VertexId u = 0; u < g.size(); ++u) {
            bool any = false;
            const auto nb = g.neighbors(u);
            for (std::size_t a = 0; a < nb.size() && !any; ++a) {
                for (std::size_t b = a + 1; b < nb.size() && !any; ++b) {
                    for (std::size_t c = b + 1; c < nb.size() && !any; ++c) {
                        any = !g.adjacent(nb[a], nb[b]) && !g.adjacent(nb[a], nb[c]) &&
                              !g.adjacent(nb[b], nb[c]);
                    }
                }
            }
            const auto w = find_claw_at(g, u);
            REQUIRE(w.has_value() == any);
            if (w) {
                REQUIRE(induces_claw(g, w->center, w->leaves[0], w->leaves[1], w->leaves[2]));
            }
        }
    }
}

TEST_CASE("approx_deletion_set: worked examples") {
    const DeletionSet c = approx_deletion_set(claw4());
    CHECK(std::set<VertexId>(c.marked.begin(), c.marked.end()) == std::set<VertexId>{0, 1, 2, 3});
    CHECK(c.certificates.size() == 1);
    CHECK(approx_deletion_set(path3()).marked.empty());

    const IntervalGraph g = two_claws();
    const DeletionSet d = approx_deletion_set(g);
    CHECK(d.marked.size() == 8);
    CHECK(d.certificates.size() == 2);
    check_certificates(g, d);
}

TEST_CASE("exact_deletion_set: worked examples") {
    const auto c = exact_deletion_set(claw4(), 1);
    REQUIRE(c.has_value());
    CHECK(c->marked.size() == 1);
    CHECK(is_claw_free(claw4(), mask(4, c->marked)));

    const auto p = exact_deletion_set(path3(), 0);
    REQUIRE(p.has_value());
    CHECK(p->marked.empty());

    CHECK_FALSE(exact_deletion_set(two_claws(), 1).has_value());
    const auto two = exact_deletion_set(two_claws(), 2);
    REQUIRE(two.has_value());
    CHECK(two->marked.size() == 2);

    CHECK_THROWS_AS(exact_deletion_set(generate({GeneratorKind::Random, 40, 0, 3}), 8, 10),
                    BudgetExceeded);
}

TEST_CASE("approximation is certified and within four times the optimum") {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        const int k = static_cast<int>(seed % 6);
        const IntervalGraph g = generate({GeneratorKind::Planted, 25, k, seed});
        const DeletionSet approx = approx_deletion_set(g);
        check_certificates(g, approx);
        const auto exact = exact_deletion_set(g, k);
        REQUIRE(exact.has_value());
        REQUIRE(is_claw_free(g, mask(g.size(), exact->marked)));
        REQUIRE(exact->marked.size() <= approx.marked.size());
        REQUIRE(approx.marked.size() <= 4 * exact->marked.size());
    }
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        const IntervalGraph g = random_graph(1 + static_cast<int>(seed % 30), seed);
        check_certificates(g, approx_deletion_set(g));
    }
}

TEST_CASE("exact solution is minimum on small graphs") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        const IntervalGraph g = random_graph(1 + static_cast<int>(seed % 9), seed);
        const VertexId n = g.size();
        std::size_t best = static_cast<std::size_t>(n);
        for (std::uint32_t subset = 0; subset < (1u << n); ++subset) {
            std::vector<char> removed(n, 0);
            std::size_t size = 0;
            for (VertexId v = 0; v < n; ++v) {
                if (subset >> v & 1u) {
                    removed[v] = 1;
                    ++size;
                }
            }
            if (size < best && is_claw_free(g, removed)) {
                best = size;
            }
        }
        const auto exact = exact_deletion_set(g, n);
        REQUIRE(exact.has_value());
        REQUIRE(exact->marked.size() == best);
    }
}

TEST_CASE("is_proper_representation") {
    CHECK(is_proper_representation(path3()));
    CHECK_FALSE(is_proper_representation(claw4()));
    CHECK(is_proper_representation(IntervalGraph{}));
    CHECK(is_proper_representation(claw4(), std::vector<char>{1, 0, 0, 0}));
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        auto rng = rng_for(seed);
        const IntervalGraph g = random_proper(1 + static_cast<int>(seed % 40), rng, seed % 2);
        REQUIRE(is_proper_representation(g));
        REQUIRE(is_claw_free(g, std::vector<char>(g.size(), 0)));
    }
}

TEST_CASE("claw-free interval graphs become proper after preprocessing") {
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        const IntervalGraph g = random_graph(1 + static_cast<int>(seed % 16), seed);
        const bool claw_free = is_claw_free(g, std::vector<char>(g.size(), 0));
        REQUIRE(claw_free == is_proper_representation(make_semi_proper(g)));
    }
}

TEST_CASE("add_dummies") {
    auto [g, d] = add_dummies(path3(), DeletionSet{});
    REQUIRE(d.dummies.has_value());
    CHECK(d.marked.size() == 2);
    CHECK(g.size() == 5);
    CHECK(g.degree(3) == 0);
    CHECK(g.degree(4) == 0);
    CHECK(g.order().front() == 3);
    CHECK(g.order().back() == 4);
    CHECK(g.weight(3) == Rational(0));
    CHECK(g.edge_count() == path3().edge_count());

    auto [gc, dc] = add_dummies(claw4(), approx_deletion_set(claw4()));
    CHECK(dc.marked.size() == 6);
    CHECK_THROWS_AS(add_dummies(gc, dc), DoubleAugment);
}
