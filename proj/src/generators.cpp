#include "ipath/generators.hpp"

#include <algorithm>
#include <numeric>

#include "ipath/errors.hpp"

namespace ipath {

GeneratorKind parse_generator_kind(const std::string& name) {
    if (name == "random") {
        return GeneratorKind::Random;
    }
    if (name == "proper") {
        return GeneratorKind::Proper;
    }
    if (name == "planted") {
        return GeneratorKind::Planted;
    }
    throw InvalidSpec("unknown generator kind '" + name + "'");
}

std::string to_string(GeneratorKind kind) {
    switch (kind) {
    case GeneratorKind::Random:
        return "random";
    case GeneratorKind::Proper:
        return "proper";
    case GeneratorKind::Planted:
        return "planted";
    }
    return "?";
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    // Reject the top partial block so every residue is equally likely.
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

IntervalGraph generate(const GeneratorSpec& spec) {
    if (spec.n < 1) {
        throw InvalidSpec("n must be at least 1");
    }
    if (spec.k < 0) {
        throw InvalidSpec("k must be nonnegative");
    }
    std::mt19937_64 rng(spec.seed);
    std::vector<Interval> intervals;
    switch (spec.kind) {
    case GeneratorKind::Random: {
        std::vector<Coord> points(2 * static_cast<std::size_t>(spec.n));
        std::iota(points.begin(), points.end(), Coord{1});
        shuffle(points, rng);
        for (std::size_t i = 0; i < points.size(); i += 2) {
            intervals.push_back({std::min(points[i], points[i + 1]),
                                 std::max(points[i], points[i + 1])});
        }
        break;
    }
    case GeneratorKind::Proper:
        for (Coord j = 1; j <= spec.n; ++j) {
            intervals.push_back({2 * j, 2 * j + 3});
        }
        break;
    case GeneratorKind::Planted: {
        // Staircase endpoints are multiples of S; wide interval t sits at
        // offsets 2t+1 and 2t+2 inside a block, so all endpoints differ.
        const Coord S = 2 * static_cast<Coord>(spec.k) + 2;
        for (Coord j = 1; j <= spec.n; ++j) {
            intervals.push_back({S * 2 * j, S * (2 * j + 3)});
        }
        for (Coord t = 0; t < spec.k; ++t) {
            Coord a = 1 + static_cast<Coord>(uniform_below(rng, spec.n + 1));
            Coord b = 1 + static_cast<Coord>(uniform_below(rng, spec.n + 1));
            if (a > b) {
                std::swap(a, b);
            }
            b += 1;
            intervals.push_back({S * 2 * a + 2 * t + 1, S * 2 * b + 2 * t + 2});
        }
        break;
    }
    }
    return IntervalGraph(normalize_intervals(intervals));
}

} // namespace ipath
