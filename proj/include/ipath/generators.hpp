#ifndef IPATH_GENERATORS_HPP
#define IPATH_GENERATORS_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ipath/interval_graph.hpp"

namespace ipath {

enum class GeneratorKind { Random, Proper, Planted };

struct GeneratorSpec {
    GeneratorKind kind = GeneratorKind::Random;
    int n = 0;
    int k = 0; // planted only: number of wide intervals
    std::uint64_t seed = 0;
};

// Throws InvalidSpec for unknown names.
GeneratorKind parse_generator_kind(const std::string& name);
std::string to_string(GeneratorKind kind);

// std::mt19937_64 output is fixed by the standard; the distributions are
// not, so bounded draws and shuffles are done by hand to keep corpora
// identical across standard libraries.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);
template <class T>
void shuffle(std::vector<T>& items, std::mt19937_64& rng) {
    for (std::size_t i = items.size(); i > 1; --i) {
        std::swap(items[i - 1], items[uniform_below(rng, i)]);
    }
}

// random:  a shuffle of 1..2n paired up consecutively.
// proper:  the staircase [2j, 2j+3], j = 1..n.
// planted: the proper staircase plus k wide intervals over random
//          sub-ranges, n + k vertices in total, wide ones last.
// Output is normalized and deterministic per spec.  Throws InvalidSpec.
IntervalGraph generate(const GeneratorSpec& spec);

} // namespace ipath

#endif
