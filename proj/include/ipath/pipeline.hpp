#ifndef IPATH_PIPELINE_HPP
#define IPATH_PIPELINE_HPP

#include <cstdint>
#include <optional>

#include "ipath/claws.hpp"
#include "ipath/interval_graph.hpp"
#include "ipath/normal_path.hpp"
#include "ipath/rational.hpp"
#include "ipath/special_dp.hpp"
#include "ipath/stage1.hpp"
#include "ipath/stage2.hpp"

namespace ipath {

struct PipelineStats {
    std::int64_t n = 0;
    std::int64_t m = 0;
    std::int64_t d_size = 0; // approximate deletion set, without dummies
    std::int64_t kappa = 0;  // the bound used for the special graph
    std::int64_t a_size = 0;
    std::int64_t b_size = 0;
    std::int64_t t_preprocess_ns = 0;
    std::int64_t t_reduce1_ns = 0;
    std::int64_t t_reduce2_ns = 0;
    std::int64_t t_dp_ns = 0;
    std::int64_t t_lift_ns = 0;
    std::int64_t lift_retries = 0;
};

struct PathResult {
    std::int64_t length = 0;
    Path path; // ids of the input graph
    Rational dp_weight{0};
    PipelineStats stats;
};

// Every intermediate object of one run, for inspection and tests.
struct PipelineTrace {
    IntervalGraph semi_proper;  // same ids as the input
    DeletionSet approx;         // on semi_proper
    IntervalGraph with_dummies; // semi_proper plus d0 = n, d_{k+1} = n + 1
    DeletionSet deletion;       // approx plus the dummies
    Stage1Families families1;
    Stage1Result stage1;
    Stage2Families families2;
    Stage2Result stage2;
    DpResult dp;
    Path sharp_path; // the DP path lifted to G#
};

// Longest path of an interval graph (weights are ignored; every vertex
// counts once).  Throws LiftFailure if a lifted path fails validation.
PathResult longest_path(const IntervalGraph& graph, PipelineTrace* trace = nullptr);

// G-hat path -> G# path: per touched clone group, add the missing clones
// after the last one used, normalize, then replace the clones by the
// group's members.  `retries` counts fallback re-normalizations.
Path lift_stage2(const Stage2Result& stage2, const Path& hat_path, std::int64_t* retries = nullptr);

// G# path -> path of `host` (the graph the stage-1 families were built
// on): normalize, then expand every vertex into its members.
Path lift_stage1(const Stage1Result& stage1, const IntervalGraph& host, const Path& sharp_path,
                 std::int64_t* retries = nullptr);

} // namespace ipath

#endif
