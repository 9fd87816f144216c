#include "ipath/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <limits>

#include "ipath/errors.hpp"

namespace ipath {
namespace {

using Clock = std::chrono::steady_clock;

std::int64_t elapsed_ns(Clock::time_point since) {
    return std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - since).count();
}

std::int64_t saturate(Int value) {
    constexpr auto top = std::numeric_limits<std::int64_t>::max();
    return value > static_cast<Int>(top) ? top : static_cast<std::int64_t>(value);
}

// Replaces the clone occurrences of one group by its members: the first
// c-1 occurrences take one member each, the last takes the remaining tail.
Path substitute(const Path& path, const Stage2Result::CloneGroup& group,
                const std::vector<int>& clone_index) {
    const std::size_t c = group.clone_keys.size();
    Path out;
    std::size_t seen = 0;
    for (VertexId v : path) {
        if (clone_index[v] < 0) {
            out.push_back(v);
            continue;
        }
        if (++seen < c) {
            out.push_back(group.members[seen - 1]);
        } else {
            out.insert(out.end(), group.members.begin() + static_cast<std::ptrdiff_t>(c - 1),
                       group.members.end());
        }
    }
    return out;
}

} // namespace

Path lift_stage2(const Stage2Result& stage2, const Path& hat_path, std::int64_t* retries) {
    const std::vector<Interval>& universe = stage2.universe;
    Path path;
    for (VertexId v : hat_path) {
        path.push_back(stage2.universe_id[v]);
    }
    std::vector<int> clone_index(universe.size(), -1);
    // Later groups first, so that each step works in the graph where the
    // earlier groups are still clones.
    for (std::size_t gi = stage2.groups.size(); gi-- > 0;) {
        const auto& group = stage2.groups[gi];
        for (std::size_t j = 0; j < group.clone_keys.size(); ++j) {
            clone_index[group.clone_keys[j]] = static_cast<int>(j);
        }
        std::vector<char> present(group.clone_keys.size(), 0);
        std::size_t last = path.size();
        for (std::size_t p = 0; p < path.size(); ++p) {
            if (clone_index[path[p]] >= 0) {
                present[clone_index[path[p]]] = 1;
                last = p;
            }
        }
        if (last != path.size()) {
            Path missing;
            for (std::size_t j = 0; j < present.size(); ++j) {
                if (!present[j]) {
                    missing.push_back(group.clone_keys[j]);
                }
            }
            path.insert(path.begin() + static_cast<std::ptrdiff_t>(last) + 1, missing.begin(),
                        missing.end());
            if (!is_path(universe, path)) {
                throw LiftFailure("adding the missing clones broke the path");
            }
            path = normalize_path(universe, path);
            Path lifted = substitute(path, group, clone_index);
            if (!is_path(universe, lifted)) {
                if (retries) {
                    ++*retries;
                }
                try {
                    lifted = normalize_path(universe, lifted);
                } catch (const NormalizationFailed&) {
                    throw LiftFailure("clone group " + std::to_string(gi) + " does not expand");
                }
            }
            path = std::move(lifted);
        }
        for (VertexId key : group.clone_keys) {
            clone_index[key] = -1;
        }
    }
    // Universe ids below the first clone key are exactly the G# ids.
    const VertexId first_clone = stage2.groups.empty()
                                     ? static_cast<VertexId>(universe.size())
                                     : stage2.groups.front().clone_keys.front();
    for (VertexId v : path) {
        if (v >= first_clone) {
            throw LiftFailure("a clone survived lifting");
        }
    }
    return path;
}

Path lift_stage1(const Stage1Result& stage1, const IntervalGraph& host, const Path& sharp_path,
                 std::int64_t* retries) {
    if (sharp_path.empty()) {
        return {};
    }
    const Path normal = normalize_path(stage1.g_sharp, sharp_path);
    Path lifted;
    for (VertexId v : normal) {
        const auto& members = stage1.members[v];
        lifted.insert(lifted.end(), members.begin(), members.end());
    }
    if (!is_path(host, lifted)) {
        if (retries) {
            ++*retries;
        }
        try {
            lifted = normalize_path(host, lifted);
        } catch (const NormalizationFailed&) {
            throw LiftFailure("reducible sets do not expand into a path");
        }
    }
    return lifted;
}

PathResult longest_path(const IntervalGraph& graph, PipelineTrace* trace) {
    PathResult result;
    PipelineStats& stats = result.stats;
    stats.n = graph.size();
    stats.m = static_cast<std::int64_t>(graph.edge_count());
    if (graph.empty()) {
        return result;
    }
    PipelineTrace local;
    PipelineTrace& t = trace ? *trace : local;

    auto start = Clock::now();
    t.semi_proper = make_semi_proper(IntervalGraph(graph.intervals()));
    t.approx = approx_deletion_set(t.semi_proper);
    auto [with_dummies, deletion] = add_dummies(t.semi_proper, t.approx);
    t.with_dummies = normalize_endpoints(with_dummies);
    t.deletion = std::move(deletion);
    stats.t_preprocess_ns = elapsed_ns(start);
    stats.d_size = static_cast<std::int64_t>(t.approx.marked.size());

    start = Clock::now();
    t.families1 = compute_stage1_families(t.with_dummies, t.deletion);
    t.stage1 = apply_rule1(t.with_dummies, t.families1);
    stats.t_reduce1_ns = elapsed_ns(start);

    start = Clock::now();
    t.families2 = compute_stage2_families(t.stage1);
    t.stage2 = apply_rule2(t.stage1, t.families2);
    stats.t_reduce2_ns = elapsed_ns(start);
    stats.kappa = saturate(t.stage2.special.kappa);
    stats.a_size = static_cast<std::int64_t>(t.stage2.special.A.size());
    stats.b_size = static_cast<std::int64_t>(t.stage2.special.B.size());

    start = Clock::now();
    t.dp = max_weight_path(t.stage2.special);
    stats.t_dp_ns = elapsed_ns(start);

    start = Clock::now();
    t.sharp_path = lift_stage2(t.stage2, t.dp.path, &stats.lift_retries);
    Path lifted = lift_stage1(t.stage1, t.with_dummies, t.sharp_path, &stats.lift_retries);
    stats.t_lift_ns = elapsed_ns(start);

    const VertexId n = graph.size();
    for (VertexId v : lifted) {
        if (v >= n) {
            throw LiftFailure("a dummy vertex survived lifting");
        }
    }
    if (!is_path(graph, lifted)) {
        throw LiftFailure("lifted path is not a path of the input graph");
    }
    if (!is_integer(t.dp.weight) || Rational(static_cast<Int>(lifted.size())) != t.dp.weight) {
        throw LiftFailure("lifted path has " + std::to_string(lifted.size()) +
                          " vertices but the DP weight is " + to_string(t.dp.weight));
    }
    result.dp_weight = t.dp.weight;
    result.length = static_cast<std::int64_t>(lifted.size());
    result.path = std::move(lifted);
    return result;
}

} // namespace ipath
