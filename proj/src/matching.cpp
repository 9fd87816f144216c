#include "ipath/matching.hpp"

#include <algorithm>
#include <istream>
#include <queue>
#include <sstream>
#include <string>

#include "ipath/errors.hpp"

namespace ipath {

SimpleGraph::SimpleGraph(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) {
        throw InvalidGraph("negative vertex count");
    }
    adjacency_.resize(n);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n) {
            throw InvalidGraph("edge endpoint out of range");
        }
        if (u == v) {
            throw InvalidGraph("self-loop at vertex " + std::to_string(u));
        }
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
    }
    for (auto& list : adjacency_) {
        std::sort(list.begin(), list.end());
        if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
            throw InvalidGraph("repeated edge");
        }
    }
    edges_ = edges.size();
}

bool SimpleGraph::adjacent(int u, int v) const {
    return std::binary_search(adjacency_[u].begin(), adjacency_[u].end(), v);
}

SimpleGraph read_edge_list(std::istream& in) {
    std::vector<std::vector<long long>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream fields(line);
        std::vector<long long> row;
        std::string token;
        while (fields >> token) {
            try {
                std::size_t used = 0;
                row.push_back(std::stoll(token, &used));
                if (used != token.size()) {
                    throw ParseError("bad integer '" + token + "'");
                }
            } catch (const std::logic_error&) {
                throw ParseError("bad integer '" + token + "'");
            }
        }
        if (!row.empty()) {
            if (row.size() != 2) {
                throw ParseError("expected two integers per line");
            }
            rows.push_back(std::move(row));
        }
    }
    if (rows.empty()) {
        throw ParseError("missing header `n m`");
    }
    const long long n = rows[0][0];
    const long long m = rows[0][1];
    if (n < 0 || m < 0 || n > (1 << 30)) {
        throw ParseError("bad header");
    }
    if (static_cast<long long>(rows.size()) - 1 != m) {
        throw ParseError("expected " + std::to_string(m) + " edges, found " +
                         std::to_string(rows.size() - 1));
    }
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (rows[i][0] < 0 || rows[i][1] < 0 || rows[i][0] >= n || rows[i][1] >= n) {
            throw ParseError("edge endpoint out of range");
        }
        edges.emplace_back(static_cast<int>(rows[i][0]), static_cast<int>(rows[i][1]));
    }
    try {
        return SimpleGraph(static_cast<int>(n), edges);
    } catch (const InvalidGraph& e) {
        throw ParseError(e.what());
    }
}

KernelOutcome kernelize(const SimpleGraph& graph, int k) {
    KernelOutcome out;
    if (k <= 0) {
        out.verdict = KernelVerdict::Yes;
        return out;
    }
    const int n = graph.size();
    std::vector<char> removed(n, 0);
    int r = 0;
    bool changed = true;
    while (changed) {
        changed = false;
        ++out.passes;
        for (int v = 0; v < n; ++v) {
            if (removed[v]) {
                continue;
            }
            // Stop as soon as the threshold is exceeded: at most r removed
            // neighbors plus 2(k-r-1)+1 surviving ones are probed.
            const std::size_t threshold = 2 * static_cast<std::size_t>(k - r - 1);
            std::size_t alive = 0;
            std::size_t probes = 0;
            for (int u : graph.neighbors(v)) {
                ++probes;
                if (!removed[u] && ++alive > threshold) {
                    break;
                }
            }
            out.max_probes = std::max(out.max_probes, probes);
            if (alive > threshold) {
                removed[v] = 1;
                changed = true;
                if (++r == k) {
                    out.verdict = KernelVerdict::Yes;
                    out.removed_high_degree = r;
                    return out;
                }
            }
        }
    }
    out.removed_high_degree = r;
    out.k_prime = k - r;

    std::vector<int> new_id(n, -1);
    int kept = 0;
    for (int v = 0; v < n; ++v) {
        if (removed[v]) {
            continue;
        }
        for (int u : graph.neighbors(v)) {
            if (!removed[u]) {
                new_id[v] = kept++;
                break;
            }
        }
    }
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v) {
        if (new_id[v] < 0) {
            continue;
        }
        for (int u : graph.neighbors(v)) {
            if (u > v && new_id[u] >= 0) {
                edges.emplace_back(new_id[v], new_id[u]);
            }
        }
    }
    const long long bound = static_cast<long long>(out.k_prime - 1) * (2LL * out.k_prime - 1);
    if (kept > bound || static_cast<long long>(edges.size()) > bound) {
        out.verdict = KernelVerdict::Yes;
        return out;
    }
    out.kernel = SimpleGraph(kept, edges);
    return out;
}

namespace {

// Classic Edmonds: BFS from each free vertex, contracting odd cycles by
// relabeling their base.
class Blossom {
public:
    explicit Blossom(const SimpleGraph& g)
        : g_(g), n_(g.size()), match_(n_, -1), parent_(n_), base_(n_), used_(n_), blossom_(n_) {}

    std::vector<std::pair<int, int>> run() {
        // Greedy start shortens the search.
        for (int v = 0; v < n_; ++v) {
            if (match_[v] >= 0) {
                continue;
            }
            for (int u : g_.neighbors(v)) {
                if (match_[u] < 0) {
                    match_[u] = v;
                    match_[v] = u;
                    break;
                }
            }
        }
        for (int v = 0; v < n_; ++v) {
            if (match_[v] < 0) {
                int end = find_path(v);
                while (end >= 0) {
                    const int pv = parent_[end];
                    const int next = match_[pv];
                    match_[end] = pv;
                    match_[pv] = end;
                    end = next;
                }
            }
        }
        std::vector<std::pair<int, int>> result;
        for (int v = 0; v < n_; ++v) {
            if (match_[v] > v) {
                result.emplace_back(v, match_[v]);
            }
        }
        return result;
    }

private:
    int lca(int a, int b) {
        std::vector<char> seen(n_, 0);
        while (true) {
            a = base_[a];
            seen[a] = 1;
            if (match_[a] < 0) {
                break;
            }
            a = parent_[match_[a]];
        }
        while (true) {
            b = base_[b];
            if (seen[b]) {
                return b;
            }
            b = parent_[match_[b]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base_[v] != b) {
            blossom_[base_[v]] = blossom_[base_[match_[v]]] = 1;
            parent_[v] = child;
            child = match_[v];
            v = parent_[match_[v]];
        }
    }

    // Returns the free vertex ending an augmenting path from root, or -1.
    int find_path(int root) {
        std::fill(used_.begin(), used_.end(), 0);
        std::fill(parent_.begin(), parent_.end(), -1);
        for (int i = 0; i < n_; ++i) {
            base_[i] = i;
        }
        used_[root] = 1;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            const int v = q.front();
            q.pop();
            for (int to : g_.neighbors(v)) {
                if (base_[v] == base_[to] || match_[v] == to) {
                    continue;
                }
                if (to == root || (match_[to] >= 0 && parent_[match_[to]] >= 0)) {
                    const int cur = lca(v, to);
                    std::fill(blossom_.begin(), blossom_.end(), 0);
                    mark_path(v, cur, to);
                    mark_path(to, cur, v);
                    for (int i = 0; i < n_; ++i) {
                        if (blossom_[base_[i]]) {
                            base_[i] = cur;
                            if (!used_[i]) {
                                used_[i] = 1;
                                q.push(i);
                            }
                        }
                    }
                } else if (parent_[to] < 0) {
                    parent_[to] = v;
                    if (match_[to] < 0) {
                        return to;
                    }
                    used_[match_[to]] = 1;
                    q.push(match_[to]);
                }
            }
        }
        return -1;
    }

    const SimpleGraph& g_;
    int n_;
    std::vector<int> match_, parent_, base_;
    std::vector<char> used_, blossom_;
};

} // namespace

std::vector<std::pair<int, int>> max_matching(const SimpleGraph& graph) {
    return Blossom(graph).run();
}

bool decide_matching(const SimpleGraph& graph, int k) {
    const KernelOutcome outcome = kernelize(graph, k);
    if (outcome.verdict == KernelVerdict::Yes) {
        return true;
    }
    return static_cast<int>(max_matching(outcome.kernel).size()) >= outcome.k_prime;
}

} // namespace ipath
