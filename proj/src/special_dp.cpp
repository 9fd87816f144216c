#include "ipath/special_dp.hpp"

#include <algorithm>

#include "ipath/errors.hpp"

namespace ipath {

SpecialGraph add_dummy_v0(const SpecialGraph& special) {
    if (special.has_v0) {
        throw DoubleAugment("v0 is already present");
    }
    const IntervalGraph& g = special.graph;
    Coord lo = 0;
    for (VertexId v = 0; v < g.size(); ++v) {
        lo = (v == 0) ? g.left(v) : std::min(lo, g.left(v));
    }
    std::vector<Interval> intervals = g.intervals();
    std::vector<Rational> weights = g.weights();
    intervals.push_back({lo - 2, lo - 1});
    weights.push_back(Rational(0));
    std::vector<char> in_a = special.in_a;
    in_a.push_back(0);
    SpecialGraph result =
        make_special_graph(IntervalGraph(std::move(intervals), std::move(weights)), std::move(in_a));
    result.kappa = special.kappa;
    result.has_v0 = true;
    return result;
}

bool subgraph_contains(const IntervalGraph& graph, Coord xi, VertexId vi, VertexId v) {
    return xi <= graph.left(v) && graph.right(v) <= graph.right(vi);
}

DpTable DpTable::build(const SpecialGraph& special) {
    if (!is_special_partition(special.graph, special.in_a,
                              special.kappa + (special.has_v0 ? 1 : 0))) {
        throw InvalidSpecialPartition("A is not independent, contains an interval, or B exceeds kappa");
    }
    const SpecialGraph augmented = special.has_v0 ? special : add_dummy_v0(special);

    DpTable table;
    table.graph_ = augmented.graph;
    table.in_a_ = augmented.in_a;
    const IntervalGraph& g = table.graph_;
    const VertexId n = g.size();

    // xi_v = l_u when l_v falls inside the (unique) A-interval I_u.
    std::vector<VertexId> a_by_left = augmented.A;
    std::sort(a_by_left.begin(), a_by_left.end(),
              [&](VertexId a, VertexId b) { return g.left(a) < g.left(b); });
    for (VertexId v : augmented.B) {
        Coord xi_v = g.left(v);
        auto it = std::upper_bound(a_by_left.begin(), a_by_left.end(), g.left(v),
                                   [&](Coord c, VertexId a) { return c < g.left(a); });
        if (it != a_by_left.begin() && g.right(*std::prev(it)) > g.left(v)) {
            xi_v = g.left(*std::prev(it));
        }
        table.xi_.push_back(xi_v);
        table.xi_.push_back(g.left(v));
    }
    std::sort(table.xi_.begin(), table.xi_.end());
    table.xi_.erase(std::unique(table.xi_.begin(), table.xi_.end()), table.xi_.end());

    table.prefix_len_.resize(n);
    for (VertexId v = 0; v < n; ++v) {
        table.prefix_len_[v] = static_cast<std::size_t>(
            std::upper_bound(table.xi_.begin(), table.xi_.end(), g.left(v)) - table.xi_.begin());
    }

    // pi_{y,v}: the sigma-last B-vertex w with y < w < v that meets y, else y.
    std::vector<VertexId> b_ranks;
    for (VertexId b : augmented.B) {
        b_ranks.push_back(g.rank(b));
    }
    table.earlier_.resize(n);
    table.pi_.resize(n);
    table.base_.resize(n);
    std::size_t total = 0;
    for (VertexId v = 0; v < n; ++v) {
        for (VertexId y : g.neighbors(v)) {
            if (!g.before(y, v)) {
                break;
            }
            table.earlier_[v].push_back(y);
            VertexId pi = y;
            auto top = std::lower_bound(b_ranks.begin(), b_ranks.end(), g.rank(v));
            while (top != b_ranks.begin()) {
                --top;
                if (*top <= g.rank(y)) {
                    break;
                }
                VertexId w = g.order()[*top];
                if (g.left(w) < g.right(y)) {
                    pi = w;
                    break;
                }
            }
            table.pi_[v].push_back(pi);
        }
        table.base_[v].push_back(total);
        total += table.prefix_len_[v];
        for (VertexId y : table.earlier_[v]) {
            table.base_[v].push_back(total);
            total += table.prefix_len_[y];
        }
    }
    table.values_.assign(total, Rational(0));
    table.parents_.assign(total, Parent{});
    table.stats_.entries = total;
    table.stats_.xi_count = table.xi_.size();
    table.stats_.b_size = augmented.B.size();
    table.run();
    return table;
}

std::size_t DpTable::entry_index(std::size_t xi_index, VertexId v, std::size_t slot) const {
    return base_[v][slot] + xi_index;
}

std::size_t DpTable::slot_of(VertexId v, VertexId y) const {
    if (v == y) {
        return 0;
    }
    const auto& list = earlier_[v];
    auto it = std::lower_bound(list.begin(), list.end(), y, [&](VertexId a, VertexId b) {
        return graph_.rank(a) < graph_.rank(b);
    });
    if (it == list.end() || *it != y) {
        throw CorruptParentChain("vertex is not an earlier neighbor of the entry owner");
    }
    return static_cast<std::size_t>(it - list.begin()) + 1;
}

void DpTable::run() {
    const IntervalGraph& g = graph_;
    struct Best {
        Rational value{0};
        std::int32_t arg = -1; // slot of x, 1-based
    };

    for (VertexId v : g.order()) {
        const auto& E = earlier_[v];
        const std::size_t m = E.size();

        auto read = [&](std::size_t t, VertexId owner, std::size_t slot) -> const Rational* {
            if (!g.before(owner, v)) {
                ++stats_.dependency_violations;
            }
            const std::size_t idx = entry_index(t, owner, slot);
            return parents_[idx].kind == EntryCase::Undefined ? nullptr : &values_[idx];
        };
        auto offer = [&](std::size_t t, std::size_t slot, const Rational& cand, Parent why) {
            const std::size_t idx = entry_index(t, v, slot);
            if (parents_[idx].kind == EntryCase::Undefined || cand > values_[idx]) {
                values_[idx] = cand;
                parents_[idx] = why;
            }
        };

        // Where each earlier neighbor x keeps W(pi_{x,v}, x).
        std::vector<VertexId> pi_owner(m);
        std::vector<std::size_t> pi_slot(m);
        std::vector<Coord> rights(m);
        for (std::size_t s = 0; s < m; ++s) {
            pi_owner[s] = pi_[v][s];
            pi_slot[s] = slot_of(pi_owner[s], E[s]);
            rights[s] = g.right(E[s]);
        }
        // omega(q) = best W(pi_{x,v}, x) over x with r_x < q; prefix[c-1]
        // covers the first c neighbors.
        auto omega = [&](const std::vector<Best>& prefix, Coord q) -> const Best* {
            std::size_t c = static_cast<std::size_t>(
                std::lower_bound(rights.begin(), rights.end(), q) - rights.begin());
            if (c == 0 || prefix[c - 1].arg < 0) {
                return nullptr;
            }
            return &prefix[c - 1];
        };

        const std::size_t xi_end = static_cast<std::size_t>(
            std::lower_bound(xi_.begin(), xi_.end(), g.right(v)) - xi_.begin());
        const std::size_t self_end = prefix_len_[v];
        const std::size_t zeta_begin = self_end; // first Xi value > l_v
        std::vector<Best> prefix(m);

        for (std::size_t t = 0; t < xi_end; ++t) {
            const bool self_ok = t < self_end;
            if (self_ok) {
                offer(t, 0, g.weight(v), Parent{EntryCase::Init, -1, -1});
            }
            for (std::size_t s = 0; s < m; ++s) {
                if (t < prefix_len_[E[s]]) {
                    if (const Rational* w = read(t, pi_owner[s], pi_slot[s])) {
                        offer(t, s + 1, *w, Parent{EntryCase::Copy, -1, -1});
                    }
                }
            }
            if (!self_ok) {
                // v is outside G_xi(v): every entry is a copy.
                continue;
            }

            Best running;
            for (std::size_t s = 0; s < m; ++s) {
                if (t < prefix_len_[E[s]]) {
                    const Rational* w = read(t, pi_owner[s], pi_slot[s]);
                    if (w && (running.arg < 0 || *w > running.value)) {
                        running.value = *w;
                        running.arg = static_cast<std::int32_t>(s + 1);
                    }
                }
                prefix[s] = running;
            }

            if (m > 0 && prefix[m - 1].arg >= 0) {
                offer(t, 0, prefix[m - 1].value + g.weight(v),
                      Parent{EntryCase::SelfAppend, prefix[m - 1].arg, -1});
            }

            for (std::size_t s = 0; s < m; ++s) {
                const VertexId y = E[s];
                if (t >= prefix_len_[y] || g.left(y) < g.left(v)) {
                    continue;
                }
                // I_y lies inside I_v.  The tail candidate does not depend
                // on zeta, so it is offered once instead of per zeta.
                if (const Best* w1 = omega(prefix, g.left(y))) {
                    offer(t, s + 1, w1->value + g.weight(v) + g.weight(y),
                          Parent{EntryCase::Tail, w1->arg, -1});
                }
                for (std::size_t z = zeta_begin; z < prefix_len_[y]; ++z) {
                    const Best* w1 = omega(prefix, xi_[z]);
                    if (!w1) {
                        continue;
                    }
                    if (const Rational* w2 = read(z, pi_owner[s], pi_slot[s])) {
                        offer(t, s + 1, w1->value + g.weight(v) + *w2,
                              Parent{EntryCase::Split, w1->arg, static_cast<std::int32_t>(z)});
                    }
                }
            }
        }
    }
}

std::optional<Rational> DpTable::value(std::size_t xi_index, VertexId v, VertexId y) const {
    if (v < 0 || v >= graph_.size() || xi_index >= xi_.size()) {
        return std::nullopt;
    }
    std::size_t slot = 0;
    if (v != y) {
        const auto& list = earlier_[v];
        auto it = std::find(list.begin(), list.end(), y);
        if (it == list.end()) {
            return std::nullopt;
        }
        slot = static_cast<std::size_t>(it - list.begin()) + 1;
    }
    if (xi_index >= prefix_len_[y]) {
        return std::nullopt;
    }
    const std::size_t idx = entry_index(xi_index, v, slot);
    if (parents_[idx].kind == EntryCase::Undefined) {
        return std::nullopt;
    }
    return values_[idx];
}

EntryCase DpTable::entry_case(std::size_t xi_index, VertexId v, VertexId y) const {
    if (!value(xi_index, v, y)) {
        return EntryCase::Undefined;
    }
    return parents_[entry_index(xi_index, v, slot_of(v, y))].kind;
}

Path DpTable::reconstruct(std::size_t xi_index, VertexId v, VertexId y) const {
    if (!value(xi_index, v, y)) {
        throw CorruptParentChain("terminal entry is undefined");
    }
    struct Item {
        bool emit;
        VertexId vertex; // emitted vertex, or entry owner
        std::size_t t;
        std::size_t slot;
    };
    std::vector<Item> stack{{false, v, xi_index, slot_of(v, y)}};
    Path path;
    std::size_t steps = 0;
    const std::size_t limit = values_.size() + static_cast<std::size_t>(graph_.size()) + 1;
    while (!stack.empty()) {
        if (++steps > limit) {
            throw CorruptParentChain("parent chain does not terminate");
        }
        Item item = stack.back();
        stack.pop_back();
        if (item.emit) {
            path.push_back(item.vertex);
            continue;
        }
        const VertexId owner = item.vertex;
        if (item.t >= xi_.size() || item.slot > earlier_[owner].size()) {
            throw CorruptParentChain("entry out of range");
        }
        const VertexId target = item.slot == 0 ? owner : earlier_[owner][item.slot - 1];
        if (item.t >= prefix_len_[target]) {
            throw CorruptParentChain("entry out of range");
        }
        const Parent& p = parents_[entry_index(item.t, owner, item.slot)];
        auto expand_through = [&](std::size_t t, std::size_t slot_in_owner) {
            const VertexId x = earlier_[owner][slot_in_owner - 1];
            const VertexId pi = pi_[owner][slot_in_owner - 1];
            return Item{false, pi, t, slot_of(pi, x)};
        };
        const bool self = item.slot == 0;
        switch (p.kind) {
        case EntryCase::Init:
            if (!self) {
                throw CorruptParentChain("init on a non-self entry");
            }
            stack.push_back({true, owner, 0, 0});
            break;
        case EntryCase::Copy:
            if (self) {
                throw CorruptParentChain("copy on a self entry");
            }
            stack.push_back(expand_through(item.t, item.slot));
            break;
        case EntryCase::SelfAppend:
            stack.push_back({true, owner, 0, 0});
            stack.push_back(expand_through(item.t, static_cast<std::size_t>(p.x_slot)));
            break;
        case EntryCase::Tail:
            stack.push_back({true, target, 0, 0});
            stack.push_back({true, owner, 0, 0});
            stack.push_back(expand_through(item.t, static_cast<std::size_t>(p.x_slot)));
            break;
        case EntryCase::Split:
            stack.push_back(expand_through(static_cast<std::size_t>(p.zeta), item.slot));
            stack.push_back({true, owner, 0, 0});
            stack.push_back(expand_through(item.t, static_cast<std::size_t>(p.x_slot)));
            break;
        case EntryCase::Undefined:
            throw CorruptParentChain("undefined entry on the parent chain");
        }
    }
    return path;
}

DpTable::Terminal DpTable::best() const {
    Terminal result;
    for (VertexId v : graph_.order()) {
        for (std::size_t slot = 0; slot <= earlier_[v].size(); ++slot) {
            const std::size_t idx = entry_index(0, v, slot);
            if (parents_[idx].kind == EntryCase::Undefined) {
                continue;
            }
            if (result.v == kNoVertex || values_[idx] > result.weight) {
                result.v = v;
                result.y = slot == 0 ? v : earlier_[v][slot - 1];
                result.weight = values_[idx];
            }
        }
    }
    return result;
}

DpResult max_weight_path(const SpecialGraph& special) {
    DpTable table = DpTable::build(special);
    DpTable::Terminal best = table.best();
    DpResult result;
    result.stats = table.stats();
    result.weight = best.weight;
    for (VertexId v : table.reconstruct(0, best.v, best.y)) {
        if (v != table.v0()) {
            result.path.push_back(v);
        }
    }
    return result;
}

} // namespace ipath
