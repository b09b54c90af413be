#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cspec/errors.hpp"

namespace cspec {

using Arc = std::pair<int, int>;

/// Sorted, duplicate-free list of vertex indices of some parent digraph.
struct VertexSubset {
    std::vector<int> members;

    VertexSubset() = default;
    explicit VertexSubset(std::vector<int> m) : members(std::move(m)) {
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
    }

    size_t size() const { return members.size(); }
    bool operator==(const VertexSubset& o) const { return members == o.members; }
    bool operator<(const VertexSubset& o) const { return members < o.members; }
};

/// Simple directed graph on vertices 0..n-1: no self-loops, no duplicate
/// arcs. Antiparallel pairs (u,v),(v,u) are allowed. Immutable after
/// construction; all operations on it are pure.
class Digraph {
public:
    Digraph() = default;

    /// Builds from an arc list; duplicates collapse, self-loops and
    /// out-of-range endpoints are input errors.
    static Digraph from_arc_list(int n, std::vector<Arc> arcs) {
        if (n < 0) throw input_error("Digraph: negative vertex count");
        for (const auto& [u, v] : arcs) {
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw input_error("Digraph: arc (" + std::to_string(u) + "," + std::to_string(v) + ") out of range for n=" + std::to_string(n));
            if (u == v) throw input_error("Digraph: self-loop at vertex " + std::to_string(u));
        }
        std::sort(arcs.begin(), arcs.end());
        arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
        Digraph d;
        d.n_ = n;
        d.arcs_ = std::move(arcs);
        d.out_.assign(static_cast<size_t>(n), {});
        d.in_.assign(static_cast<size_t>(n), {});
        for (const auto& [u, v] : d.arcs_) {
            d.out_[static_cast<size_t>(u)].push_back(v);
            d.in_[static_cast<size_t>(v)].push_back(u);
        }
        return d;
    }

    int vertex_count() const { return n_; }
    int arc_count() const { return static_cast<int>(arcs_.size()); }
    const std::vector<Arc>& arcs() const { return arcs_; }
    const std::vector<int>& out_neighbors(int v) const { return out_[static_cast<size_t>(v)]; }
    const std::vector<int>& in_neighbors(int v) const { return in_[static_cast<size_t>(v)]; }
    int out_degree(int v) const { return static_cast<int>(out_[static_cast<size_t>(v)].size()); }
    int in_degree(int v) const { return static_cast<int>(in_[static_cast<size_t>(v)].size()); }

    bool has_arc(int u, int v) const {
        return std::binary_search(arcs_.begin(), arcs_.end(), Arc{u, v});
    }

    bool operator==(const Digraph& o) const { return n_ == o.n_ && arcs_ == o.arcs_; }

    /// Image of this digraph under the vertex bijection perm (old -> new).
    Digraph relabeled(const std::vector<int>& perm) const {
        if (static_cast<int>(perm.size()) != n_) throw input_error("relabeled: permutation size mismatch");
        std::vector<Arc> arcs;
        arcs.reserve(arcs_.size());
        for (const auto& [u, v] : arcs_) arcs.emplace_back(perm[static_cast<size_t>(u)], perm[static_cast<size_t>(v)]);
        return from_arc_list(n_, std::move(arcs));
    }

private:
    int n_ = 0;
    std::vector<Arc> arcs_;
    std::vector<std::vector<int>> out_;
    std::vector<std::vector<int>> in_;
};

/// Subdigraph induced by S, relabeled to 0..|S|-1 preserving the sort order
/// of S; keeps exactly the arcs with both ends in S.
inline Digraph induced_subdigraph(const Digraph& d, const VertexSubset& s) {
    if (s.members.empty()) throw input_error("induced_subdigraph: empty subset");
    std::vector<int> pos(static_cast<size_t>(d.vertex_count()), -1);
    for (size_t i = 0; i < s.members.size(); ++i) {
        int v = s.members[i];
        if (v < 0 || v >= d.vertex_count()) throw input_error("induced_subdigraph: vertex out of range");
        pos[static_cast<size_t>(v)] = static_cast<int>(i);
    }
    std::vector<Arc> arcs;
    for (int v : s.members)
        for (int w : d.out_neighbors(v))
            if (pos[static_cast<size_t>(w)] >= 0) arcs.emplace_back(pos[static_cast<size_t>(v)], pos[static_cast<size_t>(w)]);
    return Digraph::from_arc_list(static_cast<int>(s.members.size()), std::move(arcs));
}

/// Partition into strongly connected components. Blocks are internally
/// sorted and reported in ascending order of their smallest member.
inline std::vector<std::vector<int>> strongly_connected_components(const Digraph& d) {
    const int n = d.vertex_count();
    std::vector<int> index(static_cast<size_t>(n), -1), low(static_cast<size_t>(n), 0);
    std::vector<bool> on_stack(static_cast<size_t>(n), false);
    std::vector<int> stack;
    std::vector<std::vector<int>> blocks;
    int next_index = 0;

    // iterative Tarjan
    struct Frame {
        int v;
        size_t child;
    };
    for (int root = 0; root < n; ++root) {
        if (index[static_cast<size_t>(root)] != -1) continue;
        std::vector<Frame> frames{{root, 0}};
        index[static_cast<size_t>(root)] = low[static_cast<size_t>(root)] = next_index++;
        stack.push_back(root);
        on_stack[static_cast<size_t>(root)] = true;
        while (!frames.empty()) {
            Frame& f = frames.back();
            const auto& succ = d.out_neighbors(f.v);
            if (f.child < succ.size()) {
                int w = succ[f.child++];
                if (index[static_cast<size_t>(w)] == -1) {
                    index[static_cast<size_t>(w)] = low[static_cast<size_t>(w)] = next_index++;
                    stack.push_back(w);
                    on_stack[static_cast<size_t>(w)] = true;
                    frames.push_back({w, 0});
                } else if (on_stack[static_cast<size_t>(w)]) {
                    low[static_cast<size_t>(f.v)] = std::min(low[static_cast<size_t>(f.v)], index[static_cast<size_t>(w)]);
                }
            } else {
                if (low[static_cast<size_t>(f.v)] == index[static_cast<size_t>(f.v)]) {
                    std::vector<int> block;
                    while (true) {
                        int w = stack.back();
                        stack.pop_back();
                        on_stack[static_cast<size_t>(w)] = false;
                        block.push_back(w);
                        if (w == f.v) break;
                    }
                    std::sort(block.begin(), block.end());
                    blocks.push_back(std::move(block));
                }
                int v = f.v;
                frames.pop_back();
                if (!frames.empty()) low[static_cast<size_t>(frames.back().v)] = std::min(low[static_cast<size_t>(frames.back().v)], low[static_cast<size_t>(v)]);
            }
        }
    }
    std::sort(blocks.begin(), blocks.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return blocks;
}

inline bool is_strongly_connected(const Digraph& d) {
    if (d.vertex_count() == 0) return false;
    return strongly_connected_components(d).size() == 1;
}

/// True iff there is no directed cycle; with self-loops excluded this is
/// exactly "every strongly connected component is a single vertex".
inline bool is_acyclic(const Digraph& d) {
    for (const auto& block : strongly_connected_components(d))
        if (block.size() >= 2) return false;
    return true;
}

/// A strongly connected digraph whose every vertex has in- and out-degree 1
/// is a directed cycle; single vertices count separately.
inline bool is_cycle_digraph(const Digraph& d) {
    if (d.vertex_count() < 2) return false;
    for (int v = 0; v < d.vertex_count(); ++v)
        if (d.out_degree(v) != 1 || d.in_degree(v) != 1) return false;
    return is_strongly_connected(d);
}

namespace detail {

/// Strong connectivity of the subdigraph induced by `mask` (subset of a
/// <=64-vertex block with bitmask adjacency): forward and backward closures
/// from the lowest member must both cover the mask.
inline bool mask_strongly_connected(uint64_t mask, const std::vector<uint64_t>& out_mask, const std::vector<uint64_t>& in_mask) {
    if (mask == 0) return false;
    int start = std::countr_zero(mask);
    uint64_t reach = 1ull << start;
    while (true) {
        uint64_t frontier = reach;
        uint64_t next = reach;
        while (frontier) {
            int v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            next |= out_mask[static_cast<size_t>(v)] & mask;
        }
        if (next == reach) break;
        reach = next;
    }
    if (reach != mask) return false;
    uint64_t coreach = 1ull << start;
    while (true) {
        uint64_t frontier = coreach;
        uint64_t next = coreach;
        while (frontier) {
            int v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            next |= in_mask[static_cast<size_t>(v)] & mask;
        }
        if (next == coreach) break;
        coreach = next;
    }
    return coreach == mask;
}

/// Visits every subset of `block` (vertex labels of d) of size >= 2 whose
/// induced subdigraph is strongly connected. Returns false if the visitor
/// aborted the walk. Exhaustive bitmask scan, |block| <= 25 or so.
inline bool scan_sc_subsets_bitmask(const Digraph& d, const std::vector<int>& block, const std::function<bool(const std::vector<int>&)>& visit) {
    const int k = static_cast<int>(block.size());
    std::vector<uint64_t> out_mask(static_cast<size_t>(k), 0), in_mask(static_cast<size_t>(k), 0);
    std::vector<int> pos(static_cast<size_t>(d.vertex_count()), -1);
    for (int i = 0; i < k; ++i) pos[static_cast<size_t>(block[static_cast<size_t>(i)])] = i;
    for (int i = 0; i < k; ++i)
        for (int w : d.out_neighbors(block[static_cast<size_t>(i)])) {
            int j = pos[static_cast<size_t>(w)];
            if (j >= 0) {
                out_mask[static_cast<size_t>(i)] |= 1ull << j;
                in_mask[static_cast<size_t>(j)] |= 1ull << i;
            }
        }
    std::vector<int> scratch;
    for (uint64_t mask = 1; mask < (1ull << k); ++mask) {
        if (std::popcount(mask) < 2) continue;
        if (!mask_strongly_connected(mask, out_mask, in_mask)) continue;
        scratch.clear();
        uint64_t m = mask;
        while (m) {
            scratch.push_back(block[static_cast<size_t>(std::countr_zero(m))]);
            m &= m - 1;
        }
        if (!visit(scratch)) return false;
    }
    return true;
}

/// Same visitation contract as scan_sc_subsets_bitmask but via connected-
/// subgraph growing: enumerate weakly connected subsets rooted at each
/// minimal vertex, filter by strong connectivity. No size limit; intended
/// for sparse digraphs where connected subsets stay polynomial.
inline bool scan_sc_subsets_growing(const Digraph& d, const std::vector<int>& block, const std::function<bool(const std::vector<int>&)>& visit) {
    const int k = static_cast<int>(block.size());
    std::vector<int> pos(static_cast<size_t>(d.vertex_count()), -1);
    for (int i = 0; i < k; ++i) pos[static_cast<size_t>(block[static_cast<size_t>(i)])] = i;
    std::vector<std::vector<int>> und(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) {
        for (int w : d.out_neighbors(block[static_cast<size_t>(i)])) {
            int j = pos[static_cast<size_t>(w)];
            if (j >= 0) {
                und[static_cast<size_t>(i)].push_back(j);
                und[static_cast<size_t>(j)].push_back(i);
            }
        }
    }
    for (auto& a : und) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
    }

    std::vector<int> s_local;
    std::vector<char> in_s(static_cast<size_t>(k), 0), banned(static_cast<size_t>(k), 0), queued(static_cast<size_t>(k), 0);

    auto emit = [&]() -> bool {
        if (s_local.size() < 2) return true;
        std::vector<int> subset;
        subset.reserve(s_local.size());
        for (int i : s_local) subset.push_back(block[static_cast<size_t>(i)]);
        std::sort(subset.begin(), subset.end());
        VertexSubset vs;
        vs.members = subset;
        if (!is_strongly_connected(induced_subdigraph(d, vs))) return true;
        return visit(subset);
    };

    // binary include/ban recursion over the frontier queue
    std::function<bool(std::vector<int>)> rec = [&](std::vector<int> queue) -> bool {
        if (queue.empty()) return emit();
        int u = queue.back();
        queue.pop_back();
        queued[static_cast<size_t>(u)] = 0;
        // branch: ban u
        banned[static_cast<size_t>(u)] = 1;
        if (!rec(queue)) return false;
        banned[static_cast<size_t>(u)] = 0;
        // branch: include u
        s_local.push_back(u);
        in_s[static_cast<size_t>(u)] = 1;
        std::vector<int> added;
        for (int w : und[static_cast<size_t>(u)]) {
            if (w > s_local.front() && !in_s[static_cast<size_t>(w)] && !banned[static_cast<size_t>(w)] && !queued[static_cast<size_t>(w)]) {
                queue.push_back(w);
                queued[static_cast<size_t>(w)] = 1;
                added.push_back(w);
            }
        }
        bool ok = rec(queue);
        for (int w : added) queued[static_cast<size_t>(w)] = 0;
        in_s[static_cast<size_t>(u)] = 0;
        s_local.pop_back();
        queued[static_cast<size_t>(u)] = 1;
        return ok;
    };

    for (int root = 0; root < k; ++root) {
        s_local.assign(1, root);
        in_s.assign(static_cast<size_t>(k), 0);
        banned.assign(static_cast<size_t>(k), 0);
        queued.assign(static_cast<size_t>(k), 0);
        in_s[static_cast<size_t>(root)] = 1;
        std::vector<int> queue;
        for (int w : und[static_cast<size_t>(root)]) {
            if (w > root && !queued[static_cast<size_t>(w)]) {
                queue.push_back(w);
                queued[static_cast<size_t>(w)] = 1;
            }
        }
        if (!rec(std::move(queue))) return false;
        s_local.clear();
    }
    return true;
}

/// Per-SCC dispatch: singletons first, then size->=2 subsets inside each
/// component (a strongly connected subset never crosses components).
/// Visitation order is not specified; use the sorting wrapper for the
/// deterministic public order.
inline bool for_each_induced_sc_subset(const Digraph& d, const std::function<bool(const std::vector<int>&)>& visit, int bitmask_limit = 20) {
    std::vector<int> single(1);
    for (int v = 0; v < d.vertex_count(); ++v) {
        single[0] = v;
        if (!visit(single)) return false;
    }
    for (const auto& block : strongly_connected_components(d)) {
        if (block.size() < 2) continue;
        bool ok = static_cast<int>(block.size()) <= bitmask_limit ? scan_sc_subsets_bitmask(d, block, visit)
                                                                  : scan_sc_subsets_growing(d, block, visit);
        if (!ok) return false;
    }
    return true;
}

} // namespace detail

/// All nonempty vertex subsets inducing a strongly connected subdigraph,
/// ordered by size then lexicographically. Singletons always qualify.
inline std::vector<VertexSubset> enumerate_induced_sc_subsets(const Digraph& d) {
    std::vector<VertexSubset> out;
    detail::for_each_induced_sc_subset(d, [&](const std::vector<int>& s) {
        VertexSubset vs;
        vs.members = s;
        out.push_back(std::move(vs));
        return true;
    });
    std::sort(out.begin(), out.end(), [](const VertexSubset& a, const VertexSubset& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.members < b.members;
    });
    return out;
}

/// Exact isomorphism by backtracking with degree pruning; intended for
/// n <= 16 (larger inputs raise capability_error).
inline bool are_isomorphic(const Digraph& a, const Digraph& b) {
    if (a.vertex_count() != b.vertex_count()) return false;
    if (a.arc_count() != b.arc_count()) return false;
    const int n = a.vertex_count();
    if (n > 16) throw capability_error("are_isomorphic: limited to 16 vertices; use family-level criteria instead");
    if (n == 0) return true;

    auto degree_profile = [](const Digraph& g) {
        std::vector<std::pair<int, int>> p(static_cast<size_t>(g.vertex_count()));
        for (int v = 0; v < g.vertex_count(); ++v) p[static_cast<size_t>(v)] = {g.out_degree(v), g.in_degree(v)};
        auto sorted = p;
        std::sort(sorted.begin(), sorted.end());
        return std::pair{p, sorted};
    };
    auto [deg_a, sorted_a] = degree_profile(a);
    auto [deg_b, sorted_b] = degree_profile(b);
    if (sorted_a != sorted_b) return false;

    // map vertices of a in an order that keeps the partial map connected when possible
    std::vector<int> order;
    {
        std::vector<char> seen(static_cast<size_t>(n), 0);
        for (int start = 0; start < n; ++start) {
            if (seen[static_cast<size_t>(start)]) continue;
            std::vector<int> bfs{start};
            seen[static_cast<size_t>(start)] = 1;
            for (size_t i = 0; i < bfs.size(); ++i) {
                int v = bfs[i];
                order.push_back(v);
                for (int w : a.out_neighbors(v))
                    if (!seen[static_cast<size_t>(w)]) {
                        seen[static_cast<size_t>(w)] = 1;
                        bfs.push_back(w);
                    }
                for (int w : a.in_neighbors(v))
                    if (!seen[static_cast<size_t>(w)]) {
                        seen[static_cast<size_t>(w)] = 1;
                        bfs.push_back(w);
                    }
            }
        }
    }

    std::vector<int> map_ab(static_cast<size_t>(n), -1), used_b(static_cast<size_t>(n), 0);
    std::function<bool(size_t)> extend = [&](size_t idx) -> bool {
        if (idx == order.size()) return true;
        int v = order[idx];
        for (int w = 0; w < n; ++w) {
            if (used_b[static_cast<size_t>(w)]) continue;
            if (deg_a[static_cast<size_t>(v)] != deg_b[static_cast<size_t>(w)]) continue;
            bool consistent = true;
            for (size_t j = 0; j < idx && consistent; ++j) {
                int u = order[j];
                int fu = map_ab[static_cast<size_t>(u)];
                if (a.has_arc(u, v) != b.has_arc(fu, w)) consistent = false;
                if (a.has_arc(v, u) != b.has_arc(w, fu)) consistent = false;
            }
            if (!consistent) continue;
            map_ab[static_cast<size_t>(v)] = w;
            used_b[static_cast<size_t>(w)] = 1;
            if (extend(idx + 1)) return true;
            map_ab[static_cast<size_t>(v)] = -1;
            used_b[static_cast<size_t>(w)] = 0;
        }
        return false;
    };
    return extend(0);
}

/// Isomorphism witness: the vertex bijection a -> b, if one exists.
inline std::optional<std::vector<int>> isomorphism_map(const Digraph& a, const Digraph& b) {
    // Same search as are_isomorphic but keeps the successful assignment.
    if (a.vertex_count() != b.vertex_count() || a.arc_count() != b.arc_count()) return std::nullopt;
    const int n = a.vertex_count();
    if (n > 16) throw capability_error("isomorphism_map: limited to 16 vertices");
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    // delegate: try identity fast path, then full search
    if (a == b) return perm;
    if (!are_isomorphic(a, b)) return std::nullopt;
    // re-run recording the map
    std::vector<int> map_ab(static_cast<size_t>(n), -1), used_b(static_cast<size_t>(n), 0);
    std::function<bool(int)> extend = [&](int v) -> bool {
        if (v == n) return true;
        for (int w = 0; w < n; ++w) {
            if (used_b[static_cast<size_t>(w)]) continue;
            if (a.out_degree(v) != b.out_degree(w) || a.in_degree(v) != b.in_degree(w)) continue;
            bool consistent = true;
            for (int u = 0; u < v && consistent; ++u) {
                if (a.has_arc(u, v) != b.has_arc(map_ab[static_cast<size_t>(u)], w)) consistent = false;
                if (a.has_arc(v, u) != b.has_arc(w, map_ab[static_cast<size_t>(u)])) consistent = false;
            }
            if (!consistent) continue;
            map_ab[static_cast<size_t>(v)] = w;
            used_b[static_cast<size_t>(w)] = 1;
            if (extend(v + 1)) return true;
            map_ab[static_cast<size_t>(v)] = -1;
            used_b[static_cast<size_t>(w)] = 0;
        }
        return false;
    };
    if (!extend(0)) return std::nullopt;
    return map_ab;
}

} // namespace cspec
