#ifndef MCB_GRAPH_HPP
#define MCB_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mcb/weight.hpp"

namespace mcb {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;

enum class EdgeKind : std::uint8_t { Original, Green };

struct EdgeRecord {
    VertexId u = -1;
    VertexId v = -1;
    Weight w = 0;
    EdgeKind kind = EdgeKind::Original;
};

inline std::uint64_t pair_key(VertexId u, VertexId v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
           static_cast<std::uint32_t>(v);
}

// Simple undirected graph with non-negative exact weights. Immutable after
// construction; adjacency is CSR and edge lookup by endpoint pair is a binary
// search over sorted pair keys, so concurrent reads are safe.
class WeightedGraph {
public:
    WeightedGraph() = default;

    // Validates simplicity (no self-loops, no parallel edges), vertex range and
    // non-negative weights; throws InvalidParam on violation.
    static WeightedGraph from_edges(int n, std::vector<EdgeRecord> edges, int scale_digits = 0);

    int num_vertices() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    const EdgeRecord& edge(EdgeId e) const { return edges_[e]; }
    const std::vector<EdgeRecord>& edges() const { return edges_; }

    std::span<const EdgeId> incident(VertexId v) const {
        return {adj_.data() + adj_start_[v], adj_.data() + adj_start_[v + 1]};
    }
    int degree(VertexId v) const { return adj_start_[v + 1] - adj_start_[v]; }
    VertexId other(EdgeId e, VertexId v) const {
        const EdgeRecord& r = edges_[e];
        return r.u == v ? r.v : r.u;
    }

    std::optional<EdgeId> find_edge(VertexId u, VertexId v) const;
    bool has_edge(VertexId u, VertexId v) const { return find_edge(u, v).has_value(); }

    // Number of fractional decimal digits all weights are scaled by.
    int scale_digits() const { return scale_digits_; }
    std::string format(Weight w) const { return format_weight(w, scale_digits_); }

private:
    int n_ = 0;
    int scale_digits_ = 0;
    std::vector<EdgeRecord> edges_;
    std::vector<std::int32_t> adj_start_;
    std::vector<EdgeId> adj_;
    std::vector<std::uint64_t> pair_keys_;  // sorted
    std::vector<EdgeId> pair_edge_;         // edge id per sorted key
};

}  // namespace mcb

#endif
