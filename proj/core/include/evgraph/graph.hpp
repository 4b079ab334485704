#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace evgraph {

using NodeId = std::int32_t;

/// Undirected graph stored as a compact adjacency array (CSR). Immutable
/// after construction; safe for concurrent readers. Node ids are dense
/// 0..N-1. Synthetic graphs produced by the rewiring step may contain
/// parallel edges (a neighbor repeated in the adjacency slice); degree is
/// the number of incident edge endpoints. Self-loops are never stored.
class Graph {
  public:
    Graph() = default;

    /// Builds from an edge list over dense ids in [0, node_count).
    /// Edges are taken as given (parallel edges kept, self-loops rejected).
    Graph(NodeId node_count, std::span<const std::pair<NodeId, NodeId>> edges);

    NodeId node_count() const { return static_cast<NodeId>(offsets_.size()) - 1; }
    std::int64_t edge_count() const { return static_cast<std::int64_t>(neighbors_.size()) / 2; }

    std::int32_t degree(NodeId v) const {
        return static_cast<std::int32_t>(offsets_[v + 1] - offsets_[v]);
    }
    std::span<const NodeId> neighbors(NodeId v) const {
        return {neighbors_.data() + offsets_[v],
                static_cast<std::size_t>(offsets_[v + 1] - offsets_[v])};
    }

    std::vector<std::int32_t> degree_sequence() const;

    /// Edge list with u <= v, parallel edges repeated.
    std::vector<std::pair<NodeId, NodeId>> edges() const;

    bool is_simple() const;

    /// Original ids from the input file, empty for synthetic graphs.
    const std::vector<std::int64_t>& original_ids() const { return original_ids_; }
    void set_original_ids(std::vector<std::int64_t> ids) { original_ids_ = std::move(ids); }

  private:
    std::vector<std::int64_t> offsets_{0};
    std::vector<NodeId> neighbors_;
    std::vector<std::int64_t> original_ids_;
};

struct LoadReport {
    std::int64_t lines_read = 0;
    std::int64_t edges_kept = 0;
    std::int64_t self_loops_dropped = 0;
    std::int64_t duplicates_dropped = 0;
};

/// Reads a whitespace-separated edge list ("u v" per line, '#' comments).
/// Node ids are compacted to 0..N-1 in order of first appearance; the
/// original ids are kept on the returned graph. Duplicate edges and
/// self-loops are dropped and counted in the report.
/// Throws std::runtime_error on unreadable files, malformed lines (with
/// the line number) and empty graphs.
Graph load_edge_list(const std::string& path, LoadReport* report = nullptr);

struct GraphStats {
    std::int64_t node_count = 0;
    std::int64_t edge_count = 0;
    double mean_degree = 0.0;
    std::int32_t max_degree = 0;
};

GraphStats graph_stats(const Graph& g);

/// Node ids of the largest connected component (parallel edges irrelevant).
/// Isolated nodes form singleton components.
std::vector<NodeId> largest_component(const Graph& g);

/// Writes "u v" lines, one per edge (u <= v), using dense ids.
void write_edge_list(const Graph& g, const std::string& path);

}  // namespace evgraph
