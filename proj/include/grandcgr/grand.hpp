#ifndef GRANDCGR_GRAND_HPP
#define GRANDCGR_GRAND_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "grandcgr/cluster.hpp"
#include "grandcgr/sequence.hpp"

namespace grandcgr {

using ClusterPair = std::pair<int, int>; // always (min, max)

inline ClusterPair make_cluster_pair(int a, int b) {
    return a < b ? ClusterPair{a, b} : ClusterPair{b, a};
}

struct GraphEdge {
    std::vector<InteractionRecord> underlying;
    // Kept separately so graphs imported from edge-list TSV (which carries
    // only counts) still report totals; equals underlying.size() for graphs
    // built from interaction records.
    std::uint64_t n_underlying = 0;
};

struct InteractionGraph {
    std::set<int> nodes;
    std::map<ClusterPair, GraphEdge> edges;
    std::uint64_t dropped_self_edges = 0;
    std::vector<InteractionRecord> skipped_unmapped; // gene id not in any cluster
};

// Disjoint retained cluster pairs plus the clusters left with no edge.
struct Matching {
    std::set<ClusterPair> retained_edges;
    std::set<int> freed_clusters;
};

// Parallel interactions between the same cluster pair collapse onto one
// edge; intra-cluster interactions are dropped (counted); interactions
// naming an unclustered gene are skipped (collected).
InteractionGraph build_graph(const std::vector<InteractionRecord>& interactions,
                             const std::vector<Cluster>& clusters);

struct ReduceOptions {
    // Degree-one nodes are picked seeded-random by default; deterministic
    // switches to ascending node-id order.
    bool deterministic = false;
};

// Iteratively prunes the graph until every remaining node has exactly one
// neighbour: degree-one nodes claim their sole neighbour first; when none
// remain, the edge with the minimum endpoint-degree sum is retained and
// the endpoints' other edges deleted.
Matching grand_reduce(const InteractionGraph& graph, std::uint64_t seed,
                      const ReduceOptions& options = {});

// Randomized greedy maximal matching: edges in a seeded uniform
// permutation, retained iff neither endpoint is already matched.
Matching naive_reduce(const InteractionGraph& graph, std::uint64_t seed);

struct RetentionReport {
    std::size_t grand_pairs = 0;
    std::size_t naive_runs = 0;
    double naive_mean = 0.0;
    double naive_stddev = 0.0;
    std::size_t naive_min = 0;
    std::size_t naive_max = 0;
    double gain_over_mean_pct = 0.0;
    double gain_over_max_pct = 0.0;
};

RetentionReport retention_report(const InteractionGraph& graph,
                                 const Matching& grand_result,
                                 const std::vector<std::uint64_t>& naive_seeds,
                                 int threads = 1);

// Edge-list TSV: cluster_a, cluster_b, n_underlying.
void write_graph_tsv(const InteractionGraph& graph, std::ostream& out);
InteractionGraph read_graph_tsv(std::istream& in,
                                const std::string& source = "<graph>");

void write_matching_tsv(const Matching& matching, std::ostream& out);
Matching read_matching_tsv(std::istream& in,
                           const std::string& source = "<matching>");

} // namespace grandcgr

#endif
