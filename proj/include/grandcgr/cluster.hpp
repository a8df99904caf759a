#ifndef GRANDCGR_CLUSTER_HPP
#define GRANDCGR_CLUSTER_HPP

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "grandcgr/sequence.hpp"

namespace grandcgr {

struct Cluster {
    int cluster_id = 0;
    std::vector<std::string> member_ids; // representative first for native clusters
    std::string representative_id;
};

// Fraction of identical aligned bases in an optimal global alignment
// with free end gaps, denominated by the shorter sequence's length.
double pairwise_identity(std::string_view a, std::string_view b);

// Number of matched bases in the optimal alignment (the numerator above).
std::size_t alignment_matches(std::string_view a, std::string_view b);

// Incremental greedy clustering: records sorted by descending length
// (ties by id ascending); each joins the first cluster whose
// representative aligns at >= threshold identity, else founds its own.
// 0.5 <= threshold <= 1.0.
std::vector<Cluster> greedy_cluster(const std::vector<SequenceRecord>& records,
                                    double threshold);

// Ingest an external tool's cluster file: ">Cluster N" headers, member
// lines "idx<TAB>LENnt, >ID... *|at +/-PCT%", '*' marks the representative.
std::vector<Cluster> parse_clstr(std::istream& in,
                                 const std::string& source = "<clstr>");

// Native TSV: cluster_id, member_id, is_representative.
void write_clusters_tsv(const std::vector<Cluster>& clusters, std::ostream& out);
std::vector<Cluster> read_clusters_tsv(std::istream& in,
                                       const std::string& source = "<clusters>");

// member gene id -> cluster_id
std::vector<std::pair<std::string, int>> cluster_membership(
    const std::vector<Cluster>& clusters);

} // namespace grandcgr

#endif
