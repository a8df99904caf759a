#ifndef GRANDCGR_DATASET_HPP
#define GRANDCGR_DATASET_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "grandcgr/cluster.hpp"
#include "grandcgr/grand.hpp"
#include "grandcgr/sequence.hpp"

namespace grandcgr {

enum class PairLabel : std::uint8_t { negative = 0, positive = 1 };
enum class PairSource { matched_edge, sampled_negative, augmented };

std::string to_string(PairLabel label);
std::string to_string(PairSource source);
PairLabel pair_label_from_string(std::string_view s);
PairSource pair_source_from_string(std::string_view s);

struct LabeledPair {
    std::string gene_a;
    std::string gene_b;
    PairLabel label = PairLabel::positive;
    PairSource source = PairSource::matched_edge;
    std::string parent; // parent pair id, augmented samples only

    std::string pair_id() const;
};

// One positive per retained edge, drawn uniformly (seeded) from the
// edge's underlying interactions.
std::vector<LabeledPair> realize_positives(const Matching& matching,
                                           const InteractionGraph& graph,
                                           std::uint64_t seed);

struct NegativeOptions {
    bool stratify = false;          // one host-role and one pathogen-role cluster
    bool pool_all_clusters = false; // widen pool beyond GRAND-freed clusters
    bool allow_cluster_reuse = false;
    std::size_t max_attempts_per_pair = 100;
};

// Pairs of distinct eligible clusters with no unfiltered interaction
// between any members; one gene sampled uniformly from each cluster.
std::vector<LabeledPair> generate_negatives(
    const Matching& matching, const std::vector<Cluster>& clusters,
    const std::vector<SequenceRecord>& records,
    const std::vector<InteractionRecord>& unfiltered_interactions,
    std::size_t count, std::uint64_t seed, const NegativeOptions& options = {});

struct SplitFractions {
    double train = 0.6;
    double validation = 0.2;
    double test = 0.2;
};

struct SplitManifest {
    std::uint64_t seed = 0;
    SplitFractions fractions;
    std::vector<std::string> train;
    std::vector<std::string> validation;
    std::vector<std::string> test;
    std::map<std::string, std::string> provenance;
};

// Seeded shuffle stratified by label; sizes by floor with the remainder
// assigned to train. Each split keeps the global positive:negative ratio
// within one sample per label.
SplitManifest split_dataset(const std::vector<LabeledPair>& pairs,
                            const SplitFractions& fractions, std::uint64_t seed);

// Pairs TSV: gene_a, gene_b, label, source, parent.
void write_pairs_tsv(const std::vector<LabeledPair>& pairs, std::ostream& out);
std::vector<LabeledPair> read_pairs_tsv(std::istream& in,
                                        const std::string& source = "<pairs>");

void write_splits_json(const SplitManifest& manifest, std::ostream& out);
SplitManifest read_splits_json(std::istream& in,
                               const std::string& source = "<splits>");

} // namespace grandcgr

#endif
