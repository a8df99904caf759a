#ifndef GRANDCGR_AUGMENT_HPP
#define GRANDCGR_AUGMENT_HPP

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "grandcgr/codon.hpp"
#include "grandcgr/dataset.hpp"
#include "grandcgr/sequence.hpp"

namespace grandcgr {

struct SubstituteOptions {
    // The original codon stays inside the draw by default; excluding it is
    // an ablation switch.
    bool exclude_self = false;
};

// Each codon independently replaced by a uniform draw from its synonym
// set; the encoded protein is unchanged by construction.
std::string synonymous_substitute(std::string_view cds, const CodonTable& table,
                                  std::uint64_t seed,
                                  const SubstituteOptions& options = {});

struct AugmentedPair {
    std::string parent_pair_id;
    int replicate = 0;
    std::string cds_a;
    std::string cds_b;
    LabeledPair pair; // gene ids point at the synthetic records
};

struct AugmentResult {
    std::vector<AugmentedPair> augmented;
    std::vector<SequenceRecord> synthetic_records;
    std::vector<std::string> skipped_pair_ids; // genes failing substitution preconditions
};

// n_per_pair replicates per eligible pair; labels inherited, source marked
// augmented. Replicate r is a deterministic function of (parent, seed, r).
AugmentResult augment_pairs(const std::vector<LabeledPair>& pairs,
                            const std::map<std::string, const SequenceRecord*>& records,
                            int n_per_pair, std::uint64_t seed,
                            const SubstituteOptions& options = {});

} // namespace grandcgr

#endif
