#ifndef GRANDCGR_SEQUENCE_HPP
#define GRANDCGR_SEQUENCE_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace grandcgr {

enum class Role { host, pathogen, unspecified };
enum class Superkingdom { bacteria, eukaryota, viruses, archaea, unknown };

std::string to_string(Role role);
std::string to_string(Superkingdom sk);
Role role_from_string(std::string_view s);
Superkingdom superkingdom_from_string(std::string_view s);

// One gene's coding sequence plus whatever annotation travelled with it.
// cds is stored uppercase over the IUPAC nucleotide alphabet.
struct SequenceRecord {
    std::string id;
    std::string organism;
    Superkingdom superkingdom = Superkingdom::unknown;
    Role role = Role::unspecified;
    std::string cds;
};

struct InteractionRecord {
    std::string gene_a;
    std::string gene_b;
    std::string evidence;
};

// Header format: ">id [key=value]..." with optional organism=/role=/
// superkingdom= annotations. Duplicate ids, empty sequences and
// non-IUPAC characters are hard errors.
std::vector<SequenceRecord> parse_fasta(std::istream& in,
                                        const std::string& source = "<fasta>");

void write_fasta(const std::vector<SequenceRecord>& records, std::ostream& out);

// Tab-separated gene_a, gene_b[, evidence]; '#' comment lines ignored.
std::vector<InteractionRecord> parse_interactions(
    std::istream& in, const std::string& source = "<interactions>");

void write_interactions(const std::vector<InteractionRecord>& interactions,
                        std::ostream& out);

// Sidecar TSV: id, organism, role, superkingdom. Sidecar wins over any
// annotation parsed from FASTA headers.
void apply_metadata(std::vector<SequenceRecord>& records, std::istream& in,
                    const std::string& source = "<metadata>");

struct KmerCounts {
    std::map<std::string, std::uint64_t> counts;
    std::uint64_t skipped = 0; // windows containing a non-ACGT character
};

// Sliding-window counts; 1 <= k <= 12, seq length >= k.
KmerCounts kmer_counts(std::string_view seq, int k);

std::map<std::string, const SequenceRecord*> index_records(
    const std::vector<SequenceRecord>& records);

} // namespace grandcgr

#endif
