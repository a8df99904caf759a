#ifndef GRANDCGR_CODON_HPP
#define GRANDCGR_CODON_HPP

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace grandcgr {

// Standard genetic code: codon -> amino acid ('*' for stops) and the
// inverse synonym sets. Synonym sets partition the 64 codons.
class CodonTable {
public:
    static const CodonTable& standard();

    char amino_acid(std::string_view codon) const;

    // All codons translating to the same amino acid as `codon`,
    // in lexicographic order; includes `codon` itself.
    const std::vector<std::string>& synonyms(std::string_view codon) const;

    const std::vector<std::string>& synonyms_of(char amino_acid) const;

    // The 64 codons in lexicographic order.
    static const std::array<std::string, 64>& all_codons();

private:
    CodonTable();

    std::array<char, 64> codon_to_aa_{};
    std::vector<std::vector<std::string>> synonym_sets_;
    std::array<int, 64> codon_to_set_{};
    std::array<int, 128> aa_to_set_{};
};

struct Translation {
    std::string protein;
    bool internal_stop = false; // real annotations contain them; warn, not fail
};

// Length must be divisible by 3 and ACGT-only; a trailing stop codon is
// emitted as '*'.
Translation translate_cds(std::string_view cds,
                          const CodonTable& table = CodonTable::standard());

} // namespace grandcgr

#endif
