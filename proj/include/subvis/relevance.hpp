#pragma once

#include "subvis/corpus.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace subvis {

/// Which subfields count as relevant, and the window used for impact factors.
struct RelevanceConfig {
    int min_papers = 50;          ///< papers needed in the relevance window
    int window_years = 2;         ///< relevance window: the years ending at y
    int impact_window_years = 2;  ///< IF window: the years before y

    /// Throws InvalidConfig.
    void validate() const;

    /// {y - window_years + 1, ..., y}
    YearRange relevance_window(int year) const;
};

/// Papers per subfield of `journal` published in the relevance window ending
/// at `year`. Every subfield with at least one paper appears.
std::map<SubfieldKey, std::int64_t> subfield_window_counts(const Corpus& corpus,
                                                           const std::string& journal, int year,
                                                           const RelevanceConfig& cfg);

/// Subfields of `journal` with at least cfg.min_papers papers in the
/// relevance window ending at `year`, ascending.
std::vector<SubfieldKey> relevant_subfields(const Corpus& corpus, const std::string& journal,
                                            int year, const RelevanceConfig& cfg);

} // namespace subvis
