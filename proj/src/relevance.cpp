#include "subvis/relevance.hpp"

#include "subvis/errors.hpp"

namespace subvis {

void RelevanceConfig::validate() const
{
    if (min_papers < 1) {
        throw InvalidConfig("min_papers must be at least 1");
    }
    if (window_years < 1 || impact_window_years < 1) {
        throw InvalidConfig("windows must span at least one year");
    }
}

YearRange RelevanceConfig::relevance_window(int year) const
{
    return YearRange::trailing(year, window_years);
}

std::map<SubfieldKey, std::int64_t> subfield_window_counts(const Corpus& corpus,
                                                           const std::string& journal, int year,
                                                           const RelevanceConfig& cfg)
{
    cfg.validate();
    auto const window = cfg.relevance_window(year);
    std::map<SubfieldKey, std::int64_t> counts;
    for (int y = window.first(); y <= window.last(); ++y) {
        for (auto i : corpus.papers_in(journal, y)) {
            for (auto const& key : corpus.subfields(i)) {
                ++counts[key];
            }
        }
    }
    return counts;
}

std::vector<SubfieldKey> relevant_subfields(const Corpus& corpus, const std::string& journal,
                                            int year, const RelevanceConfig& cfg)
{
    std::vector<SubfieldKey> out;
    for (auto const& [key, n] : subfield_window_counts(corpus, journal, year, cfg)) {
        if (n >= cfg.min_papers) {
            out.push_back(key);
        }
    }
    return out;
}

} // namespace subvis
