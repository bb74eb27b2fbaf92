#pragma once

#include "subvis/corpus.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace subvis {

// =================================================================================================
//      Citation distribution
// =================================================================================================

/**
 * Histogram of per-paper citation counts for a nonempty group.
 *
 * Stored densely: histogram()[c] is the number of papers with exactly c
 * citations, for c = 0 .. max_citations().
 */
class CitationDistribution {
public:
    /// Throws EmptyGroup when the counts sum to zero papers.
    explicit CitationDistribution(std::vector<std::int64_t> histogram);

    /// Builds the histogram from one count per paper. Throws EmptyGroup.
    static CitationDistribution from_counts(std::span<const std::int64_t> counts);

    std::span<const std::int64_t> histogram() const noexcept { return histogram_; }
    std::int64_t count_at(std::int64_t c) const noexcept;
    std::int64_t max_citations() const noexcept
    {
        return static_cast<std::int64_t>(histogram_.size()) - 1;
    }

    std::int64_t n_papers() const noexcept { return n_papers_; }
    std::int64_t total_citations() const noexcept { return total_citations_; }
    double mean_citations() const noexcept;

    /// Fraction of uncited papers.
    double f0() const noexcept { return p(0); }

    /// Fraction of papers with exactly c citations.
    double p(std::int64_t c) const noexcept;

    /// Fraction of papers with more than c citations.
    double survival(std::int64_t c) const noexcept;

    /// Number of papers with more than c citations.
    std::int64_t count_above(std::int64_t c) const noexcept;

    friend bool operator==(const CitationDistribution&, const CitationDistribution&) = default;

private:
    std::vector<std::int64_t> histogram_;
    std::vector<std::int64_t> above_;
    std::int64_t n_papers_ = 0;
    std::int64_t total_citations_ = 0;
};

/// Per paper of `group` (same order): number of distinct citing papers whose
/// publication year lies in `citing_years`.
std::vector<std::int64_t> citation_counts(const Corpus& corpus, const PaperSet& group,
                                          const YearRange& citing_years);

/// Throws EmptyGroup for an empty group.
CitationDistribution citation_distribution(const Corpus& corpus, const PaperSet& group,
                                           const YearRange& citing_years);

// =================================================================================================
//      Impact factor
// =================================================================================================

struct ImpactFactorPoint {
    int year = 0;
    std::int64_t n_papers_window = 0;
    std::int64_t n_citations = 0;
    double value = 0.0;
};

/// Publication years {year - window_years, ..., year - 1}.
YearRange impact_window(int year, int window_years = 2);

/// Papers matching `filter` published in impact_window(year, window_years).
PaperSet impact_window_papers(const Corpus& corpus, const GroupFilter& filter, int year,
                              int window_years = 2);

/**
 * Citations received during `year` by the filter's papers from the preceding
 * `window_years` years, divided by the number of those papers. Citing papers
 * may come from any journal. Throws UndefinedIF when the window holds no papers.
 */
ImpactFactorPoint impact_factor(const Corpus& corpus, const GroupFilter& filter, int year,
                                int window_years = 2);

// =================================================================================================
//      Dispersion
// =================================================================================================

struct Dispersion {
    double mean = 0.0;
    double std = 0.0;  ///< population standard deviation (divisor n)
    double cv = 0.0;
};

/// Mean and population standard deviation; cv left at 0. Throws EmptyList.
Dispersion mean_std(std::span<const double> values);

/// Throws EmptyList, or UndefinedCV when the mean is zero.
Dispersion dispersion(std::span<const double> values);

} // namespace subvis
