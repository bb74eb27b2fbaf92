#pragma once

#include "subvis/corpus.hpp"
#include "subvis/diversity.hpp"
#include "subvis/metrics.hpp"
#include "subvis/relevance.hpp"
#include "subvis/success_index.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace subvis {

/// A subfield inside one journal.
struct GroupKey {
    std::string journal;
    SubfieldKey subfield;

    std::string to_string() const { return journal + ":" + subfield.str(); }

    friend auto operator<=>(const GroupKey&, const GroupKey&) = default;
};

/// Parses "JOURNAL:NN.NN".
GroupKey parse_group_key(std::string_view text);

/// Papers of a group in the impact window of `year`, the same set behind its
/// impact factor and its success-index comparisons.
PaperSet group_window_papers(const Corpus& corpus, const GroupKey& group, int year,
                             const RelevanceConfig& cfg);

/// Citation distribution of those papers, counting citations made in `year`.
/// Throws EmptyGroup when the window is empty.
CitationDistribution group_distribution(const Corpus& corpus, const GroupKey& group, int year,
                                        const RelevanceConfig& cfg);

// =================================================================================================
//      Impact factor series and dispersion
// =================================================================================================

/// year -> relevant subfield -> impact factor. Undefined impact factors are left out.
using IfSeries = std::map<int, std::map<SubfieldKey, ImpactFactorPoint>>;

IfSeries subfield_if_series(const Corpus& corpus, const std::string& journal,
                            const YearRange& years, const RelevanceConfig& cfg,
                            unsigned threads = 1);

struct DispersionRow {
    int year = 0;
    std::size_t n_subfields = 0;  ///< relevant subfields with a defined impact factor
    std::optional<double> mean;
    std::optional<double> std;  ///< needs two or more subfields
    std::optional<double> cv;   ///< needs two or more subfields and a positive mean
    std::optional<double> journal_if;
    std::int64_t n_subfield_papers = 0;  ///< window papers behind the subfield impact factors
    std::int64_t n_journal_papers = 0;   ///< window papers behind the journal impact factor
};

/// One row per year where the journal impact factor or any subfield impact
/// factor is defined.
std::vector<DispersionRow> subfield_if_dispersion(const Corpus& corpus, const std::string& journal,
                                                  const YearRange& years,
                                                  const RelevanceConfig& cfg,
                                                  unsigned threads = 1);

// =================================================================================================
//      Pairwise success matrices
// =================================================================================================

enum class PairScope {
    all,           ///< every pair of groups
    cross_journal  ///< only pairs whose groups come from different journals
};

struct MatrixCell {
    std::size_t row = 0;
    std::size_t col = 0;  ///< row < col
    OrientedSuccess value;  ///< first_over_second means the row group is more cited
};

struct MatrixSummary {
    std::size_t n_pairs = 0;
    double median = 0.5;
    double max = 0.5;
    std::size_t argmax_row = 0;
    std::size_t argmax_col = 0;
    Orientation argmax_orientation = Orientation::none;
};

/// Oriented-max success indexes between groups, one cell per unordered pair.
class PairwiseMatrix {
public:
    PairwiseMatrix(int year, std::vector<GroupKey> labels, std::vector<MatrixCell> cells);

    int year() const noexcept { return year_; }
    const std::vector<GroupKey>& labels() const noexcept { return labels_; }
    const std::vector<MatrixCell>& cells() const noexcept { return cells_; }
    const MatrixSummary& summary() const noexcept { return summary_; }

    /// Cell value seen from row i: symmetric in value, orientation flipped
    /// when i > j. Empty on the diagonal and for pairs outside the scope.
    std::optional<OrientedSuccess> at(std::size_t i, std::size_t j) const;

private:
    int year_;
    std::vector<GroupKey> labels_;
    std::vector<MatrixCell> cells_;
    MatrixSummary summary_;
};

/**
 * Exact success index for every pair of groups at `year`, keeping the larger
 * orientation. Each group must be relevant in its own journal. Throws
 * InsufficientGroups (fewer than two groups or no pair in scope),
 * NotRelevant, or EmptyGroup when a group's impact window is empty.
 */
PairwiseMatrix pairwise_matrix(const Corpus& corpus, std::span<const GroupKey> groups, int year,
                               const RelevanceConfig& cfg, PairScope scope = PairScope::all,
                               unsigned threads = 1);

/// Relevant subfields of the given journals at `year` whose impact window
/// holds papers, ordered by journal list then key.
std::vector<GroupKey> matrix_groups(const Corpus& corpus, std::span<const std::string> journals,
                                    int year, const RelevanceConfig& cfg);

// =================================================================================================
//      Journal comparison and diversity
// =================================================================================================

/// Exact success index between two journals' impact-window papers at `year`,
/// oriented. Throws EmptyWindow when either window is empty.
OrientedSuccess journal_vs_journal(const Corpus& corpus, const std::string& journal_a,
                                   const std::string& journal_b, int year,
                                   const RelevanceConfig& cfg = {});

struct DiversityRow {
    int year = 0;
    std::size_t n_subfields = 0;           ///< relevant subfields
    std::size_t n_observed_subfields = 0;  ///< subfields with any window paper
    double diversity = 1.0;
};

/// One row per year with at least one relevant subfield of nonzero weight.
std::vector<DiversityRow> diversity_series(const Corpus& corpus, const std::string& journal,
                                           const YearRange& years, WeightMode mode,
                                           const RelevanceConfig& cfg, unsigned threads = 1);

} // namespace subvis
