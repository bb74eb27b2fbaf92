#include "subvis/pipeline.hpp"

#include "subvis/errors.hpp"
#include "subvis/parallel.hpp"

#include <algorithm>
#include <optional>

namespace subvis {

GroupKey parse_group_key(std::string_view text)
{
    auto const colon = text.rfind(':');
    if (colon == std::string_view::npos || colon == 0) {
        throw InvalidSelector("group '" + std::string(text) + "' must look like JOURNAL:NN.NN");
    }
    auto const key = text.substr(colon + 1);
    if (!SubfieldKey::is_valid(key)) {
        throw InvalidSelector("group '" + std::string(text) + "' has a malformed subfield key");
    }
    return {std::string(text.substr(0, colon)), SubfieldKey(key)};
}

PaperSet group_window_papers(const Corpus& corpus, const GroupKey& group, int year,
                             const RelevanceConfig& cfg)
{
    return impact_window_papers(corpus, GroupFilter{group.journal, group.subfield}, year,
                                cfg.impact_window_years);
}

CitationDistribution group_distribution(const Corpus& corpus, const GroupKey& group, int year,
                                        const RelevanceConfig& cfg)
{
    auto const papers = group_window_papers(corpus, group, year, cfg);
    if (papers.empty()) {
        throw EmptyGroup(group.to_string() + " has no papers in "
                         + impact_window(year, cfg.impact_window_years).to_string());
    }
    return citation_distribution(corpus, papers, YearRange(year, year));
}

// =================================================================================================
//      Impact factor series and dispersion
// =================================================================================================

namespace {

std::map<SubfieldKey, ImpactFactorPoint> if_row(const Corpus& corpus, const std::string& journal,
                                                int year, const RelevanceConfig& cfg)
{
    std::map<SubfieldKey, ImpactFactorPoint> row;
    for (auto const& key : relevant_subfields(corpus, journal, year, cfg)) {
        try {
            row.emplace(key, impact_factor(corpus, GroupFilter{journal, key}, year,
                                           cfg.impact_window_years));
        } catch (const UndefinedIF&) {
        }
    }
    return row;
}

} // namespace

IfSeries subfield_if_series(const Corpus& corpus, const std::string& journal,
                            const YearRange& years, const RelevanceConfig& cfg, unsigned threads)
{
    cfg.validate();
    auto const rows = parallel_map<std::map<SubfieldKey, ImpactFactorPoint>>(
        static_cast<std::size_t>(years.size()), threads, [&](std::size_t i) {
            return if_row(corpus, journal, years.first() + static_cast<int>(i), cfg);
        });
    IfSeries out;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        out.emplace(years.first() + static_cast<int>(i), rows[i]);
    }
    return out;
}

std::vector<DispersionRow> subfield_if_dispersion(const Corpus& corpus, const std::string& journal,
                                                  const YearRange& years,
                                                  const RelevanceConfig& cfg, unsigned threads)
{
    cfg.validate();
    auto const rows = parallel_map<std::optional<DispersionRow>>(
        static_cast<std::size_t>(years.size()), threads,
        [&](std::size_t i) -> std::optional<DispersionRow> {
            DispersionRow row;
            row.year = years.first() + static_cast<int>(i);

            auto const ifs = if_row(corpus, journal, row.year, cfg);
            std::vector<double> values;
            for (auto const& [key, point] : ifs) {
                values.push_back(point.value);
                row.n_subfield_papers += point.n_papers_window;
            }
            row.n_subfields = values.size();
            if (!values.empty()) {
                auto const d = mean_std(values);
                row.mean = d.mean;
                if (values.size() >= 2) {
                    row.std = d.std;
                    if (d.mean > 0.0) {
                        row.cv = d.std / d.mean;
                    }
                }
            }
            try {
                auto const point = impact_factor(corpus, GroupFilter{journal, std::nullopt},
                                                 row.year, cfg.impact_window_years);
                row.journal_if = point.value;
                row.n_journal_papers = point.n_papers_window;
            } catch (const UndefinedIF&) {
            }
            if (!row.mean && !row.journal_if) {
                return std::nullopt;
            }
            return row;
        });

    std::vector<DispersionRow> out;
    for (auto const& r : rows) {
        if (r) {
            out.push_back(*r);
        }
    }
    return out;
}

// =================================================================================================
//      Pairwise matrices
// =================================================================================================

PairwiseMatrix::PairwiseMatrix(int year, std::vector<GroupKey> labels,
                               std::vector<MatrixCell> cells)
    : year_(year)
    , labels_(std::move(labels))
    , cells_(std::move(cells))
{
    summary_.n_pairs = cells_.size();
    if (cells_.empty()) {
        return;
    }
    std::vector<double> values;
    values.reserve(cells_.size());
    std::size_t best = 0;
    for (std::size_t i = 0; i < cells_.size(); ++i) {
        values.push_back(cells_[i].value.result.s_tr);
        if (cells_[i].value.result.s_tr > cells_[best].value.result.s_tr) {
            best = i;
        }
    }
    std::sort(values.begin(), values.end());
    auto const n = values.size();
    summary_.median = n % 2 ? values[n / 2] : (values[n / 2 - 1] + values[n / 2]) / 2.0;
    summary_.max = cells_[best].value.result.s_tr;
    summary_.argmax_row = cells_[best].row;
    summary_.argmax_col = cells_[best].col;
    summary_.argmax_orientation = cells_[best].value.orientation;
}

std::optional<OrientedSuccess> PairwiseMatrix::at(std::size_t i, std::size_t j) const
{
    if (i == j) {
        return std::nullopt;
    }
    auto const lo = std::min(i, j);
    auto const hi = std::max(i, j);
    auto const it = std::lower_bound(cells_.begin(), cells_.end(), std::pair{lo, hi},
                                     [](const MatrixCell& c, const std::pair<std::size_t,
                                                                             std::size_t>& k) {
                                         return std::pair{c.row, c.col} < k;
                                     });
    if (it == cells_.end() || it->row != lo || it->col != hi) {
        return std::nullopt;
    }
    auto value = it->value;
    if (i > j && value.orientation != Orientation::none) {
        value.orientation = value.orientation == Orientation::first_over_second
                                ? Orientation::second_over_first
                                : Orientation::first_over_second;
    }
    return value;
}

PairwiseMatrix pairwise_matrix(const Corpus& corpus, std::span<const GroupKey> groups, int year,
                               const RelevanceConfig& cfg, PairScope scope, unsigned threads)
{
    cfg.validate();
    if (groups.size() < 2) {
        throw InsufficientGroups("a matrix needs at least two groups, got "
                                 + std::to_string(groups.size()));
    }

    std::map<std::string, std::vector<SubfieldKey>> relevant;
    for (auto const& g : groups) {
        auto it = relevant.find(g.journal);
        if (it == relevant.end()) {
            it = relevant.emplace(g.journal, relevant_subfields(corpus, g.journal, year, cfg)).first;
        }
        if (!std::binary_search(it->second.begin(), it->second.end(), g.subfield)) {
            throw NotRelevant(g.to_string() + " is not relevant in " + std::to_string(year));
        }
    }

    auto const dists = parallel_map<std::optional<CitationDistribution>>(
        groups.size(), threads,
        [&](std::size_t i) { return std::optional(group_distribution(corpus, groups[i], year, cfg)); });

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < groups.size(); ++i) {
        for (std::size_t j = i + 1; j < groups.size(); ++j) {
            if (scope == PairScope::cross_journal && groups[i].journal == groups[j].journal) {
                continue;
            }
            pairs.emplace_back(i, j);
        }
    }
    if (pairs.empty()) {
        throw InsufficientGroups("no pair of groups falls inside the requested scope");
    }

    auto cells = parallel_map<MatrixCell>(pairs.size(), threads, [&](std::size_t k) {
        auto const [i, j] = pairs[k];
        auto const ab = success_exact(*dists[i], *dists[j]);
        auto const ba = success_exact(*dists[j], *dists[i]);
        return MatrixCell{i, j, oriented_max(ab, ba)};
    });
    return PairwiseMatrix(year, std::vector<GroupKey>(groups.begin(), groups.end()),
                          std::move(cells));
}

std::vector<GroupKey> matrix_groups(const Corpus& corpus, std::span<const std::string> journals,
                                    int year, const RelevanceConfig& cfg)
{
    std::vector<GroupKey> out;
    for (auto const& journal : journals) {
        for (auto const& key : relevant_subfields(corpus, journal, year, cfg)) {
            GroupKey g{journal, key};
            if (!group_window_papers(corpus, g, year, cfg).empty()) {
                out.push_back(std::move(g));
            }
        }
    }
    return out;
}

// =================================================================================================
//      Journal comparison and diversity
// =================================================================================================

OrientedSuccess journal_vs_journal(const Corpus& corpus, const std::string& journal_a,
                                   const std::string& journal_b, int year,
                                   const RelevanceConfig& cfg)
{
    cfg.validate();
    auto distribution = [&](const std::string& journal) {
        auto const papers = impact_window_papers(corpus, GroupFilter{journal, std::nullopt}, year,
                                                 cfg.impact_window_years);
        if (papers.empty()) {
            throw EmptyWindow(journal + " has no papers in "
                              + impact_window(year, cfg.impact_window_years).to_string());
        }
        return citation_distribution(corpus, papers, YearRange(year, year));
    };
    auto const a = distribution(journal_a);
    auto const b = distribution(journal_b);
    return oriented_max(success_exact(a, b), success_exact(b, a));
}

std::vector<DiversityRow> diversity_series(const Corpus& corpus, const std::string& journal,
                                           const YearRange& years, WeightMode mode,
                                           const RelevanceConfig& cfg, unsigned threads)
{
    cfg.validate();
    auto const rows = parallel_map<std::optional<DiversityRow>>(
        static_cast<std::size_t>(years.size()), threads,
        [&](std::size_t i) -> std::optional<DiversityRow> {
            DiversityRow row;
            row.year = years.first() + static_cast<int>(i);
            row.n_observed_subfields = subfield_window_counts(corpus, journal, row.year, cfg).size();
            try {
                auto const w = subfield_weights(corpus, journal, row.year, mode, cfg);
                row.n_subfields = w.entries().size();
                row.diversity = true_diversity(w);
            } catch (const NoRelevantSubfields&) {
                return std::nullopt;
            } catch (const InvalidWeights&) {
                return std::nullopt;
            }
            return row;
        });

    std::vector<DiversityRow> out;
    for (auto const& r : rows) {
        if (r) {
            out.push_back(*r);
        }
    }
    return out;
}

} // namespace subvis
