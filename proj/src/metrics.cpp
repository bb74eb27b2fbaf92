#include "subvis/metrics.hpp"

#include "subvis/errors.hpp"

#include <algorithm>
#include <cmath>

namespace subvis {

// =================================================================================================
//      CitationDistribution
// =================================================================================================

CitationDistribution::CitationDistribution(std::vector<std::int64_t> histogram)
    : histogram_(std::move(histogram))
{
    while (!histogram_.empty() && histogram_.back() == 0) {
        histogram_.pop_back();
    }
    for (std::size_t c = 0; c < histogram_.size(); ++c) {
        if (histogram_[c] < 0) {
            throw InvariantError("negative histogram bin");
        }
        n_papers_ += histogram_[c];
        total_citations_ += static_cast<std::int64_t>(c) * histogram_[c];
    }
    if (n_papers_ == 0) {
        throw EmptyGroup("citation distribution of an empty group");
    }
    above_.assign(histogram_.size(), 0);
    std::int64_t running = 0;
    for (std::size_t c = histogram_.size(); c-- > 0;) {
        above_[c] = running;
        running += histogram_[c];
    }
}

CitationDistribution CitationDistribution::from_counts(std::span<const std::int64_t> counts)
{
    if (counts.empty()) {
        throw EmptyGroup("citation distribution of an empty group");
    }
    auto const top = *std::max_element(counts.begin(), counts.end());
    std::vector<std::int64_t> hist(static_cast<std::size_t>(top) + 1, 0);
    for (auto c : counts) {
        if (c < 0) {
            throw InvariantError("negative citation count");
        }
        ++hist[static_cast<std::size_t>(c)];
    }
    return CitationDistribution(std::move(hist));
}

std::int64_t CitationDistribution::count_at(std::int64_t c) const noexcept
{
    if (c < 0 || c > max_citations()) {
        return 0;
    }
    return histogram_[static_cast<std::size_t>(c)];
}

std::int64_t CitationDistribution::count_above(std::int64_t c) const noexcept
{
    if (c < 0) {
        return n_papers_;
    }
    if (c > max_citations()) {
        return 0;
    }
    return above_[static_cast<std::size_t>(c)];
}

double CitationDistribution::mean_citations() const noexcept
{
    return static_cast<double>(total_citations_) / static_cast<double>(n_papers_);
}

double CitationDistribution::p(std::int64_t c) const noexcept
{
    return static_cast<double>(count_at(c)) / static_cast<double>(n_papers_);
}

double CitationDistribution::survival(std::int64_t c) const noexcept
{
    return static_cast<double>(count_above(c)) / static_cast<double>(n_papers_);
}

// =================================================================================================
//      Counting
// =================================================================================================

std::vector<std::int64_t> citation_counts(const Corpus& corpus, const PaperSet& group,
                                          const YearRange& citing_years)
{
    std::vector<std::int64_t> counts;
    counts.reserve(group.size());
    for (auto i : group) {
        std::int64_t c = 0;
        for (auto citer : corpus.citers(i)) {
            if (citing_years.contains(corpus.year_of(citer))) {
                ++c;
            }
        }
        counts.push_back(c);
    }
    return counts;
}

CitationDistribution citation_distribution(const Corpus& corpus, const PaperSet& group,
                                           const YearRange& citing_years)
{
    if (group.empty()) {
        throw EmptyGroup("no papers in group");
    }
    return CitationDistribution::from_counts(citation_counts(corpus, group, citing_years));
}

// =================================================================================================
//      Impact factor
// =================================================================================================

YearRange impact_window(int year, int window_years)
{
    if (window_years < 1) {
        throw InvalidConfig("impact factor window must span at least one year");
    }
    return YearRange(year - window_years, year - 1);
}

PaperSet impact_window_papers(const Corpus& corpus, const GroupFilter& filter, int year,
                              int window_years)
{
    return resolve_group(corpus, GroupSelector(filter, impact_window(year, window_years)));
}

ImpactFactorPoint impact_factor(const Corpus& corpus, const GroupFilter& filter, int year,
                                int window_years)
{
    auto const window = impact_window_papers(corpus, filter, year, window_years);
    ImpactFactorPoint point;
    point.year = year;
    point.n_papers_window = static_cast<std::int64_t>(window.size());
    if (window.empty()) {
        throw UndefinedIF("no papers for " + filter.to_string() + " in "
                          + impact_window(year, window_years).to_string());
    }
    for (auto i : window) {
        for (auto citer : corpus.citers(i)) {
            if (corpus.year_of(citer) == year) {
                ++point.n_citations;
            }
        }
    }
    point.value = static_cast<double>(point.n_citations)
                  / static_cast<double>(point.n_papers_window);
    return point;
}

// =================================================================================================
//      Dispersion
// =================================================================================================

Dispersion mean_std(std::span<const double> values)
{
    if (values.empty()) {
        throw EmptyList("dispersion of an empty list");
    }
    auto const n = static_cast<double>(values.size());
    double sum = 0.0;
    for (auto v : values) {
        sum += v;
    }
    Dispersion d;
    d.mean = sum / n;
    double sq = 0.0;
    for (auto v : values) {
        sq += (v - d.mean) * (v - d.mean);
    }
    d.std = std::sqrt(sq / n);
    return d;
}

Dispersion dispersion(std::span<const double> values)
{
    auto d = mean_std(values);
    if (d.mean == 0.0) {
        throw UndefinedCV("mean is zero");
    }
    d.cv = d.std / d.mean;
    return d;
}

} // namespace subvis
