#include "subvis/diversity.hpp"

#include "subvis/errors.hpp"
#include "subvis/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace subvis {

WeightVector::WeightVector(std::map<SubfieldKey, double> entries)
    : entries_(std::move(entries))
{
    for (auto const& [key, w] : entries_) {
        if (!std::isfinite(w) || w < 0.0) {
            throw InvalidWeights("weight of " + key.str() + " is not a nonnegative number");
        }
        total_ += w;
    }
    if (!(total_ > 0.0)) {
        throw InvalidWeights("weights sum to zero");
    }
}

std::size_t WeightVector::nonzero_count() const noexcept
{
    return static_cast<std::size_t>(std::count_if(
        entries_.begin(), entries_.end(), [](auto const& kv) { return kv.second > 0.0; }));
}

double true_diversity(std::span<const double> weights)
{
    double total = 0.0;
    std::size_t nonzero = 0;
    for (auto w : weights) {
        if (!std::isfinite(w) || w < 0.0) {
            throw InvalidWeights("weights must be nonnegative numbers");
        }
        total += w;
        nonzero += w > 0.0;
    }
    if (!(total > 0.0)) {
        throw InvalidWeights("weights sum to zero");
    }

    double entropy = 0.0;
    for (auto w : weights) {
        if (w > 0.0) {
            auto const p = w / total;
            entropy -= p * std::log(p);
        }
    }
    // rounding can push exp(H) a hair outside its exact bounds
    return std::clamp(std::exp(entropy), 1.0, static_cast<double>(nonzero));
}

double true_diversity(const WeightVector& weights)
{
    std::vector<double> w;
    w.reserve(weights.entries().size());
    for (auto const& [key, value] : weights.entries()) {
        w.push_back(value);
    }
    return true_diversity(w);
}

WeightMode parse_weight_mode(std::string_view text)
{
    if (text == "papers") {
        return WeightMode::papers;
    }
    if (text == "citations") {
        return WeightMode::citations;
    }
    throw InvalidConfig("mode must be papers or citations, got '" + std::string(text) + "'");
}

std::string_view to_string(WeightMode mode)
{
    return mode == WeightMode::papers ? "papers" : "citations";
}

WeightVector subfield_weights(const Corpus& corpus, const std::string& journal, int year,
                              WeightMode mode, const RelevanceConfig& cfg)
{
    auto const keys = relevant_subfields(corpus, journal, year, cfg);
    if (keys.empty()) {
        throw NoRelevantSubfields(journal + " has no relevant subfield in "
                                  + std::to_string(year));
    }
    auto const window = cfg.relevance_window(year);
    std::map<SubfieldKey, double> entries;
    for (auto const& key : keys) {
        auto const papers = resolve_group(corpus, GroupSelector(journal, key, window));
        if (mode == WeightMode::papers) {
            entries.emplace(key, static_cast<double>(papers.size()));
        } else {
            auto const counts = citation_counts(corpus, papers, YearRange(year, year));
            std::int64_t total = 0;
            for (auto c : counts) {
                total += c;
            }
            entries.emplace(key, static_cast<double>(total));
        }
    }
    return WeightVector(std::move(entries));
}

} // namespace subvis
