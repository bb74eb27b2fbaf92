#pragma once

#include "subvis/corpus.hpp"
#include "subvis/relevance.hpp"

#include <map>
#include <span>
#include <string_view>

namespace subvis {

/// Nonnegative weights per subfield with a positive total.
class WeightVector {
public:
    /// Throws InvalidWeights on a negative or non-finite weight or a zero total.
    explicit WeightVector(std::map<SubfieldKey, double> entries);

    const std::map<SubfieldKey, double>& entries() const noexcept { return entries_; }
    double total() const noexcept { return total_; }
    std::size_t nonzero_count() const noexcept;

private:
    std::map<SubfieldKey, double> entries_;
    double total_ = 0.0;
};

/// Order-1 Hill number exp(-sum p_i ln p_i) of the shares p_i = w_i / total.
/// Zero weights are skipped. The result lies in [1, number of nonzero weights].
double true_diversity(const WeightVector& weights);

/// Same, over a plain list of weights. Throws InvalidWeights.
double true_diversity(std::span<const double> weights);

enum class WeightMode { papers, citations };

WeightMode parse_weight_mode(std::string_view text);
std::string_view to_string(WeightMode mode);

/**
 * Weights of the relevant subfields of `journal` at `year`.
 *
 * papers:    papers published in the relevance window ending at `year`.
 * citations: citations received during `year` by those same papers.
 *
 * Throws NoRelevantSubfields, or InvalidWeights when every weight is zero.
 */
WeightVector subfield_weights(const Corpus& corpus, const std::string& journal, int year,
                              WeightMode mode, const RelevanceConfig& cfg);

} // namespace subvis
