#pragma once

#include "subvis/corpus.hpp"

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace subvis::synth {

struct SubfieldSpec {
    SubfieldKey key;
    int papers_per_year = 0;
    double citation_rate = 0.0;  ///< expected citations per paper per year while citable
};

struct JournalSpec {
    std::string name;
    std::vector<SubfieldSpec> subfields;
};

/**
 * Parameters of a synthetic corpus.
 *
 * JSON form:
 *
 *     {
 *       "seed": 42,
 *       "years": [2000, 2010],
 *       "attachment_exponent": 0.0,
 *       "fitness_sigma": 0.0,
 *       "citation_horizon": 2,
 *       "journals": [
 *         {"name": "A", "subfields": [
 *           {"key": "05.45", "papers_per_year": 100, "citation_rate": 2.0}
 *         ]}
 *       ]
 *     }
 *
 * Only "years" and "journals" are required.
 */
struct SynthConfig {
    std::uint64_t seed = 1;
    YearRange years{2000, 2000};
    std::vector<JournalSpec> journals;
    double attachment_exponent = 0.0;  ///< 0 uniform, > 0 weight (1 + in-degree)^exponent
    double fitness_sigma = 0.0;        ///< log-sd of the per-paper lognormal fitness (mean 1)
    int citation_horizon = 2;          ///< papers are citable this many years after publication

    /// Throws InvalidConfig.
    void validate() const;

    /// Throws InvalidConfig on missing or mistyped fields.
    static SynthConfig from_json(const nlohmann::json& doc);
    nlohmann::json to_json() const;
};

/**
 * Builds a corpus year by year.
 *
 * For each year, papers are created in config order (journal, subfield, then
 * sequence) with ids "<journal>-<key>-<year>-<seq>". Papers from the previous
 * citation_horizon years are citable; each carries weight
 * citation_rate * fitness * (1 + in_degree)^attachment_exponent. The year's
 * expected citation total is the sum of rate * fitness over citable papers,
 * split evenly as a Poisson mean across the year's new papers. Each citing
 * paper draws its targets by weight without repeating one.
 *
 * Randomness comes from std::mt19937_64 seeded with `seed`; uniforms take the
 * top 53 bits, normals use Box-Muller, and Poisson draws use Knuth's product
 * method in chunks of mean <= 16. The engine output is fixed by the C++
 * standard, so a seed reproduces the same corpus wherever the math library
 * rounds exp/log/cos identically.
 */
Corpus generate(const SynthConfig& cfg);

} // namespace subvis::synth
