#include "subvis/synth.hpp"

#include "subvis/errors.hpp"
#include "subvis/pacs.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <set>

namespace subvis::synth {

// =================================================================================================
//      Config
// =================================================================================================

void SynthConfig::validate() const
{
    if (journals.empty()) {
        throw InvalidConfig("synthetic config needs at least one journal");
    }
    std::set<std::string> names;
    for (auto const& j : journals) {
        if (j.name.empty() || j.name.find_first_of(",\"\n\r") != std::string::npos) {
            throw InvalidConfig("journal name '" + j.name + "' is empty or not CSV-safe");
        }
        if (!names.insert(j.name).second) {
            throw InvalidConfig("journal '" + j.name + "' listed twice");
        }
        std::set<SubfieldKey> keys;
        for (auto const& s : j.subfields) {
            if (!keys.insert(s.key).second) {
                throw InvalidConfig("subfield " + s.key.str() + " listed twice in " + j.name);
            }
            if (s.papers_per_year < 0) {
                throw InvalidConfig("papers_per_year must be >= 0");
            }
            if (!(s.citation_rate >= 0.0) || !std::isfinite(s.citation_rate)) {
                throw InvalidConfig("citation_rate must be a finite number >= 0");
            }
        }
    }
    if (!(attachment_exponent >= 0.0) || !std::isfinite(attachment_exponent)) {
        throw InvalidConfig("attachment_exponent must be >= 0");
    }
    if (!(fitness_sigma >= 0.0) || !std::isfinite(fitness_sigma)) {
        throw InvalidConfig("fitness_sigma must be >= 0");
    }
    if (citation_horizon < 1) {
        throw InvalidConfig("citation_horizon must be >= 1");
    }
}

SynthConfig SynthConfig::from_json(const nlohmann::json& doc)
{
    try {
        SynthConfig cfg;
        cfg.seed = doc.value("seed", std::uint64_t{1});
        auto const& years = doc.at("years");
        if (years.is_string()) {
            cfg.years = YearRange::parse(years.get<std::string>());
        } else {
            cfg.years = YearRange(years.at(0).get<int>(), years.at(1).get<int>());
        }
        cfg.attachment_exponent = doc.value("attachment_exponent", 0.0);
        cfg.fitness_sigma = doc.value("fitness_sigma", 0.0);
        cfg.citation_horizon = doc.value("citation_horizon", 2);
        for (auto const& j : doc.at("journals")) {
            JournalSpec journal;
            journal.name = j.at("name").get<std::string>();
            for (auto const& s : j.at("subfields")) {
                journal.subfields.push_back({SubfieldKey(s.at("key").get<std::string>()),
                                             s.at("papers_per_year").get<int>(),
                                             s.at("citation_rate").get<double>()});
            }
            cfg.journals.push_back(std::move(journal));
        }
        cfg.validate();
        return cfg;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidConfig(std::string("synthetic config: ") + e.what());
    } catch (const MalformedPacs& e) {
        throw InvalidConfig(std::string("synthetic config: ") + e.what());
    } catch (const InvalidSelector& e) {
        throw InvalidConfig(std::string("synthetic config: ") + e.what());
    }
}

nlohmann::json SynthConfig::to_json() const
{
    nlohmann::json doc;
    doc["seed"] = seed;
    doc["years"] = {years.first(), years.last()};
    doc["attachment_exponent"] = attachment_exponent;
    doc["fitness_sigma"] = fitness_sigma;
    doc["citation_horizon"] = citation_horizon;
    doc["journals"] = nlohmann::json::array();
    for (auto const& j : journals) {
        nlohmann::json subfields = nlohmann::json::array();
        for (auto const& s : j.subfields) {
            subfields.push_back({{"key", s.key.str()},
                                 {"papers_per_year", s.papers_per_year},
                                 {"citation_rate", s.citation_rate}});
        }
        doc["journals"].push_back({{"name", j.name}, {"subfields", subfields}});
    }
    return doc;
}

// =================================================================================================
//      Random draws
// =================================================================================================

namespace {

class Random {
public:
    explicit Random(std::uint64_t seed)
        : engine_(seed)
    {}

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double normal()
    {
        double u1 = uniform();
        while (u1 <= 0.0) {
            u1 = uniform();
        }
        double const u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

    std::int64_t poisson(double mean)
    {
        std::int64_t k = 0;
        while (mean > 0.0) {
            double const chunk = std::min(mean, 16.0);
            mean -= chunk;
            double const limit = std::exp(-chunk);
            double prod = uniform();
            while (prod > limit) {
                ++k;
                prod *= uniform();
            }
        }
        return k;
    }

private:
    std::mt19937_64 engine_;
};

/// Fenwick tree over nonnegative weights with prefix-sum sampling.
class WeightTree {
public:
    explicit WeightTree(std::vector<double> const& weights)
        : tree_(weights.size() + 1, 0.0)
        , weights_(weights)
    {
        for (std::size_t i = 0; i < weights.size(); ++i) {
            tree_[i + 1] += weights[i];
            auto const parent = (i + 1) + ((i + 1) & (~(i + 1) + 1));
            if (parent < tree_.size()) {
                tree_[parent] += tree_[i + 1];
            }
        }
        for (auto w : weights) {
            total_ += w;
        }
    }

    double total() const noexcept { return total_; }

    void set(std::size_t i, double weight)
    {
        double const delta = weight - weights_[i];
        weights_[i] = weight;
        total_ += delta;
        for (std::size_t k = i + 1; k < tree_.size(); k += k & (~k + 1)) {
            tree_[k] += delta;
        }
    }

    /// Index whose cumulative range contains `target` in [0, total).
    std::size_t find(double target) const
    {
        std::size_t pos = 0;
        std::size_t step = 1;
        while (step * 2 < tree_.size()) {
            step *= 2;
        }
        for (; step > 0; step /= 2) {
            if (pos + step < tree_.size() && tree_[pos + step] <= target) {
                pos += step;
                target -= tree_[pos];
            }
        }
        // skip zero-weight slots that rounding may land on
        while (pos < weights_.size() && weights_[pos] <= 0.0) {
            ++pos;
        }
        if (pos >= weights_.size()) {
            pos = weights_.size() - 1;
            while (pos > 0 && weights_[pos] <= 0.0) {
                --pos;
            }
        }
        return pos;
    }

private:
    std::vector<double> tree_;
    std::vector<double> weights_;
    double total_ = 0.0;
};

struct Draft {
    Paper paper;
    double rate = 0.0;
    double fitness = 1.0;
    std::int64_t in_degree = 0;
};

std::string make_id(const std::string& journal, const SubfieldKey& key, int year, int seq)
{
    char buf[32];
    std::snprintf(buf, sizeof(buf), "-%d-%05d", year, seq);
    return journal + "-" + key.str() + buf;
}

} // namespace

// =================================================================================================
//      Generation
// =================================================================================================

Corpus generate(const SynthConfig& cfg)
{
    cfg.validate();
    Random rng(cfg.seed);

    std::vector<Draft> drafts;
    std::vector<CitationEdge> edges;
    std::vector<std::size_t> year_begin;  // first draft index of each year

    auto weight_of = [&](const Draft& d) {
        double w = d.rate * d.fitness;
        if (cfg.attachment_exponent > 0.0) {
            w *= std::pow(1.0 + static_cast<double>(d.in_degree), cfg.attachment_exponent);
        }
        return w;
    };

    for (int year = cfg.years.first(); year <= cfg.years.last(); ++year) {
        auto const cohort_begin = drafts.size();
        year_begin.push_back(cohort_begin);

        for (auto const& journal : cfg.journals) {
            for (auto const& sub : journal.subfields) {
                for (int seq = 0; seq < sub.papers_per_year; ++seq) {
                    Draft d;
                    d.paper.id = make_id(journal.name, sub.key, year, seq);
                    d.paper.journal = journal.name;
                    d.paper.pub_date = Date{year, static_cast<unsigned>(1 + seq % 12),
                                            static_cast<unsigned>(1 + (seq / 12) % 28)};
                    d.paper.pacs.push_back(parse_pacs(sub.key.str()));
                    d.rate = sub.citation_rate;
                    if (cfg.fitness_sigma > 0.0) {
                        d.fitness = std::exp(cfg.fitness_sigma * rng.normal()
                                             - cfg.fitness_sigma * cfg.fitness_sigma / 2.0);
                    }
                    drafts.push_back(std::move(d));
                }
            }
        }
        auto const cohort_end = drafts.size();
        auto const n_citing = cohort_end - cohort_begin;

        // citable: the previous citation_horizon cohorts
        auto const y_index = year_begin.size() - 1;
        auto const first_cohort = y_index >= static_cast<std::size_t>(cfg.citation_horizon)
                                      ? y_index - static_cast<std::size_t>(cfg.citation_horizon)
                                      : 0;
        auto const citable_begin = year_begin[first_cohort];
        auto const citable_end = cohort_begin;
        auto const n_citable = citable_end - citable_begin;
        if (n_citing == 0 || n_citable == 0) {
            continue;
        }

        double expected = 0.0;
        std::vector<double> weights(n_citable);
        for (std::size_t k = 0; k < n_citable; ++k) {
            auto const& d = drafts[citable_begin + k];
            expected += d.rate * d.fitness;
            weights[k] = weight_of(d);
        }
        WeightTree tree(weights);
        if (!(tree.total() > 0.0)) {
            continue;
        }
        auto const per_paper = expected / static_cast<double>(n_citing);

        std::vector<std::size_t> chosen;
        for (auto citing = cohort_begin; citing < cohort_end; ++citing) {
            auto const wanted = std::min<std::int64_t>(rng.poisson(per_paper),
                                                       static_cast<std::int64_t>(n_citable));
            chosen.clear();
            for (std::int64_t c = 0; c < wanted; ++c) {
                for (int attempt = 0; attempt < 64; ++attempt) {
                    auto const k = tree.find(rng.uniform() * tree.total());
                    if (std::find(chosen.begin(), chosen.end(), k) != chosen.end()) {
                        continue;
                    }
                    chosen.push_back(k);
                    auto& target = drafts[citable_begin + k];
                    ++target.in_degree;
                    edges.push_back({drafts[citing].paper.id, target.paper.id});
                    if (cfg.attachment_exponent > 0.0) {
                        tree.set(k, weight_of(target));
                    }
                    break;
                }
            }
        }
    }

    std::vector<Paper> papers;
    papers.reserve(drafts.size());
    for (auto& d : drafts) {
        papers.push_back(std::move(d.paper));
    }
    return Corpus(std::move(papers), std::move(edges));
}

} // namespace subvis::synth
