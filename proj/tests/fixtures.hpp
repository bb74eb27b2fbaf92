#pragma once

// Hand-built corpora shared by the unit and acceptance tests.

#include "subvis/corpus.hpp"
#include "subvis/pacs.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace subvis::testing {

inline Paper make_paper(std::string id, std::string journal, int year,
                        std::vector<std::string> codes = {})
{
    Paper p;
    p.id = std::move(id);
    p.journal = std::move(journal);
    p.pub_date = Date{year, 1, 1};
    for (auto const& c : codes) {
        p.pacs.push_back(parse_pacs(c));
    }
    return p;
}

/**
 * Six papers, five edges.
 *
 *   P1  J 2013  05.45.-a
 *   P2  J 2014  05.45.Xt; 89.20.-a
 *   P3  J 2014  12.38.Aw
 *   C1  K 2015  cites P1, P2
 *   C2  K 2015  cites P2
 *   C3  K 2016  cites P1, P3
 *
 * Subfield 05.45 of J has P1, P2 in 2013-2014 and 3 citations from 2015,
 * so its 2015 impact factor is 1.5. The group {P1, P2, P3} receives
 * {1, 2, 0} citations dated 2015.
 */
inline Corpus six_paper_fixture()
{
    std::vector<Paper> papers = {
        make_paper("P1", "J", 2013, {"05.45.-a"}),
        make_paper("P2", "J", 2014, {"05.45.Xt", "89.20.-a"}),
        make_paper("P3", "J", 2014, {"12.38.Aw"}),
        make_paper("C1", "K", 2015),
        make_paper("C2", "K", 2015),
        make_paper("C3", "K", 2016),
    };
    std::vector<CitationEdge> edges = {
        {"C1", "P1"}, {"C1", "P2"}, {"C2", "P2"}, {"C3", "P1"}, {"C3", "P3"},
    };
    return Corpus(std::move(papers), std::move(edges));
}

/**
 * Journal J with subfields 01.10 (A1, A2) and 02.20 (B1, B2), all from 2014,
 * and three uncoded J papers from 2015 that cite them:
 *
 *   X1 -> A1, B1, B2     X2 -> A2, B1, B2     X3 -> B1, B2
 *
 * In 2015: IF(01.10) = 1, IF(02.20) = 3, journal IF = 8 / 4 = 2.
 * Both subfields have 2 papers in the 2014-2015 relevance window.
 */
inline Corpus two_subfield_fixture()
{
    std::vector<Paper> papers = {
        make_paper("A1", "J", 2014, {"01.10.-a"}), make_paper("A2", "J", 2014, {"01.10.Bc"}),
        make_paper("B1", "J", 2014, {"02.20.-a"}), make_paper("B2", "J", 2014, {"02.20.Ef"}),
        make_paper("X1", "J", 2015),               make_paper("X2", "J", 2015),
        make_paper("X3", "J", 2015),
    };
    std::vector<CitationEdge> edges = {
        {"X1", "A1"}, {"X1", "B1"}, {"X1", "B2"}, {"X2", "A2"},
        {"X2", "B1"}, {"X2", "B2"}, {"X3", "B1"}, {"X3", "B2"},
    };
    return Corpus(std::move(papers), std::move(edges));
}

/// Exhaustive pair enumeration: (wins + ties / 2) / (n_t n_r).
inline double brute_force_success(const std::vector<std::int64_t>& t,
                                  const std::vector<std::int64_t>& r)
{
    double wins = 0.0;
    double ties = 0.0;
    for (auto a : t) {
        for (auto b : r) {
            wins += a > b;
            ties += a == b;
        }
    }
    return (wins + ties / 2.0) / (static_cast<double>(t.size()) * static_cast<double>(r.size()));
}

/// Random citation counts for oracle comparisons.
inline std::vector<std::int64_t> random_counts(std::mt19937_64& rng, std::size_t max_size,
                                               std::int64_t max_count)
{
    std::uniform_int_distribution<std::size_t> size(1, max_size);
    std::uniform_int_distribution<std::int64_t> top(0, max_count);
    auto const n = size(rng);
    auto const cap = top(rng);
    std::uniform_int_distribution<std::int64_t> count(0, cap);
    std::vector<std::int64_t> out(n);
    for (auto& c : out) {
        c = count(rng);
    }
    return out;
}

} // namespace subvis::testing
