#pragma once

#include "subvis/types.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

namespace subvis {

/// Dense position of a paper inside a Corpus. Papers are ordered by id.
using PaperIndex = std::uint32_t;

/// Sorted, duplicate-free list of paper positions.
using PaperSet = std::vector<PaperIndex>;

struct IndexedEdge {
    PaperIndex citing;
    PaperIndex cited;

    friend auto operator<=>(const IndexedEdge&, const IndexedEdge&) = default;
};

// =================================================================================================
//      Corpus
// =================================================================================================

/**
 * Immutable set of papers and citation edges with lookup indexes.
 *
 * Construction validates strictly: ids must be unique and nonempty, every edge
 * must resolve to two distinct papers, and no paper may list two codes with the
 * same level-3 key. Duplicate edges collapse into one. Lenient handling of
 * anomalies belongs to the loader, not here.
 *
 * All indexes are derived from the sorted papers and edges, so constructing a
 * corpus from papers() and edge_list() reproduces them exactly.
 */
class Corpus {
public:
    using JournalYear = std::pair<std::string, int>;
    using SubfieldCell = std::tuple<std::string, SubfieldKey, int>;

    Corpus() = default;
    Corpus(std::vector<Paper> papers, std::vector<CitationEdge> edges);

    std::size_t size() const noexcept { return papers_.size(); }
    bool empty() const noexcept { return papers_.empty(); }

    std::span<const Paper> papers() const noexcept { return papers_; }
    const Paper& paper(PaperIndex i) const { return papers_[i]; }
    int year_of(PaperIndex i) const { return years_[i]; }
    std::optional<PaperIndex> find(std::string_view id) const;

    std::span<const IndexedEdge> edges() const noexcept { return edges_; }
    std::vector<CitationEdge> edge_list() const;

    /// Distinct papers citing `cited`, ascending.
    std::span<const PaperIndex> citers(PaperIndex cited) const;

    /// Level-3 keys of a paper, ascending and unique.
    std::span<const SubfieldKey> subfields(PaperIndex i) const;

    const std::vector<std::string>& journals() const noexcept { return journals_; }
    std::optional<YearRange> year_span() const;

    std::span<const PaperIndex> papers_in(const std::string& journal, int year) const;
    std::span<const PaperIndex> papers_in(const std::string& journal, const SubfieldKey& key,
                                          int year) const;

    const std::map<JournalYear, PaperSet>& index_by_journal_year() const noexcept
    {
        return by_journal_year_;
    }
    const std::map<SubfieldCell, PaperSet>& index_by_subfield() const noexcept
    {
        return by_subfield_;
    }
    /// CSR layout of incoming edges: offsets (size()+1) and citing positions.
    const std::vector<std::size_t>& incoming_offsets() const noexcept { return in_offsets_; }
    const std::vector<PaperIndex>& incoming_citers() const noexcept { return in_citers_; }

    /// Papers and edges compare equal; indexes are derived state.
    friend bool operator==(const Corpus& a, const Corpus& b)
    {
        return a.papers_ == b.papers_ && a.edges_ == b.edges_;
    }

private:
    std::vector<Paper> papers_;
    std::vector<int> years_;
    std::unordered_map<std::string, PaperIndex> id_lookup_;
    std::vector<IndexedEdge> edges_;

    std::vector<std::size_t> in_offsets_;
    std::vector<PaperIndex> in_citers_;

    std::vector<std::size_t> key_offsets_;
    std::vector<SubfieldKey> keys_;

    std::vector<std::string> journals_;
    std::map<JournalYear, PaperSet> by_journal_year_;
    std::map<SubfieldCell, PaperSet> by_subfield_;
};

// =================================================================================================
//      Group resolution
// =================================================================================================

/// Every paper matching all set fields of the selector. A paper with several
/// codes belongs to each of their subfields.
PaperSet resolve_group(const Corpus& corpus, const GroupSelector& sel);

/// Ids of the given papers, in the same order.
std::vector<std::string> paper_ids(const Corpus& corpus, const PaperSet& set);

} // namespace subvis
