#include "subvis/corpus.hpp"

#include "subvis/errors.hpp"
#include "subvis/pacs.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace subvis {

Corpus::Corpus(std::vector<Paper> papers, std::vector<CitationEdge> edges)
    : papers_(std::move(papers))
{
    if (papers_.size() >= std::numeric_limits<PaperIndex>::max()) {
        throw InvalidCorpus("too many papers");
    }
    std::sort(papers_.begin(), papers_.end(),
              [](const Paper& a, const Paper& b) { return a.id < b.id; });

    id_lookup_.reserve(papers_.size());
    years_.reserve(papers_.size());
    key_offsets_.reserve(papers_.size() + 1);
    key_offsets_.push_back(0);
    std::set<std::string> journal_set;

    for (PaperIndex i = 0; i < papers_.size(); ++i) {
        auto const& p = papers_[i];
        if (p.id.empty()) {
            throw InvalidCorpus("paper with empty id");
        }
        if (!id_lookup_.emplace(p.id, i).second) {
            throw DuplicateId("paper id '" + p.id + "' appears more than once");
        }
        if (p.journal.empty()) {
            throw InvalidCorpus("paper '" + p.id + "' has no journal");
        }
        years_.push_back(p.pub_year());
        journal_set.insert(p.journal);
        by_journal_year_[{p.journal, p.pub_year()}].push_back(i);

        std::vector<SubfieldKey> keys;
        keys.reserve(p.pacs.size());
        for (auto const& code : p.pacs) {
            keys.push_back(subfield_key(code));
        }
        std::sort(keys.begin(), keys.end());
        if (std::adjacent_find(keys.begin(), keys.end()) != keys.end()) {
            throw InvalidCorpus("paper '" + p.id + "' lists the same level-3 code twice");
        }
        for (auto const& k : keys) {
            by_subfield_[{p.journal, k, p.pub_year()}].push_back(i);
            keys_.push_back(k);
        }
        key_offsets_.push_back(keys_.size());
    }
    journals_.assign(journal_set.begin(), journal_set.end());

    edges_.reserve(edges.size());
    for (auto const& e : edges) {
        auto const a = find(e.citing);
        auto const b = find(e.cited);
        if (!a || !b) {
            throw InvalidCorpus("edge " + e.citing + " -> " + e.cited + " is dangling");
        }
        if (*a == *b) {
            throw InvalidCorpus("self-citation of '" + e.citing + "'");
        }
        edges_.push_back({*a, *b});
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

    // incoming adjacency, citers ascending within each row
    in_offsets_.assign(papers_.size() + 1, 0);
    for (auto const& e : edges_) {
        ++in_offsets_[e.cited + 1];
    }
    for (std::size_t i = 0; i < papers_.size(); ++i) {
        in_offsets_[i + 1] += in_offsets_[i];
    }
    in_citers_.resize(edges_.size());
    auto fill = in_offsets_;
    for (auto const& e : edges_) {
        in_citers_[fill[e.cited]++] = e.citing;
    }
    for (std::size_t i = 0; i < papers_.size(); ++i) {
        std::sort(in_citers_.begin() + static_cast<std::ptrdiff_t>(in_offsets_[i]),
                  in_citers_.begin() + static_cast<std::ptrdiff_t>(in_offsets_[i + 1]));
    }
}

std::optional<PaperIndex> Corpus::find(std::string_view id) const
{
    auto const it = id_lookup_.find(std::string(id));
    if (it == id_lookup_.end()) {
        return std::nullopt;
    }
    return it->second;
}

std::vector<CitationEdge> Corpus::edge_list() const
{
    std::vector<CitationEdge> out;
    out.reserve(edges_.size());
    for (auto const& e : edges_) {
        out.push_back({papers_[e.citing].id, papers_[e.cited].id});
    }
    return out;
}

std::span<const PaperIndex> Corpus::citers(PaperIndex cited) const
{
    return std::span<const PaperIndex>(in_citers_).subspan(
        in_offsets_[cited], in_offsets_[cited + 1] - in_offsets_[cited]);
}

std::span<const SubfieldKey> Corpus::subfields(PaperIndex i) const
{
    return std::span<const SubfieldKey>(keys_).subspan(key_offsets_[i],
                                                       key_offsets_[i + 1] - key_offsets_[i]);
}

std::optional<YearRange> Corpus::year_span() const
{
    if (years_.empty()) {
        return std::nullopt;
    }
    auto const [lo, hi] = std::minmax_element(years_.begin(), years_.end());
    return YearRange(*lo, *hi);
}

std::span<const PaperIndex> Corpus::papers_in(const std::string& journal, int year) const
{
    auto const it = by_journal_year_.find({journal, year});
    if (it == by_journal_year_.end()) {
        return {};
    }
    return it->second;
}

std::span<const PaperIndex> Corpus::papers_in(const std::string& journal, const SubfieldKey& key,
                                              int year) const
{
    auto const it = by_subfield_.find({journal, key, year});
    if (it == by_subfield_.end()) {
        return {};
    }
    return it->second;
}

// =================================================================================================
//      Group resolution
// =================================================================================================

PaperSet resolve_group(const Corpus& corpus, const GroupSelector& sel)
{
    auto const& years = sel.pub_years();
    PaperSet out;

    auto append = [&](std::span<const PaperIndex> part) {
        out.insert(out.end(), part.begin(), part.end());
    };

    if (sel.journal()) {
        for (int y = years.first(); y <= years.last(); ++y) {
            if (sel.subfield()) {
                append(corpus.papers_in(*sel.journal(), *sel.subfield(), y));
            } else {
                append(corpus.papers_in(*sel.journal(), y));
            }
        }
    } else {
        for (auto const& [cell, set] : corpus.index_by_subfield()) {
            auto const& [journal, key, year] = cell;
            if (key == *sel.subfield() && years.contains(year)) {
                append(set);
            }
        }
    }

    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::string> paper_ids(const Corpus& corpus, const PaperSet& set)
{
    std::vector<std::string> out;
    out.reserve(set.size());
    for (auto i : set) {
        out.push_back(corpus.paper(i).id);
    }
    return out;
}

} // namespace subvis
