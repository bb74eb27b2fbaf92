#include "subvis/ingest.hpp"

#include "subvis/csv.hpp"
#include "subvis/errors.hpp"
#include "subvis/pacs.hpp"

#include <algorithm>
#include <fstream>
#include <cstdint>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace subvis {

Policy parse_policy(std::string_view text)
{
    if (text == "strict") {
        return Policy::strict;
    }
    if (text == "lenient") {
        return Policy::lenient;
    }
    throw InvalidConfig("policy must be strict or lenient, got '" + std::string(text) + "'");
}

std::string to_string(Policy policy)
{
    return policy == Policy::strict ? "strict" : "lenient";
}

namespace {

struct Columns {
    std::vector<std::size_t> index;
    std::size_t width = 0;
};

Columns locate_columns(const csv::Row& header, std::initializer_list<const char*> names,
                       std::string_view file)
{
    Columns cols;
    cols.width = header.size();
    for (auto const* name : names) {
        auto const it = std::find(header.begin(), header.end(), name);
        if (it == header.end()) {
            throw SchemaError(std::string(file) + " file is missing column '" + name + "'");
        }
        cols.index.push_back(static_cast<std::size_t>(it - header.begin()));
    }
    return cols;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
        s.remove_suffix(1);
    }
    return s;
}

std::string location(std::string_view file, std::size_t line)
{
    return std::string(file) + " row " + std::to_string(line);
}

const std::string& field(const csv::Row& row, const Columns& cols, std::size_t which,
                         std::string_view file, std::size_t line)
{
    auto const at = cols.index[which];
    if (at >= row.size()) {
        throw SchemaError(location(file, line) + " has " + std::to_string(row.size())
                          + " fields, expected " + std::to_string(cols.width));
    }
    return row[at];
}

} // namespace

LoadResult load_corpus_from_text(std::string_view papers_text, std::string_view citations_text,
                                 Policy policy)
{
    ValidationReport report;
    auto strict_fail = [&](const std::string& what) {
        if (policy == Policy::strict) {
            throw StrictViolation(what);
        }
    };

    // papers
    auto const paper_rows = csv::parse(papers_text);
    if (paper_rows.empty()) {
        throw SchemaError("papers file has no header");
    }
    auto const pcols = locate_columns(paper_rows.front(), {"id", "journal", "pub_date", "pacs"},
                                      "papers");

    std::vector<Paper> papers;
    papers.reserve(paper_rows.size() - 1);
    std::unordered_map<std::string, std::uint64_t> seen;
    std::vector<std::string> duplicates;
    for (std::size_t line = 1; line < paper_rows.size(); ++line) {
        auto const& row = paper_rows[line];
        Paper p;
        p.id = std::string(trim(field(row, pcols, 0, "papers", line)));
        p.journal = std::string(trim(field(row, pcols, 1, "papers", line)));
        if (p.id.empty()) {
            throw SchemaError(location("papers", line) + " has an empty id");
        }
        if (p.journal.empty()) {
            throw SchemaError(location("papers", line) + " has an empty journal");
        }
        try {
            p.pub_date = Date::parse(trim(field(row, pcols, 2, "papers", line)));
        } catch (const SchemaError& e) {
            throw SchemaError(location("papers", line) + ": " + e.what());
        }

        std::set<SubfieldKey> keys;
        std::string_view codes = field(row, pcols, 3, "papers", line);
        while (!codes.empty()) {
            auto const semi = codes.find(';');
            auto const piece = trim(codes.substr(0, semi));
            codes = semi == std::string_view::npos ? std::string_view{} : codes.substr(semi + 1);
            if (piece.empty()) {
                continue;
            }
            try {
                auto code = parse_pacs(piece);
                if (keys.insert(subfield_key(code)).second) {
                    p.pacs.push_back(std::move(code));
                } else {
                    ++report.n_duplicate_pacs;
                }
            } catch (const MalformedPacs& e) {
                ++report.n_malformed_pacs;
                strict_fail(location("papers", line) + ": " + e.what());
            }
        }

        if (!seen.emplace(p.id, seen.size()).second) {
            duplicates.push_back(p.id);
        }
        papers.push_back(std::move(p));
    }
    if (!duplicates.empty()) {
        report.n_duplicate_ids = duplicates.size();
        throw DuplicateId(std::to_string(duplicates.size()) + " duplicate paper id(s), first '"
                          + duplicates.front() + "'");
    }
    report.n_papers = papers.size();

    // citations
    auto const cite_rows = csv::parse(citations_text);
    if (cite_rows.empty()) {
        throw SchemaError("citations file has no header");
    }
    auto const ccols = locate_columns(cite_rows.front(), {"citing", "cited"}, "citations");

    std::vector<CitationEdge> edges;
    edges.reserve(cite_rows.size() - 1);
    std::unordered_set<std::uint64_t> edge_seen;
    edge_seen.reserve(cite_rows.size());
    for (std::size_t line = 1; line < cite_rows.size(); ++line) {
        auto const& row = cite_rows[line];
        ++report.n_edges_read;
        CitationEdge e{std::string(trim(field(row, ccols, 0, "citations", line))),
                       std::string(trim(field(row, ccols, 1, "citations", line)))};
        auto const citing = seen.find(e.citing);
        auto const cited = seen.find(e.cited);
        if (citing == seen.end() || cited == seen.end()) {
            ++report.n_edges_dropped_dangling;
            strict_fail(location("citations", line) + ": edge " + e.citing + " -> " + e.cited
                        + " references an unknown paper");
            continue;
        }
        if (e.citing == e.cited) {
            ++report.n_self_citations_dropped;
            strict_fail(location("citations", line) + ": self-citation of " + e.citing);
            continue;
        }
        if (!edge_seen.insert((citing->second << 32) | cited->second).second) {
            ++report.n_duplicate_edges;
            continue;
        }
        edges.push_back(std::move(e));
    }
    report.n_edges_kept = edges.size();

    Corpus corpus(std::move(papers), std::move(edges));
    if (corpus.edges().size() != report.n_edges_kept) {
        throw InvariantError("edge count changed while building the corpus");
    }
    return {std::move(corpus), report};
}

LoadResult load_corpus(const std::filesystem::path& papers_path,
                       const std::filesystem::path& citations_path, Policy policy)
{
    auto const papers = csv::read_file(papers_path);
    auto const citations = csv::read_file(citations_path);
    return load_corpus_from_text(papers, citations, policy);
}

// =================================================================================================
//      Export
// =================================================================================================

std::string papers_csv(const Corpus& corpus)
{
    std::string out = "id,journal,pub_date,pacs\n";
    for (auto const& p : corpus.papers()) {
        std::string codes;
        for (std::size_t i = 0; i < p.pacs.size(); ++i) {
            if (i) {
                codes.push_back(';');
            }
            codes += p.pacs[i].text();
        }
        out += csv::join({p.id, p.journal, p.pub_date.to_string(), codes});
        out.push_back('\n');
    }
    return out;
}

std::string citations_csv(const Corpus& corpus)
{
    std::string out = "citing,cited\n";
    for (auto const& e : corpus.edge_list()) {
        out += csv::join({e.citing, e.cited});
        out.push_back('\n');
    }
    return out;
}

void export_corpus(const Corpus& corpus, const std::filesystem::path& papers_path,
                   const std::filesystem::path& citations_path)
{
    auto write = [](const std::filesystem::path& path, const std::string& text) {
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw IoError("cannot write '" + path.string() + "'");
        }
        out << text;
        if (!out) {
            throw IoError("failed writing '" + path.string() + "'");
        }
    };
    write(papers_path, papers_csv(corpus));
    write(citations_path, citations_csv(corpus));
}

} // namespace subvis
