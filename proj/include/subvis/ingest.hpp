#pragma once

#include "subvis/corpus.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace subvis {

enum class Policy { strict, lenient };

Policy parse_policy(std::string_view text);
std::string to_string(Policy policy);

/// Counts of what the loader saw and what it did about it.
///
/// Every citation row lands in exactly one bucket:
/// n_edges_read = n_edges_kept + n_edges_dropped_dangling
///              + n_self_citations_dropped + n_duplicate_edges.
struct ValidationReport {
    std::size_t n_papers = 0;
    std::size_t n_edges_read = 0;
    std::size_t n_edges_kept = 0;
    std::size_t n_edges_dropped_dangling = 0;
    std::size_t n_self_citations_dropped = 0;
    std::size_t n_duplicate_edges = 0;
    std::size_t n_duplicate_ids = 0;
    std::size_t n_malformed_pacs = 0;
    std::size_t n_duplicate_pacs = 0;

    /// Anomalies that strict mode refuses.
    std::size_t n_anomalies() const noexcept
    {
        return n_edges_dropped_dangling + n_self_citations_dropped + n_malformed_pacs;
    }

    friend bool operator==(const ValidationReport&, const ValidationReport&) = default;
};

struct LoadResult {
    Corpus corpus;
    ValidationReport report;
};

/**
 * Loads the two-file CSV corpus.
 *
 * papers:    header `id,journal,pub_date,pacs`, pacs semicolon-separated.
 * citations: header `citing,cited`.
 *
 * Either file may be gzip-compressed. Column order is free and extra columns
 * are ignored. Under Policy::lenient a malformed code is skipped (the paper is
 * kept) and dangling or self-citing edges are dropped, all counted. Under
 * Policy::strict the first such anomaly throws StrictViolation. Duplicate ids
 * always throw DuplicateId; missing columns or bad dates throw SchemaError.
 */
LoadResult load_corpus(const std::filesystem::path& papers_path,
                       const std::filesystem::path& citations_path, Policy policy);

/// Same as load_corpus, from in-memory CSV text.
LoadResult load_corpus_from_text(std::string_view papers_csv, std::string_view citations_csv,
                                 Policy policy);

std::string papers_csv(const Corpus& corpus);
std::string citations_csv(const Corpus& corpus);

/// Writes both files in the format load_corpus reads, papers and edges sorted by id.
void export_corpus(const Corpus& corpus, const std::filesystem::path& papers_path,
                   const std::filesystem::path& citations_path);

} // namespace subvis
