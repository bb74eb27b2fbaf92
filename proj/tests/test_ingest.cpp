#include "doctest.h"

#include "fixtures.hpp"

#include "subvis/csv.hpp"
#include "subvis/errors.hpp"
#include "subvis/ingest.hpp"

#include <filesystem>
#include <fstream>

#include <zlib.h>

using namespace subvis;
using namespace subvis::testing;

namespace {

std::string const kPapers = "id,journal,pub_date,pacs\n"
                            "P1,PRB,2013-05-01,05.45.-a\n"
                            "P2,PRB,2014-02-11,05.45.Xt;89.20.-a\n"
                            "P3,PRL,2015,\n";
std::string const kCitations = "citing,cited\n"
                               "P3,P1\n"
                               "P3,P2\n";

std::filesystem::path temp_dir()
{
    auto dir = std::filesystem::temp_directory_path() / "subvis_ingest_test";
    std::filesystem::create_directories(dir);
    return dir;
}

void write(const std::filesystem::path& path, const std::string& text)
{
    std::ofstream(path, std::ios::binary) << text;
}

void write_gzip(const std::filesystem::path& path, const std::string& text)
{
    auto* gz = gzopen(path.c_str(), "wb");
    gzwrite(gz, text.data(), static_cast<unsigned>(text.size()));
    gzclose(gz);
}

} // namespace

TEST_CASE("clean input loads with an all-zero report")
{
    auto const [corpus, report] = load_corpus_from_text(kPapers, kCitations, Policy::strict);
    CHECK(corpus.size() == 3);
    CHECK(corpus.edges().size() == 2);
    CHECK(report.n_papers == 3);
    CHECK(report.n_edges_read == 2);
    CHECK(report.n_edges_kept == 2);
    CHECK(report.n_anomalies() == 0);
    CHECK(report.n_duplicate_edges == 0);
    CHECK(report.n_duplicate_ids == 0);

    auto const& p3 = corpus.paper(*corpus.find("P3"));
    CHECK(p3.pub_date == Date{2015, 1, 1});
    CHECK(p3.pacs.empty());
}

TEST_CASE("dangling edges: lenient drops and counts, strict refuses")
{
    auto const cites = kCitations + "GHOST,P1\n";
    auto const [corpus, report] = load_corpus_from_text(kPapers, cites, Policy::lenient);
    CHECK(report.n_edges_dropped_dangling == 1);
    CHECK(report.n_edges_kept == 2);
    CHECK(report.n_edges_read == 3);
    CHECK_THROWS_AS(load_corpus_from_text(kPapers, cites, Policy::strict), StrictViolation);
}

TEST_CASE("self-citations, duplicates and malformed codes")
{
    auto const papers = kPapers + "P4,PRL,2016-01-01,5.45;12.38.Aw;12.38.Bx\n";
    auto const cites = kCitations + "P4,P4\nP3,P1\nP4,P1\n";
    auto const [corpus, r] = load_corpus_from_text(papers, cites, Policy::lenient);
    CHECK(r.n_self_citations_dropped == 1);
    CHECK(r.n_duplicate_edges == 1);
    CHECK(r.n_malformed_pacs == 1);
    CHECK(r.n_duplicate_pacs == 1);
    CHECK(r.n_edges_kept == 3);
    CHECK(r.n_edges_read
          == r.n_edges_kept + r.n_edges_dropped_dangling + r.n_self_citations_dropped
                 + r.n_duplicate_edges);
    auto const& p4 = corpus.paper(*corpus.find("P4"));
    REQUIRE(p4.pacs.size() == 1);
    CHECK(p4.pacs[0].text() == "12.38.Aw");

    CHECK_THROWS_AS(load_corpus_from_text(papers, kCitations, Policy::strict), StrictViolation);
}

TEST_CASE("schema problems always fail")
{
    CHECK_THROWS_AS(load_corpus_from_text("id,journal,pacs\nA,J,\n", "citing,cited\n",
                                          Policy::lenient),
                    SchemaError);
    CHECK_THROWS_AS(load_corpus_from_text("id,journal,pub_date,pacs\nA,J,2015-13-01,\n",
                                          "citing,cited\n", Policy::lenient),
                    SchemaError);
    CHECK_THROWS_AS(load_corpus_from_text("id,journal,pub_date,pacs\nA,J,15,\n", "citing,cited\n",
                                          Policy::lenient),
                    SchemaError);
    CHECK_THROWS_AS(load_corpus_from_text(kPapers, "from,to\n", Policy::lenient), SchemaError);
    CHECK_THROWS_AS(load_corpus_from_text(kPapers + "P1,PRL,2016,\n", kCitations, Policy::lenient),
                    DuplicateId);
}

TEST_CASE("quoted fields and column order")
{
    std::string const papers = "pacs,pub_date,journal,id,title\r\n"
                               "\"05.45.-a; 89.20.-a\",2010-01-01,\"Phys, Rev\",\"a\"\"b\",x\r\n";
    auto const [corpus, r] = load_corpus_from_text(papers, "citing,cited\n", Policy::strict);
    auto const& p = corpus.paper(0);
    CHECK(p.id == "a\"b");
    CHECK(p.journal == "Phys, Rev");
    CHECK(p.pacs.size() == 2);

    auto const reloaded =
        load_corpus_from_text(papers_csv(corpus), citations_csv(corpus), Policy::strict);
    CHECK(reloaded.corpus == corpus);
}

TEST_CASE("export then reload is the identity, gzip or not")
{
    auto const corpus = six_paper_fixture();
    auto const dir = temp_dir();
    export_corpus(corpus, dir / "papers.csv", dir / "citations.csv");
    auto const plain = load_corpus(dir / "papers.csv", dir / "citations.csv", Policy::strict);
    CHECK(plain.corpus == corpus);

    write_gzip(dir / "papers.csv.gz", papers_csv(corpus));
    write_gzip(dir / "citations.csv.gz", citations_csv(corpus));
    auto const gz = load_corpus(dir / "papers.csv.gz", dir / "citations.csv.gz", Policy::strict);
    CHECK(gz.corpus == corpus);
    CHECK(gz.report == plain.report);

    CHECK_THROWS_AS(load_corpus(dir / "missing.csv", dir / "citations.csv", Policy::strict),
                    IoError);
}

TEST_CASE("loading is deterministic")
{
    auto const a = load_corpus_from_text(kPapers, kCitations + "X,P1\n", Policy::lenient);
    auto const b = load_corpus_from_text(kPapers, kCitations + "X,P1\n", Policy::lenient);
    CHECK(a.corpus == b.corpus);
    CHECK(a.report == b.report);
    CHECK(papers_csv(a.corpus) == papers_csv(b.corpus));
}

TEST_CASE("csv reader edge cases")
{
    auto const rows = csv::parse("\xEF\xBB\xBF" "a,b\n\n\"x\ny\",\"\"\n1,\n");
    REQUIRE(rows.size() == 3);
    CHECK(rows[0] == csv::Row{"a", "b"});
    CHECK(rows[1] == csv::Row{"x\ny", ""});
    CHECK(rows[2] == csv::Row{"1", ""});
    CHECK_THROWS_AS(csv::parse("\"open\n"), SchemaError);
    CHECK(csv::escape("plain") == "plain");
    CHECK(csv::escape("a,\"b\"") == "\"a,\"\"b\"\"\"");
}
