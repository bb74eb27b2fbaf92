// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any FAIL.

#include "fixtures.hpp"

#include "subvis/cli.hpp"
#include "subvis/diversity.hpp"
#include "subvis/errors.hpp"
#include "subvis/ingest.hpp"
#include "subvis/metrics.hpp"
#include "subvis/pipeline.hpp"
#include "subvis/success_index.hpp"
#include "subvis/synth.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

using namespace subvis;
using namespace subvis::testing;
namespace fs = std::filesystem;

namespace {

// Tolerances and limits, all fixed here.
constexpr double kOracleTol = 1e-12;
constexpr double kDiversityTol = 1e-9;
constexpr double kFidelityTol = 0.05;
constexpr double kFidelityMaxF0 = 0.05;
constexpr double kRuntimeOracleSec = 10.0;
constexpr double kRuntimeQualitativeSec = 60.0;
constexpr double kRuntimeRealSec = 300.0;
constexpr std::uint64_t kQualitativeSeed = 20240601;
constexpr std::uint64_t kFidelitySeed = 777;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Verdict {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what)
    {
        if (!ok) {
            pass = false;
            detail << " [failed: " << what << "]";
        }
    }
};

int failures = 0;

void report(int id, const std::string& name, const std::function<void(Verdict&)>& body)
{
    Verdict v;
    try {
        body(v);
    } catch (const std::exception& e) {
        v.pass = false;
        v.detail << " [exception: " << e.what() << "]";
    }
    if (!v.pass) {
        ++failures;
    }
    std::cout << (v.pass ? "PASS" : "FAIL") << " " << id << " " << name << ":"
              << v.detail.str() << std::endl;
}

CitationDistribution dist(const std::vector<std::int64_t>& counts)
{
    return CitationDistribution::from_counts(counts);
}

struct RandomPairs {
    std::vector<std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>>> pairs;
};

RandomPairs const& oracle_pairs()
{
    static RandomPairs const cached = [] {
        RandomPairs p;
        std::mt19937_64 rng(1);
        for (int i = 0; i < 200; ++i) {
            auto a = random_counts(rng, 200, 50);
            auto b = random_counts(rng, 200, 50);
            p.pairs.emplace_back(std::move(a), std::move(b));
        }
        return p;
    }();
    return cached;
}

// -------------------------------------------------------------------------------------------------

void exact_oracle(Verdict& v)
{
    auto const start = Clock::now();
    double worst = 0.0;
    for (auto const& [a, b] : oracle_pairs().pairs) {
        auto const s = success_exact(dist(a), dist(b)).s_tr;
        worst = std::max(worst, std::abs(s - brute_force_success(a, b)));
    }
    auto const elapsed = seconds_since(start);
    v.detail << " 200 pairs, max |exact - enumeration| = " << worst << ", " << elapsed << " s";
    v.require(worst <= kOracleTol, "oracle tolerance");
    v.require(elapsed < kRuntimeOracleSec, "runtime");
}

void complement(Verdict& v)
{
    double worst = 0.0;
    for (auto const& [a, b] : oracle_pairs().pairs) {
        auto const ab = success_exact(dist(a), dist(b)).s_tr;
        auto const ba = success_exact(dist(b), dist(a)).s_tr;
        worst = std::max(worst, std::abs(ab + ba - 1.0));
    }
    v.detail << " max |S_ab + S_ba - 1| = " << worst;
    v.require(worst <= kOracleTol, "complement tolerance");
}

void if_formula(Verdict& v)
{
    v.require(success_from_if(1.0, 1.0, 0.0).s_tr == 0.5, "rho = 1 gives 0.5");
    double worst = 0.0;
    double prev_approx = -1.0;
    double prev_simple = -1.0;
    bool increasing = true;
    for (int i = 0; i < 50; ++i) {
        auto const rho = 0.1 * std::pow(100.0, i / 49.0);
        auto const approx = success_from_if(rho, 1.0, 0.0).s_tr;
        auto const simple = success_simplified(rho).s_tr;
        worst = std::max(worst, std::abs(approx - simple));
        increasing = increasing && approx > prev_approx && simple > prev_simple;
        prev_approx = approx;
        prev_simple = simple;
    }
    v.detail << " 50 rho in [0.1, 10], max |approx - simplified| = " << worst;
    v.require(worst <= kOracleTol, "agreement");
    v.require(increasing, "strictly increasing");
}

void if_fidelity(Verdict& v)
{
    synth::SynthConfig cfg;
    cfg.seed = kFidelitySeed;
    cfg.years = YearRange(2000, 2003);
    cfg.fitness_sigma = 0.9;
    double const base = 12.0;
    std::vector<std::pair<std::string, double>> const subfields = {
        {"01.10", 1.0}, {"02.20", 0.55}, {"03.30", 0.75}, {"04.40", 1.4}, {"05.50", 1.9}};
    synth::JournalSpec journal{"J", {}};
    for (auto const& [key, factor] : subfields) {
        journal.subfields.push_back({SubfieldKey(key), 1500, base * factor});
    }
    cfg.journals = {journal};
    auto const corpus = synth::generate(cfg);

    RelevanceConfig rc;
    int const year = 2003;
    GroupKey const ref{"J", SubfieldKey("01.10")};
    auto const r = group_distribution(corpus, ref, year, rc);
    v.detail << " reference f0 = " << r.f0();
    v.require(r.f0() < kFidelityMaxF0, "reference f0 below threshold");

    int compared = 0;
    double worst = 0.0;
    for (std::size_t i = 1; i < subfields.size(); ++i) {
        auto const t = group_distribution(corpus, {"J", SubfieldKey(subfields[i].first)}, year, rc);
        auto const rho = t.mean_citations() / r.mean_citations();
        if (rho < 0.5 || rho > 2.0) {
            continue;
        }
        auto const exact = success_exact(t, r).s_tr;
        auto const approx = success_from_if(t.mean_citations(), r.mean_citations(), r.f0()).s_tr;
        worst = std::max(worst, std::abs(exact - approx));
        ++compared;
    }
    v.detail << ", " << compared << " targets with rho in [0.5, 2], max |exact - approx| = " << worst;
    v.require(compared >= 3, "enough targets in range");
    v.require(worst <= kFidelityTol, "fidelity tolerance");
}

void diversity_anchors(Verdict& v)
{
    double worst = 0.0;
    for (int n : {1, 2, 10, 100}) {
        std::vector<double> const w(static_cast<std::size_t>(n), 1.0);
        worst = std::max(worst, std::abs(true_diversity(w) - n));
    }
    v.detail << " max |D - N| over uniform N in {1, 2, 10, 100} = " << worst;
    v.require(worst <= kDiversityTol, "uniform anchors");
    v.require(true_diversity(std::vector<double>{42.0}) == 1.0, "single subfield");

    std::vector<double> const split = {3.0, 3.0, 1.0, 2.0};
    std::vector<double> const merged = {6.0, 1.0, 2.0};
    v.require(true_diversity(merged) < true_diversity(split), "merging lowers D");
}

void impact_factor_fixture(Verdict& v)
{
    auto const corpus = six_paper_fixture();
    GroupFilter const sub{"J", SubfieldKey("05.45")};
    auto const point = impact_factor(corpus, sub, 2015);
    v.detail << " IF(2015) = " << point.value;
    v.require(point.value == 1.5, "IF exactly 1.5");

    double worst = 0.0;
    for (auto const& filter : {sub, GroupFilter{"J", std::nullopt}}) {
        auto const window = impact_window_papers(corpus, filter, 2015);
        auto const mean =
            citation_distribution(corpus, window, YearRange(2015, 2015)).mean_citations();
        worst = std::max(worst, std::abs(impact_factor(corpus, filter, 2015).value - mean));
    }
    v.detail << ", max |IF - window mean| = " << worst;
    v.require(worst <= kOracleTol, "agreement with distribution mean");
}

void relevance_boundary(Verdict& v)
{
    std::vector<Paper> papers;
    auto add = [&](const std::string& key, int year, int n) {
        for (int i = 0; i < n; ++i) {
            papers.push_back(make_paper(key + "-" + std::to_string(year) + "-" + std::to_string(i),
                                        "J", year, {key}));
        }
    };
    add("05.45", 2014, 30);
    add("05.45", 2015, 20);
    add("12.38", 2014, 29);
    add("12.38", 2015, 20);
    Corpus corpus(std::move(papers), {});
    auto const keys = relevant_subfields(corpus, "J", 2015, RelevanceConfig{});
    v.require(keys.size() == 1 && keys[0].str() == "05.45", "50 included, 49 excluded");
    v.detail << " relevant with default threshold: " << keys.size();
}

synth::SynthConfig qualitative_config()
{
    synth::SynthConfig cfg;
    cfg.seed = kQualitativeSeed;
    cfg.years = YearRange(2000, 2010);
    cfg.journals = {
        {"J1", {{SubfieldKey("05.45"), 300, 3.0}, {SubfieldKey("12.38"), 300, 1.0}}},
        {"J2", {{SubfieldKey("47.65"), 300, 3.0}, {SubfieldKey("89.20"), 300, 1.0}}},
    };
    return cfg;
}

void qualitative(Verdict& v)
{
    auto const start = Clock::now();
    auto const corpus = synth::generate(qualitative_config());
    RelevanceConfig rc;
    int const year = 2010;

    auto const jvj = journal_vs_journal(corpus, "J1", "J2", year, rc);
    v.detail << " journal_vs_journal = " << jvj.result.s_tr;
    v.require(jvj.result.s_tr >= 0.45 && jvj.result.s_tr <= 0.55, "(a) journals comparable");

    double intra = 0.0;
    for (std::string const j : {"J1", "J2"}) {
        std::vector<std::string> const one = {j};
        auto const groups = matrix_groups(corpus, one, year, rc);
        intra = std::max(intra, pairwise_matrix(corpus, groups, year, rc).summary().max);
    }
    v.detail << ", max intra-journal = " << intra;
    v.require(intra > 0.70, "(b) intra-journal gap");

    bool diversity_ok = true;
    double worst_cv = 1e9;
    for (std::string const j : {"J1", "J2"}) {
        auto const by_papers = true_diversity(subfield_weights(corpus, j, year, WeightMode::papers, rc));
        auto const by_cites =
            true_diversity(subfield_weights(corpus, j, year, WeightMode::citations, rc));
        diversity_ok = diversity_ok && by_cites < by_papers;
        v.detail << ", " << j << " D papers/citations = " << by_papers << "/" << by_cites;
        auto const rows = subfield_if_dispersion(corpus, j, YearRange(year, year), rc);
        if (rows.empty() || !rows[0].cv) {
            worst_cv = -1.0;
        } else {
            worst_cv = std::min(worst_cv, *rows[0].cv);
        }
    }
    v.detail << ", min cv = " << worst_cv;
    v.require(diversity_ok, "(c) citation-mode below paper-mode diversity");
    v.require(worst_cv > 0.3, "(d) cv above 0.3");

    auto const elapsed = seconds_since(start);
    v.detail << ", " << elapsed << " s";
    v.require(elapsed < kRuntimeQualitativeSec, "runtime");
}

// -------------------------------------------------------------------------------------------------

bool real_data(Verdict& v)
{
    auto const* papers = std::getenv("SUBVIS_APS_PAPERS");
    auto const* citations = std::getenv("SUBVIS_APS_CITATIONS");
    if (!papers || !citations) {
        return false;
    }
    std::string const journal = std::getenv("SUBVIS_APS_JOURNAL") ? std::getenv("SUBVIS_APS_JOURNAL")
                                                                   : "PRL";
    auto const start = Clock::now();
    auto const corpus = load_corpus(papers, citations, Policy::lenient).corpus;
    RelevanceConfig rc;

    auto const n_relevant = relevant_subfields(corpus, journal, 2015, rc).size();
    auto const d_papers =
        true_diversity(subfield_weights(corpus, journal, 2015, WeightMode::papers, rc));
    auto const d_cites =
        true_diversity(subfield_weights(corpus, journal, 2015, WeightMode::citations, rc));
    auto const rows = subfield_if_dispersion(corpus, journal, YearRange(1985, 1995), rc);
    double peak_cv = 0.0;
    int peak_year = 0;
    for (auto const& r : rows) {
        if (r.cv && *r.cv > peak_cv) {
            peak_cv = *r.cv;
            peak_year = r.year;
        }
    }
    auto const elapsed = seconds_since(start);

    v.detail << " relevant = " << n_relevant << ", D papers = " << d_papers
             << ", D citations = " << d_cites << ", cv peak " << peak_cv << " in " << peak_year
             << ", " << elapsed << " s";
    v.require(n_relevant >= 105 && n_relevant <= 125, "relevant count");
    v.require(std::abs(d_papers - 90.0) <= 9.0, "paper-mode diversity");
    v.require(std::abs(d_cites - 78.0) <= 7.8, "citation-mode diversity");
    v.require(std::abs(peak_cv - 0.75) <= 0.1, "cv peak value");
    v.require(peak_year >= 1988 && peak_year <= 1992, "cv peak year");
    v.require(elapsed < kRuntimeRealSec, "runtime");
    return true;
}

// -------------------------------------------------------------------------------------------------

std::string run_cli(std::vector<std::string> args, int& code)
{
    std::ostringstream out;
    std::ostringstream err;
    code = cli::run(args, out, err);
    return out.str();
}

std::string slurp(const fs::path& path)
{
    std::ifstream in(path, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), {});
}

/// True when a CSV has a data row after its header, or a JSON table has a row.
bool has_rows(const std::string& out)
{
    if (out.starts_with("{")) {
        return out.find("\"rows\": [\n") != std::string::npos;
    }
    int lines = 0;
    std::istringstream in(out);
    for (std::string line; std::getline(in, line);) {
        lines += line.starts_with("#") ? 0 : 1;
    }
    return lines >= 2;
}

void cli_determinism(Verdict& v)
{
    auto const dir = fs::temp_directory_path() / "subvis_acceptance";
    fs::create_directories(dir);
    auto cfg = qualitative_config();
    cfg.years = YearRange(2000, 2006);
    cfg.fitness_sigma = 0.6;
    cfg.attachment_exponent = 0.5;
    std::ofstream(dir / "synth.json") << cfg.to_json().dump();

    // synth itself: two runs must write identical files
    std::string files[2][2];
    for (int run = 0; run < 2; ++run) {
        auto const p = (dir / ("papers" + std::to_string(run) + ".csv")).string();
        auto const c = (dir / ("citations" + std::to_string(run) + ".csv")).string();
        int code = 0;
        run_cli({"synth", "--synth-config", (dir / "synth.json").string(), "--papers", p,
                 "--citations", c, "--no-timestamp"},
                code);
        v.require(code == 0, "synth exit code");
        files[run][0] = slurp(p);
        files[run][1] = slurp(c);
    }
    v.require(files[0][0] == files[1][0] && files[0][1] == files[1][1], "synth output");

    std::vector<std::string> const input = {"--papers", (dir / "papers0.csv").string(),
                                            "--citations", (dir / "citations0.csv").string(),
                                            "--no-timestamp", "--years", "2002:2006"};
    std::vector<std::vector<std::string>> const commands = {
        {"validate"},
        {"if", "--journal", "J1"},
        {"dispersion", "--journal", "J2"},
        {"diversity", "--journal", "J1"},
        {"matrix", "--journal", "J1"},
        {"matrix", "--journal", "J1", "--journal-b", "J2", "--table", "summary"},
        {"matrix", "--groups", "J1:05.45,J1:12.38,J2:47.65", "--format", "json"},
        {"compare", "--journal", "J1", "--journal-b", "J2"},
    };
    int checked = 0;
    for (auto const& command : commands) {
        for (auto const& format : {"csv", "json"}) {
            std::string reference;
            for (auto const& threads : {"1", "1", "2", "4", "8"}) {
                auto args = command;
                args.insert(args.end(), input.begin(), input.end());
                if (std::find(args.begin(), args.end(), "--format") == args.end()) {
                    args.insert(args.end(), {"--format", format});
                }
                args.insert(args.end(), {"--threads", threads});
                int code = 0;
                auto const out = run_cli(args, code);
                if (code != 0) {
                    v.require(false, command[0] + " exit code " + std::to_string(code));
                }
                if (reference.empty()) {
                    reference = out;
                    if (!has_rows(out)) {
                        v.require(false, command[0] + " produced no rows");
                    }
                } else if (out != reference) {
                    v.require(false, command[0] + " output differs at --threads " + threads);
                }
                ++checked;
            }
        }
    }
    v.detail << " " << checked << " runs over " << commands.size() + 1
             << " command lines compared byte for byte";
}

} // namespace

int main()
{
    report(1, "exact success index matches pair enumeration", exact_oracle);
    report(2, "complement identity", complement);
    report(3, "IF-based formula consistency", if_formula);
    report(4, "IF-based approximation fidelity", if_fidelity);
    report(5, "diversity bounds and anchors", diversity_anchors);
    report(6, "impact factor hand check", impact_factor_fixture);
    report(7, "relevance boundary", relevance_boundary);
    report(8, "qualitative findings on a synthetic corpus", qualitative);

    Verdict aps;
    bool ran = false;
    try {
        ran = real_data(aps);
    } catch (const std::exception& e) {
        ran = true;
        aps.pass = false;
        aps.detail << " [exception: " << e.what() << "]";
    }
    if (!ran) {
        std::cout << "SKIP 9 real-corpus reproduction: set SUBVIS_APS_PAPERS and "
                     "SUBVIS_APS_CITATIONS to run"
                  << std::endl;
    } else {
        if (!aps.pass) {
            ++failures;
        }
        std::cout << (aps.pass ? "PASS" : "FAIL") << " 9 real-corpus reproduction:"
                  << aps.detail.str() << std::endl;
    }

    report(10, "CLI determinism across runs and thread counts", cli_determinism);

    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " failed")
              << std::endl;
    return failures == 0 ? 0 : 1;
}
