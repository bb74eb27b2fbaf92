#include "subvis/cli.hpp"

#include "subvis/csv.hpp"
#include "subvis/errors.hpp"
#include "subvis/ingest.hpp"
#include "subvis/pipeline.hpp"
#include "subvis/synth.hpp"

#include <charconv>
#include <cmath>
#include <chrono>
#include <ctime>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <thread>
#include <variant>

#include "CLI11.hpp"
#include "json.hpp"

namespace subvis::cli {

using nlohmann::json;

std::string format_number(double value)
{
    if (std::isnan(value)) {
        return "nan";
    }
    if (std::isinf(value)) {
        return value > 0 ? "inf" : "-inf";
    }
    char buf[64];
    auto const [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    std::string text(buf, end);
    if (text.find_first_of(".e") == std::string::npos) {
        text += ".0";
    }
    return text;
}

namespace {

// =================================================================================================
//      Tables
// =================================================================================================

using Cell = std::variant<std::monostate, std::int64_t, double, std::string>;

struct Table {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

Cell cell(std::optional<double> v)
{
    return v ? Cell{*v} : Cell{};
}

Cell cell(std::size_t v)
{
    return Cell{static_cast<std::int64_t>(v)};
}

std::string cell_text(const Cell& c)
{
    struct Visitor {
        std::string operator()(std::monostate) const { return ""; }
        std::string operator()(std::int64_t v) const { return std::to_string(v); }
        std::string operator()(double v) const { return format_number(v); }
        std::string operator()(const std::string& v) const { return v; }
    };
    return std::visit(Visitor{}, c);
}

json cell_json(const Cell& c)
{
    struct Visitor {
        json operator()(std::monostate) const { return nullptr; }
        json operator()(std::int64_t v) const { return v; }
        json operator()(double v) const { return v; }
        json operator()(const std::string& v) const { return v; }
    };
    return std::visit(Visitor{}, c);
}

// =================================================================================================
//      Run configuration
// =================================================================================================

/// Everything a command may read, after merging flags, config file and defaults.
struct RunConfig {
    std::string command;
    std::optional<std::string> papers;
    std::optional<std::string> citations;
    std::optional<std::string> journal;
    std::optional<std::string> journal_b;
    std::vector<std::string> groups;
    std::optional<std::string> years;
    RelevanceConfig relevance;
    std::string format = "csv";
    std::optional<std::string> out;
    Policy policy = Policy::lenient;
    unsigned threads = 1;
    std::optional<std::uint64_t> seed;
    bool no_timestamp = false;
    std::string mode = "both";
    std::string table;
    std::optional<std::string> synth_config;

    json echo() const
    {
        json doc;
        doc["command"] = command;
        auto put = [&](const char* key, const auto& v) {
            if (v) {
                doc[key] = *v;
            }
        };
        put("papers", papers);
        put("citations", citations);
        put("journal", journal);
        put("journal_b", journal_b);
        if (!groups.empty()) {
            doc["groups"] = groups;
        }
        put("years", years);
        doc["min_papers"] = relevance.min_papers;
        doc["window"] = relevance.window_years;
        doc["if_window"] = relevance.impact_window_years;
        doc["format"] = format;
        doc["policy"] = to_string(policy);
        put("seed", seed);
        doc["mode"] = mode;
        if (!table.empty()) {
            doc["table"] = table;
        }
        put("synth_config", synth_config);
        return doc;
    }
};

/// Raw flag values; `given` tells whether a flag appeared on the command line.
struct Flags {
    std::string papers, citations, journal, journal_b, groups, years, format, out, policy, mode,
        table, config, synth_config;
    int min_papers = 50;
    int window = 2;
    int if_window = 2;
    unsigned threads = 1;
    std::uint64_t seed = 0;
    bool no_timestamp = false;
    std::map<std::string, CLI::Option*> options;

    bool given(const std::string& name) const
    {
        auto const it = options.find(name);
        return it != options.end() && it->second->count() > 0;
    }
};

void add_flags(CLI::App& app, Flags& f)
{
    auto& o = f.options;
    o["papers"] = app.add_option("--papers", f.papers, "papers CSV (gzip allowed)");
    o["citations"] = app.add_option("--citations", f.citations, "citations CSV (gzip allowed)");
    o["journal"] = app.add_option("--journal", f.journal, "journal name");
    o["journal_b"] = app.add_option("--journal-b", f.journal_b, "second journal");
    o["groups"] = app.add_option("--groups", f.groups, "JOURNAL:NN.NN list, comma separated");
    o["years"] = app.add_option("--years", f.years, "inclusive year range A:B");
    o["min_papers"] = app.add_option("--min-papers", f.min_papers, "relevance threshold");
    o["window"] = app.add_option("--window", f.window, "relevance window in years");
    o["if_window"] = app.add_option("--if-window", f.if_window, "impact factor window in years");
    o["format"] = app.add_option("--format", f.format, "csv or json");
    o["out"] = app.add_option("--out", f.out, "output file (default standard output)");
    o["policy"] = app.add_option("--policy", f.policy, "strict or lenient");
    o["threads"] = app.add_option("--threads", f.threads, "worker threads");
    o["seed"] = app.add_option("--seed", f.seed, "generator seed");
    o["no_timestamp"] = app.add_flag("--no-timestamp", f.no_timestamp, "omit the run timestamp");
    o["mode"] = app.add_option("--mode", f.mode, "diversity weights: papers, citations or both");
    o["table"] = app.add_option("--table", f.table, "matrix table for CSV: cells or summary");
    o["config"] = app.add_option("--config", f.config, "JSON file with default flag values");
    o["synth_config"] = app.add_option("--synth-config", f.synth_config, "generator JSON");
}

std::string join_list(const json& v)
{
    if (v.is_string()) {
        return v.get<std::string>();
    }
    std::string out;
    for (auto const& item : v) {
        if (!out.empty()) {
            out += ",";
        }
        out += item.get<std::string>();
    }
    return out;
}

std::vector<std::string> split(const std::string& text, char sep)
{
    std::vector<std::string> out;
    std::string piece;
    std::istringstream in(text);
    while (std::getline(in, piece, sep)) {
        if (!piece.empty()) {
            out.push_back(piece);
        }
    }
    return out;
}

/// Flags override the config file, which overrides defaults.
RunConfig resolve(const std::string& command, const Flags& f)
{
    json file;
    if (f.given("config")) {
        std::ifstream in(f.config);
        if (!in) {
            throw InvalidConfig("cannot read config file '" + f.config + "'");
        }
        try {
            file = json::parse(in);
        } catch (const json::exception& e) {
            throw InvalidConfig(std::string("config file: ") + e.what());
        }
        if (!file.is_object()) {
            throw InvalidConfig("config file must hold a JSON object");
        }
    }

    auto pick = [&](const std::string& key, const auto& flag_value) {
        using T = std::decay_t<decltype(flag_value)>;
        if (f.given(key)) {
            return std::optional<T>(flag_value);
        }
        if (file.contains(key)) {
            try {
                if constexpr (std::is_same_v<T, std::string>) {
                    if (key == "groups") {
                        return std::optional<T>(join_list(file[key]));
                    }
                }
                return std::optional<T>(file[key].template get<T>());
            } catch (const json::exception&) {
                throw InvalidConfig("config key '" + key + "' has the wrong type");
            }
        }
        return std::optional<T>();
    };

    RunConfig cfg;
    cfg.command = command;
    cfg.papers = pick("papers", f.papers);
    cfg.citations = pick("citations", f.citations);
    cfg.journal = pick("journal", f.journal);
    cfg.journal_b = pick("journal_b", f.journal_b);
    if (auto g = pick("groups", f.groups)) {
        cfg.groups = split(*g, ',');
    }
    cfg.years = pick("years", f.years);
    cfg.relevance.min_papers = pick("min_papers", f.min_papers).value_or(50);
    cfg.relevance.window_years = pick("window", f.window).value_or(2);
    cfg.relevance.impact_window_years = pick("if_window", f.if_window).value_or(2);
    cfg.relevance.validate();
    cfg.format = pick("format", f.format).value_or("csv");
    if (cfg.format != "csv" && cfg.format != "json") {
        throw InvalidConfig("format must be csv or json");
    }
    cfg.out = pick("out", f.out);
    cfg.policy = parse_policy(pick("policy", f.policy).value_or("lenient"));
    cfg.threads = pick("threads", f.threads)
                      .value_or(std::max(1u, std::thread::hardware_concurrency()));
    if (cfg.threads < 1) {
        throw InvalidConfig("threads must be at least 1");
    }
    cfg.seed = pick("seed", f.seed);
    cfg.no_timestamp = pick("no_timestamp", f.no_timestamp).value_or(false);
    cfg.mode = pick("mode", f.mode).value_or("both");
    if (cfg.mode != "both") {
        parse_weight_mode(cfg.mode);
    }
    cfg.table = pick("table", f.table).value_or("");
    cfg.synth_config = pick("synth_config", f.synth_config);
    return cfg;
}

// =================================================================================================
//      Commands
// =================================================================================================

const std::string& require(const std::optional<std::string>& v, const char* flag)
{
    if (!v || v->empty()) {
        throw InvalidConfig(std::string("missing --") + flag);
    }
    return *v;
}

LoadResult load(const RunConfig& cfg)
{
    return load_corpus(require(cfg.papers, "papers"), require(cfg.citations, "citations"),
                       cfg.policy);
}

YearRange years_of(const RunConfig& cfg, const Corpus& corpus)
{
    if (cfg.years) {
        return YearRange::parse(*cfg.years);
    }
    if (auto span = corpus.year_span()) {
        return *span;
    }
    throw InvalidConfig("empty corpus and no --years given");
}

std::vector<Table> cmd_validate(const RunConfig& cfg)
{
    auto const [corpus, r] = load(cfg);
    Table t{"report",
            {"n_papers", "n_edges_read", "n_edges_kept", "n_edges_dropped_dangling",
             "n_self_citations_dropped", "n_duplicate_edges", "n_duplicate_ids",
             "n_malformed_pacs", "n_duplicate_pacs"},
            {}};
    t.rows.push_back({cell(r.n_papers), cell(r.n_edges_read), cell(r.n_edges_kept),
                      cell(r.n_edges_dropped_dangling), cell(r.n_self_citations_dropped),
                      cell(r.n_duplicate_edges), cell(r.n_duplicate_ids),
                      cell(r.n_malformed_pacs), cell(r.n_duplicate_pacs)});
    return {t};
}

std::vector<Table> cmd_if(const RunConfig& cfg)
{
    auto const corpus = load(cfg).corpus;
    auto const& journal = require(cfg.journal, "journal");
    auto const series =
        subfield_if_series(corpus, journal, years_of(cfg, corpus), cfg.relevance, cfg.threads);
    Table t{"impact_factor", {"year", "subfield", "if", "n_papers", "n_citations"}, {}};
    for (auto const& [year, row] : series) {
        for (auto const& [key, point] : row) {
            t.rows.push_back({Cell{std::int64_t{year}}, Cell{key.str()}, Cell{point.value},
                              Cell{point.n_papers_window}, Cell{point.n_citations}});
        }
    }
    return {t};
}

std::vector<Table> cmd_dispersion(const RunConfig& cfg)
{
    auto const corpus = load(cfg).corpus;
    auto const& journal = require(cfg.journal, "journal");
    auto const rows = subfield_if_dispersion(corpus, journal, years_of(cfg, corpus), cfg.relevance,
                                             cfg.threads);
    Table t{"dispersion",
            {"year", "mean", "std", "cv", "journal_if", "n_subfields", "n_subfield_papers",
             "n_journal_papers"},
            {}};
    for (auto const& r : rows) {
        t.rows.push_back({Cell{std::int64_t{r.year}}, cell(r.mean), cell(r.std), cell(r.cv),
                          cell(r.journal_if), cell(r.n_subfields), Cell{r.n_subfield_papers},
                          Cell{r.n_journal_papers}});
    }
    return {t};
}

std::vector<Table> cmd_diversity(const RunConfig& cfg)
{
    auto const corpus = load(cfg).corpus;
    auto const& journal = require(cfg.journal, "journal");
    auto const years = years_of(cfg, corpus);
    std::vector<WeightMode> modes;
    if (cfg.mode == "both") {
        modes = {WeightMode::papers, WeightMode::citations};
    } else {
        modes = {parse_weight_mode(cfg.mode)};
    }
    Table t{"diversity", {"year", "mode", "n_subfields", "n_observed_subfields", "diversity"}, {}};
    std::map<std::pair<int, int>, std::vector<Cell>> ordered;
    for (std::size_t m = 0; m < modes.size(); ++m) {
        for (auto const& r :
             diversity_series(corpus, journal, years, modes[m], cfg.relevance, cfg.threads)) {
            ordered[{r.year, static_cast<int>(m)}] = {
                Cell{std::int64_t{r.year}}, Cell{std::string(to_string(modes[m]))},
                cell(r.n_subfields), cell(r.n_observed_subfields), Cell{r.diversity}};
        }
    }
    for (auto& [key, row] : ordered) {
        t.rows.push_back(std::move(row));
    }
    return {t};
}

std::vector<Table> cmd_matrix(const RunConfig& cfg)
{
    std::vector<GroupKey> explicit_groups;
    for (auto const& g : cfg.groups) {
        explicit_groups.push_back(parse_group_key(g));
    }
    if (!cfg.groups.empty() && explicit_groups.size() < 2) {
        throw InsufficientGroups("--groups needs at least two groups");
    }
    if (cfg.groups.empty()) {
        require(cfg.journal, "journal");
    }

    auto const corpus = load(cfg).corpus;
    auto const years = years_of(cfg, corpus);

    std::vector<std::string> journals;
    if (cfg.journal) {
        journals.push_back(*cfg.journal);
    }
    if (cfg.journal_b) {
        journals.push_back(*cfg.journal_b);
    }
    auto const scope = cfg.journal_b && cfg.groups.empty() ? PairScope::cross_journal
                                                            : PairScope::all;

    Table cells{"cells",
                {"year", "a_journal", "a_subfield", "b_journal", "b_subfield", "value",
                 "orientation"},
                {}};
    Table summary{"summary",
                  {"year", "n_groups", "n_pairs", "median", "max", "argmax_a", "argmax_b",
                   "argmax_orientation"},
                  {}};

    for (int year = years.first(); year <= years.last(); ++year) {
        auto const groups =
            explicit_groups.empty() ? matrix_groups(corpus, journals, year, cfg.relevance)
                                    : explicit_groups;
        std::optional<PairwiseMatrix> m;
        try {
            m = pairwise_matrix(corpus, groups, year, cfg.relevance, scope, cfg.threads);
        } catch (const InsufficientGroups&) {
            if (!explicit_groups.empty()) {
                throw;
            }
            continue;
        }
        auto const& labels = m->labels();
        for (auto const& c : m->cells()) {
            cells.rows.push_back({Cell{std::int64_t{year}}, Cell{labels[c.row].journal},
                                  Cell{labels[c.row].subfield.str()}, Cell{labels[c.col].journal},
                                  Cell{labels[c.col].subfield.str()},
                                  Cell{c.value.result.s_tr},
                                  Cell{std::string(to_string(c.value.orientation))}});
        }
        auto const& s = m->summary();
        summary.rows.push_back({Cell{std::int64_t{year}}, cell(labels.size()), cell(s.n_pairs),
                                Cell{s.median}, Cell{s.max},
                                Cell{labels[s.argmax_row].to_string()},
                                Cell{labels[s.argmax_col].to_string()},
                                Cell{std::string(to_string(s.argmax_orientation))}});
    }

    if (cfg.format == "csv") {
        if (cfg.table == "summary") {
            return {summary};
        }
        if (!cfg.table.empty() && cfg.table != "cells") {
            throw InvalidConfig("--table must be cells or summary");
        }
        return {cells};
    }
    return {cells, summary};
}

std::vector<Table> cmd_compare(const RunConfig& cfg)
{
    auto const corpus = load(cfg).corpus;
    auto const& a = require(cfg.journal, "journal");
    auto const& b = require(cfg.journal_b, "journal-b");
    auto const years = years_of(cfg, corpus);
    Table t{"compare", {"year", "value", "orientation", "n_a", "n_b"}, {}};
    for (int year = years.first(); year <= years.last(); ++year) {
        try {
            auto const r = journal_vs_journal(corpus, a, b, year, cfg.relevance);
            // n_t/n_r follow the winning orientation; report them per journal
            auto const swapped = r.orientation == Orientation::second_over_first;
            auto const n_a = swapped ? r.result.n_r : r.result.n_t;
            auto const n_b = swapped ? r.result.n_t : r.result.n_r;
            t.rows.push_back({Cell{std::int64_t{year}}, Cell{r.result.s_tr},
                              Cell{std::string(to_string(r.orientation))}, Cell{n_a}, Cell{n_b}});
        } catch (const EmptyWindow&) {
        }
    }
    return {t};
}

std::vector<Table> cmd_synth(const RunConfig& cfg)
{
    auto const& path = require(cfg.synth_config, "synth-config");
    std::ifstream in(path);
    if (!in) {
        throw InvalidConfig("cannot read generator config '" + path + "'");
    }
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        throw InvalidConfig(std::string("generator config: ") + e.what());
    }
    auto scfg = synth::SynthConfig::from_json(doc);
    if (cfg.seed) {
        scfg.seed = *cfg.seed;
    }
    auto const corpus = synth::generate(scfg);
    export_corpus(corpus, require(cfg.papers, "papers"), require(cfg.citations, "citations"));

    Table t{"synth", {"seed", "n_papers", "n_edges"}, {}};
    t.rows.push_back({Cell{std::to_string(scfg.seed)}, cell(corpus.size()),
                      cell(corpus.edges().size())});
    return {t};
}

// =================================================================================================
//      Output
// =================================================================================================

std::string timestamp()
{
    auto const now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

json metadata(const RunConfig& cfg)
{
    json meta;
    meta["tool"] = "subvis";
    meta["version"] = std::string(kVersion);
    meta["config"] = cfg.echo();
    if (!cfg.no_timestamp) {
        meta["timestamp"] = timestamp();
    }
    return meta;
}

void write_csv(std::ostream& os, const RunConfig& cfg, const std::vector<Table>& tables)
{
    auto const meta = metadata(cfg);
    os << "# tool: subvis " << kVersion << "\n";
    os << "# config: " << meta["config"].dump() << "\n";
    if (meta.contains("timestamp")) {
        os << "# timestamp: " << meta["timestamp"].get<std::string>() << "\n";
    }
    for (auto const& t : tables) {
        os << csv::join(t.columns) << "\n";
        for (auto const& row : t.rows) {
            csv::Row fields;
            for (auto const& c : row) {
                fields.push_back(cell_text(c));
            }
            os << csv::join(fields) << "\n";
        }
    }
}

void write_json(std::ostream& os, const RunConfig& cfg, const std::vector<Table>& tables)
{
    json doc;
    doc["meta"] = metadata(cfg);
    for (auto const& t : tables) {
        json rows = json::array();
        for (auto const& row : t.rows) {
            json obj = json::object();
            for (std::size_t i = 0; i < row.size(); ++i) {
                obj[t.columns[i]] = cell_json(row[i]);
            }
            rows.push_back(std::move(obj));
        }
        doc[t.name] = {{"columns", t.columns}, {"rows", rows}};
    }
    os << doc.dump(2) << "\n";
}

} // namespace

// =================================================================================================
//      Entry point
// =================================================================================================

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Subfield visibility analysis for citation corpora", "subvis"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);

    using Command = std::function<std::vector<Table>(const RunConfig&)>;
    struct Sub {
        const char* name;
        const char* help;
        Command fn;
    };
    std::vector<Sub> const subs = {
        {"validate", "load and validate a corpus, print the validation report", cmd_validate},
        {"if", "impact factor of each relevant subfield per year", cmd_if},
        {"dispersion", "mean, std and cv of subfield impact factors per year", cmd_dispersion},
        {"diversity", "relevant subfield count and true diversity per year", cmd_diversity},
        {"matrix", "pairwise success index matrices of subfields per year", cmd_matrix},
        {"compare", "success index between two journals per year", cmd_compare},
        {"synth", "generate a synthetic corpus", cmd_synth},
    };

    std::vector<Flags> flags(subs.size());
    std::vector<CLI::App*> apps;
    for (std::size_t i = 0; i < subs.size(); ++i) {
        auto* sub = app.add_subcommand(subs[i].name, subs[i].help);
        add_flags(*sub, flags[i]);
        apps.push_back(sub);
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForVersion&) {
        out << kVersion << "\n";
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }

    try {
        for (std::size_t i = 0; i < subs.size(); ++i) {
            if (!apps[i]->parsed()) {
                continue;
            }
            auto const cfg = resolve(subs[i].name, flags[i]);
            auto const tables = subs[i].fn(cfg);

            std::ostringstream buffer;
            if (cfg.format == "json") {
                write_json(buffer, cfg, tables);
            } else {
                write_csv(buffer, cfg, tables);
            }
            if (cfg.out) {
                std::ofstream file(*cfg.out, std::ios::binary | std::ios::trunc);
                if (!file || !(file << buffer.str())) {
                    throw IoError("cannot write '" + *cfg.out + "'");
                }
            } else {
                out << buffer.str();
            }
            return exit_ok;
        }
        throw InvariantError("no subcommand was dispatched");
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        switch (e.kind()) {
        case ErrorKind::usage:
            return exit_usage;
        case ErrorKind::data:
            return exit_data;
        case ErrorKind::invariant:
            return exit_internal;
        }
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
    }
    return exit_internal;
}

} // namespace subvis::cli
