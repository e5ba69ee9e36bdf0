#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <exception>
#include <fstream>
#include <iomanip>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <CLI11.hpp>
#include <boost/crc.hpp>
#include <json.hpp>

#include "cache.hpp"
#include "copart/copartition.hpp"
#include "copart/number_theory.hpp"
#include "copart/parity_lab.hpp"
#include "copart/series.hpp"
#include "copart/tables.hpp"
#include "copart/verification.hpp"

#ifndef COPART_VERSION
#define COPART_VERSION "unknown"
#endif

namespace copart::cli {

using json = nlohmann::ordered_json;

namespace {

/// Bad input that got past the parser (limits, ranges). Exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Everything a subcommand produces; rendering is format-independent.
struct Report {
    std::string subcommand;
    json params = json::object();
    std::vector<std::string> columns;
    std::vector<std::vector<json>> rows;
    std::optional<std::string> verdict;
    json extra = json::object();
    std::vector<std::string> notes;
    bool text_header = true;
};

std::string csv_cell(const json& v)
{
    if (v.is_null()) {
        return "";
    }
    if (!v.is_string()) {
        return v.dump();
    }
    const auto& s = v.get_ref<const std::string&>();
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string q = "\"";
    for (char c : s) {
        q += c;
        if (c == '"') {
            q += '"';
        }
    }
    return q + "\"";
}

std::string render_csv(const Report& r)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < r.columns.size(); ++i) {
        os << (i ? "," : "") << r.columns[i];
    }
    os << '\n';
    for (const auto& row : r.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            os << (i ? "," : "") << csv_cell(row[i]);
        }
        os << '\n';
    }
    return os.str();
}

std::string render_json(const Report& r)
{
    json doc;
    doc["subcommand"] = r.subcommand;
    doc["params"] = r.params;
    json rows = json::array();
    for (const auto& row : r.rows) {
        json obj = json::object();
        for (std::size_t i = 0; i < row.size(); ++i) {
            obj[r.columns[i]] = row[i];
        }
        rows.push_back(std::move(obj));
    }
    doc["rows"] = std::move(rows);
    doc["verdict"] = r.verdict ? json(*r.verdict) : json(nullptr);
    for (const auto& [k, v] : r.extra.items()) {
        doc[k] = v;
    }
    return doc.dump(2) + "\n";
}

std::string text_cell(const json& v)
{
    if (v.is_null()) {
        return "-";
    }
    return v.is_string() ? v.get<std::string>() : v.dump();
}

std::string render_text(const Report& r)
{
    std::ostringstream os;
    if (r.text_header) {
        for (std::size_t i = 0; i < r.columns.size(); ++i) {
            os << (i ? "  " : "") << r.columns[i];
        }
        os << '\n';
    }
    for (const auto& row : r.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            os << (i ? "  " : "") << text_cell(row[i]);
        }
        os << '\n';
    }
    for (const auto& n : r.notes) {
        os << n << '\n';
    }
    if (r.verdict) {
        os << "verdict: " << *r.verdict << '\n';
    }
    return os.str();
}

std::string utc_now()
{
    const auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::ostringstream os;
    os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return os.str();
}

void write_file(const std::string& path, const std::string& body)
{
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    f << body;
    if (!f) {
        throw std::runtime_error("cannot write " + path);
    }
}

/// Data file plus a sidecar with everything non-deterministic (time, command line).
void write_outputs(const std::string& path, const std::string& body, const std::string& format,
                   const std::vector<std::string>& args)
{
    write_file(path, body);
    boost::crc_32_type crc;
    crc.process_bytes(body.data(), body.size());
    json meta;
    meta["tool"] = "copart";
    meta["version"] = COPART_VERSION;
    meta["arguments"] = args;
    meta["format"] = format;
    meta["generated_at"] = utc_now();
    meta["bytes"] = body.size();
    meta["crc32"] = crc.checksum();
    write_file(path + ".meta.json", meta.dump(2) + "\n");
}

json params_json(const CpParams& p)
{
    return json{{"a", p.a()}, {"b", p.b()}, {"m", p.m()}};
}

// ---------------------------------------------------------------------------
// coeffs

struct CoeffsArgs {
    int a = 0, b = 0, m = 0;
    int n = 0;
    std::string mode = "exact";
    std::optional<int> limit;
};

Report cmd_coeffs(const CoeffsArgs& args)
{
    const CpParams p(args.a, args.b, args.m);
    const bool exact = args.mode == "exact";
    const int limit = args.limit.value_or(exact ? exact_limit : parity_limit);
    if (args.n > limit) {
        throw UsageError("N = " + std::to_string(args.n) + " exceeds the " + args.mode +
                         "-path limit " + std::to_string(limit) + " (raise it with --limit)");
    }
    Report r;
    r.subcommand = "coeffs";
    r.params = params_json(p);
    r.params["N"] = args.n;
    r.params["mode"] = args.mode;
    r.columns = {"n", "value"};
    if (exact) {
        const auto s = cp_series(p, args.n);
        for (int n = 0; n <= args.n; ++n) {
            // Exact values as strings: they outgrow every JSON number type.
            r.rows.push_back({n, s[n].str()});
        }
    } else {
        const auto s = cp_parity(p, args.n);
        for (int n = 0; n <= args.n; ++n) {
            r.rows.push_back({n, s[n] ? 1 : 0});
        }
    }
    return r;
}

// ---------------------------------------------------------------------------
// enumerate

struct EnumerateArgs {
    int a = 0, b = 0, m = 0;
    int n = 0;
    bool show_crank = false;
    bool show_conjugate = false;
    long long cap = enumerate_limit;
};

Report cmd_enumerate(const EnumerateArgs& args)
{
    const CpParams p(args.a, args.b, args.m);
    const auto total = cp_series(p, args.n)[args.n];
    if (total > args.cap) {
        throw UsageError("cp(" + std::to_string(args.n) + ") = " + total.str() +
                         " copartitions exceeds the enumeration cap " + std::to_string(args.cap) +
                         " (raise it with --cap)");
    }
    Report r;
    r.subcommand = "enumerate";
    r.params = params_json(p);
    r.params["n"] = args.n;
    r.text_header = false;
    r.columns = {"copartition"};
    if (args.show_crank) {
        r.columns.push_back("crank");
    }
    if (args.show_conjugate) {
        r.columns.push_back("conjugate");
    }
    for (const auto& cp : enumerate(p, args.n)) {
        std::vector<json> row{cp.to_string()};
        if (args.show_crank) {
            row.emplace_back(crank(cp));
        }
        if (args.show_conjugate) {
            row.emplace_back(conjugate(cp).to_string());
        }
        r.rows.push_back(std::move(row));
    }
    return r;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyArgs {
    int a = 1, m = 4, N = 2000;
    int nmax = 30;
    std::int64_t Nmax = 10000;
    std::string family = "cp314";
    std::int64_t p = 7;
    int witness_min = 10;
    int amax = 2, bmax = 2, mmax = 3;
    std::vector<int> sizes{4, 9, 14};
};

ProgressionTag parse_family(const std::string& s)
{
    if (s == "cp314") {
        return ProgressionTag::cp314;
    }
    if (s == "cp516") {
        return ProgressionTag::cp516;
    }
    throw UsageError("unknown family '" + s + "' (expected cp314 or cp516)");
}

void add_check(Report& r, const std::string& name, const CheckResult& c)
{
    r.rows.push_back({name, to_string(c.verdict),
                      c.counterexample ? json(*c.counterexample) : json(nullptr), c.detail});
}

void settle_verdict(Report& r)
{
    bool any_fail = false, all_vacuous = !r.rows.empty();
    for (const auto& row : r.rows) {
        any_fail = any_fail || row[1] == "fail";
        all_vacuous = all_vacuous && row[1] == "vacuous";
    }
    r.verdict = any_fail ? "fail" : (all_vacuous ? "vacuous" : "pass");
}

Report cmd_verify(const std::string& target, const VerifyArgs& v)
{
    Report r;
    r.subcommand = "verify";
    r.params["target"] = target;
    r.columns = {"check", "verdict", "counterexample", "detail"};

    const auto am = [&] {
        r.params["a"] = v.a;
        r.params["m"] = v.m;
    };
    if (target == "selfconj") {
        am();
        r.params["nmax"] = v.nmax;
        add_check(r, target, verify_self_conjugate(v.a, v.m, v.nmax));
    } else if (target == "parity-gf") {
        am();
        r.params["N"] = v.N;
        add_check(r, target, verify_parity_gf(v.a, v.m, v.N));
    } else if (target == "eq4") {
        am();
        r.params["N"] = v.N;
        add_check(r, target, verify_mod2_identity_eq4(v.a, v.m, v.N));
    } else if (target == "lacunary") {
        r.params["a"] = v.a;
        r.params["N"] = v.N;
        add_check(r, target, lacunary_odd_support_check(v.a, v.N));
    } else if (target == "progression") {
        const auto tag = parse_family(v.family);
        r.params["family"] = v.family;
        r.params["p"] = v.p;
        r.params["N"] = v.N;
        const auto fam = progression_family(tag, v.p);
        const auto bits = cp_parity(family_params(tag), v.N);
        for (auto res : fam.residues) {
            add_check(r, "n = " + std::to_string(res) + " mod " + std::to_string(fam.modulus),
                      verify_even_progression(bits, fam.modulus, res, v.N));
        }
        r.extra["modulus"] = fam.modulus;
        r.extra["delta"] = fam.delta;
        r.extra["residues"] = fam.residues;
        std::string list;
        for (auto res : fam.residues) {
            list += (list.empty() ? "" : ",") + std::to_string(res);
        }
        r.notes.push_back("residues {" + list + "} mod " + std::to_string(fam.modulus));
    } else if (target == "lemma13") {
        r.params["Nmax"] = v.Nmax;
        add_check(r, target, verify_lemma13(v.Nmax));
    } else if (target == "guarantees-314" || target == "guarantees-516") {
        r.params["N"] = v.N;
        const auto tag = target == "guarantees-314" ? ProgressionTag::cp314 : ProgressionTag::cp516;
        add_check(r, target, verify_guarantees(tag, v.N));
    } else if (target == "predicates") {
        r.params["Nmax"] = v.Nmax;
        add_check(r, target, verify_predicates_vs_brute(v.Nmax));
    } else if (target == "both-parities") {
        am();
        r.params["N"] = v.N;
        r.params["witness_min"] = v.witness_min;
        add_check(r, target, both_parities_prefix_check(v.a, v.m, v.N, v.witness_min));
    } else if (target == "odd-terms") {
        am();
        r.params["Nmax"] = v.Nmax;
        if (v.Nmax > 100000) {
            throw UsageError("odd-terms sweeps to N = Nmax; keep Nmax <= 100000");
        }
        add_check(r, target, odd_term_count_check(v.a, v.m, static_cast<int>(v.Nmax)));
    } else if (target == "andrews") {
        r.params["N"] = v.N;
        r.params["sizes"] = v.sizes;
        add_check(r, target, andrews_mod5_check(v.N, v.sizes));
    } else if (target == "oracle") {
        r.params["amax"] = v.amax;
        r.params["bmax"] = v.bmax;
        r.params["mmax"] = v.mmax;
        r.params["nmax"] = v.nmax;
        add_check(r, target, verify_oracle(v.amax, v.bmax, v.mmax, v.nmax));
    } else {
        throw UsageError("unknown verify target '" + target + "'");
    }
    settle_verdict(r);
    return r;
}

// ---------------------------------------------------------------------------
// tables

struct TablesArgs {
    int which = 1;
    bool compare = false;
    bool exact = false;
    int jobs = 1;
    std::string cache_dir;
};

/// One density report per column; columns are independent, so --jobs spreads them over
/// threads.
std::vector<DensityReport> regenerate(const TableSpec& spec, int jobs,
                                      const std::unique_ptr<ParityCache>& cache)
{
    const int N = spec.checkpoints.back();
    std::vector<std::optional<DensityReport>> slots(spec.columns.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;

    const auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < spec.columns.size();) {
            try {
                const auto& params = spec.columns[i].params;
                const auto bits = cache ? cache->get(params, N) : cp_parity(params, N);
                slots[i] = density_report(params, bits, spec.checkpoints);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) {
                    error = std::current_exception();
                }
            }
        }
    };
    const auto n_threads = std::min<std::size_t>(static_cast<std::size_t>(jobs), slots.size());
    if (n_threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < n_threads; ++t) {
            pool.emplace_back(worker);
        }
    }
    if (error) {
        std::rethrow_exception(error);
    }
    std::vector<DensityReport> out;
    for (auto& s : slots) {
        out.push_back(std::move(*s));
    }
    return out;
}

Report cmd_tables(const TablesArgs& args, bool always_exact)
{
    const auto& spec = table_spec(args.which);
    std::unique_ptr<ParityCache> cache;
    if (!args.cache_dir.empty()) {
        cache = std::make_unique<ParityCache>(args.cache_dir);
    }
    const auto reports = regenerate(spec, args.jobs, cache);

    Report r;
    r.subcommand = "tables";
    r.params["table"] = args.which;
    r.params["checkpoints"] = spec.checkpoints;
    json cols = json::array();
    for (const auto& c : spec.columns) {
        cols.push_back(c.params.label());
    }
    r.params["columns"] = cols;

    if (!args.compare) {
        const bool exact = args.exact || always_exact;
        r.columns = {"n"};
        for (const auto& c : spec.columns) {
            r.columns.push_back(c.params.label());
            if (exact) {
                r.columns.push_back(c.params.label() + "_exact");
            }
        }
        for (std::size_t i = 0; i < spec.checkpoints.size(); ++i) {
            std::vector<json> row{spec.checkpoints[i]};
            for (const auto& rep : reports) {
                row.emplace_back(rep.rounded(i));
                if (exact) {
                    row.emplace_back(rep.exact(i));
                }
            }
            r.rows.push_back(std::move(row));
        }
        return r;
    }

    const auto cmp = compare_table(args.which, reports);
    r.columns = {"n", "column", "printed_header", "computed", "exact", "printed", "status",
                 "counted"};
    std::map<std::string, std::string> headers;
    for (const auto& c : spec.columns) {
        headers[c.params.label()] = c.printed_header.empty() ? c.params.label() : c.printed_header;
    }
    int match = 0, note = 0, bad = 0;
    for (const auto& c : cmp.cells) {
        r.rows.push_back({c.n, c.column, headers[c.column], format_thousandths(c.computed), c.exact,
                          format_thousandths(c.printed), to_string(c.status),
                          c.counted ? "yes" : "no"});
        if (!c.counted) {
            continue;
        }
        match += c.status == CellStatus::match;
        note += c.status == CellStatus::rounding_note;
        bad += c.status == CellStatus::mismatch;
        if (c.status == CellStatus::mismatch) {
            r.notes.push_back("mismatch: " + c.column + " at n = " + std::to_string(c.n) +
                              ": computed " + format_thousandths(c.computed) + " (" + c.exact +
                              "), printed " + format_thousandths(c.printed));
        }
    }
    r.notes.push_back(std::to_string(match) + " cells match, " + std::to_string(note) +
                      " differ by one unit in the third decimal (rounding note), " +
                      std::to_string(bad) + " mismatch");
    bool grouped = false;
    for (const auto& c : spec.columns) {
        grouped = grouped || !c.reading_group.empty();
    }
    if (grouped) {
        r.extra["resolved_header"] = cmp.resolved_header ? json(*cmp.resolved_header) : json(nullptr);
        r.notes.push_back(cmp.resolved_header
                              ? "printed first column reproduced by " + *cmp.resolved_header
                              : "printed first column not reproduced by a unique reading");
    }
    r.extra["summary"] = {{"match", match}, {"rounding_note", note}, {"mismatch", bad}};
    r.verdict = cmp.all_match_within_note() ? "pass" : "fail";
    return r;
}

int exit_for(const Report& r) { return r.verdict && *r.verdict == "fail" ? exit_fail : exit_pass; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Copartition counts, parity checks and density tables", "copart"};
    app.set_version_flag("--version", COPART_VERSION);
    app.require_subcommand(1);
    app.fallthrough();

    std::string format;
    std::string out_path;
    app.add_option("--format", format, "csv, json or text (default: csv for data, text for checks)")
        ->check(CLI::IsMember({"csv", "json", "text"}));
    app.add_option("--out", out_path, "write to this file (plus a .meta.json sidecar)");

    CoeffsArgs ca;
    auto* coeffs = app.add_subcommand("coeffs", "coefficients of cp_{a,b,m} through q^N");
    coeffs->add_option("a", ca.a)->required()->check(CLI::PositiveNumber);
    coeffs->add_option("b", ca.b)->required()->check(CLI::PositiveNumber);
    coeffs->add_option("m", ca.m)->required()->check(CLI::PositiveNumber);
    coeffs->add_option("--n,-n", ca.n, "truncation N")->required()->check(CLI::NonNegativeNumber);
    coeffs->add_option("--mode", ca.mode, "exact or parity")
        ->check(CLI::IsMember({"exact", "parity"}));
    coeffs->add_option("--limit", ca.limit, "raise the row limit of the chosen path");

    EnumerateArgs ea;
    auto* enumer = app.add_subcommand("enumerate", "list all copartitions of size n");
    enumer->add_option("a", ea.a)->required()->check(CLI::PositiveNumber);
    enumer->add_option("b", ea.b)->required()->check(CLI::PositiveNumber);
    enumer->add_option("m", ea.m)->required()->check(CLI::PositiveNumber);
    enumer->add_option("n", ea.n)->required()->check(CLI::NonNegativeNumber);
    enumer->add_flag("--show-crank", ea.show_crank);
    enumer->add_flag("--show-conjugate", ea.show_conjugate);
    enumer->add_option("--cap", ea.cap, "refuse to list more than this many")
        ->check(CLI::NonNegativeNumber);

    VerifyArgs va;
    std::string target;
    auto* verify = app.add_subcommand("verify", "run a finite verification sweep");
    verify->require_subcommand(1);
    const auto target_cmd = [&](const std::string& name, const std::string& help) {
        auto* t = verify->add_subcommand(name, help);
        t->callback([&target, name] { target = name; });
        return t;
    };
    const auto with_am = [&](CLI::App* t) {
        t->add_option("--a", va.a)->check(CLI::PositiveNumber);
        t->add_option("--m", va.m)->check(CLI::PositiveNumber);
    };
    const auto with_N = [&](CLI::App* t) {
        t->add_option("--N", va.N)->check(CLI::NonNegativeNumber);
    };
    const auto with_Nmax = [&](CLI::App* t) {
        t->add_option("--Nmax", va.Nmax)->check(CLI::NonNegativeNumber);
    };
    {
        auto* t = target_cmd("selfconj", "self-conjugate count and hook bijection");
        with_am(t);
        t->add_option("--nmax", va.nmax)->check(CLI::NonNegativeNumber);
    }
    for (const auto& [name, help] : std::vector<std::pair<std::string, std::string>>{
             {"parity-gf", "cp_{a,a,m} against the self-conjugate product mod 2"},
             {"eq4", "mod-2 theta identity for cp_{a,m-a,m}"}}) {
        auto* t = target_cmd(name, help);
        with_am(t);
        with_N(t);
    }
    {
        auto* t = target_cmd("lacunary", "odd support of cp_{a,a,2a}");
        t->add_option("--a", va.a)->check(CLI::PositiveNumber);
        with_N(t);
    }
    {
        auto* t = target_cmd("progression", "guaranteed-even progressions mod p^2");
        t->add_option("--family", va.family)->check(CLI::IsMember({"cp314", "cp516"}));
        t->add_option("--p", va.p)->check(CLI::PositiveNumber);
        with_N(t);
    }
    with_Nmax(target_cmd("lemma13", "4N = X^2 + 3Y^2 with X, Y = 1 mod 6 criterion"));
    with_Nmax(target_cmd("predicates", "factorization criteria against exhaustive search"));
    with_N(target_cmd("guarantees-314", "quadratic-form guarantee for cp_{3,1,4}"));
    with_N(target_cmd("guarantees-516", "quadratic-form guarantee for cp_{5,1,6}"));
    {
        auto* t = target_cmd("both-parities", "both parities occur in a prefix of cp_{a,m-a,m}");
        with_am(t);
        with_N(t);
        t->add_option("--witness-min", va.witness_min)->check(CLI::NonNegativeNumber);
    }
    {
        auto* t = target_cmd("odd-terms", "odd-term counting for the paired theta series");
        with_am(t);
        with_Nmax(t);
    }
    {
        auto* t = target_cmd("andrews", "cp_{1,1,2}(5n+4) = 0 mod 5 and the crank");
        with_N(t);
        t->add_option("--sizes", va.sizes)->delimiter(',');
    }
    {
        auto* t = target_cmd("oracle", "enumeration against the series on a grid");
        t->add_option("--amax", va.amax)->check(CLI::PositiveNumber);
        t->add_option("--bmax", va.bmax)->check(CLI::PositiveNumber);
        t->add_option("--mmax", va.mmax)->check(CLI::PositiveNumber);
        t->add_option("--nmax", va.nmax)->check(CLI::NonNegativeNumber);
    }

    TablesArgs ta;
    if (const char* env = std::getenv(cache_env)) {
        ta.cache_dir = env;
    }
    auto* tables = app.add_subcommand("tables", "regenerate a density table");
    tables->add_option("which", ta.which)->required()->check(CLI::Range(1, 3));
    tables->add_flag("--compare", ta.compare, "compare against the printed values");
    tables->add_flag("--exact", ta.exact, "also emit exact rationals in CSV/text");
    tables->add_option("--jobs,-j", ta.jobs, "columns computed in parallel")
        ->check(CLI::PositiveNumber);
    tables->add_option("--cache-dir", ta.cache_dir,
                       std::string("parity cache directory (default $") + cache_env + ")");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return exit_pass;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_pass;
    } catch (const CLI::CallForVersion&) {
        out << COPART_VERSION << '\n';
        return exit_pass;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        // Point at the subcommand that failed when there is one.
        for (auto* sub : {coeffs, enumer, verify, tables}) {
            if (sub->parsed()) {
                err << "see: copart " << sub->get_name() << " --help\n";
            }
        }
        return exit_usage;
    }

    try {
        Report report;
        std::string default_format = "csv";
        if (coeffs->parsed()) {
            report = cmd_coeffs(ca);
        } else if (enumer->parsed()) {
            report = cmd_enumerate(ea);
            default_format = "text";
        } else if (verify->parsed()) {
            report = cmd_verify(target, va);
            default_format = "text";
        } else {
            report = cmd_tables(ta, format == "json");
        }
        if (format.empty()) {
            format = default_format;
        }
        const std::string body = format == "json"   ? render_json(report)
                                  : format == "text" ? render_text(report)
                                                     : render_csv(report);
        if (format == "csv") {
            for (const auto& n : report.notes) {
                err << n << '\n';
            }
            if (report.verdict) {
                err << "verdict: " << *report.verdict << '\n';
            }
        }
        if (out_path.empty()) {
            out << body;
        } else {
            write_outputs(out_path, body, format, args);
        }
        return exit_for(report);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_fail;
    }
}

}  // namespace copart::cli
