// gk: k-values, prime graphs, table reproduction, the claim ledger and the
// Mersenne scan from one command line.
//
// Exit codes: 0 success, 1 verification failure or table mismatch, 2 usage
// error, 3 resource limit (factorization timeout).

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "gk/arith.hpp"
#include "gk/cgroups.hpp"
#include "gk/ledger.hpp"
#include "gk/mersenne.hpp"
#include "gk/primegraph.hpp"

namespace {

using nlohmann::json;

enum Exit { kOk = 0, kFail = 1, kUsage = 2, kResource = 3 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr long kTableQmaxLimit = 64;

struct Config {
    long factor_timeout_ms = 60000;
    std::optional<std::string> cache_path;
    std::optional<std::string> output_format;
    long mersenne_max_exponent = gk::mersenne::kDefaultMaxExponent;
};

long parse_positive(const std::string& text, const std::string& what) {
    try {
        std::size_t used = 0;
        long v = std::stol(text, &used);
        if (used == text.size() && v > 0) return v;
    } catch (const std::exception&) {
    }
    throw UsageError(what + " must be a positive integer, got \"" + text + "\"");
}

// Lowest precedence first: config file, then environment, then flags.
void apply_file(Config& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open config file " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw UsageError("config file " + path + " is not valid JSON");
    }
    try {
        if (j.contains("factor_timeout_ms")) cfg.factor_timeout_ms = j.at("factor_timeout_ms").get<long>();
        if (j.contains("cache_path")) cfg.cache_path = j.at("cache_path").get<std::string>();
        if (j.contains("output_format")) cfg.output_format = j.at("output_format").get<std::string>();
        if (j.contains("mersenne_max_exponent"))
            cfg.mersenne_max_exponent = j.at("mersenne_max_exponent").get<long>();
    } catch (const json::exception& e) {
        throw UsageError("config file " + path + ": " + e.what());
    }
}

void apply_env(Config& cfg) {
    if (const char* v = std::getenv("GK_FACTOR_TIMEOUT_MS"); v && *v) cfg.factor_timeout_ms = parse_positive(v, "GK_FACTOR_TIMEOUT_MS");
    if (const char* v = std::getenv("GK_CACHE_PATH"); v && *v) cfg.cache_path = v;
    if (const char* v = std::getenv("GK_OUTPUT_FORMAT"); v && *v) cfg.output_format = v;
    if (const char* v = std::getenv("GK_MERSENNE_MAX_EXPONENT"); v && *v)
        cfg.mersenne_max_exponent = parse_positive(v, "GK_MERSENNE_MAX_EXPONENT");
}

std::string pick_format(const Config& cfg, std::initializer_list<const char*> allowed) {
    const std::string f = cfg.output_format.value_or(*allowed.begin());
    for (const char* a : allowed)
        if (f == a) return f;
    std::string list;
    for (const char* a : allowed) list += std::string(list.empty() ? "" : ", ") + a;
    throw UsageError("format \"" + f + "\" is not available here (choose " + list + ")");
}

std::string join(const std::set<long>& s) {
    std::string out = "{";
    for (long x : s) out += (out.size() > 1 ? "," : "") + std::to_string(x);
    return out + "}";
}

// ---------------------------------------------------------------- subcommands

int cmd_kvalue(const Config& cfg, long i, const std::string& a_text, std::ostream& out) {
    gk::Int a;
    try {
        a = gk::parse_int(a_text);
    } catch (const gk::InvalidArgument&) {
        throw UsageError("base must be an integer, got \"" + a_text + "\"");
    }
    if (i < 3) throw UsageError("degree i must be at least 3");
    if (gk::abs(a) < 2) throw UsageError("base a must satisfy |a| >= 2");
    const auto fmt = pick_format(cfg, {"text", "json"});
    gk::arith::FactorOptions fo;
    fo.timeout = std::chrono::milliseconds(cfg.factor_timeout_ms);
    const gk::Int k = gk::arith::k_value(i, a);
    const auto f = gk::arith::factorize(k, fo);
    if (fmt == "json") {
        json fs = json::array();
        for (const auto& pp : f.factors()) fs.push_back({{"prime", pp.prime.get_str()}, {"exponent", pp.exponent}});
        out << json{{"i", i}, {"a", a.get_str()}, {"k", k.get_str()}, {"factors", fs}}.dump(2) << '\n';
    } else if (k == 1) {
        out << "1\n";
    } else {
        out << k.get_str() << " = " << f.to_string() << '\n';
    }
    return kOk;
}

int cmd_graph(const Config& cfg, const std::string& code, std::ostream& out) {
    // "text" is accepted so a global text default does not break graph output.
    const auto fmt = pick_format(cfg, {"dot", "json", "text"});
    gk::cgroups::GroupSpec L = [&] {
        try {
            return gk::cgroups::GroupSpec::parse(code);
        } catch (const gk::InvalidArgument& e) {
            throw UsageError(e.what());
        }
    }();
    if (L.prk() < 4) throw UsageError("prime graphs need prk >= 4, got " + L.name());
    gk::primegraph::BuildOptions opts;
    opts.factor_timeout = std::chrono::milliseconds(cfg.factor_timeout_ms);
    auto emit = [&](const gk::primegraph::PrimeGraph& g) {
        out << (fmt != "json" ? gk::primegraph::to_dot(g) : gk::primegraph::to_json(g).dump(2) + "\n");
    };
    try {
        emit(gk::primegraph::build_graph(L, opts));
    } catch (const gk::primegraph::PartialGraphError& e) {
        emit(e.graph);
        std::cerr << "warning: " << e.what() << '\n';
        return kResource;
    }
    return kOk;
}

int cmd_tables(const Config& cfg, int which, long qmax, std::ostream& out) {
    if (which != 1 && which != 2) throw UsageError("--which must be 1 or 2");
    if (qmax < 2 || qmax > kTableQmaxLimit)
        throw UsageError("--qmax must lie in [2, " + std::to_string(kTableQmaxLimit) + "]");
    const auto fmt = pick_format(cfg, {"text", "json"});
    gk::primegraph::BuildOptions opts;
    opts.factor_timeout = std::chrono::milliseconds(cfg.factor_timeout_ms);
    const auto checks = which == 1 ? gk::primegraph::reproduce_table1(qmax, opts)
                                   : gk::primegraph::reproduce_table2(qmax, opts);
    long matched = 0;
    bool partial = false;
    for (const auto& c : checks) {
        matched += c.match;
        partial = partial || c.partial;
    }
    if (fmt == "json") {
        json rows = json::array();
        for (const auto& c : checks) rows.push_back(gk::primegraph::to_json(c, which == 1));
        out << json{{"table", which}, {"qmax", qmax}, {"rows", rows},
                     {"summary", {{"checked", checks.size()}, {"match", matched},
                                  {"mismatch", static_cast<long>(checks.size()) - matched}}}}
                   .dump(2)
            << '\n';
    } else {
        for (const auto& c : checks) {
            out << c.spec.name() << "  [" << c.row << "]  ";
            if (c.partial)
                out << "partial graph";
            else if (which == 1)
                out << "t=" << c.t << " E=" << join(c.E) << " J\\E=" << join(c.JminusE) << "  |  table t="
                    << c.predicted_t << " E=" << join(c.predicted_E) << " J\\E=" << join(c.predicted_JminusE);
            else
                out << "t=" << c.t << "  |  table t=" << c.predicted_t;
            out << "  " << (c.match ? "MATCH" : "MISMATCH") << '\n';
        }
        out << matched << " of " << checks.size() << " match\n";
    }
    if (partial) return kResource;
    return matched == static_cast<long>(checks.size()) ? kOk : kFail;
}

int cmd_verify(const Config& cfg, const std::string& catalogue, const std::optional<std::string>& filter,
               bool timing, unsigned threads, std::ostream& out) {
    const auto fmt = pick_format(cfg, {"text", "json"});
    gk::ledger::Catalogue cat;
    gk::ledger::Report rep;
    try {
        cat = gk::ledger::load_catalogue(catalogue);
        rep = gk::ledger::run_catalogue(cat, filter, threads);
    } catch (const gk::InvalidArgument& e) {
        throw UsageError(e.what());
    }
    if (fmt == "json") {
        out << gk::ledger::to_json(rep, cat, timing).dump(2) << '\n';
    } else {
        for (const auto& r : rep.results) {
            out << gk::ledger::to_string(r.status) << "  " << r.id << "  " << r.evidence;
            if (timing) out << "  (" << r.elapsed.count() << " ms)";
            out << '\n';
        }
        const auto& s = rep.summary;
        out << "pass " << s.pass << ", fail " << s.fail << ", skipped " << s.skipped << ", inconclusive "
            << s.inconclusive << '\n';
    }
    return rep.exit_code();
}

int cmd_mersenne(const Config& cfg, unsigned rounds, std::uint64_t seed, std::ostream& out) {
    const auto fmt = pick_format(cfg, {"text", "json"});
    if (cfg.mersenne_max_exponent < 2) throw UsageError("--max must be at least 2");
    gk::mersenne::ScanOptions opts;
    opts.rounds = rounds;
    opts.seed = seed;
    const auto recs = gk::mersenne::scan(cfg.mersenne_max_exponent, opts);
    if (fmt == "json") {
        out << gk::mersenne::to_json(recs, cfg.mersenne_max_exponent, opts).dump(2) << '\n';
        return kOk;
    }
    for (const auto& r : recs) {
        std::string q = r.q.get_str();
        if (q.size() > 24) q = "2^" + std::to_string(r.exponent) + "-1";
        out << "k=" << r.exponent << "  q=" << q << "  q^2-q+1: " << gk::arith::to_string(r.phi6_is_prime) << '\n';
    }
    out << "satisfying q:";
    for (const auto& q : gk::mersenne::satisfying_primes(recs)) out << ' ' << q.get_str();
    out << '\n';
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Prime graphs of classical groups and the arithmetic behind them"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_help_all_flag("--help-all", "Show help for every subcommand");

    std::string config_file, format, cache, timeout;
    app.add_option("--config", config_file, "JSON config file (also GK_CONFIG)");
    app.add_option("--format", format, "text, json or dot, depending on the subcommand");
    app.add_option("--cache", cache, "Factorization cache file (also GK_CACHE_PATH)");
    app.add_option("--factor-timeout-ms", timeout, "Per-number factorization budget (also GK_FACTOR_TIMEOUT_MS)");

    long k_i = 0;
    std::string k_a;
    auto* kv = app.add_subcommand("kvalue", "Print k_i(a) and its factorization");
    kv->add_option("i", k_i, "Degree i >= 3")->required();
    kv->add_option("a", k_a, "Base a with |a| >= 2")->required();

    std::string g_spec;
    auto* gr = app.add_subcommand("graph", "Build GK(L) for a spec family:prk:p[:f]");
    gr->add_option("spec", g_spec, "Group spec, e.g. L:9:5 or O-:6:5")->required();

    int t_which = 1;
    long t_qmax = 13;
    auto* tb = app.add_subcommand("tables", "Compare computed coclique data with the row tables");
    tb->add_option("--which", t_which, "1 (coclique table) or 2 (t-classes)");
    tb->add_option("--qmax", t_qmax, "Largest field order to sample");

    std::string v_catalogue = gk::ledger::kDefaultCataloguePath;
    std::string v_filter;
    bool v_no_timing = false;
    unsigned v_threads = 0;
    std::string v_output;
    auto* vf = app.add_subcommand("verify", "Run the claim catalogue");
    vf->add_option("--filter", v_filter, "Only claims whose id starts with this prefix");
    vf->add_option("--catalogue", v_catalogue, "Catalogue file");
    vf->add_flag("--no-timing", v_no_timing, "Omit timings, for byte-comparable reports");
    vf->add_option("--threads", v_threads, "Worker threads (0 = hardware concurrency)");
    vf->add_option("--output", v_output, "Write the report to a file instead of stdout");

    std::string m_max;
    unsigned m_rounds = gk::mersenne::kDefaultRounds;
    std::uint64_t m_seed = gk::mersenne::kDefaultSeed;
    auto* ms = app.add_subcommand("mersenne", "Scan Mersenne primes q for primality of q^2-q+1");
    ms->add_option("--max", m_max, "Largest exponent (also GK_MERSENNE_MAX_EXPONENT)");
    ms->add_option("--rounds", m_rounds, "Random Miller-Rabin rounds above the deterministic range");
    ms->add_option("--seed", m_seed, "Seed for the random bases");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    std::ostringstream out;
    int rc = kOk;
    Config cfg;
    try {
        if (config_file.empty())
            if (const char* v = std::getenv("GK_CONFIG"); v && *v) config_file = v;
        if (!config_file.empty()) apply_file(cfg, config_file);
        apply_env(cfg);
        if (!format.empty()) cfg.output_format = format;
        if (!cache.empty()) cfg.cache_path = cache;
        if (!timeout.empty()) cfg.factor_timeout_ms = parse_positive(timeout, "--factor-timeout-ms");
        if (!m_max.empty()) cfg.mersenne_max_exponent = parse_positive(m_max, "--max");
        if (cfg.factor_timeout_ms <= 0) throw UsageError("factor timeout must be positive");

        if (cfg.cache_path) gk::arith::factor_cache().load(*cfg.cache_path);

        if (*kv)
            rc = cmd_kvalue(cfg, k_i, k_a, out);
        else if (*gr)
            rc = cmd_graph(cfg, g_spec, out);
        else if (*tb)
            rc = cmd_tables(cfg, t_which, t_qmax, out);
        else if (*vf)
            rc = cmd_verify(cfg, v_catalogue, v_filter.empty() ? std::nullopt : std::optional(v_filter),
                            !v_no_timing, v_threads, out);
        else if (*ms)
            rc = cmd_mersenne(cfg, m_rounds, m_seed, out);

        if (cfg.cache_path) gk::arith::factor_cache().save(*cfg.cache_path);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n\n" << app.help();
        return kUsage;
    } catch (const gk::arith::FactorTimeout& e) {
        std::cout << out.str();
        std::cerr << "error: " << e.what() << '\n';
        return kResource;
    } catch (const gk::InvalidArgument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const gk::UnsupportedSpec& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }

    if (!v_output.empty() && *vf) {
        std::ofstream f(v_output);
        if (!f) {
            std::cerr << "error: cannot write " << v_output << '\n';
            return kUsage;
        }
        f << out.str();
    } else {
        std::cout << out.str();
    }
    return rc;
}
