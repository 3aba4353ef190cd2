#include "vlab/experiment.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

#include "vlab/circle.hpp"
#include "vlab/counting.hpp"
#include "vlab/singular_series.hpp"
#include "vlab/version.hpp"

namespace vlab {
namespace {

using nlohmann::json;

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) out += sep;
        out += parts[i];
    }
    return out;
}

std::string flag_for(const VanishingReport& rep) {
    if (!rep.vanishes) return "ok";
    if (!rep.parity_ok) return "vanishes:parity";
    return "vanishes:gcd@" + std::to_string(rep.failing_gcd_index);
}

std::string format_complex(std::complex<double> z) {
    const char* sign = z.imag() < 0 ? " - " : " + ";
    return format_real(z.real()) + sign + format_real(std::abs(z.imag())) + "i";
}

json config_json(const ExperimentConfig& cfg) {
    json j;
    j["command"] = cfg.command;
    j["c"] = cfg.c;
    j["r"] = cfg.r;
    j["n"] = cfg.n;
    j["n_min"] = cfg.n_min;
    j["n_max"] = cfg.n_max;
    j["weight"] = weight_name(cfg.weight);
    j["arc_exponent"] = cfg.arc_exponent;
    j["prime_cutoff"] = cfg.prime_cutoff;
    j["q_cutoff"] = cfg.q_cutoff;
    j["x"] = cfg.x;
    j["alpha"] = cfg.alpha;
    j["u"] = cfg.u;
    j["v"] = cfg.v;
    j["k"] = cfg.k;
    j["b"] = cfg.b;
    j["sieve_limit"] = cfg.sieve_limit;
    j["classify"] = cfg.classify;
    j["include_vanishing"] = cfg.include_vanishing;
    j["output_path"] = cfg.output_path;
    j["format"] = cfg.format;
    j["assert"] = cfg.assert_spec;
    return j;
}

bool needs_r(const ExperimentConfig& cfg) {
    return cfg.command == "compare" || cfg.command == "count";
}

void validate(ExperimentConfig& cfg, std::vector<std::string>& problems) {
    const bool needs_c = cfg.command == "compare" || cfg.command == "count" || cfg.command == "sseries" ||
                         cfg.command == "denumerant";
    if (needs_c) {
        if (cfg.c.empty()) {
            problems.push_back("--c is required for " + cfg.command);
        } else {
            for (u64 ci : cfg.c)
                if (ci < 1) {
                    problems.push_back("--c entries must be positive");
                    break;
                }
        }
    }
    if (needs_r(cfg) && !cfg.c.empty()) {
        if (cfg.r.empty()) cfg.r.assign(cfg.c.size(), 1);
        if (cfg.r.size() != cfg.c.size())
            problems.push_back("--r must have the same length as --c (got " + std::to_string(cfg.r.size()) +
                               " vs " + std::to_string(cfg.c.size()) + ")");
        for (int ri : cfg.r)
            if (ri < 1) {
                problems.push_back("--r entries must be >= 1");
                break;
            }
    }
    const bool needs_coprime = cfg.command == "compare" || cfg.command == "sseries";
    if (needs_coprime && !cfg.c.empty()) {
        u64 g = 0;
        for (u64 ci : cfg.c) g = std::gcd(g, ci);
        if (g != 1) problems.push_back("gcd(c) must be 1, got " + std::to_string(g));
    }
    if ((cfg.command == "compare" || cfg.command == "sseries") && cfg.c.size() < 3 && !cfg.c.empty())
        problems.push_back("--c needs at least 3 entries for " + cfg.command);

    if (cfg.command == "compare") {
        if (cfg.n_max == 0) problems.push_back("--n-max is required for compare");
        if (cfg.n_min < 21) problems.push_back("--n-min must be > 20 (asymptotic comparisons start at 21)");
        if (cfg.n_max != 0 && cfg.n_max < cfg.n_min) problems.push_back("--n-max must be >= --n-min");
        if (!cfg.assert_spec.empty()) {
            double lo = 0.0, hi = 0.0;
            if (std::sscanf(cfg.assert_spec.c_str(), "ratio:%lf,%lf", &lo, &hi) != 2 || lo > hi)
                problems.push_back("--assert must look like ratio:<lo>,<hi> with lo <= hi");
        }
    }
    if ((cfg.command == "count" || cfg.command == "sseries" || cfg.command == "denumerant") && cfg.n == 0)
        problems.push_back("--n is required for " + cfg.command);
    if ((cfg.command == "expsum" || cfg.command == "vaughan" || cfg.command == "landau") && !(cfg.x > 0))
        problems.push_back("--x must be positive for " + cfg.command);
    if (cfg.command == "landau" && cfg.k < 1) problems.push_back("--k must be >= 1");
    if (cfg.command == "expsum" && cfg.b < 1) problems.push_back("--b must be >= 1");
    if (cfg.command == "vaughan") {
        const bool u_set = cfg.u != 0.0, v_set = cfg.v != 0.0;
        if (u_set != v_set) problems.push_back("--u and --v must be given together");
        if (u_set && (cfg.u < 2.0 || cfg.v < 2.0)) problems.push_back("--u and --v must be >= 2");
    }
    if (cfg.format != "csv" && cfg.format != "json")
        problems.push_back("--format must be csv or json, got '" + cfg.format + "'");
}

u64 derived_sieve_limit(const ExperimentConfig& cfg) {
    u64 need = 0;
    if (cfg.command == "compare") need = cfg.n_max;
    if (cfg.command == "count") need = cfg.n;
    if (cfg.command == "expsum" || cfg.command == "vaughan" || cfg.command == "landau")
        need = static_cast<u64>(cfg.x);
    if (need == 0) return 0;
    if (cfg.sieve_limit != 0) return cfg.sieve_limit;
    return std::max<u64>(need, 2);
}

struct CommandOutput {
    std::vector<std::string> text;
    json rows = json::array();
};

CommandOutput run_compare(const ExperimentConfig& cfg, const FactorSieve& sieve,
                          std::vector<ComparisonRow>& rows_out) {
    rows_out = build_comparison(sieve, cfg.c, cfg.r, cfg.n_min, cfg.n_max, cfg.weight, cfg.prime_cutoff,
                                cfg.include_vanishing);
    CommandOutput out;
    const bool indicator =
        cfg.weight == WeightKind::prime_indicator || cfg.weight == WeightKind::omega_indicator;
    out.text.push_back(comparison_csv(rows_out, cfg.weight));
    for (const ComparisonRow& row : rows_out) {
        json r;
        r["n"] = row.n;
        if (indicator)
            r["exact"] = row.exact.str();
        else
            r["exact"] = row.weighted;
        r["main_term"] = row.main_term;
        r["ratio"] = row.ratio;
        r["sseries"] = row.sseries;
        r["flags"] = row.flags;
        out.rows.push_back(std::move(r));
    }
    return out;
}

CommandOutput run_count(const ExperimentConfig& cfg, const FactorSieve& sieve) {
    CommandOutput out;
    json row;
    row["n"] = cfg.n;
    if (cfg.weight == WeightKind::von_mangoldt || cfg.weight == WeightKind::theta) {
        const WeightedSum ws = weighted_representation_sum(sieve, cfg.n, cfg.c, cfg.weight);
        out.text.push_back(format_real(ws.value));
        row["weighted"] = ws.value;
    } else {
        const ProblemInstance inst(cfg.c, cfg.r, cfg.n);
        const CountResult res = count_almost_prime(sieve, inst);
        out.text.push_back(res.exact.str());
        row["exact"] = res.exact.str();
    }
    out.rows.push_back(std::move(row));
    return out;
}

CommandOutput run_sseries(const ExperimentConfig& cfg) {
    CommandOutput out;
    const SingularSeriesValue prod = singular_series_product(cfg.n, cfg.c, cfg.prime_cutoff);
    const SingularSeriesValue part = singular_series_partial(cfg.n, cfg.c, cfg.q_cutoff);
    const VanishingReport rep = vanishing_criterion(cfg.n, cfg.c);
    out.text.push_back("product(P=" + std::to_string(cfg.prime_cutoff) + ") = " + format_real(prod.value) +
                       "  tail <= " + format_real(prod.tail_bound));
    out.text.push_back("qsum(Q=" + std::to_string(cfg.q_cutoff) + ") = " + format_real(part.value) +
                       "  tail <= " + format_real(part.tail_bound));
    if (rep.vanishes) out.text.push_back("vanishes: " + rep.reason());
    json row;
    row["n"] = cfg.n;
    row["product"] = prod.value;
    row["product_tail"] = prod.tail_bound;
    row["qsum"] = part.value;
    row["qsum_tail"] = part.tail_bound;
    row["vanishes"] = rep.vanishes;
    row["reason"] = rep.reason();
    out.rows.push_back(std::move(row));
    return out;
}

CommandOutput run_denumerant(const ExperimentConfig& cfg) {
    CommandOutput out;
    const BigInt exact = denumerant_exact(cfg.n, cfg.c);
    const double main = denumerant_main_term(cfg.n, cfg.c);
    const double ratio = main != 0.0 ? static_cast<double>(exact) / main : 0.0;
    out.text.push_back(exact.str());
    out.text.push_back("main_term = " + format_real(main) + "  ratio = " + format_real(ratio));
    json row;
    row["n"] = cfg.n;
    row["exact"] = exact.str();
    row["main_term"] = main;
    row["ratio"] = ratio;
    out.rows.push_back(std::move(row));
    return out;
}

CommandOutput run_expsum(const ExperimentConfig& cfg, const FactorSieve& sieve) {
    CommandOutput out;
    const std::complex<double> s = exp_sum(sieve, cfg.x, cfg.alpha, cfg.weight, cfg.b);
    out.text.push_back("S = " + format_complex(s) + "  |S| = " + format_real(std::abs(s)));
    json row;
    row["x"] = cfg.x;
    row["alpha"] = cfg.alpha;
    row["real"] = s.real();
    row["imag"] = s.imag();
    row["abs"] = std::abs(s);
    if (cfg.classify) {
        const ArcConfig arc(static_cast<u64>(cfg.x), cfg.arc_exponent);
        const ArcLabel label = classify_alpha(cfg.alpha, arc);
        if (label.major) {
            out.text.push_back("arc: major a=" + std::to_string(label.a) + " q=" + std::to_string(label.q) +
                               " offset=" + format_real(label.offset));
        } else {
            out.text.push_back("arc: minor");
        }
        row["arc"] = label.major ? "major" : "minor";
        row["a"] = label.a;
        row["q"] = label.q;
        row["offset"] = label.offset;
    }
    out.rows.push_back(std::move(row));
    return out;
}

CommandOutput run_vaughan(const ExperimentConfig& cfg, const FactorSieve& sieve) {
    CommandOutput out;
    const VaughanPieces pieces = vaughan_decompose(sieve, cfg.x, cfg.alpha, cfg.u, cfg.v);
    const std::complex<double> direct = exp_sum(sieve, cfg.x, cfg.alpha, WeightKind::von_mangoldt);
    const std::complex<double> rec = pieces.reconstructed();
    out.text.push_back("s_i1 = " + format_complex(pieces.s_i1));
    out.text.push_back("s_i2 = " + format_complex(pieces.s_i2));
    out.text.push_back("s_ii = " + format_complex(pieces.s_ii));
    out.text.push_back("s_0 = " + format_complex(pieces.s_0));
    out.text.push_back("reconstructed = " + format_complex(rec));
    out.text.push_back("direct = " + format_complex(direct));
    out.text.push_back("abs_error = " + format_real(std::abs(rec - direct)));
    json row;
    row["x"] = cfg.x;
    row["alpha"] = cfg.alpha;
    row["u"] = pieces.u;
    row["v"] = pieces.v;
    row["s_i1"] = {pieces.s_i1.real(), pieces.s_i1.imag()};
    row["s_i2"] = {pieces.s_i2.real(), pieces.s_i2.imag()};
    row["s_ii"] = {pieces.s_ii.real(), pieces.s_ii.imag()};
    row["s_0"] = {pieces.s_0.real(), pieces.s_0.imag()};
    row["abs_error"] = std::abs(rec - direct);
    out.rows.push_back(std::move(row));
    return out;
}

CommandOutput run_landau(const ExperimentConfig& cfg, const FactorSieve& sieve) {
    CommandOutput out;
    const u64 exact = sieve.count_omega_equals(static_cast<u64>(cfg.x), cfg.k);
    const double main = landau_main_term(cfg.x, cfg.k);
    const double ratio = main != 0.0 ? static_cast<double>(exact) / main : 0.0;
    out.text.push_back("count = " + std::to_string(exact));
    out.text.push_back("main_term = " + format_real(main) + "  ratio = " + format_real(ratio));
    json row;
    row["x"] = cfg.x;
    row["k"] = cfg.k;
    row["exact"] = exact;
    row["main_term"] = main;
    row["ratio"] = ratio;
    out.rows.push_back(std::move(row));
    return out;
}

}  // namespace

std::string format_real(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", value);
    return buf;
}

std::vector<ComparisonRow> build_comparison(const FactorSieve& sieve, const std::vector<u64>& c,
                                            const std::vector<int>& r, u64 n_min, u64 n_max, WeightKind w,
                                            u64 prime_cutoff, bool include_vanishing) {
    if (n_min < 21) throw std::invalid_argument("build_comparison: comparisons start at N = 21");
    if (n_max < n_min) throw std::invalid_argument("build_comparison: need n_min <= n_max");
    const bool indicator = w == WeightKind::prime_indicator || w == WeightKind::omega_indicator;

    // The indicator comparison counts Omega(n_i) = r_i solutions, so the batch
    // always runs with the explicit targets.
    const BatchCounts batch = batch_counts(sieve, c, r, n_max, indicator ? WeightKind::omega_indicator : w);

    std::vector<ComparisonRow> rows;
    for (u64 n = n_min; n <= n_max; ++n) {
        const VanishingReport rep = vanishing_criterion(n, c);
        if (rep.vanishes && !include_vanishing) continue;
        ComparisonRow row;
        row.n = n;
        row.flags = flag_for(rep);
        if (indicator) {
            row.exact = batch.exact_at(n);
            row.weighted = static_cast<double>(row.exact);
        } else {
            row.weighted = batch.value_at(n);
        }
        if (!rep.vanishes) {
            row.sseries = singular_series_product(n, c, prime_cutoff).value;
            row.main_term = indicator ? almost_prime_main_term(n, c, r, row.sseries)
                                      : weighted_main_term(n, c, row.sseries, w);
        }
        row.ratio = row.main_term != 0.0 ? row.weighted / row.main_term : 0.0;
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string comparison_csv(const std::vector<ComparisonRow>& rows, WeightKind w) {
    const bool indicator = w == WeightKind::prime_indicator || w == WeightKind::omega_indicator;
    std::string out = "N,exact,main_term,ratio,sseries,flags\n";
    for (const ComparisonRow& row : rows) {
        out += std::to_string(row.n);
        out += ',';
        out += indicator ? row.exact.str() : format_real(row.weighted);
        out += ',';
        out += format_real(row.main_term);
        out += ',';
        out += format_real(row.ratio);
        out += ',';
        out += format_real(row.sseries);
        out += ',';
        out += row.flags;
        out += '\n';
    }
    return out;
}

ExperimentConfig parse_args(const std::vector<std::string>& args) {
    ExperimentConfig cfg;
    CLI::App app{"exact and asymptotic counting of coefficiented almost-prime representations"};
    app.require_subcommand(1);

    const auto add_output = [&](CLI::App* sub) {
        sub->add_option("-o,--output", cfg.output_path, "write results to this file instead of stdout");
        sub->add_option("--format", cfg.format, "output format: csv or json")->capture_default_str();
        sub->add_option("--sieve-limit", cfg.sieve_limit, "override the derived factor-sieve limit");
    };
    std::string weight_arg = "prime";
    std::string expsum_weight = "lambda";
    const auto add_weight = [&](CLI::App* sub) {
        sub->add_option("--weight", weight_arg, "omega | prime | lambda | theta")->capture_default_str();
    };

    CLI::App* compare = app.add_subcommand("compare", "exact counts vs main terms over an N range");
    compare->add_option("--c", cfg.c, "slot coefficients, comma separated")->delimiter(',');
    compare->add_option("--r", cfg.r, "per-slot Omega targets (default all 1)")->delimiter(',');
    compare->add_option("--n-min", cfg.n_min, "first N")->capture_default_str();
    compare->add_option("--n-max", cfg.n_max, "last N");
    compare->add_option("--prime-cutoff", cfg.prime_cutoff, "Euler-product cutoff P")->capture_default_str();
    compare->add_option("--q-cutoff", cfg.q_cutoff, "q-expansion cutoff Q")->capture_default_str();
    compare->add_flag("--include-vanishing", cfg.include_vanishing,
                      "emit rows whose density vanishes (flagged, main_term 0)");
    compare->add_option("--assert", cfg.assert_spec, "ratio:<lo>,<hi>; exit 2 if any ok-row ratio escapes");
    add_weight(compare);
    add_output(compare);

    CLI::App* count = app.add_subcommand("count", "exact count or weighted sum at a single N");
    count->add_option("--c", cfg.c, "slot coefficients")->delimiter(',');
    count->add_option("--r", cfg.r, "per-slot Omega targets (default all 1)")->delimiter(',');
    count->add_option("--n", cfg.n, "target N");
    add_weight(count);
    add_output(count);

    CLI::App* sseries = app.add_subcommand("sseries", "singular series in both forms plus vanishing report");
    sseries->add_option("--c", cfg.c, "slot coefficients")->delimiter(',');
    sseries->add_option("--n", cfg.n, "target N");
    sseries->add_option("--prime-cutoff", cfg.prime_cutoff, "Euler-product cutoff P")->capture_default_str();
    sseries->add_option("--q-cutoff", cfg.q_cutoff, "q-expansion cutoff Q")->capture_default_str();
    add_output(sseries);

    CLI::App* denumerant = app.add_subcommand("denumerant", "exact solution count with no Omega constraints");
    denumerant->add_option("--b,--c", cfg.c, "slot coefficients")->delimiter(',');
    denumerant->add_option("--n", cfg.n, "target N");
    add_output(denumerant);

    CLI::App* expsum = app.add_subcommand("expsum", "weighted exponential sum at one frequency");
    expsum->add_option("--x", cfg.x, "summation length");
    expsum->add_option("--alpha", cfg.alpha, "frequency");
    expsum->add_option("--b", cfg.b, "coefficient: sums over n <= x/b with phase n b alpha")
        ->capture_default_str();
    expsum->add_flag("--classify", cfg.classify, "also report the major/minor arc label of alpha");
    expsum->add_option("--B", cfg.arc_exponent, "arc exponent: moduli up to (log x)^B are major")
        ->capture_default_str();
    expsum->add_option("--weight", expsum_weight, "omega | prime | lambda | theta")->capture_default_str();
    add_output(expsum);

    CLI::App* vaughan = app.add_subcommand("vaughan", "four-piece decomposition of the prime exponential sum");
    vaughan->add_option("--x", cfg.x, "summation length");
    vaughan->add_option("--alpha", cfg.alpha, "frequency");
    vaughan->add_option("--u", cfg.u, "smoothing cut U (default x^0.4)");
    vaughan->add_option("--v", cfg.v, "smoothing cut V (default x^0.4)");
    add_output(vaughan);

    CLI::App* landau = app.add_subcommand("landau", "count of Omega(n)=k up to x vs its main term");
    landau->add_option("--x", cfg.x, "range end");
    landau->add_option("--k", cfg.k, "number of prime factors with multiplicity")->capture_default_str();
    add_output(landau);

    std::vector<const char*> argv;
    argv.push_back("vlab");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        std::stringstream help;
        help << app.help();
        throw help_requested(help.str());
    } catch (const CLI::ParseError& e) {
        throw usage_error(e.what());
    }

    for (CLI::App* sub : {compare, count, sseries, denumerant, expsum, vaughan, landau})
        if (sub->parsed()) cfg.command = sub->get_name();

    std::vector<std::string> problems;
    try {
        cfg.weight = weight_from_name(cfg.command == "expsum" ? expsum_weight : weight_arg);
    } catch (const std::invalid_argument& e) {
        problems.push_back(e.what());
    }
    validate(cfg, problems);
    if (!problems.empty()) throw usage_error(join(problems, "\n"));
    return cfg;
}

int run(const ExperimentConfig& cfg) {
    const auto t0 = std::chrono::steady_clock::now();
    const u64 limit = derived_sieve_limit(cfg);

    CommandOutput result;
    std::vector<ComparisonRow> rows;
    if (limit != 0) {
        const FactorSieve sieve = build_factor_sieve(limit);
        if (cfg.command == "compare") result = run_compare(cfg, sieve, rows);
        if (cfg.command == "count") result = run_count(cfg, sieve);
        if (cfg.command == "expsum") result = run_expsum(cfg, sieve);
        if (cfg.command == "vaughan") result = run_vaughan(cfg, sieve);
        if (cfg.command == "landau") result = run_landau(cfg, sieve);
    } else {
        if (cfg.command == "sseries") result = run_sseries(cfg);
        if (cfg.command == "denumerant") result = run_denumerant(cfg);
    }

    std::string payload;
    if (cfg.format == "json") {
        json doc;
        doc["config"] = config_json(cfg);
        doc["rows"] = result.rows;
        const auto elapsed =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
        doc["meta"] = {{"version", kVersion},
                       {"sieve_limit", limit},
                       {"runtime_ms", static_cast<i64>(elapsed.count())}};
        payload = doc.dump(2);
        payload += '\n';
    } else {
        payload = join(result.text, "\n");
        if (!payload.empty() && payload.back() != '\n') payload += '\n';
    }

    if (cfg.output_path.empty()) {
        std::cout << payload;
        if (!std::cout) return kExitIoError;
    } else {
        std::ofstream out(cfg.output_path, std::ios::binary);
        if (!out) {
            std::cerr << "cannot open " << cfg.output_path << " for writing\n";
            return kExitIoError;
        }
        out << payload;
        if (!out) {
            std::cerr << "write to " << cfg.output_path << " failed\n";
            return kExitIoError;
        }
    }

    if (cfg.command == "compare" && !cfg.assert_spec.empty()) {
        double lo = 0.0, hi = 0.0;
        std::sscanf(cfg.assert_spec.c_str(), "ratio:%lf,%lf", &lo, &hi);
        for (const ComparisonRow& row : rows) {
            if (row.flags != "ok") continue;
            if (row.ratio < lo || row.ratio > hi) {
                std::cerr << "assert failed: ratio " << format_real(row.ratio) << " at N = " << row.n
                          << " outside [" << lo << ", " << hi << "]\n";
                return kExitAssertFailed;
            }
        }
    }
    return kExitOk;
}

}  // namespace vlab
