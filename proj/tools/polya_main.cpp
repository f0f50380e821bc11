// SPDX-License-Identifier: Apache-2.0
//
// polya: command-line front end for the lattice-loop toolkit. Every
// command emits machine-readable records to stdout, one JSON object per
// line by default or CSV rows with --format csv; diagnostics go to
// stderr. Exit codes: 0 success, 1 failed verification checks,
// 2 domain/validation errors, 3 resource-cap errors.
//
// Defaults resolve as flag > environment > built-in. Environment:
// POLYA_FORMAT (json|csv), POLYA_ENUM_CAP, POLYA_EXACT_THRESHOLD.

#include <cmath>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "polya/polya.hpp"

namespace {

using nlohmann::ordered_json;

enum class OutFormat { json, csv };

OutFormat parse_format(const std::string& name) {
    if (name == "json") return OutFormat::json;
    if (name == "csv") return OutFormat::csv;
    throw polya::domain_error("format must be 'json' or 'csv', got '" + name + "'");
}

std::optional<std::string> env_string(const char* name) {
    const char* v = std::getenv(name);
    if (v == nullptr || *v == '\0') return std::nullopt;
    return std::string(v);
}

OutFormat resolve_format(const std::string& flag_value) {
    if (!flag_value.empty()) return parse_format(flag_value);
    if (auto env = env_string("POLYA_FORMAT")) return parse_format(*env);
    return OutFormat::json;
}

int resolve_limit(std::optional<int> flag, const char* env_name, int fallback) {
    if (flag) return *flag;
    if (auto env = env_string(env_name)) {
        std::size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(*env, &pos);
        } catch (const std::exception&) {
            pos = std::string::npos;
        }
        if (pos != env->size())
            throw polya::domain_error(std::string(env_name) + " must be an integer, got '" +
                                      *env + "'");
        return v;
    }
    return fallback;
}

std::string csv_cell(const ordered_json& v) {
    std::string raw = v.is_string() ? v.get<std::string>() : v.dump();
    if (raw.find_first_of(",\"\n") == std::string::npos) return raw;
    std::string quoted;
    quoted.reserve(raw.size() + 2);
    quoted.push_back('"');
    for (char c : raw) {
        if (c == '"') quoted.push_back('"');
        quoted.push_back(c);
    }
    quoted.push_back('"');
    return quoted;
}

// JSON Lines or CSV with a header row; field order is the insertion order
// of the record, so both formats carry identical values.
class RecordWriter {
  public:
    explicit RecordWriter(OutFormat format, std::ostream& out = std::cout)
        : format_(format), out_(out) {}

    void write(const ordered_json& record) {
        if (format_ == OutFormat::json) {
            out_ << record.dump() << "\n";
            return;
        }
        if (!header_done_) {
            bool first = true;
            for (const auto& item : record.items()) {
                if (!first) out_ << ',';
                first = false;
                out_ << item.key();
            }
            out_ << "\n";
            header_done_ = true;
        }
        bool first = true;
        for (const auto& item : record.items()) {
            if (!first) out_ << ',';
            first = false;
            out_ << csv_cell(item.value());
        }
        out_ << "\n";
    }

  private:
    OutFormat format_;
    std::ostream& out_;
    bool header_done_ = false;
};

std::string rational_str(const polya::BigRational& r) {
    return boost::multiprecision::numerator(r).str() + "/" +
           boost::multiprecision::denominator(r).str();
}

// ---------------------------------------------------------------------------
// count / simple

// The declared text form of a whole series: a JSON array of decimal
// integer strings, index = power of t.
void write_series(const std::vector<polya::BigInt>& coeffs) {
    ordered_json arr = ordered_json::array();
    for (const polya::BigInt& c : coeffs) arr.push_back(c.str());
    std::cout << arr.dump() << "\n";
}

void run_count(int dim, int n_max, const std::string& method, std::optional<int> cap_flag,
               bool as_series, RecordWriter& out) {
    polya::validate_dimension(dim);
    if (n_max < 0) throw polya::domain_error("--n-max must be >= 0");

    std::vector<polya::BigInt> counts;
    if (method == "formula") {
        for (int n = 0; n <= n_max; ++n) counts.push_back(polya::closed_form_loop_count(dim, n));
    } else if (method == "series") {
        // Round trip through both inversion directions: B -> P -> B.
        const auto b = polya::loops_from_simple(
            polya::simple_from_loops(polya::closed_form_loop_series(dim, n_max)));
        counts.assign(b.coeffs().begin(), b.coeffs().end());
    } else if (method == "enumerate") {
        const int cap = polya::detail::resolve_cap(
            dim, resolve_limit(cap_flag, "POLYA_ENUM_CAP", polya::default_enumeration_cap(dim)));
        polya::detail::check_cap(n_max, cap);
        for (int n = 0; n <= n_max; ++n)
            counts.push_back(polya::BigInt(polya::enumerate_loop_count(dim, n, cap)));
    } else {
        throw polya::domain_error("--method must be formula, series or enumerate");
    }

    if (as_series) {
        write_series(counts);
        return;
    }
    for (int n = 0; n <= n_max; ++n) {
        ordered_json rec;
        rec["command"] = "count";
        rec["dim"] = dim;
        rec["method"] = method;
        rec["n"] = n;
        rec["count"] = counts[static_cast<std::size_t>(n)].str();
        out.write(rec);
    }
}

void run_simple(int dim, int n_max, bool as_series, RecordWriter& out) {
    polya::validate_dimension(dim);
    if (n_max < 0) throw polya::domain_error("--n-max must be >= 0");
    const polya::CountSeries p =
        polya::simple_loop_series(dim, static_cast<std::size_t>(n_max));
    if (as_series) {
        write_series(p.coeffs());
        return;
    }
    for (int n = 1; n <= n_max; ++n) {
        ordered_json rec;
        rec["command"] = "simple";
        rec["dim"] = dim;
        rec["n"] = n;
        rec["count"] = p[static_cast<std::size_t>(n)].str();
        out.write(rec);
    }
}

// ---------------------------------------------------------------------------
// return-prob

void run_return_prob(int dim, int terms, const std::string& mode,
                     std::optional<int> threshold_flag, RecordWriter& out) {
    const int threshold =
        resolve_limit(threshold_flag, "POLYA_EXACT_THRESHOLD", polya::default_exact_threshold);
    ordered_json rec;
    rec["command"] = "return-prob";
    rec["dim"] = dim;
    rec["terms"] = terms;
    rec["mode"] = mode;
    if (mode == "exact") {
        const auto r = polya::return_probability(dim, terms, polya::NumericMode::exact, threshold);
        rec["value"] = rational_str(r.exact);
        rec["approx"] = r.value;
    } else if (mode == "float") {
        const auto r = polya::return_probability(dim, terms, polya::NumericMode::floating);
        rec["value"] = r.value;
    } else {
        throw polya::domain_error("--mode must be exact or float");
    }
    out.write(rec);
}

// ---------------------------------------------------------------------------
// codec

void run_encode(const std::string& walk_text, RecordWriter& out) {
    const polya::Walk w = polya::Walk::parse(2, walk_text);
    ordered_json rec;
    rec["command"] = "codec";
    rec["op"] = "encode";
    rec["walk"] = walk_text;
    rec["pair"] = polya::encode_walk(w).str();
    out.write(rec);
}

void run_decode(const std::string& pair_text, RecordWriter& out) {
    const polya::Walk w = polya::decode_pair(polya::SignPair::parse(pair_text));
    ordered_json rec;
    rec["command"] = "codec";
    rec["op"] = "decode";
    rec["pair"] = pair_text;
    rec["walk"] = w.str();
    out.write(rec);
}

// ---------------------------------------------------------------------------
// asymptotics / simulate

void run_asymptotics(int dim, std::int64_t n, RecordWriter& out) {
    const auto report = polya::asymptotic_ratio(dim, n);
    ordered_json rec;
    rec["command"] = "asymptotics";
    rec["dim"] = dim;
    rec["n"] = n;
    rec["weighted_coefficient"] = report.weighted_coefficient;
    rec["predicted"] = report.predicted;
    rec["ratio"] = report.ratio;
    out.write(rec);
}

void run_simulate(const polya::McConfig& cfg, RecordWriter& out) {
    const auto est = polya::simulate_return(cfg);
    ordered_json rec;
    rec["command"] = "simulate";
    rec["dim"] = cfg.dimension;
    rec["steps"] = cfg.max_steps;
    rec["samples"] = cfg.samples;
    rec["seed"] = cfg.seed;
    rec["workers"] = cfg.streams;
    rec["returned"] = est.returned;
    rec["fraction"] = est.returned_fraction;
    rec["stderr"] = est.standard_error;
    out.write(rec);
}

// ---------------------------------------------------------------------------
// verify-paper: the headline constants and identities, checked end to end.

struct Verification {
    std::string check;
    std::string detail;
    bool pass = false;
};

std::vector<Verification> run_verifications() {
    using namespace polya;
    std::vector<Verification> rows;

    {
        const CountSeries p = simple_loop_series(2, 2);
        rows.push_back({"simple_loop_counts_series",
                        "P_1 = " + p[1].str() + ", P_2 = " + p[2].str() + " (expect 4, 20)",
                        p[1] == 4 && p[2] == 20});
    }
    {
        const auto p1 = enumerate_simple_loop_count(2, 1);
        const auto p2 = enumerate_simple_loop_count(2, 2);
        rows.push_back({"simple_loop_counts_enumeration",
                        "P_1 = " + std::to_string(p1) + ", P_2 = " + std::to_string(p2) +
                            " (expect 4, 20)",
                        p1 == 4 && p2 == 20});
    }
    {
        bool ok = true;
        for (int n = 1; n <= 3; ++n)
            ok = ok && BigInt(enumerate_loop_count(2, n)) == closed_form_loop_count(2, n);
        rows.push_back({"loop_counts_closed_form_2d",
                        "B_n = C(2n,n)^2 vs enumeration, n <= 3", ok});
    }
    {
        bool ok = true;
        for (int n = 1; n <= 6; ++n)
            ok = ok && BigInt(enumerate_loop_count(1, n)) == closed_form_loop_count(1, n);
        rows.push_back({"loop_counts_closed_form_1d",
                        "B_n = C(2n,n) vs enumeration, n <= 6", ok});
    }
    {
        const Walk w = decode_pair(SignPair::parse("+---++,++---+"));
        rows.push_back({"worked_example_decode",
                        "decode(+---++,++---+) = " + w.str() + " (expect RULLDR, a loop)",
                        w.str() == "RULLDR" && displacement(w).is_origin()});
    }
    {
        const std::string pair = encode_walk(Walk::parse(2, "RUDDLU")).str();
        rows.push_back({"worked_example_encode",
                        "encode(RUDDLU) = " + pair + " (expect +-++--,++---+)",
                        pair == "+-++--,++---+"});
    }
    {
        const bool ok = encode_walk(Walk::parse(2, "RULLDR")).str() == "+---++,++---+" &&
                        decode_pair(SignPair::parse("+-++--,++---+")).str() == "RUDDLU";
        rows.push_back({"worked_example_round_trip", "both figures, both directions", ok});
    }
    {
        bool ok = true;
        BigRational prev = 0;
        for (int n = 1; n <= 32; ++n) {
            const BigRational r = return_probability(2, n).exact;
            ok = ok && r > prev && r <= 1;
            prev = r;
        }
        rows.push_back({"return_probability_bounded",
                        "r_N strictly increasing and <= 1 for N <= 32", ok});
    }
    for (int dim : {1, 2}) {
        const auto rep = asymptotic_ratio(dim, 1000);
        const std::string target = dim == 1 ? "1/sqrt(pi n)" : "1/(pi n)";
        rows.push_back({"asymptotics_" + std::to_string(dim) + "d",
                        "b_1000 / " + target + " = " + std::to_string(rep.ratio),
                        std::abs(rep.ratio - 1.0) < 1e-3});
    }
    {
        const double s2 = weighted_loop_partial_sum(2, 100);
        const double s4 = weighted_loop_partial_sum(2, 10000);
        bool bound_ok = true;
        const auto b = weighted_loop_coeffs(2, 10000);
        for (int n = 1; n <= 10000; ++n)
            bound_ok = bound_ok && b[static_cast<std::size_t>(n)] >= 1.0 / (4.0 * n);
        rows.push_back({"weighted_series_divergence_2d",
                        "sum b_n grows from " + std::to_string(s2) + " (N=100) to " +
                            std::to_string(s4) + " (N=10000); b_n >= 1/(4n)",
                        s4 - s2 > 1.0 && bound_ok});
    }
    return rows;
}

int run_verify_paper(RecordWriter& out) {
    const auto rows = run_verifications();
    int failed = 0;
    for (const auto& row : rows) {
        ordered_json rec;
        rec["command"] = "verify-paper";
        rec["check"] = row.check;
        rec["detail"] = row.detail;
        rec["pass"] = row.pass;
        out.write(rec);
        if (!row.pass) ++failed;
    }
    std::cerr << "verify-paper: " << rows.size() - failed << "/" << rows.size()
              << " checks passed\n";
    return failed == 0 ? 0 : 1;
}

// ---------------------------------------------------------------------------

int run(int argc, char** argv) {
    CLI::App app{"lattice loops, simple-loop series inversion and return probabilities"};
    app.require_subcommand(1);

    // Registered on every subcommand; flag > POLYA_FORMAT > json.
    std::string format;
    const auto add_format_option = [&format](CLI::App* cmd) {
        cmd->add_option("--format", format,
                        "output format: json (JSON Lines, default) or csv");
    };

    // count
    auto* count_cmd = app.add_subcommand("count", "loop counts B_n, one row per n <= n-max");
    int count_dim = 0;
    int count_n_max = 0;
    std::string count_method = "formula";
    std::optional<int> count_cap;
    count_cmd->add_option("--dim", count_dim, "lattice dimension, 1 or 2")->required();
    count_cmd->add_option("--n-max", count_n_max, "largest half-length n")->required();
    count_cmd->add_option("--method", count_method, "formula | series | enumerate")
        ->check(CLI::IsMember({"formula", "series", "enumerate"}));
    count_cmd->add_option("--enum-cap", count_cap,
                          "half-length cap for --method enumerate (env POLYA_ENUM_CAP)");
    bool count_as_series = false;
    count_cmd->add_flag("--as-series", count_as_series,
                        "emit one JSON array of decimal coefficient strings instead of rows");

    // simple
    auto* simple_cmd =
        app.add_subcommand("simple", "simple-loop counts P_n via series inversion");
    int simple_dim = 0;
    int simple_n_max = 0;
    bool simple_as_series = false;
    simple_cmd->add_option("--dim", simple_dim, "lattice dimension, 1 or 2")->required();
    simple_cmd->add_option("--n-max", simple_n_max, "largest half-length n")->required();
    simple_cmd->add_flag("--as-series", simple_as_series,
                         "emit one JSON array of decimal coefficient strings instead of rows");

    // return-prob
    auto* rp_cmd = app.add_subcommand("return-prob",
                                      "partial sum r_N of the return probability");
    int rp_dim = 0;
    int rp_terms = 0;
    std::string rp_mode = "exact";
    std::optional<int> rp_threshold;
    rp_cmd->add_option("--dim", rp_dim, "lattice dimension, 1 or 2")->required();
    rp_cmd->add_option("--terms", rp_terms, "number of terms N")->required();
    rp_cmd->add_option("--mode", rp_mode, "exact | float")
        ->check(CLI::IsMember({"exact", "float"}));
    rp_cmd->add_option("--exact-threshold", rp_threshold,
                       "largest N allowed in exact mode (env POLYA_EXACT_THRESHOLD)");

    // codec
    auto* codec_cmd = app.add_subcommand("codec", "walk <-> sign-pair conversion");
    codec_cmd->require_subcommand(1);
    auto* encode_cmd = codec_cmd->add_subcommand("encode", "2D walk -> sign pair");
    std::string encode_walk_text;
    encode_cmd->add_option("--walk", encode_walk_text, "walk over RLUD, e.g. RULLDR")
        ->required();
    auto* decode_cmd = codec_cmd->add_subcommand("decode", "sign pair -> 2D walk");
    std::string decode_pair_text;
    decode_cmd->add_option("--pair", decode_pair_text, "two +/- strings joined by a comma")
        ->required();

    // asymptotics
    auto* asym_cmd =
        app.add_subcommand("asymptotics", "weighted coefficient vs asymptotic prediction");
    int asym_dim = 0;
    std::int64_t asym_n = 0;
    asym_cmd->add_option("--dim", asym_dim, "lattice dimension, 1 or 2")->required();
    asym_cmd->add_option("--n", asym_n, "coefficient index")->required();

    // simulate
    auto* sim_cmd = app.add_subcommand("simulate", "Monte Carlo return-within-L estimate");
    polya::McConfig cfg;
    sim_cmd->add_option("--dim", cfg.dimension, "lattice dimension, 1 or 2")->required();
    sim_cmd->add_option("--steps", cfg.max_steps, "step budget L, even")->required();
    sim_cmd->add_option("--samples", cfg.samples, "number of sample walks")->required();
    sim_cmd->add_option("--seed", cfg.seed, "64-bit seed");
    sim_cmd->add_option("--workers", cfg.streams, "stream/worker count");

    // verify-paper
    auto* verify_cmd =
        app.add_subcommand("verify-paper", "check the published constants and identities");

    for (CLI::App* cmd : {count_cmd, simple_cmd, rp_cmd, encode_cmd, decode_cmd, asym_cmd,
                          sim_cmd, verify_cmd})
        add_format_option(cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    RecordWriter out(resolve_format(format));

    if (*count_cmd) {
        run_count(count_dim, count_n_max, count_method, count_cap, count_as_series, out);
    } else if (*simple_cmd) {
        run_simple(simple_dim, simple_n_max, simple_as_series, out);
    } else if (*rp_cmd) {
        run_return_prob(rp_dim, rp_terms, rp_mode, rp_threshold, out);
    } else if (*codec_cmd) {
        if (*encode_cmd) run_encode(encode_walk_text, out);
        if (*decode_cmd) run_decode(decode_pair_text, out);
    } else if (*asym_cmd) {
        run_asymptotics(asym_dim, asym_n, out);
    } else if (*sim_cmd) {
        run_simulate(cfg, out);
    } else if (*verify_cmd) {
        return run_verify_paper(out);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const polya::resource_limit_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const polya::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
