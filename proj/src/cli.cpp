// Copyright 2026 the ttnrep authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ttnrep/cli.hpp"

#include <cctype>
#include <chrono>
#include <ctime>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "ttnrep/errors.hpp"
#include "ttnrep/serialize.hpp"
#include "ttnrep/version.hpp"

namespace ttnrep::cli {
namespace {

std::string utc_now() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

// Accepts inline JSON (first non-space char '{' or '[') or a file path.
json load_json_arg(const std::string &arg) {
    std::size_t i = 0;
    while (i < arg.size() && std::isspace(static_cast<unsigned char>(arg[i]))) ++i;
    if (i < arg.size() && (arg[i] == '{' || arg[i] == '[')) {
        try {
            return json::parse(arg);
        } catch (const nlohmann::json::exception &e) {
            throw PreconditionError(std::string("invalid JSON argument: ") + e.what());
        }
    }
    std::ifstream in(arg);
    if (!in) throw IoError("cannot open " + arg);
    try {
        json j;
        in >> j;
        return j;
    } catch (const nlohmann::json::exception &e) {
        throw PreconditionError("invalid JSON in " + arg + ": " + e.what());
    }
}

void write_output(const std::string &text, const std::string &path, std::ostream &fallback) {
    if (path.empty()) {
        fallback << text;
        if (!text.empty() && text.back() != '\n') fallback << "\n";
        return;
    }
    std::ofstream f(path);
    if (!f) throw IoError("cannot open " + path + " for writing");
    f << text;
    if (!f) throw IoError("write failed for " + path);
}

struct CommonOpts {
    std::size_t d = 2;
    std::uint64_t seed = 0;
    std::string load;
    std::string out;
    std::size_t kmax = 8;
    double tol = 1e-9;
    std::string timestamp;
};

RunManifest make_manifest(const std::vector<std::string> &args, json config,
                          std::vector<std::uint64_t> seeds, const std::string &timestamp) {
    RunManifest m;
    m.command = args;
    m.config = std::move(config);
    m.version = kVersion;
    m.timestamp = timestamp.empty() ? utc_now() : timestamp;
    m.seeds = std::move(seeds);
    return m;
}

Tolerances make_tolerances(double tol) {
    Tolerances t;
    t.condition = tol;
    t.eigenvalue_one = tol;
    return t;
}

Isometry resolve_isometry(const CommonOpts &opt, const std::string &example,
                          std::vector<std::uint64_t> &seeds, std::string &source) {
    if (!example.empty()) {
        if (example == "so3") {
            source = "so3";
            return so3_isometry();
        }
        if (example == "stabilizer") {
            source = "stabilizer:d=" + std::to_string(opt.d);
            return pauli_stabilizer_isometry(opt.d);
        }
        throw PreconditionError("unknown example '" + example + "' (so3, stabilizer)");
    }
    if (!opt.load.empty()) {
        source = "file:" + opt.load;
        const json j = load_json_arg(opt.load);
        return isometry_from_json(j.contains("isometry") ? j["isometry"] : j);
    }
    seeds.push_back(opt.seed);
    source = "haar:seed=" + std::to_string(opt.seed);
    return haar_isometry(opt.d, opt.seed);
}

StateVector resolve_state(const std::string &arg, std::size_t d) {
    if (arg.empty()) return StateVector::basis(d, 0);
    StateVector v = state_from_json(load_json_arg(arg));
    if (v.dim() != d) throw PreconditionError("boundary state dimension differs from d");
    return v;
}

int dispatch(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"tree-tensor-network representations of the dyadic circle group"};
    app.name("ttnrep");
    app.require_subcommand(1);

    CommonOpts opt;
    std::string example, mode = "transfer", phi_arg, psi_arg, verb, f_arg, g_arg, t_arg;
    std::size_t samples = 1;

    auto add_common = [&](CLI::App *cmd, bool with_seed = true) {
        cmd->add_option("--d", opt.d, "site dimension (2..8)");
        if (with_seed) cmd->add_option("--seed", opt.seed, "random seed");
        cmd->add_option("--out", opt.out, "output path (default stdout)");
        cmd->add_option("--tol", opt.tol, "condition tolerance (default 1e-9)");
        cmd->add_option("--timestamp", opt.timestamp,
                        "fixed manifest timestamp (for reproducible files)");
    };

    CLI::App *sample = app.add_subcommand("sample", "draw a Haar-random isometry and save it");
    add_common(sample);

    CLI::App *check = app.add_subcommand("check", "full diagnostics report for one isometry");
    add_common(check);
    check->add_option("--kmax", opt.kmax, "series length (default 8)");
    check->add_option("--load", opt.load, "isometry JSON (path or inline)");

    CLI::App *decay = app.add_subcommand("decay", "renormalized overlap norm series as CSV");
    add_common(decay);
    decay->add_option("--kmax", opt.kmax, "series length (<= 12)");
    decay->add_option("--load", opt.load, "isometry JSON (path or inline)");

    CLI::App *mel = app.add_subcommand("melement", "rotation matrix elements as CSV");
    add_common(mel);
    mel->add_option("--kmax", opt.kmax, "series length");
    mel->add_option("--load", opt.load, "isometry JSON (path or inline)");
    mel->add_option("--mode", mode, "transfer | direct | both")
        ->check(CLI::IsMember({"transfer", "direct", "both"}));
    mel->add_option("--phi", phi_arg, "left boundary state as JSON [re,im] list");
    mel->add_option("--psi", psi_arg, "right boundary state as JSON [re,im] list");

    CLI::App *scan = app.add_subcommand("scan", "Haar ensemble sweep");
    add_common(scan);
    scan->add_option("--samples", samples, "number of seeds");
    scan->add_option("--kmax", opt.kmax, "series length per sample");

    CLI::App *ex = app.add_subcommand("example", "diagnostics for a named construction");
    ex->add_option("name", example, "so3 | stabilizer")->required();
    add_common(ex, /*with_seed=*/false);
    ex->add_option("--kmax", opt.kmax, "series length (default 8)");

    CLI::App *th = app.add_subcommand("thompson", "exact circle-map algebra");
    th->add_option("verb", verb, "eval | compose | inverse | distance")->required();
    th->add_option("--f", f_arg, "element JSON (path or inline)");
    th->add_option("--g", g_arg, "second element JSON (compose)");
    th->add_option("--t", t_arg, "dyadic point p/2^n (eval)");
    th->add_option("--out", opt.out, "output path (default stdout)");
    th->add_option("--timestamp", opt.timestamp, "fixed manifest timestamp");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError &e) {
        err << "usage error: " << e.what() << "\n";
        return 1;
    }

    const Tolerances tol = make_tolerances(opt.tol);

    if (*sample) {
        std::vector<std::uint64_t> seeds{opt.seed};
        const Isometry v = haar_isometry(opt.d, opt.seed);
        json config{{"d", opt.d}, {"seed", opt.seed}};
        json j;
        j["manifest"] = to_json(make_manifest(args, config, seeds, opt.timestamp));
        j["isometry"] = isometry_to_json(v);
        write_output(j.dump(2), opt.out, out);
        return 0;
    }

    if (*check || *ex) {
        std::vector<std::uint64_t> seeds;
        std::string source;
        const Isometry v = resolve_isometry(opt, *ex ? example : std::string{}, seeds, source);
        const DiagnosticsReport rep = run_diagnostics(v, source, opt.kmax, tol);
        json config{{"d", v.d()}, {"kmax", opt.kmax}, {"tol", opt.tol}, {"source", source}};
        json j;
        j["manifest"] = to_json(make_manifest(args, config, seeds, opt.timestamp));
        j["report"] = report_to_json(rep);
        write_output(j.dump(2), opt.out, out);
        return 0;
    }

    if (*decay) {
        if (opt.kmax > 12) throw PreconditionError("decay: --kmax must be <= 12");
        std::vector<std::uint64_t> seeds;
        std::string source;
        const Isometry v = resolve_isometry(opt, "", seeds, source);
        const DiagnosticsReport rep = run_diagnostics(v, source, opt.kmax, tol);
        json config{{"d", v.d()}, {"kmax", opt.kmax}, {"source", source}};
        write_output(decay_csv(rep, make_manifest(args, config, seeds, opt.timestamp)), opt.out,
                     out);
        return 0;
    }

    if (*mel) {
        std::vector<std::uint64_t> seeds;
        std::string source;
        const Isometry v = resolve_isometry(opt, "", seeds, source);
        const StateVector phi = resolve_state(phi_arg, v.d());
        const StateVector psi = resolve_state(psi_arg, v.d());
        const auto kmax = static_cast<std::uint32_t>(opt.kmax);

        MelementSeries series = transfer_series(v, phi, psi, kmax);
        std::vector<cplx> direct;
        if (mode != "transfer") {
            for (std::uint32_t k = 1; k <= kmax; ++k) {
                direct.push_back(rotation_matrix_element(v, phi, psi, k));
            }
        }
        json config{{"d", v.d()}, {"kmax", opt.kmax}, {"mode", mode}, {"source", source}};
        write_output(melement_csv(series.ks, series.values, direct, series.bounds, mode,
                                  make_manifest(args, config, seeds, opt.timestamp)),
                     opt.out, out);
        return 0;
    }

    if (*scan) {
        EnsembleConfig cfg;
        cfg.d = opt.d;
        cfg.num_samples = samples;
        cfg.base_seed = opt.seed;
        cfg.kmax = opt.kmax;
        cfg.tolerances = tol;
        const auto reports = genericity_scan(cfg);
        const ScanSummary summary = summarize_scan(reports);

        std::vector<std::uint64_t> seeds(samples);
        for (std::size_t i = 0; i < samples; ++i) seeds[i] = cfg.base_seed + i;
        json config{{"d", opt.d}, {"samples", samples}, {"seed", cfg.base_seed},
                    {"kmax", opt.kmax}, {"tol", opt.tol}};
        const RunManifest manifest = make_manifest(args, config, seeds, opt.timestamp);

        json j;
        j["manifest"] = to_json(manifest);
        j["summary"] = {{"condition_failures", summary.condition_failures},
                        {"min_margin", summary.min_margin}};
        json arr = json::array();
        for (const auto &rep : reports) arr.push_back(report_to_json(rep));
        j["reports"] = std::move(arr);

        if (opt.out.empty()) {
            write_output(j.dump(2), "", out);
        } else {
            write_output(j.dump(2), opt.out + ".json", out);
            write_output(scan_csv(reports, manifest), opt.out + ".csv", out);
        }
        return 0;
    }

    if (*th) {
        auto need = [&](const std::string &value, const char *what) {
            if (value.empty())
                throw PreconditionError(std::string("thompson ") + verb + " requires " + what);
            return value;
        };
        auto element_arg = [&](const std::string &arg) {
            const json j = load_json_arg(arg);
            return element_from_json(j.contains("element") ? j["element"] : j);
        };
        json j;
        j["manifest"] = to_json(make_manifest(args, json{{"verb", verb}}, {}, opt.timestamp));
        if (verb == "eval") {
            const ThompsonElement f = element_arg(need(f_arg, "--f"));
            auto t = DyadicRational::parse(need(t_arg, "--t"));
            if (!t) throw PreconditionError("--t is not a dyadic rational");
            j["value"] = evaluate(f, *t).to_string();
        } else if (verb == "compose") {
            const ThompsonElement f = element_arg(need(f_arg, "--f"));
            const ThompsonElement g = element_arg(need(g_arg, "--g"));
            j["element"] = element_to_json(compose(f, g));
        } else if (verb == "inverse") {
            j["element"] = element_to_json(inverse(element_arg(need(f_arg, "--f"))));
        } else if (verb == "distance") {
            const ThompsonElement f = element_arg(need(f_arg, "--f"));
            j["value"] = circle_distance_to_identity(f).to_string();
        } else {
            throw PreconditionError("unknown thompson verb '" + verb + "'");
        }
        write_output(j.dump(2), opt.out, out);
        return 0;
    }

    return 0;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    try {
        return dispatch(args, out, err);
    } catch (const SizeLimitError &e) {
        err << "size limit: " << e.what() << "\n";
        return 3;
    } catch (const IoError &e) {
        err << "io error: " << e.what() << "\n";
        return 4;
    } catch (const OverflowError &e) {
        err << "overflow: " << e.what() << "\n";
        return 2;
    } catch (const PreconditionError &e) {
        err << "precondition: " << e.what() << "\n";
        return 2;
    }
}

} // namespace ttnrep::cli
