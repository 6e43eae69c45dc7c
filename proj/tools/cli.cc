// Copyright 2026 The ldcoh Authors
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


#include "cli.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "ldcoh/basis.h"
#include "ldcoh/duality.h"
#include "ldcoh/json_io.h"
#include "ldcoh/kraus.h"
#include "ldcoh/povm.h"

namespace ldcoh::cli {

namespace {

using io::json;

struct Common {
    std::optional<double> tol;
    std::uint64_t seed = 42;
    std::string out;
    int workers = 0;
};

void add_common(CLI::App *cmd, Common &c) {
    cmd->add_option("--tol", c.tol, "Tolerance override");
    cmd->add_option("--seed", c.seed, "Random seed");
    cmd->add_option("--out", c.out, "Output file (default: stdout)");
    cmd->add_option("--workers", c.workers, "Worker threads (fallback: LDCOH_WORKERS)");
}

int resolve_workers(int requested) {
    if (requested > 0) {
        return requested;
    }
    if (const char *env = std::getenv("LDCOH_WORKERS")) {
        try {
            int v = std::stoi(env);
            if (v > 0) {
                return v;
            }
        } catch (const std::exception &) {
        }
        throw io::InputError("LDCOH_WORKERS: expected a positive integer");
    }
    return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

/// Everything needed to reproduce an output, written next to it.
struct RunManifest {
    std::string command;
    std::vector<std::string> inputs;
    std::optional<std::uint64_t> seed;
    json tolerances = json::object();
    std::vector<std::string> outputs;

    json to_json() const {
        json j = {{"command", command},
                  {"inputs", inputs},
                  {"tolerances", tolerances},
                  {"outputs", outputs},
                  {"tool_version", kToolVersion}};
        j["seed"] = seed ? json(*seed) : json(nullptr);
        return j;
    }
};

class Session {
   public:
    Session(std::ostream &out, std::ostream &err) : out_(out), err_(err) {
    }

    // Writes the payload to --out (or stdout) and the manifest beside it.
    void emit(const std::string &payload, const Common &c, RunManifest manifest) {
        if (!c.out.empty()) {
            write_file(c.out, payload);
            manifest.outputs.push_back(c.out);
            manifest.outputs.push_back(c.out + ".manifest.json");
            write_file(c.out + ".manifest.json", manifest.to_json().dump(2) + "\n");
        } else {
            out_ << payload;
        }
        err_ << "manifest: " << manifest.to_json().dump() << "\n";
    }

    std::ostream &err() {
        return err_;
    }

   private:
    static void write_file(const std::string &path, const std::string &text) {
        std::ofstream f(path, std::ios::binary);
        if (!f) {
            throw io::InputError(path + ": cannot open for writing");
        }
        f << text;
    }

    std::ostream &out_;
    std::ostream &err_;
};

}  // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Coherence with respect to general (possibly linearly dependent) bases", "ldcoh"};
    app.require_subcommand(1);
    Session session(out, err);
    std::function<void()> action;

    Common common;
    std::string state_path, basis_path, kraus_path, circle_path, config_path, distance = "trace";
    int resolution = 10000;
    bool all_points = false;
    long n_samples = 100000;
    std::string optimizer = "nelder-mead-refine";
    std::optional<double> fixed_r;

    auto *membership_cmd = app.add_subcommand("membership", "Decide whether a state is free for a basis");
    membership_cmd->add_option("--state", state_path, "State JSON")->required();
    membership_cmd->add_option("--basis", basis_path, "Basis JSON")->required();
    add_common(membership_cmd, common);
    membership_cmd->callback([&] {
        action = [&] {
            double tol = common.tol.value_or(kMembershipTol);
            auto rho = io::state_from(io::read_file(state_path));
            auto basis = io::basis_from(io::read_file(basis_path));
            auto res = membership(rho, basis, tol);
            RunManifest m{"membership", {state_path, basis_path}, std::nullopt, {{"membership", tol}}, {}};
            session.emit(io::membership_to_json(res).dump(2) + "\n", common, m);
        };
    });

    auto *coherence_cmd = app.add_subcommand("coherence", "Distance of a state to the free set");
    coherence_cmd->add_option("--state", state_path, "State JSON")->required();
    coherence_cmd->add_option("--basis", basis_path, "Basis JSON")->required();
    coherence_cmd->add_option("--distance", distance, "trace | frobenius");
    add_common(coherence_cmd, common);
    coherence_cmd->callback([&] {
        action = [&] {
            Distance which = parse_distance(distance);
            auto rho = io::state_from(io::read_file(state_path));
            auto basis = io::basis_from(io::read_file(basis_path));
            json report = {{"distance", distance_name(which)}};
            if (which == Distance::kTraceNorm) {
                TraceCoherenceOptions opt;
                opt.membership_tol = common.tol.value_or(kMembershipTol);
                auto tc = coherence_trace_detailed(rho, basis, opt);
                report["coherence"] = tc.value;
                report["lower_bound"] = tc.lower_bound;
                report["weights"] = tc.weights;
            } else {
                report["coherence"] = coherence_generic(rho, basis, which);
            }
            RunManifest m{"coherence", {state_path, basis_path}, std::nullopt, {{"membership", kMembershipTol}}, {}};
            session.emit(report.dump(2) + "\n", common, m);
        };
    });

    auto *kraus_cmd = app.add_subcommand("kraus-check", "Certify Kraus operators as incoherent");
    kraus_cmd->add_option("--kraus", kraus_path, "Kraus list JSON")->required();
    kraus_cmd->add_option("--basis", basis_path, "Basis JSON");
    kraus_cmd->add_option("--circle", circle_path, "Circle basis JSON {theta, phis}");
    add_common(kraus_cmd, common);
    kraus_cmd->callback([&] {
        action = [&] {
            if (basis_path.empty() && circle_path.empty()) {
                throw io::InputError("kraus-check: need --basis or --circle");
            }
            double tol = common.tol.value_or(kMembershipTol);
            auto channel = io::kraus_from(io::read_file(kraus_path));
            std::optional<QubitCircleBasis> circle;
            if (!circle_path.empty()) {
                circle = io::circle_from(io::read_file(circle_path));
            }
            GeneralBasis basis = basis_path.empty() ? circle->basis() : io::basis_from(io::read_file(basis_path));
            json ops = json::array();
            bool all_incoherent = true;
            for (const auto &k : channel) {
                auto v = vertex_image_check(k, basis, tol);
                all_incoherent = all_incoherent && v.incoherent;
                json entry = {{"incoherent", v.incoherent},
                              {"zero_operator", v.zero_operator},
                              {"residuals", v.residuals}};
                entry["failing_vertex"] = v.failing_vertex ? json(*v.failing_vertex) : json(nullptr);
                if (circle) {
                    entry["theorem1"] = io::theorem1_to_json(theorem1_check(k, *circle, 1e-8));
                }
                ops.push_back(entry);
            }
            json report = {{"operators", ops},
                           {"all_incoherent", all_incoherent},
                           {"completeness_residual", completeness_residual(channel)}};
            std::vector<std::string> inputs{kraus_path};
            if (!basis_path.empty()) {
                inputs.push_back(basis_path);
            }
            if (!circle_path.empty()) {
                inputs.push_back(circle_path);
            }
            RunManifest m{"kraus-check", inputs, std::nullopt, {{"membership", tol}, {"theorem1", 1e-8}}, {}};
            session.emit(report.dump(2) + "\n", common, m);
        };
    });

    auto *povm_cmd = app.add_subcommand("povm-build", "Measurement whose outcomes are the basis states");
    povm_cmd->add_option("--basis", basis_path, "Basis JSON")->required();
    add_common(povm_cmd, common);
    povm_cmd->callback([&] {
        action = [&] {
            auto basis = io::basis_from(io::read_file(basis_path));
            auto built = build_povm(basis);
            json ext = json::array();
            for (const auto &s : built.extension) {
                ext.push_back(io::to_json(s.amplitudes()));
            }
            double residual = built.povm.completeness_residual();
            json report = io::povm_to_json(built.povm);
            report["weights"] = built.weights;
            report["extension"] = ext;
            report["completeness_residual"] = residual;
            session.err() << "completeness residual: " << fmt(residual) << "\n";
            RunManifest m{"povm-build", {basis_path}, std::nullopt, {{"positivity_floor", kPositivityFloor}}, {}};
            session.emit(report.dump(2) + "\n", common, m);
        };
    });

    auto *scan_cmd = app.add_subcommand("maxcoh-scan", "Maximally coherent pure qubit states");
    scan_cmd->add_option("--basis", basis_path, "Basis JSON")->required();
    scan_cmd->add_option("--resolution", resolution, "Fibonacci-sphere grid size");
    scan_cmd->add_flag("--all", all_points, "Write the whole grid instead of the maximizers");
    add_common(scan_cmd, common);
    scan_cmd->callback([&] {
        action = [&] {
            auto basis = io::basis_from(io::read_file(basis_path));
            ScanOptions opt;
            opt.resolution = resolution;
            if (common.tol) {
                opt.max_tol = *common.tol;
            }
            auto points = all_points ? coherence_grid(basis, resolution) : max_coherent_scan(basis, opt);
            std::ostringstream csv;
            csv << "x,y,z,coherence\n";
            for (const auto &p : points) {
                csv << fmt(p.point.x) << "," << fmt(p.point.y) << "," << fmt(p.point.z) << "," << fmt(p.coherence)
                    << "\n";
            }
            RunManifest m{"maxcoh-scan", {basis_path}, std::nullopt, {{"max_tol", opt.max_tol}}, {}};
            session.emit(csv.str(), common, m);
        };
    });

    auto *duality_cmd = app.add_subcommand("duality", "Three-path double-slit duality experiment");
    duality_cmd->require_subcommand(1);
    auto *run_cmd = duality_cmd->add_subcommand("run", "Evaluate one configuration");
    run_cmd->add_option("--config", config_path, "Config JSON")->required();
    add_common(run_cmd, common);
    run_cmd->callback([&] {
        action = [&] {
            auto cfg = io::config_from(io::read_file(config_path));
            json report = io::result_to_json(run_duality(cfg));
            RunManifest m{"duality run", {config_path}, std::nullopt, {{"gram_det_min", 1e-10}}, {}};
            session.emit(report.dump(2) + "\n", common, m);
        };
    });
    auto *sweep_cmd = duality_cmd->add_subcommand("sweep", "Seeded search for the maximum of C + D");
    sweep_cmd->add_option("--n", n_samples, "Number of random configurations");
    sweep_cmd->add_option("--optimizer", optimizer, "random | nelder-mead-refine");
    sweep_cmd->add_option("--fixed-r", fixed_r, "Hold R at this value");
    add_common(sweep_cmd, common);
    sweep_cmd->callback([&] {
        action = [&] {
            SweepOptions opt;
            opt.n_samples = n_samples;
            opt.seed = common.seed;
            opt.optimizer = parse_optimizer(optimizer);
            opt.fixed_R = fixed_r;
            opt.workers = resolve_workers(common.workers);
            if (fixed_r && !(*fixed_r >= 0 && *fixed_r <= 1)) {
                throw io::InputError("--fixed-r must lie in [0, 1]");
            }
            auto res = complementarity_sweep(opt);
            std::ostringstream csv;
            csv << "sample_id,R,C,P,retain,D,sum\n";
            for (const auto &s : res.samples) {
                const auto &r = s.result;
                csv << s.id << "," << fmt(s.cfg.R) << "," << fmt(r.coherence) << "," << fmt(r.uqsd_bound) << ","
                    << fmt(r.retain_prob) << "," << fmt(r.distinguishability) << "," << fmt(r.sum) << "\n";
            }
            json summary = {{"max_sum", res.max_sum},
                            {"argmax_config", io::config_to_json(res.argmax_cfg)},
                            {"argmax_result", io::result_to_json(res.argmax_result)},
                            {"argmax_refined", res.argmax_refined},
                            {"max_C_plus_P", res.max_c_plus_p},
                            {"max_C_plus_P_sample", res.max_c_plus_p_id}};
            RunManifest m{"duality sweep", {}, common.seed, {{"gram_det_min", opt.gram_det_min}}, {}};
            m.tolerances["optimizer"] = optimizer;
            m.tolerances["n"] = n_samples;
            if (common.out.empty()) {
                session.emit(summary.dump(2) + "\n", common, m);
            } else {
                session.err() << summary.dump() << "\n";
                session.emit(csv.str(), common, m);
            }
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInputError;
    }
    try {
        if (action) {
            action();
        }
    } catch (const io::InputError &e) {
        err << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitDomainError;
    }
    return kExitOk;
}

}  // namespace ldcoh::cli
