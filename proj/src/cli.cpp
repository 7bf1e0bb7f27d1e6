// Copyright 2026 The mzpovm Authors
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


#include "mzpovm/cli.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mzpovm/error.hpp"
#include "mzpovm/report.hpp"
#include "mzpovm/verify.hpp"

namespace mzpovm {

namespace {

constexpr double kInputTolerance = 1e-6;

struct ConfigFlags {
    std::optional<std::string> experiment;
    std::optional<double> delta;
    std::optional<double> gamma;
    std::optional<double> theta;
    std::optional<std::string> input;
    std::optional<std::string> config_file;
    bool degrees = false;
};

void add_config_flags(CLI::App *cmd, ConfigFlags &flags) {
    cmd->add_option("--experiment", flags.experiment, "path|interference|marking|erasure|quantitative");
    cmd->add_option("--delta", flags.delta, "phase shift delta (radians)");
    cmd->add_option("--gamma", flags.gamma, "eraser phase gamma (radians)");
    cmd->add_option("--theta", flags.theta, "marker tilt theta (radians)");
    cmd->add_option("--input", flags.input, "input amplitudes as re,im,re,im");
    cmd->add_option("--config", flags.config_file, "JSON file with the same fields; flags override it");
    cmd->add_flag("--degrees", flags.degrees, "interpret angles in degrees");
}

double parse_real(const std::string &text) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception &) {
        throw Error(ErrorKind::InvalidArgument, "cannot parse number '" + text + "'");
    }
    while (used < text.size() && std::isspace(static_cast<unsigned char>(text[used]))) ++used;
    if (used != text.size() || !std::isfinite(v))
        throw Error(ErrorKind::InvalidArgument, "cannot parse number '" + text + "'");
    return v;
}

std::vector<double> parse_input_list(const std::string &text) {
    std::vector<double> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) values.push_back(parse_real(item));
    return values;
}

std::pair<Complex, Complex> normalize_input(const std::vector<double> &v, std::ostream &err) {
    if (v.size() != 4) throw Error(ErrorKind::InvalidArgument, "--input needs exactly four reals re,im,re,im");
    Complex a{v[0], v[1]};
    Complex b{v[2], v[3]};
    const double n2 = std::norm(a) + std::norm(b);
    if (!(n2 > 0.0)) throw Error(ErrorKind::InvalidArgument, "input state is the zero vector");
    if (std::abs(n2 - 1.0) > kInputTolerance) {
        err << "warning: input norm squared " << n2 << " differs from 1; renormalizing\n";
    }
    const double n = std::sqrt(n2);
    return {a / n, b / n};
}

double json_number(const nlohmann::json &j, const char *key) {
    if (!j[key].is_number()) throw Error(ErrorKind::InvalidArgument, std::string("config field '") + key + "' must be a number");
    return j[key].get<double>();
}

RunRequest build_request(const ConfigFlags &flags, std::ostream &err) {
    std::optional<std::string> experiment;
    std::optional<double> delta, gamma, theta;
    std::optional<std::vector<double>> input;

    if (flags.config_file) {
        std::ifstream in(*flags.config_file);
        if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open config file '" + *flags.config_file + "'");
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(in);
        } catch (const nlohmann::json::exception &) {
            throw Error(ErrorKind::InvalidArgument, "config file is not valid JSON");
        }
        if (!j.is_object()) throw Error(ErrorKind::InvalidArgument, "config file must hold a JSON object");
        for (const auto &[key, _] : j.items()) {
            if (key != "experiment" && key != "delta" && key != "gamma" && key != "theta" && key != "input")
                throw Error(ErrorKind::InvalidArgument, "unknown config field '" + key + "'");
        }
        if (j.contains("experiment")) {
            if (!j["experiment"].is_string()) throw Error(ErrorKind::InvalidArgument, "config field 'experiment' must be a string");
            experiment = j["experiment"].get<std::string>();
        }
        if (j.contains("delta")) delta = json_number(j, "delta");
        if (j.contains("gamma")) gamma = json_number(j, "gamma");
        if (j.contains("theta")) theta = json_number(j, "theta");
        if (j.contains("input")) {
            const auto &arr = j["input"];
            if (!arr.is_array()) throw Error(ErrorKind::InvalidArgument, "config field 'input' must be an array");
            std::vector<double> vals;
            for (const auto &x : arr) {
                if (!x.is_number()) throw Error(ErrorKind::InvalidArgument, "config field 'input' must hold numbers");
                vals.push_back(x.get<double>());
            }
            input = vals;
        }
    }

    const double scale = flags.degrees ? std::numbers::pi / 180.0 : 1.0;
    if (flags.experiment) experiment = *flags.experiment;
    if (flags.delta) delta = *flags.delta;
    if (flags.gamma) gamma = *flags.gamma;
    if (flags.theta) theta = *flags.theta;
    if (flags.input) input = parse_input_list(*flags.input);

    RunRequest req;
    req.config.experiment = parse_experiment(experiment.value_or("path"));
    const double default_delta = req.config.experiment == Experiment::Interference ? -std::numbers::pi / 2 : 0.0;
    req.config.delta = delta ? *delta * scale : default_delta;
    req.config.gamma = gamma.value_or(0.0) * scale;
    req.config.theta = theta.value_or(0.0) * scale;
    for (double x : {req.config.delta, req.config.gamma, req.config.theta}) {
        if (!std::isfinite(x)) throw Error(ErrorKind::InvalidArgument, "angles must be finite");
    }
    if (input) {
        auto [a, b] = normalize_input(*input, err);
        req.alpha = a;
        req.beta = b;
    }
    return req;
}

std::string one_line(std::string s) {
    for (char &c : s) {
        if (c == '\n' || c == '\r') c = ' ';
    }
    while (!s.empty() && s.back() == ' ') s.pop_back();
    return s;
}

}  // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Mach-Zehnder POVM simulator", "mzpovm"};
    app.require_subcommand(1);

    ConfigFlags run_flags;
    CLI::App *run_cmd = app.add_subcommand("run", "run one experiment and print a JSON report");
    add_config_flags(run_cmd, run_flags);

    ConfigFlags sweep_flags;
    std::string sweep_param;
    double sweep_from = 0.0, sweep_to = 0.0;
    long long sweep_steps = 0;
    CLI::App *sweep_cmd = app.add_subcommand("sweep", "sweep one angle and print CSV");
    add_config_flags(sweep_cmd, sweep_flags);
    sweep_cmd->add_option("--param", sweep_param, "delta|gamma|theta")->required();
    sweep_cmd->add_option("--from", sweep_from, "start value")->required();
    sweep_cmd->add_option("--to", sweep_to, "end value")->required();
    sweep_cmd->add_option("--steps", sweep_steps, "number of rows (>= 2)")->required();

    VerifyOptions vopt;
    CLI::App *verify_cmd = app.add_subcommand("verify", "run the self-verification suite");
    verify_cmd->add_option("--seed", vopt.seed, "RNG seed");
    verify_cmd->add_option("--samples", vopt.samples, "random inputs per configuration");
    verify_cmd->add_option("--tol", vopt.tolerance, "tolerance for oracle-backed checks");
    verify_cmd->add_option("--perturb", vopt.perturbation)->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << one_line(e.what()) << "\n";
        return kExitUsage;
    }

    try {
        if (*run_cmd) {
            const RunRequest req = build_request(run_flags, err);
            out << canonical_dump(run_report(req));
            return kExitOk;
        }
        if (*sweep_cmd) {
            SweepRequest req;
            req.base = build_request(sweep_flags, err);
            req.parameter = parse_sweep_parameter(sweep_param);
            const double scale = sweep_flags.degrees ? std::numbers::pi / 180.0 : 1.0;
            req.from = sweep_from * scale;
            req.to = sweep_to * scale;
            if (sweep_steps < 2 || sweep_steps > 100000)
                throw Error(ErrorKind::InvalidArgument, "steps must lie in [2, 100000]");
            req.steps = static_cast<std::size_t>(sweep_steps);
            req.check();
            out << sweep_csv(req);
            return kExitOk;
        }
        if (!std::isfinite(vopt.tolerance) || !(vopt.tolerance > 0.0))
            throw Error(ErrorKind::InvalidArgument, "--tol must be a positive number");
        if (vopt.samples == 0) throw Error(ErrorKind::InvalidArgument, "--samples must be positive");
        const VerifyReport report = run_verification(vopt);
        out << report.table();
        return report.all_passed() ? kExitOk : kExitVerifyFailed;
    } catch (const Error &e) {
        err << "error: " << one_line(e.what()) << "\n";
        return kExitUsage;
    }
}

}  // namespace mzpovm
