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

#include "mzpovm/report.hpp"

#include <cstdio>
#include <sstream>

#include "mzpovm/extraction.hpp"
#include "mzpovm/oracle.hpp"
#include "mzpovm/relations.hpp"

namespace mzpovm {
namespace {

using nlohmann::json;

json complex_json(Complex c) { return json::array({c.real(), c.imag()}); }

json matrix_json(const Operator2 &m) {
    json rows = json::array();
    for (std::size_t r = 0; r < 2; ++r) rows.push_back(json::array({complex_json(m(r, 0)), complex_json(m(r, 1))}));
    return rows;
}

json bloch_json(const BlochVector &v) { return json::array({v.x(), v.y(), v.z()}); }

json povm_json(const DiscretePovm &p) {
    json effects = json::object();
    for (const Effect &e : p.effects()) effects[e.label] = matrix_json(e.op);
    json out;
    out["effects"] = effects;
    out["classification"] = povm_kind_name(validate(p).kind());
    if (p.size() == 2) {
        out["contrast"] = contrast(p);
        out["unsharpness"] = unsharpness(p);
    }
    return out;
}

json relation_json(const RelationReport &r) {
    json out;
    out["name"] = r.name;
    out["lhs"] = r.lhs;
    out["rhs"] = r.rhs;
    out["kind"] = relation_kind_name(r.kind);
    out["satisfied"] = r.satisfied;
    out["slack"] = r.slack;
    out["details"] = json::object();
    for (const auto &[k, v] : r.details) out["details"][k] = v;
    return out;
}

bool has_probe_readout(const MzConfig &c) { return pointers_for(c).has_value(); }

// Second marginal paired with the detector marginal in a joint unsharp
// path/interference measurement, if the experiment realizes one.
const DiscretePovm *joint_partner(const MzConfig &c, const ExperimentPovms &m) {
    switch (c.experiment) {
        case Experiment::Erasure: return &m.coincidence;
        case Experiment::Quantitative: return &m.probe;
        default: return nullptr;
    }
}

std::string csv_field(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

json run_report(const RunRequest &request) {
    const MzConfig &config = request.config;
    const StateVector2 psi{request.alpha, request.beta};
    const MeasurementScheme scheme = scheme_for(config);
    const DiscretePovm povm = extract_povm(scheme);

    json j;
    j["config"] = {{"experiment", std::string(experiment_name(config.experiment))},
                   {"delta", config.delta},
                   {"gamma", config.gamma},
                   {"theta", config.theta},
                   {"applied_delta", effective_delta(config)}};
    j["input"] = {{"alpha", complex_json(request.alpha)}, {"beta", complex_json(request.beta)}};

    json probs = json::object();
    for (const auto &p : direct_probabilities(scheme, psi)) probs[p.label] = p.probability;
    j["probabilities"] = probs;
    j["povm"] = povm_json(povm);

    json marginals = json::object();
    json conditional = nullptr;
    json relations = json::array();

    const DensityOperator rho = DensityOperator::pure(psi);
    relations.push_back(relation_json(variance_ur(rho)));
    relations.push_back(relation_json(entropic_bound(spectral_measure(Axis::Z), spectral_measure(Axis::X), psi)));
    for (const RelationReport &r : triple_relations(rho)) relations.push_back(relation_json(r));

    if (has_probe_readout(config)) {
        const ExperimentPovms m = with_marginals(povm);
        marginals["detector"] = povm_json(m.detector);
        marginals["probe"] = povm_json(m.probe);
        marginals["coincidence"] = povm_json(m.coincidence);
        conditional = json::object();
        for (const std::string label : {"1", "2"}) {
            try {
                const auto c = conditional_probability(povm, label, psi);
                conditional[label] = {{"D1", c[0]}, {"D2", c[1]}};
            } catch (const Error &e) {
                if (e.kind() != ErrorKind::ZeroProbabilityCondition) throw;
                conditional[label] = nullptr;
            }
        }
        if (const DiscretePovm *partner = joint_partner(config, m)) {
            relations.push_back(relation_json(inaccuracy_relation(m.detector, *partner)));
        }
    } else {
        marginals["detector"] = povm_json(povm);
    }
    j["marginals"] = marginals;
    j["conditional_probabilities"] = conditional;

    const ProbeTriple probes = probes_for(config);
    const auto [duality, disturbance] = erasure_duality(request.alpha, request.beta, probes.p1, probes.p2);
    relations.push_back(relation_json(duality));
    relations.push_back(relation_json(disturbance));
    j["relations"] = relations;

    const DistinguishabilityResult dist = distinguishability(request.alpha, request.beta, probes.p1, probes.p2);
    const Visibility vis = visibility_reduced(marked_photon_state(request.alpha, request.beta, probes.p1, probes.p2));
    j["path_marking"] = {{"D", dist.D},
                         {"L", dist.L},
                         {"r0", dist.r0 ? bloch_json(*dist.r0) : json(nullptr)},
                         {"V_e", vis.value},
                         {"n", bloch_json(vis.n)},
                         {"marker_overlap", std::abs(inner(probes.p1.vec(), probes.p2.vec()))}};
    return j;
}

std::string canonical_dump(const nlohmann::json &j) { return j.dump(2) + "\n"; }

SweepParameter parse_sweep_parameter(const std::string &name) {
    if (name == "delta") return SweepParameter::Delta;
    if (name == "gamma") return SweepParameter::Gamma;
    if (name == "theta") return SweepParameter::Theta;
    throw Error(ErrorKind::InvalidArgument, "sweep parameter must be delta, gamma or theta");
}

void SweepRequest::check() const {
    if (!std::isfinite(from) || !std::isfinite(to) || !(from < to))
        throw Error(ErrorKind::InvalidArgument, "sweep needs finite from < to");
    if (steps < 2 || steps > 100000) throw Error(ErrorKind::InvalidArgument, "steps must lie in [2, 100000]");
}

std::string sweep_csv(const SweepRequest &request) {
    request.check();
    const StateVector2 psi{request.base.alpha, request.base.beta};
    std::ostringstream out;
    out << kSweepHeader << '\n';
    for (std::size_t i = 0; i < request.steps; ++i) {
        const double value =
            request.from + (request.to - request.from) * static_cast<double>(i) / static_cast<double>(request.steps - 1);
        MzConfig config = request.base.config;
        switch (request.parameter) {
            case SweepParameter::Delta: config.delta = value; break;
            case SweepParameter::Gamma: config.gamma = value; break;
            case SweepParameter::Theta: config.theta = value; break;
        }
        const MeasurementScheme scheme = scheme_for(config);
        const DiscretePovm povm = extract_povm(scheme);
        const auto direct = direct_probabilities(scheme, psi);

        std::string p11, p12, p21, p22, f, g, h;
        if (has_probe_readout(config)) {
            // Outputs are ordered 11, 21, 12, 22.
            p11 = csv_field(direct[0].probability);
            p21 = csv_field(direct[1].probability);
            p12 = csv_field(direct[2].probability);
            p22 = csv_field(direct[3].probability);
            const ExperimentPovms m = with_marginals(povm);
            f = csv_field(contrast(m.detector));
            g = csv_field(contrast(m.probe));
            h = csv_field(contrast(m.coincidence));
        } else {
            // The unmarked probe stays in |q1>, so pointer outcome q2 never occurs.
            p11 = csv_field(direct[0].probability);
            p21 = csv_field(direct[1].probability);
            p12 = csv_field(0.0);
            p22 = csv_field(0.0);
            f = csv_field(contrast(povm));
        }

        const ProbeTriple probes = probes_for(config);
        const DensityOperator rho_e = marked_photon_state(request.base.alpha, request.base.beta, probes.p1, probes.p2);
        const Contrasts c = contrasts(rho_e);
        const auto [duality, disturbance] =
            erasure_duality(request.base.alpha, request.base.beta, probes.p1, probes.p2);
        (void)disturbance;
        const double d = duality.details.at("D"), v = duality.details.at("V_e");

        out << csv_field(value) << ',' << p11 << ',' << p12 << ',' << p21 << ',' << p22 << ',' << f << ',' << g << ','
            << h << ',' << csv_field(c.path) << ',' << csv_field(c.interference_x) << ',' << csv_field(d) << ','
            << csv_field(v) << ',' << csv_field(1.0 - d * d - v * v) << '\n';
    }
    return out.str();
}

}  // namespace mzpovm
