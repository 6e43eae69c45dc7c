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


#include "ldcoh/json_io.h"

#include <fstream>
#include <sstream>

namespace ldcoh::io {

namespace {

[[noreturn]] void schema(const std::string &where, const std::string &what) {
    throw InputError(where + ": " + what);
}

const json &field(const json &j, const char *key, const std::string &where) {
    if (!j.is_object() || !j.contains(key)) {
        schema(where, std::string("missing field \"") + key + "\"");
    }
    return j.at(key);
}

double number_from(const json &j, const std::string &where) {
    if (!j.is_number()) {
        schema(where, "expected a number");
    }
    return j.get<double>();
}

// Wraps domain construction errors (e.g. non-normalized amplitudes) as input errors.
template <typename F>
auto build(const std::string &where, F &&f) {
    try {
        return f();
    } catch (const ContractError &e) {
        schema(where, e.what());
    }
}

}  // namespace

json parse(const std::string &text, const std::string &source) {
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        size_t line = 1;
        size_t col = 1;
        size_t limit = std::min(text.size(), e.byte > 0 ? static_cast<size_t>(e.byte - 1) : size_t{0});
        for (size_t i = 0; i < limit; ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        std::ostringstream msg;
        msg << source << ":" << line << ":" << col << ": invalid JSON";
        throw InputError(msg.str());
    }
}

json read_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError(path + ": cannot open file");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse(buf.str(), path);
}

json to_json(Complex z) {
    return json::array({z.real(), z.imag()});
}

json to_json(const ComplexVector &v) {
    json out = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        out.push_back(to_json(v(i)));
    }
    return out;
}

json to_json(const ComplexMatrix &m) {
    json out = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            row.push_back(to_json(m(r, c)));
        }
        out.push_back(row);
    }
    return out;
}

Complex complex_from(const json &j, const std::string &where) {
    if (j.is_number()) {
        return {j.get<double>(), 0.0};
    }
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        schema(where, "expected a complex number [re, im]");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

ComplexVector vector_from(const json &j, const std::string &where) {
    if (!j.is_array() || j.empty()) {
        schema(where, "expected a non-empty array of complex numbers");
    }
    ComplexVector v(static_cast<Eigen::Index>(j.size()));
    for (size_t i = 0; i < j.size(); ++i) {
        v(static_cast<Eigen::Index>(i)) = complex_from(j[i], where + "/" + std::to_string(i));
    }
    return v;
}

ComplexMatrix matrix_from(const json &j, const std::string &where) {
    if (!j.is_array() || j.empty()) {
        schema(where, "expected a non-empty array of rows");
    }
    const size_t rows = j.size();
    if (!j[0].is_array()) {
        schema(where + "/0", "expected a row array");
    }
    const size_t cols = j[0].size();
    ComplexMatrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (size_t r = 0; r < rows; ++r) {
        const std::string rw = where + "/" + std::to_string(r);
        if (!j[r].is_array() || j[r].size() != cols) {
            schema(rw, "rows must all have the same length");
        }
        for (size_t c = 0; c < cols; ++c) {
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                complex_from(j[r][c], rw + "/" + std::to_string(c));
        }
    }
    return m;
}

json basis_to_json(const GeneralBasis &basis) {
    json states = json::array();
    for (const auto &s : basis.states()) {
        states.push_back(to_json(s.amplitudes()));
    }
    return {{"dim", basis.dim()}, {"states", states}};
}

GeneralBasis basis_from(const json &j) {
    const json &states = field(j, "states", "");
    if (!states.is_array() || states.empty()) {
        schema("/states", "expected a non-empty array of states");
    }
    std::vector<PureState> out;
    for (size_t i = 0; i < states.size(); ++i) {
        const std::string where = "/states/" + std::to_string(i);
        ComplexVector v = vector_from(states[i], where);
        out.push_back(build(where, [&] { return PureState(v, 1e-9); }));
    }
    if (j.contains("dim")) {
        const json &dim = j.at("dim");
        if (!dim.is_number_integer() || dim.get<int>() != out.front().dim()) {
            schema("/dim", "does not match the length of the state vectors");
        }
    }
    return build("/states", [&] { return GeneralBasis(out); });
}

json state_to_json(const DensityMatrix &rho) {
    return {{"dim", rho.dim()}, {"matrix", to_json(rho.matrix())}};
}

DensityMatrix state_from(const json &j) {
    DensityTolerances loose{1e-9, 1e-9, 1e-9};
    if (j.is_array()) {
        ComplexMatrix m = matrix_from(j, "");
        return build("", [&] { return DensityMatrix(m, loose); });
    }
    if (j.is_object() && j.contains("amplitudes")) {
        ComplexVector v = vector_from(j.at("amplitudes"), "/amplitudes");
        return build("/amplitudes", [&] { return DensityMatrix(PureState(v, 1e-9)); });
    }
    ComplexMatrix m = matrix_from(field(j, "matrix", ""), "/matrix");
    DensityMatrix rho = build("/matrix", [&] { return DensityMatrix(m, loose); });
    if (j.contains("dim") && (!j.at("dim").is_number_integer() || j.at("dim").get<int>() != rho.dim())) {
        schema("/dim", "does not match the matrix size");
    }
    return rho;
}

std::vector<KrausOperator> kraus_from(const json &j) {
    const json &list = j.is_object() ? field(j, "kraus", "") : j;
    const std::string prefix = j.is_object() ? "/kraus" : "";
    if (!list.is_array() || list.empty()) {
        schema(prefix, "expected a non-empty list of matrices");
    }
    std::vector<KrausOperator> out;
    for (size_t i = 0; i < list.size(); ++i) {
        const std::string where = prefix + "/" + std::to_string(i);
        ComplexMatrix m = matrix_from(list[i], where);
        out.push_back(build(where, [&] { return KrausOperator(m); }));
    }
    return out;
}

json kraus_to_json(const std::vector<KrausOperator> &channel) {
    json out = json::array();
    for (const auto &k : channel) {
        out.push_back(to_json(k.matrix()));
    }
    return out;
}

QubitCircleBasis circle_from(const json &j) {
    double theta = number_from(field(j, "theta", ""), "/theta");
    const json &phis = field(j, "phis", "");
    if (!phis.is_array() || phis.size() != 3) {
        schema("/phis", "expected three azimuths");
    }
    std::array<double, 3> p{};
    for (size_t i = 0; i < 3; ++i) {
        p[i] = number_from(phis[i], "/phis/" + std::to_string(i));
    }
    return build("", [&] { return QubitCircleBasis(theta, p); });
}

json povm_to_json(const Povm &povm) {
    json effects = json::array();
    json ops = json::array();
    for (const auto &e : povm.effects) {
        effects.push_back(to_json(e));
    }
    for (const auto &a : povm.measurement_ops) {
        ops.push_back(to_json(a));
    }
    return {{"effects", effects}, {"measurement_ops", ops}, {"ignored", povm.ignored}};
}

json theorem1_to_json(const Theorem1Report &r) {
    json out = {{"satisfied", r.satisfied}, {"delta", to_json(r.delta)}, {"abc", r.abc}};
    out["kappa_form"] = r.kappa_form ? to_json(*r.kappa_form) : json(nullptr);
    return out;
}

json membership_to_json(const MembershipResult &r) {
    json out = {{"is_free", r.is_free}, {"residual", r.residual}};
    out["weights"] = r.weights ? json(r.weights->weights()) : json(nullptr);
    out["nearest_weights"] = r.nearest_weights;
    return out;
}

json config_to_json(const DualityConfig &cfg) {
    json dets = json::array();
    for (const auto &d : cfg.detectors) {
        dets.push_back(to_json(d.amplitudes()));
    }
    return {{"alpha", to_json(cfg.alpha)}, {"beta", to_json(cfg.beta)}, {"R", cfg.R}, {"detectors", dets}};
}

DualityConfig config_from(const json &j) {
    DualityConfig cfg;
    cfg.alpha = complex_from(field(j, "alpha", ""), "/alpha");
    cfg.beta = complex_from(field(j, "beta", ""), "/beta");
    cfg.R = number_from(field(j, "R", ""), "/R");
    const json &dets = field(j, "detectors", "");
    if (!dets.is_array() || dets.size() != 3) {
        schema("/detectors", "expected three detector states");
    }
    for (size_t i = 0; i < 3; ++i) {
        const std::string where = "/detectors/" + std::to_string(i);
        ComplexVector v = vector_from(dets[i], where);
        if (v.size() != 3) {
            schema(where, "detector states must have three amplitudes");
        }
        cfg.detectors[i] = build(where, [&] { return PureState(v, 1e-9); });
    }
    return cfg;
}

json result_to_json(const DualityResult &r) {
    return {{"coherence", r.coherence},
            {"uqsd_bound", r.uqsd_bound},
            {"retain_prob", r.retain_prob},
            {"distinguishability", r.distinguishability},
            {"sum", r.sum}};
}

}  // namespace ldcoh::io
