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


#ifndef LDCOH_JSON_IO_H
#define LDCOH_JSON_IO_H

#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "ldcoh/basis.h"
#include "ldcoh/duality.h"
#include "ldcoh/kraus.h"
#include "ldcoh/linalg.h"
#include "ldcoh/povm.h"

namespace ldcoh::io {

using nlohmann::json;

/// Malformed input: bad JSON syntax or a document that does not match the
/// expected schema. Messages carry line:column for syntax errors and a JSON
/// pointer for schema errors.
class InputError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Parses text, converting syntax errors into "<source>:<line>:<col>: ..." messages.
json parse(const std::string &text, const std::string &source = "<input>");
json read_file(const std::string &path);

// Complex numbers are [re, im]; matrices are row-major nested arrays.
json to_json(Complex z);
json to_json(const ComplexVector &v);
json to_json(const ComplexMatrix &m);
Complex complex_from(const json &j, const std::string &where);
ComplexVector vector_from(const json &j, const std::string &where);
ComplexMatrix matrix_from(const json &j, const std::string &where);

/// {"dim": d, "states": [[[re, im], ...], ...]}
json basis_to_json(const GeneralBasis &basis);
GeneralBasis basis_from(const json &j);

/// Either {"matrix": [...]} (density matrix) or {"amplitudes": [...]} (pure
/// state), optionally with "dim"; a bare nested array is read as a matrix.
json state_to_json(const DensityMatrix &rho);
DensityMatrix state_from(const json &j);

/// A list of matrices, or {"kraus": [...]}.
std::vector<KrausOperator> kraus_from(const json &j);
json kraus_to_json(const std::vector<KrausOperator> &channel);

/// {"theta": t, "phis": [p1, p2, p3]}
QubitCircleBasis circle_from(const json &j);

json povm_to_json(const Povm &povm);

json theorem1_to_json(const Theorem1Report &r);
json membership_to_json(const MembershipResult &r);

/// {"alpha": [re, im], "beta": [re, im], "R": r, "detectors": [3 kets]}
json config_to_json(const DualityConfig &cfg);
DualityConfig config_from(const json &j);
json result_to_json(const DualityResult &r);

}  // namespace ldcoh::io

#endif
