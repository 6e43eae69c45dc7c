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


#include "ldcoh/basis.h"
#include "ldcoh/kraus.h"

namespace ldcoh {

MonotonicityProbe monotonicity_probe(const DensityMatrix &rho, const GeneralBasis &basis,
                                     const std::vector<KrausOperator> &channel, double tol) {
    if (completeness_residual(channel) > 1e-10) {
        throw ContractError("monotonicity_probe: channel is not trace preserving");
    }
    for (const auto &k : channel) {
        if (!vertex_image_check(k, basis, tol).incoherent) {
            throw ContractError("monotonicity_probe: channel is not certified incoherent");
        }
    }
    return {coherence_trace(rho, basis), coherence_trace(channel_apply(channel, rho), basis)};
}

}  // namespace ldcoh
