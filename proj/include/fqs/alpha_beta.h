// Copyright 2026 The fqsim Authors
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

#pragma once

#include "fqs/gates.h"

namespace fqs {

struct AlphaBeta {
    double alpha = 0;
    Vec3 beta = Vec3(0, 0, 1);
};

/// Sigma_0 = identity, Sigma_p = -i sigma_p for p = 1, 2, 3 (x, y, z).
Mat2 sigma_mu(int mu);

/// Rotation with R_beta(alpha) = Sigma_mu R_n'(theta')^dag exactly. For mu = 0
/// this is (-theta', n'). When the rotation is trivial beta falls back to n'.
AlphaBeta alpha_beta(int mu, const GateParam &prev);

/// Re tr(Sigma_mu R^dag rho') for any state rho': cos(theta'/2) for mu = 0,
/// n'_mu sin(theta'/2) otherwise.
double first_term(int mu, const GateParam &prev);

}  // namespace fqs
