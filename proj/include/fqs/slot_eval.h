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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fqs/alpha_beta.h"
#include "fqs/ansatz.h"
#include "fqs/pauli.h"
#include "fqs/solvers.h"

namespace fqs {

enum class TimeKind { Imaginary, Real };
enum class EvalMode { Exact, Circuit };

/// Records the distinct measurement-circuit configurations used by one update.
class MeasurementTally {
   public:
    void record(const std::string &key) {
        ++counts_[key];
    }
    size_t distinct() const {
        return counts_.size();
    }
    const std::map<std::string, size_t> &counts() const {
        return counts_;
    }
    void reset() {
        counts_.clear();
    }

   private:
    std::map<std::string, size_t> counts_;
};

/// Expectations of O' = V2^dag O V2 on rho' = |phi'><phi'| with phi' = R' V1|0>,
/// after inserting exp(-+i sigma_p pi/4) behind the gate. re_cross holds
/// Re<phi'|O' sigma_p|phi'>, which only the real-time kind needs.
struct QSet {
    double q_plus_0 = 0;
    Vec3 q_plus = Vec3::Zero();
    Vec3 q_minus = Vec3::Zero();
    std::optional<Vec3> re_cross;
};

/// Same quantities with the insertion axis along the gate's current axis.
struct AxisQSet {
    double q_plus_0 = 0;
    double q_plus = 0;
    double q_minus = 0;
    std::optional<double> re_cross;
};

/// Propagator weights: the objective is Re<psi|(a + b O) U|0> with
/// (a, b) = (cosh x, -sinh x) for imaginary time and (cos x, i sin x) for real
/// time, x = coefficient * step.
struct PropagatorWeights {
    double a = 1;
    cdouble b = 0;
};
PropagatorWeights propagator_weights(double coefficient, double step, TimeKind kind);

/// t with Re<t|U|0> the objective: (a + b O)^dag applied to `reference`.
Statevector propagated_target(const Statevector &reference, const PauliTerm &term, double step, TimeKind kind);

/// Circuit state with slot d's parameter replaced by `p` (no kind check).
Statevector state_with(const Ansatz &ansatz, size_t d, const GateParam &p);
/// Re<target| U(p at slot d)|0>.
double slot_objective(const Ansatz &ansatz, size_t d, const GateParam &p, const Statevector &target);

QSet eval_qset(const Ansatz &ansatz, size_t d, const PauliTerm &term, EvalMode mode, bool with_cross = false,
               MeasurementTally *tally = nullptr);
AxisQSet eval_axis_qset(const Ansatz &ansatz, size_t d, const PauliTerm &term, EvalMode mode,
                        bool with_cross = false, MeasurementTally *tally = nullptr);
/// M_pq = Re<sigma_p phi1|O'|sigma_q phi1>, phi1 = V1|0>, from the six
/// expectations of O' after replacing the gate by R_e(pi),
/// e in {x, y, z, (x+y)/sqrt2, (x+z)/sqrt2, (y+z)/sqrt2}.
Mat3 eval_fraxis_matrix(const Ansatz &ansatz, size_t d, const PauliTerm &term, EvalMode mode,
                        MeasurementTally *tally = nullptr);

/// cos(alpha/2) Q+0 + sin(alpha/2) beta.(Q+ - Q-)/2.
double generator(const QSet &q, const AlphaBeta &ab);
double assemble_g(int mu, const GateParam &prev, const QSet &q, double coefficient, double step, TimeKind kind);
GVector assemble_gvector(const GateParam &prev, const QSet &q, double coefficient, double step, TimeKind kind);
/// (g0, g_d) of the fixed-axis objective g0 cos(theta/2) + g_d sin(theta/2)
/// about the gate's current axis.
std::pair<double, double> assemble_axis_g(const GateParam &prev, const AxisQSet &q, double coefficient,
                                          double step, TimeKind kind);
/// g of the Fraxis objective n.g (imaginary time only).
Vec3 assemble_fraxis_g(const GateParam &prev, const Mat3 &m, double coefficient, double step);

/// Re<t| W2 X2 W1 X1 W0|0> for paired slot d, W0 = ops before R^dag,
/// W1 = ops from R^dag through R, W2 = ops after R; t is the propagated current state.
double eval_overlap(const Ansatz &ansatz, size_t d, const PauliTerm &term, double step, TimeKind kind,
                    EvalMode mode, const Mat2 &x1, const Mat2 &x2);

/// G_pq with sigma_p at R^dag and sigma_q at R. `entries` lists the (p, q)
/// pairs to evaluate (0-based); others are left at zero.
Mat3 eval_gmatrix_entries(const Ansatz &ansatz, size_t d, const PauliTerm &term, double step, TimeKind kind,
                          EvalMode mode, const std::vector<std::pair<int, int>> &entries,
                          MeasurementTally *tally = nullptr);
/// Full G for composites; excitation-conserving gates take 8 evaluations
/// with G_yx = -G_xy unless `all_nine` is set.
GMatrix eval_gmatrix(const Ansatz &ansatz, size_t d, const PauliTerm &term, double step, TimeKind kind,
                     EvalMode mode, bool all_nine = false, MeasurementTally *tally = nullptr);
/// (h0, h1, h2, h3) about the slot's current (fixed) axis.
HVector eval_hvector(const Ansatz &ansatz, size_t d, const PauliTerm &term, double step, TimeKind kind,
                     EvalMode mode, MeasurementTally *tally = nullptr);

}  // namespace fqs
