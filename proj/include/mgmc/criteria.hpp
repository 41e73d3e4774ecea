// Copyright 2026 The mgmc Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MGMC_CRITERIA_HPP_
#define MGMC_CRITERIA_HPP_

#include <string>

#include "mgmc/cone_program.hpp"
#include "mgmc/state.hpp"
#include "mgmc/surrogates.hpp"
#include "mgmc/system_model.hpp"

// Assembles, per optimization criterion and CCP iteration, the complete
// convex subproblem over the real embedding of all decision variables.
// Programs are built in minimization form; objective values reported back
// through BuiltProgram::max_objective are in the maximization convention.

namespace mgmc {

enum class Criterion { MEE, EE, SUM };
const char* to_string(Criterion c);
Criterion criterion_from_string(const std::string& s);

/// Index map from model symbols into the subproblem variable vector.
/// Entries are -1 where a criterion does not carry the symbol.
struct VarMap {
  int w_base = -1;        // 2MG reals, column-major (Re, Im) pairs
  Eigen::MatrixXi eta;    // N x G
  Eigen::VectorXi delta;  // G
  Eigen::VectorXi theta;  // G
  Eigen::VectorXi zeta;   // G
  Eigen::MatrixXi alpha;  // N x G
  int t = -1;
  int gamma = -1;
};

struct BuildOptions {
  /// Freeze grouping/scheduling to the given rounded values (the oracle's
  /// inner precoding solves); binary penalties are dropped when set.
  const AssignmentState* freeze = nullptr;
};

struct BuiltProgram {
  ConeProgram prog;
  VarMap map;
  Criterion criterion = Criterion::MEE;
  /// Entropy-tangent constants omitted from the program objective; added
  /// back when reporting so traces stay comparable across iterations.
  double dropped_entropy = 0.0;

  /// Maximization-form objective of a solved program (negated minimum),
  /// including dropped constants.
  double max_objective(double solver_pobj) const {
    return -solver_pobj + dropped_entropy;
  }

  /// Full solver vector realizing the given iterate (auxiliaries tight).
  Eigen::VectorXd embed_state(const SystemConfig& cfg,
                              const IterateState& st) const;
  /// Reads a solver vector back into an iterate; entries not carried by the
  /// criterion are derived from W. Invariants are re-clamped.
  IterateState extract_state(const SystemConfig& cfg, const ChannelSet& ch,
                             const Eigen::VectorXd& x) const;
};

BuiltProgram build_mee_subproblem(const SystemConfig& cfg, const ChannelSet& ch,
                                  const ExpansionPoint& ep,
                                  const PenaltyState& pen,
                                  const BuildOptions& opts = {});
BuiltProgram build_ee_subproblem(const SystemConfig& cfg, const ChannelSet& ch,
                                 const ExpansionPoint& ep,
                                 const PenaltyState& pen,
                                 const BuildOptions& opts = {});
BuiltProgram build_sum_subproblem(const SystemConfig& cfg, const ChannelSet& ch,
                                  const ExpansionPoint& ep,
                                  const PenaltyState& pen,
                                  const BuildOptions& opts = {});

/// The always-feasible LP over (eta, delta) used to seed the CCP; gamma0 is
/// computed from W0.
BuiltProgram build_fip_lp(const SystemConfig& cfg, const ChannelSet& ch,
                          const PrecoderMatrix& w0);

/// EE rate cap: the single-user matched-filter bound, never below eps_j so
/// a scheduled group's QoS floor stays attainable.
double theta_star(const SystemConfig& cfg, const ChannelSet& ch, int j);

/// Direct evaluation of the penalized DC objective (P5-style, maximization
/// form) at an iterate, with the clamped entropy penalty. The ascent and
/// expansion-point consistency checks compare against this.
double penalized_dc_objective(const SystemConfig& cfg, Criterion crit,
                              const PenaltyState& pen, const IterateState& st);
/// The unpenalized criterion value at an iterate (diagnostic trace).
double dc_objective(const SystemConfig& cfg, Criterion crit,
                    const IterateState& st);

}  // namespace mgmc

#endif  // MGMC_CRITERIA_HPP_
