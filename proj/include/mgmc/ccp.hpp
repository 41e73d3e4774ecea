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

#ifndef MGMC_CCP_HPP_
#define MGMC_CCP_HPP_

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "mgmc/cone_solver.hpp"
#include "mgmc/criteria.hpp"
#include "mgmc/system_model.hpp"

// Drives the full joint grouping/scheduling/precoding loop for any
// criterion: feasible-initial-point construction, iterate-convexify-solve
// cycling, penalty growth, convergence detection, binary rounding, and
// final certification against the original constraints.

namespace mgmc {

enum class RunStatus { Converged, MaxIters, SubproblemFailure };
const char* to_string(RunStatus s);

struct CcpConfig {
  Criterion criterion = Criterion::MEE;
  double delta_tol = 1e-4;  // |obj(k) - obj(k-1)| threshold
  int max_iters = 100;
  PenaltyState penalties;
  double tau_bin = 1e-3;        // binary-residual target at convergence
  int fip_restarts = 3;
  int extra_binary_iters = 20;  // stalled-penalty guard
  bool ascent_test_mode = false;  // adds a frozen-penalty duplicate solve
  SolverOptions solver;
  const AssignmentState* freeze = nullptr;  // oracle inner-precoding mode
};

struct IterRecord {
  int iteration = 0;
  double surrogate_obj = 0.0;  // penalized surrogate, max form
  double dc_obj = 0.0;         // unpenalized criterion value
  double binary_residual = 0.0;
  double power = 0.0;  // consumed-power slack at the iterate
  double lambda = 0.0;
  double omega = 0.0;
  double wall_ms = 0.0;  // excluded from report JSON (byte-identical runs)
  // ascent_test_mode only: objective of the duplicate frozen-penalty solve
  double frozen_repeat_obj = std::numeric_limits<double>::quiet_NaN();
};

struct FeasibilityVerdict {
  bool ugc = true, gsc = true, qos = true, tpc = true;
  std::vector<std::pair<int, int>> dropped;  // members removed by QoS repair
  bool pass() const { return ugc && gsc && qos && tpc; }
};

struct SolveReport {
  RunStatus status = RunStatus::MaxIters;
  Criterion criterion = Criterion::MEE;
  int iterations = 0;
  std::vector<IterRecord> trace;
  AssignmentState rounded;
  PrecoderMatrix W;
  Metrics metrics;
  FeasibilityVerdict verdict;
  IterateState final_state;
  std::uint64_t seed = 0;

  /// Deterministic JSON (no timing fields).
  std::string to_json(const SystemConfig& cfg) const;
  /// CSV trace; wall_ms carried here as a trailing column.
  std::string trace_csv() const;
};

/// Best-of-restarts feasible initial point: random scaled precoder draws,
/// the always-feasible LP for (eta0, delta0), derived slacks. The returned
/// state is checked to satisfy every convexified constraint at itself.
IterateState make_fip(const SystemConfig& cfg, const ChannelSet& ch,
                      const CcpConfig& ccp, std::uint64_t seed);

SolveReport run(const SystemConfig& cfg, const ChannelSet& ch,
                const CcpConfig& ccp, const IterateState& fip);

/// Top-M delta selection (ties to groups with more interested users, then
/// lower index), eta thresholding at 0.5 gated on selection and per-user
/// QoS at the final precoder (drop-only repair), unselected precoder
/// columns zeroed, and the original-problem constraint checks.
std::pair<AssignmentState, FeasibilityVerdict> round_and_certify(
    const SystemConfig& cfg, const ChannelSet& ch, const IterateState& st);

/// Lambdas scale by their growth factor; Omegas step additively (or
/// multiplicatively when configured).
PenaltyState update_penalties(const PenaltyState& pen, const CcpConfig& ccp,
                              int k);

double binary_residual(const IterateState& st);

}  // namespace mgmc

#endif  // MGMC_CCP_HPP_
