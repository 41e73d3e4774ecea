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

#ifndef MGMC_CONE_SOLVER_HPP_
#define MGMC_CONE_SOLVER_HPP_

#include <Eigen/Core>

#include "mgmc/cone_program.hpp"

namespace mgmc {

enum class SolveStatus { Optimal, Infeasible, Unbounded, MaxIter, NumericalFailure };

const char* to_string(SolveStatus s);

struct SolverOptions {
  int max_iters = 200;      // total Newton steps
  double tol = 1e-8;        // target relative residuals/gap
  double accept_tol = 1e-7; // contract: accept as Optimal at this level
  double mu = 20.0;         // barrier growth per outer stage
  int stall_limit = 20;     // non-decreasing residual steps before giving up
  bool allow_phase1 = true; // feasibility probe before declaring Infeasible
};

struct ConicSolution {
  Eigen::VectorXd x;  // primal
  Eigen::VectorXd y;  // equality duals
  Eigen::VectorXd z;  // cone duals (zero on free coordinates)
  SolveStatus status = SolveStatus::NumericalFailure;
  double pobj = 0.0;        // c'x + obj_offset
  double dobj = 0.0;        // b'y + obj_offset
  double primal_res = 0.0;  // ||Ax-b|| / (1+||b||)
  double dual_res = 0.0;    // ||A'y+z-c|| / (1+||c||)
  double rel_gap = 0.0;     // |pobj-dobj| / max(1,|pobj|,|dobj|)
  int newton_iters = 0;
};

/// Primal barrier interior-point solve of a standard-form cone program.
/// Returns failure statuses rather than throwing, except on malformed input.
/// A warm start may only reduce iterations; the accepted-solution residual
/// contract is unchanged.
ConicSolution solve(const ConeProgram& p, const SolverOptions& opts = {},
                    const ConicSolution* warm_start = nullptr);

}  // namespace mgmc

#endif  // MGMC_CONE_SOLVER_HPP_
