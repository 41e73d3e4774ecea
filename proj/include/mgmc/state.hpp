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

#ifndef MGMC_STATE_HPP_
#define MGMC_STATE_HPP_

#include <Eigen/Core>

namespace mgmc {

/// All optimization variables of one CCP iterate. Also serves as the
/// expansion point for the Taylor surrogates (previous-iterate snapshot).
struct IterateState {
  Eigen::MatrixXcd W;     // M x G precoders
  Eigen::MatrixXd eta;    // N x G in [0,1]
  Eigen::VectorXd delta;  // G in [0,1]
  Eigen::VectorXd Theta;  // G, bits/s/Hz, >= 0
  Eigen::VectorXd zeta;   // G, MEE rate slack, >= 0
  Eigen::MatrixXd alpha;  // N x G, SINR-plus-one slacks, >= 1
  double t = 0.0;         // consumed-power slack, W, > 0
  double Gamma = 0.0;     // EE only, >= 0

  /// Clamps entries to the invariant ranges (box, alpha >= 1, t > 0).
  void enforce_invariants(double p0);
};

/// Expansion point of the convexification step: the previous CCP iterate.
using ExpansionPoint = IterateState;

/// Penalty parameters. lambda1/2 drive the MEE binaries, lambda3/4 the EE
/// ones, lambda5/6 the SUM ones; Omega1..3 weight the group-scheduling
/// penalty per criterion. Lambdas grow multiplicatively, Omegas additively
/// by default (both modes exposed).
struct PenaltyState {
  double lambda1 = 0.01, lambda2 = 0.01;
  double lambda3 = 0.5, lambda4 = 0.5;
  double lambda5 = 0.05, lambda6 = 0.05;
  double Omega1 = 2.5, Omega2 = 5.0, Omega3 = 1.0;
  double lambda_growth = 1.2;
  double omega_step = 1.5;
  bool omega_multiplicative = false;
};

}  // namespace mgmc

#endif  // MGMC_STATE_HPP_
