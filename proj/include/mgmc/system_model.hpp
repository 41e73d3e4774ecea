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

#ifndef MGMC_SYSTEM_MODEL_HPP_
#define MGMC_SYSTEM_MODEL_HPP_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace mgmc {

/// Rate-dependent processing power p(x) = p1(x) - p2(x), p(0) = 0, with p1
/// and p2 convex nondecreasing on [0, inf). Built-ins:
///   quadratic: a*x^2 + b*x   (a, b >= 0)
///   expm1:     exp(c*x) - 1  (c >= 0)
///   zero
struct DCFunctionSpec {
  enum class Form { Zero, Quadratic, Expm1 };
  struct Part {
    Form form = Form::Zero;
    double a = 0.0, b = 0.0, c = 0.0;
    double value(double x) const;
    double deriv(double x) const;
  };
  Part p1{Form::Quadratic, 1.0, 0.0, 0.0};
  Part p2{};
  std::string tag = "x^2";

  double value(double x) const { return p1.value(x) - p2.value(x); }

  /// Checks p(0)=0, convexity/monotonicity of both parts on a grid, and that
  /// the derivative evaluators match central finite differences to 1e-6
  /// relative. Throws std::invalid_argument on failure.
  void validate(double grid_max = 8.0) const;

  static DCFunctionSpec default_spec() { return DCFunctionSpec{}; }
};

/// Physical and power-model configuration of one MGMC downlink instance.
/// M antennas = scheduled groups per slot, N users, G groups/messages.
struct SystemConfig {
  int M = 3;
  int N = 8;
  int G = 4;
  double B = 1.0;       // Hz
  double sigma2 = 1.0;  // W
  double P_T = 100.0;   // W
  Eigen::VectorXd eps;  // per-group QoS threshold, bits/s/Hz
  Eigen::VectorXd psi;  // per-group weight, > 0
  double P0 = 16.0;     // W
  double rho = 0.2;     // amplifier efficiency
  double Pi_coeff = 2.4;
  DCFunctionSpec power_fn;
  Eigen::MatrixXd interest_mask;  // N x G in {0,1}; empty means all-ones

  /// Fills eps/psi/interest_mask defaults and checks every invariant.
  /// Throws std::invalid_argument when violated.
  void finalize();
  bool interested(int i, int j) const { return interest_mask(i, j) != 0.0; }

  static double dbw_to_watts(double dbw) { return std::pow(10.0, dbw / 10.0); }
};

/// N x M downlink channel matrix; row i holds h_i^H so that (H*W)(i,j) =
/// h_i^H w_j.
struct ChannelSet {
  Eigen::MatrixXcd H;
  std::uint64_t seed = 0;
  std::string distribution = "cn01";

  std::string to_json() const;
  static ChannelSet from_json(const std::string& text);
};

/// M x G precoder; column j serves group j.
struct PrecoderMatrix {
  Eigen::MatrixXcd W;
  double total_power() const { return W.squaredNorm(); }
};

/// Relaxed (or rounded) grouping/scheduling indicators.
struct AssignmentState {
  Eigen::MatrixXd eta;    // N x G in [0,1]
  Eigen::VectorXd delta;  // G in [0,1]

  bool is_rounded(double tol = 1e-9) const;
};

struct Metrics {
  double mee = 0.0;             // bits/Joule
  double ee = 0.0;              // bits/Joule
  double throughput = 0.0;      // bits/s
  double consumed_power = 0.0;  // W
  int scheduled_users = 0;
  int scheduled_groups = 0;
  Eigen::VectorXd min_rates;    // per group, bits/s

  std::string to_json() const;
};

struct QosReport {
  bool satisfied = true;
  std::vector<std::pair<int, int>> violators;  // (user, group)
};

/// I.i.d. circularly-symmetric complex Gaussian channels, unit total
/// variance per entry, reproducible from the seed (Box-Muller over a
/// fixed 64-bit generator, independent of platform library details).
ChannelSet generate_channels(const SystemConfig& cfg, std::uint64_t seed);

/// gamma_ij = |h_i^H w_j|^2 / (sum_{l != j} |h_i^H w_l|^2 + sigma2).
double sinr(const ChannelSet& ch, const PrecoderMatrix& w, int user, int group,
            double sigma2);

/// g(W, r) = P0 + sum_j (||w_j||^2 / rho + Pi * p(r_j)). Throws on negative
/// rates.
double consumed_power(const SystemConfig& cfg, const PrecoderMatrix& w,
                      const Eigen::VectorXd& rates);

/// Scores a rounded assignment: group min-rates, throughput, EE and MEE,
/// consumed power, scheduled counts. Throws if the assignment is not rounded
/// or structurally invalid.
Metrics score(const SystemConfig& cfg, const ChannelSet& ch,
              const PrecoderMatrix& w, const AssignmentState& assignment);

/// log2(1+gamma_ij) >= eps_j for every scheduled member, within 1e-6.
QosReport qos_satisfied(const SystemConfig& cfg, const ChannelSet& ch,
                        const PrecoderMatrix& w,
                        const AssignmentState& assignment);

}  // namespace mgmc

#endif  // MGMC_SYSTEM_MODEL_HPP_
