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

#ifndef MGMC_SURROGATES_HPP_
#define MGMC_SURROGATES_HPP_

#include <Eigen/Core>

#include "mgmc/linexpr.hpp"
#include "mgmc/state.hpp"
#include "mgmc/system_model.hpp"

// First-order Taylor surrogates of every DC piece appearing in the CCP
// subproblems, as pure functions of the previous iterate. Expression
// variants take solver variable indices; value/gradient variants back the
// tangency, minorant and finite-difference tests.

namespace mgmc {

/// Entropy penalty P(x) = x log x + (1-x) log(1-x) with the argument clamped
/// to [kEntropyClamp, 1-kEntropyClamp] (the gradient diverges at 0/1).
inline constexpr double kEntropyClamp = 1e-6;
double entropy_value(double x);
double entropy_grad(double x0);

/// P~(x) = x * grad P(x0) (the constant of the full tangent is dropped and
/// reported separately so traces stay comparable across iterations).
LinExpr taylor_entropy(int x_var, double x0);
/// The dropped constant P(x0) - x0 * grad P(x0).
double taylor_entropy_dropped(double x0);

/// f(eta, Theta, t) = B psi ((eta+Theta)^2 - eta^2 - Theta^2) / (2t).
/// Surrogate: exact tangent of the quad-over-lin part plus the retained
/// concave terms, scaled by B psi_j:
///   affine = B psi (u0 (eta+Theta)/t0 - (u0/t0)^2 t / 2)
///   minus quad terms coef * v^2 / t with coef = B psi / 2 for v = eta, Theta.
struct SurrogateF {
  LinExpr affine;
  double eta_sq_coeff = 0.0;    // multiply eta^2/t
  double theta_sq_coeff = 0.0;  // multiply Theta^2/t
};
SurrogateF taylor_f(const ExpansionPoint& ep, const SystemConfig& cfg, int i,
                    int j, int eta_var, int theta_var, int t_var);
double f_exact(const SystemConfig& cfg, int j, double eta, double theta,
               double t);
double f_surrogate_value(const ExpansionPoint& ep, const SystemConfig& cfg,
                         int i, int j, double eta, double theta, double t);

/// J_ij(W, alpha) = (sum_l |h_i^H w_l|^2 + sigma2) / alpha, linearized at
/// the expansion point. w_vars lists the 2MG real-embedded precoder
/// variables, ordered (Re w(0,0), Im w(0,0), Re w(1,0), ...) column-major.
LinExpr taylor_J(const ExpansionPoint& ep, const ChannelSet& ch, double sigma2,
                 int i, int j, int w_base, int alpha_var);
double J_exact(const ChannelSet& ch, double sigma2, int i,
               const Eigen::MatrixXcd& W, double alpha);
/// Gradient of J over the real embedding (2MG w coords, then alpha).
Eigen::VectorXd J_gradient(const ChannelSet& ch, double sigma2, int i,
                           const Eigen::MatrixXcd& W, double alpha);

/// Linearization of eta^2 + Theta^2 at the expansion point.
LinExpr taylor_G(const ExpansionPoint& ep, int i, int j, int eta_var,
                 int theta_var);
double G_surrogate_value(const ExpansionPoint& ep, int i, int j, double eta,
                         double theta);

/// Linearization of (delta + Theta)^2 at the expansion point.
LinExpr taylor_K(const ExpansionPoint& ep, int j, int delta_var,
                 int theta_var);
double K_surrogate_value(const ExpansionPoint& ep, int j, double delta,
                         double theta);

/// p2 tangent: p2(z0) + p2'(z0) (z - z0).
LinExpr taylor_p2(double z0, const DCFunctionSpec& spec, int z_var);
double p2_surrogate_value(double z0, const DCFunctionSpec& spec, double z);

/// I(W, eta) = (sum_l |h_i^H w_l|^2 + sigma2) / (1 + eta eps_j), linearized
/// at the expansion point (the SUM criterion's C7 right-hand side).
LinExpr taylor_I(const ExpansionPoint& ep, const ChannelSet& ch, double sigma2,
                 int i, int j, double eps_j, int w_base, int eta_var);
double I_exact(const ChannelSet& ch, double sigma2, int i,
               const Eigen::MatrixXcd& W, double eta, double eps_j);
Eigen::VectorXd I_gradient(const ChannelSet& ch, double sigma2, int i,
                           const Eigen::MatrixXcd& W, double eta,
                           double eps_j);

/// Full tangent of Gamma^2/t at (Gamma0, t0): 2 Gamma0 Gamma / t0 -
/// (Gamma0/t0)^2 t.
LinExpr taylor_gamma_sq(double gamma0, double t0, int gamma_var, int t_var);
double gamma_sq_surrogate_value(double gamma0, double t0, double gamma,
                                double t);

/// Real embedding helpers shared with the criteria builder: s = h_i^H w_j as
/// two affine expressions over the 2MG-variable block at w_base.
LinExpr re_hw(const ChannelSet& ch, int i, int l, int w_base);
LinExpr im_hw(const ChannelSet& ch, int i, int l, int w_base);

}  // namespace mgmc

#endif  // MGMC_SURROGATES_HPP_
