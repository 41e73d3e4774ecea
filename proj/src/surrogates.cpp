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

#include "mgmc/surrogates.hpp"

#include <cmath>

namespace mgmc {

namespace {
double clamp01(double x) {
  return std::min(std::max(x, kEntropyClamp), 1.0 - kEntropyClamp);
}

int wr_index(int w_base, int M, int k, int l) { return w_base + 2 * (l * M + k); }
int wi_index(int w_base, int M, int k, int l) {
  return w_base + 2 * (l * M + k) + 1;
}
}  // namespace

double entropy_value(double x) {
  const double v = clamp01(x);
  return v * std::log(v) + (1.0 - v) * std::log(1.0 - v);
}

double entropy_grad(double x0) {
  const double v = clamp01(x0);
  return std::log(v) - std::log(1.0 - v);
}

LinExpr taylor_entropy(int x_var, double x0) {
  return LinExpr::var(x_var, entropy_grad(x0));
}

double taylor_entropy_dropped(double x0) {
  const double v = clamp01(x0);
  return entropy_value(v) - v * entropy_grad(v);
}

SurrogateF taylor_f(const ExpansionPoint& ep, const SystemConfig& cfg, int i,
                    int j, int eta_var, int theta_var, int t_var) {
  const double scale = cfg.B * cfg.psi[j];
  const double u0 = ep.eta(i, j) + ep.Theta[j];
  const double t0 = ep.t;
  const double slope = u0 / t0;
  SurrogateF s;
  s.affine = LinExpr::var(eta_var, scale * slope) +
             LinExpr::var(theta_var, scale * slope) -
             LinExpr::var(t_var, scale * slope * slope / 2.0);
  s.eta_sq_coeff = scale / 2.0;
  s.theta_sq_coeff = scale / 2.0;
  return s;
}

double f_exact(const SystemConfig& cfg, int j, double eta, double theta,
               double t) {
  const double u = eta + theta;
  return cfg.B * cfg.psi[j] * (u * u - eta * eta - theta * theta) / (2.0 * t);
}

double f_surrogate_value(const ExpansionPoint& ep, const SystemConfig& cfg,
                         int i, int j, double eta, double theta, double t) {
  const double scale = cfg.B * cfg.psi[j];
  const double slope = (ep.eta(i, j) + ep.Theta[j]) / ep.t;
  return scale * (slope * (eta + theta) - slope * slope * t / 2.0 -
                  eta * eta / (2.0 * t) - theta * theta / (2.0 * t));
}

LinExpr re_hw(const ChannelSet& ch, int i, int l, int w_base) {
  const int M = static_cast<int>(ch.H.cols());
  LinExpr e;
  for (int k = 0; k < M; ++k) {
    e.add(wr_index(w_base, M, k, l), ch.H(i, k).real());
    e.add(wi_index(w_base, M, k, l), -ch.H(i, k).imag());
  }
  return e;
}

LinExpr im_hw(const ChannelSet& ch, int i, int l, int w_base) {
  const int M = static_cast<int>(ch.H.cols());
  LinExpr e;
  for (int k = 0; k < M; ++k) {
    e.add(wi_index(w_base, M, k, l), ch.H(i, k).real());
    e.add(wr_index(w_base, M, k, l), ch.H(i, k).imag());
  }
  return e;
}

LinExpr taylor_J(const ExpansionPoint& ep, const ChannelSet& ch, double sigma2,
                 int i, int j, int w_base, int alpha_var) {
  const int G = static_cast<int>(ep.W.cols());
  const double a0 = ep.alpha(i, j);
  const Eigen::RowVectorXcd s = ch.H.row(i) * ep.W;
  const double j0 = (s.squaredNorm() + sigma2) / a0;
  LinExpr e(j0);
  for (int l = 0; l < G; ++l) {
    const double sr = s[l].real(), si = s[l].imag();
    LinExpr dre = re_hw(ch, i, l, w_base) - LinExpr(sr);
    LinExpr dim = im_hw(ch, i, l, w_base) - LinExpr(si);
    e += (2.0 / a0) * (sr * dre + si * dim);
  }
  // -(J0/a0)(alpha - a0) = -(J0/a0) alpha + J0
  e += LinExpr::var(alpha_var, -j0 / a0) + LinExpr(j0);
  return e;
}

double J_exact(const ChannelSet& ch, double sigma2, int i,
               const Eigen::MatrixXcd& W, double alpha) {
  const Eigen::RowVectorXcd s = ch.H.row(i) * W;
  return (s.squaredNorm() + sigma2) / alpha;
}

Eigen::VectorXd J_gradient(const ChannelSet& ch, double sigma2, int i,
                           const Eigen::MatrixXcd& W, double alpha) {
  const int M = static_cast<int>(W.rows()), G = static_cast<int>(W.cols());
  const Eigen::RowVectorXcd s = ch.H.row(i) * W;
  Eigen::VectorXd grad(2 * M * G + 1);
  for (int l = 0; l < G; ++l)
    for (int k = 0; k < M; ++k) {
      const double hr = ch.H(i, k).real(), hi = ch.H(i, k).imag();
      const double sr = s[l].real(), si = s[l].imag();
      grad[2 * (l * M + k)] = 2.0 * (sr * hr + si * hi) / alpha;
      grad[2 * (l * M + k) + 1] = 2.0 * (si * hr - sr * hi) / alpha;
    }
  grad[2 * M * G] = -(s.squaredNorm() + sigma2) / (alpha * alpha);
  return grad;
}

LinExpr taylor_G(const ExpansionPoint& ep, int i, int j, int eta_var,
                 int theta_var) {
  const double e0 = ep.eta(i, j), th0 = ep.Theta[j];
  return LinExpr(-e0 * e0 - th0 * th0) + LinExpr::var(eta_var, 2.0 * e0) +
         LinExpr::var(theta_var, 2.0 * th0);
}

double G_surrogate_value(const ExpansionPoint& ep, int i, int j, double eta,
                         double theta) {
  const double e0 = ep.eta(i, j), th0 = ep.Theta[j];
  return -e0 * e0 - th0 * th0 + 2.0 * e0 * eta + 2.0 * th0 * theta;
}

LinExpr taylor_K(const ExpansionPoint& ep, int j, int delta_var,
                 int theta_var) {
  const double u0 = ep.delta[j] + ep.Theta[j];
  return LinExpr(-u0 * u0) + LinExpr::var(delta_var, 2.0 * u0) +
         LinExpr::var(theta_var, 2.0 * u0);
}

double K_surrogate_value(const ExpansionPoint& ep, int j, double delta,
                         double theta) {
  const double u0 = ep.delta[j] + ep.Theta[j];
  return -u0 * u0 + 2.0 * u0 * (delta + theta);
}

LinExpr taylor_p2(double z0, const DCFunctionSpec& spec, int z_var) {
  const double v0 = spec.p2.value(z0), d0 = spec.p2.deriv(z0);
  return LinExpr(v0 - d0 * z0) + LinExpr::var(z_var, d0);
}

double p2_surrogate_value(double z0, const DCFunctionSpec& spec, double z) {
  return spec.p2.value(z0) + spec.p2.deriv(z0) * (z - z0);
}

LinExpr taylor_I(const ExpansionPoint& ep, const ChannelSet& ch, double sigma2,
                 int i, int j, double eps_j, int w_base, int eta_var) {
  const int G = static_cast<int>(ep.W.cols());
  const double d0 = 1.0 + ep.eta(i, j) * eps_j;
  const Eigen::RowVectorXcd s = ch.H.row(i) * ep.W;
  const double i0 = (s.squaredNorm() + sigma2) / d0;
  LinExpr e(i0);
  for (int l = 0; l < G; ++l) {
    const double sr = s[l].real(), si = s[l].imag();
    LinExpr dre = re_hw(ch, i, l, w_base) - LinExpr(sr);
    LinExpr dim = im_hw(ch, i, l, w_base) - LinExpr(si);
    e += (2.0 / d0) * (sr * dre + si * dim);
  }
  const double eta0 = ep.eta(i, j);
  e += LinExpr::var(eta_var, -eps_j * i0 / d0) + LinExpr(eps_j * i0 / d0 * eta0);
  return e;
}

double I_exact(const ChannelSet& ch, double sigma2, int i,
               const Eigen::MatrixXcd& W, double eta, double eps_j) {
  const Eigen::RowVectorXcd s = ch.H.row(i) * W;
  return (s.squaredNorm() + sigma2) / (1.0 + eta * eps_j);
}

Eigen::VectorXd I_gradient(const ChannelSet& ch, double sigma2, int i,
                           const Eigen::MatrixXcd& W, double eta,
                           double eps_j) {
  const int M = static_cast<int>(W.rows()), G = static_cast<int>(W.cols());
  const double d = 1.0 + eta * eps_j;
  const Eigen::RowVectorXcd s = ch.H.row(i) * W;
  Eigen::VectorXd grad(2 * M * G + 1);
  for (int l = 0; l < G; ++l)
    for (int k = 0; k < M; ++k) {
      const double hr = ch.H(i, k).real(), hi = ch.H(i, k).imag();
      const double sr = s[l].real(), si = s[l].imag();
      grad[2 * (l * M + k)] = 2.0 * (sr * hr + si * hi) / d;
      grad[2 * (l * M + k) + 1] = 2.0 * (si * hr - sr * hi) / d;
    }
  grad[2 * M * G] = -eps_j * (s.squaredNorm() + sigma2) / (d * d);
  return grad;
}

LinExpr taylor_gamma_sq(double gamma0, double t0, int gamma_var, int t_var) {
  const double slope = gamma0 / t0;
  return LinExpr::var(gamma_var, 2.0 * slope) -
         LinExpr::var(t_var, slope * slope);
}

double gamma_sq_surrogate_value(double gamma0, double t0, double gamma,
                                double t) {
  const double slope = gamma0 / t0;
  return 2.0 * slope * gamma - slope * slope * t;
}

}  // namespace mgmc
