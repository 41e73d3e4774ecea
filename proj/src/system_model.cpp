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

#include "mgmc/system_model.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include <json.hpp>

namespace mgmc {

namespace {
constexpr double kQosTol = 1e-6;

double log2_1p(double g) { return std::log1p(g) / std::log(2.0); }
}  // namespace

double DCFunctionSpec::Part::value(double x) const {
  switch (form) {
    case Form::Zero: return 0.0;
    case Form::Quadratic: return a * x * x + b * x;
    case Form::Expm1: return std::expm1(c * x);
  }
  return 0.0;
}

double DCFunctionSpec::Part::deriv(double x) const {
  switch (form) {
    case Form::Zero: return 0.0;
    case Form::Quadratic: return 2.0 * a * x + b;
    case Form::Expm1: return c * std::exp(c * x);
  }
  return 0.0;
}

void DCFunctionSpec::validate(double grid_max) const {
  if (std::abs(p1.value(0.0) - p2.value(0.0)) > 1e-12)
    throw std::invalid_argument("power_fn: p1(0) != p2(0)");
  double prev1 = p1.value(0.0), prev2 = p2.value(0.0);
  double prevd1 = p1.deriv(0.0), prevd2 = p2.deriv(0.0);
  if (prevd1 < -1e-12 || prevd2 < -1e-12)
    throw std::invalid_argument("power_fn: part decreasing at 0");
  const int steps = 64;
  for (int k = 1; k <= steps; ++k) {
    const double x = grid_max * k / steps;
    const double v1 = p1.value(x), v2 = p2.value(x);
    const double d1 = p1.deriv(x), d2 = p2.deriv(x);
    if (v1 < prev1 - 1e-12 || v2 < prev2 - 1e-12)
      throw std::invalid_argument("power_fn: part not nondecreasing");
    if (d1 < prevd1 - 1e-9 || d2 < prevd2 - 1e-9)
      throw std::invalid_argument("power_fn: part not convex on grid");
    const double h = 1e-5 * (1.0 + x);
    for (const Part* part : {&p1, &p2}) {
      const double fd = (part->value(x + h) - part->value(x - h)) / (2 * h);
      const double an = part->deriv(x);
      if (std::abs(fd - an) > 1e-6 * std::max({1.0, std::abs(fd), std::abs(an)}))
        throw std::invalid_argument("power_fn: derivative mismatch");
    }
    prev1 = v1; prev2 = v2; prevd1 = d1; prevd2 = d2;
  }
}

void SystemConfig::finalize() {
  if (M < 1 || N < 1 || G < 1)
    throw std::invalid_argument("M, N, G must be positive");
  if (N < M) throw std::invalid_argument("N >= M required");
  if (G < M) throw std::invalid_argument("G >= M required");
  if (!(P_T > 0)) throw std::invalid_argument("P_T must be positive");
  if (!(sigma2 > 0)) throw std::invalid_argument("sigma2 must be positive");
  if (!(rho > 0 && rho <= 1)) throw std::invalid_argument("0 < rho <= 1");
  if (Pi_coeff < 0) throw std::invalid_argument("Pi_coeff >= 0");
  if (!(B > 0)) throw std::invalid_argument("B must be positive");
  if (eps.size() == 0) eps = Eigen::VectorXd::Zero(G);
  if (eps.size() == 1 && G > 1) eps = Eigen::VectorXd::Constant(G, eps[0]);
  if (psi.size() == 0) psi = Eigen::VectorXd::Ones(G);
  if (psi.size() == 1 && G > 1) psi = Eigen::VectorXd::Constant(G, psi[0]);
  if (eps.size() != G || psi.size() != G)
    throw std::invalid_argument("eps/psi must have length G");
  if ((eps.array() < 0).any()) throw std::invalid_argument("eps >= 0 required");
  if ((psi.array() <= 0).any()) throw std::invalid_argument("psi > 0 required");
  if (interest_mask.size() == 0)
    interest_mask = Eigen::MatrixXd::Ones(N, G);
  if (interest_mask.rows() != N || interest_mask.cols() != G)
    throw std::invalid_argument("interest_mask must be N x G");
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < G; ++j)
      if (interest_mask(i, j) != 0.0 && interest_mask(i, j) != 1.0)
        throw std::invalid_argument("interest_mask entries must be 0/1");
  power_fn.validate();
}

ChannelSet generate_channels(const SystemConfig& cfg, std::uint64_t seed) {
  SystemConfig checked = cfg;
  checked.finalize();
  std::mt19937_64 rng(seed);
  auto uniform = [&rng]() {
    // (0,1], avoids log(0) below
    return (static_cast<double>(rng() >> 11) + 1.0) * 0x1.0p-53;
  };
  ChannelSet ch;
  ch.seed = seed;
  ch.H.resize(cfg.N, cfg.M);
  for (int i = 0; i < cfg.N; ++i) {
    for (int k = 0; k < cfg.M; ++k) {
      // Box-Muller; per-component variance 1/2 gives unit total variance.
      const double u1 = uniform(), u2 = uniform();
      const double r = std::sqrt(-std::log(u1));  // sqrt(2 * 1/2 * -log u)
      ch.H(i, k) = std::complex<double>(r * std::cos(2 * M_PI * u2),
                                        r * std::sin(2 * M_PI * u2));
    }
  }
  return ch;
}

double sinr(const ChannelSet& ch, const PrecoderMatrix& w, int user, int group,
            double sigma2) {
  const int N = static_cast<int>(ch.H.rows());
  const int G = static_cast<int>(w.W.cols());
  if (user < 0 || user >= N || group < 0 || group >= G)
    throw std::out_of_range("sinr: index out of range");
  const Eigen::RowVectorXcd s = ch.H.row(user) * w.W;
  double interference = 0.0;
  for (int l = 0; l < G; ++l)
    if (l != group) interference += std::norm(s[l]);
  return std::norm(s[group]) / (interference + sigma2);
}

double consumed_power(const SystemConfig& cfg, const PrecoderMatrix& w,
                      const Eigen::VectorXd& rates) {
  if ((rates.array() < 0).any())
    throw std::invalid_argument("consumed_power: negative rate");
  if (rates.size() != w.W.cols())
    throw std::invalid_argument("consumed_power: rate vector length mismatch");
  double total = cfg.P0;
  for (int j = 0; j < w.W.cols(); ++j)
    total += w.W.col(j).squaredNorm() / cfg.rho +
             cfg.Pi_coeff * cfg.power_fn.value(rates[j]);
  return total;
}

bool AssignmentState::is_rounded(double tol) const {
  auto binary = [tol](double v) {
    return std::abs(v) <= tol || std::abs(v - 1.0) <= tol;
  };
  for (int i = 0; i < eta.rows(); ++i)
    for (int j = 0; j < eta.cols(); ++j)
      if (!binary(eta(i, j))) return false;
  for (int j = 0; j < delta.size(); ++j)
    if (!binary(delta[j])) return false;
  return true;
}

namespace {
void check_rounded_valid(const SystemConfig& cfg,
                         const AssignmentState& assignment) {
  if (assignment.eta.rows() != cfg.N || assignment.eta.cols() != cfg.G ||
      assignment.delta.size() != cfg.G)
    throw std::invalid_argument("assignment dimensions mismatch");
  if (!assignment.is_rounded())
    throw std::invalid_argument("assignment is not rounded");
  for (int i = 0; i < cfg.N; ++i) {
    double row = 0.0;
    for (int j = 0; j < cfg.G; ++j) {
      row += assignment.eta(i, j);
      if (assignment.eta(i, j) > 0.5 && !cfg.interested(i, j))
        throw std::invalid_argument("member outside interest mask");
      if (assignment.eta(i, j) > 0.5 && assignment.delta[j] < 0.5)
        throw std::invalid_argument("member in unscheduled group");
    }
    if (row > 1.0 + 1e-9)
      throw std::invalid_argument("user in more than one group");
  }
}
}  // namespace

Metrics score(const SystemConfig& cfg, const ChannelSet& ch,
              const PrecoderMatrix& w, const AssignmentState& assignment) {
  check_rounded_valid(cfg, assignment);
  Metrics out;
  out.min_rates = Eigen::VectorXd::Zero(cfg.G);
  double weighted_bits = 0.0;
  int users = 0, groups = 0;
  for (int j = 0; j < cfg.G; ++j) {
    const bool scheduled = assignment.delta[j] > 0.5;
    if (scheduled) ++groups;
    int members = 0;
    double min_gamma = std::numeric_limits<double>::infinity();
    for (int i = 0; i < cfg.N; ++i) {
      if (assignment.eta(i, j) > 0.5) {
        ++members;
        min_gamma = std::min(min_gamma, sinr(ch, w, i, j, cfg.sigma2));
      }
    }
    users += members;
    if (scheduled && members > 0)
      out.min_rates[j] = cfg.B * log2_1p(min_gamma);
    weighted_bits += cfg.psi[j] * members * out.min_rates[j];
    if (scheduled) out.throughput += out.min_rates[j];
  }
  out.scheduled_users = users;
  out.scheduled_groups = groups;
  out.consumed_power = consumed_power(cfg, w, out.min_rates);
  out.mee = weighted_bits / out.consumed_power;
  out.ee = out.throughput / out.consumed_power;
  return out;
}

QosReport qos_satisfied(const SystemConfig& cfg, const ChannelSet& ch,
                        const PrecoderMatrix& w,
                        const AssignmentState& assignment) {
  check_rounded_valid(cfg, assignment);
  QosReport report;
  for (int j = 0; j < cfg.G; ++j)
    for (int i = 0; i < cfg.N; ++i)
      if (assignment.eta(i, j) > 0.5) {
        const double rate = log2_1p(sinr(ch, w, i, j, cfg.sigma2));
        if (rate < cfg.eps[j] - kQosTol) {
          report.satisfied = false;
          report.violators.emplace_back(i, j);
        }
      }
  return report;
}

std::string ChannelSet::to_json() const {
  nlohmann::json j;
  j["seed"] = seed;
  j["N"] = H.rows();
  j["M"] = H.cols();
  auto re = nlohmann::json::array(), im = nlohmann::json::array();
  for (int i = 0; i < H.rows(); ++i) {
    auto row_re = nlohmann::json::array(), row_im = nlohmann::json::array();
    for (int k = 0; k < H.cols(); ++k) {
      row_re.push_back(H(i, k).real());
      row_im.push_back(H(i, k).imag());
    }
    re.push_back(row_re);
    im.push_back(row_im);
  }
  j["H_re"] = re;
  j["H_im"] = im;
  return j.dump();
}

ChannelSet ChannelSet::from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  ChannelSet ch;
  ch.seed = j.at("seed").get<std::uint64_t>();
  const int n = j.at("N").get<int>(), m = j.at("M").get<int>();
  ch.H.resize(n, m);
  const auto& re = j.at("H_re");
  const auto& im = j.at("H_im");
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < m; ++k)
      ch.H(i, k) = std::complex<double>(re.at(i).at(k).get<double>(),
                                        im.at(i).at(k).get<double>());
  return ch;
}

std::string Metrics::to_json() const {
  nlohmann::json j;
  j["mee"] = mee;
  j["ee"] = ee;
  j["throughput"] = throughput;
  j["consumed_power"] = consumed_power;
  j["scheduled_users"] = scheduled_users;
  j["scheduled_groups"] = scheduled_groups;
  auto rates = nlohmann::json::array();
  for (int k = 0; k < min_rates.size(); ++k) rates.push_back(min_rates[k]);
  j["min_rates"] = rates;
  return j.dump();
}

}  // namespace mgmc
