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

#include "mgmc/criteria.hpp"

#include <cmath>
#include <stdexcept>

namespace mgmc {

namespace {

const double kLn2 = std::log(2.0);

std::string ij(const char* base, int i, int j) {
  return std::string(base) + "[" + std::to_string(i) + "," + std::to_string(j) +
         "]";
}
std::string jn(const char* base, int j) {
  return std::string(base) + "[" + std::to_string(j) + "]";
}

/// sum_k u_k^2 <= v as SecondOrder([(v+1)/2, u.., (v-1)/2]).
void sum_sq_le(ConeProgram& p, const std::vector<LinExpr>& u, const LinExpr& v,
               const std::string& name) {
  std::vector<LinExpr> coords;
  coords.reserve(u.size() + 2);
  coords.push_back(0.5 * (v + LinExpr(1.0)));
  for (const auto& e : u) coords.push_back(e);
  coords.push_back(0.5 * (v - LinExpr(1.0)));
  p.add_soc(coords, name);
}

struct Builder {
  const SystemConfig& cfg;
  const ChannelSet& ch;
  const ExpansionPoint& ep;
  const PenaltyState& pen;
  const BuildOptions& opts;
  Criterion crit;

  BuiltProgram out;
  LinExpr max_obj;  // affine maximization objective; epigraph vars subtract

  int N, G, M;

  Builder(const SystemConfig& c, const ChannelSet& h, const ExpansionPoint& e,
          const PenaltyState& p, const BuildOptions& o, Criterion cr)
      : cfg(c), ch(h), ep(e), pen(p), opts(o), crit(cr) {
    N = cfg.N;
    G = cfg.G;
    M = cfg.M;
    out.criterion = cr;
  }

  ConeProgram& prog() { return out.prog; }
  VarMap& map() { return out.map; }

  void core_vars(bool with_zeta, bool with_alpha, bool with_t,
                 bool with_gamma) {
    map().w_base = prog().new_vars(2 * M * G, "w");
    map().eta.resize(N, G);
    map().delta.resize(G);
    map().theta = Eigen::VectorXi::Constant(G, -1);
    map().zeta = Eigen::VectorXi::Constant(G, -1);
    map().alpha = Eigen::MatrixXi::Constant(N, G, -1);
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < G; ++j) {
        map().eta(i, j) = prog().new_var(ij("eta", i, j));
        prog().mark_nonneg(map().eta(i, j));
      }
    for (int j = 0; j < G; ++j) {
      map().delta[j] = prog().new_var(jn("delta", j));
      prog().mark_nonneg(map().delta[j]);
    }
    for (int j = 0; j < G; ++j) {
      map().theta[j] = prog().new_var(jn("Theta", j));
      prog().mark_nonneg(map().theta[j]);
    }
    if (with_zeta)
      for (int j = 0; j < G; ++j) {
        map().zeta[j] = prog().new_var(jn("zeta", j));
        prog().mark_nonneg(map().zeta[j]);
      }
    if (with_alpha)
      for (int i = 0; i < N; ++i)
        for (int j = 0; j < G; ++j)
          map().alpha(i, j) = prog().new_var(ij("alpha", i, j));
    if (with_t) map().t = prog().new_var("t");
    if (with_gamma) {
      map().gamma = prog().new_var("Gamma");
      prog().mark_nonneg(map().gamma);
    }
  }

  LinExpr eta(int i, int j) const { return LinExpr::var(out.map.eta(i, j)); }
  LinExpr delta(int j) const { return LinExpr::var(out.map.delta[j]); }
  LinExpr theta(int j) const { return LinExpr::var(out.map.theta[j]); }

  // C1/C4 boxes, per-user sum C2, group capacity C3, interest-mask and
  // freeze fixing.
  void grouping_constraints() {
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < G; ++j)
        prog().add_leq0(eta(i, j) - LinExpr(1.0), ij("ub_eta", i, j));
    for (int j = 0; j < G; ++j)
      prog().add_leq0(delta(j) - LinExpr(1.0), jn("ub_delta", j));
    for (int i = 0; i < N; ++i) {
      LinExpr row;
      for (int j = 0; j < G; ++j) row += eta(i, j);
      prog().add_leq0(row - LinExpr(1.0), jn("ugc", i));
    }
    for (int j = 0; j < G; ++j) {
      LinExpr row;
      for (int i = 0; i < N; ++i) row += eta(i, j);
      prog().add_leq0(row - static_cast<double>(N) * delta(j), jn("cap", j));
    }
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < G; ++j)
        if (!cfg.interested(i, j)) prog().fix_var(out.map.eta(i, j), 0.0);
    if (opts.freeze) {
      for (int i = 0; i < N; ++i)
        for (int j = 0; j < G; ++j)
          if (cfg.interested(i, j))
            prog().fix_var(out.map.eta(i, j), opts.freeze->eta(i, j));
      for (int j = 0; j < G; ++j)
        prog().fix_var(out.map.delta[j], opts.freeze->delta[j]);
    }
  }

  // ||W||_F^2 <= s_w, shared by the power budget and the power model.
  int power_epigraph() {
    std::vector<LinExpr> wexprs;
    wexprs.reserve(2 * M * G);
    for (int k = 0; k < 2 * M * G; ++k)
      wexprs.push_back(LinExpr::var(out.map.w_base + k));
    const int sw = prog().new_var_defined(
        "s_w", QuadOverLinDef{wexprs, LinExpr(1.0)});
    sum_sq_le(prog(), wexprs, LinExpr::var(sw), "soc_w");
    prog().add_leq0(LinExpr::var(sw) - LinExpr(cfg.P_T), "tpc");
    return sw;
  }

  // C5 (or SUM C7): sum_{l != j} |h_i^H w_l|^2 + sigma2 <= rhs.
  void interference_le(int i, int j, const LinExpr& rhs,
                       const std::string& name) {
    LinExpr v = rhs - LinExpr(cfg.sigma2);
    if (G == 1) {
      prog().add_leq0(-v, name);
      return;
    }
    std::vector<LinExpr> u;
    u.reserve(2 * (G - 1));
    for (int l = 0; l < G; ++l) {
      if (l == j) continue;
      u.push_back(re_hw(ch, i, l, out.map.w_base));
      u.push_back(im_hw(ch, i, l, out.map.w_base));
    }
    sum_sq_le(prog(), u, v, name);
  }

  // C5 with the linearized J plus alpha >= 1, and the rate link C7:
  // (eta + Theta)^2 <= (2/ln2) beta + G~, with beta <= ln(alpha).
  void sinr_and_rate_link() {
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < G; ++j) {
        const int a = out.map.alpha(i, j);
        interference_le(i, j,
                        taylor_J(ep, ch, cfg.sigma2, i, j, out.map.w_base, a),
                        ij("igi", i, j));
        prog().add_leq0(LinExpr(1.0) - LinExpr::var(a), ij("alpha_lb", i, j));
        const int beta = prog().new_var_defined(
            ij("beta", i, j), LogDef{LinExpr::var(a)});
        lower_log_lb(prog(), a, LinExpr::var(beta));
        const LinExpr v = (2.0 / kLn2) * LinExpr::var(beta) +
                          taylor_G(ep, i, j, out.map.eta(i, j),
                                   out.map.theta[j]);
        sum_sq_le(prog(), {eta(i, j) + theta(j)}, v, ij("rate", i, j));
      }
  }

  // C8: Theta_j >= delta_j eps_j.
  void qos_floor() {
    for (int j = 0; j < G; ++j)
      prog().add_leq0(cfg.eps[j] * delta(j) - theta(j), jn("qos", j));
  }

  // Epigraph expression for p1(arg): affine in arg and (possibly) one
  // auxiliary. Only the built-in convex forms are lowerable.
  LinExpr p1_epigraph(int arg_var, const std::string& name) {
    const auto& p1 = cfg.power_fn.p1;
    switch (p1.form) {
      case DCFunctionSpec::Form::Zero:
        return LinExpr(0.0);
      case DCFunctionSpec::Form::Quadratic: {
        LinExpr e = LinExpr::var(arg_var, p1.b);
        if (p1.a != 0.0) {
          const int q = prog().epigraph_quad_over_lin(
              {LinExpr::var(arg_var)}, LinExpr(1.0), name);
          e += LinExpr::var(q, p1.a);
        }
        return e;
      }
      case DCFunctionSpec::Form::Expm1: {
        const int e = prog().new_var_defined(
            name, ExpDef{LinExpr::var(arg_var, p1.c)});
        prog().add_exp(LinExpr::var(arg_var, p1.c), LinExpr(1.0),
                       LinExpr::var(e), name);
        return LinExpr::var(e) - LinExpr(1.0);
      }
    }
    throw std::invalid_argument("p1 form not lowerable");
  }

  // Power model row: P0 + s_w/rho + Pi sum_j (p1(arg_j) - p2~(arg_j)) <= t.
  void power_model(int sw, const Eigen::VectorXi& args,
                   const Eigen::VectorXd& args0) {
    LinExpr lhs(cfg.P0);
    lhs += (1.0 / cfg.rho) * LinExpr::var(sw);
    for (int j = 0; j < G; ++j) {
      LinExpr pj = p1_epigraph(args[j], jn("p1", j));
      pj -= taylor_p2(args0[j], cfg.power_fn, args[j]);
      lhs += cfg.Pi_coeff * pj;
    }
    prog().add_leq0(lhs - LinExpr::var(out.map.t), "power");
  }

  void entropy_penalties(double lam_eta, double lam_delta) {
    if (opts.freeze) return;
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < G; ++j) {
        max_obj += lam_eta * taylor_entropy(out.map.eta(i, j), ep.eta(i, j));
        out.dropped_entropy += lam_eta * taylor_entropy_dropped(ep.eta(i, j));
      }
    for (int j = 0; j < G; ++j) {
      max_obj += lam_delta * taylor_entropy(out.map.delta[j], ep.delta[j]);
      out.dropped_entropy += lam_delta * taylor_entropy_dropped(ep.delta[j]);
    }
  }

  // -Omega ||sum_j delta_j - M||^2 via one rotated SOC.
  void gsc_penalty(double omega) {
    if (opts.freeze || omega == 0.0) return;
    LinExpr dev(-static_cast<double>(M));
    for (int j = 0; j < G; ++j) dev += delta(j);
    const int q = prog().epigraph_quad_over_lin({dev}, LinExpr(1.0), "gsc");
    max_obj -= omega * LinExpr::var(q);
  }

  void finish_objective() {
    prog().add_objective(-max_obj);
  }
};

std::vector<std::pair<int, double>> core_pairs(const SystemConfig& cfg,
                                               const VarMap& map,
                                               const IterateState& st) {
  std::vector<std::pair<int, double>> core;
  const int M = cfg.M, N = cfg.N, G = cfg.G;
  for (int l = 0; l < G; ++l)
    for (int k = 0; k < M; ++k) {
      core.emplace_back(map.w_base + 2 * (l * M + k), st.W(k, l).real());
      core.emplace_back(map.w_base + 2 * (l * M + k) + 1, st.W(k, l).imag());
    }
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < G; ++j) core.emplace_back(map.eta(i, j), st.eta(i, j));
  for (int j = 0; j < G; ++j) core.emplace_back(map.delta[j], st.delta[j]);
  for (int j = 0; j < G; ++j)
    if (map.theta[j] >= 0) core.emplace_back(map.theta[j], st.Theta[j]);
  for (int j = 0; j < G; ++j)
    if (map.zeta[j] >= 0) core.emplace_back(map.zeta[j], st.zeta[j]);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < G; ++j)
      if (map.alpha(i, j) >= 0)
        core.emplace_back(map.alpha(i, j), st.alpha(i, j));
  if (map.t >= 0) core.emplace_back(map.t, st.t);
  if (map.gamma >= 0) core.emplace_back(map.gamma, st.Gamma);
  return core;
}

}  // namespace

void IterateState::enforce_invariants(double p0) {
  eta = eta.cwiseMax(0.0).cwiseMin(1.0);
  delta = delta.cwiseMax(0.0).cwiseMin(1.0);
  Theta = Theta.cwiseMax(0.0);
  zeta = zeta.cwiseMax(0.0);
  alpha = alpha.cwiseMax(1.0);
  t = std::max(t, p0 + 1e-9);
  Gamma = std::max(Gamma, 0.0);
}

const char* to_string(Criterion c) {
  switch (c) {
    case Criterion::MEE: return "MEE";
    case Criterion::EE: return "EE";
    case Criterion::SUM: return "SUM";
  }
  return "?";
}

Criterion criterion_from_string(const std::string& s) {
  if (s == "MEE" || s == "mee") return Criterion::MEE;
  if (s == "EE" || s == "ee") return Criterion::EE;
  if (s == "SUM" || s == "sum") return Criterion::SUM;
  throw std::invalid_argument("unknown criterion: " + s);
}

Eigen::VectorXd BuiltProgram::embed_state(const SystemConfig& cfg,
                                          const IterateState& st) const {
  return prog.embed(core_pairs(cfg, map, st));
}

IterateState BuiltProgram::extract_state(const SystemConfig& cfg,
                                         const ChannelSet& ch,
                                         const Eigen::VectorXd& x) const {
  const int M = cfg.M, N = cfg.N, G = cfg.G;
  IterateState st;
  st.W.resize(M, G);
  for (int l = 0; l < G; ++l)
    for (int k = 0; k < M; ++k)
      st.W(k, l) = std::complex<double>(x[map.w_base + 2 * (l * M + k)],
                                        x[map.w_base + 2 * (l * M + k) + 1]);
  st.eta.resize(N, G);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < G; ++j) st.eta(i, j) = x[map.eta(i, j)];
  st.delta.resize(G);
  for (int j = 0; j < G; ++j) st.delta[j] = x[map.delta[j]];
  st.Theta = Eigen::VectorXd::Zero(G);
  for (int j = 0; j < G; ++j)
    if (map.theta[j] >= 0) st.Theta[j] = x[map.theta[j]];
  st.zeta = Eigen::VectorXd::Zero(G);
  for (int j = 0; j < G; ++j)
    if (map.zeta[j] >= 0) st.zeta[j] = x[map.zeta[j]];
  st.alpha.resize(N, G);
  PrecoderMatrix w{st.W};
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < G; ++j)
      st.alpha(i, j) = map.alpha(i, j) >= 0
                           ? x[map.alpha(i, j)]
                           : 1.0 + sinr(ch, w, i, j, cfg.sigma2);
  st.t = map.t >= 0 ? x[map.t]
                    : consumed_power(cfg, w, Eigen::VectorXd::Zero(G));
  st.Gamma = map.gamma >= 0
                 ? x[map.gamma]
                 : std::sqrt(std::max(
                       0.0, (cfg.B * cfg.psi.array() * st.Theta.array()).sum()));
  st.enforce_invariants(cfg.P0);
  return st;
}

BuiltProgram build_mee_subproblem(const SystemConfig& cfg, const ChannelSet& ch,
                                  const ExpansionPoint& ep,
                                  const PenaltyState& pen,
                                  const BuildOptions& opts) {
  Builder bld(cfg, ch, ep, pen, opts, Criterion::MEE);
  bld.core_vars(/*zeta=*/true, /*alpha=*/true, /*t=*/true, /*gamma=*/false);
  auto& prog = bld.prog();
  const VarMap& map = bld.map();
  const int N = cfg.N, G = cfg.G;

  // objective: sum f^k + entropy penalties - Omega1 gsc
  std::vector<LinExpr> eta_quad;  // sqrt(B psi_j / 2) eta_ij
  std::vector<LinExpr> theta_quad;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < G; ++j) {
      const SurrogateF f = taylor_f(ep, cfg, i, j, map.eta(i, j), map.theta[j],
                                    map.t);
      bld.max_obj += f.affine;
      eta_quad.push_back(
          LinExpr::var(map.eta(i, j), std::sqrt(f.eta_sq_coeff)));
    }
  for (int j = 0; j < G; ++j)
    theta_quad.push_back(LinExpr::var(
        map.theta[j], std::sqrt(N * cfg.B * cfg.psi[j] / 2.0)));
  const int s_eta =
      prog.epigraph_quad_over_lin(eta_quad, LinExpr::var(map.t), "f_eta");
  const int s_theta =
      prog.epigraph_quad_over_lin(theta_quad, LinExpr::var(map.t), "f_theta");
  bld.max_obj -= LinExpr::var(s_eta) + LinExpr::var(s_theta);
  bld.entropy_penalties(pen.lambda1, pen.lambda2);
  bld.gsc_penalty(pen.Omega1);

  bld.grouping_constraints();
  const int sw = bld.power_epigraph();
  bld.sinr_and_rate_link();
  bld.qos_floor();
  // C9: zeta_j / B + delta_j^2 + Theta_j^2 <= K~
  for (int j = 0; j < G; ++j) {
    const LinExpr v = taylor_K(ep, j, map.delta[j], map.theta[j]) -
                      (1.0 / cfg.B) * LinExpr::var(map.zeta[j]);
    sum_sq_le(prog, {bld.delta(j), bld.theta(j)}, v, jn("mee_link", j));
  }
  bld.power_model(sw, map.zeta, ep.zeta);
  bld.finish_objective();
  return std::move(bld.out);
}

BuiltProgram build_ee_subproblem(const SystemConfig& cfg, const ChannelSet& ch,
                                 const ExpansionPoint& ep,
                                 const PenaltyState& pen,
                                 const BuildOptions& opts) {
  Builder bld(cfg, ch, ep, pen, opts, Criterion::EE);
  bld.core_vars(/*zeta=*/false, /*alpha=*/true, /*t=*/true, /*gamma=*/true);
  auto& prog = bld.prog();
  const VarMap& map = bld.map();
  const int G = cfg.G;

  bld.max_obj += taylor_gamma_sq(ep.Gamma, ep.t, map.gamma, map.t);
  bld.entropy_penalties(pen.lambda3, pen.lambda4);
  bld.gsc_penalty(pen.Omega2);

  bld.grouping_constraints();
  const int sw = bld.power_epigraph();
  bld.sinr_and_rate_link();
  bld.qos_floor();
  bld.power_model(sw, map.theta, ep.Theta);
  // C10: Theta_j <= delta_j Theta*_j
  for (int j = 0; j < G; ++j)
    prog.add_leq0(bld.theta(j) - theta_star(cfg, ch, j) * bld.delta(j),
                  jn("cap_theta", j));
  // C11: Gamma^2 <= sum_j B psi_j Theta_j
  LinExpr v;
  for (int j = 0; j < G; ++j) v += cfg.B * cfg.psi[j] * bld.theta(j);
  sum_sq_le(prog, {LinExpr::var(map.gamma)}, v, "thr_link");
  bld.finish_objective();
  return std::move(bld.out);
}

BuiltProgram build_sum_subproblem(const SystemConfig& cfg, const ChannelSet& ch,
                                  const ExpansionPoint& ep,
                                  const PenaltyState& pen,
                                  const BuildOptions& opts) {
  Builder bld(cfg, ch, ep, pen, opts, Criterion::SUM);
  bld.core_vars(/*zeta=*/false, /*alpha=*/false, /*t=*/false,
                /*gamma=*/false);
  auto& prog = bld.prog();
  const VarMap& map = bld.map();
  const int N = cfg.N, G = cfg.G, M = cfg.M;

  for (int i = 0; i < N; ++i)
    for (int j = 0; j < G; ++j) bld.max_obj += bld.eta(i, j);
  bld.entropy_penalties(pen.lambda5, pen.lambda6);
  bld.gsc_penalty(pen.Omega3);

  bld.grouping_constraints();
  // GSC kept as the hard equality of P1's C5 alongside the penalty.
  LinExpr gsc(-static_cast<double>(M));
  for (int j = 0; j < G; ++j) gsc += bld.delta(j);
  prog.add_eq(gsc);
  bld.power_epigraph();
  // C7 with the linearized ratio
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < G; ++j)
      bld.interference_le(
          i, j,
          taylor_I(ep, ch, cfg.sigma2, i, j, cfg.eps[j], map.w_base,
                   map.eta(i, j)),
          ij("adm", i, j));
  bld.finish_objective();
  return std::move(bld.out);
}

BuiltProgram build_fip_lp(const SystemConfig& cfg, const ChannelSet& ch,
                          const PrecoderMatrix& w0) {
  if (w0.total_power() > cfg.P_T * (1.0 + 1e-9))
    throw std::invalid_argument("FIP precoder violates the power budget");
  BuiltProgram out;
  out.criterion = Criterion::MEE;  // criterion-agnostic seed
  ConeProgram& prog = out.prog;
  const int N = cfg.N, G = cfg.G;
  out.map.eta.resize(N, G);
  out.map.delta.resize(G);
  out.map.theta = Eigen::VectorXi::Constant(G, -1);
  out.map.zeta = Eigen::VectorXi::Constant(G, -1);
  out.map.alpha = Eigen::MatrixXi::Constant(N, G, -1);
  LinExpr obj;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < G; ++j) {
      out.map.eta(i, j) = prog.new_var(ij("eta", i, j));
      prog.mark_nonneg(out.map.eta(i, j));
      obj += LinExpr::var(out.map.eta(i, j));
    }
  for (int j = 0; j < G; ++j) {
    out.map.delta[j] = prog.new_var(jn("delta", j));
    prog.mark_nonneg(out.map.delta[j]);
    obj += LinExpr::var(out.map.delta[j]);
  }
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < G; ++j)
      prog.add_leq0(LinExpr::var(out.map.eta(i, j)) - LinExpr(1.0),
                    ij("ub_eta", i, j));
  for (int j = 0; j < G; ++j)
    prog.add_leq0(LinExpr::var(out.map.delta[j]) - LinExpr(1.0),
                  jn("ub_delta", j));
  for (int i = 0; i < N; ++i) {
    LinExpr row;
    for (int j = 0; j < G; ++j) row += LinExpr::var(out.map.eta(i, j));
    prog.add_leq0(row - LinExpr(1.0), jn("ugc", i));
  }
  for (int j = 0; j < G; ++j) {
    LinExpr row;
    for (int i = 0; i < N; ++i) row += LinExpr::var(out.map.eta(i, j));
    row -= static_cast<double>(N) * LinExpr::var(out.map.delta[j]);
    prog.add_leq0(row, jn("cap", j));
  }
  // C5: log2(1 + gamma0_ij) >= eta_ij eps_j
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < G; ++j) {
      if (!cfg.interested(i, j)) {
        prog.fix_var(out.map.eta(i, j), 0.0);
        continue;
      }
      const double rate0 =
          std::log2(1.0 + sinr(ch, w0, i, j, cfg.sigma2));
      prog.add_leq0(cfg.eps[j] * LinExpr::var(out.map.eta(i, j)) -
                        LinExpr(rate0),
                    ij("fes", i, j));
    }
  prog.add_objective(-obj);
  return out;
}

double theta_star(const SystemConfig& cfg, const ChannelSet& ch, int j) {
  double best = 0.0;
  for (int i = 0; i < cfg.N; ++i)
    best = std::max(best, ch.H.row(i).squaredNorm());
  const double bound = std::log2(1.0 + cfg.P_T * best / cfg.sigma2);
  return std::max(bound, cfg.eps[j]);
}

double dc_objective(const SystemConfig& cfg, Criterion crit,
                    const IterateState& st) {
  switch (crit) {
    case Criterion::MEE: {
      double total = 0.0;
      for (int i = 0; i < cfg.N; ++i)
        for (int j = 0; j < cfg.G; ++j)
          total += f_exact(cfg, j, st.eta(i, j), st.Theta[j], st.t);
      return total;
    }
    case Criterion::EE:
      return st.Gamma * st.Gamma / st.t;
    case Criterion::SUM:
      return st.eta.sum();
  }
  return 0.0;
}

double penalized_dc_objective(const SystemConfig& cfg, Criterion crit,
                              const PenaltyState& pen,
                              const IterateState& st) {
  double lam_eta = 0.0, lam_delta = 0.0, omega = 0.0;
  switch (crit) {
    case Criterion::MEE:
      lam_eta = pen.lambda1; lam_delta = pen.lambda2; omega = pen.Omega1;
      break;
    case Criterion::EE:
      lam_eta = pen.lambda3; lam_delta = pen.lambda4; omega = pen.Omega2;
      break;
    case Criterion::SUM:
      lam_eta = pen.lambda5; lam_delta = pen.lambda6; omega = pen.Omega3;
      break;
  }
  double total = dc_objective(cfg, crit, st);
  for (int i = 0; i < cfg.N; ++i)
    for (int j = 0; j < cfg.G; ++j)
      total += lam_eta * entropy_value(st.eta(i, j));
  for (int j = 0; j < cfg.G; ++j)
    total += lam_delta * entropy_value(st.delta[j]);
  const double dev = st.delta.sum() - cfg.M;
  total -= omega * dev * dev;
  return total;
}

}  // namespace mgmc
