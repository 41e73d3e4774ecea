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

#include "mgmc/cone_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include <Eigen/SparseCholesky>

namespace mgmc {
namespace {

constexpr double kPrimalReg = 1e-9;
constexpr double kDualReg = 1e-9;
constexpr double kHuge = 1e13;

struct Barrier {
  // Value is never needed; gradient and Hessian blocks are.
  // Hessian is stored as dense blocks per cone, assembled into triplets.
  const ConeProgram& p;
  explicit Barrier(const ConeProgram& prog) : p(prog) {}

  // Gradient of the barrier at x (zero on free coordinates). Returns false
  // when x is not strictly interior.
  bool gradient(const Eigen::VectorXd& x, Eigen::VectorXd& g) const {
    g.setZero();
    for (const auto& cone : p.cones()) {
      switch (cone.kind) {
        case ConeKind::Nonnegative:
          for (int v : cone.vars) {
            if (x[v] <= 0) return false;
            g[v] += -1.0 / x[v];
          }
          break;
        case ConeKind::SecondOrder: {
          const int t = cone.vars[0];
          double uu = 0.0;
          for (size_t k = 1; k < cone.vars.size(); ++k)
            uu += x[cone.vars[k]] * x[cone.vars[k]];
          const double w = x[t] * x[t] - uu;
          if (w <= 0 || x[t] <= 0) return false;
          g[t] += -2.0 * x[t] / w;
          for (size_t k = 1; k < cone.vars.size(); ++k)
            g[cone.vars[k]] += 2.0 * x[cone.vars[k]] / w;
          break;
        }
        case ConeKind::Exponential: {
          const double a = x[cone.vars[0]], b = x[cone.vars[1]],
                       c = x[cone.vars[2]];
          if (b <= 0 || c <= 0) return false;
          const double l = std::log(c / b);
          const double psi = b * l - a;
          if (psi <= 0) return false;
          g[cone.vars[0]] += 1.0 / psi;
          g[cone.vars[1]] += -(l - 1.0) / psi - 1.0 / b;
          g[cone.vars[2]] += -(b / c) / psi - 1.0 / c;
          break;
        }
      }
    }
    return true;
  }

  // Appends Hessian triplets at x (lower+upper, symmetric full pattern).
  void hessian(const Eigen::VectorXd& x,
               std::vector<Eigen::Triplet<double>>& trips) const {
    for (const auto& cone : p.cones()) {
      switch (cone.kind) {
        case ConeKind::Nonnegative:
          for (int v : cone.vars)
            trips.emplace_back(v, v, 1.0 / (x[v] * x[v]));
          break;
        case ConeKind::SecondOrder: {
          const size_t d = cone.vars.size();
          const int t = cone.vars[0];
          double uu = 0.0;
          for (size_t k = 1; k < d; ++k) uu += x[cone.vars[k]] * x[cone.vars[k]];
          const double w = x[t] * x[t] - uu;
          // 4/w^2 * vv' + (2/w) diag(-1, I) with v = (t, -u)
          std::vector<double> v(d);
          v[0] = x[t];
          for (size_t k = 1; k < d; ++k) v[k] = -x[cone.vars[k]];
          const double s1 = 4.0 / (w * w), s2 = 2.0 / w;
          for (size_t r = 0; r < d; ++r)
            for (size_t q = 0; q < d; ++q) {
              double h = s1 * v[r] * v[q];
              if (r == q) h += (r == 0 ? -s2 : s2);
              if (h != 0.0) trips.emplace_back(cone.vars[r], cone.vars[q], h);
            }
          break;
        }
        case ConeKind::Exponential: {
          const double a = x[cone.vars[0]], b = x[cone.vars[1]],
                       c = x[cone.vars[2]];
          const double l = std::log(c / b);
          const double psi = b * l - a;
          // grad psi = (-1, l-1, b/c); hess psi rows (a,b,c)
          const double gp[3] = {-1.0, l - 1.0, b / c};
          double H[3][3] = {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}};
          const double inv_psi = 1.0 / psi, inv_psi2 = inv_psi * inv_psi;
          for (int r = 0; r < 3; ++r)
            for (int q = 0; q < 3; ++q) H[r][q] = inv_psi2 * gp[r] * gp[q];
          // -(1/psi) * hess(psi); hess(psi) nonzeros: bb=-1/b, bc=cb=1/c, cc=-b/c^2
          H[1][1] += inv_psi / b;
          H[1][2] += -inv_psi / c;
          H[2][1] += -inv_psi / c;
          H[2][2] += inv_psi * b / (c * c);
          H[1][1] += 1.0 / (b * b);
          H[2][2] += 1.0 / (c * c);
          for (int r = 0; r < 3; ++r)
            for (int q = 0; q < 3; ++q)
              if (H[r][q] != 0.0)
                trips.emplace_back(cone.vars[r], cone.vars[q], H[r][q]);
          break;
        }
      }
    }
  }

  // Largest step alpha in [0, cap] keeping x + alpha*dx strictly interior.
  double max_step(const Eigen::VectorXd& x, const Eigen::VectorXd& dx,
                  double cap) const {
    double alpha = cap;
    for (const auto& cone : p.cones()) {
      switch (cone.kind) {
        case ConeKind::Nonnegative:
          for (int v : cone.vars)
            if (dx[v] < 0) alpha = std::min(alpha, -x[v] / dx[v]);
          break;
        case ConeKind::SecondOrder: {
          // (t+s*dt)^2 - ||u+s*du||^2 > 0, t+s*dt > 0
          const int t = cone.vars[0];
          if (dx[t] < 0) alpha = std::min(alpha, -x[t] / dx[t]);
          double A = dx[t] * dx[t], B = 2.0 * x[t] * dx[t],
                 C = x[t] * x[t];
          for (size_t k = 1; k < cone.vars.size(); ++k) {
            const int v = cone.vars[k];
            A -= dx[v] * dx[v];
            B -= 2.0 * x[v] * dx[v];
            C -= x[v] * x[v];
          }
          // smallest positive root of A s^2 + B s + C = 0 (C > 0 at s=0)
          double root = std::numeric_limits<double>::infinity();
          if (std::abs(A) < 1e-300) {
            if (B < 0) root = -C / B;
          } else {
            const double disc = B * B - 4 * A * C;
            if (disc >= 0) {
              const double sq = std::sqrt(disc);
              const double r1 = (-B - sq) / (2 * A), r2 = (-B + sq) / (2 * A);
              if (r1 > 0) root = std::min(root, r1);
              if (r2 > 0) root = std::min(root, r2);
            }
          }
          alpha = std::min(alpha, root);
          break;
        }
        case ConeKind::Exponential: {
          const int ia = cone.vars[0], ib = cone.vars[1], ic = cone.vars[2];
          if (dx[ib] < 0) alpha = std::min(alpha, -x[ib] / dx[ib]);
          if (dx[ic] < 0) alpha = std::min(alpha, -x[ic] / dx[ic]);
          // psi positivity is nonlinear: backtrack from the linear bound.
          // Any step below an interior one stays interior (segment from the
          // current interior point).
          double s = alpha;
          bool ok = false;
          for (int it = 0; it < 64; ++it) {
            const double a2 = x[ia] + s * dx[ia], b2 = x[ib] + s * dx[ib],
                         c2 = x[ic] + s * dx[ic];
            if (b2 > 0 && c2 > 0 && b2 * std::log(c2 / b2) - a2 > 0) {
              ok = true;
              break;
            }
            s *= 0.8;
          }
          alpha = std::min(alpha, ok ? s : 0.0);
          break;
        }
      }
    }
    return alpha;
  }
};

// Canonical strictly interior point: nonneg -> 1, SOC -> (1, 0..),
// exp -> (0, 1, 2), free -> 0.
Eigen::VectorXd default_interior(const ConeProgram& p) {
  Eigen::VectorXd x = Eigen::VectorXd::Zero(p.num_vars());
  for (const auto& cone : p.cones()) {
    switch (cone.kind) {
      case ConeKind::Nonnegative:
        for (int v : cone.vars) x[v] = 1.0;
        break;
      case ConeKind::SecondOrder:
        x[cone.vars[0]] = 1.0;
        for (size_t k = 1; k < cone.vars.size(); ++k) x[cone.vars[k]] = 0.0;
        break;
      case ConeKind::Exponential:
        x[cone.vars[0]] = 0.0;
        x[cone.vars[1]] = 1.0;
        x[cone.vars[2]] = 2.0;
        break;
    }
  }
  return x;
}

struct Kkt {
  // [[H + pI, A'], [A, -dI]] with fixed sparsity; symbolic factor reused.
  const ConeProgram& p;
  const Barrier& barrier;
  int n, m;
  Eigen::SparseMatrix<double> K;
  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> ldlt;
  bool analyzed = false;

  Kkt(const ConeProgram& prog, const Barrier& bar)
      : p(prog), barrier(bar), n(prog.num_vars()), m(prog.num_eqs()) {}

  bool factor(const Eigen::VectorXd& x) {
    std::vector<Eigen::Triplet<double>> trips;
    trips.reserve(p.a_triplets().size() * 2 + n * 4 + m);
    barrier.hessian(x, trips);
    for (int i = 0; i < n; ++i) trips.emplace_back(i, i, kPrimalReg);
    for (const auto& t : p.a_triplets()) {
      trips.emplace_back(n + t.row(), t.col(), t.value());
      trips.emplace_back(t.col(), n + t.row(), t.value());
    }
    for (int i = 0; i < m; ++i) trips.emplace_back(n + i, n + i, -kDualReg);
    K.resize(n + m, n + m);
    K.setFromTriplets(trips.begin(), trips.end());
    if (!analyzed) {
      ldlt.analyzePattern(K);
      analyzed = true;
    }
    ldlt.factorize(K);
    return ldlt.info() == Eigen::Success;
  }

  // Solves the unregularized system via the regularized factor plus
  // iterative refinement against the true KKT operator.
  Eigen::VectorXd solve(const Eigen::VectorXd& rhs,
                        const Eigen::SparseMatrix<double>& A,
                        const Eigen::VectorXd& x) const {
    Eigen::VectorXd sol = ldlt.solve(rhs);
    for (int pass = 0; pass < 2; ++pass) {
      Eigen::VectorXd resid = rhs - apply_exact(sol, A, x);
      sol += ldlt.solve(resid);
    }
    return sol;
  }

  Eigen::VectorXd apply_exact(const Eigen::VectorXd& v,
                              const Eigen::SparseMatrix<double>& A,
                              const Eigen::VectorXd& x) const {
    // [[H, A'],[A, 0]] * v: K holds the full symmetric pattern, so undo the
    // regularization terms only.
    Eigen::VectorXd out = K * v;
    out.head(n) -= kPrimalReg * v.head(n);
    out.tail(m) += kDualReg * v.tail(m);
    return out;
  }
};

struct Certificate {
  double pres, dres, gap, pobj, dobj;
};

Certificate certify(const ConeProgram& p, const Eigen::SparseMatrix<double>& A,
                    const Eigen::VectorXd& bvec, const Eigen::VectorXd& cvec,
                    const Eigen::VectorXd& x, const Eigen::VectorXd& nu,
                    const Eigen::VectorXd& g, double t) {
  Certificate cert{};
  const double bnorm = bvec.size() ? bvec.norm() : 0.0;
  const double cnorm = cvec.norm();
  Eigen::VectorXd rp = A * x - bvec;
  cert.pres = (rp.size() ? rp.norm() : 0.0) / (1.0 + bnorm);
  Eigen::VectorXd rd = t * cvec + g + A.transpose() * nu;
  cert.dres = rd.norm() / t / (1.0 + cnorm);
  cert.pobj = cvec.dot(x);
  const Eigen::VectorXd y = -nu / t;
  cert.dobj = bvec.size() ? bvec.dot(y) : 0.0;
  cert.gap = std::abs(cert.pobj - cert.dobj) /
             std::max({1.0, std::abs(cert.pobj), std::abs(cert.dobj)});
  return cert;
}

ConicSolution finish(const ConeProgram& p, const Eigen::VectorXd& x,
                     const Eigen::VectorXd& nu, const Eigen::VectorXd& g,
                     double t, const Certificate& cert, SolveStatus status,
                     int iters) {
  ConicSolution sol;
  sol.x = x;
  sol.y = -nu / t;
  sol.z = -g / t;
  sol.status = status;
  sol.pobj = cert.pobj + p.obj_offset;
  sol.dobj = cert.dobj + p.obj_offset;
  sol.primal_res = cert.pres;
  sol.dual_res = cert.dres;
  sol.rel_gap = cert.gap;
  sol.newton_iters = iters;
  return sol;
}

// Feasibility probe: min s  s.t.  A x - r = b, ||r|| <= s, x in K.
// Always strictly feasible and bounded; distinguishes Infeasible from
// numerical trouble when the main solve stalls.
bool original_is_feasible(const ConeProgram& p, const SolverOptions& opts,
                          double tol_abs) {
  ConeProgram q;
  const int n = p.num_vars(), m = p.num_eqs();
  for (int i = 0; i < n; ++i) q.new_var("x" + std::to_string(i));
  // clone cones through the public builder surface
  for (const auto& cone : p.cones()) {
    switch (cone.kind) {
      case ConeKind::Nonnegative:
        for (int v : cone.vars) q.mark_nonneg(v);
        break;
      case ConeKind::SecondOrder: {
        std::vector<LinExpr> coords;
        for (int v : cone.vars) coords.push_back(LinExpr::var(v));
        q.add_soc(coords);
        break;
      }
      case ConeKind::Exponential:
        q.add_exp(LinExpr::var(cone.vars[0]), LinExpr::var(cone.vars[1]),
                  LinExpr::var(cone.vars[2]));
        break;
    }
  }
  const int r0 = q.new_vars(m, "r");
  const int s = q.new_var("s");
  q.add_objective(s, 1.0);
  // rows: A x - r = b
  std::vector<LinExpr> rows(m);
  for (const auto& tr : p.a_triplets()) rows[tr.row()].add(tr.col(), tr.value());
  for (int i = 0; i < m; ++i) {
    rows[i].add(r0 + i, -1.0);
    rows[i] -= LinExpr(p.b()[i]);
    q.add_eq(rows[i]);
  }
  std::vector<LinExpr> soc{LinExpr::var(s)};
  for (int i = 0; i < m; ++i) soc.push_back(LinExpr::var(r0 + i));
  q.add_soc(soc);
  SolverOptions inner = opts;
  inner.allow_phase1 = false;
  inner.max_iters = std::max(200, opts.max_iters);
  ConicSolution sol = solve(q, inner, nullptr);
  if (sol.status != SolveStatus::Optimal) return true;  // inconclusive
  return sol.pobj <= tol_abs;
}

}  // namespace

const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Optimal: return "Optimal";
    case SolveStatus::Infeasible: return "Infeasible";
    case SolveStatus::Unbounded: return "Unbounded";
    case SolveStatus::MaxIter: return "MaxIter";
    case SolveStatus::NumericalFailure: return "NumericalFailure";
  }
  return "?";
}

ConicSolution solve(const ConeProgram& p, const SolverOptions& opts,
                    const ConicSolution* warm_start) {
  p.validate();
  const int n = p.num_vars(), m = p.num_eqs();
  const Eigen::SparseMatrix<double> A = p.a_matrix();
  const Eigen::VectorXd bvec = p.b_vector();
  const Eigen::VectorXd cvec = p.c_vector();
  const double nu_F = p.barrier_nu();
  Barrier barrier(p);
  Kkt kkt(p, barrier);

  Eigen::VectorXd x = default_interior(p);
  if (warm_start && warm_start->x.size() == n) {
    // Blending toward the canonical interior point keeps strict interiority.
    Eigen::VectorXd cand = 0.95 * warm_start->x + 0.05 * x;
    Eigen::VectorXd gtest(n);
    if (barrier.gradient(cand, gtest)) x = cand;
  }
  Eigen::VectorXd nu = Eigen::VectorXd::Zero(m);

  double t = 1.0;
  Eigen::VectorXd g(n);
  if (!barrier.gradient(x, g)) {
    ConicSolution sol;
    sol.status = SolveStatus::NumericalFailure;
    return sol;
  }

  Certificate best_cert{1e300, 1e300, 1e300, 0, 0};
  Eigen::VectorXd best_x = x, best_nu = nu, best_g = g;
  double best_t = t;
  double best_score = 1e300;
  int stall = 0;
  int iters = 0;

  auto current_best = [&](SolveStatus st) {
    return finish(p, best_x, best_nu, best_g, best_t, best_cert, st, iters);
  };

  const int max_outer = 64;
  for (int outer = 0; outer < max_outer; ++outer) {
    for (int inner = 0; inner < 100; ++inner) {
      Eigen::VectorXd rd = t * cvec + g + A.transpose() * nu;
      Eigen::VectorXd rp = A * x - bvec;
      const Certificate cert = certify(p, A, bvec, cvec, x, nu, g, t);
      const double score = std::max({cert.pres, cert.dres, cert.gap});
      if (score < best_score) {
        best_score = score;
        best_cert = cert;
        best_x = x;
        best_nu = nu;
        best_g = g;
        best_t = t;
        stall = 0;
      } else {
        ++stall;
      }
      if (cert.pres <= opts.tol && cert.dres <= opts.tol &&
          cert.gap <= opts.tol &&
          p.max_cone_violation(x) <= opts.tol * (1.0 + x.cwiseAbs().maxCoeff()))
        return finish(p, x, nu, g, t, cert, SolveStatus::Optimal, iters);

      if (std::abs(cert.pobj) > kHuge * (1.0 + cvec.cwiseAbs().maxCoeff()) ||
          x.cwiseAbs().maxCoeff() > kHuge)
        return current_best(SolveStatus::Unbounded);

      if (stall >= opts.stall_limit) {
        if (best_score <= opts.accept_tol)
          return current_best(SolveStatus::Optimal);
        if (opts.allow_phase1 && best_cert.pres > opts.accept_tol) {
          const bool feas = original_is_feasible(
              p, opts, opts.accept_tol * (1.0 + bvec.norm()) * 10);
          return current_best(feas ? SolveStatus::NumericalFailure
                                   : SolveStatus::Infeasible);
        }
        return current_best(SolveStatus::NumericalFailure);
      }
      if (iters >= opts.max_iters) {
        if (best_score <= opts.accept_tol)
          return current_best(SolveStatus::Optimal);
        return current_best(SolveStatus::MaxIter);
      }

      // Stage exit: residuals comfortably below the gap floor at this t.
      const double gap_floor =
          (nu_F / t) / std::max(1.0, std::abs(cert.pobj));
      const double stage_tol =
          std::max(0.05 * opts.tol, std::min(0.02, 0.1 * gap_floor));
      const double rel_center =
          std::max(cert.dres, cert.pres);
      if (rel_center <= stage_tol) break;

      if (!kkt.factor(x)) return current_best(SolveStatus::NumericalFailure);
      Eigen::VectorXd rhs(n + m);
      rhs.head(n) = -rd;
      rhs.tail(m) = -rp;
      const Eigen::VectorXd step = kkt.solve(rhs, A, x);
      if (!step.allFinite()) return current_best(SolveStatus::NumericalFailure);
      const Eigen::VectorXd dx = step.head(n);
      const Eigen::VectorXd dnu = step.tail(m);

      double alpha = 0.99 * barrier.max_step(x, dx, 1.0 / 0.99);
      alpha = std::min(alpha, 1.0);
      const double r0 = std::hypot(rd.norm(), rp.norm());
      Eigen::VectorXd xn(n), gn(n);
      bool moved = false;
      for (int bt = 0; bt < 60 && alpha > 1e-13; ++bt) {
        xn = x + alpha * dx;
        if (barrier.gradient(xn, gn)) {
          const Eigen::VectorXd nun = nu + alpha * dnu;
          const Eigen::VectorXd rdn = t * cvec + gn + A.transpose() * nun;
          const Eigen::VectorXd rpn = A * xn - bvec;
          if (std::hypot(rdn.norm(), rpn.norm()) <=
              (1.0 - 0.01 * alpha) * r0) {
            x = xn;
            nu = nun;
            g = gn;
            moved = true;
            break;
          }
        }
        alpha *= 0.5;
      }
      ++iters;
      if (!moved) ++stall;
    }
    t *= opts.mu;
    if (t > 1e18) {
      if (best_score <= opts.accept_tol)
        return current_best(SolveStatus::Optimal);
      return current_best(SolveStatus::NumericalFailure);
    }
  }
  if (best_score <= opts.accept_tol) return current_best(SolveStatus::Optimal);
  return current_best(SolveStatus::MaxIter);
}

}  // namespace mgmc
