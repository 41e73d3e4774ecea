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

#include "mgmc/cone_program.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace mgmc {

int ConeProgram::new_var(std::string name) {
  names_.push_back(std::move(name));
  c_.push_back(0.0);
  defs_.emplace_back();
  occupied_.push_back(false);
  return static_cast<int>(names_.size()) - 1;
}

int ConeProgram::new_vars(int count, const std::string& prefix) {
  const int base = num_vars();
  for (int k = 0; k < count; ++k) new_var(prefix + "[" + std::to_string(k) + "]");
  return base;
}

int ConeProgram::new_var_defined(std::string name, VarDef def) {
  const int v = new_var(std::move(name));
  defs_[v] = std::move(def);
  return v;
}

void ConeProgram::add_objective(int var, double coeff) { c_[var] += coeff; }

void ConeProgram::add_objective(const LinExpr& e) {
  for (const auto& [v, c] : e.terms) c_[v] += c;
  obj_offset += e.constant;
}

void ConeProgram::add_eq(const LinExpr& e) {
  const int row = num_eqs();
  for (const auto& [v, c] : e.terms)
    if (c != 0.0) a_.emplace_back(row, v, c);
  b_.push_back(-e.constant);
}

int ConeProgram::add_leq0(const LinExpr& e, const std::string& name) {
  const int s = new_var(name);
  defs_[s] = AffineDef{-e};
  mark_nonneg(s);
  LinExpr row = e;
  row.add(s, 1.0);
  add_eq(row);
  return s;
}

void ConeProgram::fix_var(int var, double value) {
  add_eq(LinExpr::var(var) - LinExpr(value));
}

void ConeProgram::mark_nonneg(int var) {
  if (occupied_[var])
    throw std::invalid_argument("variable " + names_[var] +
                                " already belongs to a cone");
  occupied_[var] = true;
  cones_.push_back(Cone{ConeKind::Nonnegative, {var}});
}

int ConeProgram::coord_for(const LinExpr& e, const std::string& name) {
  if (e.is_bare_var() && !occupied_[e.terms[0].first]) {
    occupied_[e.terms[0].first] = true;
    return e.terms[0].first;
  }
  const int v = new_var(name);
  defs_[v] = AffineDef{e};
  occupied_[v] = true;
  add_eq(e - LinExpr::var(v));
  return v;
}

void ConeProgram::add_soc(const std::vector<LinExpr>& coords,
                          const std::string& name) {
  if (coords.size() < 2)
    throw std::invalid_argument("second-order cone needs at least 2 coords");
  Cone cone{ConeKind::SecondOrder, {}};
  int k = 0;
  for (const auto& e : coords)
    cone.vars.push_back(coord_for(e, name + "." + std::to_string(k++)));
  cones_.push_back(std::move(cone));
}

void ConeProgram::add_exp(const LinExpr& a, const LinExpr& b, const LinExpr& c,
                          const std::string& name) {
  Cone cone{ConeKind::Exponential,
            {coord_for(a, name + ".a"), coord_for(b, name + ".b"),
             coord_for(c, name + ".c")}};
  cones_.push_back(std::move(cone));
}

int ConeProgram::epigraph_quad_over_lin(const std::vector<LinExpr>& num,
                                        const LinExpr& den,
                                        const std::string& name) {
  const int s = new_var(name);
  defs_[s] = QuadOverLinDef{num, den};
  lower_quad_over_lin(*this, num, den, s);
  return s;
}

Eigen::SparseMatrix<double> ConeProgram::a_matrix() const {
  Eigen::SparseMatrix<double> A(num_eqs(), num_vars());
  A.setFromTriplets(a_.begin(), a_.end());
  return A;
}

Eigen::VectorXd ConeProgram::b_vector() const {
  return Eigen::Map<const Eigen::VectorXd>(b_.data(), b_.size());
}

Eigen::VectorXd ConeProgram::c_vector() const {
  return Eigen::Map<const Eigen::VectorXd>(c_.data(), c_.size());
}

double ConeProgram::barrier_nu() const {
  double nu = 0.0;
  for (const auto& cone : cones_) {
    switch (cone.kind) {
      case ConeKind::Nonnegative: nu += static_cast<double>(cone.vars.size()); break;
      case ConeKind::SecondOrder: nu += 2.0; break;
      case ConeKind::Exponential: nu += 3.0; break;
    }
  }
  return nu;
}

void ConeProgram::validate() const {
  if (num_vars() == 0) throw std::invalid_argument("program has no variables");
  if (cones_.empty() && num_eqs() == 0)
    throw std::invalid_argument("program needs at least one cone or equality");
  std::vector<int> seen(num_vars(), 0);
  for (const auto& cone : cones_) {
    if (cone.kind == ConeKind::Exponential && cone.vars.size() != 3)
      throw std::invalid_argument("exponential cone must have 3 coords");
    if (cone.kind == ConeKind::SecondOrder && cone.vars.size() < 2)
      throw std::invalid_argument("second-order cone must have >= 2 coords");
    for (int v : cone.vars) {
      if (v < 0 || v >= num_vars())
        throw std::invalid_argument("cone index out of range");
      if (++seen[v] > 1)
        throw std::invalid_argument("variable " + names_[v] +
                                    " appears in two cones");
    }
  }
  for (const auto& t : a_)
    if (t.col() < 0 || t.col() >= num_vars() || t.row() < 0 ||
        t.row() >= num_eqs())
      throw std::invalid_argument("equality triplet out of range");
}

Eigen::VectorXd ConeProgram::embed(
    const std::vector<std::pair<int, double>>& core) const {
  Eigen::VectorXd x = Eigen::VectorXd::Zero(num_vars());
  std::vector<bool> set(num_vars(), false);
  for (const auto& [v, val] : core) {
    x[v] = val;
    set[v] = true;
  }
  for (int v = 0; v < num_vars(); ++v) {
    if (std::holds_alternative<std::monostate>(defs_[v])) {
      if (!set[v])
        throw std::invalid_argument("embed: no value for model variable " +
                                    names_[v]);
      continue;
    }
    if (const auto* d = std::get_if<AffineDef>(&defs_[v])) {
      x[v] = d->expr.eval(x);
    } else if (const auto* q = std::get_if<QuadOverLinDef>(&defs_[v])) {
      double s = 0.0;
      for (const auto& e : q->num) {
        const double u = e.eval(x);
        s += u * u;
      }
      const double den = q->den.eval(x);
      x[v] = den > 0 ? s / den : 0.0;
    } else if (const auto* l = std::get_if<LogDef>(&defs_[v])) {
      x[v] = std::log(std::max(l->arg.eval(x), 1e-300));
    } else if (const auto* e = std::get_if<ExpDef>(&defs_[v])) {
      x[v] = std::exp(e->arg.eval(x));
    }
  }
  return x;
}

double ConeProgram::max_cone_violation(const Eigen::VectorXd& x) const {
  double worst = 0.0;
  for (const auto& cone : cones_) {
    switch (cone.kind) {
      case ConeKind::Nonnegative:
        for (int v : cone.vars) worst = std::max(worst, -x[v]);
        break;
      case ConeKind::SecondOrder: {
        double nrm = 0.0;
        for (size_t k = 1; k < cone.vars.size(); ++k)
          nrm += x[cone.vars[k]] * x[cone.vars[k]];
        worst = std::max(worst, std::sqrt(nrm) - x[cone.vars[0]]);
        break;
      }
      case ConeKind::Exponential: {
        const double a = x[cone.vars[0]], b = x[cone.vars[1]],
                     c = x[cone.vars[2]];
        if (b > 1e-14) {
          worst = std::max(worst, b * std::exp(a / b) - c);
          worst = std::max(worst, -b);
        } else {
          // closed-cone boundary: b -> 0 requires a <= 0, c >= 0
          worst = std::max({worst, -b, a, -c});
        }
        break;
      }
    }
  }
  return worst;
}

double ConeProgram::max_eq_residual(const Eigen::VectorXd& x) const {
  Eigen::VectorXd r = a_matrix() * x - b_vector();
  return r.size() ? r.cwiseAbs().maxCoeff() : 0.0;
}

std::string ConeProgram::debug_dump() const {
  std::ostringstream os;
  os << "{\n  \"n\": " << num_vars() << ",\n  \"m\": " << num_eqs()
     << ",\n  \"obj_offset\": " << obj_offset << ",\n  \"c\": [";
  for (int i = 0; i < num_vars(); ++i) os << (i ? "," : "") << c_[i];
  os << "],\n  \"A\": [";
  for (size_t k = 0; k < a_.size(); ++k)
    os << (k ? "," : "") << "[" << a_[k].row() << "," << a_[k].col() << ","
       << a_[k].value() << "]";
  os << "],\n  \"b\": [";
  for (int i = 0; i < num_eqs(); ++i) os << (i ? "," : "") << b_[i];
  os << "],\n  \"cones\": [";
  for (size_t k = 0; k < cones_.size(); ++k) {
    os << (k ? "," : "") << "{\"kind\": \"";
    switch (cones_[k].kind) {
      case ConeKind::Nonnegative: os << "nonneg"; break;
      case ConeKind::SecondOrder: os << "soc"; break;
      case ConeKind::Exponential: os << "exp"; break;
    }
    os << "\", \"vars\": [";
    for (size_t j = 0; j < cones_[k].vars.size(); ++j)
      os << (j ? "," : "") << cones_[k].vars[j];
    os << "]}";
  }
  os << "],\n  \"names\": [";
  for (int i = 0; i < num_vars(); ++i)
    os << (i ? "," : "") << "\"" << names_[i] << "\"";
  os << "]\n}\n";
  return os.str();
}

void lower_quad_over_lin(ConeProgram& p, const std::vector<LinExpr>& num,
                         const LinExpr& den, int s) {
  std::vector<LinExpr> coords;
  coords.reserve(num.size() + 2);
  coords.push_back(den + LinExpr::var(s));
  for (const auto& u : num) coords.push_back(2.0 * u);
  coords.push_back(den - LinExpr::var(s));
  p.add_soc(coords, "qol");
}

void lower_quad_over_lin(ConeProgram& p, const LinExpr& num,
                         const LinExpr& den, int s) {
  lower_quad_over_lin(p, std::vector<LinExpr>{num}, den, s);
}

void lower_log_lb(ConeProgram& p, int alpha, const LinExpr& beta) {
  p.add_exp(beta, LinExpr(1.0), LinExpr::var(alpha), "log");
}

}  // namespace mgmc
