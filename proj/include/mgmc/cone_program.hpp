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

#ifndef MGMC_CONE_PROGRAM_HPP_
#define MGMC_CONE_PROGRAM_HPP_

#include <string>
#include <variant>
#include <vector>

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include "mgmc/linexpr.hpp"

namespace mgmc {

enum class ConeKind { Nonnegative, SecondOrder, Exponential };

/// One cone-membership entry over a set of variable indices.
///   Nonnegative: every listed variable >= 0.
///   SecondOrder: vars = [t, u_1..u_d], ||u|| <= t.
///   Exponential: vars = [a, b, c], b*exp(a/b) <= c with b > 0 (closed cone,
///   boundary b -> 0 included: a <= 0, c >= 0).
struct Cone {
  ConeKind kind;
  std::vector<int> vars;
};

/// How an auxiliary variable is derived from earlier variables. Used to
/// extend a point over the model variables to the full solver vector.
struct AffineDef { LinExpr expr; };
struct QuadOverLinDef { std::vector<LinExpr> num; LinExpr den; };  // |num|^2/den
struct LogDef { LinExpr arg; };                                    // ln(arg)
struct ExpDef { LinExpr arg; };                                    // exp(arg)
using VarDef =
    std::variant<std::monostate, AffineDef, QuadOverLinDef, LogDef, ExpDef>;

/// Standard-form convex cone program
///   minimize    c'x + obj_offset
///   subject to  A x = b,  cone memberships over disjoint variable slices.
///
/// Built incrementally. Affine expressions placed inside cones are
/// materialized as auxiliary variables bound by equality rows, except for
/// bare unoccupied variables which are indexed directly.
class ConeProgram {
 public:
  int new_var(std::string name);
  int new_vars(int count, const std::string& prefix);
  /// Variable whose value is derived from earlier ones when embedding.
  int new_var_defined(std::string name, VarDef def);

  void add_objective(int var, double coeff);
  void add_objective(const LinExpr& e);  // constant folds into obj_offset
  void add_offset(double v) { obj_offset += v; }

  /// Equality row: e == 0.
  void add_eq(const LinExpr& e);
  /// Inequality e <= 0 via a nonnegative slack; returns the slack index.
  int add_leq0(const LinExpr& e, const std::string& name = "slk");
  /// Pins a variable to a constant.
  void fix_var(int var, double value);

  /// Places an existing variable in the nonnegative cone.
  void mark_nonneg(int var);
  /// ||coords[1..]|| <= coords[0]; materializes non-bare coordinates.
  void add_soc(const std::vector<LinExpr>& coords,
               const std::string& name = "soc");
  /// b*exp(a/b) <= c; materializes non-bare coordinates.
  void add_exp(const LinExpr& a, const LinExpr& b, const LinExpr& c,
               const std::string& name = "exp");

  /// Epigraph s >= |num|^2/den (den constrained positive elsewhere);
  /// creates s, lowers via the rotated-SOC rows, and returns s.
  int epigraph_quad_over_lin(const std::vector<LinExpr>& num,
                             const LinExpr& den,
                             const std::string& name = "epi");

  int num_vars() const { return static_cast<int>(names_.size()); }
  int num_eqs() const { return static_cast<int>(b_.size()); }
  const std::vector<double>& c() const { return c_; }
  double obj_offset = 0.0;
  const std::vector<Eigen::Triplet<double>>& a_triplets() const { return a_; }
  const std::vector<double>& b() const { return b_; }
  const std::vector<Cone>& cones() const { return cones_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<VarDef>& defs() const { return defs_; }
  bool var_in_cone(int v) const { return occupied_[v]; }

  Eigen::SparseMatrix<double> a_matrix() const;
  Eigen::VectorXd b_vector() const;
  Eigen::VectorXd c_vector() const;

  /// Sum of barrier parameters over all cones.
  double barrier_nu() const;

  /// Throws std::invalid_argument when dimensions or cone slices are
  /// inconsistent or when the program is empty.
  void validate() const;

  /// Extends values given for the underived (model) variables to the full
  /// vector by evaluating auxiliary definitions in creation order. Entries
  /// of `core` are (var index, value); every variable without a definition
  /// must be covered.
  Eigen::VectorXd embed(
      const std::vector<std::pair<int, double>>& core) const;

  /// Largest cone-membership violation of x (0 when x is inside every cone).
  double max_cone_violation(const Eigen::VectorXd& x) const;
  /// Largest |(Ax - b)_i|.
  double max_eq_residual(const Eigen::VectorXd& x) const;

  /// Debug dump: objective, A/b triplets, cone list, names.
  std::string debug_dump() const;

 private:
  // Returns a variable index whose value equals e: the variable itself for a
  // bare unoccupied variable, otherwise a fresh defined auxiliary.
  int coord_for(const LinExpr& e, const std::string& name);

  std::vector<std::string> names_;
  std::vector<double> c_;
  std::vector<Eigen::Triplet<double>> a_;
  std::vector<double> b_;
  std::vector<Cone> cones_;
  std::vector<VarDef> defs_;
  std::vector<bool> occupied_;
};

/// Appends the rotated-SOC rows encoding |num|^2 <= s*den:
/// SecondOrder(||[2*num; den - s]|| <= den + s).
void lower_quad_over_lin(ConeProgram& p, const std::vector<LinExpr>& num,
                         const LinExpr& den, int s);
void lower_quad_over_lin(ConeProgram& p, const LinExpr& num,
                         const LinExpr& den, int s);

/// Encodes ln(alpha) >= beta via Exponential(beta, 1, alpha).
void lower_log_lb(ConeProgram& p, int alpha, const LinExpr& beta);

}  // namespace mgmc

#endif  // MGMC_CONE_PROGRAM_HPP_
