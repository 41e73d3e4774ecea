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

#ifndef MGMC_LINEXPR_HPP_
#define MGMC_LINEXPR_HPP_

#include <utility>
#include <vector>

#include <Eigen/Core>

namespace mgmc {

/// Sparse affine expression over solver variables:
/// sum_k coeff_k * x[var_k] + constant. Terms may repeat; they are
/// accumulated when the expression is evaluated or assembled into rows.
struct LinExpr {
  std::vector<std::pair<int, double>> terms;
  double constant = 0.0;

  LinExpr() = default;
  LinExpr(double c) : constant(c) {}  // NOLINT: implicit by design

  static LinExpr var(int index, double coeff = 1.0) {
    LinExpr e;
    e.terms.emplace_back(index, coeff);
    return e;
  }

  LinExpr& add(int index, double coeff) {
    terms.emplace_back(index, coeff);
    return *this;
  }

  LinExpr& operator+=(const LinExpr& o) {
    terms.insert(terms.end(), o.terms.begin(), o.terms.end());
    constant += o.constant;
    return *this;
  }
  LinExpr& operator-=(const LinExpr& o) {
    for (const auto& [v, c] : o.terms) terms.emplace_back(v, -c);
    constant -= o.constant;
    return *this;
  }
  LinExpr& operator*=(double s) {
    for (auto& [v, c] : terms) c *= s;
    constant *= s;
    return *this;
  }

  double eval(const Eigen::VectorXd& x) const {
    double v = constant;
    for (const auto& [i, c] : terms) v += c * x[i];
    return v;
  }

  /// True when the expression is exactly one variable with coefficient 1.
  bool is_bare_var() const {
    return terms.size() == 1 && terms[0].second == 1.0 && constant == 0.0;
  }

  friend LinExpr operator+(LinExpr a, const LinExpr& b) { a += b; return a; }
  friend LinExpr operator-(LinExpr a, const LinExpr& b) { a -= b; return a; }
  friend LinExpr operator*(double s, LinExpr e) { e *= s; return e; }
  friend LinExpr operator*(LinExpr e, double s) { e *= s; return e; }
  friend LinExpr operator-(LinExpr e) { e *= -1.0; return e; }
};

}  // namespace mgmc

#endif  // MGMC_LINEXPR_HPP_
