// Copyright 2026 The Authors.
//
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

#include "subsec/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "subsec/errors.hpp"

namespace subsec {

namespace {
constexpr double kTol = 1e-9;
constexpr double kInf = std::numeric_limits<double>::infinity();
}  // namespace

PackingPolytope PackingPolytope::create(std::vector<std::vector<double>> a,
                                        std::vector<double> b, double scale,
                                        std::vector<int> support) {
  PackingPolytope p;
  if (a.size() != b.size()) {
    throw InputError("packing polytope: A and b dimension mismatch");
  }
  int n = -1;
  for (const auto& row : a) {
    if (n < 0) n = static_cast<int>(row.size());
    if (static_cast<int>(row.size()) != n) {
      throw InputError("packing polytope: ragged constraint matrix");
    }
    for (double v : row) {
      if (!(v >= 0.0)) {
        throw InputError("packing polytope: nonnegative coefficients required");
      }
    }
  }
  for (double v : b) {
    if (!(v > 0.0)) {
      throw InputError("packing polytope: positive capacities required");
    }
  }
  if (!(scale > 0.0 && scale <= 1.0)) {
    throw InputError("packing polytope: scale must lie in (0, 1]");
  }
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());
  if (n < 0) {
    n = support.empty() ? 0 : support.back() + 1;
  }
  if (!support.empty() && (support.front() < 0 || support.back() >= n)) {
    throw InputError("packing polytope: support index out of range");
  }
  p.a = std::move(a);
  p.b = std::move(b);
  p.scale = scale;
  p.support = std::move(support);
  p.n_hint = n;
  return p;
}

bool PackingPolytope::contains(const FractionalPoint& x, double tol) const {
  int n = num_items();
  if (x.size() != n) return false;
  std::vector<char> in_support(n, 0);
  for (int j : support) in_support[j] = 1;
  for (int j = 0; j < n; ++j) {
    if (x.x[j] < -tol || x.x[j] > 1.0 + tol) return false;
    if (!in_support[j] && std::abs(x.x[j]) > tol) return false;
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    double load = 0.0;
    for (int j = 0; j < n; ++j) load += a[i][j] * x.x[j];
    if (load > scale * b[i] + tol) return false;
  }
  return true;
}

FractionalPoint lp_maximize(const std::vector<double>& c,
                            const PackingPolytope& polytope) {
  int n = polytope.num_items();
  if (static_cast<int>(c.size()) != n) {
    throw InputError("lp_maximize: objective dimension mismatch");
  }
  int m = polytope.num_constraints();
  int ns = static_cast<int>(polytope.support.size());
  FractionalPoint out = FractionalPoint::zeros(n);
  if (ns == 0) return out;

  if (m == 0) {
    for (int j : polytope.support) {
      if (c[j] > kTol) out.x[j] = 1.0;
    }
    return out;
  }

  // Variables: 0..ns-1 structural in [0,1], ns..ns+m-1 slacks in [0,inf).
  int total = ns + m;
  std::vector<double> obj(total, 0.0);
  std::vector<double> upper(total, kInf);
  for (int j = 0; j < ns; ++j) {
    obj[j] = c[polytope.support[j]];
    upper[j] = 1.0;
  }
  std::vector<double> rhs(m);
  for (int i = 0; i < m; ++i) rhs[i] = polytope.scale * polytope.b[i];

  // Column-major copy of [A restricted to support | I].
  std::vector<double> cols(static_cast<std::size_t>(total) * m, 0.0);
  for (int v = 0; v < ns; ++v) {
    int j = polytope.support[v];
    for (int i = 0; i < m; ++i) {
      cols[static_cast<std::size_t>(v) * m + i] = polytope.a[i][j];
    }
  }
  for (int i = 0; i < m; ++i) {
    cols[static_cast<std::size_t>(ns + i) * m + i] = 1.0;
  }

  std::vector<int> basic(m);
  std::vector<char> is_basic(total, 0);
  std::vector<char> at_upper(total, 0);
  std::vector<double> xb = rhs;  // basic values; start with slack basis
  for (int i = 0; i < m; ++i) {
    basic[i] = ns + i;
    is_basic[ns + i] = 1;
  }
  std::vector<std::vector<double>> binv(m, std::vector<double>(m, 0.0));
  for (int i = 0; i < m; ++i) binv[i][i] = 1.0;

  std::vector<double> y(m), d(m), limit(m);
  for (;;) {
    // y = c_B B^-1
    for (int i = 0; i < m; ++i) {
      double acc = 0.0;
      for (int r = 0; r < m; ++r) acc += obj[basic[r]] * binv[r][i];
      y[i] = acc;
    }
    // Bland: smallest-index eligible entering variable.
    int enter = -1;
    int direction = 0;  // +1 from lower bound, -1 from upper bound
    for (int var = 0; var < total && enter < 0; ++var) {
      if (is_basic[var]) continue;
      const double* col = &cols[static_cast<std::size_t>(var) * m];
      double z = obj[var];
      for (int i = 0; i < m; ++i) z -= y[i] * col[i];
      if (!at_upper[var] && z > kTol) {
        enter = var;
        direction = 1;
      } else if (at_upper[var] && z < -kTol) {
        enter = var;
        direction = -1;
      }
    }
    if (enter < 0) break;  // optimal

    const double* enter_col = &cols[static_cast<std::size_t>(enter) * m];
    for (int i = 0; i < m; ++i) {
      double acc = 0.0;
      for (int r = 0; r < m; ++r) acc += binv[i][r] * enter_col[r];
      d[i] = acc;
    }

    // Ratio test: basic variables move as xb_i - direction * t * d_i.
    limit.assign(m, kInf);
    for (int i = 0; i < m; ++i) {
      double slope = direction * d[i];
      if (slope > kTol) {
        limit[i] = std::max(0.0, xb[i] / slope);
      } else if (slope < -kTol && upper[basic[i]] != kInf) {
        limit[i] = std::max(0.0, (upper[basic[i]] - xb[i]) / (-slope));
      }
    }
    double t_max = upper[enter];  // entering variable's own span
    for (int i = 0; i < m; ++i) t_max = std::min(t_max, limit[i]);
    if (t_max == kInf) {
      throw InputError("lp_maximize: unbounded program");
    }

    // Bland again: smallest variable index among the blockers, the entering
    // variable's own bound counting as index `enter`.
    int leave_row = -1;
    int leave_var = upper[enter] <= t_max + kTol ? enter : total;
    for (int i = 0; i < m; ++i) {
      if (limit[i] <= t_max + kTol && basic[i] < leave_var) {
        leave_var = basic[i];
        leave_row = i;
      }
    }

    if (leave_row < 0) {
      // Bound flip of the entering variable.
      for (int i = 0; i < m; ++i) xb[i] -= direction * t_max * d[i];
      at_upper[enter] = !at_upper[enter];
      continue;
    }
    t_max = std::max(0.0, limit[leave_row]);

    int leaving = basic[leave_row];
    double enter_value =
        (at_upper[enter] ? upper[enter] : 0.0) + direction * t_max;
    for (int i = 0; i < m; ++i) xb[i] -= direction * t_max * d[i];
    // Leaving variable settles on the bound it ran into.
    at_upper[leaving] = direction * d[leave_row] < 0.0;
    is_basic[leaving] = 0;
    is_basic[enter] = 1;
    basic[leave_row] = enter;
    xb[leave_row] = enter_value;

    double pivot = d[leave_row];
    for (int r = 0; r < m; ++r) binv[leave_row][r] /= pivot;
    for (int i = 0; i < m; ++i) {
      if (i == leave_row) continue;
      double factor = d[i];
      if (factor == 0.0) continue;
      for (int r = 0; r < m; ++r) binv[i][r] -= factor * binv[leave_row][r];
    }
  }

  for (int v = 0; v < ns; ++v) {
    double value = is_basic[v] ? 0.0 : (at_upper[v] ? 1.0 : 0.0);
    if (is_basic[v]) {
      for (int i = 0; i < m; ++i) {
        if (basic[i] == v) {
          value = xb[i];
          break;
        }
      }
    }
    out.x[polytope.support[v]] = std::clamp(value, 0.0, 1.0);
  }
  return out;
}

}  // namespace subsec
