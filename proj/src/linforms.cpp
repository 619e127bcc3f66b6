#include "ffda/linforms.hpp"

#include <algorithm>
#include <numeric>

namespace ffda {

namespace {

const FieldConfig& instance_field(const GammaInstance& inst) {
  if (inst.rows.empty() || inst.rows[0].empty())
    throw DomainError("empty instance");
  return inst.rows[0][0].field();
}

void validate_instance(const GammaInstance& inst) {
  int n = inst.n();
  int m = inst.m();
  if (n == 0 || m == 0) throw DomainError("empty instance");
  if (static_cast<int>(inst.targets.size()) != n)
    throw DomainError("target count does not match row count");
  const auto& f = instance_field(inst);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(inst.rows[static_cast<std::size_t>(i)].size()) != m)
      throw DomainError("ragged instance matrix");
    for (int j = 0; j < m; ++j) {
      const auto& e = inst.rows[static_cast<std::size_t>(i)]
                               [static_cast<std::size_t>(j)];
      if (e.field() != f) throw DomainError("mixed fields in instance");
      int d = inst.deg_bounds[static_cast<std::size_t>(j)];
      if (d < 0) continue;
      int need = inst.targets[static_cast<std::size_t>(i)] + d;
      if (e.prec() < need)
        throw PrecisionError(
            "entry (" + std::to_string(i) + "," + std::to_string(j) +
            ") certified only to " + std::to_string(e.prec()) +
            " but the window needs " + std::to_string(need));
    }
  }
}

struct VarLayout {
  // Column order is (j asc, k asc): coefficient k of unknown j.
  std::vector<std::pair<int, int>> cols;
  std::vector<int> offset;  // offset[j] = first column of unknown j, -1 if pinned
};

VarLayout layout_vars(const GammaInstance& inst) {
  VarLayout lay;
  lay.offset.assign(static_cast<std::size_t>(inst.m()), -1);
  for (int j = 0; j < inst.m(); ++j) {
    int d = inst.deg_bounds[static_cast<std::size_t>(j)];
    if (d < 0) continue;
    lay.offset[static_cast<std::size_t>(j)] = static_cast<int>(lay.cols.size());
    for (int k = 0; k <= d; ++k) lay.cols.emplace_back(j, k);
  }
  return lay;
}

}  // namespace

std::optional<IntegralPoint> solve_gamma(const GammaInstance& inst) {
  validate_instance(inst);
  const auto& f = instance_field(inst);
  VarLayout lay = layout_vars(inst);
  int nv = static_cast<int>(lay.cols.size());
  if (nv == 0) return std::nullopt;

  // Expand each valuation constraint into per-exponent linear equations.
  std::vector<std::vector<u32>> eqs;
  for (int i = 0; i < inst.n(); ++i) {
    const auto& row = inst.rows[static_cast<std::size_t>(i)];
    int r = inst.targets[static_cast<std::size_t>(i)];
    int e_min = r;
    for (int j = 0; j < inst.m(); ++j) {
      int d = inst.deg_bounds[static_cast<std::size_t>(j)];
      if (d < 0) continue;
      e_min = std::min(e_min,
                       row[static_cast<std::size_t>(j)].val_lower_bound() - d);
    }
    for (int e = e_min; e < r; ++e) {
      std::vector<u32> eq(static_cast<std::size_t>(nv), 0);
      bool nonzero = false;
      for (int c = 0; c < nv; ++c) {
        auto [j, k] = lay.cols[static_cast<std::size_t>(c)];
        const auto& th = row[static_cast<std::size_t>(j)];
        if (e + k >= th.prec()) continue;  // certified zero there
        u32 v = th.coeff(e + k);
        eq[static_cast<std::size_t>(c)] = v;
        nonzero = nonzero || v != 0;
      }
      if (nonzero) eqs.push_back(std::move(eq));
    }
  }

  // Reduced row echelon form with fixed pivot order.
  int rows = static_cast<int>(eqs.size());
  std::vector<int> pivot_col;
  int rank = 0;
  for (int c = 0; c < nv && rank < rows; ++c) {
    int sel = -1;
    for (int i = rank; i < rows; ++i) {
      if (eqs[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] != 0) {
        sel = i;
        break;
      }
    }
    if (sel < 0) continue;
    std::swap(eqs[static_cast<std::size_t>(rank)],
              eqs[static_cast<std::size_t>(sel)]);
    auto& pr = eqs[static_cast<std::size_t>(rank)];
    u32 s = f.inv(pr[static_cast<std::size_t>(c)]);
    for (auto& x : pr) x = f.mul(x, s);
    for (int i = 0; i < rows; ++i) {
      if (i == rank) continue;
      u32 factor = eqs[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
      if (factor == 0) continue;
      for (int cc = 0; cc < nv; ++cc) {
        auto& cell = eqs[static_cast<std::size_t>(i)][static_cast<std::size_t>(cc)];
        cell = f.sub(cell, f.mul(factor, pr[static_cast<std::size_t>(cc)]));
      }
    }
    pivot_col.push_back(c);
    ++rank;
  }

  // First free column carries the kernel vector (1, 0, 0, ...).
  std::vector<bool> is_pivot(static_cast<std::size_t>(nv), false);
  for (int c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;
  int free_col = -1;
  for (int c = 0; c < nv; ++c) {
    if (!is_pivot[static_cast<std::size_t>(c)]) {
      free_col = c;
      break;
    }
  }
  if (free_col < 0) return std::nullopt;

  std::vector<u32> assign(static_cast<std::size_t>(nv), 0);
  assign[static_cast<std::size_t>(free_col)] = 1;
  for (int t = 0; t < rank; ++t) {
    int pc = pivot_col[static_cast<std::size_t>(t)];
    u32 v = eqs[static_cast<std::size_t>(t)][static_cast<std::size_t>(free_col)];
    assign[static_cast<std::size_t>(pc)] = f.neg(v);
  }

  IntegralPoint point;
  for (int j = 0; j < inst.m(); ++j) {
    int d = inst.deg_bounds[static_cast<std::size_t>(j)];
    if (d < 0) {
      point.coords.push_back(Poly::zero(f));
      continue;
    }
    std::vector<u32> coeffs(static_cast<std::size_t>(d) + 1, 0);
    int off = lay.offset[static_cast<std::size_t>(j)];
    for (int k = 0; k <= d; ++k)
      coeffs[static_cast<std::size_t>(k)] =
          assign[static_cast<std::size_t>(off + k)];
    point.coords.emplace_back(f, std::move(coeffs));
  }
  if (point.is_zero())
    throw VerificationError("kernel vector reconstructed to zero");
  if (!verify_gamma(inst, point))
    throw VerificationError("solver output failed independent re-check");
  return point;
}

LaurentSeries laurent_dot(const std::vector<LaurentSeries>& row,
                          const IntegralPoint& x) {
  if (row.size() != x.coords.size()) throw DomainError("dimension mismatch");
  LaurentSeries acc = mul_poly(row[0], x.coords[0]);
  for (std::size_t j = 1; j < row.size(); ++j)
    acc = add(acc, mul_poly(row[j], x.coords[j]));
  return acc;
}

bool verify_gamma(const GammaInstance& inst, const IntegralPoint& x) {
  for (int j = 0; j < inst.m(); ++j) {
    const Poly& c = x.coords[static_cast<std::size_t>(j)];
    int d = inst.deg_bounds[static_cast<std::size_t>(j)];
    if (c.is_zero()) continue;
    if (d < 0 || c.degree() > d) return false;
  }
  for (int i = 0; i < inst.n(); ++i) {
    LaurentSeries v = laurent_dot(inst.rows[static_cast<std::size_t>(i)], x);
    if (!v.valuation().at_least(inst.targets[static_cast<std::size_t>(i)]))
      return false;
  }
  return true;
}

namespace {

int matrix_work_prec(const std::vector<std::vector<LaurentSeries>>& mat) {
  int n = static_cast<int>(mat.size());
  int maxprec = 0, spread = 0;
  for (const auto& row : mat)
    for (const auto& e : row) {
      maxprec = std::max(maxprec, e.prec());
      spread = std::max(spread, std::abs(e.val_lower_bound()));
    }
  return maxprec + 2 * (spread + 2) * (n + 1) + 8;
}

}  // namespace

LaurentSeries laurent_det(std::vector<std::vector<LaurentSeries>> mat) {
  int n = static_cast<int>(mat.size());
  if (n == 0) throw DomainError("determinant of empty matrix");
  for (const auto& r : mat)
    if (static_cast<int>(r.size()) != n) throw DomainError("non-square matrix");
  const auto& f = mat[0][0].field();
  LaurentSeries det = LaurentSeries::from_poly(Poly::constant(f, 1),
                                               matrix_work_prec(mat));
  for (int c = 0; c < n; ++c) {
    // Pivot on the largest certified entry to keep precision.
    int sel = -1;
    for (int i = c; i < n; ++i) {
      const auto& e = mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
      if (e.is_zero_to_prec()) continue;
      if (sel < 0 ||
          e.lead_exp() < mat[static_cast<std::size_t>(sel)]
                             [static_cast<std::size_t>(c)].lead_exp())
        sel = i;
    }
    if (sel < 0) {
      // Column vanishes to precision; so does the determinant.
      int bound = mat[static_cast<std::size_t>(c)][static_cast<std::size_t>(c)]
                      .prec();
      return LaurentSeries::zero_to(f, bound);
    }
    if (sel != c) {
      std::swap(mat[static_cast<std::size_t>(sel)], mat[static_cast<std::size_t>(c)]);
      det = scalar_mul(det, f.p() - 1);
    }
    const auto pivot = mat[static_cast<std::size_t>(c)][static_cast<std::size_t>(c)];
    det = mul(det, pivot);
    LaurentSeries pinv = inv(pivot);
    for (int i = c + 1; i < n; ++i) {
      auto& row = mat[static_cast<std::size_t>(i)];
      if (row[static_cast<std::size_t>(c)].is_zero_to_prec()) continue;
      LaurentSeries factor = mul(row[static_cast<std::size_t>(c)], pinv);
      for (int j = c; j < n; ++j)
        row[static_cast<std::size_t>(j)] =
            sub(row[static_cast<std::size_t>(j)],
                mul(factor, mat[static_cast<std::size_t>(c)]
                               [static_cast<std::size_t>(j)]));
    }
  }
  return det;
}

std::optional<std::vector<std::vector<LaurentSeries>>> laurent_inverse(
    const std::vector<std::vector<LaurentSeries>>& mat_in) {
  int n = static_cast<int>(mat_in.size());
  if (n == 0) throw DomainError("inverse of empty matrix");
  const auto& f = mat_in[0][0].field();
  int work = matrix_work_prec(mat_in);
  auto mat = mat_in;
  std::vector<std::vector<LaurentSeries>> aug(
      static_cast<std::size_t>(n),
      std::vector<LaurentSeries>(static_cast<std::size_t>(n),
                                 LaurentSeries::zero_to(f, work)));
  for (int i = 0; i < n; ++i)
    aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] =
        LaurentSeries::from_poly(Poly::constant(f, 1), work);

  for (int c = 0; c < n; ++c) {
    int sel = -1;
    for (int i = c; i < n; ++i) {
      const auto& e = mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
      if (e.is_zero_to_prec()) continue;
      if (sel < 0 ||
          e.lead_exp() < mat[static_cast<std::size_t>(sel)]
                             [static_cast<std::size_t>(c)].lead_exp())
        sel = i;
    }
    if (sel < 0) return std::nullopt;
    if (sel != c) {
      std::swap(mat[static_cast<std::size_t>(sel)], mat[static_cast<std::size_t>(c)]);
      std::swap(aug[static_cast<std::size_t>(sel)], aug[static_cast<std::size_t>(c)]);
    }
    LaurentSeries pinv = inv(mat[static_cast<std::size_t>(c)][static_cast<std::size_t>(c)]);
    for (int j = 0; j < n; ++j) {
      auto& mj = mat[static_cast<std::size_t>(c)][static_cast<std::size_t>(j)];
      mj = mul(mj, pinv);
      auto& aj = aug[static_cast<std::size_t>(c)][static_cast<std::size_t>(j)];
      aj = mul(aj, pinv);
    }
    for (int i = 0; i < n; ++i) {
      if (i == c) continue;
      const auto factor = mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
      if (factor.is_zero_to_prec()) continue;
      for (int j = 0; j < n; ++j) {
        mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            sub(mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                mul(factor, mat[static_cast<std::size_t>(c)][static_cast<std::size_t>(j)]));
        aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            sub(aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                mul(factor, aug[static_cast<std::size_t>(c)][static_cast<std::size_t>(j)]));
      }
    }
  }
  return aug;
}

namespace {

// Exact matrix entry embedded with at least the solver-required precision.
LaurentSeries exact_entry(const FieldConfig& f, const Poly& p, int need) {
  if (p.is_zero()) return LaurentSeries::zero_to(f, need);
  return LaurentSeries::from_poly(p, std::max(need, 1 - p.degree()));
}

// Auxiliary-unknown degree ceiling: how large the nearest-polynomial partner
// of a bounded combination sum_j theta_j x_j can get.
int aux_degree_bound(const std::vector<LaurentSeries>& thetas,
                     const std::vector<int>& bounds) {
  int d = 0;
  for (std::size_t j = 0; j < thetas.size(); ++j)
    d = std::max(d, bounds[j] - thetas[j].val_lower_bound());
  return std::max(0, d);
}

// Solves the assembled instance, keeps the leading principal_count unknowns,
// and re-verifies per-form norm floors and per-variable degree caps with
// independent series arithmetic.
ApproxSolution finish_solution(
    const GammaInstance& inst, int principal_count,
    const std::vector<std::vector<LaurentSeries>>& forms,
    const std::vector<int>& norm_exps, const std::vector<int>& caps,
    int reported_norm_exp, int reported_cap) {
  auto sol = solve_gamma(inst);
  if (!sol)
    throw VerificationError("guaranteed instance reported unsolvable");
  ApproxSolution out;
  out.x.coords.assign(sol->coords.begin(),
                      sol->coords.begin() + principal_count);
  if (out.x.is_zero())
    throw VerificationError("principal unknowns vanished in a solution");
  out.norm_exp = reported_norm_exp;
  out.degree_cap = reported_cap;
  for (std::size_t i = 0; i < forms.size(); ++i) {
    LaurentSeries v = laurent_dot(forms[i], out.x);
    QExponent norm = frac_norm(v);
    out.achieved.push_back(norm);
    out.achieved_prec.push_back(v.prec());
    if (!norm.is_zero() && norm.exponent() < norm_exps[i])
      throw VerificationError("solution missed the promised norm bound");
  }
  for (std::size_t j = 0; j < out.x.coords.size(); ++j) {
    const Poly& c = out.x.coords[j];
    if (!c.is_zero() && c.degree() > caps[j])
      throw VerificationError("solution missed the promised size bound");
  }
  return out;
}

}  // namespace

ApproxSolution dirichlet_single(const LaurentSeries& theta, int h) {
  if (h < 1) throw DomainError("needs h >= 1");
  if (theta.prec() < 2 * h)
    throw PrecisionError("needs theta precision >= " + std::to_string(2 * h) +
                         ", have " + std::to_string(theta.prec()));
  const auto& f = theta.field();
  const Poly one = Poly::constant(f, 1);
  const Poly zero = Poly::zero(f);
  int dy = aux_degree_bound({theta}, {h - 1});
  GammaInstance inst;
  inst.deg_bounds = {h - 1, dy};
  inst.rows = {{theta, exact_entry(f, one, h + dy)},
               {exact_entry(f, one, (-h + 1) + (h - 1)),
                exact_entry(f, zero, (-h + 1) + dy)}};
  inst.targets = {h, -h + 1};
  return finish_solution(inst, 1, {{theta}}, {h}, {h - 1}, h, h - 1);
}

ApproxSolution dirichlet_simultaneous(const std::vector<LaurentSeries>& thetas,
                                      int h) {
  int n = static_cast<int>(thetas.size());
  if (n == 0) throw DomainError("needs at least one target");
  if (h < 0) throw DomainError("needs h >= 0");
  int R = h / n + 1;
  const auto& f = thetas[0].field();
  const Poly one = Poly::constant(f, 1);
  const Poly zero = Poly::zero(f);
  for (const auto& th : thetas)
    if (th.prec() < R + h)
      throw PrecisionError("needs theta precision >= " + std::to_string(R + h));

  // Unknowns: x, then one auxiliary per form.
  std::vector<int> dy(static_cast<std::size_t>(n));
  GammaInstance inst;
  inst.deg_bounds.push_back(h);
  for (int i = 0; i < n; ++i) {
    dy[static_cast<std::size_t>(i)] =
        aux_degree_bound({thetas[static_cast<std::size_t>(i)]}, {h});
    inst.deg_bounds.push_back(dy[static_cast<std::size_t>(i)]);
  }
  for (int i = 0; i < n; ++i) {
    std::vector<LaurentSeries> row;
    row.push_back(thetas[static_cast<std::size_t>(i)]);
    for (int k = 0; k < n; ++k)
      row.push_back(exact_entry(f, k == i ? one : zero,
                                R + dy[static_cast<std::size_t>(k)]));
    inst.rows.push_back(std::move(row));
    inst.targets.push_back(R);
  }
  {
    std::vector<LaurentSeries> row;
    row.push_back(exact_entry(f, one, -h + h));
    for (int k = 0; k < n; ++k)
      row.push_back(exact_entry(f, zero, -h + dy[static_cast<std::size_t>(k)]));
    inst.rows.push_back(std::move(row));
    inst.targets.push_back(-h);
  }
  std::vector<std::vector<LaurentSeries>> forms;
  std::vector<int> norm_exps(static_cast<std::size_t>(n), R);
  for (const auto& th : thetas) forms.push_back({th});
  return finish_solution(inst, 1, forms, norm_exps, {h}, R, h);
}

ApproxSolution transpose_form(const std::vector<LaurentSeries>& thetas, int h) {
  int n = static_cast<int>(thetas.size());
  if (n == 0) throw DomainError("needs at least one target");
  if (h < 0) throw DomainError("needs h >= 0");
  int R = n * (h + 1);
  const auto& f = thetas[0].field();
  const Poly one = Poly::constant(f, 1);
  const Poly zero = Poly::zero(f);
  for (const auto& th : thetas)
    if (th.prec() < R + h)
      throw PrecisionError("needs theta precision >= " + std::to_string(R + h));

  std::vector<int> bounds(static_cast<std::size_t>(n), h);
  int dy = aux_degree_bound(thetas, bounds);
  GammaInstance inst;
  inst.deg_bounds = bounds;
  inst.deg_bounds.push_back(dy);
  {
    std::vector<LaurentSeries> row = thetas;
    row.push_back(exact_entry(f, one, R + dy));
    inst.rows.push_back(std::move(row));
    inst.targets.push_back(R);
  }
  for (int j = 0; j < n; ++j) {
    std::vector<LaurentSeries> row;
    for (int k = 0; k < n; ++k)
      row.push_back(exact_entry(f, k == j ? one : zero, -h + h));
    row.push_back(exact_entry(f, zero, -h + dy));
    inst.rows.push_back(std::move(row));
    inst.targets.push_back(-h);
  }
  std::vector<int> caps(static_cast<std::size_t>(n), h);
  return finish_solution(inst, n, {thetas}, {R}, caps, R, h);
}

ApproxSolution general_linear_forms(
    const std::vector<std::vector<LaurentSeries>>& theta, int h) {
  int n = static_cast<int>(theta.size());
  if (n == 0) throw DomainError("needs at least one form");
  int m = static_cast<int>(theta[0].size());
  if (m == 0) throw DomainError("needs at least one unknown");
  if (h < 0) throw DomainError("needs h >= 0");
  int R = (m * h + m - 1) / n + 1;
  const auto& f = theta[0][0].field();
  const Poly one = Poly::constant(f, 1);
  const Poly zero = Poly::zero(f);
  for (const auto& row : theta)
    for (const auto& e : row)
      if (e.prec() < R + h)
        throw PrecisionError("needs entry precision >= " + std::to_string(R + h));

  std::vector<int> bounds(static_cast<std::size_t>(m), h);
  std::vector<int> dy(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    dy[static_cast<std::size_t>(i)] =
        aux_degree_bound(theta[static_cast<std::size_t>(i)], bounds);

  GammaInstance inst;
  inst.deg_bounds = bounds;
  for (int i = 0; i < n; ++i)
    inst.deg_bounds.push_back(dy[static_cast<std::size_t>(i)]);
  for (int i = 0; i < n; ++i) {
    std::vector<LaurentSeries> row = theta[static_cast<std::size_t>(i)];
    for (int k = 0; k < n; ++k)
      row.push_back(exact_entry(f, k == i ? one : zero,
                                R + dy[static_cast<std::size_t>(k)]));
    inst.rows.push_back(std::move(row));
    inst.targets.push_back(R);
  }
  for (int j = 0; j < m; ++j) {
    std::vector<LaurentSeries> row;
    for (int k = 0; k < m; ++k)
      row.push_back(exact_entry(f, k == j ? one : zero, -h + h));
    for (int k = 0; k < n; ++k)
      row.push_back(exact_entry(f, zero, -h + dy[static_cast<std::size_t>(k)]));
    inst.rows.push_back(std::move(row));
    inst.targets.push_back(-h);
  }
  std::vector<int> norm_exps(static_cast<std::size_t>(n), R);
  std::vector<int> caps(static_cast<std::size_t>(m), h);
  return finish_solution(inst, m, theta, norm_exps, caps, R, h);
}

ApproxSolution flexible_bounds(
    const std::vector<std::vector<LaurentSeries>>& theta,
    const std::vector<int>& t, const std::vector<int>& delta) {
  int n = static_cast<int>(theta.size());
  if (n == 0) throw DomainError("needs at least one form");
  int m = static_cast<int>(theta[0].size());
  if (static_cast<int>(t.size()) != n + m)
    throw DomainError("budget vector must have n + m entries");
  if (static_cast<int>(delta.size()) != n)
    throw DomainError("slack vector must have n entries");
  long lhs = 0, rhs = 0, slack = 0;
  for (int i = 0; i < n; ++i) {
    if (t[static_cast<std::size_t>(i)] < 0 ||
        delta[static_cast<std::size_t>(i)] < 0)
      throw DomainError("budgets and slacks must be nonnegative");
    lhs += t[static_cast<std::size_t>(i)];
    slack += delta[static_cast<std::size_t>(i)];
  }
  for (int j = 0; j < m; ++j) {
    if (t[static_cast<std::size_t>(n + j)] < 0)
      throw DomainError("budgets must be nonnegative");
    rhs += t[static_cast<std::size_t>(n + j)];
  }
  if (lhs != rhs)
    throw DomainError("budget balance violated: form budgets sum to " +
                      std::to_string(lhs) + ", size budgets to " +
                      std::to_string(rhs));
  if (slack > m - 1) throw DomainError("slack sum exceeds m - 1");

  const auto& f = theta[0][0].field();
  const Poly one = Poly::constant(f, 1);
  const Poly zero = Poly::zero(f);
  std::vector<int> bounds(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j)
    bounds[static_cast<std::size_t>(j)] = t[static_cast<std::size_t>(n + j)];
  std::vector<int> targets(static_cast<std::size_t>(n));
  std::vector<int> dy(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    targets[static_cast<std::size_t>(i)] =
        1 + t[static_cast<std::size_t>(i)] + delta[static_cast<std::size_t>(i)];
    dy[static_cast<std::size_t>(i)] =
        aux_degree_bound(theta[static_cast<std::size_t>(i)], bounds);
    for (int j = 0; j < m; ++j) {
      int need = targets[static_cast<std::size_t>(i)] +
                 bounds[static_cast<std::size_t>(j)];
      if (theta[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
              .prec() < need)
        throw PrecisionError("needs entry precision >= " +
                             std::to_string(need));
    }
  }

  GammaInstance inst;
  inst.deg_bounds = bounds;
  for (int i = 0; i < n; ++i)
    inst.deg_bounds.push_back(dy[static_cast<std::size_t>(i)]);
  for (int i = 0; i < n; ++i) {
    int R = targets[static_cast<std::size_t>(i)];
    std::vector<LaurentSeries> row = theta[static_cast<std::size_t>(i)];
    for (int k = 0; k < n; ++k)
      row.push_back(exact_entry(f, k == i ? one : zero,
                                R + dy[static_cast<std::size_t>(k)]));
    inst.rows.push_back(std::move(row));
    inst.targets.push_back(R);
  }
  for (int j = 0; j < m; ++j) {
    int r = -bounds[static_cast<std::size_t>(j)];
    std::vector<LaurentSeries> row;
    for (int k = 0; k < m; ++k)
      row.push_back(exact_entry(f, k == j ? one : zero,
                                r + bounds[static_cast<std::size_t>(k)]));
    for (int k = 0; k < n; ++k)
      row.push_back(exact_entry(f, zero, r + dy[static_cast<std::size_t>(k)]));
    inst.rows.push_back(std::move(row));
    inst.targets.push_back(r);
  }
  return finish_solution(inst, m, theta, targets, bounds, targets[0],
                         *std::max_element(bounds.begin(), bounds.end()));
}

}  // namespace ffda
