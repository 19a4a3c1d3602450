#pragma once

#include <gwnb/mobius.hpp>
#include <gwnb/pgf.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace gwnb {

struct SolverOptions {
  double tol = 1e-14;
  std::uint64_t max_iter = 1'000'000;
  double stall = 1e-16;  // scaled step size below which we call it converged
};

struct ExtinctionResult {
  double value = 0.0;
  std::uint64_t iterations = 0;
  bool supercritical = true;
};

// smallest fixed point of phi_NB via iteration from 0; for this family the
// process is always supercritical and the limit is zeta^r, but the solver
// only assumes a pgf
inline ExtinctionResult extinction_probability(const ParamsD& p, const SolverOptions& opt = {}) {
  ExtinctionResult res;
  res.supercritical = supercritical(p);
  if (!res.supercritical) {
    res.value = 1.0;  // subcritical/critical: extinction is certain
    return res;
  }
  double x = 0.0;
  for (std::uint64_t i = 1; i <= opt.max_iter; ++i) {
    const double next = phi_nb(p, x);
    const double step = std::abs(next - x);
    x = next;
    res.iterations = i;
    if (step < opt.tol || step < opt.stall * std::max(1.0, std::abs(x))) {
      res.value = x;
      return res;
    }
  }
  throw std::runtime_error("extinction_probability: no convergence within iteration cap");
}

// independent cross-check: bisect phi(x) - x on [0, 1); the sign flips at the
// smallest fixed point because phi(0) > 0 and phi(x) < x just below 1 in the
// supercritical case
inline double extinction_probability_bisect(const ParamsD& p, int steps = 200) {
  double lo = 0.0, hi = 1.0 - 1e-12;
  if (phi_nb(p, hi) - hi >= 0.0) return 1.0;
  for (int i = 0; i < steps; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (phi_nb(p, mid) - mid > 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

// ---- inequality scan ---------------------------------------------------------

enum class PointClass { strict, equality, violation };

template <class S>
struct GridRow {
  S x, nb, fl, gap;
  PointClass cls = PointClass::strict;
};

template <class S>
struct GridReport {
  Params<S> params{2, S(0)};
  std::size_t grid_points = 0;
  std::vector<GridRow<S>> rows;
  std::vector<S> equality_xs;       // where |gap| fell inside the equality tolerance
  std::size_t violations = 0;       // gap below -tolerance (exact: gap < 0)
  std::size_t foreign_equalities = 0;  // equality outside the two mandated points
  std::optional<S> min_offwindow_gap;  // smallest gap away from the mandated points
};

inline constexpr double kEqualityTol = 1e-12;        // scaled by max(1, |phi_nb|)
inline constexpr double kNearEqualityWindow = 1e-6;  // |x - zeta^r| / |x - 1| exclusion

namespace detail {

// disputed float classifications are settled in exact arithmetic; a float x
// is a dyadic rational, so the re-evaluation is of the same point
inline int exact_gap_sign(const ParamsD& p, double x) {
  const ParamsQ q{p.r, rational_from_double(p.zeta)};
  const BigRat xr = rational_from_double(x);
  const BigRat gap = phi_nb(q, xr) - phi_fl(q, xr);
  if (gap > 0) return 1;
  if (gap < 0) return -1;
  return 0;
}

}  // namespace detail

inline GridReport<double> scan_inequality(const ParamsD& p, std::size_t grid_points = 10'000) {
  if (grid_points < 2) throw std::domain_error("scan_inequality: at least 2 grid points");
  GridReport<double> rep;
  rep.params = p;
  rep.grid_points = grid_points;
  const double zr = p_inf(p);
  std::vector<double> xs;
  xs.reserve(grid_points + 2);
  for (std::size_t i = 0; i < grid_points; ++i)
    xs.push_back(static_cast<double>(i) / static_cast<double>(grid_points - 1));
  xs.push_back(zr);  // the interior equality point, inserted exactly
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  for (const double x : xs) {
    GridRow<double> row;
    row.x = x;
    row.nb = phi_nb(p, x);
    row.fl = phi_fl(p, x);
    row.gap = row.nb - row.fl;
    const double tol = kEqualityTol * std::max(1.0, std::abs(row.nb));
    const bool near_mandated = std::abs(x - zr) < kNearEqualityWindow || std::abs(x - 1.0) < kNearEqualityWindow;
    if (row.gap < -tol) {
      row.cls = PointClass::violation;
      ++rep.violations;
    } else if (std::abs(row.gap) <= tol) {
      if (near_mandated) {
        row.cls = PointClass::equality;
        rep.equality_xs.push_back(x);
      } else {
        // only an exact zero counts as equality away from the mandated points
        const int sign = detail::exact_gap_sign(p, x);
        if (sign > 0) {
          row.cls = PointClass::strict;
        } else if (sign == 0) {
          row.cls = PointClass::equality;
          rep.equality_xs.push_back(x);
          ++rep.foreign_equalities;
        } else {
          row.cls = PointClass::violation;
          ++rep.violations;
        }
      }
    }
    if (!near_mandated && row.cls == PointClass::strict)
      if (!rep.min_offwindow_gap || row.gap < *rep.min_offwindow_gap) rep.min_offwindow_gap = row.gap;
    rep.rows.push_back(row);
  }
  return rep;
}

inline GridReport<BigRat> scan_inequality_exact(const ParamsQ& p, std::size_t grid_points = 1'000) {
  if (grid_points < 2) throw std::domain_error("scan_inequality_exact: at least 2 grid points");
  GridReport<BigRat> rep;
  rep.params = p;
  rep.grid_points = grid_points;
  const BigRat zr = p_inf(p);
  std::vector<BigRat> xs;
  xs.reserve(grid_points + 2);
  for (std::size_t i = 0; i < grid_points; ++i)
    xs.push_back(BigRat(static_cast<long long>(i), static_cast<long long>(grid_points - 1)));
  xs.push_back(zr);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  for (const BigRat& x : xs) {
    GridRow<BigRat> row;
    row.x = x;
    row.nb = phi_nb(p, x);
    row.fl = phi_fl(p, x);
    row.gap = row.nb - row.fl;
    const bool mandated = (x == zr) || (x == 1);
    if (row.gap < 0) {
      row.cls = PointClass::violation;
      ++rep.violations;
    } else if (row.gap == 0) {
      row.cls = PointClass::equality;
      rep.equality_xs.push_back(x);
      if (!mandated) ++rep.foreign_equalities;
    } else if (!mandated) {
      if (!rep.min_offwindow_gap || row.gap < *rep.min_offwindow_gap) rep.min_offwindow_gap = row.gap;
    }
    rep.rows.push_back(row);
  }
  return rep;
}

// exact spot check at a single rational point
inline BigRat exact_gap(const ParamsQ& p, const BigRat& x) { return phi_nb(p, x) - phi_fl(p, x); }

// ---- survival curves ---------------------------------------------------------

struct SurvivalRow {
  std::uint64_t n = 0;
  double fl_at_zero = 0.0;  // phi_FL^(n)(0)
  double nb_at_zero = 0.0;  // phi_NB^(n)(0)
};

struct SurvivalCurve {
  ParamsD params{2, 0.0};
  double limit = 0.0;  // zeta^r, the common limit of both iterate sequences
  std::vector<SurvivalRow> rows;

  double fl_survival(std::size_t i) const { return 1.0 - rows[i].fl_at_zero; }
  double nb_survival(std::size_t i) const { return 1.0 - rows[i].nb_at_zero; }
  double limit_survival() const { return 1.0 - limit; }
};

inline SurvivalCurve survival_bounds(const ParamsD& p, std::uint64_t n_max) {
  SurvivalCurve curve;
  curve.params = p;
  curve.limit = p_inf(p);
  const MobiusMap<double> m = mobius_from_params(p);
  double fl = 0.0, nb = 0.0;
  curve.rows.push_back({0, fl, nb});
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    fl = m(fl);
    nb = phi_nb(p, nb);
    curve.rows.push_back({n, fl, nb});
  }
  return curve;
}

}  // namespace gwnb
