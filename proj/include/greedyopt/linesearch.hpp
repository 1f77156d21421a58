#ifndef GREEDYOPT_LINESEARCH_HPP
#define GREEDYOPT_LINESEARCH_HPP

#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "greedyopt/core.hpp"

namespace greedyopt {

/// Raised by minimize_plane when 60 box doublings never produce an interior
/// minimizer: the function looks unbounded below along some direction.
class NonCoerciveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using ScalarFn = std::function<double(double)>;
using BoxFn = std::function<double(const std::vector<double>&)>;

/// Outcome of a certified univariate search.
///
/// `certified_gap` upper-bounds f(x_best) - min f using the empirical
/// Lipschitz estimate; the estimate comes from slopes between queried points
/// and is a lower bound on the true constant, so the certificate is
/// heuristic for functions steeper outside the queried set.
struct LineSearchResult {
  double x_best = 0.0;
  double f_best = 0.0;  // observed value at x_best (corrupted when delta > 0)
  long eval_count = 0;
  double certified_gap = 0.0;
  double lipschitz_estimate = 0.0;
  bool lipschitz_empirical = true;
  /// Active interval per iteration, starting with the full domain. Each
  /// entry is contained in the previous one and has exactly half its length.
  std::vector<std::pair<double, double>> intervals;
};

/// Bisection-by-cases minimization of a convex f on [0, 1] using 3 + 2m
/// exact evaluations. For Lip-L f the achieved gap is at most L * 2^-m.
LineSearchResult minimize_unit_interval(const ScalarFn& f, int m);

/// Same search driven by corrupted values y with |y - f| <= delta, using the
/// 2*delta guard band in the quarter-point tests. For Lip-1 f the true gap is
/// at most 2^-m + (4m + 1) * delta after 3 + 2m evaluations.
LineSearchResult minimize_unit_interval_corrupted(const ScalarFn& y, int m, double delta);

/// Affine rescaling of the unit-interval search to [a, b].
LineSearchResult minimize_interval(const ScalarFn& f, double a, double b, int m, double delta = 0.0);

struct BoxSearchResult {
  std::vector<double> point;
  double f_best = 0.0;  // observed value at point
  long eval_count = 0;
  double certified_gap = 0.0;
  double lipschitz_estimate = 0.0;
};

/// Coordinate-wise minimization of a convex f on [0,1]^d: the last
/// coordinate is searched by the corrupted univariate routine whose oracle
/// is the recursive (d-1)-variate minimization. For per-coordinate Lip-1 f
/// the gap is at most 2^-m (4m+2)^d after at most (3+2m)^d evaluations;
/// base_delta is the corruption bound on raw evaluations of f.
/// Throws BudgetError when (3+2m)^d would exceed 1e8.
BoxSearchResult minimize_box(const BoxFn& f, int d, int m, double base_delta = 0.0);

struct PlaneSearchResult {
  double x = 0.0;
  double y = 0.0;
  double f_best = 0.0;
  long eval_count = 0;
  double certified_gap = 0.0;
  double lipschitz_estimate = 0.0;
  int doublings = 0;
  double half_width = 0.0;  // half width of the box that produced the result
};

/// Unbounded 2-variable minimization by expanding boxes: runs minimize_box
/// on a square centered at `center`, doubling the half-width (up to 60
/// times) while the solution touches the box boundary and expanding keeps
/// improving. Flat directions are accepted once an expansion stops paying.
/// Throws NonCoerciveError when the doubling budget runs out.
PlaneSearchResult minimize_plane(const std::function<double(double, double)>& f, int m,
                                 double initial_half_width,
                                 std::pair<double, double> center = {0.0, 0.0},
                                 double base_delta = 0.0);

}  // namespace greedyopt

#endif  // GREEDYOPT_LINESEARCH_HPP
