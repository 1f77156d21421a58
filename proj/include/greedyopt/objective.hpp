#ifndef GREEDYOPT_OBJECTIVE_HPP
#define GREEDYOPT_OBJECTIVE_HPP

#include <atomic>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "greedyopt/core.hpp"

namespace greedyopt {

/// Raised when an oracle capability (e.g. gradient) is requested but absent.
class UnsupportedCapability : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Declared smoothness bound rho(E, u) <= gamma * u^q, 1 < q <= 2.
struct SmoothnessClass {
  double q = 2.0;
  double gamma = 1.0;
};

/// Convex objective behind a value oracle.
///
/// `evaluate` is the only access path the algorithms get: it counts every
/// call and, when a corruption budget delta > 0 is set, perturbs the exact
/// value by a deterministic seeded hash of the query point, staying within
/// +-delta. `exact_value` bypasses both the counter and the corruption and
/// exists for bookkeeping and verification, never for the algorithms.
class ObjectiveOracle {
 public:
  using ValueFn = std::function<double(const Vector&)>;
  using GradientFn = std::function<Vector(const Vector&)>;

  ObjectiveOracle(std::string name, int dim, ValueFn value, GradientFn gradient = nullptr);

  /// Counted, possibly corrupted query.
  double evaluate(const Vector& x) const;
  /// Uncounted, uncorrupted query for harness bookkeeping.
  double exact_value(const Vector& x) const;

  bool has_gradient() const { return static_cast<bool>(gradient_); }
  /// Counted gradient query. Throws UnsupportedCapability when absent.
  Vector gradient(const Vector& x) const;

  /// Returns a corrupted copy: values move by at most delta, the gradient
  /// capability is dropped. Throws InputError when this oracle is already
  /// corrupted or delta <= 0.
  ObjectiveOracle corrupt(double delta, std::uint64_t seed) const;

  double corruption() const { return delta_; }
  std::uint64_t corruption_seed() const { return seed_; }
  bool is_corrupted() const { return delta_ > 0.0; }

  long eval_count() const { return eval_count_->load(); }
  long gradient_count() const { return grad_count_->load(); }
  void reset_counts() const;

  int dim() const { return dim_; }
  const std::string& name() const { return name_; }

  std::optional<SmoothnessClass> smoothness() const { return smoothness_; }
  void declare_smoothness(double q, double gamma);

 private:
  std::string name_;
  int dim_;
  ValueFn value_;
  GradientFn gradient_;
  double delta_ = 0.0;
  std::uint64_t seed_ = 0;
  std::optional<SmoothnessClass> smoothness_;
  // Shared so that corrupted wrappers and copies keep one ledger per oracle
  // lineage; increments are atomic so concurrent queries stay exact.
  std::shared_ptr<std::atomic<long>> eval_count_;
  std::shared_ptr<std::atomic<long>> grad_count_;
};

/// Deterministic hash noise in [-1, 1] for (seed, quantized point).
double corruption_noise(std::uint64_t seed, const Vector& x);

/// Level set D_C = {x : E(x) <= E(0) + C}; C = 0 gives D_0.
struct LevelSetSpec {
  double C = 0.0;
  double base_value = 0.0;

  static LevelSetSpec at_origin(const ObjectiveOracle& oracle, double C);
  /// One evaluation decides membership.
  bool contains(const ObjectiveOracle& oracle, const Vector& x) const;
};

/// Finite-sample lower bound for the modulus of smoothness at scale u:
/// max over the sample and directions of |E(x+uy) + E(x-uy) - 2E(x)| / 2.
/// Directions must be unit vectors in the given norm; the oracle must be
/// uncorrupted.
double estimate_modulus(const ObjectiveOracle& oracle, const std::vector<Vector>& sample,
                        const std::vector<Vector>& directions, double u, NormOrder p);

/// Modulus lower bounds over a grid of scales u.
struct SmoothnessEstimate {
  std::vector<double> u_grid;
  std::vector<double> rho_values;
};

SmoothnessEstimate estimate_modulus_profile(const ObjectiveOracle& oracle,
                                            const std::vector<Vector>& sample,
                                            const std::vector<Vector>& directions,
                                            const std::vector<double>& u_grid, NormOrder p);

// Shipped test objectives. Each declares its (q, gamma) smoothness for the
// norm it is built against and has an analytic gradient.

/// E(x) = |x - x_star|_2^2.  q = 2, gamma = 1 in l_2.
ObjectiveOracle quadratic_objective(const Vector& x_star);

/// E(x) = sum_i |x_i - x_star_i|^q for q in (1, 2]. gamma depends on the
/// ambient norm: 1 when p <= q, d^(1 - q/p) when p > q (d when p = inf).
ObjectiveOracle power_objective(const Vector& x_star, double q, NormOrder space_norm);

/// Mean logistic loss over a seeded synthetic dataset, plus an optional
/// ridge term. q = 2; gamma from the Hessian bound.
ObjectiveOracle logistic_objective(int dim, int n_samples, std::uint64_t seed, double ridge = 0.0);

}  // namespace greedyopt

#endif  // GREEDYOPT_OBJECTIVE_HPP
