#include "greedyopt/objective.hpp"

#include <bit>
#include <cmath>
#include <random>

namespace greedyopt {

namespace {

// splitmix64; stable across platforms.
std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

double corruption_noise(std::uint64_t seed, const Vector& x) {
  std::uint64_t h = mix64(seed ^ 0x6a09e667f3bcc909ULL);
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    // Quantize at 1e-12 so nearby-but-unequal queries decorrelate while
    // bitwise-equal queries always collide.
    const double q = std::nearbyint(x[i] * 1e12);
    h = mix64(h ^ std::bit_cast<std::uint64_t>(q));
  }
  // [0, 2^64) -> [-1, 1]
  return static_cast<double>(h) * (2.0 / 18446744073709551616.0) - 1.0;
}

ObjectiveOracle::ObjectiveOracle(std::string name, int dim, ValueFn value, GradientFn gradient)
    : name_(std::move(name)),
      dim_(dim),
      value_(std::move(value)),
      gradient_(std::move(gradient)),
      eval_count_(std::make_shared<std::atomic<long>>(0)),
      grad_count_(std::make_shared<std::atomic<long>>(0)) {
  if (dim_ < 1) throw InputError("ObjectiveOracle: dimension must be >= 1");
  if (!value_) throw InputError("ObjectiveOracle: value function required");
}

double ObjectiveOracle::evaluate(const Vector& x) const {
  if (x.size() != dim_) throw InputError("ObjectiveOracle::evaluate: dimension mismatch");
  eval_count_->fetch_add(1, std::memory_order_relaxed);
  double v = value_(x);
  if (delta_ > 0.0) v += delta_ * corruption_noise(seed_, x);
  return v;
}

double ObjectiveOracle::exact_value(const Vector& x) const {
  if (x.size() != dim_) throw InputError("ObjectiveOracle::exact_value: dimension mismatch");
  return value_(x);
}

Vector ObjectiveOracle::gradient(const Vector& x) const {
  if (!gradient_) throw UnsupportedCapability("oracle \"" + name_ + "\" has no gradient");
  if (x.size() != dim_) throw InputError("ObjectiveOracle::gradient: dimension mismatch");
  grad_count_->fetch_add(1, std::memory_order_relaxed);
  return gradient_(x);
}

ObjectiveOracle ObjectiveOracle::corrupt(double delta, std::uint64_t seed) const {
  if (delta_ > 0.0) throw InputError("corrupt: oracle is already corrupted");
  if (!(delta > 0.0)) throw InputError("corrupt: delta must be positive");
  ObjectiveOracle out = *this;
  out.delta_ = delta;
  out.seed_ = seed;
  out.gradient_ = nullptr;  // corrupted oracles are value-only
  return out;
}

void ObjectiveOracle::reset_counts() const {
  eval_count_->store(0);
  grad_count_->store(0);
}

void ObjectiveOracle::declare_smoothness(double q, double gamma) {
  if (!(q > 1.0 && q <= 2.0)) throw InputError("declare_smoothness: q must lie in (1, 2]");
  if (!(gamma > 0.0)) throw InputError("declare_smoothness: gamma must be positive");
  smoothness_ = SmoothnessClass{q, gamma};
}

LevelSetSpec LevelSetSpec::at_origin(const ObjectiveOracle& oracle, double C) {
  Vector zero = Vector::Zero(oracle.dim());
  return LevelSetSpec{C, oracle.exact_value(zero)};
}

bool LevelSetSpec::contains(const ObjectiveOracle& oracle, const Vector& x) const {
  return oracle.evaluate(x) <= base_value + C;
}

double estimate_modulus(const ObjectiveOracle& oracle, const std::vector<Vector>& sample,
                        const std::vector<Vector>& directions, double u, NormOrder p) {
  if (sample.empty()) throw InputError("estimate_modulus: empty sample");
  if (directions.empty()) throw InputError("estimate_modulus: empty direction set");
  if (!(u > 0.0)) throw InputError("estimate_modulus: u must be positive");
  if (oracle.is_corrupted()) throw InputError("estimate_modulus: oracle must be uncorrupted");
  for (const Vector& y : directions) {
    if (std::abs(norm(y, p) - 1.0) > 1e-9) {
      throw InputError("estimate_modulus: directions must be unit vectors in the configured norm");
    }
  }
  double best = 0.0;
  for (const Vector& x : sample) {
    const double ex = oracle.evaluate(x);
    for (const Vector& y : directions) {
      const double second_diff = oracle.evaluate(x + u * y) + oracle.evaluate(x - u * y) - 2.0 * ex;
      best = std::max(best, 0.5 * std::abs(second_diff));
    }
  }
  return best;
}

SmoothnessEstimate estimate_modulus_profile(const ObjectiveOracle& oracle,
                                            const std::vector<Vector>& sample,
                                            const std::vector<Vector>& directions,
                                            const std::vector<double>& u_grid, NormOrder p) {
  SmoothnessEstimate out;
  out.u_grid = u_grid;
  for (double u : u_grid) out.rho_values.push_back(estimate_modulus(oracle, sample, directions, u, p));
  return out;
}

ObjectiveOracle quadratic_objective(const Vector& x_star) {
  const Vector target = x_star;
  ObjectiveOracle oracle(
      "quadratic", static_cast<int>(target.size()),
      [target](const Vector& x) { return (x - target).squaredNorm(); },
      [target](const Vector& x) { return Vector(2.0 * (x - target)); });
  oracle.declare_smoothness(2.0, 1.0);
  return oracle;
}

ObjectiveOracle power_objective(const Vector& x_star, double q, NormOrder space_norm) {
  if (!(q > 1.0 && q <= 2.0)) throw InputError("power_objective: q must lie in (1, 2]");
  const Vector target = x_star;
  const double d = static_cast<double>(target.size());
  ObjectiveOracle oracle(
      "power", static_cast<int>(target.size()),
      [target, q](const Vector& x) {
        double acc = 0.0;
        for (Eigen::Index i = 0; i < x.size(); ++i) acc += std::pow(std::abs(x[i] - target[i]), q);
        return acc;
      },
      [target, q](const Vector& x) {
        Vector g(x.size());
        for (Eigen::Index i = 0; i < x.size(); ++i) {
          const double z = x[i] - target[i];
          g[i] = z == 0.0 ? 0.0 : q * std::pow(std::abs(z), q - 1.0) * (z > 0 ? 1.0 : -1.0);
        }
        return g;
      });
  // sup over unit-p y of sum |y_i|^q: 1 when p <= q, d^(1 - q/p) otherwise.
  double gamma = 1.0;
  if (space_norm.is_inf()) {
    gamma = d;
  } else if (space_norm.value() > q) {
    gamma = std::pow(d, 1.0 - q / space_norm.value());
  }
  oracle.declare_smoothness(q, gamma);
  return oracle;
}

ObjectiveOracle logistic_objective(int dim, int n_samples, std::uint64_t seed, double ridge) {
  if (dim < 1 || n_samples < 1) throw InputError("logistic_objective: dim and n_samples must be >= 1");
  if (ridge < 0.0) throw InputError("logistic_objective: ridge must be nonnegative");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXd features(n_samples, dim);
  Eigen::VectorXd sign_labels(n_samples);
  Vector ground_truth(dim);
  for (int j = 0; j < dim; ++j) ground_truth[j] = gauss(rng);
  for (int i = 0; i < n_samples; ++i) {
    for (int j = 0; j < dim; ++j) features(i, j) = gauss(rng);
    const double margin = features.row(i).dot(ground_truth) + 0.1 * gauss(rng);
    sign_labels[i] = margin >= 0.0 ? 1.0 : -1.0;
  }
  const double inv_n = 1.0 / static_cast<double>(n_samples);

  auto value = [features, sign_labels, inv_n, ridge](const Vector& x) {
    double acc = 0.0;
    for (Eigen::Index i = 0; i < features.rows(); ++i) {
      const double t = -sign_labels[i] * features.row(i).dot(x);
      // log(1 + exp(t)) without overflow
      acc += t > 0.0 ? t + std::log1p(std::exp(-t)) : std::log1p(std::exp(t));
    }
    return acc * inv_n + 0.5 * ridge * x.squaredNorm();
  };
  auto grad = [features, sign_labels, inv_n, ridge](const Vector& x) {
    Vector g = Vector::Zero(x.size());
    for (Eigen::Index i = 0; i < features.rows(); ++i) {
      const double t = -sign_labels[i] * features.row(i).dot(x);
      const double sigma = 1.0 / (1.0 + std::exp(-t));
      g -= sigma * sign_labels[i] * features.row(i).transpose();
    }
    return Vector(g * inv_n + ridge * x);
  };

  ObjectiveOracle oracle("logistic", dim, value, grad);
  // Hessian norm <= (1/4) max_i |a_i|_2^2 + ridge, so rho(u) <= gamma u^2 with
  // gamma = that bound / 2.
  double max_row = 0.0;
  for (int i = 0; i < n_samples; ++i) max_row = std::max(max_row, features.row(i).squaredNorm());
  oracle.declare_smoothness(2.0, 0.125 * max_row + 0.5 * ridge);
  return oracle;
}

}  // namespace greedyopt
