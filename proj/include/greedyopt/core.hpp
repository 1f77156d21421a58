#ifndef GREEDYOPT_CORE_HPP
#define GREEDYOPT_CORE_HPP

#include <Eigen/Dense>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace greedyopt {

/// Dense element of the ambient space.
using Vector = Eigen::VectorXd;

/// Raised when an argument violates an operation's preconditions.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a requested computation would exceed its evaluation budget.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Order p of an l_p norm, p in [1, inf].
class NormOrder {
 public:
  static NormOrder finite(double p);
  static NormOrder inf();
  static NormOrder l1() { return finite(1.0); }
  static NormOrder l2() { return finite(2.0); }

  bool is_inf() const { return inf_; }
  /// Finite exponent; +infinity for the max norm.
  double value() const;

  bool operator==(const NormOrder& other) const;

 private:
  NormOrder(double p, bool is_inf) : p_(p), inf_(is_inf) {}
  double p_ = 2.0;
  bool inf_ = false;
};

/// l_p norm of v. Throws InputError on non-finite coordinates.
double norm(const Vector& v, NormOrder p);

bool all_finite(const Vector& v);

/// Finite symmetric dictionary: unit-norm atoms closed under negation.
///
/// `spanning` is false when the atoms do not span the ambient space; this is
/// reported as a warning flag rather than an error because spanning only
/// matters for unconstrained problems.
struct Dictionary {
  std::vector<Vector> atoms;
  NormOrder norm_order = NormOrder::l2();
  std::vector<std::string> labels;
  bool spanning = true;

  int dim() const { return atoms.empty() ? 0 : static_cast<int>(atoms.front().size()); }
  int size() const { return static_cast<int>(atoms.size()); }
  const Vector& atom(int i) const;
  const std::string& label(int i) const;

  /// Index of the atom equal to -atoms[i] (coordinate-wise within 1e-12).
  /// Returns -1 when absent, which violates the symmetry invariant.
  int negation_index(int i) const;

  /// Largest deviation of any atom's norm from 1.
  double max_unit_norm_error() const;
};

/// The 2d atoms {+-e_j} of the canonical basis. Unit norm in every l_p.
Dictionary canonical_dictionary(int d, NormOrder p);

/// Normalizes raw atoms to unit l_p norm, appends missing negations, drops
/// duplicates (1e-12 coordinate-wise) and runs the spanning rank check.
Dictionary make_symmetric_dictionary(const std::vector<Vector>& raw_atoms, NormOrder p);

nlohmann::json dictionary_to_json(const Dictionary& dict);
Dictionary dictionary_from_json(const nlohmann::json& j);

/// Sparse combination sum_i c_i * atoms[i] over a fixed dictionary.
///
/// Support size n places the combination in Sigma_n; l1 mass <= M places it
/// in the M-dilated convex hull of the dictionary (<= 1: the hull itself).
class CoefficientCombination {
 public:
  explicit CoefficientCombination(const Dictionary& dict) : dict_(&dict) {}

  void set(int atom_index, double value);
  void add(int atom_index, double value);
  /// Multiplies every coefficient by a.
  void scale(double a);
  /// Removes entries with |c| < tol.
  void prune(double tol = 1e-15);

  double coefficient(int atom_index) const;
  int support_size() const { return static_cast<int>(coeffs_.size()); }
  double l1_mass() const;
  const std::map<int, double>& coefficients() const { return coeffs_; }
  const Dictionary& dictionary() const { return *dict_; }

  /// Materializes the dense vector.
  Vector combine() const;

 private:
  void check_index(int atom_index) const;
  const Dictionary* dict_;
  std::map<int, double> coeffs_;
};

}  // namespace greedyopt

#endif  // GREEDYOPT_CORE_HPP
