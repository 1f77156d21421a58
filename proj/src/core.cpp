#include "greedyopt/core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <nlohmann/json.hpp>

namespace greedyopt {

namespace {

constexpr double kDuplicateTol = 1e-12;

bool coordwise_close(const Vector& a, const Vector& b, double tol) {
  if (a.size() != b.size()) return false;
  return (a - b).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace

NormOrder NormOrder::finite(double p) {
  if (!(p >= 1.0) || std::isinf(p)) {
    throw InputError("norm order must satisfy p >= 1 (use NormOrder::inf() for the max norm)");
  }
  return NormOrder(p, false);
}

NormOrder NormOrder::inf() { return NormOrder(std::numeric_limits<double>::infinity(), true); }

double NormOrder::value() const { return inf_ ? std::numeric_limits<double>::infinity() : p_; }

bool NormOrder::operator==(const NormOrder& other) const {
  if (inf_ != other.inf_) return false;
  return inf_ || p_ == other.p_;
}

bool all_finite(const Vector& v) { return v.allFinite(); }

double norm(const Vector& v, NormOrder p) {
  if (!all_finite(v)) throw InputError("norm: vector has non-finite coordinates");
  if (v.size() == 0) return 0.0;
  if (p.is_inf()) return v.cwiseAbs().maxCoeff();
  const double pv = p.value();
  if (pv == 1.0) return v.cwiseAbs().sum();
  if (pv == 2.0) return v.norm();
  double acc = 0.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) acc += std::pow(std::abs(v[i]), pv);
  return std::pow(acc, 1.0 / pv);
}

const Vector& Dictionary::atom(int i) const {
  if (i < 0 || i >= size()) throw InputError("Dictionary::atom: index out of range");
  return atoms[static_cast<size_t>(i)];
}

const std::string& Dictionary::label(int i) const {
  if (i < 0 || i >= size()) throw InputError("Dictionary::label: index out of range");
  return labels[static_cast<size_t>(i)];
}

int Dictionary::negation_index(int i) const {
  const Vector neg = -atom(i);
  for (int j = 0; j < size(); ++j) {
    if (coordwise_close(atoms[static_cast<size_t>(j)], neg, kDuplicateTol)) return j;
  }
  return -1;
}

double Dictionary::max_unit_norm_error() const {
  double worst = 0.0;
  for (const Vector& g : atoms) worst = std::max(worst, std::abs(norm(g, norm_order) - 1.0));
  return worst;
}

namespace {

bool spans_ambient_space(const std::vector<Vector>& atoms) {
  if (atoms.empty()) return false;
  const Eigen::Index d = atoms.front().size();
  Eigen::MatrixXd mat(d, static_cast<Eigen::Index>(atoms.size()));
  for (size_t i = 0; i < atoms.size(); ++i) mat.col(static_cast<Eigen::Index>(i)) = atoms[i];
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(mat);
  return qr.rank() == d;
}

}  // namespace

Dictionary canonical_dictionary(int d, NormOrder p) {
  if (d < 1) throw InputError("canonical_dictionary: dimension must be >= 1");
  Dictionary dict;
  dict.norm_order = p;
  dict.atoms.reserve(static_cast<size_t>(2 * d));
  for (int j = 0; j < d; ++j) {
    Vector e = Vector::Zero(d);
    e[j] = 1.0;
    dict.atoms.push_back(e);
    dict.labels.push_back("+e" + std::to_string(j + 1));
    dict.atoms.push_back(-e);
    dict.labels.push_back("-e" + std::to_string(j + 1));
  }
  dict.spanning = true;
  return dict;
}

Dictionary make_symmetric_dictionary(const std::vector<Vector>& raw_atoms, NormOrder p) {
  if (raw_atoms.empty()) throw InputError("make_symmetric_dictionary: need at least one atom");
  const Eigen::Index d = raw_atoms.front().size();
  Dictionary dict;
  dict.norm_order = p;

  auto contains = [&dict](const Vector& v) {
    for (const Vector& g : dict.atoms) {
      if (coordwise_close(g, v, kDuplicateTol)) return true;
    }
    return false;
  };

  int base_index = 0;
  for (const Vector& raw : raw_atoms) {
    if (raw.size() != d) throw InputError("make_symmetric_dictionary: mixed atom dimensions");
    if (!all_finite(raw)) throw InputError("make_symmetric_dictionary: non-finite atom");
    const double len = norm(raw, p);
    if (len <= 0.0) throw InputError("make_symmetric_dictionary: zero atom");
    const Vector unit = raw / len;
    if (!contains(unit)) {
      dict.atoms.push_back(unit);
      dict.labels.push_back("a" + std::to_string(base_index));
    }
    if (!contains(-unit)) {
      dict.atoms.push_back(-unit);
      dict.labels.push_back("-a" + std::to_string(base_index));
    }
    ++base_index;
  }
  dict.spanning = spans_ambient_space(dict.atoms);
  return dict;
}

nlohmann::json dictionary_to_json(const Dictionary& dict) {
  nlohmann::json j;
  if (dict.norm_order.is_inf()) {
    j["p"] = "inf";
  } else {
    j["p"] = dict.norm_order.value();
  }
  nlohmann::json atoms = nlohmann::json::array();
  for (const Vector& g : dict.atoms) {
    nlohmann::json coords = nlohmann::json::array();
    for (Eigen::Index i = 0; i < g.size(); ++i) coords.push_back(g[i]);
    atoms.push_back(coords);
  }
  j["atoms"] = atoms;
  j["labels"] = dict.labels;
  return j;
}

Dictionary dictionary_from_json(const nlohmann::json& j) {
  if (!j.contains("p") || !j.contains("atoms")) {
    throw InputError("dictionary json must contain \"p\" and \"atoms\"");
  }
  NormOrder p = NormOrder::l2();
  if (j["p"].is_string()) {
    if (j["p"].get<std::string>() != "inf") throw InputError("dictionary json: p must be a number or \"inf\"");
    p = NormOrder::inf();
  } else {
    p = NormOrder::finite(j["p"].get<double>());
  }
  Dictionary dict;
  dict.norm_order = p;
  for (const auto& coords : j["atoms"]) {
    Vector g(coords.size());
    for (size_t i = 0; i < coords.size(); ++i) g[static_cast<Eigen::Index>(i)] = coords[i].get<double>();
    dict.atoms.push_back(g);
  }
  if (j.contains("labels")) {
    dict.labels = j["labels"].get<std::vector<std::string>>();
    if (dict.labels.size() != dict.atoms.size()) throw InputError("dictionary json: labels/atoms size mismatch");
  } else {
    for (size_t i = 0; i < dict.atoms.size(); ++i) dict.labels.push_back("a" + std::to_string(i));
  }
  if (dict.atoms.empty()) throw InputError("dictionary json: empty atom list");
  const Eigen::Index d = dict.atoms.front().size();
  for (const Vector& g : dict.atoms) {
    if (g.size() != d) throw InputError("dictionary json: mixed atom dimensions");
  }
  dict.spanning = spans_ambient_space(dict.atoms);
  return dict;
}

void CoefficientCombination::check_index(int atom_index) const {
  if (atom_index < 0 || atom_index >= dict_->size()) {
    throw InputError("CoefficientCombination: atom index out of range");
  }
}

void CoefficientCombination::set(int atom_index, double value) {
  check_index(atom_index);
  if (value == 0.0) {
    coeffs_.erase(atom_index);
  } else {
    coeffs_[atom_index] = value;
  }
}

void CoefficientCombination::add(int atom_index, double value) {
  check_index(atom_index);
  set(atom_index, coefficient(atom_index) + value);
}

void CoefficientCombination::scale(double a) {
  if (a == 0.0) {
    coeffs_.clear();
    return;
  }
  for (auto& [idx, c] : coeffs_) c *= a;
}

void CoefficientCombination::prune(double tol) {
  for (auto it = coeffs_.begin(); it != coeffs_.end();) {
    if (std::abs(it->second) < tol) {
      it = coeffs_.erase(it);
    } else {
      ++it;
    }
  }
}

double CoefficientCombination::coefficient(int atom_index) const {
  auto it = coeffs_.find(atom_index);
  return it == coeffs_.end() ? 0.0 : it->second;
}

double CoefficientCombination::l1_mass() const {
  double mass = 0.0;
  for (const auto& [idx, c] : coeffs_) mass += std::abs(c);
  return mass;
}

Vector CoefficientCombination::combine() const {
  Vector out = Vector::Zero(dict_->dim());
  for (const auto& [idx, c] : coeffs_) out += c * dict_->atom(idx);
  return out;
}

}  // namespace greedyopt
