#pragma once

#include <Eigen/Dense>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rtcalc/qarith.hpp"

namespace rtcalc {

using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

/// Names a module: Verma(alpha), Simple(n, l) = S_n^{lr}, the unit, a dual, or a
/// tensor product. Tensor labels compare equal after flattening and dropping
/// unit factors, so associators and unitors stay implicit.
class ModuleLabel {
public:
  enum class Kind { verma, simple, unit, dual, tensor };

  static ModuleLabel verma(cplx alpha);
  static ModuleLabel simple(int n, int l);
  static ModuleLabel unit();
  static ModuleLabel dual(const ModuleLabel& inner);
  static ModuleLabel tensor(const ModuleLabel& left, const ModuleLabel& right);

  Kind kind() const { return kind_; }
  cplx alpha() const { return alpha_; }
  int n() const { return n_; }
  int l() const { return l_; }
  const ModuleLabel& inner() const { return *a_; }
  const ModuleLabel& left() const { return *a_; }
  const ModuleLabel& right() const { return *b_; }

  /// Non-unit tensor factors, left to right.
  std::vector<ModuleLabel> factors() const;
  std::string str() const;

  friend bool operator==(const ModuleLabel& a, const ModuleLabel& b);

private:
  ModuleLabel() = default;
  void collect(std::vector<ModuleLabel>& out) const;

  Kind kind_ = Kind::unit;
  cplx alpha_{};
  int n_ = 0;
  int l_ = 0;
  std::shared_ptr<const ModuleLabel> a_;
  std::shared_ptr<const ModuleLabel> b_;
};

/// A finite-dimensional weight module given on a weight basis. H is diagonal
/// with entries `weights`; K = q^H is derived.
class WeightModule {
public:
  WeightModule(GlobalParams params, ModuleLabel label, std::vector<cplx> weights, Mat e, Mat f);

  const GlobalParams& params() const { return params_; }
  const ModuleLabel& label() const { return label_; }
  int dim() const { return static_cast<int>(weights_.size()); }
  const std::vector<cplx>& weights() const { return weights_; }
  const Mat& E() const { return e_; }
  const Mat& F() const { return f_; }
  Mat H() const;
  Mat K() const { return K_power(1.0); }
  Mat K_inv() const { return K_power(-1.0); }
  /// K^s = q^{sH} as a diagonal matrix.
  Mat K_power(cplx s) const;
  /// Diagonal of K^s.
  Vec K_power_diag(cplx s) const;

  /// Factors of a module built by tensor_module; null otherwise.
  const std::shared_ptr<const WeightModule>& left_factor() const { return left_; }
  const std::shared_ptr<const WeightModule>& right_factor() const { return right_; }
  void set_factors(std::shared_ptr<const WeightModule> l, std::shared_ptr<const WeightModule> r) {
    left_ = std::move(l);
    right_ = std::move(r);
  }

private:
  GlobalParams params_;
  ModuleLabel label_;
  std::vector<cplx> weights_;
  Mat e_;
  Mat f_;
  std::shared_ptr<const WeightModule> left_;
  std::shared_ptr<const WeightModule> right_;
};

using ModulePtr = std::shared_ptr<const WeightModule>;

/// V_alpha on the basis v_0..v_{r-1}; v_0 has weight alpha + r - 1.
ModulePtr verma(const GlobalParams& p, cplx alpha);

/// S_n^{lr}: the Verma action for alpha = (l-1)r + n + 1 truncated to v_0..v_n.
ModulePtr simple_module(const GlobalParams& p, int n, int l);

ModulePtr unit_module(const GlobalParams& p);

/// Dual module on the literal dual basis: x acts by transpose(S(x)).
ModulePtr dual_module(const ModulePtr& m);

/// Tensor product with the left factor index varying slowest.
ModulePtr tensor_module(const ModulePtr& a, const ModulePtr& b);

/// Builds the module named by a label (Verma, Simple, Unit, Dual, Tensor).
ModulePtr module_from_label(const GlobalParams& p, const ModuleLabel& label);

/// The common class of all weights in C/2Z, represented with real part in
/// [0, 2); nullopt when the module is inhomogeneous.
std::optional<cplx> degree(const WeightModule& m, double tol = 1e-9);

/// Orthonormal basis of ker(E) restricted to the weight space of weight
/// lambda. Rank is decided from singular values with threshold
/// 1e-8 * max(sigma_max, 1).
std::vector<Vec> highest_weight_vectors(const WeightModule& m, cplx lambda, double tol = 1e-9);

/// H-eigenvalues with multiplicity, sorted by (real, imag).
std::vector<cplx> character(const WeightModule& m);

/// Sorted copy of a weight list, for multiset comparisons.
std::vector<cplx> sorted_weights(std::vector<cplx> w);

/// Max-norm residuals of the defining relations on a module.
struct RelationReport {
  double ke = 0;       // KE - q^2 EK
  double kf = 0;       // KF - q^{-2} FK
  double he = 0;       // HE - EH - 2E
  double hf = 0;       // HF - FH + 2F
  double ef = 0;       // EF - FE - (K - K^{-1})/(q - q^{-1})
  double e_nil = 0;    // E^r
  double f_nil = 0;    // F^r
  double k_is_qh = 0;  // H diagonal with the listed weights, K = q^H
  double max() const;
};

RelationReport check_relations(const WeightModule& m);

}  // namespace rtcalc
