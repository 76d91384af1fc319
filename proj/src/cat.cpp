#include "rtcalc/cat.hpp"

#include <algorithm>
#include <unsupported/Eigen/KroneckerProduct>

namespace rtcalc {

Morphism::Morphism(ModulePtr dom, ModulePtr cod, Mat matrix)
    : dom_(std::move(dom)), cod_(std::move(cod)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != cod_->dim() || matrix_.cols() != dom_->dim())
    throw domain_error("morphism matrix is " + std::to_string(matrix_.rows()) + "x" + std::to_string(matrix_.cols()) +
                       " but " + cod_->label().str() + " <- " + dom_->label().str() + " needs " +
                       std::to_string(cod_->dim()) + "x" + std::to_string(dom_->dim()));
}

bool same_object(const WeightModule& a, const WeightModule& b) {
  return a.dim() == b.dim() && a.params() == b.params() && a.label() == b.label();
}

Morphism identity(const ModulePtr& v) { return {v, v, Mat::Identity(v->dim(), v->dim())}; }

Morphism compose(const Morphism& g, const Morphism& f) {
  if (!same_object(*f.cod(), *g.dom()))
    throw composition_error("cannot compose: codomain " + f.cod()->label().str() + " does not match domain " +
                            g.dom()->label().str());
  return {f.dom(), g.cod(), g.matrix() * f.matrix()};
}

Morphism tensor_mor(const Morphism& f, const Morphism& g) {
  Mat m = Eigen::kroneckerProduct(f.matrix(), g.matrix()).eval();
  return {tensor_module(f.dom(), g.dom()), tensor_module(f.cod(), g.cod()), std::move(m)};
}

double linearity_residual(const Morphism& f) {
  const Mat& m = f.matrix();
  auto res = [&](const Mat& xd, const Mat& xc) {
    Mat d = m * xd - xc * m;
    return d.size() ? d.cwiseAbs().maxCoeff() : 0.0;
  };
  return std::max({res(f.dom()->E(), f.cod()->E()), res(f.dom()->F(), f.cod()->F()),
                   res(f.dom()->H(), f.cod()->H())});
}

Morphism ev(const ModulePtr& v) {
  const int n = v->dim();
  Mat m = Mat::Zero(1, n * n);
  for (int i = 0; i < n; ++i) m(0, i * n + i) = 1.0;
  return {tensor_module(dual_module(v), v), unit_module(v->params()), std::move(m)};
}

Morphism coev(const ModulePtr& v) {
  const int n = v->dim();
  Mat m = Mat::Zero(n * n, 1);
  for (int i = 0; i < n; ++i) m(i * n + i, 0) = 1.0;
  return {unit_module(v->params()), tensor_module(v, dual_module(v)), std::move(m)};
}

Morphism ev_hat(const ModulePtr& v) {
  const int n = v->dim();
  const Vec k = v->K_power_diag(1.0 - v->params().r());
  Mat m = Mat::Zero(1, n * n);
  for (int i = 0; i < n; ++i) m(0, i * n + i) = k(i);
  return {tensor_module(v, dual_module(v)), unit_module(v->params()), std::move(m)};
}

Morphism coev_hat(const ModulePtr& v) {
  const int n = v->dim();
  const Vec k = v->K_power_diag(v->params().r() - 1.0);
  Mat m = Mat::Zero(n * n, 1);
  for (int i = 0; i < n; ++i) m(i * n + i, 0) = k(i);
  return {unit_module(v->params()), tensor_module(dual_module(v), v), std::move(m)};
}

Morphism pivotal(const ModulePtr& v) {
  return {v, dual_module(dual_module(v)), v->K_power(1.0 - v->params().r())};
}

namespace {

// Permutation taking V x W to W x V.
Mat swap_matrix(int dv, int dw) {
  Mat s = Mat::Zero(dv * dw, dv * dw);
  for (int i = 0; i < dv; ++i)
    for (int j = 0; j < dw; ++j) s(j * dv + i, i * dw + j) = 1.0;
  return s;
}

// Diagonal of q^{s H x H / 2} on V x W.
Vec qhh_diag(const WeightModule& v, const WeightModule& w, double s) {
  const int dv = v.dim(), dw = w.dim();
  Vec d(dv * dw);
  for (int i = 0; i < dv; ++i)
    for (int j = 0; j < dw; ++j) d(i * dw + j) = qpow(v.params(), s * 0.5 * v.weights()[i] * w.weights()[j]);
  return d;
}

// sum_l coeff[l] * (E_V^l x F_W^l)
Mat ef_series(const WeightModule& v, const WeightModule& w, const std::vector<cplx>& coeff) {
  const int dv = v.dim(), dw = w.dim();
  Mat acc = Mat::Zero(dv * dw, dv * dw);
  Mat ep = Mat::Identity(dv, dv), fp = Mat::Identity(dw, dw);
  for (size_t l = 0; l < coeff.size(); ++l) {
    if (l > 0) {
      ep = ep * v.E();
      fp = fp * w.F();
      if (ep.cwiseAbs().maxCoeff() == 0.0 || fp.cwiseAbs().maxCoeff() == 0.0) break;
    }
    acc += coeff[l] * Eigen::kroneckerProduct(ep, fp).eval();
  }
  return acc;
}

}  // namespace

Morphism braiding(const ModulePtr& v, const ModulePtr& w) {
  if (!(v->params() == w->params())) throw domain_error("braiding of modules over different r");
  const auto& p = v->params();
  const cplx b1 = qbracket(p, 1.0);
  std::vector<cplx> coeff(p.r());
  for (int l = 0; l < p.r(); ++l)
    coeff[l] = std::pow(b1, 2 * l) / qfact(p, l, FactorialKind::braced) * qpow(p, 0.5 * l * (l - 1));
  Mat r = qhh_diag(*v, *w, 1.0).asDiagonal() * ef_series(*v, *w, coeff);
  return {tensor_module(v, w), tensor_module(w, v), swap_matrix(v->dim(), w->dim()) * r};
}

Morphism braiding_inv(const ModulePtr& v, const ModulePtr& w) {
  if (!(v->params() == w->params())) throw domain_error("braiding of modules over different r");
  const auto& p = v->params();
  const cplx b1 = qbracket(p, 1.0);
  std::vector<cplx> coeff = qexp_coeffs(p, -1);
  for (int l = 0; l < p.r(); ++l) coeff[l] *= std::pow(-b1, l);
  Mat rinv = ef_series(*v, *w, coeff) * qhh_diag(*v, *w, -1.0).asDiagonal();
  // swap^{-1} : W x V -> V x W
  return {tensor_module(w, v), tensor_module(v, w), rinv * swap_matrix(w->dim(), v->dim())};
}

Morphism ptr_right(const Morphism& f, const ModulePtr& rest, const ModulePtr& traced) {
  const ModuleLabel expect = ModuleLabel::tensor(rest->label(), traced->label());
  const int dr = rest->dim(), dt = traced->dim();
  if (!same_object(*f.dom(), *f.cod()) || f.dom()->dim() != dr * dt || !(f.dom()->label() == expect))
    throw domain_error("ptr_right needs an endomorphism of " + expect.str() + ", got " + f.cod()->label().str() +
                       " <- " + f.dom()->label().str());
  // (id x ev_hat_W) o (f x id_{W*}) o (id x coev_W), contracted directly.
  const Vec k = traced->K_power_diag(1.0 - traced->params().r());
  const Mat& m = f.matrix();
  Mat out = Mat::Zero(dr, dr);
  for (int a = 0; a < dr; ++a)
    for (int b = 0; b < dr; ++b) {
      cplx s = 0.0;
      for (int j = 0; j < dt; ++j) s += m(a * dt + j, b * dt + j) * k(j);
      out(a, b) = s;
    }
  return {rest, rest, std::move(out)};
}

Morphism ptr_left(const Morphism& f, const ModulePtr& traced, const ModulePtr& rest) {
  const ModuleLabel expect = ModuleLabel::tensor(traced->label(), rest->label());
  const int dr = rest->dim(), dt = traced->dim();
  if (!same_object(*f.dom(), *f.cod()) || f.dom()->dim() != dr * dt || !(f.dom()->label() == expect))
    throw domain_error("ptr_left needs an endomorphism of " + expect.str() + ", got " + f.cod()->label().str() +
                       " <- " + f.dom()->label().str());
  // (ev_V x id) o (id_{V*} x f) o (coev_hat_V x id), contracted directly.
  const Vec k = traced->K_power_diag(traced->params().r() - 1.0);
  const Mat& m = f.matrix();
  Mat out = Mat::Zero(dr, dr);
  for (int a = 0; a < dr; ++a)
    for (int b = 0; b < dr; ++b) {
      cplx s = 0.0;
      for (int i = 0; i < dt; ++i) s += m(i * dr + a, i * dr + b) * k(i);
      out(a, b) = s;
    }
  return {rest, rest, std::move(out)};
}

Morphism ptr_right(const Morphism& f) {
  const auto& d = f.dom();
  if (!d->left_factor()) throw domain_error("ptr_right needs a tensor product domain, got " + d->label().str());
  return ptr_right(f, d->left_factor(), d->right_factor());
}

Morphism ptr_left(const Morphism& f) {
  const auto& d = f.dom();
  if (!d->left_factor()) throw domain_error("ptr_left needs a tensor product domain, got " + d->label().str());
  return ptr_left(f, d->left_factor(), d->right_factor());
}

Morphism twist(const ModulePtr& v) { return ptr_right(braiding(v, v), v, v); }

Morphism twist_inv(const ModulePtr& v) { return ptr_right(braiding_inv(v, v), v, v); }

ScalarValue scalar_of(const Morphism& f, double tol) {
  if (f.dom()->dim() != f.cod()->dim()) throw domain_error("scalar_of needs an endomorphism");
  const Mat& m = f.matrix();
  const int n = static_cast<int>(m.rows());
  const cplx s = m.trace() / double(n);
  const double res = (m - s * Mat::Identity(n, n)).cwiseAbs().maxCoeff();
  if (!(res <= tol * std::max(1.0, std::abs(s))))
    throw numerical_error("endomorphism of " + f.dom()->label().str() + " is not scalar: residual " +
                          std::to_string(res) + " (value " + format_complex(s) + ")");
  return {s, res};
}

}  // namespace rtcalc
