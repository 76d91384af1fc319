#include "rtcalc/repr.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <unsupported/Eigen/KroneckerProduct>

namespace rtcalc {

ModuleLabel ModuleLabel::verma(cplx alpha) {
  ModuleLabel m;
  m.kind_ = Kind::verma;
  m.alpha_ = alpha;
  return m;
}

ModuleLabel ModuleLabel::simple(int n, int l) {
  ModuleLabel m;
  m.kind_ = Kind::simple;
  m.n_ = n;
  m.l_ = l;
  return m;
}

ModuleLabel ModuleLabel::unit() { return ModuleLabel(); }

ModuleLabel ModuleLabel::dual(const ModuleLabel& inner) {
  if (inner.kind_ == Kind::unit) return unit();
  ModuleLabel m;
  m.kind_ = Kind::dual;
  m.a_ = std::make_shared<const ModuleLabel>(inner);
  return m;
}

ModuleLabel ModuleLabel::tensor(const ModuleLabel& left, const ModuleLabel& right) {
  ModuleLabel m;
  m.kind_ = Kind::tensor;
  m.a_ = std::make_shared<const ModuleLabel>(left);
  m.b_ = std::make_shared<const ModuleLabel>(right);
  return m;
}

void ModuleLabel::collect(std::vector<ModuleLabel>& out) const {
  switch (kind_) {
    case Kind::unit:
      return;
    case Kind::tensor:
      a_->collect(out);
      b_->collect(out);
      return;
    default:
      out.push_back(*this);
  }
}

std::vector<ModuleLabel> ModuleLabel::factors() const {
  std::vector<ModuleLabel> out;
  collect(out);
  return out;
}

std::string ModuleLabel::str() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::verma:
      os << "V(" << format_complex(alpha_) << ")";
      break;
    case Kind::simple:
      os << "S(" << n_ << "," << l_ << ")";
      break;
    case Kind::unit:
      os << "1";
      break;
    case Kind::dual:
      os << a_->str() << "*";
      break;
    case Kind::tensor:
      os << "(" << a_->str() << " x " << b_->str() << ")";
      break;
  }
  return os.str();
}

static bool atom_equal(const ModuleLabel& a, const ModuleLabel& b) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case ModuleLabel::Kind::verma:
      return a.alpha() == b.alpha();
    case ModuleLabel::Kind::simple:
      return a.n() == b.n() && a.l() == b.l();
    case ModuleLabel::Kind::dual:
      return a.inner() == b.inner();
    default:
      return true;
  }
}

bool operator==(const ModuleLabel& a, const ModuleLabel& b) {
  auto fa = a.factors();
  auto fb = b.factors();
  if (fa.size() != fb.size()) return false;
  for (size_t i = 0; i < fa.size(); ++i)
    if (!atom_equal(fa[i], fb[i])) return false;
  return true;
}

WeightModule::WeightModule(GlobalParams params, ModuleLabel label, std::vector<cplx> weights, Mat e, Mat f)
    : params_(params), label_(std::move(label)), weights_(std::move(weights)), e_(std::move(e)), f_(std::move(f)) {
  const auto n = static_cast<Eigen::Index>(weights_.size());
  if (n == 0 || e_.rows() != n || e_.cols() != n || f_.rows() != n || f_.cols() != n)
    throw domain_error("weight module operator shapes do not match its weight list");
}

Mat WeightModule::H() const {
  Vec d(dim());
  for (int i = 0; i < dim(); ++i) d(i) = weights_[i];
  return d.asDiagonal();
}

Vec WeightModule::K_power_diag(cplx s) const {
  Vec d(dim());
  for (int i = 0; i < dim(); ++i) d(i) = qpow(params_, s * weights_[i]);
  return d;
}

Mat WeightModule::K_power(cplx s) const { return K_power_diag(s).asDiagonal(); }

namespace {

// Verma action truncated to the first `dim` basis vectors.
ModulePtr truncated_verma(const GlobalParams& p, cplx alpha, int dim, ModuleLabel label) {
  const int r = p.r();
  std::vector<cplx> w(dim);
  Mat e = Mat::Zero(dim, dim);
  Mat f = Mat::Zero(dim, dim);
  const cplx b1 = qbracket(p, 1.0);
  for (int i = 0; i < dim; ++i) {
    w[i] = alpha + double(r - 1 - 2 * i);
    if (i > 0) e(i - 1, i) = qbracket(p, double(i)) * qbracket(p, double(i) - alpha) / (b1 * b1);
    if (i + 1 < dim) f(i + 1, i) = 1.0;
  }
  return std::make_shared<const WeightModule>(p, std::move(label), std::move(w), std::move(e), std::move(f));
}

}  // namespace

ModulePtr verma(const GlobalParams& p, cplx alpha) {
  return truncated_verma(p, alpha, p.r(), ModuleLabel::verma(alpha));
}

ModulePtr simple_module(const GlobalParams& p, int n, int l) {
  if (n < 0 || n > p.r() - 2)
    throw domain_error("simple module S_n^{lr} requires 0 <= n <= r-2, got n=" + std::to_string(n) +
                       " at r=" + std::to_string(p.r()));
  const double alpha = double((l - 1) * p.r() + n + 1);
  return truncated_verma(p, alpha, n + 1, ModuleLabel::simple(n, l));
}

ModulePtr unit_module(const GlobalParams& p) {
  return std::make_shared<const WeightModule>(p, ModuleLabel::unit(), std::vector<cplx>{0.0}, Mat::Zero(1, 1),
                                              Mat::Zero(1, 1));
}

ModulePtr dual_module(const ModulePtr& m) {
  if (m->label().kind() == ModuleLabel::Kind::unit) return m;
  // S(E) = -E K^{-1}, S(F) = -K F, S(H) = -H.
  Mat e = -(m->E() * m->K_inv()).transpose();
  Mat f = -(m->K() * m->F()).transpose();
  std::vector<cplx> w(m->weights());
  for (auto& x : w) x = -x;
  return std::make_shared<const WeightModule>(m->params(), ModuleLabel::dual(m->label()), std::move(w), std::move(e),
                                              std::move(f));
}

ModulePtr tensor_module(const ModulePtr& a, const ModulePtr& b) {
  if (!(a->params() == b->params())) throw domain_error("tensor product of modules over different r");
  using Eigen::kroneckerProduct;
  const Mat ia = Mat::Identity(a->dim(), a->dim());
  const Mat ib = Mat::Identity(b->dim(), b->dim());
  Mat e = kroneckerProduct(ia, b->E()).eval() + kroneckerProduct(a->E(), b->K()).eval();
  Mat f = kroneckerProduct(a->F(), ib).eval() + kroneckerProduct(a->K_inv(), b->F()).eval();
  std::vector<cplx> w;
  w.reserve(size_t(a->dim()) * b->dim());
  for (cplx x : a->weights())
    for (cplx y : b->weights()) w.push_back(x + y);
  auto out = std::make_shared<WeightModule>(a->params(), ModuleLabel::tensor(a->label(), b->label()), std::move(w),
                                            std::move(e), std::move(f));
  out->set_factors(a, b);
  return out;
}

ModulePtr module_from_label(const GlobalParams& p, const ModuleLabel& label) {
  switch (label.kind()) {
    case ModuleLabel::Kind::verma:
      return verma(p, label.alpha());
    case ModuleLabel::Kind::simple:
      return simple_module(p, label.n(), label.l());
    case ModuleLabel::Kind::unit:
      return unit_module(p);
    case ModuleLabel::Kind::dual:
      return dual_module(module_from_label(p, label.inner()));
    case ModuleLabel::Kind::tensor:
      return tensor_module(module_from_label(p, label.left()), module_from_label(p, label.right()));
  }
  throw domain_error("unknown module label");
}

static cplx reduce_mod2(cplx z) {
  double re = std::fmod(z.real(), 2.0);
  if (re < 0) re += 2.0;
  return {re, z.imag()};
}

std::optional<cplx> degree(const WeightModule& m, double tol) {
  const cplx base = reduce_mod2(m.weights().front());
  for (cplx w : m.weights()) {
    cplx d = w - base;
    if (dist_to_lattice(d, 2.0) > tol) return std::nullopt;
  }
  // Snap representatives near 2 back to 0.
  if (std::abs(base.real() - 2.0) < tol) return cplx(0.0, base.imag());
  return base;
}

std::vector<Vec> highest_weight_vectors(const WeightModule& m, cplx lambda, double tol) {
  std::vector<int> idx;
  for (int i = 0; i < m.dim(); ++i)
    if (std::abs(m.weights()[i] - lambda) < tol) idx.push_back(i);
  std::vector<Vec> out;
  if (idx.empty()) return out;

  Mat sub(m.dim(), static_cast<Eigen::Index>(idx.size()));
  for (size_t j = 0; j < idx.size(); ++j) sub.col(static_cast<Eigen::Index>(j)) = m.E().col(idx[j]);

  Eigen::JacobiSVD<Mat> svd(sub, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const double smax = s.size() > 0 ? s(0) : 0.0;
  const double thresh = 1e-8 * std::max(smax, 1.0);
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > thresh) ++rank;

  const Mat& v = svd.matrixV();
  for (Eigen::Index k = rank; k < v.cols(); ++k) {
    Vec full = Vec::Zero(m.dim());
    for (size_t j = 0; j < idx.size(); ++j) full(idx[j]) = v(static_cast<Eigen::Index>(j), k);
    out.push_back(std::move(full));
  }
  return out;
}

std::vector<cplx> sorted_weights(std::vector<cplx> w) {
  std::sort(w.begin(), w.end(), [](cplx a, cplx b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return w;
}

std::vector<cplx> character(const WeightModule& m) { return sorted_weights(m.weights()); }

double RelationReport::max() const {
  return std::max({ke, kf, he, hf, ef, e_nil, f_nil, k_is_qh});
}

static double maxabs(const Mat& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

RelationReport check_relations(const WeightModule& m) {
  const auto& p = m.params();
  const cplx q = p.q();
  const Mat E = m.E(), F = m.F(), H = m.H(), K = m.K(), Ki = m.K_inv();
  RelationReport rep;
  rep.ke = maxabs(K * E - q * q * E * K);
  rep.kf = maxabs(K * F - F * K / (q * q));
  rep.he = maxabs(H * E - E * H - 2.0 * E);
  rep.hf = maxabs(H * F - F * H + 2.0 * F);
  rep.ef = maxabs(E * F - F * E - (K - Ki) / (q - 1.0 / q));
  Mat ep = Mat::Identity(m.dim(), m.dim()), fp = ep;
  for (int i = 0; i < p.r(); ++i) {
    ep = ep * E;
    fp = fp * F;
  }
  rep.e_nil = maxabs(ep);
  rep.f_nil = maxabs(fp);
  // K is built as q^H on the weight basis; check K^{-1} really inverts it and
  // that K agrees with q^{H} through the matrix exponential of the diagonal.
  Mat qh = Mat::Zero(m.dim(), m.dim());
  for (int i = 0; i < m.dim(); ++i) qh(i, i) = qpow(p, H(i, i));
  rep.k_is_qh = std::max(maxabs(K - qh), maxabs(K * Ki - Mat::Identity(m.dim(), m.dim())));
  return rep;
}

}  // namespace rtcalc
