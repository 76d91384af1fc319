#pragma once

#include <stdexcept>

#include "rtcalc/repr.hpp"

namespace rtcalc {

/// Thrown when compose() is given maps whose codomain and domain differ.
class composition_error : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// A linear map between weight modules; the matrix is cod.dim x dom.dim.
class Morphism {
public:
  Morphism(ModulePtr dom, ModulePtr cod, Mat matrix);

  const ModulePtr& dom() const { return dom_; }
  const ModulePtr& cod() const { return cod_; }
  const Mat& matrix() const { return matrix_; }

private:
  ModulePtr dom_;
  ModulePtr cod_;
  Mat matrix_;
};

/// Structural equality of modules: same label (up to tensor flattening) and dimension.
bool same_object(const WeightModule& a, const WeightModule& b);

Morphism identity(const ModulePtr& v);

/// g after f; requires f.cod to be the same object as g.dom.
Morphism compose(const Morphism& g, const Morphism& f);

/// Kronecker product, left factor slowest.
Morphism tensor_mor(const Morphism& f, const Morphism& g);

/// Largest entry of M x_dom - x_cod M over x in {E, F, H}.
double linearity_residual(const Morphism& f);

Morphism ev(const ModulePtr& v);        // V* x V -> 1
Morphism coev(const ModulePtr& v);      // 1 -> V x V*
Morphism ev_hat(const ModulePtr& v);    // V x V* -> 1, v x f |-> f(K^{1-r} v)
Morphism coev_hat(const ModulePtr& v);  // 1 -> V* x V

/// p_V : V -> V**, v |-> K^{1-r} <-, v>.
Morphism pivotal(const ModulePtr& v);

/// c_{V,W} = swap o q^{H x H / 2} o exp_q^<({1} E x F) : V x W -> W x V.
Morphism braiding(const ModulePtr& v, const ModulePtr& w);

/// c_{V,W}^{-1} : W x V -> V x W, built from exp_{q^{-1}}^<(-{1} E x F) q^{-H x H / 2}.
Morphism braiding_inv(const ModulePtr& v, const ModulePtr& w);

/// Right partial trace of an endomorphism of rest x traced.
Morphism ptr_right(const Morphism& f, const ModulePtr& rest, const ModulePtr& traced);
/// Left partial trace of an endomorphism of traced x rest.
Morphism ptr_left(const Morphism& f, const ModulePtr& traced, const ModulePtr& rest);
/// Partial traces splitting the domain at its top-level tensor factors.
Morphism ptr_right(const Morphism& f);
Morphism ptr_left(const Morphism& f);

/// theta_V = ptr_right(c_{V,V}).
Morphism twist(const ModulePtr& v);
/// ptr_right(c_{V,V}^{-1}).
Morphism twist_inv(const ModulePtr& v);

struct ScalarValue {
  cplx value;
  double residual;  // max |f - value * id|
};

/// <f> for an endomorphism that acts as a scalar. Throws numerical_error when
/// the residual exceeds tol * max(1, |<f>|).
ScalarValue scalar_of(const Morphism& f, double tol = Tolerances{}.scalar);

}  // namespace rtcalc
