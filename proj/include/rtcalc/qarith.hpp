#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace rtcalc {

using cplx = std::complex<double>;

/// Invalid arguments: out-of-range parameters, excluded colors, malformed input.
class domain_error : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// A numerical check failed (e.g. an endomorphism that should be scalar is not).
class numerical_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Tolerances {
  double primitive = 1e-12;  // identities between single q-powers
  double composite = 1e-9;   // composed quantities
  double scalar = 1e-7;      // residual allowed when extracting <f>
  double guard = 1e-6;       // membership of a color in Z or rZ
};

/// Upper bound on r. Reads RTCALC_MAX_R, defaulting to 16.
int max_r();

/// The root order r and q = exp(i*pi/r). Every module and morphism is built
/// relative to one instance.
class GlobalParams {
public:
  explicit GlobalParams(int r);

  int r() const { return r_; }
  cplx q() const { return q_; }

  friend bool operator==(const GlobalParams& a, const GlobalParams& b) { return a.r_ == b.r_; }

private:
  int r_;
  cplx q_;
};

// q^z = exp(i*pi*z/r), defined directly for complex z.
cplx qpow(const GlobalParams& p, cplx z);

// {z} = q^z - q^{-z}
cplx qbracket(const GlobalParams& p, cplx z);

// [z] = {z}/{1}
cplx qint(const GlobalParams& p, cplx z);

enum class FactorialKind { braced, bracket };

// {n}! or [n]!, with the empty product equal to 1.
cplx qfact(const GlobalParams& p, int n, FactorialKind kind);

// Quantum binomial [l choose k]; requires 0 <= k <= l <= r-1.
cplx qbinom(const GlobalParams& p, int l, int k);

/// Coefficients of the r-truncated q-exponential. sign = +1 gives
/// q^{l(l-1)/2}/[l]!, sign = -1 the same with q replaced by q^{-1}.
std::vector<cplx> qexp_coeffs(const GlobalParams& p, int sign);

/// Distance from z to the lattice step*Z (step > 0).
double dist_to_lattice(cplx z, double step);

bool near_integer(cplx z, double eps);

/// The generic-color guard: z is rejected when it lies within eps of Z.
bool is_excluded_color(const GlobalParams& p, cplx z, double eps);

bool is_finite(cplx z);

std::string format_complex(cplx z);

/// Parses "a", "bi", "a+bi", "a-bi" or "[a,b]".
cplx parse_complex(const std::string& text);

}  // namespace rtcalc
