#include "rtcalc/qarith.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <regex>
#include <sstream>

namespace rtcalc {

int max_r() {
  if (const char* env = std::getenv("RTCALC_MAX_R")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 2) return static_cast<int>(v);
  }
  return 16;
}

GlobalParams::GlobalParams(int r) : r_(r) {
  if (r < 2) throw domain_error("r must be >= 2, got " + std::to_string(r));
  if (r > max_r())
    throw domain_error("r = " + std::to_string(r) + " exceeds the cap " + std::to_string(max_r()) +
                       " (set RTCALC_MAX_R to raise it)");
  q_ = std::polar(1.0, std::numbers::pi / r);
}

cplx qpow(const GlobalParams& p, cplx z) {
  return std::exp(cplx(0.0, std::numbers::pi / p.r()) * z);
}

cplx qbracket(const GlobalParams& p, cplx z) { return qpow(p, z) - qpow(p, -z); }

cplx qint(const GlobalParams& p, cplx z) { return qbracket(p, z) / qbracket(p, 1.0); }

cplx qfact(const GlobalParams& p, int n, FactorialKind kind) {
  if (n < 0) throw domain_error("factorial of negative integer");
  cplx acc = 1.0;
  for (int i = 1; i <= n; ++i)
    acc *= (kind == FactorialKind::braced) ? qbracket(p, i) : qint(p, i);
  return acc;
}

cplx qbinom(const GlobalParams& p, int l, int k) {
  if (k < 0 || l < k || l > p.r() - 1)
    throw domain_error("qbinom requires 0 <= k <= l <= r-1, got l=" + std::to_string(l) +
                       ", k=" + std::to_string(k));
  return qfact(p, l, FactorialKind::bracket) /
         (qfact(p, k, FactorialKind::bracket) * qfact(p, l - k, FactorialKind::bracket));
}

std::vector<cplx> qexp_coeffs(const GlobalParams& p, int sign) {
  if (sign != 1 && sign != -1) throw domain_error("qexp_coeffs sign must be +1 or -1");
  std::vector<cplx> out(p.r());
  // [l] is invariant under q -> q^{-1}, so only the q-power changes with sign.
  for (int l = 0; l < p.r(); ++l)
    out[l] = qpow(p, sign * 0.5 * l * (l - 1)) / qfact(p, l, FactorialKind::bracket);
  return out;
}

double dist_to_lattice(cplx z, double step) {
  double re = z.real() / step;
  double d_re = std::abs(re - std::round(re)) * step;
  return std::hypot(d_re, z.imag());
}

bool near_integer(cplx z, double eps) { return dist_to_lattice(z, 1.0) < eps; }

bool is_excluded_color(const GlobalParams&, cplx z, double eps) {
  // rZ is a subset of Z, so the integer test covers both.
  return near_integer(z, eps);
}

bool is_finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

std::string format_complex(cplx z) {
  std::ostringstream os;
  os.precision(12);
  os << z.real();
  if (z.imag() != 0.0) os << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
  return os.str();
}

cplx parse_complex(const std::string& text) {
  static const std::string num = R"((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)";
  static const std::regex real_re("^\\s*([+-]?" + num + ")\\s*$");
  static const std::regex imag_re("^\\s*([+-]?)(" + num + ")?\\s*i\\s*$");
  static const std::regex full_re("^\\s*([+-]?" + num + ")\\s*([+-])\\s*(" + num + ")?\\s*i\\s*$");
  static const std::regex pair_re("^\\s*\\[\\s*([+-]?" + num + ")\\s*,\\s*([+-]?" + num + ")\\s*\\]\\s*$");
  std::smatch m;
  auto d = [](const std::string& s) { return std::stod(s); };
  if (std::regex_match(text, m, real_re)) return {d(m[1]), 0.0};
  if (std::regex_match(text, m, pair_re)) return {d(m[1]), d(m[2])};
  if (std::regex_match(text, m, imag_re)) {
    double im = m[2].matched ? d(m[2]) : 1.0;
    return {0.0, m[1] == "-" ? -im : im};
  }
  if (std::regex_match(text, m, full_re)) {
    double im = m[3].matched ? d(m[3]) : 1.0;
    return {d(m[1]), m[2] == "-" ? -im : im};
  }
  throw domain_error("cannot parse complex number '" + text + "' (use a+bi or [a,b])");
}

}  // namespace rtcalc
