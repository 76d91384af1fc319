#include "rtcalc/invariant.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <tuple>

namespace rtcalc {

namespace {

// Modules for (color id, orientation), shared so local ops can be cached by pointer.
class ModuleCache {
public:
  explicit ModuleCache(const TangleDiagram& d) : d_(d) {}

  ModulePtr get(const std::string& color, Orientation o) {
    auto key = std::make_pair(color, o);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    ModulePtr m = o == Orientation::up ? module_from_label(d_.params, d_.colors.at(color))
                                       : dual_module(get(color, Orientation::up));
    cache_[key] = m;
    return m;
  }
  ModulePtr get(const StrandEnd& e) { return get(e.color, e.orientation); }

  ModulePtr state(const StrandState& s) {
    ModulePtr acc = unit_module(d_.params);
    bool first = true;
    for (const auto& e : s) {
      acc = first ? get(e) : tensor_module(acc, get(e));
      first = false;
    }
    return acc;
  }

private:
  const TangleDiagram& d_;
  std::map<std::pair<std::string, Orientation>, ModulePtr> cache_;
};

// Morphism of one piece given its input strands (and the cup color).
Morphism piece_morphism(ModuleCache& mc, const Piece& piece, const StrandEnd* a, const StrandEnd* b) {
  switch (piece.kind) {
    case PieceKind::id:
      return identity(mc.get(*a));
    case PieceKind::cross_pos:
      return braiding(mc.get(*a), mc.get(*b));
    case PieceKind::cross_neg:
      return braiding_inv(mc.get(*b), mc.get(*a));
    case PieceKind::twist_pos:
      return twist(mc.get(*a));
    case PieceKind::twist_neg:
      return twist_inv(mc.get(*a));
    case PieceKind::cap_ev:
      return ev(mc.get(*b));
    case PieceKind::cap_ev_hat:
      return ev_hat(mc.get(*a));
    case PieceKind::cup_coev:
      return coev(mc.get(piece.color, Orientation::up));
    case PieceKind::cup_coev_hat:
      return coev_hat(mc.get(piece.color, Orientation::up));
  }
  throw domain_error("unknown piece");
}

long product(const std::vector<int>& dims, size_t from, size_t to) {
  long p = 1;
  for (size_t i = from; i < to; ++i) p *= dims[i];
  return p;
}

}  // namespace

ModulePtr strand_module(const TangleDiagram& d, const StrandEnd& e) {
  ModuleCache mc(d);
  return mc.get(e);
}

ModulePtr state_module(const TangleDiagram& d, const StrandState& s) {
  ModuleCache mc(d);
  return mc.state(s);
}

Morphism eval_diagram(const TangleDiagram& d) {
  require_valid(d);
  ModuleCache mc(d);
  ModulePtr dom = mc.state(d.bottom);
  std::vector<int> dims;
  for (const auto& e : d.bottom) dims.push_back(mc.get(e)->dim());

  using Key = std::tuple<PieceKind, const WeightModule*, const WeightModule*>;
  std::map<Key, Mat> local_cache;

  Mat state = Mat::Identity(dom->dim(), dom->dim());
  StrandState strands = d.bottom;
  for (const auto& slice : d.slices) {
    size_t pos = 0;
    for (const auto& piece : slice) {
      const int n_in = piece_inputs(piece.kind);
      if (piece.kind == PieceKind::id) {
        ++pos;
        continue;
      }
      const StrandEnd* a = n_in > 0 ? &strands[pos] : nullptr;
      const StrandEnd* b = n_in > 1 ? &strands[pos + 1] : nullptr;
      const WeightModule* ka = a ? mc.get(*a).get() : mc.get(piece.color, Orientation::up).get();
      const WeightModule* kb = b ? mc.get(*b).get() : nullptr;
      Key key{piece.kind, ka, kb};
      auto it = local_cache.find(key);
      if (it == local_cache.end()) it = local_cache.emplace(key, piece_morphism(mc, piece, a, b).matrix()).first;
      const Mat& L = it->second;

      const long A = product(dims, 0, pos);
      const long B = product(dims, pos, pos + n_in);
      const long C = product(dims, pos + n_in, dims.size());
      const long B2 = L.rows();
      const long rows = A * B2 * C;
      Mat next(rows, state.cols());
      const Mat Lt = L.transpose();
      for (long col = 0; col < state.cols(); ++col) {
        for (long ai = 0; ai < A; ++ai) {
          Eigen::Map<const Mat> in(state.data() + col * state.rows() + ai * B * C, C, B);
          Eigen::Map<Mat> out(next.data() + col * rows + ai * B2 * C, C, B2);
          out.noalias() = in * Lt;
        }
      }
      state = std::move(next);

      // Update strand bookkeeping.
      StrandState produced;
      std::vector<int> produced_dims;
      switch (piece.kind) {
        case PieceKind::cross_pos:
        case PieceKind::cross_neg:
          produced = {*b, *a};
          break;
        case PieceKind::twist_pos:
        case PieceKind::twist_neg:
          produced = {*a};
          break;
        case PieceKind::cup_coev:
          produced = {{piece.color, Orientation::up}, {piece.color, Orientation::down}};
          break;
        case PieceKind::cup_coev_hat:
          produced = {{piece.color, Orientation::down}, {piece.color, Orientation::up}};
          break;
        default:
          break;
      }
      for (const auto& e : produced) produced_dims.push_back(mc.get(e)->dim());
      strands.erase(strands.begin() + pos, strands.begin() + pos + n_in);
      strands.insert(strands.begin() + pos, produced.begin(), produced.end());
      dims.erase(dims.begin() + pos, dims.begin() + pos + n_in);
      dims.insert(dims.begin() + pos, produced_dims.begin(), produced_dims.end());
      pos += produced.size();
    }
  }
  return {dom, mc.state(strands), std::move(state)};
}

Morphism eval_diagram_bruteforce(const TangleDiagram& d) {
  require_valid(d);
  ModuleCache mc(d);
  std::vector<Morphism> layers;
  StrandState strands = d.bottom;
  for (const auto& slice : d.slices) {
    std::optional<Morphism> layer;
    size_t pos = 0;
    for (const auto& piece : slice) {
      const int n_in = piece_inputs(piece.kind);
      const StrandEnd* a = n_in > 0 ? &strands[pos] : nullptr;
      const StrandEnd* b = n_in > 1 ? &strands[pos + 1] : nullptr;
      Morphism m = piece_morphism(mc, piece, a, b);
      layer = layer ? tensor_mor(*layer, m) : m;
      pos += n_in;
    }
    if (!layer) layer = identity(unit_module(d.params));
    layers.push_back(*layer);
    strands = propagate(strands, slice, d.colors);
  }
  if (layers.empty()) return identity(mc.state(d.bottom));
  Morphism acc = layers.back();
  for (int i = int(layers.size()) - 2; i >= 0; --i) acc = compose(acc, layers[i]);
  return acc;
}

cplx qdim(const GlobalParams& p, const ModuleLabel& v) {
  auto m = module_from_label(p, v);
  return compose(ev_hat(m), coev(m)).matrix()(0, 0);
}

cplx s_prime(const GlobalParams& p, cplx beta, cplx alpha) {
  const double r = p.r();
  if (dist_to_lattice(alpha, r) < Tolerances{}.guard) {
    const int z = int(std::lround(alpha.real() / r));
    const double sign = ((p.r() + 1) * z) % 2 == 0 ? 1.0 : -1.0;
    return qpow(p, beta * r * double(z)) * sign * r;
  }
  return qpow(p, beta * alpha) * qbracket(p, alpha * r) / qbracket(p, alpha);
}

cplx s_prime_engine(const GlobalParams& p, cplx beta, cplx alpha) {
  ColorTable colors;
  colors.add("a", ModuleLabel::verma(alpha));
  colors.add("b", ModuleLabel::verma(beta));
  auto t = from_braid(p, colors, {1, 1}, 2, {"a", "b"});
  return scalar_of(eval_diagram(close_braid(t, 1))).value;
}

cplx mod_qdim(const GlobalParams& p, cplx eta, cplx alpha, double guard) {
  if (is_excluded_color(p, eta, guard))
    throw domain_error("eta = " + format_complex(eta) + " lies within " + std::to_string(guard) + " of Z");
  if (is_excluded_color(p, alpha, guard))
    throw domain_error("alpha = " + format_complex(alpha) + " lies within " + std::to_string(guard) + " of Z");
  return s_prime(p, alpha, eta) / s_prime(p, eta, alpha);
}

cplx eta_ratio(const GlobalParams& p, cplx eta, cplx eta_prime) {
  const double pi = std::acos(-1.0), r = p.r();
  return std::sin(pi * eta) * std::sin(pi * eta_prime / r) / (std::sin(pi * eta / r) * std::sin(pi * eta_prime));
}

cplx eta_ratio_reference(const GlobalParams& p, cplx eta, cplx eta_prime) {
  const double pi = std::acos(-1.0), r = p.r();
  return std::sin(pi * eta / r) * std::sin(pi * eta_prime) / (std::sin(pi * eta) * std::sin(pi * eta_prime / r));
}

std::string fnv1a_hex(const std::string& s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

TangleDiagram cut_braid(const TangleDiagram& braid, int component) {
  if (!braid.braid) throw domain_error("cut_braid needs a braid tangle");
  auto cycles = braid_cycles(*braid.braid);
  if (component < 0 || component >= int(cycles.size()))
    throw domain_error("cut component " + std::to_string(component) + " out of range 0.." +
                       std::to_string(cycles.size() - 1));
  return close_braid(braid, cycles[component].front() + 1);
}

std::vector<int> admissible_components(const TangleDiagram& braid, double guard) {
  if (!braid.braid) throw domain_error("admissible_components needs a braid tangle");
  auto cycles = braid_cycles(*braid.braid);
  std::vector<int> out;
  for (size_t c = 0; c < cycles.size(); ++c) {
    const auto& label = braid.colors.at(braid.bottom[cycles[c].front()].color);
    if (label.kind() == ModuleLabel::Kind::verma && !is_excluded_color(braid.params, label.alpha(), guard))
      out.push_back(int(c));
  }
  return out;
}

InvariantResult renormalized(const TangleDiagram& d, cplx eta, std::optional<int> cut, const Tolerances& tol) {
  InvariantResult res;
  res.eta = eta;
  res.r = d.params.r();
  res.diagram_hash = fnv1a_hex(serialize(d));
  TangleDiagram open;
  if (d.braid) {
    auto adm = admissible_components(d, tol.guard);
    if (cut) {
      if (std::find(adm.begin(), adm.end(), *cut) == adm.end()) {
        auto cycles = braid_cycles(*d.braid);
        if (*cut < 0 || *cut >= int(cycles.size()))
          throw domain_error("cut component " + std::to_string(*cut) + " out of range");
        throw domain_error("cut component " + std::to_string(*cut) + " is not colored by a generic Verma module");
      }
      res.cut_component = *cut;
    } else {
      if (adm.empty()) throw domain_error("no generic color: every component is simple or has a color near Z");
      res.cut_component = adm.front();
    }
    open = cut_braid(d, res.cut_component);
  } else {
    if (d.bottom.size() != 1 || d.top != d.bottom)
      throw domain_error("renormalized needs a braid or a (1,1)-tangle; cut closed diagrams into (1,1) form first");
    if (cut && *cut != 0) throw domain_error("a (1,1)-tangle has a single cut position 0");
    const auto& label = d.colors.at(d.bottom[0].color);
    if (label.kind() != ModuleLabel::Kind::verma || is_excluded_color(d.params, label.alpha(), tol.guard))
      throw domain_error("no generic color: the open strand is colored " + label.str());
    open = d;
  }
  res.cut_id = open.bottom[0].color;
  res.cut_color = open.colors.at(res.cut_id);
  const cplx dq = mod_qdim(d.params, eta, res.cut_color.alpha(), tol.guard);
  ScalarValue s = scalar_of(eval_diagram(open), tol.scalar);
  res.value = dq * s.value;
  res.scalar_residual = s.residual;
  if (!is_finite(res.value)) throw numerical_error("renormalized value is not finite");
  return res;
}

cplx twist_scalar(const GlobalParams& p, const ModuleLabel& v) {
  return scalar_of(twist(module_from_label(p, v))).value;
}

cplx deframed(const TangleDiagram& d, cplx eta, const Tolerances& tol) {
  std::optional<ModuleLabel> color;
  for (const auto& e : d.colors.entries()) {
    bool used = false;
    for (const auto& s : d.bottom) used = used || s.color == e.id;
    for (const auto& slice : d.slices)
      for (const auto& pc : slice) used = used || pc.color == e.id;
    if (!used) continue;
    if (color && !(*color == e.label)) throw domain_error("deframing needs every component to carry one color");
    color = e.label;
  }
  if (!color || color->kind() != ModuleLabel::Kind::verma) throw domain_error("deframing needs a Verma color");
  const int wr = components(d).writhe;
  const cplx theta = twist_scalar(d.params, *color);
  return renormalized(d, eta, std::nullopt, tol).value * std::pow(theta, -wr);
}

TwoTwoTangle random_two_two(const GlobalParams& p, const ModuleLabel& left, const ModuleLabel& right, uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::vector<ModuleLabel> palette = {ModuleLabel::verma(0.23), ModuleLabel::verma({0.61, 0.15}),
                                            ModuleLabel::verma(1.37)};
  const bool same = left == right;
  for (;;) {
    const int n = std::uniform_int_distribution<int>(2, 4)(rng);
    const int len = std::uniform_int_distribution<int>(0, 8)(rng);
    std::vector<int> word;
    for (int i = 0; i < len; ++i) {
      int g = std::uniform_int_distribution<int>(1, n - 1)(rng);
      word.push_back(std::uniform_int_distribution<int>(0, 1)(rng) ? g : -g);
    }
    auto perm = braid_permutation(word, n);
    std::vector<int> inv(n);
    for (int i = 0; i < n; ++i) inv[perm[i]] = i;
    if (!same) {
      int t = perm[0];
      while (t >= 2) t = perm[t];
      if (t != 0) continue;
    }
    // Closing top position j >= 2 onto bottom j joins those strands.
    std::vector<int> group(n);
    std::iota(group.begin(), group.end(), 0);
    std::function<int(int)> find = [&](int x) { return group[x] == x ? x : group[x] = find(group[x]); };
    for (int j = 2; j < n; ++j) group[find(inv[j])] = find(j);
    ColorTable colors;
    colors.add("L", left);
    colors.add(same ? "L" : "R", right);
    std::vector<std::string> strand_colors(n);
    std::map<int, std::string> group_color;
    int next_palette = 0;
    for (int i = 0; i < n; ++i) {
      int g = find(i);
      if (i == 0) group_color[g] = "L";
      if (i == 1) group_color[g] = same ? "L" : "R";
    }
    for (int i = 0; i < n; ++i) {
      int g = find(i);
      if (!group_color.count(g)) {
        std::string id = "p" + std::to_string(next_palette % palette.size());
        colors.add(id, palette[next_palette % palette.size()]);
        ++next_palette;
        group_color[g] = id;
      }
      strand_colors[i] = group_color[g];
    }
    auto braid = from_braid(p, colors, word, n, strand_colors);
    return {braid, close_braid_right(braid, 2)};
  }
}

AmbiReport check_ambidextrous(const TwoTwoTangle& t) {
  const auto& d = t.diagram;
  if (d.bottom.size() != 2) throw domain_error("check_ambidextrous needs a (2,2)-tangle");
  Morphism f = eval_diagram(d);
  auto m0 = f.dom()->left_factor();
  auto m1 = f.dom()->right_factor();
  Morphism l = ptr_left(f, m0, m1);
  Morphism r = ptr_right(f, m0, m1);
  const double scale = std::max({1.0, l.matrix().cwiseAbs().maxCoeff(), r.matrix().cwiseAbs().maxCoeff()});
  AmbiReport rep;
  rep.deviation = (l.matrix() - r.matrix()).cwiseAbs().maxCoeff() / scale;
  rep.left = l.matrix().trace() / double(l.matrix().rows());
  rep.right = r.matrix().trace() / double(r.matrix().rows());
  return rep;
}

CheckReport connect_sum_check(const TangleDiagram& a, const TangleDiagram& b, cplx eta) {
  if (!a.braid || !b.braid) throw domain_error("connect_sum_check needs braid tangles");
  const auto& label = a.colors.at(a.bottom.back().color);
  if (label.kind() != ModuleLabel::Kind::verma) throw domain_error("connect sum needs a Verma-colored join");
  auto sum = connect_sum_braid(a, b);
  CheckReport rep;
  rep.lhs = mod_qdim(a.params, eta, label.alpha()) * renormalized(sum, eta).value;
  rep.rhs = renormalized(a, eta).value * renormalized(b, eta).value;
  rep.residual = std::abs(rep.lhs - rep.rhs) / std::max(1.0, std::abs(rep.rhs));
  return rep;
}

DecomposeReport decompose_check(const GlobalParams& p, cplx eta) {
  if (dist_to_lattice(eta, 0.5) < Tolerances{}.guard)
    throw domain_error("decompose_check needs eta outside Z/2, got " + format_complex(eta));
  auto v = verma(p, eta);
  auto vv = tensor_module(v, v);
  DecomposeReport rep;
  std::vector<cplx> expected;
  for (int i = 0; i < p.r(); ++i) {
    expected.push_back(2.0 * eta + 2.0 * double(i));
    rep.counts.push_back(int(highest_weight_vectors(*vv, expected.back()).size()));
  }
  std::vector<cplx> seen;
  for (cplx w : character(*vv)) {
    bool known = false;
    for (cplx e : expected) known = known || std::abs(e - w) < 1e-9;
    for (cplx s : seen) known = known || std::abs(s - w) < 1e-9;
    if (known) continue;
    seen.push_back(w);
    rep.stray += int(highest_weight_vectors(*vv, w).size());
  }
  return rep;
}

cplx trefoil_formula(const GlobalParams& p, cplx alpha, TrefoilVariant v) {
  const int r = p.r();
  const cplx a = alpha + double(r - 1);
  const cplx pref = qpow(p, 1.5 * a * a + a * double(1 - r));
  cplx sum = 0;
  for (int i = 0; i < r; ++i) {
    const double c = v == TrefoilVariant::cut_example ? 1.0 : double(i);
    cplx term = qpow(p, double(i) * (-3.0 * alpha - double(r) + c));
    for (int j = 0; j < i; ++j) term *= qbracket(p, double(i - j) - alpha);
    sum += term;
  }
  return pref * sum;
}

Figure8Formula figure8_formula(const GlobalParams& p, cplx alpha) {
  const int r = p.r();
  const double rm = r - 1;
  auto q = [&](cplx z) { return qpow(p, z); };
  auto br = [&](cplx z) { return qbracket(p, z); };
  auto fact = [&](int n) { return n < 0 ? cplx(0) : qfact(p, n, FactorialKind::braced); };
  Figure8Formula out{0.0, 0};
  for (int i = 0; i <= r - 1; ++i)
    for (int j = 0; j <= i; ++j)
      for (int k = 0; k <= r - i; ++k) {
        const int l = r - 1 - (i + k);
        cplx t = q((-alpha + rm - 2.0 * i) * (alpha - rm) / 2.0);
        t *= q(-(-alpha + rm - 2.0 * (i - j)) * double(i + r - 1 - j));
        t *= q(-(-alpha + rm - 2.0 * (i - j + k)) * (alpha + rm - 2.0 * (i + k)) / 2.0);
        t *= q(j * (j - 1) / 2.0) * q(k * (k - 1) / 2.0) * q((i + k - r + 1) * (i + k - r) / 2.0);
        cplx p1 = 1, p2 = 1, p3 = 1;
        for (int x = r - 1 - j; x <= r - 1; ++x) p1 *= br(double(x)) * br(double(x) - alpha);
        for (int y = i - j; y <= i - j + k; ++y) p2 *= br(double(y)) * br(double(y) + alpha);
        bool has_z = false;
        for (int z = i + k; z <= r - 1; ++z) {
          p3 *= br(double(z)) * br(double(z) - alpha);
          has_z = true;
        }
        const cplx d1 = fact(j), d2 = fact(k), d3 = has_z ? fact(l) : cplx(1);
        if (std::abs(d1) < 1e-12 || std::abs(d2) < 1e-12 || std::abs(d3) < 1e-12) {
          ++out.skipped_terms;
          continue;
        }
        out.value += t * (p1 / d1) * (p2 / d2) * (p3 / d3);
      }
  return out;
}

}  // namespace rtcalc
