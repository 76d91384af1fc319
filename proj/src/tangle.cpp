#include "rtcalc/tangle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace rtcalc {

using ojson = nlohmann::ordered_json;

ColorTable::ColorTable(std::vector<ColorEntry> entries) {
  for (auto& e : entries) add(e.id, e.label);
}

void ColorTable::add(const std::string& id, const ModuleLabel& label) {
  if (label.kind() != ModuleLabel::Kind::verma && label.kind() != ModuleLabel::Kind::simple)
    throw domain_error("color '" + id + "' must be a Verma or simple module, got " + label.str());
  for (const auto& e : entries_) {
    if (e.id != id) continue;
    if (e.label == label) return;
    throw domain_error("color id '" + id + "' defined twice with different modules");
  }
  entries_.push_back({id, label});
}

const ModuleLabel& ColorTable::at(const std::string& id) const {
  for (const auto& e : entries_)
    if (e.id == id) return e.label;
  throw domain_error("unknown color id '" + id + "'");
}

bool ColorTable::contains(const std::string& id) const {
  return std::any_of(entries_.begin(), entries_.end(), [&](const ColorEntry& e) { return e.id == id; });
}

int piece_inputs(PieceKind k) {
  switch (k) {
    case PieceKind::cross_pos:
    case PieceKind::cross_neg:
    case PieceKind::cap_ev:
    case PieceKind::cap_ev_hat:
      return 2;
    case PieceKind::cup_coev:
    case PieceKind::cup_coev_hat:
      return 0;
    default:
      return 1;
  }
}

int piece_outputs(PieceKind k) {
  switch (k) {
    case PieceKind::cross_pos:
    case PieceKind::cross_neg:
    case PieceKind::cup_coev:
    case PieceKind::cup_coev_hat:
      return 2;
    case PieceKind::cap_ev:
    case PieceKind::cap_ev_hat:
      return 0;
    default:
      return 1;
  }
}

std::string piece_op_name(PieceKind k) {
  switch (k) {
    case PieceKind::id: return "id";
    case PieceKind::cross_pos: return "xp";
    case PieceKind::cross_neg: return "xn";
    case PieceKind::cap_ev: return "capL";
    case PieceKind::cap_ev_hat: return "capR";
    case PieceKind::cup_coev: return "cupL";
    case PieceKind::cup_coev_hat: return "cupR";
    case PieceKind::twist_pos: return "twp";
    case PieceKind::twist_neg: return "twn";
  }
  return "?";
}

PieceKind piece_from_op_name(const std::string& op) {
  static const std::map<std::string, PieceKind> table = {
      {"id", PieceKind::id},          {"xp", PieceKind::cross_pos},     {"xn", PieceKind::cross_neg},
      {"capL", PieceKind::cap_ev},    {"capR", PieceKind::cap_ev_hat},  {"cupL", PieceKind::cup_coev},
      {"cupR", PieceKind::cup_coev_hat}, {"twp", PieceKind::twist_pos}, {"twn", PieceKind::twist_neg}};
  auto it = table.find(op);
  if (it == table.end()) throw domain_error("unknown slice op '" + op + "'");
  return it->second;
}

namespace {

const char* orient_name(Orientation o) { return o == Orientation::up ? "up" : "down"; }

Orientation flip(Orientation o) { return o == Orientation::up ? Orientation::down : Orientation::up; }

// Applies one slice, appending errors instead of throwing. Returns the output
// state (best effort when errors occur).
StrandState apply_slice(const StrandState& in, const Slice& s, const ColorTable& colors, int slice_index,
                        std::vector<TypingError>& errors) {
  StrandState out;
  size_t pos = 0;
  auto err = [&](int p, const std::string& msg) { errors.push_back({slice_index, p, msg}); };
  for (const auto& piece : s) {
    const int n_in = piece_inputs(piece.kind);
    if (pos + n_in > in.size()) {
      err(int(pos), "slice consumes more strands than present (" + std::to_string(in.size()) + ")");
      return out;
    }
    const StrandEnd* a = n_in > 0 ? &in[pos] : nullptr;
    const StrandEnd* b = n_in > 1 ? &in[pos + 1] : nullptr;
    switch (piece.kind) {
      case PieceKind::id:
      case PieceKind::twist_pos:
      case PieceKind::twist_neg:
        out.push_back(*a);
        break;
      case PieceKind::cross_pos:
      case PieceKind::cross_neg:
        out.push_back(*b);
        out.push_back(*a);
        break;
      case PieceKind::cap_ev:
      case PieceKind::cap_ev_hat: {
        const bool left = piece.kind == PieceKind::cap_ev;
        const Orientation first = left ? Orientation::down : Orientation::up;
        if (a->orientation != first || b->orientation != flip(first))
          err(int(pos), std::string("orientation mismatch: ") + piece_op_name(piece.kind) + " needs (" +
                            orient_name(first) + "," + orient_name(flip(first)) + "), got (" +
                            orient_name(a->orientation) + "," + orient_name(b->orientation) + ")");
        if (a->color != b->color)
          err(int(pos), "color mismatch: cap joins '" + a->color + "' and '" + b->color + "'");
        break;
      }
      case PieceKind::cup_coev:
      case PieceKind::cup_coev_hat: {
        if (!colors.contains(piece.color)) {
          err(int(pos), "cup has unknown color '" + piece.color + "'");
        }
        const bool left = piece.kind == PieceKind::cup_coev;
        const Orientation first = left ? Orientation::up : Orientation::down;
        out.push_back({piece.color, first});
        out.push_back({piece.color, flip(first)});
        break;
      }
    }
    pos += n_in;
  }
  if (pos != in.size())
    err(int(pos), "slice covers " + std::to_string(pos) + " of " + std::to_string(in.size()) + " strands");
  return out;
}

std::string describe(const std::vector<TypingError>& errors) {
  std::ostringstream os;
  os << "invalid diagram:";
  for (const auto& e : errors) {
    os << " [slice " << e.slice << ", position " << e.position << "] " << e.message << ";";
  }
  return os.str();
}

}  // namespace

StrandState propagate(const StrandState& in, const Slice& s, const ColorTable& colors) {
  std::vector<TypingError> errors;
  auto out = apply_slice(in, s, colors, 0, errors);
  if (!errors.empty()) throw domain_error(describe(errors));
  return out;
}

std::vector<TypingError> validate(const TangleDiagram& d) {
  std::vector<TypingError> errors;
  for (const auto& e : d.colors.entries()) {
    try {
      if (e.label.kind() == ModuleLabel::Kind::simple) simple_module(d.params, e.label.n(), e.label.l());
    } catch (const domain_error& ex) {
      errors.push_back({-1, -1, "color '" + e.id + "': " + ex.what()});
    }
  }
  for (size_t i = 0; i < d.bottom.size(); ++i)
    if (!d.colors.contains(d.bottom[i].color))
      errors.push_back({-1, int(i), "bottom strand has unknown color '" + d.bottom[i].color + "'"});
  StrandState state = d.bottom;
  for (size_t s = 0; s < d.slices.size(); ++s) state = apply_slice(state, d.slices[s], d.colors, int(s), errors);
  if (errors.empty() && state != d.top) errors.push_back({int(d.slices.size()), -1, "propagated state does not match top"});
  return errors;
}

void require_valid(const TangleDiagram& d) {
  auto errors = validate(d);
  if (!errors.empty()) throw domain_error(describe(errors));
}

int crossing_sign(PieceKind k, Orientation a, Orientation b) {
  const int base = k == PieceKind::cross_pos ? 1 : -1;
  return a == b ? base : -base;
}

DiagramInfo components(const TangleDiagram& d) {
  require_valid(d);
  // Node ids: one per strand position per level, assigned level by level.
  std::vector<int> parent;
  auto make = [&]() {
    parent.push_back(int(parent.size()));
    return int(parent.size()) - 1;
  };
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };

  struct Event {
    int node_a, node_b;  // crossing input nodes, or the single node of a twist
    int sign;
  };
  std::vector<Event> events;
  std::vector<int> boundary;
  std::vector<std::string> node_color;

  StrandState state = d.bottom;
  std::vector<int> nodes;
  for (const auto& s : d.bottom) {
    nodes.push_back(make());
    node_color.push_back(s.color);
    boundary.push_back(nodes.back());
  }
  DiagramInfo info;
  for (const auto& slice : d.slices) {
    std::vector<int> next;
    StrandState next_state;
    size_t pos = 0;
    for (const auto& piece : slice) {
      const int n_in = piece_inputs(piece.kind);
      auto fresh = [&](const StrandEnd& e) {
        int id = make();
        node_color.push_back(e.color);
        next.push_back(id);
        next_state.push_back(e);
        return id;
      };
      switch (piece.kind) {
        case PieceKind::id:
          unite(nodes[pos], fresh(state[pos]));
          break;
        case PieceKind::twist_pos:
        case PieceKind::twist_neg:
          unite(nodes[pos], fresh(state[pos]));
          events.push_back({nodes[pos], nodes[pos], piece.kind == PieceKind::twist_pos ? 1 : -1});
          break;
        case PieceKind::cross_pos:
        case PieceKind::cross_neg: {
          int sign = crossing_sign(piece.kind, state[pos].orientation, state[pos + 1].orientation);
          events.push_back({nodes[pos], nodes[pos + 1], sign});
          ++info.crossings;
          int o0 = fresh(state[pos + 1]);
          int o1 = fresh(state[pos]);
          unite(nodes[pos], o1);
          unite(nodes[pos + 1], o0);
          break;
        }
        case PieceKind::cap_ev:
        case PieceKind::cap_ev_hat:
          unite(nodes[pos], nodes[pos + 1]);
          break;
        case PieceKind::cup_coev:
        case PieceKind::cup_coev_hat: {
          const bool left = piece.kind == PieceKind::cup_coev;
          Orientation first = left ? Orientation::up : Orientation::down;
          int a = fresh({piece.color, first});
          int b = fresh({piece.color, flip(first)});
          unite(a, b);
          break;
        }
      }
      pos += n_in;
    }
    nodes = std::move(next);
    state = std::move(next_state);
  }
  for (int n : nodes) boundary.push_back(n);

  std::map<int, int> root_to_comp;
  for (int n = 0; n < int(parent.size()); ++n) {
    int root = find(n);
    auto it = root_to_comp.find(root);
    if (it == root_to_comp.end()) {
      root_to_comp[root] = int(info.components.size());
      info.components.push_back({node_color[n], false, 0, n});
    } else if (info.components[it->second].color != node_color[n]) {
      throw domain_error("mixed colors on one component: '" + info.components[it->second].color + "' and '" +
                         node_color[n] + "'");
    }
  }
  for (int n : boundary) info.components[root_to_comp[find(n)]].open = true;
  for (const auto& e : events) {
    info.writhe += e.sign;
    if (find(e.node_a) == find(e.node_b)) info.components[root_to_comp[find(e.node_a)]].self_writhe += e.sign;
  }
  return info;
}

std::vector<int> braid_permutation(const std::vector<int>& word, int strands) {
  // at[p] = bottom strand currently at position p
  std::vector<int> at(strands);
  std::iota(at.begin(), at.end(), 0);
  for (int letter : word) {
    int p = std::abs(letter) - 1;
    std::swap(at[p], at[p + 1]);
  }
  std::vector<int> perm(strands);
  for (int p = 0; p < strands; ++p) perm[at[p]] = p;
  return perm;
}

std::vector<std::vector<int>> braid_cycles(const BraidWord& b) {
  auto perm = braid_permutation(b.letters, b.strands);
  std::vector<bool> seen(b.strands, false);
  std::vector<std::vector<int>> out;
  for (int i = 0; i < b.strands; ++i) {
    if (seen[i]) continue;
    std::vector<int> cyc;
    for (int j = i; !seen[j]; j = perm[j]) {
      seen[j] = true;
      cyc.push_back(j);
    }
    std::sort(cyc.begin(), cyc.end());
    out.push_back(std::move(cyc));
  }
  return out;
}

TangleDiagram from_braid(const GlobalParams& p, const ColorTable& colors, const std::vector<int>& word, int strands,
                         const std::vector<std::string>& strand_colors, const std::vector<Orientation>& orientations) {
  if (strands < 1) throw domain_error("braid needs at least one strand");
  if (int(strand_colors.size()) != strands)
    throw domain_error("braid on " + std::to_string(strands) + " strands needs " + std::to_string(strands) +
                       " strand colors, got " + std::to_string(strand_colors.size()));
  if (!orientations.empty() && int(orientations.size()) != strands)
    throw domain_error("orientation list length does not match strand count");
  TangleDiagram d{p, colors, {}, {}, {}, BraidWord{word, strands}};
  for (int i = 0; i < strands; ++i)
    d.bottom.push_back({strand_colors[i], orientations.empty() ? Orientation::up : orientations[i]});
  for (int letter : word) {
    if (letter == 0 || std::abs(letter) >= strands)
      throw domain_error("bad braid letter " + std::to_string(letter) + " for " + std::to_string(strands) +
                         " strands");
    const int pos = std::abs(letter) - 1;
    Slice s(pos, Piece{});
    s.push_back({letter > 0 ? PieceKind::cross_pos : PieceKind::cross_neg, {}});
    s.resize(strands - 1, Piece{});
    d.slices.push_back(std::move(s));
  }
  StrandState state = d.bottom;
  for (const auto& s : d.slices) state = propagate(state, s, d.colors);
  d.top = state;
  require_valid(d);
  return d;
}

namespace {

const BraidWord& require_braid(const TangleDiagram& t) {
  if (!t.braid) throw domain_error("operation needs a braid tangle (from from_braid)");
  for (const auto& s : t.bottom)
    if (s.orientation != Orientation::up) throw domain_error("braid closure needs all strands oriented up");
  return *t.braid;
}

std::vector<std::string> bottom_colors(const TangleDiagram& t) {
  std::vector<std::string> c;
  for (const auto& s : t.bottom) c.push_back(s.color);
  return c;
}

}  // namespace

TangleDiagram conjugate_to_front(const TangleDiagram& t, int k) {
  const auto& b = require_braid(t);
  if (k < 1 || k > b.strands)
    throw domain_error("strand " + std::to_string(k) + " out of range 1.." + std::to_string(b.strands));
  // g = s_1 s_2 ... s_{k-1} carries bottom position 1 to position k.
  std::vector<int> g, word;
  for (int i = 1; i < k; ++i) g.push_back(i);
  word = g;
  word.insert(word.end(), b.letters.begin(), b.letters.end());
  for (int i = k - 1; i >= 1; --i) word.push_back(-i);
  auto perm_g = braid_permutation(g, b.strands);
  auto old = bottom_colors(t);
  std::vector<std::string> colors(b.strands);
  for (int i = 0; i < b.strands; ++i) colors[i] = old[perm_g[i]];
  return from_braid(t.params, t.colors, word, b.strands, colors);
}

TangleDiagram rotate_braid(const TangleDiagram& t, int shift) {
  const auto& b = require_braid(t);
  const int m = int(b.letters.size());
  if (m == 0) return t;
  shift = ((shift % m) + m) % m;
  std::vector<int> prefix(b.letters.begin(), b.letters.begin() + shift);
  std::vector<int> word(b.letters.begin() + shift, b.letters.end());
  word.insert(word.end(), prefix.begin(), prefix.end());
  // Bottom of the rotated word is the level after the prefix.
  auto perm = braid_permutation(prefix, b.strands);
  auto old = bottom_colors(t);
  std::vector<std::string> colors(b.strands);
  for (int i = 0; i < b.strands; ++i) colors[perm[i]] = old[i];
  return from_braid(t.params, t.colors, word, b.strands, colors);
}

TangleDiagram close_braid_right(const TangleDiagram& t, int n_open) {
  const auto& b = require_braid(t);
  const int n = b.strands;
  if (n_open < 0 || n_open > n) throw domain_error("n_open out of range");
  // Closing strand j joins top position j to bottom position j.
  for (int j = n_open; j < n; ++j)
    if (t.top[j].color != t.bottom[j].color)
      throw domain_error("mixed colors on one component: closing strand " + std::to_string(j + 1) + " joins '" +
                         t.top[j].color + "' to '" + t.bottom[j].color + "'");

  TangleDiagram d{t.params, t.colors, {}, {}, {}, std::nullopt};
  d.bottom.assign(t.bottom.begin(), t.bottom.begin() + n_open);
  for (int j = n_open; j < n; ++j) {
    Slice s(j, Piece{});
    s.push_back({PieceKind::cup_coev, t.bottom[j].color});
    s.resize(s.size() + (j - n_open), Piece{});
    d.slices.push_back(std::move(s));
  }
  for (const auto& bs : t.slices) {
    Slice s = bs;
    s.resize(s.size() + (n - n_open), Piece{});
    d.slices.push_back(std::move(s));
  }
  for (int j = n - 1; j >= n_open; --j) {
    Slice s(j, Piece{});
    s.push_back({PieceKind::cap_ev_hat, {}});
    s.resize(s.size() + (j - n_open), Piece{});
    d.slices.push_back(std::move(s));
  }
  d.top.assign(t.top.begin(), t.top.begin() + n_open);
  require_valid(d);
  return d;
}

TangleDiagram close_braid(const TangleDiagram& t, std::optional<int> keep_open) {
  require_braid(t);
  if (!keep_open) return close_braid_right(t, 0);
  return close_braid_right(conjugate_to_front(t, *keep_open), 1);
}

TangleDiagram close_open_strand(const TangleDiagram& t) {
  if (t.bottom.size() != 1 || t.top.size() != 1 || !(t.bottom[0] == t.top[0]))
    throw domain_error("close_open_strand needs a (1,1)-tangle with matching ends");
  const StrandEnd& e = t.bottom[0];
  const bool up = e.orientation == Orientation::up;
  TangleDiagram d{t.params, t.colors, {}, {}, {}, std::nullopt};
  d.slices.push_back({Piece{up ? PieceKind::cup_coev : PieceKind::cup_coev_hat, e.color}});
  for (const auto& s : t.slices) {
    Slice x = s;
    x.push_back(Piece{});
    d.slices.push_back(std::move(x));
  }
  d.slices.push_back({Piece{up ? PieceKind::cap_ev_hat : PieceKind::cap_ev, {}}});
  require_valid(d);
  return d;
}

TangleDiagram rotate_pi(const TangleDiagram& t) {
  require_valid(t);
  std::vector<StrandState> levels{t.bottom};
  for (const auto& s : t.slices) levels.push_back(propagate(levels.back(), s, t.colors));

  auto turn = [](const StrandState& s) {
    StrandState out(s.rbegin(), s.rend());
    for (auto& e : out) e.orientation = flip(e.orientation);
    return out;
  };
  TangleDiagram d{t.params, t.colors, turn(t.top), {}, turn(t.bottom), std::nullopt};
  for (int i = int(t.slices.size()) - 1; i >= 0; --i) {
    const auto& old = t.slices[i];
    Slice s;
    size_t pos = 0;
    std::vector<Piece> mapped;
    for (const auto& piece : old) {
      Piece np = piece;
      switch (piece.kind) {
        case PieceKind::cap_ev:
          np = {PieceKind::cup_coev_hat, levels[i][pos].color};
          break;
        case PieceKind::cap_ev_hat:
          np = {PieceKind::cup_coev, levels[i][pos].color};
          break;
        case PieceKind::cup_coev:
          np = {PieceKind::cap_ev_hat, {}};
          break;
        case PieceKind::cup_coev_hat:
          np = {PieceKind::cap_ev, {}};
          break;
        default:
          break;
      }
      mapped.push_back(np);
      pos += piece_inputs(piece.kind);
    }
    s.assign(mapped.rbegin(), mapped.rend());
    d.slices.push_back(std::move(s));
  }
  require_valid(d);
  return d;
}

std::string color_id(int i) { return "c" + std::to_string(i); }

std::vector<std::string> catalog_names() { return {"unknot", "hopf", "trefoil", "figure8", "chain3"}; }

CatalogEntry catalog(const std::string& name) {
  if (name == "unknot") return {name, {{}, 1}, 1};
  if (name == "hopf") return {name, {{1, 1}, 2}, 2};
  if (name == "trefoil") return {name, {{1, 1, 1}, 2}, 1};
  if (name == "figure8") return {name, {{1, -2, 1, -2}, 3}, 1};
  if (name == "chain3") return {name, {{1, 1, 2, 2}, 3}, 3};
  const std::string prefix = "connectsum(";
  if (name.rfind(prefix, 0) == 0 && name.back() == ')') {
    std::string inner = name.substr(prefix.size(), name.size() - prefix.size() - 1);
    // split at the top-level comma
    int depth = 0;
    size_t split = std::string::npos;
    for (size_t i = 0; i < inner.size(); ++i) {
      if (inner[i] == '(') ++depth;
      if (inner[i] == ')') --depth;
      if (inner[i] == ',' && depth == 0) {
        split = i;
        break;
      }
    }
    if (split == std::string::npos) throw domain_error("connectsum needs two arguments: " + name);
    auto a = catalog(inner.substr(0, split));
    auto b = catalog(inner.substr(split + 1));
    BraidWord w{a.braid.letters, a.braid.strands + b.braid.strands - 1};
    for (int l : b.braid.letters) w.letters.push_back(l > 0 ? l + a.braid.strands - 1 : l - a.braid.strands + 1);
    return {name, w, int(braid_cycles(w).size())};
  }
  throw domain_error("unknown catalog entry '" + name + "'");
}

TangleDiagram catalog_braid(const std::string& name, const GlobalParams& p,
                            const std::vector<ModuleLabel>& component_colors) {
  if (component_colors.empty()) throw domain_error("catalog diagram needs at least one color");
  auto entry = catalog(name);
  auto cycles = braid_cycles(entry.braid);
  ColorTable table;
  std::vector<std::string> strand_colors(entry.braid.strands);
  for (size_t c = 0; c < cycles.size(); ++c) {
    const auto& label = component_colors[std::min(c, component_colors.size() - 1)];
    // Reuse ids for repeated labels so identical colors share one table entry.
    std::string id;
    for (const auto& e : table.entries())
      if (e.label == label) id = e.id;
    if (id.empty()) {
      id = color_id(int(table.entries().size()));
      table.add(id, label);
    }
    for (int s : cycles[c]) strand_colors[s] = id;
  }
  return from_braid(p, table, entry.braid.letters, entry.braid.strands, strand_colors);
}

TangleDiagram connect_sum_braid(const TangleDiagram& a, const TangleDiagram& b) {
  const auto& ba = require_braid(a);
  const auto& bb = require_braid(b);
  if (!(a.params == b.params)) throw domain_error("connect sum of diagrams over different r");
  const int shift = ba.strands - 1;
  const auto& ja = a.colors.at(a.bottom[shift].color);
  const auto& jb = b.colors.at(b.bottom[0].color);
  if (!(ja == jb))
    throw domain_error("connect sum joins components colored " + ja.str() + " and " + jb.str());

  ColorTable table = a.colors;
  std::map<std::string, std::string> rename;
  for (const auto& e : b.colors.entries()) {
    std::string id;
    for (const auto& x : table.entries())
      if (x.label == e.label) id = x.id;
    if (id.empty()) {
      id = color_id(int(table.entries().size()));
      while (table.contains(id)) id += "_";
      table.add(id, e.label);
    }
    rename[e.id] = id;
  }
  std::vector<int> word = ba.letters;
  for (int l : bb.letters) word.push_back(l > 0 ? l + shift : l - shift);
  std::vector<std::string> colors;
  for (const auto& s : a.bottom) colors.push_back(s.color);
  for (size_t i = 1; i < b.bottom.size(); ++i) colors.push_back(rename[b.bottom[i].color]);
  return from_braid(a.params, table, word, ba.strands + bb.strands - 1, colors);
}

namespace {

ojson color_to_json(const ColorEntry& e) {
  ojson j;
  j["id"] = e.id;
  if (e.label.kind() == ModuleLabel::Kind::verma) {
    j["kind"] = "verma";
    j["alpha"] = {e.label.alpha().real(), e.label.alpha().imag()};
  } else {
    j["kind"] = "simple";
    j["n"] = e.label.n();
    j["l"] = e.label.l();
  }
  return j;
}

cplx complex_from_json(const ojson& j) {
  if (j.is_array() && j.size() == 2) return {j[0].get<double>(), j[1].get<double>()};
  if (j.is_number()) return {j.get<double>(), 0.0};
  throw domain_error("complex numbers must be [re, im] arrays");
}

ColorEntry color_from_json(const ojson& j) {
  const std::string id = j.at("id").get<std::string>();
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "verma") return {id, ModuleLabel::verma(complex_from_json(j.at("alpha")))};
  if (kind == "simple") return {id, ModuleLabel::simple(j.at("n").get<int>(), j.at("l").get<int>())};
  throw domain_error("color kind must be 'verma' or 'simple', got '" + kind + "'");
}

Orientation orientation_from_json(const ojson& j) {
  const auto s = j.get<std::string>();
  if (s == "up") return Orientation::up;
  if (s == "down") return Orientation::down;
  throw domain_error("orientation must be 'up' or 'down', got '" + s + "'");
}

template <class F>
auto with_json_errors(F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw domain_error(std::string("malformed diagram JSON: ") + e.what());
  }
}

}  // namespace

std::string serialize(const TangleDiagram& d) {
  ojson j;
  j["version"] = 1;
  j["r"] = d.params.r();
  j["colors"] = ojson::array();
  for (const auto& e : d.colors.entries()) j["colors"].push_back(color_to_json(e));
  j["bottom"] = ojson::array();
  for (const auto& s : d.bottom) j["bottom"].push_back({s.color, orient_name(s.orientation)});
  j["slices"] = ojson::array();
  for (const auto& slice : d.slices) {
    ojson js = ojson::array();
    for (const auto& p : slice) {
      ojson jp;
      jp["op"] = piece_op_name(p.kind);
      if (p.kind == PieceKind::cup_coev || p.kind == PieceKind::cup_coev_hat) jp["color"] = p.color;
      js.push_back(jp);
    }
    j["slices"].push_back(js);
  }
  return j.dump() + "\n";
}

TangleDiagram parse_diagram(const std::string& text) {
  return with_json_errors([&] {
    ojson j = ojson::parse(text);
    if (j.value("version", 1) != 1) throw domain_error("unsupported diagram version");
    TangleDiagram d{GlobalParams(j.at("r").get<int>()), {}, {}, {}, {}, std::nullopt};
    for (const auto& c : j.at("colors")) {
      auto e = color_from_json(c);
      d.colors.add(e.id, e.label);
    }
    for (const auto& b : j.at("bottom")) d.bottom.push_back({b.at(0).get<std::string>(), orientation_from_json(b.at(1))});
    for (const auto& js : j.at("slices")) {
      Slice s;
      for (const auto& jp : js) s.push_back({piece_from_op_name(jp.at("op").get<std::string>()), jp.value("color", "")});
      d.slices.push_back(std::move(s));
    }
    StrandState state = d.bottom;
    std::vector<TypingError> errors;
    for (size_t i = 0; i < d.slices.size(); ++i) state = apply_slice(state, d.slices[i], d.colors, int(i), errors);
    if (!errors.empty()) throw domain_error(describe(errors));
    d.top = state;
    return d;
  });
}

DiagramInput parse_input(const std::string& text) {
  return with_json_errors([&] {
    ojson j = ojson::parse(text);
    if (!j.contains("braid")) return DiagramInput{parse_diagram(text), false, std::nullopt};
    GlobalParams p(j.at("r").get<int>());
    const int strands = j.at("strands").get<int>();
    ColorTable table;
    std::vector<std::string> strand_colors;
    for (const auto& c : j.at("colors")) {
      auto e = color_from_json(c);
      table.add(e.id, e.label);
      strand_colors.push_back(e.id);
    }
    DiagramInput in{from_braid(p, table, j.at("braid").get<std::vector<int>>(), strands, strand_colors), true,
                    std::nullopt};
    if (j.contains("cut") && !j["cut"].is_null()) in.cut = j["cut"].get<int>();
    return in;
  });
}

}  // namespace rtcalc
