#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rtcalc/repr.hpp"

namespace rtcalc {

enum class Orientation { up, down };

struct ColorEntry {
  std::string id;
  ModuleLabel label;  // Verma or Simple only
};

/// Color ids mapped to module labels, in declaration order.
class ColorTable {
public:
  ColorTable() = default;
  explicit ColorTable(std::vector<ColorEntry> entries);

  /// Adds an entry; re-adding an identical (id, label) pair is a no-op.
  void add(const std::string& id, const ModuleLabel& label);
  const ModuleLabel& at(const std::string& id) const;
  bool contains(const std::string& id) const;
  const std::vector<ColorEntry>& entries() const { return entries_; }

private:
  std::vector<ColorEntry> entries_;
};

struct StrandEnd {
  std::string color;
  Orientation orientation = Orientation::up;
  friend bool operator==(const StrandEnd&, const StrandEnd&) = default;
};

using StrandState = std::vector<StrandEnd>;

/// Elementary pieces of a slice. Caps and cups name their pattern:
///   cap_ev      consumes (down, up)   ev
///   cap_ev_hat  consumes (up, down)   ev_hat
///   cup_coev    produces (up, down)   coev
///   cup_coev_hat produces (down, up)  coev_hat
enum class PieceKind { id, cross_pos, cross_neg, cap_ev, cap_ev_hat, cup_coev, cup_coev_hat, twist_pos, twist_neg };

struct Piece {
  PieceKind kind = PieceKind::id;
  std::string color;  // cups only
  friend bool operator==(const Piece&, const Piece&) = default;
};

using Slice = std::vector<Piece>;

int piece_inputs(PieceKind k);
int piece_outputs(PieceKind k);
std::string piece_op_name(PieceKind k);  // JSON spelling: id, xp, xn, capL, capR, cupL, cupR, twp, twn
PieceKind piece_from_op_name(const std::string& op);

struct BraidWord {
  std::vector<int> letters;  // +i / -i: positive / negative crossing of strands i, i+1 (1-based)
  int strands = 0;
};

/// A colored framed oriented tangle as a bottom-to-top sequence of slices.
/// `braid` is set for diagrams produced by from_braid.
struct TangleDiagram {
  GlobalParams params{2};
  ColorTable colors;
  StrandState bottom;
  std::vector<Slice> slices;
  StrandState top;
  std::optional<BraidWord> braid;
};

struct TypingError {
  int slice;     // -1 for errors not tied to a slice
  int position;  // strand position within the slice input, or -1
  std::string message;
};

/// Propagates the bottom state through every slice and compares with top.
std::vector<TypingError> validate(const TangleDiagram& d);

/// Throws domain_error listing the typing errors, if any.
void require_valid(const TangleDiagram& d);

/// State after applying one slice; throws domain_error on a typing error.
StrandState propagate(const StrandState& in, const Slice& s, const ColorTable& colors);

struct Component {
  std::string color;
  bool open = false;
  int self_writhe = 0;    // crossings of the component with itself, plus framing twists
  int first_position = 0; // node index of its first appearance, for ordering
};

struct DiagramInfo {
  std::vector<Component> components;  // ordered by first appearance, bottom-up, left to right
  int writhe = 0;                     // all crossing signs plus framing twists
  int crossings = 0;
};

/// Sign of a crossing piece given the orientations of its two input strands.
int crossing_sign(PieceKind k, Orientation a, Orientation b);

/// Component partition by union-find over slice adjacency.
DiagramInfo components(const TangleDiagram& d);

/// (n,n)-tangle of a braid word. strand_colors[i] colors bottom position i.
TangleDiagram from_braid(const GlobalParams& p, const ColorTable& colors, const std::vector<int>& word, int strands,
                         const std::vector<std::string>& strand_colors,
                         const std::vector<Orientation>& orientations = {});

/// Permutation of a braid word: perm[i] = top position of the strand entering at bottom i (0-based).
std::vector<int> braid_permutation(const std::vector<int>& word, int strands);

/// Conjugates the braid so bottom strand k (1-based) moves to position 1.
TangleDiagram conjugate_to_front(const TangleDiagram& t, int k);

/// Cyclic rotation of the braid word by `shift` letters, recoloring the
/// bottom so the closure is unchanged.
TangleDiagram rotate_braid(const TangleDiagram& t, int shift);

/// Closes the braid on the right. keep_open = nullopt closes every strand,
/// giving a link; keep_open = k conjugates strand k to the front and closes
/// strands 2..n, giving a (1,1)-tangle.
TangleDiagram close_braid(const TangleDiagram& t, std::optional<int> keep_open);

/// Closes braid strands n_open+1..n on the right, leaving an (n_open, n_open)-tangle.
TangleDiagram close_braid_right(const TangleDiagram& t, int n_open);

/// Closes the single open strand of a (1,1)-tangle on the right.
TangleDiagram close_open_strand(const TangleDiagram& t);

/// The diagram rotated by pi in the plane: slices reversed, orientations flipped.
TangleDiagram rotate_pi(const TangleDiagram& t);

/// Catalog: unknot, hopf, trefoil, figure8, chain3, connectsum(a,b).
struct CatalogEntry {
  std::string name;
  BraidWord braid;
  int components = 0;
};

CatalogEntry catalog(const std::string& name);
std::vector<std::string> catalog_names();

/// Braid tangle of a catalog entry with component i colored component_colors[i]
/// (components ordered by their lowest strand). Missing colors repeat the last one.
TangleDiagram catalog_braid(const std::string& name, const GlobalParams& p,
                            const std::vector<ModuleLabel>& component_colors);

/// Connected sum of two braid tangles: b's word is shifted so its first strand
/// is a's last strand.
TangleDiagram connect_sum_braid(const TangleDiagram& a, const TangleDiagram& b);

/// Cycles of the braid permutation, each listed by strand index (0-based), in
/// order of their smallest strand.
std::vector<std::vector<int>> braid_cycles(const BraidWord& b);

/// JSON slice-word format (see README).
std::string serialize(const TangleDiagram& d);
TangleDiagram parse_diagram(const std::string& json_text);

/// Parsed input file: either a slice diagram or a braid with an optional cut.
struct DiagramInput {
  TangleDiagram diagram;  // braid tangle when is_braid
  bool is_braid = false;
  std::optional<int> cut;  // 0-based component index for braid inputs
};

DiagramInput parse_input(const std::string& json_text);

/// Color ids 0..k-1 are named "c0", "c1", ...
std::string color_id(int i);

}  // namespace rtcalc
