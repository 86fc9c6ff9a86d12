#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "platonic/diagram.hpp"

namespace platonic {

/// Node decoration symbols. Text form: s, o, f.
enum class Symbol : char {
  Square = 's',  // reflection moving the seed point
  Open = 'o',    // generator of the pointwise stabilizer G_s
  Filled = 'f',  // generator of the face symmetry group G_f
};

/// Which extreme node of a chain carries the seed square.
enum class End { Left, Right };

std::string_view end_name(End e);
/// Accepts "left"/"right" (case-insensitive). Throws ParseError otherwise.
End parse_end(std::string_view text);

/// One symbol per diagram node (1-based access).
class Decoration {
 public:
  Decoration() = default;
  explicit Decoration(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {}

  /// Parses the compact form, e.g. "ffso". Throws ParseError.
  static Decoration parse(std::string_view text);

  int size() const { return static_cast<int>(symbols_.size()); }
  Symbol operator[](int node) const { return symbols_[node - 1]; }
  Symbol& operator[](int node) { return symbols_[node - 1]; }
  const std::vector<Symbol>& symbols() const { return symbols_; }

  NodeSet nodes_with(Symbol s) const;
  NodeSet filled() const { return nodes_with(Symbol::Filled); }
  NodeSet open() const { return nodes_with(Symbol::Open); }
  NodeSet squares() const { return nodes_with(Symbol::Square); }

  /// Dimension of the face this decoration describes (number of Filled).
  int dimension() const { return filled().size(); }
  /// Dimension of the dual face (number of Open).
  int dual_dimension() const { return open().size(); }

  /// Node order reversed.
  Decoration reversed() const;

  std::string to_string() const;   // "ffso"
  std::string to_glyphs() const;   // "◆ ◆ □ ◊"

  friend auto operator<=>(const Decoration&, const Decoration&) = default;
  friend bool operator==(const Decoration&, const Decoration&) = default;

 private:
  std::vector<Symbol> symbols_;
};

/// Grammar check: no connected pair carries Open next to Filled, and at most
/// one square per node (so at most n squares). Throws InvalidDecoration on a
/// length mismatch.
bool validate(const Diagram& d, const Decoration& dec);

/// Seed decoration: a square on node 1 (Left) or node n (Right), Open
/// elsewhere. Throws NotPlatonic unless the diagram is a simple chain.
Decoration seed(const Diagram& d, End end);

/// One application of the rewrite rules: for each square, fill it and turn
/// every Open neighbour into a square. Returns the distinct successors in
/// sorted order. Throws InvalidDecoration if the input breaks the grammar,
/// has no square, or is terminal (no Open left).
std::vector<Decoration> step(const Diagram& d, const Decoration& dec);

/// Decorations f_0 ... f_{n-1} reached from the seed at `end`.
std::vector<Decoration> chain(const Diagram& d, End end);

struct ChainPosition {
  End end;
  int index;  // equals the face dimension
};

/// Locates a decoration inside chain(d, Left) or chain(d, Right). Rank-1
/// chains report Left.
std::optional<ChainPosition> locate_in_chain(const Diagram& d, const Decoration& dec);

/// The same decoration read for the dual polytope: Open nodes generate the
/// dual face's symmetry group, Filled nodes its pointwise stabilizer.
struct DualReading {
  int dimension;
  NodeSet face_nodes;
  NodeSet stabilizer_nodes;
};

DualReading dual_read(const Decoration& dec);

}  // namespace platonic
