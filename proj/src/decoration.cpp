#include "platonic/decoration.hpp"

#include <algorithm>
#include <cctype>

#include "platonic/error.hpp"

namespace platonic {

std::string_view end_name(End e) { return e == End::Left ? "left" : "right"; }

End parse_end(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "left") return End::Left;
  if (lower == "right") return End::Right;
  throw ParseError("expected 'left' or 'right', got '" + std::string(text) + "'");
}

Decoration Decoration::parse(std::string_view text) {
  std::vector<Symbol> symbols;
  symbols.reserve(text.size());
  for (char c : text) {
    switch (std::tolower(static_cast<unsigned char>(c))) {
      case 's': symbols.push_back(Symbol::Square); break;
      case 'o': symbols.push_back(Symbol::Open); break;
      case 'f': symbols.push_back(Symbol::Filled); break;
      default:
        throw ParseError("decoration '" + std::string(text) +
                         "': symbols must be s (square), o (open) or f (filled)");
    }
  }
  if (symbols.empty()) throw ParseError("empty decoration");
  return Decoration(std::move(symbols));
}

NodeSet Decoration::nodes_with(Symbol s) const {
  NodeSet out;
  for (int i = 1; i <= size(); ++i) {
    if ((*this)[i] == s) out.insert(i);
  }
  return out;
}

Decoration Decoration::reversed() const {
  return Decoration(std::vector<Symbol>(symbols_.rbegin(), symbols_.rend()));
}

std::string Decoration::to_string() const {
  std::string out;
  for (Symbol s : symbols_) out.push_back(static_cast<char>(s));
  return out;
}

std::string Decoration::to_glyphs() const {
  std::string out;
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (i) out += ' ';
    switch (symbols_[i]) {
      case Symbol::Square: out += "□"; break;
      case Symbol::Open: out += "◊"; break;
      case Symbol::Filled: out += "◆"; break;
    }
  }
  return out;
}

namespace {

void require_length(const Diagram& d, const Decoration& dec) {
  if (dec.size() != d.rank()) {
    throw InvalidDecoration("decoration " + dec.to_string() + " has " + std::to_string(dec.size()) +
                            " symbols but " + d.name() + " has " + std::to_string(d.rank()) +
                            " nodes");
  }
}

void require_chain(const Diagram& d) {
  if (!is_platonic_chain(d)) {
    throw NotPlatonic(d.name() +
                      " is not a connected line without branches; a single seed square at an "
                      "extreme node yields one face orbit per dimension only on such diagrams");
  }
}

}  // namespace

bool validate(const Diagram& d, const Decoration& dec) {
  require_length(d, dec);
  if (dec.squares().size() > d.rank()) return false;
  for (int i = 1; i <= d.rank(); ++i) {
    for (int j : d.neighbours(i)) {
      if (dec[i] == Symbol::Open && dec[j] == Symbol::Filled) return false;
    }
  }
  return true;
}

Decoration seed(const Diagram& d, End end) {
  require_chain(d);
  Decoration dec(std::vector<Symbol>(static_cast<std::size_t>(d.rank()), Symbol::Open));
  dec[end == End::Left ? 1 : d.rank()] = Symbol::Square;
  return dec;
}

std::vector<Decoration> step(const Diagram& d, const Decoration& dec) {
  if (!validate(d, dec)) {
    throw InvalidDecoration("decoration " + dec.to_string() + " breaks the grammar on " + d.name());
  }
  if (dec.open().empty()) {
    throw InvalidDecoration("decoration " + dec.to_string() + " is terminal: no open node remains");
  }
  const NodeSet squares = dec.squares();
  if (squares.empty()) {
    throw InvalidDecoration("decoration " + dec.to_string() + " has no square to fill");
  }

  std::vector<Decoration> out;
  for (int s : squares.nodes()) {
    Decoration next = dec;
    next[s] = Symbol::Filled;
    for (int j : d.neighbours(s)) {
      if (next[j] == Symbol::Open) next[j] = Symbol::Square;
    }
    out.push_back(std::move(next));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Decoration> chain(const Diagram& d, End end) {
  std::vector<Decoration> out{seed(d, end)};
  while (!out.back().open().empty()) {
    auto next = step(d, out.back());
    if (next.size() != 1) {
      throw InternalError("single-square decoration " + out.back().to_string() +
                          " branched into " + std::to_string(next.size()) + " successors");
    }
    out.push_back(std::move(next.front()));
  }
  return out;
}

std::optional<ChainPosition> locate_in_chain(const Diagram& d, const Decoration& dec) {
  if (dec.size() != d.rank() || !is_platonic_chain(d)) return std::nullopt;
  const int k = dec.dimension();
  if (k >= d.rank()) return std::nullopt;
  for (End end : {End::Left, End::Right}) {
    if (chain(d, end)[static_cast<std::size_t>(k)] == dec) return ChainPosition{end, k};
  }
  return std::nullopt;
}

DualReading dual_read(const Decoration& dec) {
  return {dec.dual_dimension(), dec.open(), dec.filled()};
}

}  // namespace platonic
