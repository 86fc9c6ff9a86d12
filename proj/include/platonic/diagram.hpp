#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "platonic/qsqrt5.hpp"

namespace platonic {

/// Group orders and face counts. Every supported rank fits comfortably.
using Count = std::uint64_t;

/// Largest rank accepted by Diagram::build; keeps every group order inside
/// 64 bits (|W(B_16)| = 16! * 2^16 < 2^61).
inline constexpr int kMaxRank = 16;

/// Subset of diagram nodes. Node indices are 1-based, left to right.
class NodeSet {
 public:
  NodeSet() = default;
  NodeSet(std::initializer_list<int> nodes);
  static NodeSet range(int first, int last);  // inclusive; empty if last < first
  static NodeSet from_mask(std::uint32_t mask) { return NodeSet(mask); }

  bool contains(int node) const { return (bits_ >> (node - 1)) & 1U; }
  void insert(int node) { bits_ |= 1U << (node - 1); }
  void erase(int node) { bits_ &= ~(1U << (node - 1)); }
  bool empty() const { return bits_ == 0; }
  int size() const;
  std::uint32_t mask() const { return bits_; }
  std::vector<int> nodes() const;

  bool is_subset_of(NodeSet other) const { return (bits_ & ~other.bits_) == 0; }

  friend NodeSet operator&(NodeSet x, NodeSet y) { return NodeSet(x.bits_ & y.bits_); }
  friend NodeSet operator|(NodeSet x, NodeSet y) { return NodeSet(x.bits_ | y.bits_); }
  friend bool operator==(NodeSet, NodeSet) = default;

  /// "{1,3}" style rendering.
  std::string to_string() const;

 private:
  explicit NodeSet(std::uint32_t bits) : bits_(bits) {}
  std::uint32_t bits_ = 0;
};

/// Dense square matrix over Q(sqrt5); storage and indexing are 0-based.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * n) {}
  Matrix(std::initializer_list<std::initializer_list<QSqrt5>> rows);

  int size() const { return n_; }
  QSqrt5& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * n_ + c]; }
  const QSqrt5& operator()(int r, int c) const {
    return data_[static_cast<std::size_t>(r) * n_ + c];
  }

  Matrix transpose() const;
  /// Gauss-Jordan inverse; throws InternalError if singular.
  Matrix inverse() const;
  /// Leading principal minor of order k (1 <= k <= n).
  QSqrt5 leading_minor(int k) const;

  friend Matrix operator*(const Matrix& x, const Matrix& y);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  int n_ = 0;
  std::vector<QSqrt5> data_;
};

enum class Family { A, B, C, D, F4, H2, H3, H4 };

std::string_view family_name(Family f);

/// Coxeter-Dynkin diagram of a finite irreducible reflection group.
///
/// Chains A/B/C/F4/H2/H3/H4 connect node i to i+1 only; D_n forks at node
/// n-2, whose neighbours are n-3, n-1 and n. Edge labels follow the usual
/// drawings: the 4 of B_n/C_n sits on the last edge, the 4 of F4 in the
/// middle, the 5 of H3/H4 on the last edge. Root lengths follow Bourbaki
/// (B_n: last root short, C_n: last root long, F4: roots 3 and 4 short),
/// with long roots of squared length 2.
///
/// The Cartan and weight Gram matrices are computed once on construction.
class Diagram {
 public:
  /// Throws InvalidDiagram if the rank does not fit the family.
  static Diagram build(Family family, int rank);

  /// Parses names such as "A4", "b7", "F4", "H3". A bare family letter
  /// ("B") takes its rank from `rank`; a rank in both places must agree.
  static Diagram parse(std::string_view name, std::optional<int> rank = std::nullopt);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  std::string name() const;

  /// Coxeter label m_ij (1-based). 2 for unconnected pairs, 1 on the diagonal.
  int label(int i, int j) const;
  bool adjacent(int i, int j) const { return i != j && label(i, j) >= 3; }
  std::vector<int> neighbours(int node) const;
  /// Squared length of simple root i (1-based).
  const QSqrt5& root_length2(int node) const { return root_length2_[node - 1]; }

  /// C_ij = 2(a_i|a_j)/(a_j|a_j); row i expresses a_i in the weight basis.
  const Matrix& cartan() const { return cartan_; }
  /// (w_i|w_j) for the fundamental weights.
  const Matrix& weight_gram() const { return weight_gram_; }
  /// (a_i|a_j) for the simple roots.
  Matrix root_gram() const;

  NodeSet all_nodes() const { return NodeSet::range(1, rank_); }

  friend bool operator==(const Diagram& x, const Diagram& y) {
    return x.family_ == y.family_ && x.rank_ == y.rank_;
  }

 private:
  Diagram(Family family, int rank);

  Family family_;
  int rank_;
  std::vector<int> labels_;
  std::vector<QSqrt5> root_length2_;
  Matrix cartan_;
  Matrix weight_gram_;
};

Matrix cartan_matrix(const Diagram& d);
Matrix gram_matrix_weights(const Diagram& d);

/// Order of the Coxeter group W of an irreducible type.
Count group_order(Family family, int rank);
Count group_order(const Diagram& d);

/// Number of non-zero roots.
Count root_count(const Diagram& d);

/// Irreducible piece of a parabolic sub-diagram.
struct Component {
  Family family;
  int rank;
  NodeSet nodes;
};

/// Connected components of the sub-diagram induced on `nodes`, each
/// identified by type. B and C components of equal rank have equal order;
/// rank-2 components with a 4 are reported as B. Throws InvalidDiagram if
/// `nodes` is not a subset of the diagram.
std::vector<Component> classify_parabolic(const Diagram& d, NodeSet nodes);

/// Order of the parabolic subgroup generated by `nodes`; 1 for the empty set.
Count parabolic_order(const Diagram& d, NodeSet nodes);

/// True iff the diagram is a connected path (every node of degree <= 2).
bool is_platonic_chain(const Diagram& d);

}  // namespace platonic
