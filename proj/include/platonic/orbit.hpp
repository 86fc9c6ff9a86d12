#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "platonic/diagram.hpp"
#include "platonic/qsqrt5.hpp"

namespace platonic {

/// A point given by its coordinates in the basis of fundamental weights.
class Point {
 public:
  Point() = default;
  explicit Point(std::vector<QSqrt5> coords) : coords_(std::move(coords)) {}
  /// Fundamental weight w_i of a rank-n diagram (1-based i).
  static Point weight(int rank, int i);
  static Point zero(int rank) { return Point(std::vector<QSqrt5>(static_cast<std::size_t>(rank))); }

  int size() const { return static_cast<int>(coords_.size()); }
  /// Coordinate along w_i (1-based).
  const QSqrt5& operator[](int i) const { return coords_[i - 1]; }
  QSqrt5& operator[](int i) { return coords_[i - 1]; }
  const std::vector<QSqrt5>& coords() const { return coords_; }

  friend Point operator-(const Point& x, const Point& y);
  friend bool operator==(const Point&, const Point&) = default;
  /// Lexicographic, using the numeric order of each coordinate.
  friend std::strong_ordering operator<=>(const Point& x, const Point& y);

  /// "(-1, 1, 0)"
  std::string to_string() const;
  /// "-w1 + w2" style; "0" for the origin.
  std::string to_weight_string() const;

  std::size_t hash() const;

 private:
  std::vector<QSqrt5> coords_;
};

struct PointHash {
  std::size_t operator()(const Point& p) const noexcept { return p.hash(); }
};

/// Reflection r_i: (r_i x)_j = x_j - x_i * C_ij.
Point reflect(const Diagram& d, int node, const Point& x);

/// Closure of a seed under a set of simple reflections.
///
/// Points are kept in BFS discovery order, sweeping generators 1..n in
/// increasing order from each point, so the result is deterministic.
/// The action table records, for every generator used, the index of the
/// image of each point.
class OrbitResult {
 public:
  const std::vector<Point>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  const Point& seed() const { return points_.front(); }
  NodeSet generators() const { return generators_; }

  /// Index of p, or -1 if p is not in the orbit.
  std::int64_t index_of(const Point& p) const;
  bool contains(const Point& p) const { return index_of(p) >= 0; }

  /// Index of r_node(points()[i]). `node` must be one of the generators.
  std::uint32_t image(int node, std::size_t i) const { return action_[node - 1][i]; }

 private:
  friend OrbitResult orbit(const Diagram& d, const Point& seed, NodeSet generators);

  std::vector<Point> points_;
  NodeSet generators_;
  std::unordered_map<Point, std::uint32_t, PointHash> index_;
  std::vector<std::vector<std::uint32_t>> action_;
};

OrbitResult orbit(const Diagram& d, const Point& seed, NodeSet generators);

/// |W| / |orbit of seed under W|. Throws InternalError if not integral.
Count stabilizer_order_of_point(const Diagram& d, const Point& seed);

/// x^T G y with G the weight Gram matrix.
QSqrt5 inner(const Diagram& d, const Point& x, const Point& y);

}  // namespace platonic
