#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "json.hpp"
#include "platonic/decoration.hpp"
#include "platonic/diagram.hpp"
#include "platonic/orbit.hpp"

namespace platonic {

/// Cartesian images of the fundamental weights: row i of the Cholesky
/// factor L of the weight Gram matrix (G = L L^T).
class CartesianFrame {
 public:
  explicit CartesianFrame(const Diagram& d);
  std::vector<double> to_cartesian(const Point& p) const;

 private:
  int n_;
  std::vector<double> basis_;  // n x n, row-major
};

struct OffMesh {
  std::vector<std::array<double, 3>> vertices;
  std::vector<std::vector<std::uint32_t>> faces;  // counter-clockwise seen from outside
  std::size_t edge_count = 0;
};

/// Boundary mesh of a 3-dimensional solid. Throws Error for rank != 3.
OffMesh build_off_mesh(const Diagram& d, End end);

void write_off(std::ostream& os, const OffMesh& mesh);
/// Reads the subset of OFF written above. Throws ParseError.
OffMesh read_off(std::istream& is);

/// Incidence export for rank <= 8:
///   {diagram, end, name, rank, vertices: [{omega: [str], cartesian: [num]}],
///    faces: [{dimension, count, sets: [[vertex index]]}]}
nlohmann::json incidence_json(const Diagram& d, End end);

}  // namespace platonic
