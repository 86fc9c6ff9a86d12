#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "platonic/decoration.hpp"
#include "platonic/diagram.hpp"
#include "platonic/orbit.hpp"

namespace platonic {

/// One orbit of faces described by a chain decoration.
struct FaceClass {
  Decoration decoration;
  End end;
  int dimension;       // number of Filled nodes
  NodeSet face_nodes;  // generators of the face symmetry group G_f
  NodeSet stab_nodes;  // generators of the pointwise stabilizer G_s
  Count count;         // number of faces in the orbit
  int dual_dimension;  // number of Open nodes

  friend bool operator==(const FaceClass&, const FaceClass&) = default;
};

/// |W| / (|W(G_s)| * |W(G_f)|). Requires a valid decoration on a chain
/// diagram; throws InternalError if the ratio is not an integer.
Count face_count(const Diagram& d, const Decoration& dec);

FaceClass face_class(const Diagram& d, const Decoration& dec);

/// Face classes of one chain, f_0 ... f_{n-1}.
std::vector<FaceClass> face_table(const Diagram& d, End end);

/// Both chains interleaved: left f_0, right f_0, left f_1, right f_1, ...
/// Right-chain rows are the faces of the dual polytope.
std::vector<FaceClass> face_table(const Diagram& d);

/// |W(G_s(dec_c))| / |W(G_s(dec_d))|. For consecutive dimensions this is
/// the number of d-faces through a (d-1)-face; for larger gaps it counts
/// flags from the c-face up to a d-face. Both decorations must come from the
/// same chain with dim(dec_c) < dim(dec_d); throws InvalidDecoration
/// otherwise.
Count stabilizer_ratio(const Diagram& d, const Decoration& dec_c, const Decoration& dec_d);

/// Filled nodes common to both decorations: generators of the symmetry
/// group of the intersection of the two faces.
NodeSet intersection_symmetry_nodes(const Decoration& dec_k, const Decoration& dec_j);

/// Filled and Open nodes together: generators of the setwise stabilizer.
NodeSet face_stabilizer_nodes(const Decoration& dec);

/// Seed vertex of a chain: w_1 for Left, w_n for Right.
Point seed_point(const Diagram& d, End end);

/// A face identified by its vertex set, sorted by Point order.
struct GeometricFace {
  std::vector<Point> vertices;

  bool contains(const GeometricFace& other) const;
  friend bool operator==(const GeometricFace&, const GeometricFace&) = default;
  friend auto operator<=>(const GeometricFace&, const GeometricFace&) = default;
};

/// Orbit of the seed vertex under the face group G_f of a chain decoration.
GeometricFace realize_representative(const Diagram& d, const Decoration& dec);

/// All faces of the class, found by breadth-first search over vertex sets
/// under the simple reflections. Sorted.
std::vector<GeometricFace> enumerate_faces(const Diagram& d, const Decoration& dec);

/// Number of faces of class dec_d containing the representative face of
/// class dec_c, found by vertex-set inclusion.
Count incidence_count(const Diagram& d, const Decoration& dec_c, const Decoration& dec_d);

/// Alternating sum of face counts along a chain; 1 - (-1)^n for a convex
/// n-polytope.
long long euler_sum(const Diagram& d, End end);

/// Conventional name keyed to vertex count: "icosahedron" for the 12-vertex
/// H3 solid, "120-cell" for the 600-vertex H4 solid, and so on.
std::string polytope_name(const Diagram& d, End end);

/// The polytope seeded at one end of a chain, with faces of every dimension
/// as sorted lists of indices into the vertex orbit. Face lists are built on
/// first request and cached; the object is safe to share across threads.
class FaceComplex {
 public:
  using IndexFace = std::vector<std::uint32_t>;

  FaceComplex(const Diagram& d, End end);

  const Diagram& diagram() const { return diagram_; }
  End end() const { return end_; }
  int rank() const { return diagram_.rank(); }
  const OrbitResult& vertices() const { return vertices_; }
  const std::vector<Decoration>& decorations() const { return chain_; }

  IndexFace representative(int dim) const;
  const std::vector<IndexFace>& faces(int dim) const;
  /// Number of dim_d faces containing the representative dim_c face.
  Count incidence(int dim_c, int dim_d) const;

  GeometricFace to_geometric(const IndexFace& face) const;

 private:
  Diagram diagram_;
  End end_;
  std::vector<Decoration> chain_;
  OrbitResult vertices_;
  mutable std::mutex mutex_;
  mutable std::vector<std::unique_ptr<std::vector<IndexFace>>> faces_;
};

}  // namespace platonic
