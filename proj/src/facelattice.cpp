#include "platonic/facelattice.hpp"

#include <algorithm>
#include <set>

#include "platonic/error.hpp"

namespace platonic {

namespace {

ChainPosition require_position(const Diagram& d, const Decoration& dec) {
  const auto pos = locate_in_chain(d, dec);
  if (!pos) {
    throw InvalidDecoration("decoration " + dec.to_string() + " is not a face of a " + d.name() +
                            " chain polytope");
  }
  return *pos;
}

End common_end(const Diagram& d, const Decoration& dec_c, const Decoration& dec_d) {
  const ChainPosition c = require_position(d, dec_c);
  const ChainPosition f = require_position(d, dec_d);
  if (c.end != f.end) {
    throw InvalidDecoration("decorations " + dec_c.to_string() + " and " + dec_d.to_string() +
                            " come from different chains");
  }
  if (c.index >= f.index) {
    throw InvalidDecoration("need dim(" + dec_c.to_string() + ") < dim(" + dec_d.to_string() + ")");
  }
  return c.end;
}

Count exact_ratio(Count num, Count den, const std::string& what) {
  if (den == 0 || num % den != 0) {
    throw InternalError(what + ": " + std::to_string(num) + " / " + std::to_string(den) +
                        " is not an integer");
  }
  return num / den;
}

}  // namespace

Count face_count(const Diagram& d, const Decoration& dec) {
  if (!validate(d, dec)) {
    throw InvalidDecoration("decoration " + dec.to_string() + " breaks the grammar on " + d.name());
  }
  if (!is_platonic_chain(d)) throw NotPlatonic(d.name() + " is not a chain diagram");
  const Count denom = parabolic_order(d, dec.open()) * parabolic_order(d, dec.filled());
  return exact_ratio(group_order(d), denom, "face count of " + dec.to_string() + " in " + d.name());
}

FaceClass face_class(const Diagram& d, const Decoration& dec) {
  const ChainPosition pos = require_position(d, dec);
  return {dec,           pos.end,
          dec.dimension(), dec.filled(),
          dec.open(),    face_count(d, dec),
          dec.dual_dimension()};
}

std::vector<FaceClass> face_table(const Diagram& d, End end) {
  std::vector<FaceClass> rows;
  for (const Decoration& dec : chain(d, end)) rows.push_back(face_class(d, dec));
  return rows;
}

std::vector<FaceClass> face_table(const Diagram& d) {
  const auto left = face_table(d, End::Left);
  const auto right = face_table(d, End::Right);
  std::vector<FaceClass> rows;
  for (std::size_t k = 0; k < left.size(); ++k) {
    rows.push_back(left[k]);
    rows.push_back(right[k]);
  }
  return rows;
}

Count stabilizer_ratio(const Diagram& d, const Decoration& dec_c, const Decoration& dec_d) {
  common_end(d, dec_c, dec_d);
  return exact_ratio(parabolic_order(d, dec_c.open()), parabolic_order(d, dec_d.open()),
                     "stabilizer ratio " + dec_c.to_string() + " / " + dec_d.to_string());
}

NodeSet intersection_symmetry_nodes(const Decoration& dec_k, const Decoration& dec_j) {
  return dec_k.filled() & dec_j.filled();
}

NodeSet face_stabilizer_nodes(const Decoration& dec) { return dec.filled() | dec.open(); }

Point seed_point(const Diagram& d, End end) {
  return Point::weight(d.rank(), end == End::Left ? 1 : d.rank());
}

bool GeometricFace::contains(const GeometricFace& other) const {
  return std::includes(vertices.begin(), vertices.end(), other.vertices.begin(),
                       other.vertices.end());
}

GeometricFace realize_representative(const Diagram& d, const Decoration& dec) {
  const ChainPosition pos = require_position(d, dec);
  const OrbitResult face = orbit(d, seed_point(d, pos.end), dec.filled());
  GeometricFace out{face.points()};
  std::sort(out.vertices.begin(), out.vertices.end());
  return out;
}

std::vector<GeometricFace> enumerate_faces(const Diagram& d, const Decoration& dec) {
  const ChainPosition pos = require_position(d, dec);
  const FaceComplex complex(d, pos.end);
  std::vector<GeometricFace> out;
  for (const auto& face : complex.faces(pos.index)) out.push_back(complex.to_geometric(face));
  std::sort(out.begin(), out.end());
  return out;
}

Count incidence_count(const Diagram& d, const Decoration& dec_c, const Decoration& dec_d) {
  const End end = common_end(d, dec_c, dec_d);
  return FaceComplex(d, end).incidence(dec_c.dimension(), dec_d.dimension());
}

long long euler_sum(const Diagram& d, End end) {
  long long total = 0;
  long long sign = 1;
  for (const Decoration& dec : chain(d, end)) {
    total += sign * static_cast<long long>(face_count(d, dec));
    sign = -sign;
  }
  return total;
}

std::string polytope_name(const Diagram& d, End end) {
  if (!is_platonic_chain(d)) throw NotPlatonic(d.name() + " is not a chain diagram");
  const int n = d.rank();
  const bool left = end == End::Left;
  switch (d.family()) {
    case Family::A:
      if (n == 1) return "segment";
      if (n == 2) return "triangle";
      if (n == 3) return "tetrahedron";
      if (n == 4) return "pentatope";
      return std::to_string(n) + "-simplex";
    case Family::B:
    case Family::C:
      if (n == 2) return "square";
      if (n == 3) return left ? "octahedron" : "cube";
      if (n == 4) return left ? "16-cell" : "tesseract";
      return std::to_string(n) + (left ? "-orthoplex" : "-cube");
    case Family::F4: return "24-cell";
    case Family::H2: return "pentagon";
    case Family::H3: return left ? "icosahedron" : "dodecahedron";
    case Family::H4: return left ? "600-cell" : "120-cell";
    case Family::D: break;
  }
  throw NotPlatonic(d.name() + " is not a chain diagram");
}

// ---------------------------------------------------------------------------
// FaceComplex

FaceComplex::FaceComplex(const Diagram& d, End end)
    : diagram_(d),
      end_(end),
      chain_(chain(d, end)),
      vertices_(orbit(d, seed_point(d, end), d.all_nodes())),
      faces_(static_cast<std::size_t>(d.rank())) {}

FaceComplex::IndexFace FaceComplex::representative(int dim) const {
  const OrbitResult face = orbit(diagram_, vertices_.seed(), chain_.at(dim).filled());
  IndexFace out;
  out.reserve(face.size());
  for (const Point& p : face.points()) {
    const auto idx = vertices_.index_of(p);
    if (idx < 0) throw InternalError("face vertex " + p.to_string() + " is not a polytope vertex");
    out.push_back(static_cast<std::uint32_t>(idx));
  }
  std::sort(out.begin(), out.end());
  return out;
}

const std::vector<FaceComplex::IndexFace>& FaceComplex::faces(int dim) const {
  if (dim < 0 || dim >= rank()) {
    throw Error("face dimension " + std::to_string(dim) + " out of range for " + diagram_.name());
  }
  std::lock_guard lock(mutex_);
  auto& slot = faces_[static_cast<std::size_t>(dim)];
  if (slot) return *slot;

  auto found = std::make_unique<std::vector<IndexFace>>();
  std::set<IndexFace> seen;
  IndexFace start = representative(dim);
  seen.insert(start);
  found->push_back(std::move(start));
  const std::vector<int> gens = diagram_.all_nodes().nodes();
  for (std::size_t head = 0; head < found->size(); ++head) {
    for (int g : gens) {
      IndexFace image;
      image.reserve((*found)[head].size());
      for (std::uint32_t v : (*found)[head]) image.push_back(vertices_.image(g, v));
      std::sort(image.begin(), image.end());
      if (seen.insert(image).second) found->push_back(std::move(image));
    }
  }
  slot = std::move(found);
  return *slot;
}

Count FaceComplex::incidence(int dim_c, int dim_d) const {
  if (dim_c >= dim_d) throw Error("incidence needs dim_c < dim_d");
  const IndexFace inner = representative(dim_c);
  Count n = 0;
  for (const IndexFace& outer : faces(dim_d)) {
    if (std::includes(outer.begin(), outer.end(), inner.begin(), inner.end())) ++n;
  }
  return n;
}

GeometricFace FaceComplex::to_geometric(const IndexFace& face) const {
  GeometricFace out;
  out.vertices.reserve(face.size());
  for (std::uint32_t v : face) out.vertices.push_back(vertices_.points()[v]);
  std::sort(out.vertices.begin(), out.vertices.end());
  return out;
}

}  // namespace platonic
