#include "platonic/export.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>

#include "platonic/error.hpp"
#include "platonic/facelattice.hpp"

namespace platonic {

CartesianFrame::CartesianFrame(const Diagram& d) : n_(d.rank()) {
  Eigen::MatrixXd gram(n_, n_);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) gram(i, j) = to_double(d.weight_gram()(i, j));
  }
  const Eigen::LLT<Eigen::MatrixXd> llt(gram);
  if (llt.info() != Eigen::Success) {
    throw InternalError("weight Gram matrix of " + d.name() + " is not positive definite");
  }
  const Eigen::MatrixXd lower = llt.matrixL();
  basis_.resize(static_cast<std::size_t>(n_) * n_);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) basis_[static_cast<std::size_t>(i) * n_ + j] = lower(i, j);
  }
}

std::vector<double> CartesianFrame::to_cartesian(const Point& p) const {
  std::vector<double> out(static_cast<std::size_t>(n_), 0.0);
  for (int i = 0; i < n_; ++i) {
    const double c = to_double(p[i + 1]);
    if (c == 0.0) continue;
    for (int j = 0; j < n_; ++j) out[j] += c * basis_[static_cast<std::size_t>(i) * n_ + j];
  }
  return out;
}

namespace {

using Vec3 = std::array<double, 3>;

Vec3 sub(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

// Orders a planar convex polygon counter-clockwise about its outward normal.
// The solid is centred at the origin, so the centroid direction points out.
void orient_polygon(std::vector<std::uint32_t>& face, const std::vector<Vec3>& pts) {
  Vec3 centroid{0, 0, 0};
  for (auto v : face) {
    for (int k = 0; k < 3; ++k) centroid[k] += pts[v][k] / static_cast<double>(face.size());
  }
  const Vec3 u = sub(pts[face.front()], centroid);
  const Vec3 w = cross(centroid, u);
  std::vector<std::pair<double, std::uint32_t>> keyed;
  for (auto v : face) {
    const Vec3 r = sub(pts[v], centroid);
    keyed.emplace_back(std::atan2(dot(r, w), dot(r, u)), v);
  }
  std::sort(keyed.begin(), keyed.end());
  for (std::size_t i = 0; i < face.size(); ++i) face[i] = keyed[i].second;
}

}  // namespace

OffMesh build_off_mesh(const Diagram& d, End end) {
  if (d.rank() != 3) {
    throw Error("OFF export needs a 3-dimensional solid; " + d.name() + " has rank " +
                std::to_string(d.rank()) + " (use json)");
  }
  const FaceComplex complex(d, end);
  const CartesianFrame frame(d);
  OffMesh mesh;
  std::vector<Vec3> pts;
  for (const Point& p : complex.vertices().points()) {
    const auto c = frame.to_cartesian(p);
    pts.push_back({c[0], c[1], c[2]});
  }
  mesh.vertices = pts;
  for (auto face : complex.faces(2)) {
    orient_polygon(face, pts);
    mesh.faces.push_back(std::move(face));
  }
  mesh.edge_count = complex.faces(1).size();
  return mesh;
}

void write_off(std::ostream& os, const OffMesh& mesh) {
  os << "OFF\n";
  os << mesh.vertices.size() << ' ' << mesh.faces.size() << ' ' << mesh.edge_count << '\n';
  const auto old_precision = os.precision(17);
  for (const auto& v : mesh.vertices) os << v[0] << ' ' << v[1] << ' ' << v[2] << '\n';
  os.precision(old_precision);
  for (const auto& f : mesh.faces) {
    os << f.size();
    for (auto i : f) os << ' ' << i;
    os << '\n';
  }
}

OffMesh read_off(std::istream& is) {
  std::string header;
  if (!(is >> header) || header != "OFF") throw ParseError("OFF: missing header");
  std::size_t nv = 0;
  std::size_t nf = 0;
  std::size_t ne = 0;
  if (!(is >> nv >> nf >> ne)) throw ParseError("OFF: bad counts line");
  OffMesh mesh;
  mesh.edge_count = ne;
  mesh.vertices.resize(nv);
  for (auto& v : mesh.vertices) {
    if (!(is >> v[0] >> v[1] >> v[2])) throw ParseError("OFF: truncated vertex list");
  }
  mesh.faces.resize(nf);
  for (auto& f : mesh.faces) {
    std::size_t k = 0;
    if (!(is >> k)) throw ParseError("OFF: truncated face list");
    f.resize(k);
    for (auto& i : f) {
      if (!(is >> i) || i >= nv) throw ParseError("OFF: bad vertex index");
    }
  }
  return mesh;
}

nlohmann::json incidence_json(const Diagram& d, End end) {
  if (d.rank() > 8) {
    throw Error("JSON incidence export supports rank <= 8; " + d.name() + " has rank " +
                std::to_string(d.rank()));
  }
  const FaceComplex complex(d, end);
  const CartesianFrame frame(d);
  nlohmann::json vertices = nlohmann::json::array();
  for (const Point& p : complex.vertices().points()) {
    std::vector<std::string> omega;
    for (const QSqrt5& c : p.coords()) omega.push_back(c.to_string());
    vertices.push_back({{"omega", omega}, {"cartesian", frame.to_cartesian(p)}});
  }
  nlohmann::json faces = nlohmann::json::array();
  for (int k = 0; k < d.rank(); ++k) {
    const auto& sets = complex.faces(k);
    faces.push_back({{"dimension", k}, {"count", sets.size()}, {"sets", sets}});
  }
  return {{"diagram", d.name()},
          {"end", std::string(end_name(end))},
          {"name", polytope_name(d, end)},
          {"rank", d.rank()},
          {"vertices", vertices},
          {"faces", faces}};
}

}  // namespace platonic
