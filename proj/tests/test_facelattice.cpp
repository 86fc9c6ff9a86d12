#include <map>

#include "doctest.h"
#include "platonic/error.hpp"
#include "platonic/facelattice.hpp"

using namespace platonic;

namespace {

Decoration dec(const char* s) { return Decoration::parse(s); }

Count binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  Count r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<Count>(n - k + i) / static_cast<Count>(i);
  return r;
}

std::vector<Count> counts(const Diagram& d, End end) {
  std::vector<Count> out;
  for (const FaceClass& f : face_table(d, end)) out.push_back(f.count);
  return out;
}

std::vector<Diagram> chains(int min_rank, int max_rank) {
  std::vector<Diagram> out;
  for (int n = min_rank; n <= max_rank; ++n) {
    out.push_back(Diagram::build(Family::A, n));
    if (n >= 2) {
      out.push_back(Diagram::build(Family::B, n));
      out.push_back(Diagram::build(Family::C, n));
    }
    if (n == 2) out.push_back(Diagram::build(Family::H2, 2));
    if (n == 3) out.push_back(Diagram::build(Family::H3, 3));
    if (n == 4) {
      out.push_back(Diagram::build(Family::F4, 4));
      out.push_back(Diagram::build(Family::H4, 4));
    }
  }
  return out;
}

const Diagram A3 = Diagram::build(Family::A, 3);
const Diagram B3 = Diagram::build(Family::B, 3);
const Diagram H3 = Diagram::build(Family::H3, 3);
const Diagram A4 = Diagram::build(Family::A, 4);
const Diagram B4 = Diagram::build(Family::B, 4);
const Diagram F4 = Diagram::build(Family::F4, 4);
const Diagram H4 = Diagram::build(Family::H4, 4);

}  // namespace

TEST_CASE("face_count examples") {
  CHECK(face_count(H3, dec("fso")) == 30);
  CHECK(face_count(H4, dec("ffso")) == 1200);
  CHECK(face_count(F4, dec("sooo")) == 24);
  CHECK_THROWS_AS(face_count(A3, dec("fos")), InvalidDecoration);
  CHECK_THROWS_AS(face_count(Diagram::build(Family::D, 4), dec("sooo")), NotPlatonic);
}

TEST_CASE("face_table examples") {
  std::vector<Count> a3;
  for (const auto& f : face_table(A3)) a3.push_back(f.count);
  CHECK(a3 == std::vector<Count>{4, 4, 6, 6, 4, 4});
  std::vector<Count> b4;
  for (const auto& f : face_table(B4)) b4.push_back(f.count);
  CHECK(b4 == std::vector<Count>{8, 16, 24, 32, 32, 24, 16, 8});
  CHECK(face_table(Diagram::build(Family::B, 5), End::Left).front().count == 10);

  const auto rows = face_table(A3);
  CHECK(rows[0].end == End::Left);
  CHECK(rows[1].end == End::Right);
  CHECK(rows[2].decoration == dec("fso"));
  CHECK(rows[2].face_nodes == NodeSet{1});
  CHECK(rows[2].stab_nodes == NodeSet{3});
  CHECK(rows[2].dimension == 1);
  CHECK(rows[2].dual_dimension == 1);
}

TEST_CASE("stabilizer_ratio examples") {
  CHECK(stabilizer_ratio(F4, dec("sooo"), dec("fsoo")) == 8);
  CHECK(stabilizer_ratio(H4, dec("fsoo"), dec("ffso")) == 5);
  const Diagram b6 = Diagram::build(Family::B, 6);
  const auto c = chain(b6, End::Left);
  CHECK(stabilizer_ratio(b6, c[0], c[1]) == 10);
  CHECK(stabilizer_ratio(B3, dec("soo"), dec("ffs")) == 8);
  // different ends or wrong order are rejected
  CHECK_THROWS_AS(stabilizer_ratio(A3, dec("soo"), dec("osf")), InvalidDecoration);
  CHECK_THROWS_AS(stabilizer_ratio(A3, dec("fso"), dec("soo")), InvalidDecoration);
  CHECK_THROWS_AS(stabilizer_ratio(A3, dec("sss"), dec("fso")), InvalidDecoration);
}

TEST_CASE("intersection symmetry and face stabilizer") {
  CHECK(intersection_symmetry_nodes(dec("fsoo"), dec("ffso")) == NodeSet{1});
  CHECK(intersection_symmetry_nodes(dec("sooo"), dec("fffs")).empty());
  CHECK(intersection_symmetry_nodes(dec("ffso"), dec("ffso")) == NodeSet{1, 2});
  CHECK(face_stabilizer_nodes(dec("fso")) == NodeSet{1, 3});
  CHECK(face_stabilizer_nodes(dec("sooo")) == NodeSet{2, 3, 4});
  CHECK(face_stabilizer_nodes(dec("ffs")) == NodeSet{1, 2});
}

TEST_CASE("representatives") {
  const GeometricFace edge = realize_representative(A3, dec("fso"));
  REQUIRE(edge.vertices.size() == 2);
  const std::vector<Point> want{Point::weight(3, 1), Point(std::vector<QSqrt5>{-1, 1, 0})};
  CHECK(std::is_permutation(edge.vertices.begin(), edge.vertices.end(), want.begin()));
  CHECK(realize_representative(H3, dec("ffs")).vertices.size() == 3);
  CHECK(realize_representative(H3, dec("sff")).vertices.size() == 5);
  CHECK(realize_representative(H4, dec("ooos")).vertices == std::vector{Point::weight(4, 4)});
  CHECK(realize_representative(H4, dec("fffs")).vertices.size() == 4);   // tetrahedral cell
  CHECK(realize_representative(H4, dec("sfff")).vertices.size() == 20);  // dodecahedral cell
}

TEST_CASE("enumerate_faces examples") {
  CHECK(enumerate_faces(B3, dec("ffs")).size() == 8);
  const auto verts = enumerate_faces(B3, dec("soo"));
  CHECK(verts.size() == 6);
  for (const auto& v : verts) CHECK(v.vertices.size() == 1);
  const auto faces = enumerate_faces(B3, dec("ffs"));
  CHECK(std::is_sorted(faces.begin(), faces.end()));
  for (const auto& f : faces) CHECK(f.vertices.size() == 3);
}

TEST_CASE("large enumeration: 1200 triangles of the 600-cell") {
  CHECK(enumerate_faces(H4, dec("ffso")).size() == 1200);
}

TEST_CASE("incidence examples") {
  CHECK(incidence_count(F4, dec("sooo"), dec("fsoo")) == 8);
  CHECK(incidence_count(H4, dec("sooo"), dec("fsoo")) == 12);
  CHECK(incidence_count(B3, dec("soo"), dec("ffs")) == 4);
  CHECK(stabilizer_ratio(B3, dec("soo"), dec("ffs")) == 8);
}

TEST_CASE("euler examples") {
  CHECK(euler_sum(H4, End::Right) == 0);
  CHECK(euler_sum(A3, End::Left) == 2);
  CHECK(euler_sum(A3, End::Right) == 2);
  CHECK(euler_sum(Diagram::build(Family::B, 5), End::Left) == 2);
  CHECK(counts(Diagram::build(Family::B, 5), End::Left) == std::vector<Count>{10, 40, 80, 80, 32});
}

TEST_CASE("polytope names") {
  CHECK(polytope_name(H3, End::Left) == "icosahedron");
  CHECK(polytope_name(H3, End::Right) == "dodecahedron");
  CHECK(polytope_name(B3, End::Left) == "octahedron");
  CHECK(polytope_name(H4, End::Left) == "600-cell");
  CHECK(polytope_name(F4, End::Right) == "24-cell");
  CHECK(polytope_name(Diagram::build(Family::C, 6), End::Right) == "6-cube");
}

TEST_CASE("closed-form counts for simplex, cross-polytope and cube") {
  // f_k(simplex) = C(n+1, k+1), f_k(cross) = 2^{k+1} C(n, k+1), f_k(cube) = 2^{n-k} C(n, k)
  for (int n = 2; n <= 10; ++n) {
    const auto a = counts(Diagram::build(Family::A, n), End::Left);
    const auto bl = counts(Diagram::build(Family::B, n), End::Left);
    const auto br = counts(Diagram::build(Family::B, n), End::Right);
    const auto cl = counts(Diagram::build(Family::C, n), End::Left);
    const auto cr = counts(Diagram::build(Family::C, n), End::Right);
    for (int k = 0; k < n; ++k) {
      CHECK(a[k] == binom(n + 1, k + 1));
      CHECK(bl[k] == (Count{1} << (k + 1)) * binom(n, k + 1));
      CHECK(br[k] == (Count{1} << (n - k)) * binom(n, k));
    }
    CHECK(cl == bl);
    CHECK(cr == br);
  }
}

TEST_CASE("table invariants up to rank 8") {
  for (const Diagram& d : chains(2, 8)) {
    const int n = d.rank();
    for (End end : {End::Left, End::Right}) {
      const auto table = face_table(d, end);
      REQUIRE(static_cast<int>(table.size()) == n);
      long long euler = 0;
      for (int k = 0; k < n; ++k) {
        const FaceClass& f = table[k];
        CHECK(f.dimension == k);
        CHECK(f.dimension + f.dual_dimension == n - 1);
        CHECK(f.face_nodes.size() == f.dimension);
        CHECK(f.stab_nodes.size() == f.dual_dimension);
        CHECK(group_order(d) % f.count == 0);
        // the count formula is symmetric in the two parabolic factors
        const DualReading dual = dual_read(f.decoration);
        CHECK(group_order(d) / (parabolic_order(d, dual.face_nodes) *
                                parabolic_order(d, dual.stabilizer_nodes)) ==
              f.count);
        euler += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(f.count);
      }
      CHECK(euler == (n % 2 == 0 ? 0 : 2));
      CHECK(euler_sum(d, end) == euler);

      // dual polytope: the other end lists the same counts reversed
      const End other = end == End::Left ? End::Right : End::Left;
      const auto dual_table = face_table(d, other);
      for (int k = 0; k < n; ++k) CHECK(table[k].count == dual_table[n - 1 - k].count);

      // flag counts telescope
      const auto c = chain(d, end);
      for (int lo = 0; lo < n; ++lo) {
        Count product = 1;
        for (int hi = lo + 1; hi < n; ++hi) {
          product *= stabilizer_ratio(d, c[hi - 1], c[hi]);
          CHECK(stabilizer_ratio(d, c[lo], c[hi]) == product);
        }
      }
    }
  }
}

TEST_CASE("A_n tables mirror; B_n and C_n tables coincide") {
  for (int n = 2; n <= 8; ++n) {
    const Diagram a = Diagram::build(Family::A, n);
    const auto left = face_table(a, End::Left);
    const auto right = face_table(a, End::Right);
    for (int k = 0; k < n; ++k) {
      CHECK(left[k].decoration.reversed() == right[k].decoration);
      CHECK(left[k].count == right[k].count);
    }
    const Diagram b = Diagram::build(Family::B, n);
    const Diagram c = Diagram::build(Family::C, n);
    CHECK(c.cartan() == b.cartan().transpose());
    for (End end : {End::Left, End::Right}) {
      const auto tb = face_table(b, end);
      const auto tc = face_table(c, end);
      for (int k = 0; k < n; ++k) {
        CHECK(tb[k].decoration == tc[k].decoration);
        CHECK(tb[k].count == tc[k].count);
      }
    }
  }
}

TEST_CASE("geometric oracle: enumerated faces match counts, consecutive meets match") {
  for (const Diagram& d : chains(2, 4)) {
    for (End end : {End::Left, End::Right}) {
      const FaceComplex complex(d, end);
      const auto c = chain(d, end);
      for (int k = 0; k < d.rank(); ++k) {
        CHECK_MESSAGE(complex.faces(k).size() == face_count(d, c[k]), d.name(), " f", k);
        if (k > 0) CHECK(complex.incidence(k - 1, k) == stabilizer_ratio(d, c[k - 1], c[k]));
      }
    }
  }
}

TEST_CASE("edges are equal and double counting holds up to rank 8") {
  for (const Diagram& d : chains(2, 8)) {
    for (End end : {End::Left, End::Right}) {
      const FaceComplex complex(d, end);
      const auto& pts = complex.vertices().points();
      const auto& edges = complex.faces(1);
      REQUIRE_FALSE(edges.empty());
      const auto length = [&](const FaceComplex::IndexFace& e) {
        REQUIRE(e.size() == 2);
        const Point diff = pts[e[0]] - pts[e[1]];
        return inner(d, diff, diff);
      };
      const QSqrt5 first = length(edges.front());
      CHECK(sign(first) == 1);
      bool uniform = true;
      for (const auto& e : edges) uniform = uniform && length(e) == first;
      CHECK_MESSAGE(uniform, d.name());
      CHECK(pts.size() * complex.incidence(0, 1) == 2 * edges.size());
    }
  }
}

TEST_CASE("face complex geometry round trip") {
  const FaceComplex complex(B3, End::Left);
  const GeometricFace rep = complex.to_geometric(complex.representative(2));
  CHECK(rep == realize_representative(B3, dec("ffs")));
  const auto& tris = complex.faces(2);
  CHECK(std::find(tris.begin(), tris.end(), complex.representative(2)) != tris.end());
  CHECK(complex.incidence(0, 2) == 4);
  CHECK(complex.incidence(1, 2) == 2);
}
