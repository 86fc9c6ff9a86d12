#include "platonic/verify.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

#include "platonic/decoration.hpp"
#include "platonic/diagram.hpp"
#include "platonic/facelattice.hpp"
#include "platonic/orbit.hpp"
#include "platonic/report.hpp"

namespace platonic {

namespace {

class Checker {
 public:
  explicit Checker(CheckResult& r) : r_(r) {}

  template <class T, class U>
  void equal(const std::string& what, const T& expected, const U& computed) {
    if (expected == computed) return;
    std::ostringstream os;
    os << what << ": expected " << expected << ", computed " << computed;
    r_.mismatches.push_back(os.str());
  }
  void require(const std::string& what, bool ok) {
    if (!ok) r_.mismatches.push_back(what);
  }
  void note(std::string text) { r_.notes.push_back(std::move(text)); }

 private:
  CheckResult& r_;
};

Count factorial(int n) {
  Count f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<Count>(i);
  return f;
}

Count pow2(int n) { return Count{1} << n; }

std::string nodes_str(NodeSet s) { return s.to_string(); }

std::string nodes_str(const std::vector<int>& v) {
  NodeSet s;
  for (int n : v) s.insert(n);
  return s.to_string();
}

/// Diagrams whose chain polytopes the invariant suites sweep.
std::vector<Diagram> chain_diagrams_up_to(int max_rank) {
  std::vector<Diagram> out;
  for (int n = 1; n <= max_rank; ++n) out.push_back(Diagram::build(Family::A, n));
  for (int n = 2; n <= max_rank; ++n) out.push_back(Diagram::build(Family::B, n));
  for (int n = 2; n <= max_rank; ++n) out.push_back(Diagram::build(Family::C, n));
  out.push_back(Diagram::build(Family::F4, 4));
  out.push_back(Diagram::build(Family::H2, 2));
  out.push_back(Diagram::build(Family::H3, 3));
  out.push_back(Diagram::build(Family::H4, 4));
  return out;
}

// ---------------------------------------------------------------------------
// Group orders and root counts.

void check_orders(Checker& c) {
  struct Expect {
    Family family;
    int rank;
    Count order;
    Count roots;
  };
  std::vector<Expect> rows;
  for (int n = 1; n <= 8; ++n) {
    const Count nn = static_cast<Count>(n);
    rows.push_back({Family::A, n, factorial(n + 1), nn * (nn + 1)});
    if (n >= 2) {
      rows.push_back({Family::B, n, factorial(n) * pow2(n), 2 * nn * nn});
      rows.push_back({Family::C, n, factorial(n) * pow2(n), 2 * nn * nn});
    }
    if (n >= 4) rows.push_back({Family::D, n, factorial(n) * pow2(n - 1), 2 * nn * nn - 2 * nn});
  }
  rows.push_back({Family::F4, 4, 128 * 9, 48});
  rows.push_back({Family::H2, 2, 2 * 5, 10});
  rows.push_back({Family::H3, 3, 8 * 3 * 5, 30});
  rows.push_back({Family::H4, 4, 64 * 9 * 25, 60});
  for (const Expect& e : rows) {
    const Diagram d = Diagram::build(e.family, e.rank);
    c.equal("|W(" + d.name() + ")|", e.order, group_order(d));
    c.equal("|roots(" + d.name() + ")|", e.roots, root_count(d));
  }
}

// ---------------------------------------------------------------------------
// Face tables in dimensions 3 and 4.

struct TableRow {
  const char* decoration;
  std::vector<int> face_nodes;
  std::vector<int> stab_nodes;
  int d;
  int v;
  std::vector<Count> counts;  // one per column
};

void check_face_table(Checker& c, const std::vector<std::vector<Diagram>>& columns,
                      const std::vector<TableRow>& table) {
  for (std::size_t col = 0; col < columns.size(); ++col) {
    for (const Diagram& d : columns[col]) {
      const auto rows = face_table(d);
      c.equal(d.name() + " row count", table.size(), rows.size());
      if (rows.size() != table.size()) continue;
      for (std::size_t r = 0; r < table.size(); ++r) {
        const TableRow& e = table[r];
        const FaceClass& fc = rows[r];
        const std::string at = d.name() + " row " + std::to_string(r + 1);
        c.equal(at + " decoration", std::string(e.decoration), fc.decoration.to_string());
        c.equal(at + " G_f", nodes_str(e.face_nodes), nodes_str(fc.face_nodes));
        c.equal(at + " G_s", nodes_str(e.stab_nodes), nodes_str(fc.stab_nodes));
        c.equal(at + " d", e.d, fc.dimension);
        c.equal(at + " v", e.v, fc.dual_dimension);
        c.equal(at + " count", e.counts[col], fc.count);
        c.equal(at + " enumerated faces", e.counts[col],
                static_cast<Count>(enumerate_faces(d, fc.decoration).size()));
      }
    }
  }
}

void check_dim3(Checker& c) {
  const std::vector<TableRow> table = {
      {"soo", {}, {2, 3}, 0, 2, {4, 6, 12}},
      {"oos", {}, {1, 2}, 0, 2, {4, 8, 20}},
      {"fso", {1}, {3}, 1, 1, {6, 12, 30}},
      {"osf", {3}, {1}, 1, 1, {6, 12, 30}},
      {"ffs", {1, 2}, {}, 2, 0, {4, 8, 20}},
      {"sff", {2, 3}, {}, 2, 0, {4, 6, 12}},
  };
  check_face_table(c,
                   {{Diagram::build(Family::A, 3)},
                    {Diagram::build(Family::B, 3), Diagram::build(Family::C, 3)},
                    {Diagram::build(Family::H3, 3)}},
                   table);
}

void check_dim4(Checker& c) {
  const std::vector<TableRow> table = {
      {"sooo", {}, {2, 3, 4}, 0, 3, {5, 8, 24, 120}},
      {"ooos", {}, {1, 2, 3}, 0, 3, {5, 16, 24, 600}},
      {"fsoo", {1}, {3, 4}, 1, 2, {10, 24, 96, 720}},
      {"oosf", {4}, {1, 2}, 1, 2, {10, 32, 96, 1200}},
      {"ffso", {1, 2}, {4}, 2, 1, {10, 32, 96, 1200}},
      {"osff", {3, 4}, {1}, 2, 1, {10, 24, 96, 720}},
      {"fffs", {1, 2, 3}, {}, 3, 0, {5, 16, 24, 600}},
      {"sfff", {2, 3, 4}, {}, 3, 0, {5, 8, 24, 120}},
  };
  check_face_table(c,
                   {{Diagram::build(Family::A, 4)},
                    {Diagram::build(Family::B, 4), Diagram::build(Family::C, 4)},
                    {Diagram::build(Family::F4, 4)},
                    {Diagram::build(Family::H4, 4)}},
                   table);
}

// ---------------------------------------------------------------------------
// Meeting numbers of the 4-dimensional solids.

void check_meetings4(Checker& c) {
  struct Row {
    const char* name;
    Family family;
    End end;
    Count f0;
    Count f1_f0;
    Count f2_f1;
  };
  const std::vector<Row> rows = {
      {"pentatope", Family::A, End::Left, 5, 4, 3},
      {"16-cell", Family::B, End::Left, 8, 6, 4},
      {"tesseract", Family::B, End::Right, 16, 4, 3},
      {"24-cell", Family::F4, End::Left, 24, 8, 3},
      {"600-cell", Family::H4, End::Left, 120, 12, 5},  // commonly misprinted as 20
      {"120-cell", Family::H4, End::Right, 600, 4, 3},
  };
  for (const Row& r : rows) {
    const Diagram d = Diagram::build(r.family, 4);
    const auto ch = chain(d, r.end);
    const FaceComplex complex(d, r.end);
    const std::string at = std::string(r.name) + " (" + d.name() + " " +
                           std::string(end_name(r.end)) + ")";
    c.equal(at + " name", std::string(r.name), polytope_name(d, r.end));
    c.equal(at + " #f0", r.f0, face_count(d, ch[0]));
    c.equal(at + " #f1(f0) ratio", r.f1_f0, stabilizer_ratio(d, ch[0], ch[1]));
    c.equal(at + " #f1(f0) geometric", r.f1_f0, complex.incidence(0, 1));
    c.equal(at + " #f2(f1) ratio", r.f2_f1, stabilizer_ratio(d, ch[1], ch[2]));
    c.equal(at + " #f2(f1) geometric", r.f2_f1, complex.incidence(1, 2));
    if (r.family == Family::H4 && r.end == End::Left) {
      const auto notes = meeting_notes(d, r.end, 0, 1);
      bool emitted = false;
      for (const auto& n : notes) {
        if (n.find("erratum") != std::string::npos) {
          emitted = true;
          c.note(n);
        }
      }
      c.require("600-cell edges-per-vertex erratum note not emitted", emitted);
    }
  }
}

// ---------------------------------------------------------------------------
// Closed-form face counts in rank n.

std::string chain_pattern(int n, End end, int k) {
  std::string s = std::string(static_cast<std::size_t>(k), 'f') + "s" +
                  std::string(static_cast<std::size_t>(n - k - 1), 'o');
  return end == End::Left ? s : std::string(s.rbegin(), s.rend());
}

void check_rank_n_counts(Checker& c) {
  using Formula = std::function<Count(int)>;
  const auto F = factorial;
  // Entries for rows k = 0, 1, 2, n-2, n-1; left then right.
  struct Row {
    int k_from_start;  // >= 0: k; < 0: k = n + value
    End end;
    Formula simplex;
    Formula cube_family;
  };
  const std::vector<Row> rows = {
      {0, End::Left, [&](int n) { return F(n + 1) / F(n); },
       [&](int n) { return pow2(n) * F(n) / (pow2(n - 1) * F(n - 1)); }},
      {0, End::Right, [&](int n) { return F(n + 1) / F(n); },
       [&](int n) { return pow2(n) * F(n) / F(n); }},
      {1, End::Left, [&](int n) { return F(n + 1) / (F(2) * F(n - 1)); },
       [&](int n) { return pow2(n) * F(n) / (F(2) * pow2(n - 2) * F(n - 2)); }},
      {1, End::Right, [&](int n) { return F(n + 1) / (F(n - 1) * F(2)); },
       [&](int n) { return pow2(n) * F(n) / (F(n - 1) * F(2)); }},
      {2, End::Left, [&](int n) { return F(n + 1) / (F(3) * F(n - 2)); },
       [&](int n) { return pow2(n) * F(n) / (F(3) * pow2(n - 3) * F(n - 3)); }},
      {2, End::Right, [&](int n) { return F(n + 1) / (F(n - 2) * F(3)); },
       [&](int n) { return pow2(n) * F(n) / (F(n - 2) * pow2(2) * F(2)); }},
      {-2, End::Left, [&](int n) { return F(n + 1) / (F(n - 1) * F(2)); },
       [&](int n) { return pow2(n) * F(n) / (F(2) * F(n - 1)); }},
      {-2, End::Right, [&](int n) { return F(n + 1) / (F(2) * F(n - 1)); },
       [&](int n) { return pow2(n) * F(n) / (F(2) * pow2(n - 2) * F(n - 2)); }},
      {-1, End::Left, [&](int n) { return F(n + 1) / F(n); },
       [&](int n) { return pow2(n) * F(n) / F(n); }},
      {-1, End::Right, [&](int n) { return F(n + 1) / F(n); },
       [&](int n) { return pow2(n) * F(n) / (pow2(n - 1) * F(n - 1)); }},
  };
  for (int n : {5, 6, 7}) {
    for (Family fam : {Family::A, Family::B, Family::C}) {
      const Diagram d = Diagram::build(fam, n);
      for (const Row& r : rows) {
        const int k = r.k_from_start >= 0 ? r.k_from_start : n + r.k_from_start;
        const FaceClass fc = face_table(d, r.end)[static_cast<std::size_t>(k)];
        const std::string at = d.name() + " " + std::string(end_name(r.end)) + " f" +
                               std::to_string(k);
        c.equal(at + " decoration", chain_pattern(n, r.end, k), fc.decoration.to_string());
        const Count expected = fam == Family::A ? r.simplex(n) : r.cube_family(n);
        c.equal(at + " count", expected, fc.count);
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Meeting numbers in rank n.

void check_rank_n_meetings(Checker& c) {
  struct Row {
    const char* name;
    Family family;
    End end;
    std::function<Count(int)> f0;
    std::function<Count(int, int)> meet;  // #f_k(f_{k-1})
  };
  const std::vector<Row> rows = {
      {"simplex", Family::A, End::Left, [](int n) { return static_cast<Count>(n + 1); },
       [](int n, int k) { return static_cast<Count>(n - k + 1); }},
      {"cross-polytope", Family::B, End::Left, [](int n) { return static_cast<Count>(2 * n); },
       [](int n, int k) { return static_cast<Count>(2 * (n - k)); }},
      {"cross-polytope", Family::C, End::Left, [](int n) { return static_cast<Count>(2 * n); },
       [](int n, int k) { return static_cast<Count>(2 * (n - k)); }},
      {"hypercube", Family::B, End::Right, [](int n) { return pow2(n); },
       [](int n, int k) { return static_cast<Count>(n - k + 1); }},
      {"hypercube", Family::C, End::Right, [](int n) { return pow2(n); },
       [](int n, int k) { return static_cast<Count>(n - k + 1); }},
  };
  for (int n = 5; n <= 8; ++n) {
    for (const Row& r : rows) {
      const Diagram d = Diagram::build(r.family, n);
      const auto ch = chain(d, r.end);
      const std::string at = std::string(r.name) + " " + d.name();
      c.equal(at + " #f0", r.f0(n), face_count(d, ch[0]));
      for (int k = 1; k <= n - 2; ++k) {
        c.equal(at + " #f" + std::to_string(k) + "(f" + std::to_string(k - 1) + ")",
                r.meet(n, k), stabilizer_ratio(d, ch[k - 1], ch[k]));
      }
    }
  }
  c.note("cross-polytope #f_{n-3}(f_{n-4}) = 2(n-(n-3)) = 6 for every n; a printed 8 in that "
         "column does not fit the 2(n-k) pattern of its own row");
}

// ---------------------------------------------------------------------------

void check_tetrahedron(Checker& c) {
  const Diagram a3 = Diagram::build(Family::A, 3);
  const auto pt = [](long x, long y, long z) { return Point({x, y, z}); };
  const std::vector<Point> left = {pt(1, 0, 0), pt(-1, 1, 0), pt(0, -1, 1), pt(0, 0, -1)};
  const std::vector<Point> right = {pt(0, 0, 1), pt(0, 1, -1), pt(1, -1, 0), pt(-1, 0, 0)};
  const auto sorted = [](std::vector<Point> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  const auto show = [](const std::vector<Point>& v) {
    std::string s;
    for (const auto& p : v) s += p.to_weight_string() + "; ";
    return s;
  };
  const auto o1 = orbit(a3, Point::weight(3, 1), a3.all_nodes()).points();
  const auto o3 = orbit(a3, Point::weight(3, 3), a3.all_nodes()).points();
  c.equal("A3 orbit of w1", show(sorted(left)), show(sorted(o1)));
  c.equal("A3 orbit of w3", show(sorted(right)), show(sorted(o3)));
}

void check_invariants(Checker& c) {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 5);
  const auto random_point = [&](int n) {
    std::vector<QSqrt5> coords;
    for (int i = 0; i < n; ++i) {
      coords.emplace_back(mpq_class(num(rng), den(rng)), mpq_class(num(rng), den(rng)));
    }
    return Point(std::move(coords));
  };

  for (const Diagram& d : chain_diagrams_up_to(8)) {
    const int n = d.rank();
    const long long euler_expected = n % 2 == 0 ? 0 : 2;
    for (End end : {End::Left, End::Right}) {
      const std::string at = d.name() + " " + std::string(end_name(end));
      c.equal(at + " Euler sum", euler_expected, euler_sum(d, end));

      for (const Decoration& dec : chain(d, end)) {
        const DualReading dual = dual_read(dec);
        const Count dual_count = group_order(d) / (parabolic_order(d, dual.face_nodes) *
                                                   parabolic_order(d, dual.stabilizer_nodes));
        c.equal(at + " " + dec.to_string() + " dual count", face_count(d, dec), dual_count);
        c.equal(at + " " + dec.to_string() + " d+v+1", n, dec.dimension() + dual.dimension + 1);
      }

      if (n < 2) continue;
      const FaceComplex complex(d, end);
      const auto& edges = complex.faces(1);
      const auto& pts = complex.vertices().points();
      const QSqrt5 len2 = inner(d, pts[edges[0][0]] - pts[edges[0][1]],
                                pts[edges[0][0]] - pts[edges[0][1]]);
      bool uniform = true;
      for (const auto& e : edges) {
        const Point diff = pts[e[0]] - pts[e[1]];
        uniform = uniform && inner(d, diff, diff) == len2;
      }
      c.require(at + " edge lengths not uniform", uniform);

      const auto ch = chain(d, end);
      const Count f0 = face_count(d, ch[0]);
      const Count f1 = face_count(d, ch[1]);
      c.equal(at + " f0*#f1(f0) geometric", 2 * f1, f0 * complex.incidence(0, 1));
      c.equal(at + " f0*#f1(f0) ratio", 2 * f1, f0 * stabilizer_ratio(d, ch[0], ch[1]));
    }

    if (d.family() == Family::A) {
      const auto left = face_table(d, End::Left);
      const auto right = face_table(d, End::Right);
      for (std::size_t k = 0; k < left.size(); ++k) {
        c.equal(d.name() + " mirror decoration f" + std::to_string(k),
                left[k].decoration.reversed().to_string(), right[k].decoration.to_string());
        c.equal(d.name() + " mirror count f" + std::to_string(k), left[k].count, right[k].count);
      }
    }
    if (d.family() == Family::B) {
      const Diagram cn = Diagram::build(Family::C, n);
      c.require(d.name() + " Cartan is not the transpose of " + cn.name(),
                d.cartan().transpose() == cn.cartan());
      for (End end : {End::Left, End::Right}) {
        const auto b = face_table(d, end);
        const auto cc = face_table(cn, end);
        for (std::size_t k = 0; k < b.size(); ++k) {
          c.equal(d.name() + "/" + cn.name() + " " + std::string(end_name(end)) + " f" +
                      std::to_string(k) + " count",
                  b[k].count, cc[k].count);
        }
      }
    }

    bool involution = true;
    bool isometry = true;
    for (int sample = 0; sample < 10; ++sample) {
      const Point x = random_point(n);
      const Point y = random_point(n);
      for (int i = 1; i <= n; ++i) {
        const Point rx = reflect(d, i, x);
        involution = involution && reflect(d, i, rx) == x;
        isometry = isometry && inner(d, rx, reflect(d, i, y)) == inner(d, x, y);
      }
    }
    c.require(d.name() + " reflection is not an involution", involution);
    c.require(d.name() + " reflection is not an isometry", isometry);
  }
}

void check_flags(Checker& c) {
  const Diagram b3 = Diagram::build(Family::B, 3);
  const auto ch = chain(b3, End::Left);
  c.equal("octahedron f0/f2 stabilizer ratio", Count{8}, stabilizer_ratio(b3, ch[0], ch[2]));
  c.equal("octahedron f0/f2 incidence", Count{4}, incidence_count(b3, ch[0], ch[2]));
  c.note("8 counts vertex-edge-triangle flags at a vertex; 4 triangles contain the vertex");
}

struct NamedCase {
  int id;
  const char* title;
  double limit;
  void (*run)(Checker&);
};

}  // namespace

std::vector<CheckResult> run_verification() {
  const std::vector<NamedCase> cases = {
      {1, "group orders and root counts", 1.0, check_orders},
      {2, "face counts of the 3-dimensional solids", 5.0, check_dim3},
      {3, "face counts of the 4-dimensional solids", 120.0, check_dim4},
      {4, "meeting numbers of the 4-dimensional solids", 120.0, check_meetings4},
      {5, "closed-form face counts at n = 5, 6, 7", 10.0, check_rank_n_counts},
      {6, "meeting numbers at n = 5..8", 5.0, check_rank_n_meetings},
      {7, "tetrahedron vertex orbits", 1.0, check_tetrahedron},
      {8, "invariant suites up to rank 8", 120.0, check_invariants},
      {9, "flag versus face counts on the octahedron", 5.0, check_flags},
  };
  std::vector<CheckResult> results;
  for (const NamedCase& s : cases) {
    CheckResult r;
    r.id = s.id;
    r.title = s.title;
    r.time_limit = s.limit;
    Checker checker(r);
    const auto start = std::chrono::steady_clock::now();
    try {
      s.run(checker);
    } catch (const std::exception& e) {
      r.mismatches.push_back(std::string("exception: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (r.seconds > r.time_limit) {
      std::ostringstream os;
      os << "took " << r.seconds << " s, limit " << r.time_limit << " s";
      r.mismatches.push_back(os.str());
    }
    if (!r.mismatches.empty()) {
      r.status = CheckStatus::Fail;
    } else if (!r.notes.empty()) {
      r.status = CheckStatus::PassWithNote;
    }
    results.push_back(std::move(r));
  }
  return results;
}

void print_verification(std::ostream& os, const std::vector<CheckResult>& results) {
  for (const CheckResult& r : results) {
    const char* tag = r.status == CheckStatus::Pass           ? "PASS"
                      : r.status == CheckStatus::PassWithNote ? "PASS-WITH-NOTE"
                                                              : "FAIL";
    os << "[" << tag << "] " << r.id << ". " << r.title << " (" << std::fixed
       << std::setprecision(3) << r.seconds << " s)\n";
    os.unsetf(std::ios::floatfield);
    for (const auto& n : r.notes) os << "    note: " << n << "\n";
    for (const auto& m : r.mismatches) os << "    " << m << "\n";
  }
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results) {
    if (r.status == CheckStatus::Fail) return false;
  }
  return true;
}

}  // namespace platonic
