#include "platonic/diagram.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <sstream>

#include "platonic/error.hpp"

namespace platonic {

// ---------------------------------------------------------------------------
// NodeSet

NodeSet::NodeSet(std::initializer_list<int> nodes) {
  for (int n : nodes) insert(n);
}

NodeSet NodeSet::range(int first, int last) {
  NodeSet s;
  for (int i = first; i <= last; ++i) s.insert(i);
  return s;
}

int NodeSet::size() const { return std::popcount(bits_); }

std::vector<int> NodeSet::nodes() const {
  std::vector<int> out;
  for (std::uint32_t b = bits_; b != 0; b &= b - 1) {
    out.push_back(std::countr_zero(b) + 1);
  }
  return out;
}

std::string NodeSet::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int n : nodes()) {
    if (!first) os << ',';
    os << n;
    first = false;
  }
  os << '}';
  return os.str();
}

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(std::initializer_list<std::initializer_list<QSqrt5>> rows)
    : Matrix(static_cast<int>(rows.size())) {
  int r = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n_) throw Error("Matrix: ragged initializer");
    int c = 0;
    for (const auto& v : row) (*this)(r, c++) = v;
    ++r;
  }
}

Matrix Matrix::transpose() const {
  Matrix t(n_);
  for (int r = 0; r < n_; ++r) {
    for (int c = 0; c < n_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

Matrix operator*(const Matrix& x, const Matrix& y) {
  const int n = x.size();
  Matrix out(n);
  for (int r = 0; r < n; ++r) {
    for (int k = 0; k < n; ++k) {
      if (x(r, k).is_zero()) continue;
      for (int c = 0; c < n; ++c) out(r, c) += x(r, k) * y(k, c);
    }
  }
  return out;
}

Matrix Matrix::inverse() const {
  Matrix work = *this;
  Matrix inv(n_);
  for (int i = 0; i < n_; ++i) inv(i, i) = 1;

  for (int col = 0; col < n_; ++col) {
    int pivot = col;
    while (pivot < n_ && work(pivot, col).is_zero()) ++pivot;
    if (pivot == n_) throw InternalError("Matrix::inverse: singular matrix");
    if (pivot != col) {
      for (int c = 0; c < n_; ++c) {
        std::swap(work(pivot, c), work(col, c));
        std::swap(inv(pivot, c), inv(col, c));
      }
    }
    const QSqrt5 scale = invert(work(col, col));
    for (int c = 0; c < n_; ++c) {
      work(col, c) *= scale;
      inv(col, c) *= scale;
    }
    for (int r = 0; r < n_; ++r) {
      if (r == col || work(r, col).is_zero()) continue;
      const QSqrt5 factor = work(r, col);
      for (int c = 0; c < n_; ++c) {
        work(r, c) -= factor * work(col, c);
        inv(r, c) -= factor * inv(col, c);
      }
    }
  }
  return inv;
}

QSqrt5 Matrix::leading_minor(int k) const {
  Matrix work(k);
  for (int r = 0; r < k; ++r) {
    for (int c = 0; c < k; ++c) work(r, c) = (*this)(r, c);
  }
  QSqrt5 det = 1;
  for (int col = 0; col < k; ++col) {
    int pivot = col;
    while (pivot < k && work(pivot, col).is_zero()) ++pivot;
    if (pivot == k) return 0;
    if (pivot != col) {
      for (int c = 0; c < k; ++c) std::swap(work(pivot, c), work(col, c));
      det = -det;
    }
    det *= work(col, col);
    const QSqrt5 inv_pivot = invert(work(col, col));
    for (int r = col + 1; r < k; ++r) {
      if (work(r, col).is_zero()) continue;
      const QSqrt5 factor = work(r, col) * inv_pivot;
      for (int c = col; c < k; ++c) work(r, c) -= factor * work(col, c);
    }
  }
  return det;
}

// ---------------------------------------------------------------------------
// Diagram

std::string_view family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::F4: return "F";
    case Family::H2:
    case Family::H3:
    case Family::H4: return "H";
  }
  return "?";
}

namespace {

void check_rank(Family family, int rank) {
  const auto fail = [&](const std::string& why) {
    throw InvalidDiagram(std::string(family_name(family)) + std::to_string(rank) + ": " + why);
  };
  if (rank < 1) fail("rank must be positive");
  if (rank > kMaxRank) fail("rank exceeds supported maximum " + std::to_string(kMaxRank));
  switch (family) {
    case Family::A: break;
    case Family::B:
    case Family::C:
      if (rank < 2) fail("B_n and C_n need n >= 2");
      break;
    case Family::D:
      if (rank < 4) fail("D_n needs n >= 4");
      break;
    case Family::F4:
      if (rank != 4) fail("F4 has rank 4");
      break;
    case Family::H2:
      if (rank != 2) fail("H2 has rank 2");
      break;
    case Family::H3:
      if (rank != 3) fail("H3 has rank 3");
      break;
    case Family::H4:
      if (rank != 4) fail("H4 has rank 4");
      break;
  }
}

// (a_i|a_j) for an edge with label m between roots of squared lengths li, lj.
QSqrt5 edge_product(int m, const QSqrt5& li, const QSqrt5& lj) {
  switch (m) {
    case 2: return 0;
    case 3:
      if (li != lj) break;
      return -li / 2;
    case 4:
      // Lengths 2 and 1: |a_i||a_j| cos(3pi/4) = -sqrt2 * 1/sqrt2.
      if (li * lj != 2) break;
      return -1;
    case 5:
      // 2 cos(pi/5) = tau.
      if (li != lj) break;
      return -li / 2 * QSqrt5::golden();
    default: break;
  }
  throw InternalError("edge label " + std::to_string(m) + " with incompatible root lengths");
}

}  // namespace

Diagram::Diagram(Family family, int rank)
    : family_(family),
      rank_(rank),
      labels_(static_cast<std::size_t>(rank) * rank, 2),
      root_length2_(static_cast<std::size_t>(rank), QSqrt5(2)) {
  const auto set_label = [this](int i, int j, int m) {
    labels_[static_cast<std::size_t>(i - 1) * rank_ + (j - 1)] = m;
    labels_[static_cast<std::size_t>(j - 1) * rank_ + (i - 1)] = m;
  };
  for (int i = 1; i <= rank; ++i) set_label(i, i, 1);

  if (family == Family::D) {
    for (int i = 1; i + 1 <= rank - 1; ++i) set_label(i, i + 1, 3);
    set_label(rank - 2, rank, 3);
  } else {
    for (int i = 1; i < rank; ++i) set_label(i, i + 1, 3);
  }

  switch (family) {
    case Family::B:
      set_label(rank - 1, rank, 4);
      root_length2_[rank - 1] = 1;
      break;
    case Family::C:
      set_label(rank - 1, rank, 4);
      for (int i = 0; i < rank - 1; ++i) root_length2_[i] = 1;
      break;
    case Family::F4:
      set_label(2, 3, 4);
      root_length2_[2] = 1;
      root_length2_[3] = 1;
      break;
    case Family::H2:
    case Family::H3:
    case Family::H4:
      set_label(rank - 1, rank, 5);
      break;
    default: break;
  }

  const Matrix roots = root_gram();
  cartan_ = Matrix(rank);
  for (int i = 0; i < rank; ++i) {
    for (int j = 0; j < rank; ++j) cartan_(i, j) = 2 * roots(i, j) / roots(j, j);
  }
  const Matrix cinv = cartan_.inverse();
  weight_gram_ = cinv * roots * cinv.transpose();
}

Diagram Diagram::build(Family family, int rank) {
  check_rank(family, rank);
  return Diagram(family, rank);
}

Diagram Diagram::parse(std::string_view name, std::optional<int> rank) {
  const auto bad = [&](const std::string& why) {
    throw InvalidDiagram("cannot parse diagram name '" + std::string(name) + "': " + why);
  };
  while (!name.empty() && std::isspace(static_cast<unsigned char>(name.front()))) name.remove_prefix(1);
  while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back()))) name.remove_suffix(1);
  if (name.empty()) bad("empty");

  const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(name.front())));
  const std::string_view digits = name.substr(1);
  std::optional<int> parsed;
  if (!digits.empty()) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) bad("rank is not an integer");
    parsed = value;
  }
  if (parsed && rank && *parsed != *rank) bad("rank given twice with different values");
  const std::optional<int> n = parsed ? parsed : rank;
  if (!n) bad("missing rank");

  switch (letter) {
    case 'A': return build(Family::A, *n);
    case 'B': return build(Family::B, *n);
    case 'C': return build(Family::C, *n);
    case 'D': return build(Family::D, *n);
    case 'F': return build(Family::F4, *n);
    case 'H':
      if (*n == 2) return build(Family::H2, 2);
      if (*n == 3) return build(Family::H3, 3);
      if (*n == 4) return build(Family::H4, 4);
      bad("H_n exists only for n = 2, 3, 4");
      break;
    default: break;
  }
  bad("unknown family letter");
  return build(Family::A, 1);  // unreachable
}

std::string Diagram::name() const {
  return std::string(family_name(family_)) + std::to_string(rank_);
}

int Diagram::label(int i, int j) const {
  return labels_[static_cast<std::size_t>(i - 1) * rank_ + (j - 1)];
}

std::vector<int> Diagram::neighbours(int node) const {
  std::vector<int> out;
  for (int j = 1; j <= rank_; ++j) {
    if (adjacent(node, j)) out.push_back(j);
  }
  return out;
}

Matrix Diagram::root_gram() const {
  Matrix g(rank_);
  for (int i = 1; i <= rank_; ++i) {
    for (int j = 1; j <= rank_; ++j) {
      g(i - 1, j - 1) = i == j ? root_length2_[i - 1]
                               : edge_product(label(i, j), root_length2_[i - 1],
                                              root_length2_[j - 1]);
    }
  }
  return g;
}

Matrix cartan_matrix(const Diagram& d) { return d.cartan(); }

Matrix gram_matrix_weights(const Diagram& d) { return d.weight_gram(); }

// ---------------------------------------------------------------------------
// Orders

namespace {

Count factorial(int n) {
  Count f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<Count>(i);
  return f;
}

}  // namespace

Count group_order(Family family, int rank) {
  switch (family) {
    case Family::A: return factorial(rank + 1);
    case Family::B:
    case Family::C: return factorial(rank) << rank;
    case Family::D: return factorial(rank) << (rank - 1);
    case Family::F4: return 1152;
    case Family::H2: return 10;
    case Family::H3: return 120;
    case Family::H4: return 14400;
  }
  return 0;
}

Count group_order(const Diagram& d) { return group_order(d.family(), d.rank()); }

Count root_count(const Diagram& d) {
  const Count n = static_cast<Count>(d.rank());
  switch (d.family()) {
    case Family::A: return n * (n + 1);
    case Family::B:
    case Family::C: return 2 * n * n;
    case Family::D: return 2 * n * n - 2 * n;
    case Family::F4: return 48;
    case Family::H2: return 10;
    case Family::H3: return 30;
    case Family::H4: return 60;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Parabolic sub-diagrams

namespace {

Component classify_component(const Diagram& d, NodeSet nodes) {
  const auto unclassifiable = [&]() {
    throw InvalidDiagram("sub-diagram " + nodes.to_string() + " of " + d.name() +
                         " is not of a supported finite type");
  };
  const std::vector<int> members = nodes.nodes();
  const int k = static_cast<int>(members.size());
  if (k == 1) return {Family::A, 1, nodes};

  const auto degree = [&](int v) {
    int deg = 0;
    for (int u : members) deg += d.adjacent(u, v) ? 1 : 0;
    return deg;
  };

  // Forked component: D_k has one node of degree 3 and two arms of length one.
  const auto centre = std::find_if(members.begin(), members.end(),
                                   [&](int v) { return degree(v) >= 3; });
  if (centre != members.end()) {
    if (degree(*centre) != 3) unclassifiable();
    int leaves_next_to_centre = 0;
    for (int v : members) {
      if (v == *centre) continue;
      if (degree(v) > 2) unclassifiable();
      if (d.adjacent(v, *centre) && degree(v) == 1) ++leaves_next_to_centre;
      for (int u : members) {
        if (d.adjacent(u, v) && d.label(u, v) != 3) unclassifiable();
      }
    }
    if (leaves_next_to_centre < 2) unclassifiable();
    return {Family::D, k, nodes};
  }

  // Path: walk from an endpoint and record the label sequence.
  const auto start = std::find_if(members.begin(), members.end(),
                                  [&](int v) { return degree(v) == 1; });
  if (start == members.end()) unclassifiable();
  std::vector<int> path{*start};
  std::vector<int> labels;
  while (static_cast<int>(path.size()) < k) {
    const int last = path.back();
    const int prev = path.size() > 1 ? path[path.size() - 2] : 0;
    int next = 0;
    for (int u : members) {
      if (u != prev && d.adjacent(last, u)) next = u;
    }
    if (next == 0) unclassifiable();
    labels.push_back(d.label(last, next));
    path.push_back(next);
  }

  std::vector<std::size_t> special;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] != 3) special.push_back(i);
  }
  if (special.empty()) return {Family::A, k, nodes};
  if (special.size() > 1) unclassifiable();

  const std::size_t pos = special.front();
  const bool at_end = pos == 0 || pos + 1 == labels.size();
  const int m = labels[pos];
  if (m == 4) {
    if (at_end) {
      if (k == 2) return {Family::B, 2, nodes};
      // Orient so the 4 is the last edge; B if the terminal root is short.
      const int terminal = pos == 0 ? path.front() : path.back();
      const int inner = pos == 0 ? path[1] : path[path.size() - 2];
      const bool short_terminal = d.root_length2(terminal) < d.root_length2(inner);
      return {short_terminal ? Family::B : Family::C, k, nodes};
    }
    if (k == 4 && pos == 1) return {Family::F4, 4, nodes};
  }
  if (m == 5 && at_end) {
    if (k == 2) return {Family::H2, 2, nodes};
    if (k == 3) return {Family::H3, 3, nodes};
    if (k == 4) return {Family::H4, 4, nodes};
  }
  unclassifiable();
  return {Family::A, 0, nodes};  // unreachable
}

}  // namespace

std::vector<Component> classify_parabolic(const Diagram& d, NodeSet nodes) {
  if (!nodes.is_subset_of(d.all_nodes())) {
    throw InvalidDiagram("node set " + nodes.to_string() + " is not a subset of " + d.name());
  }
  std::vector<Component> out;
  NodeSet remaining = nodes;
  while (!remaining.empty()) {
    const int root = remaining.nodes().front();
    NodeSet component{root};
    std::vector<int> stack{root};
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int u : d.neighbours(v)) {
        if (remaining.contains(u) && !component.contains(u)) {
          component.insert(u);
          stack.push_back(u);
        }
      }
    }
    out.push_back(classify_component(d, component));
    for (int v : component.nodes()) remaining.erase(v);
  }
  return out;
}

Count parabolic_order(const Diagram& d, NodeSet nodes) {
  Count order = 1;
  for (const Component& c : classify_parabolic(d, nodes)) order *= group_order(c.family, c.rank);
  return order;
}

bool is_platonic_chain(const Diagram& d) {
  const int n = d.rank();
  int edges = 0;
  for (int i = 1; i <= n; ++i) {
    const auto deg = d.neighbours(i).size();
    if (deg > 2) return false;
    edges += static_cast<int>(deg);
  }
  edges /= 2;
  // A forest with n - 1 edges and max degree 2 is a single path.
  if (edges != n - 1) return false;
  NodeSet seen{1};
  std::vector<int> stack{1};
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int u : d.neighbours(v)) {
      if (!seen.contains(u)) {
        seen.insert(u);
        stack.push_back(u);
      }
    }
  }
  return seen.size() == n;
}

}  // namespace platonic
