#include "platonic/orbit.hpp"

#include <sstream>

#include "platonic/error.hpp"

namespace platonic {

Point Point::weight(int rank, int i) {
  Point p = zero(rank);
  p[i] = 1;
  return p;
}

Point operator-(const Point& x, const Point& y) {
  std::vector<QSqrt5> out(x.coords_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = x.coords_[i] - y.coords_[i];
  return Point(std::move(out));
}

std::strong_ordering operator<=>(const Point& x, const Point& y) {
  const std::size_t n = std::min(x.coords_.size(), y.coords_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (x.coords_[i] == y.coords_[i]) continue;
    return x.coords_[i] <=> y.coords_[i];
  }
  return x.coords_.size() <=> y.coords_.size();
}

std::string Point::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) os << ", ";
    os << coords_[i];
  }
  os << ')';
  return os.str();
}

std::string Point::to_weight_string() const {
  std::string out;
  for (int i = 1; i <= size(); ++i) {
    const QSqrt5& c = (*this)[i];
    if (c.is_zero()) continue;
    const std::string w = "w" + std::to_string(i);
    const bool negative = sign(c) < 0;
    const QSqrt5 magnitude = negative ? -c : c;
    std::string term;
    if (magnitude == 1) {
      term = w;
    } else if (magnitude.is_rational() || magnitude.rational() == 0) {
      term = magnitude.to_string() + " " + w;
    } else {
      term = "(" + magnitude.to_string() + ") " + w;
    }
    if (out.empty()) {
      out = (negative ? "-" : "") + term;
    } else {
      out += (negative ? " - " : " + ") + term;
    }
  }
  return out.empty() ? "0" : out;
}

std::size_t Point::hash() const {
  std::size_t seed = coords_.size();
  for (const QSqrt5& c : coords_) {
    seed ^= c.hash() + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
  }
  return seed;
}

Point reflect(const Diagram& d, int node, const Point& x) {
  const QSqrt5& xi = x[node];
  if (xi.is_zero()) return x;
  Point out = x;
  const Matrix& cartan = d.cartan();
  for (int j = 1; j <= d.rank(); ++j) {
    const QSqrt5& c = cartan(node - 1, j - 1);
    if (!c.is_zero()) out[j] -= xi * c;
  }
  return out;
}

std::int64_t OrbitResult::index_of(const Point& p) const {
  const auto it = index_.find(p);
  return it == index_.end() ? -1 : static_cast<std::int64_t>(it->second);
}

OrbitResult orbit(const Diagram& d, const Point& seed, NodeSet generators) {
  if (seed.size() != d.rank()) {
    throw Error("orbit: seed has " + std::to_string(seed.size()) + " coordinates, " + d.name() +
                " has rank " + std::to_string(d.rank()));
  }
  if (!generators.is_subset_of(d.all_nodes())) {
    throw InvalidDiagram("orbit: generators " + generators.to_string() + " not in " + d.name());
  }
  OrbitResult r;
  r.generators_ = generators;
  r.action_.resize(static_cast<std::size_t>(d.rank()));
  r.points_.push_back(seed);
  r.index_.emplace(seed, 0);

  const std::vector<int> gens = generators.nodes();
  for (std::size_t head = 0; head < r.points_.size(); ++head) {
    for (int g : gens) {
      // Copy: push_back below may reallocate points_.
      Point image = reflect(d, g, r.points_[head]);
      auto [it, inserted] =
          r.index_.try_emplace(std::move(image), static_cast<std::uint32_t>(r.points_.size()));
      if (inserted) r.points_.push_back(it->first);
      auto& row = r.action_[g - 1];
      if (row.size() <= head) row.resize(head + 1);
      row[head] = it->second;
    }
  }
  for (int g : gens) r.action_[g - 1].resize(r.points_.size());
  return r;
}

Count stabilizer_order_of_point(const Diagram& d, const Point& seed) {
  const Count order = group_order(d);
  const Count size = orbit(d, seed, d.all_nodes()).size();
  if (order % size != 0) {
    throw InternalError("orbit of " + seed.to_string() + " in " + d.name() + " has size " +
                        std::to_string(size) + ", which does not divide |W| = " +
                        std::to_string(order));
  }
  return order / size;
}

QSqrt5 inner(const Diagram& d, const Point& x, const Point& y) {
  const Matrix& g = d.weight_gram();
  QSqrt5 total;
  for (int i = 1; i <= d.rank(); ++i) {
    if (x[i].is_zero()) continue;
    QSqrt5 row;
    for (int j = 1; j <= d.rank(); ++j) {
      if (!y[j].is_zero()) row += g(i - 1, j - 1) * y[j];
    }
    total += x[i] * row;
  }
  return total;
}

}  // namespace platonic
