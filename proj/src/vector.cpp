#include "q2n/vector.hpp"

#include <ostream>

namespace q2n {

namespace {
void require_same_dim(const VectorQ& a, const VectorQ& b, const char* op) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatch(std::string(op) + ": dimensions " + std::to_string(a.dim()) +
                            " and " + std::to_string(b.dim()) + " differ");
  }
}
}  // namespace

VectorQ::VectorQ(std::vector<Rational> components) : c_(std::move(components)) {
  if (c_.empty()) throw DimensionMismatch("vector dimension must be positive");
}

VectorQ VectorQ::zero(int dim) {
  if (dim <= 0) throw DimensionMismatch("vector dimension must be positive");
  return VectorQ(std::vector<Rational>(static_cast<size_t>(dim), Rational(0)));
}

VectorQ VectorQ::basis(int dim, int i) {
  VectorQ v = zero(dim);
  if (i < 0 || i >= dim) throw DimensionMismatch("basis index out of range");
  v.c_[static_cast<size_t>(i)] = Rational(1);
  return v;
}

VectorQ VectorQ::operator+(const VectorQ& o) const {
  require_same_dim(*this, o, "vector add");
  std::vector<Rational> r;
  r.reserve(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r.push_back(c_[i] + o.c_[i]);
  return VectorQ(std::move(r));
}

VectorQ VectorQ::operator-(const VectorQ& o) const {
  require_same_dim(*this, o, "vector subtract");
  std::vector<Rational> r;
  r.reserve(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r.push_back(c_[i] - o.c_[i]);
  return VectorQ(std::move(r));
}

VectorQ VectorQ::operator-() const {
  std::vector<Rational> r;
  r.reserve(c_.size());
  for (const auto& x : c_) r.push_back(-x);
  return VectorQ(std::move(r));
}

VectorQ VectorQ::operator*(const Rational& s) const {
  std::vector<Rational> r;
  r.reserve(c_.size());
  for (const auto& x : c_) r.push_back(x * s);
  return VectorQ(std::move(r));
}

bool VectorQ::is_zero() const {
  for (const auto& x : c_)
    if (!x.is_zero()) return false;
  return true;
}

Rational VectorQ::dot(const VectorQ& o) const {
  require_same_dim(*this, o, "dot");
  Rational acc(0);
  for (size_t i = 0; i < c_.size(); ++i) acc += c_[i] * o.c_[i];
  return acc;
}

Rational VectorQ::norm_sq() const { return dot(*this); }

std::ostream& operator<<(std::ostream& os, const VectorQ& v) {
  os << "(";
  for (int i = 0; i < v.dim(); ++i) {
    if (i) os << ", ";
    os << v[i];
  }
  return os << ")";
}

VectorQ cross3(const VectorQ& x, const VectorQ& y) {
  if (x.dim() != 3 || y.dim() != 3) {
    throw DimensionMismatch("cross product requires dimension 3, got " +
                            std::to_string(x.dim()) + " and " + std::to_string(y.dim()));
  }
  return VectorQ{x[1] * y[2] - x[2] * y[1],
                 x[2] * y[0] - x[0] * y[2],
                 x[0] * y[1] - x[1] * y[0]};
}

Rational norm_sq_cross(const VectorQ& x, const VectorQ& y) {
  return cross3(x, y).norm_sq();
}

}  // namespace q2n
