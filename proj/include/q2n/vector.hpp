#pragma once

#include <initializer_list>
#include <iosfwd>
#include <vector>

#include "q2n/rational.hpp"

namespace q2n {

/// Fixed-dimension vector of exact rationals. The dimension is set at
/// construction; operations on mixed dimensions throw DimensionMismatch.
class VectorQ {
 public:
  explicit VectorQ(std::vector<Rational> components);
  VectorQ(std::initializer_list<Rational> components)
      : VectorQ(std::vector<Rational>(components)) {}

  static VectorQ zero(int dim);
  static VectorQ basis(int dim, int i);  // e_i, 0-based

  int dim() const { return static_cast<int>(c_.size()); }
  const Rational& operator[](int i) const { return c_.at(static_cast<size_t>(i)); }
  const std::vector<Rational>& components() const { return c_; }

  VectorQ operator+(const VectorQ& o) const;
  VectorQ operator-(const VectorQ& o) const;
  VectorQ operator-() const;
  VectorQ operator*(const Rational& s) const;

  bool operator==(const VectorQ& o) const { return c_ == o.c_; }
  bool operator!=(const VectorQ& o) const { return c_ != o.c_; }
  bool is_zero() const;

  /// Exact <x, y>.
  Rational dot(const VectorQ& o) const;
  /// Exact squared Euclidean length |x|^2.
  Rational norm_sq() const;

 private:
  std::vector<Rational> c_;
};

inline VectorQ operator*(const Rational& s, const VectorQ& v) { return v * s; }

std::ostream& operator<<(std::ostream& os, const VectorQ& v);

/// Exact cross product on dimension 3.
VectorQ cross3(const VectorQ& x, const VectorQ& y);

/// Exact |x cross y|^2. Equals |x|^2 |y|^2 - <x,y>^2 (Lagrange identity);
/// the redundancy is exercised as a cross-check in the tests.
Rational norm_sq_cross(const VectorQ& x, const VectorQ& y);

}  // namespace q2n
