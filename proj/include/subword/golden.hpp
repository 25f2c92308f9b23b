// golden.hpp
//
// Exact arithmetic in Z[phi], phi^2 = phi + 1 (phi the golden ratio).
// Crystallographic root coordinates live in the b == 0 slice; H3, H4 and
// I2(5) need the full ring.  No floating point.

#pragma once

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <string>

namespace subword {

struct GoldenInt {
  std::int64_t a = 0;  // rational part
  std::int64_t b = 0;  // coefficient of phi

  constexpr GoldenInt() = default;
  constexpr GoldenInt(std::int64_t a_, std::int64_t b_ = 0) : a(a_), b(b_) {}

  friend constexpr GoldenInt operator+(GoldenInt x, GoldenInt y) {
    return {x.a + y.a, x.b + y.b};
  }
  friend constexpr GoldenInt operator-(GoldenInt x, GoldenInt y) {
    return {x.a - y.a, x.b - y.b};
  }
  friend constexpr GoldenInt operator-(GoldenInt x) { return {-x.a, -x.b}; }
  // (a + b phi)(c + d phi) = ac + bd + (ad + bc + bd) phi
  friend constexpr GoldenInt operator*(GoldenInt x, GoldenInt y) {
    return {x.a * y.a + x.b * y.b, x.a * y.b + x.b * y.a + x.b * y.b};
  }
  friend constexpr bool operator==(GoldenInt x, GoldenInt y) {
    return x.a == y.a && x.b == y.b;
  }
  friend constexpr bool operator!=(GoldenInt x, GoldenInt y) {
    return !(x == y);
  }

  GoldenInt& operator+=(GoldenInt y) { return *this = *this + y; }
  GoldenInt& operator-=(GoldenInt y) { return *this = *this - y; }
  GoldenInt& operator*=(GoldenInt y) { return *this = *this * y; }

  constexpr bool is_zero() const { return a == 0 && b == 0; }
};

// Sign of the real number a + b*phi, phi = (1 + sqrt 5)/2.
// a + b phi = ((2a + b) + b sqrt 5) / 2; compare |2a+b| with |b| sqrt 5
// by squaring (sqrt 5 is irrational, so u^2 == 5 v^2 only at 0).
inline int sign(GoldenInt x) {
  std::int64_t u = 2 * x.a + x.b;
  std::int64_t v = x.b;
  if (u >= 0 && v >= 0) return (u == 0 && v == 0) ? 0 : 1;
  if (u <= 0 && v <= 0) return (u == 0 && v == 0) ? 0 : -1;
  std::int64_t lhs = u * u, rhs = 5 * v * v;
  if (u > 0)  // v < 0
    return lhs > rhs ? 1 : -1;
  // u < 0, v > 0
  return lhs < rhs ? 1 : -1;
}

inline bool operator<(GoldenInt x, GoldenInt y) { return sign(x - y) < 0; }

// Canonical text form: "a" when b == 0, otherwise "a+b*phi" / "a-b*phi".
inline std::string to_string(GoldenInt x) {
  if (x.b == 0) return std::to_string(x.a);
  std::string s = std::to_string(x.a);
  s += (x.b < 0) ? "-" : "+";
  s += std::to_string(std::abs(x.b));
  s += "*phi";
  return s;
}

struct GoldenIntHash {
  std::size_t operator()(GoldenInt x) const {
    std::size_t h = std::hash<std::int64_t>{}(x.a);
    return h ^ (std::hash<std::int64_t>{}(x.b) + 0x9e3779b97f4a7c15ull +
                (h << 6) + (h >> 2));
  }
};

}  // namespace subword
