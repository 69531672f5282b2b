// Multi-index (lattice point) helpers shared by polynomials and polyhedra.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace nc {

using Exponents = std::vector<std::int64_t>;

inline std::int64_t dot(const Exponents& a, const Exponents& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  std::int64_t s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline std::int64_t degree_sum(const Exponents& a) {
  return std::accumulate(a.begin(), a.end(), std::int64_t{0});
}

inline Exponents add(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Exponents sub(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline bool is_zero(const Exponents& a) {
  return std::all_of(a.begin(), a.end(), [](std::int64_t v) { return v == 0; });
}

inline bool all_positive(const Exponents& a) {
  return std::all_of(a.begin(), a.end(), [](std::int64_t v) { return v > 0; });
}

inline bool all_nonnegative(const Exponents& a) {
  return std::all_of(a.begin(), a.end(), [](std::int64_t v) { return v >= 0; });
}

inline Exponents unit(size_t n, size_t j, std::int64_t v = 1) {
  Exponents e(n, 0);
  e[j] = v;
  return e;
}

// Divides by the gcd of the entries (no sign change).  Zero vectors pass
// through unchanged.
inline Exponents primitive(Exponents a) {
  std::int64_t g = 0;
  for (auto v : a) g = std::gcd(g, v < 0 ? -v : v);
  if (g > 1)
    for (auto& v : a) v /= g;
  return a;
}

inline std::string index_str(const Exponents& a) {
  std::string s = "(";
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(a[i]);
  }
  return s + ")";
}

// Index subsets are bitmasks over coordinate slots 0..n-1.
using IndexSet = std::uint32_t;

inline IndexSet full_set(size_t n) { return (n >= 32) ? ~IndexSet{0} : ((IndexSet{1} << n) - 1); }

inline bool contains(IndexSet I, size_t j) { return (I >> j) & 1u; }

inline std::vector<size_t> members(IndexSet I, size_t n) {
  std::vector<size_t> v;
  for (size_t j = 0; j < n; ++j)
    if (contains(I, j)) v.push_back(j);
  return v;
}

inline size_t popcount(IndexSet I) { return static_cast<size_t>(__builtin_popcount(I)); }

}  // namespace nc
