#pragma once

// Dense univariate polynomials over an exact integer type. Coefficients are
// stored lowest degree first and kept trimmed; the zero polynomial is empty.

#include <cstddef>
#include <utility>
#include <vector>

#include "neumaier/errors.hpp"
#include "neumaier/exact.hpp"

namespace neumaier::poly {

template <class Int>
using Poly = std::vector<Int>;

template <class Int>
void trim(Poly<Int>& p) {
  while (!p.empty() && is_zero(p.back())) p.pop_back();
}

// Degree; -1 for the zero polynomial.
template <class Int>
long degree(const Poly<Int>& p) {
  return static_cast<long>(p.size()) - 1;
}

template <class Int>
Poly<Int> derivative(const Poly<Int>& p) {
  Poly<Int> d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Int(static_cast<std::int64_t>(i)));
  trim(d);
  return d;
}

template <class Int>
Poly<Int> subtract(Poly<Int> a, const Poly<Int>& b) {
  if (a.size() < b.size()) a.resize(b.size(), Int(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = a[i] - b[i];
  trim(a);
  return a;
}

template <class Int>
Int content(const Poly<Int>& p) {
  Int g(0);
  for (const auto& c : p) g = int_gcd(g, c);
  return g;
}

// Divides out the content and makes the leading coefficient positive.
template <class Int>
Poly<Int> primitive_part(Poly<Int> p) {
  if (p.empty()) return p;
  Int g = content(p);
  if (p.back() < Int(0)) g = -g;
  for (auto& c : p) c = c / g;
  return p;
}

// Some nonzero multiple lc(b)^j * a reduced modulo b.
template <class Int>
Poly<Int> pseudo_remainder(Poly<Int> a, const Poly<Int>& b) {
  const long db = degree(b);
  const Int lb = b.back();
  while (degree(a) >= db) {
    const Int la = a.back();
    const std::size_t shift = static_cast<std::size_t>(degree(a) - db);
    for (auto& c : a) c = c * lb;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] = a[i + shift] - la * b[i];
    trim(a);
    a = primitive_part(std::move(a));
  }
  return a;
}

// Greatest common divisor over Q, returned primitive with positive leading
// coefficient (primitive remainder sequence).
template <class Int>
Poly<Int> gcd(Poly<Int> a, Poly<Int> b) {
  a = primitive_part(std::move(a));
  b = primitive_part(std::move(b));
  if (degree(a) < degree(b)) std::swap(a, b);
  while (!b.empty()) {
    Poly<Int> r = primitive_part(pseudo_remainder(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// a / b where b is monic (or +-1 leading) and divides a exactly.
template <class Int>
Poly<Int> exact_divide(Poly<Int> a, const Poly<Int>& b) {
  if (b.empty()) throw ArgumentError("polynomial division by zero");
  const long db = degree(b);
  const Int lb = b.back();
  if (degree(a) < db) {
    if (!a.empty()) throw ConsistencyError("inexact polynomial division");
    return {};
  }
  Poly<Int> q(static_cast<std::size_t>(degree(a) - db + 1), Int(0));
  while (degree(a) >= db) {
    if (!is_zero(a.back() % lb)) throw ConsistencyError("inexact polynomial division");
    const Int f = a.back() / lb;
    const std::size_t shift = static_cast<std::size_t>(degree(a) - db);
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] = a[i + shift] - f * b[i];
    trim(a);
  }
  if (!a.empty()) throw ConsistencyError("inexact polynomial division");
  return q;
}

/// Squarefree (Yun) decomposition profile of a monic polynomial f = prod a_i^i.
/// Entry i-1 of the result is deg(a_i), the number of distinct roots of
/// multiplicity exactly i.
template <class Int>
std::vector<std::size_t> multiplicity_profile(const Poly<Int>& f) {
  std::vector<std::size_t> profile;
  if (degree(f) < 1) return profile;
  const Poly<Int> df = derivative(f);
  const Poly<Int> a0 = gcd(f, df);
  Poly<Int> b = exact_divide(f, a0);
  Poly<Int> c = exact_divide(df, a0);
  Poly<Int> d = subtract(c, derivative(b));
  while (degree(b) > 0) {
    const Poly<Int> a = gcd(b, d);
    profile.push_back(static_cast<std::size_t>(degree(a)));
    b = exact_divide(b, a);
    c = exact_divide(d, a);
    d = subtract(c, derivative(b));
  }
  while (!profile.empty() && profile.back() == 0) profile.pop_back();
  return profile;
}

// Number of distinct complex roots: deg(f / gcd(f, f')).
template <class Int>
std::size_t distinct_root_count(const Poly<Int>& f) {
  if (degree(f) < 1) return 0;
  return static_cast<std::size_t>(degree(f) - degree(gcd(f, derivative(f))));
}

template <class Int>
Int evaluate(const Poly<Int>& p, const Int& x) {
  Int acc(0);
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

}  // namespace neumaier::poly
