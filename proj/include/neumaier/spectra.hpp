#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "neumaier/errors.hpp"
#include "neumaier/exact.hpp"
#include "neumaier/graph.hpp"
#include "neumaier/polynomial.hpp"

namespace neumaier {

/// Monic characteristic polynomial of the adjacency matrix.
/// coeffs[i] is the coefficient of x^(n-i).
struct CharPoly {
  std::vector<BigInt> coeffs;

  std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  // Coefficient of x^j.
  const BigInt& coefficient_of_power(std::size_t j) const { return coeffs[degree() - j]; }

  friend bool operator==(const CharPoly&, const CharPoly&) = default;
};

namespace detail {

// Faddeev-LeVerrier: M_1 = I, c_{n-k} = -tr(A M_k) / k, M_{k+1} = A M_k + c_{n-k} I.
// A is 0/1, so A * M is formed by summing rows of M over neighbourhoods.
template <class Int>
std::vector<BigInt> faddeev_leverrier(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<Int> m(n * n, Int(0));
  for (std::size_t i = 0; i < n; ++i) m[i * n + i] = Int(1);
  std::vector<Int> am(n * n);
  std::vector<Int> c(n + 1, Int(0));  // high to low
  c[0] = Int(1);
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t u = 0; u < n; ++u) {
      Int* row = &am[u * n];
      for (std::size_t j = 0; j < n; ++j) row[j] = Int(0);
      g.neighbors(u).for_each([&](std::size_t w) {
        const Int* src = &m[w * n];
        for (std::size_t j = 0; j < n; ++j) row[j] += src[j];
      });
    }
    Int trace(0);
    for (std::size_t i = 0; i < n; ++i) trace += am[i * n + i];
    const Int kk(static_cast<std::int64_t>(k));
    if (!is_zero(trace % kk)) throw ConsistencyError("Faddeev-LeVerrier division was not exact");
    c[k] = -(trace / kk);
    if (k == n) break;
    m.swap(am);
    for (std::size_t i = 0; i < n; ++i) m[i * n + i] += c[k];
  }
  std::vector<BigInt> out;
  out.reserve(n + 1);
  for (const auto& x : c) out.push_back(to_big(x));
  return out;
}

template <class Int>
poly::Poly<Int> low_to_high(const CharPoly& p) {
  poly::Poly<Int> out;
  out.reserve(p.coeffs.size());
  for (std::size_t i = p.coeffs.size(); i-- > 0;) out.push_back(Int(p.coeffs[i]));
  poly::trim(out);
  return out;
}

}  // namespace detail

inline CharPoly charpoly(const Graph& g) {
  return CharPoly{with_overflow_fallback(
      [&]<class Int>() { return detail::faddeev_leverrier<Int>(g); })};
}

/// Degree of the squarefree part p / gcd(p, p'). For adjacency matrices every
/// root is real, so this is the number of distinct eigenvalues.
inline std::size_t distinct_eigenvalue_count(const CharPoly& p) {
  return with_overflow_fallback([&]<class Int>() {
    return poly::distinct_root_count(detail::low_to_high<Int>(p));
  });
}

// Entry i-1 is the number of distinct eigenvalues of multiplicity i.
inline std::vector<std::size_t> multiplicity_profile(const CharPoly& p) {
  return with_overflow_fallback([&]<class Int>() {
    return poly::multiplicity_profile(detail::low_to_high<Int>(p));
  });
}

// Exact evaluation at an integer point.
inline BigInt evaluate(const CharPoly& p, const BigInt& x) {
  BigInt acc = 0;
  for (const auto& c : p.coeffs) acc = acc * x + c;
  return acc;
}

/// If `approx` is within 1e-6 of an integer r with p(r) = 0 exactly, returns r.
inline std::optional<long long> exact_integer_eigenvalue(const CharPoly& p, double approx) {
  const double r = std::round(approx);
  if (std::abs(r - approx) > 1e-6 || std::abs(r) > 9e15) return std::nullopt;
  const auto ri = static_cast<long long>(r);
  if (!evaluate(p, BigInt(ri)).is_zero()) return std::nullopt;
  return ri;
}

/// Eigenvalues of a dense symmetric matrix (row-major, n x n) by cyclic
/// Jacobi rotations, stopping once the off-diagonal Frobenius norm drops
/// below 1e-12 * n. Returned in descending order.
inline std::vector<double> jacobi_eigenvalues(std::vector<double> a, std::size_t n) {
  auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };
  const double threshold = 1e-12 * static_cast<double>(std::max<std::size_t>(n, 1));
  auto off_norm = [&] {
    double s = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) s += 2 * at(i, j) * at(i, j);
    return std::sqrt(s);
  };
  constexpr int kMaxSweeps = 100;
  int sweep = 0;
  for (; sweep < kMaxSweeps && off_norm() >= threshold; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double theta = (at(q, q) - at(p, p)) / (2 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
        const double c = 1 / std::sqrt(t * t + 1);
        const double s = t * c;
        const double tau = s / (1 + c);
        at(p, p) -= t * apq;
        at(q, q) += t * apq;
        at(p, q) = at(q, p) = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double arp = at(r, p), arq = at(r, q);
          at(r, p) = at(p, r) = arp - s * (arq + tau * arp);
          at(r, q) = at(q, r) = arq + s * (arp - tau * arq);
        }
      }
  }
  if (sweep == kMaxSweeps && off_norm() >= threshold)
    throw SpectralResolutionError("Jacobi iteration did not converge");
  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = at(i, i);
  std::sort(eig.begin(), eig.end(), std::greater<>());
  return eig;
}

inline std::vector<double> adjacency_eigenvalues(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<double> a(n * n, 0.0);
  for (std::size_t u = 0; u < n; ++u) g.neighbors(u).for_each([&](std::size_t v) { a[u * n + v] = 1.0; });
  return jacobi_eigenvalues(std::move(a), n);
}

struct Eigenvalue {
  double value;
  std::size_t multiplicity;
};

struct Spectrum {
  std::vector<Eigenvalue> eigs;  // strictly descending
  std::size_t distinct_count = 0;
  CharPoly charpoly;
  double tolerance = 0;  // clustering tolerance that reproduced distinct_count

  double max() const { return eigs.front().value; }
  double min() const { return eigs.back().value; }

  double power_sum(int power) const {
    double s = 0;
    for (const auto& e : eigs) s += static_cast<double>(e.multiplicity) * std::pow(e.value, power);
    return s;
  }

  bool contains(double x, double tol) const {
    return std::any_of(eigs.begin(), eigs.end(), [&](const Eigenvalue& e) { return std::abs(e.value - x) <= tol; });
  }
};

inline constexpr double kDefaultClusterTolerance = 1e-7;

namespace detail {

inline std::vector<Eigenvalue> cluster_descending(const std::vector<double>& values, double tol) {
  std::vector<Eigenvalue> out;
  std::size_t start = 0;
  for (std::size_t i = 1; i <= values.size(); ++i) {
    if (i == values.size() || values[i - 1] - values[i] >= tol) {
      double sum = 0;
      for (std::size_t j = start; j < i; ++j) sum += values[j];
      out.push_back({sum / static_cast<double>(i - start), i - start});
      start = i;
    }
  }
  return out;
}

}  // namespace detail

/// Numeric spectrum reconciled with the exact characteristic polynomial.
/// Eigenvalues are grouped where consecutive gaps are below `tol`; if the
/// group count differs from the exact distinct count, the tolerance is
/// bisected (geometrically, within [1e-14, 1e-2]) until they agree. The
/// multiplicity histogram is then checked against the squarefree
/// decomposition of the characteristic polynomial.
inline Spectrum spectrum(const Graph& g, double tol = kDefaultClusterTolerance) {
  if (!(tol > 0)) throw ArgumentError("clustering tolerance must be positive");
  Spectrum s;
  s.charpoly = charpoly(g);
  if (g.order() == 0) return s;
  s.distinct_count = distinct_eigenvalue_count(s.charpoly);
  const auto values = adjacency_eigenvalues(g);

  auto groups = detail::cluster_descending(values, tol);
  double used = tol;
  if (groups.size() != s.distinct_count) {
    double lo = 1e-14, hi = 1e-2;  // count(lo) >= target >= count(hi) is what we need
    if (groups.size() > s.distinct_count)
      lo = tol;
    else
      hi = tol;
    bool resolved = false;
    for (int it = 0; it < 200 && !resolved; ++it) {
      const double mid = std::sqrt(lo * hi);
      auto trial = detail::cluster_descending(values, mid);
      if (trial.size() == s.distinct_count) {
        groups = std::move(trial);
        used = mid;
        resolved = true;
      } else if (trial.size() > s.distinct_count) {
        lo = mid;
      } else {
        hi = mid;
      }
      if (hi / lo < 1 + 1e-12) break;
    }
    if (!resolved)
      throw SpectralResolutionError("numeric eigenvalues form " + std::to_string(groups.size()) +
                                    " clusters but the characteristic polynomial has " +
                                    std::to_string(s.distinct_count) + " distinct roots");
  }

  const auto profile = multiplicity_profile(s.charpoly);
  std::vector<std::size_t> observed;
  for (const auto& e : groups) {
    if (observed.size() < e.multiplicity) observed.resize(e.multiplicity, 0);
    ++observed[e.multiplicity - 1];
  }
  if (observed != profile)
    throw SpectralResolutionError("eigenvalue multiplicities disagree with the squarefree decomposition");

  s.eigs = std::move(groups);
  s.tolerance = used;
  return s;
}

struct NamedEigenvalues {
  double max;
  double second_max;  // second largest distinct value
  double min;
};

inline NamedEigenvalues named_eigenvalues(const Spectrum& s) {
  if (s.distinct_count < 2)
    throw ArgumentError("degenerate spectrum: fewer than two distinct eigenvalues (edgeless graph)");
  return {s.eigs[0].value, s.eigs[1].value, s.eigs.back().value};
}

enum class EigenvalueCountClass { Edgeless, DisjointEqualCliques, SRGCandidate, Other };

struct EigenvalueCountVerdict {
  EigenvalueCountClass kind;
  std::size_t clique_order = 0;  // for DisjointEqualCliques
};

inline bool is_regular(const Graph& g) {
  for (std::size_t u = 1; u < g.order(); ++u)
    if (g.degree(u) != g.degree(0)) return false;
  return true;
}

/// Few-eigenvalue classification: one distinct eigenvalue means edgeless,
/// two means a disjoint union of equal complete graphs (checked
/// structurally), three on a connected regular graph means strongly regular.
inline EigenvalueCountVerdict classify_by_eigenvalue_count(const Graph& g, const Spectrum& s) {
  if (s.distinct_count == 1) {
    if (g.edge_count() != 0 || std::abs(s.eigs[0].value) > 1e-9)
      throw ConsistencyError("single eigenvalue on a graph with edges");
    return {EigenvalueCountClass::Edgeless};
  }
  if (s.distinct_count == 2) {
    const auto comps = connected_components(g);
    const std::size_t t = comps.front().size();
    for (const auto& c : comps) {
      bool clique = c.size() == t;
      c.for_each([&](std::size_t u) { clique = clique && g.neighbors(u).size() + 1 == t; });
      if (!clique || t < 2) throw ConsistencyError("two eigenvalues but components are not equal cliques");
    }
    return {EigenvalueCountClass::DisjointEqualCliques, t};
  }
  if (s.distinct_count == 3 && is_connected(g) && is_regular(g)) return {EigenvalueCountClass::SRGCandidate};
  return {EigenvalueCountClass::Other};
}

inline EigenvalueCountVerdict classify_by_eigenvalue_count(const Graph& g) {
  return classify_by_eigenvalue_count(g, spectrum(g));
}

}  // namespace neumaier
