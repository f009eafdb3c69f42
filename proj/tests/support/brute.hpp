#pragma once

// Definition-level checks for small groups, written against the raw
// formulas with complex doubles so they share no code path with the
// library's integer tests.

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <numbers>
#include <random>
#include <vector>

#include "fuglede/group.hpp"

namespace brute {

using fuglede::Element;
using fuglede::GroupParams;
using fuglede::GroupSet;

inline constexpr double kTolerance = 1e-9;

inline GroupSet make_set(const GroupParams& params, std::initializer_list<Element> elements) {
  GroupSet out(params);
  for (const Element& e : elements) out.insert(e);
  return out;
}

inline std::uint64_t pairing(const GroupParams& g, Element a, Element u) {
  const std::uint64_t q = g.modulus();
  return (g.step() * a.x * u.x + a.y * u.y) % q;
}

inline std::complex<double> char_sum(const GroupSet& set, Element u) {
  const GroupParams& g = set.params();
  std::complex<double> sum = 0.0;
  for (const Element& a : set.elements()) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(pairing(g, a, u)) / static_cast<double>(g.modulus());
    sum += std::polar(1.0, angle);
  }
  return sum;
}

inline bool is_zero(const GroupSet& set, Element u) { return std::abs(char_sum(set, u)) < kTolerance; }

inline Element minus(const GroupParams& g, Element a, Element b) {
  return {(a.x + g.p() - b.x) % g.p(), (a.y + g.modulus() - b.y) % g.modulus()};
}

// |A| = |B| and the characters indexed by B are orthogonal on A.
inline bool spectral_pair(const GroupSet& a, const GroupSet& b) {
  if (a.size() != b.size()) return false;
  const std::vector<Element> members = b.elements();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (!is_zero(a, minus(a.params(), members[i], members[j]))) return false;
    }
  }
  return true;
}

// Every element of G is a + t in exactly one way.
inline bool tiling_pair(const GroupSet& a, const GroupSet& t) {
  const GroupParams& g = a.params();
  std::vector<int> hits(g.order(), 0);
  for (const Element& x : a.elements()) {
    for (const Element& y : t.elements()) {
      ++hits[g.index({(x.x + y.x) % g.p(), (x.y + y.y) % g.modulus()})];
    }
  }
  for (int h : hits) {
    if (h != 1) return false;
  }
  return true;
}

// Calls f on every k-subset of G containing 0 until f returns true.
inline bool any_subset_with_zero(const GroupParams& g, std::size_t k, const std::function<bool(const GroupSet&)>& f) {
  if (k == 0) return false;
  const std::uint64_t others = g.order() - 1;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << others); ++bits) {
    if (static_cast<std::size_t>(__builtin_popcountll(bits)) != k - 1) continue;
    GroupSet s(g);
    s.insert_index(0);
    for (std::uint64_t i = 0; i < others; ++i) {
      if ((bits >> i) & 1u) s.insert_index(i + 1);
    }
    if (f(s)) return true;
  }
  return false;
}

// Exhaustive over partners containing 0; fine for |G| <= 16.
inline bool has_spectrum(const GroupSet& a) {
  return any_subset_with_zero(a.params(), a.size(), [&](const GroupSet& b) { return spectral_pair(a, b); });
}

inline bool is_tile(const GroupSet& a) {
  const std::uint64_t order = a.params().order();
  if (a.empty() || order % a.size() != 0) return false;
  return any_subset_with_zero(a.params(), order / a.size(), [&](const GroupSet& t) { return tiling_pair(a, t); });
}

inline GroupSet from_mask(const GroupParams& g, std::uint64_t mask) {
  GroupSet s(g);
  for (std::uint64_t i = 0; i < g.order(); ++i) {
    if ((mask >> i) & 1u) s.insert_index(i);
  }
  return s;
}

inline GroupSet random_set(const GroupParams& g, std::mt19937_64& rng, double density = 0.5) {
  std::bernoulli_distribution keep(density);
  GroupSet s(g);
  for (std::uint64_t i = 0; i < g.order(); ++i) {
    if (keep(rng)) s.insert_index(i);
  }
  return s;
}

inline std::vector<Element> all_elements(const GroupParams& g) {
  std::vector<Element> out;
  for (std::uint64_t x = 0; x < g.p(); ++x) {
    for (std::uint64_t y = 0; y < g.modulus(); ++y) out.push_back({x, y});
  }
  return out;
}

}  // namespace brute
