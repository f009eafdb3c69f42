#pragma once

/**
 * @file charsum.hpp
 * @brief Character sums chi_u(A) = sum_{a in A} zeta^{<a,u>} over G = Z_p x Z_{p^n}.
 *
 * Two independent zero tests are provided:
 *
 *  - is_zero_equidist: integer test on the slice counts
 *    |{a in A : <a,u> = t}|. The sum vanishes exactly when, for each residue
 *    t mod p^(n-1), the p counts at t, t + p^(n-1), ..., t + (p-1) p^(n-1)
 *    agree. This is the hot path.
 *
 *  - char_value_exact: the sum as an element of Z[zeta], zeta a primitive
 *    p^n-th root of unity, reduced modulo the cyclotomic polynomial
 *    Phi_{p^n}(X) = sum_{j<p} X^{j p^(n-1)}. Used as an oracle.
 *
 * No floating point is involved anywhere.
 */

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fuglede/group.hpp"

namespace fuglede {

struct SliceCounts {
  Element u;
  /// counts[t] = |{a in A : <a,u> = t}| for t in [0, p^n).
  std::vector<std::uint64_t> counts;
};

SliceCounts slice_counts(const GroupSet& set, Element u);

/// True when the counts are constant along every residue class mod p^(n-1).
bool is_equidistributed(const GroupParams& params, std::span<const std::uint64_t> counts);

/// chi_u(A) == 0, decided from slice counts.
bool is_zero_equidist(const GroupSet& set, Element u);

/**
 * Element of Z[zeta_{p^n}] in the power basis 1, zeta, ..., zeta^{phi-1},
 * phi = p^(n-1)(p-1). The representation is unique, so zero is the all-zero
 * coefficient vector.
 */
class CyclotomicInt {
 public:
  CyclotomicInt(std::uint64_t p, unsigned n);

  /// sum_t weights[t] zeta^t for a weight vector of length p^n.
  static CyclotomicInt from_powers(std::uint64_t p, unsigned n, std::span<const std::int64_t> weights);

  std::span<const std::int64_t> coefficients() const noexcept { return coeffs_; }
  std::uint64_t p() const noexcept { return p_; }
  unsigned n() const noexcept { return n_; }

  bool is_zero() const noexcept;

  /// this * zeta^k.
  CyclotomicInt times_root(std::uint64_t k) const;

  CyclotomicInt& operator+=(const CyclotomicInt& other);
  friend bool operator==(const CyclotomicInt&, const CyclotomicInt&) = default;

 private:
  // Folds a length-p^n buffer into the first phi slots using
  // X^phi = -(1 + X^{p^(n-1)} + ... + X^{(p-2) p^(n-1)}).
  void reduce_from(std::vector<std::int64_t>& buffer);

  std::uint64_t p_;
  unsigned n_;
  std::uint64_t modulus_;
  std::uint64_t step_;
  std::vector<std::int64_t> coeffs_;
};

CyclotomicInt char_value_exact(const GroupSet& set, Element u);

/**
 * Zero set of a subset, one flag per unit-scaling class.
 *
 * A class either lies entirely inside Z_A or entirely outside it, so the
 * profile records 1 + p n bits.
 */
class ZeroProfile {
 public:
  explicit ZeroProfile(GroupParams params);

  const GroupParams& params() const noexcept { return params_; }

  bool contains(const ClassRep& rep) const;
  /// Whether a group element lies in Z_A; the zero element never does.
  bool contains_element(Element e) const;
  void insert(const ClassRep& rep);

  /// Members in report order: (1,0), then (c, p^i) by (i, c).
  std::vector<ClassRep> reps() const;
  /// I = {i : (0, p^i) in Z_A}, ascending.
  std::vector<unsigned> levels() const;
  bool has_unit_axis() const { return slots_[0]; }
  bool empty() const;
  std::size_t size() const;

  friend bool operator==(const ZeroProfile&, const ZeroProfile&) = default;

 private:
  GroupParams params_;
  std::vector<bool> slots_;
};

ZeroProfile zero_set(const GroupSet& set);

/// Z_A expanded to the set of all its elements.
GroupSet zero_elements(const ZeroProfile& profile);

/// chi_u(A) for every u, indexed by the linear index of u.
std::vector<CyclotomicInt> character_table(const GroupSet& set);

/// Rebuilds the indicator of A from its full character table through
/// |G| a_g = sum_u chi_u(A) zeta^{-<u,g>}. Returns nullopt if some
/// reconstructed coefficient is not 0 or 1.
std::optional<GroupSet> invert_character_table(const GroupParams& params,
                                               std::span<const CyclotomicInt> table);

bool inversion_check(const GroupSet& set, std::span<const CyclotomicInt> table);
bool inversion_check(const GroupSet& set);

}  // namespace fuglede
