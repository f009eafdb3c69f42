#pragma once

/**
 * @file group.hpp
 * @brief Arithmetic of the group G = Z_p x Z_{p^n}.
 *
 * Elements are pairs (x, y) with 0 <= x < p and 0 <= y < p^n, stored densely
 * under the linear index x * p^n + y. The pairing used for characters is
 *
 *     <u, v> = p^{n-1} u.x v.x + u.y v.y   (mod p^n)
 *
 * and the unit group of Z_{p^n} acts componentwise:
 * s.(x, y) = (s x mod p, s y mod p^n). Every nonzero element is a unit
 * multiple of exactly one of (1, 0) or (c, p^i), c in Z_p, i in [0, n-1].
 */

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fuglede/errors.hpp"

namespace fuglede {

using Index = std::uint64_t;

struct Element {
  std::uint64_t x = 0;
  std::uint64_t y = 0;

  friend bool operator==(const Element&, const Element&) = default;
  // Lexicographic on (x, y), which is also ascending index order.
  friend auto operator<=>(const Element&, const Element&) = default;
};

std::string to_string(Element e);

inline constexpr std::uint64_t kDefaultOrderLimit = std::uint64_t{1} << 32;

bool is_prime(std::uint64_t v);

// Inverse of a modulo m; a must be coprime to m.
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m);

class GroupParams {
 public:
  // Throws ParameterError for a non-prime p or n == 0, CapacityError when
  // p^(n+1) exceeds order_limit.
  GroupParams(std::uint64_t p, unsigned n, std::uint64_t order_limit = kDefaultOrderLimit);

  std::uint64_t p() const noexcept { return p_; }
  unsigned n() const noexcept { return n_; }
  /// p^n, the modulus of the second coordinate and of the pairing.
  std::uint64_t modulus() const noexcept { return modulus_; }
  /// p^(n-1), the spacing of the residue classes in the equidistribution test.
  std::uint64_t step() const noexcept { return step_; }
  /// p^(n+1).
  std::uint64_t order() const noexcept { return order_; }
  /// p^k for 0 <= k <= n.
  std::uint64_t power(unsigned k) const;

  bool contains(Element e) const noexcept { return e.x < p_ && e.y < modulus_; }
  void check(Element e) const;

  Index index(Element e) const;
  Element element(Index i) const;

  Element add(Element u, Element v) const;
  Element sub(Element u, Element v) const;
  Element neg(Element u) const;
  // r.(x, y) for any integer scalar r (not necessarily a unit).
  Element multiply(std::uint64_t r, Element u) const;

  bool is_unit(std::uint64_t a) const noexcept { return a % p_ != 0; }
  std::vector<std::uint64_t> units() const;

  friend bool operator==(const GroupParams& a, const GroupParams& b) noexcept {
    return a.p_ == b.p_ && a.n_ == b.n_;
  }

 private:
  std::uint64_t p_;
  unsigned n_;
  std::uint64_t modulus_;
  std::uint64_t step_;
  std::uint64_t order_;
};

std::string to_string(const GroupParams& params);

/// (p^(n-1) u.x v.x + u.y v.y) mod p^n. Throws ParameterError if either
/// element lies outside the group.
std::uint64_t inner_product(const GroupParams& params, Element u, Element v);

/// Base-p digits (t[0], ..., t[m-1]) of t, least significant first.
std::vector<std::uint64_t> digits(std::uint64_t t, std::uint64_t p, unsigned m);

/// Digit k of t in base p.
std::uint64_t digit(std::uint64_t t, std::uint64_t p, unsigned k);

/// Smallest i with t[i] != 0, or nullopt for t == 0. Requires t < p^m.
std::optional<unsigned> valuation(std::uint64_t t, std::uint64_t p, unsigned m);

// Representative of the unit-scaling class of an element.
struct ClassRep {
  enum class Kind : std::uint8_t { Zero, UnitAxis, Mixed };

  Kind kind = Kind::Zero;
  std::uint64_t c = 0;  // Mixed only
  unsigned level = 0;   // Mixed only

  static ClassRep zero() { return {}; }
  static ClassRep unit_axis() { return {Kind::UnitAxis, 0, 0}; }
  static ClassRep mixed(std::uint64_t c, unsigned level) { return {Kind::Mixed, c, level}; }

  friend bool operator==(const ClassRep&, const ClassRep&) = default;
};

std::string to_string(const ClassRep& rep);

/// Number of nonzero classes, 1 + p n.
std::size_t rep_count(const GroupParams& params);

/// Position of a nonzero class in report order: (1,0) first, then (c, p^i)
/// ordered by (i, c).
std::size_t rep_slot(const GroupParams& params, const ClassRep& rep);
ClassRep rep_at_slot(const GroupParams& params, std::size_t slot);

/// The element (1, 0) or (c, p^i) a representative names.
Element rep_element(const GroupParams& params, const ClassRep& rep);

ClassRep canonical_rep(const GroupParams& params, Element u);

/// All elements of the class of a nonzero representative, ascending.
std::vector<Element> class_members(const GroupParams& params, const ClassRep& rep);

/**
 * Subset of G stored as a bitmap over linear indices.
 *
 * Equality and ordering only make sense between sets of the same group;
 * binary set operations throw ParameterError otherwise.
 */
class GroupSet {
 public:
  explicit GroupSet(GroupParams params);

  static GroupSet full(const GroupParams& params);
  static GroupSet from_elements(const GroupParams& params, std::span<const Element> elements);
  static GroupSet from_indices(const GroupParams& params, std::span<const Index> indices);

  const GroupParams& params() const noexcept { return params_; }

  bool contains(Element e) const;
  bool contains_index(Index i) const noexcept {
    return ((words_[i >> 6] >> (i & 63)) & 1u) != 0;
  }

  void insert(Element e);
  void insert_index(Index i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void erase(Element e);
  void erase_index(Index i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  std::size_t size() const noexcept;
  bool empty() const noexcept;

  std::vector<Index> indices() const;
  std::vector<Element> elements() const;

  /// Smallest member index, if any.
  std::optional<Index> first() const noexcept;

  template <class F>
  void for_each_index(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int b = __builtin_ctzll(bits);
        f(static_cast<Index>(w * 64 + static_cast<std::size_t>(b)));
        bits &= bits - 1;
      }
    }
  }

  std::span<const std::uint64_t> words() const noexcept { return words_; }

  GroupSet& operator|=(const GroupSet& other);
  GroupSet& operator&=(const GroupSet& other);
  /// Set difference.
  GroupSet& operator-=(const GroupSet& other);

  friend GroupSet operator|(GroupSet a, const GroupSet& b) { return a |= b; }
  friend GroupSet operator&(GroupSet a, const GroupSet& b) { return a &= b; }
  friend GroupSet operator-(GroupSet a, const GroupSet& b) { return a -= b; }

  friend bool operator==(const GroupSet& a, const GroupSet& b) {
    return a.params_ == b.params_ && a.words_ == b.words_;
  }

  /// Canonical order used for orbit representatives: the set holding the
  /// smallest index on which the two differ is the smaller one.
  friend bool lex_less(const GroupSet& a, const GroupSet& b);

 private:
  void require_same_group(const GroupSet& other) const;

  GroupParams params_;
  std::vector<std::uint64_t> words_;
};

/// Complement G \ A.
GroupSet complement(const GroupSet& set);

GroupSet translate(const GroupSet& set, Element g);

/// {a e + g : e in A}; a must be a unit of Z_{p^n}.
GroupSet scale_translate(const GroupSet& set, std::uint64_t a, Element g);

/// {a - a' : a, a' in A}.
GroupSet difference_set(const GroupSet& set);

}  // namespace fuglede
