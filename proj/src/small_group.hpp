#pragma once

// Single-word kernel for groups of order <= 64, used by the enumerator.
//
// A subset is a uint64_t with bit i set iff element(i) is a member. The
// searches replay the GroupSet oracles step for step (same branch order,
// same tie-breaking), so they return the same partner; tests hold them to
// that.

#include <cstdint>
#include <optional>
#include <vector>

#include "fuglede/group.hpp"

namespace fuglede::detail {

using Mask = std::uint64_t;

class SmallGroup {
 public:
  static constexpr std::uint64_t kMaxOrder = 64;

  explicit SmallGroup(GroupParams params);

  const GroupParams& params() const noexcept { return params_; }
  unsigned order() const noexcept { return order_; }

  Mask translate(Mask set, Index g) const;
  Mask scale(Mask set, std::size_t unit_slot) const;

  /// Bit s set iff the class in rep slot s is a zero of the set.
  std::uint64_t zero_slots(Mask set) const;
  /// Union of the classes flagged in `slots`.
  Mask zero_mask(std::uint64_t slots) const;

  std::optional<Mask> find_spectrum(Mask set) const;
  std::optional<Mask> find_complement(Mask set) const;

  /// True iff no image a A + g is lexicographically smaller than A.
  bool is_canonical(Mask set) const;

  GroupSet to_set(Mask set) const;
  Mask from_set(const GroupSet& set) const;

 private:
  bool clique_extend(Mask zeros, Mask cand, unsigned need, Mask& chosen) const;
  bool colour_bound_allows(Mask zeros, Mask cand, unsigned need) const;
  bool cover_extend(const std::vector<Mask>& placed, const std::vector<Mask>& covering, Mask covered,
                    unsigned remaining, Mask& chosen) const;

  GroupParams params_;
  unsigned order_;
  unsigned modulus_;
  Mask row_mask_;
  Mask all_;
  std::vector<Element> elements_;
  // slices_[s * modulus + t]: members a with <a, rep_s> = t.
  std::vector<Mask> slices_;
  std::vector<Mask> class_masks_;
  // unit_perm_[k * order + i]: index of units()[k] * element(i).
  std::vector<unsigned> unit_perm_;
  std::size_t unit_count_;
};

}  // namespace fuglede::detail
