#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <variant>

#include "fuglede/charsum.hpp"
#include "fuglede/group.hpp"

namespace fuglede {

// |A| in {1, p^(n+1)}.
struct Trivial {
  friend bool operator==(const Trivial&, const Trivial&) = default;
};
// |A| = p^s, 1 <= s <= n.
struct PurePower {
  unsigned s = 0;
  friend bool operator==(const PurePower&, const PurePower&) = default;
};
// |A| = m p^s with 2 <= m <= p - 1.
struct MixedSize {
  std::uint64_t m = 0;
  unsigned s = 0;
  friend bool operator==(const MixedSize&, const MixedSize&) = default;
};
// |A| = m p^s with m > p coprime to p.
struct OtherSize {
  friend bool operator==(const OtherSize&, const OtherSize&) = default;
};

using SizeClass = std::variant<Trivial, PurePower, MixedSize, OtherSize>;

std::string to_string(const SizeClass& size_class);

/// Throws ParameterError unless 1 <= cardinality <= p^(n+1).
SizeClass classify_size(std::uint64_t cardinality, const GroupParams& params);

/**
 * Largest s for which the zero set carries the pattern
 * (a, p^{i_1}), (0, p^{i_2}), ..., (0, p^{i_s}) with i_1 < ... < i_s;
 * p^s then divides |A|.
 *
 * in_zero_set is queried with Mixed representatives only.
 */
template <class RepPredicate>
unsigned divisibility_exponent(const GroupParams& params, RepPredicate&& in_zero_set) {
  const unsigned n = params.n();
  unsigned best = 0;
  for (unsigned first = 0; first < n; ++first) {
    bool any = false;
    for (std::uint64_t c = 0; c < params.p() && !any; ++c) any = in_zero_set(ClassRep::mixed(c, first));
    if (!any) continue;
    unsigned s = 1;
    for (unsigned i = first + 1; i < n; ++i) {
      if (in_zero_set(ClassRep::mixed(0, i))) ++s;
    }
    best = std::max(best, s);
  }
  return best;
}

unsigned divisibility_exponent(const ZeroProfile& profile);

// phi_1 deletes digit r of the second coordinate, phi_2 deletes digit n-1-r.
enum class DigitMap { DeleteLevel, DeleteMirrorLevel };

/// Removes digit k of y < p^n, shifting higher digits down.
std::uint64_t delete_digit(std::uint64_t y, std::uint64_t p, unsigned k);

/// {(a, phi(x)) : (a, x) in A} in Z_p x Z_{p^(n-1)}. Requires n >= 2 and r < n.
GroupSet project_delete_digit(const GroupSet& set, unsigned r, DigitMap map);

}  // namespace fuglede
