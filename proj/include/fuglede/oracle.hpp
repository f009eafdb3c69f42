#pragma once

/**
 * @file oracle.hpp
 * @brief Ground truth for the two properties being compared.
 *
 * Pair verifiers decide the defining conditions directly:
 *   spectral pair (A, B):  |A| = |B| and (B - B) \ {0} lies in Z_A
 *   tiling pair (A, T):    |A| |T| = |G| and (A - A) meets (T - T) only in 0
 *
 * The brute-force finders search the whole group for a partner. Both are
 * deterministic: the spectrum search returns the lexicographically first
 * clique through 0, the complement search the first exact cover found with
 * first-fail cell selection and ascending translate order.
 */

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fuglede/charsum.hpp"
#include "fuglede/group.hpp"

namespace fuglede {

inline constexpr std::uint64_t kOracleOrderLimit = std::uint64_t{1} << 16;

struct PairCheck {
  bool ok = false;
  /// Smallest offending difference, when the failure has one.
  std::optional<Element> witness;
  std::string reason;
};

PairCheck check_spectral_pair(const GroupSet& a, const GroupSet& b);
PairCheck check_tiling_pair(const GroupSet& a, const GroupSet& t);

bool verify_spectral_pair(const GroupSet& a, const GroupSet& b);
bool verify_tiling_pair(const GroupSet& a, const GroupSet& t);

/// Z_A u Z_T == G \ {0}.
bool zero_sets_cover(const GroupSet& a, const GroupSet& t);

/// Spectrum of A containing 0, or nullopt. The empty set has none.
/// Throws CapacityError above kOracleOrderLimit.
std::optional<GroupSet> find_spectrum_bruteforce(const GroupSet& set);

/// Tiling complement of A, or nullopt. Throws CapacityError above kOracleOrderLimit.
std::optional<GroupSet> find_complement_bruteforce(const GroupSet& set);

/// Lexicographically least set in the orbit of A under e -> a e + g,
/// a a unit of Z_{p^n}, g in G.
GroupSet canonicalize(const GroupSet& set);

using ZeroTest = std::function<bool(const GroupSet&, Element)>;

struct OracleDiscrepancy {
  std::uint64_t trial = 0;
  GroupSet set;
  Element u;
  bool counting = false;
  bool exact = false;
};

struct OracleCompareReport {
  GroupParams params;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::uint64_t zeros = 0;  // trials whose exact value vanished
  std::vector<OracleDiscrepancy> discrepancies;
};

/**
 * Samples random (A, u) pairs and compares a zero test with the exact
 * cyclotomic evaluation.
 *
 * Sampling uses std::mt19937_64 seeded with `seed`. Per trial: draw
 * ceil(|G| / 64) words; element with index i belongs to A iff bit (i mod 64)
 * of word (i / 64) is set. Then draw one more word w and take u = element(w mod |G|).
 */
OracleCompareReport oracle_compare(const GroupParams& params, std::uint64_t trials, std::uint64_t seed,
                                   const ZeroTest& test = is_zero_equidist);

/// Draws a subset in the oracle_compare sampling scheme.
template <class Engine>
GroupSet random_subset(const GroupParams& params, Engine& engine) {
  GroupSet set(params);
  const std::uint64_t order = params.order();
  for (std::uint64_t base = 0; base < order; base += 64) {
    const std::uint64_t word = engine();
    for (std::uint64_t b = 0; b < 64 && base + b < order; ++b) {
      if ((word >> b) & 1u) set.insert_index(base + b);
    }
  }
  return set;
}

}  // namespace fuglede
