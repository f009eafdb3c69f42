#pragma once

/**
 * @file enumerate.hpp
 * @brief Exhaustive check that tiles and spectral sets coincide in a small group.
 *
 * Every subset A (or every orbit representative under e -> a e + g) is run
 * through both brute-force oracles. Alongside the tile/spectral verdicts the
 * harness checks, per subset:
 *   - p^(divisibility_exponent) divides |A|;
 *   - a spectral A with |A| > p^n is all of G;
 *   - a spectral A never has a size of the form m p^s, 2 <= m <= p - 1;
 *   - both constructions return verified partners, with Z_A u Z_T = G \ {0}
 *     for the complement.
 *
 * Subsets are the integers [0, 2^|G|), bit i standing for element(i). The
 * range is cut into contiguous shards; results are merged in shard order,
 * so the report does not depend on the shard or thread count.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fuglede/group.hpp"

namespace fuglede {

inline constexpr std::uint64_t kEnumerationOrderLimit = 27;
inline constexpr std::uint64_t kFilteredEnumerationOrderLimit = 32;
inline constexpr std::uint64_t kMaxShards = std::uint64_t{1} << 20;

struct EnumerationOptions {
  /// Cardinalities to examine; all of them when absent.
  std::optional<std::vector<std::uint64_t>> sizes;
  bool canonical = false;
  std::uint64_t shards = 1;
  /// Worker threads; 0 picks min(shards, hardware threads).
  unsigned threads = 0;
  /// Each list in the report keeps at most this many sets; counts stay exact.
  std::size_t max_listed = 1000;
};

struct SizeTally {
  std::uint64_t size = 0;
  std::uint64_t subsets = 0;
  std::uint64_t tiles = 0;
  std::uint64_t spectral = 0;
  friend bool operator==(const SizeTally&, const SizeTally&) = default;
};

struct ConstructionFailure {
  GroupSet set;
  std::string construction;  // "spectrum_from_tile" or "complement_from_spectrum"
  std::string message;
};

struct EnumerationReport {
  GroupParams params;
  std::optional<std::vector<std::uint64_t>> size_filter{};
  bool canonical = false;
  std::uint64_t subsets_examined = 0;
  /// Orbit representatives examined; set in canonical mode only.
  std::optional<std::uint64_t> orbits_examined{};
  std::uint64_t tiles = 0;
  std::uint64_t spectral = 0;
  std::vector<SizeTally> by_size{};

  std::uint64_t mismatch_count = 0;
  std::vector<GroupSet> mismatches{};
  std::uint64_t construction_failure_count = 0;
  std::vector<ConstructionFailure> construction_failures{};
  std::uint64_t divisibility_exception_count = 0;
  std::vector<GroupSet> divisibility_exceptions{};
  std::uint64_t pigeonhole_exception_count = 0;
  std::vector<GroupSet> pigeonhole_exceptions{};
  std::uint64_t size_witness_exception_count = 0;
  std::vector<GroupSet> size_witness_exceptions{};

  double wall_time_seconds = 0.0;

  /// No mismatch and no exception of any kind.
  bool clean() const noexcept;
};

/**
 * Throws CapacityError when |G| exceeds kEnumerationOrderLimit, or
 * kFilteredEnumerationOrderLimit when a size filter is given;
 * ParameterError for a shard count outside [1, kMaxShards].
 */
EnumerationReport enumerate_and_check(const GroupParams& params, const EnumerationOptions& options = {});

/// Plain-text report. wall_time is printed only when `timing` is set, so
/// reports of equal runs compare byte for byte.
std::string format_report(const EnumerationReport& report, bool timing = false);
std::string format_report_json(const EnumerationReport& report, bool timing = false);

}  // namespace fuglede
