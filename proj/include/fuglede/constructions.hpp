#pragma once

/**
 * @file constructions.hpp
 * @brief Explicit partners: a spectrum for a tile, a tiling complement for a
 * spectral set.
 *
 * Both constructions read the partner off the zero set. Let
 * I = {i : (0, p^i) in Z_A} and J the same index set for the partner.
 *
 * Tile -> spectrum, |A| = p^t:
 *   - t = 1: the multiples r u, r in [0, p), of the first zero u of A.
 *   - |I| = t: the span of (0, p^i), i in I.
 *   - |I| = t - 1 ("Case2"): a zero (d, p^{b}) with b in J and every
 *     (c, p^{a}) with a in I, a < b also a zero; span of (d, p^b) and (0, p^a).
 *   - "Case3": (1, 0) in Z_A; span of (1, 0) and (0, p^a), a in I.
 *   "Case1" and the (1,0)-in-Z_T branch of Case3 cannot occur for a real
 *   tiling pair and are reported as invalid input.
 *
 * Spectral -> complement, |A| = p^s (digits y_i of the second coordinate):
 *   - s = 1: by the first of (1,0), (0,p^s), (c,p^s) found in Z_A.
 *   - s >= 2: |I| = s ("Case1"), |J| = s - 1 ("Case2"), or |I| = s - 1 and
 *     |J| = s ("Case3", constants j0 and c read off pairs of B).
 *
 * Every result is re-checked with the pair verifier before it is returned.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fuglede/errors.hpp"
#include "fuglede/group.hpp"

namespace fuglede {

enum class Theorem {
  Trivial,                 // |A| = 1 or A = G
  TileToSpectralPrime,     // T2S-p
  TileToSpectralPower,     // T2S-pt
  SpectralToTileBig,       // S2T-big
  SpectralToTilePrime,     // S2T-p
  SpectralToTilePower,     // S2T-ps
  SpectralToTileMixed,     // S2T-mps
};

std::string_view theorem_id(Theorem theorem);

struct Witness {
  std::string name;
  std::string value;
  friend bool operator==(const Witness&, const Witness&) = default;
};

struct CaseTrace {
  Theorem theorem = Theorem::Trivial;
  std::string case_id;
  std::vector<Witness> witnesses;
  friend bool operator==(const CaseTrace&, const CaseTrace&) = default;
};

struct Construction {
  GroupSet partner;
  CaseTrace trace;
};

struct SizeObstruction {
  std::uint64_t m = 0;
  unsigned s = 0;
  friend bool operator==(const SizeObstruction&, const SizeObstruction&) = default;
};

class NonSpectralSizeError : public InvalidInputError {
 public:
  explicit NonSpectralSizeError(SizeObstruction obstruction);
  const SizeObstruction& obstruction() const noexcept { return obstruction_; }

 private:
  SizeObstruction obstruction_;
};

/// Groups up to this order get a brute-force partner when one is needed and
/// was not supplied.
inline constexpr std::uint64_t kAutoSearchOrderLimit = std::uint64_t{1} << 16;

/**
 * Spectrum for a tile A. The complement T is consulted (and verified) when
 * given; it is only required when |I| = t - 1.
 *
 * Throws InvalidInputError if A is not a tile, MissingPartnerError if T is
 * needed, absent, and the group is above kAutoSearchOrderLimit.
 */
Construction spectrum_from_tile(const GroupSet& tile, const std::optional<GroupSet>& complement = std::nullopt);

/**
 * Tiling complement for a spectral set A. The spectrum B is consulted (and
 * verified) when given; it is only required for the |A| = p^s, s >= 2 cases
 * that depend on J.
 *
 * Throws NonSpectralSizeError for |A| = m p^s with 2 <= m <= p - 1,
 * InvalidInputError if A is otherwise not spectral, MissingPartnerError as above.
 */
Construction complement_from_spectrum(const GroupSet& spectral,
                                      const std::optional<GroupSet>& spectrum = std::nullopt);

/// (m, s) when |A| = m p^s with 2 <= m <= p - 1; such sets have no spectrum.
std::optional<SizeObstruction> nonspectral_size_witness(const GroupSet& set);

}  // namespace fuglede
