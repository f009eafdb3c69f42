#include "fuglede/constructions.hpp"

#include <algorithm>
#include <functional>

#include "fuglede/charsum.hpp"
#include "fuglede/oracle.hpp"
#include "fuglede/structure.hpp"

namespace fuglede {
namespace {

std::string format_levels(const std::vector<unsigned>& levels) {
  std::string out = "{";
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (i != 0) out += ",";
    out += std::to_string(levels[i]);
  }
  return out + "}";
}

bool contains_level(const std::vector<unsigned>& levels, unsigned level) {
  return std::find(levels.begin(), levels.end(), level) != levels.end();
}

// {sum_i s_i g_i : s_i in [0, p)}.
GroupSet span_of(const GroupParams& params, const std::vector<Element>& generators) {
  std::vector<Element> current{{0, 0}};
  for (const Element& g : generators) {
    std::vector<Element> next;
    next.reserve(current.size() * params.p());
    for (const Element& base : current) {
      for (std::uint64_t s = 0; s < params.p(); ++s) next.push_back(params.add(base, params.multiply(s, g)));
    }
    current = std::move(next);
  }
  return GroupSet::from_elements(params, current);
}

// {(first(y), y) : digits of y at `fixed_zero` vanish} for each first value
// produced by `firsts`.
GroupSet digit_family(const GroupParams& params, const std::vector<unsigned>& fixed_zero,
                      const std::function<std::vector<std::uint64_t>(std::uint64_t)>& firsts) {
  GroupSet out(params);
  for (std::uint64_t y = 0; y < params.modulus(); ++y) {
    const bool admissible = std::all_of(fixed_zero.begin(), fixed_zero.end(),
                                        [&](unsigned k) { return digit(y, params.p(), k) == 0; });
    if (!admissible) continue;
    for (std::uint64_t x : firsts(y)) out.insert({x, y});
  }
  return out;
}

std::vector<std::uint64_t> all_residues(std::uint64_t p) {
  std::vector<std::uint64_t> out(p);
  for (std::uint64_t x = 0; x < p; ++x) out[x] = x;
  return out;
}

bool level_fully_zero(const ZeroProfile& profile, unsigned level) {
  for (std::uint64_t c = 0; c < profile.params().p(); ++c) {
    if (!profile.contains(ClassRep::mixed(c, level))) return false;
  }
  return true;
}

GroupSet obtain_complement(const GroupSet& tile, const std::optional<GroupSet>& complement) {
  if (complement) return *complement;
  if (tile.params().order() > kAutoSearchOrderLimit) {
    throw MissingPartnerError("this case needs a tiling complement; supply one for groups of order above " +
                              std::to_string(kAutoSearchOrderLimit));
  }
  auto found = find_complement_bruteforce(tile);
  if (!found) throw InvalidInputError("A is not a tile: no tiling complement exists");
  return *std::move(found);
}

GroupSet obtain_spectrum(const GroupSet& set, const std::optional<GroupSet>& spectrum) {
  if (spectrum) return *spectrum;
  if (set.params().order() > kAutoSearchOrderLimit) {
    throw MissingPartnerError("this case needs a spectrum; supply one for groups of order above " +
                              std::to_string(kAutoSearchOrderLimit));
  }
  auto found = find_spectrum_bruteforce(set);
  if (!found) throw InvalidInputError("A is not spectral: no spectrum exists");
  return *std::move(found);
}

Construction finish_spectrum(const GroupSet& tile, Construction c) {
  const PairCheck check = check_spectral_pair(tile, c.partner);
  if (!check.ok) {
    throw InvalidInputError("constructed set is not a spectrum (" + check.reason + "); A is not a tile");
  }
  return c;
}

Construction finish_complement(const GroupSet& set, Construction c) {
  const PairCheck check = check_tiling_pair(set, c.partner);
  if (!check.ok) {
    throw InvalidInputError("constructed set is not a tiling complement (" + check.reason +
                            "); A is not spectral");
  }
  return c;
}

// Tile of size p^t, 2 <= t <= n, with |I| = t - 1.
Construction spectrum_needing_complement(const GroupSet& tile, const ZeroProfile& za,
                                         const std::vector<unsigned>& levels_a, const GroupSet& complement,
                                         unsigned t) {
  const GroupParams& params = tile.params();
  const std::uint64_t p = params.p();
  const ZeroProfile zt = zero_set(complement);
  const std::vector<unsigned> levels_t = zt.levels();
  const std::vector<Witness> sets{{"I", format_levels(levels_a)}, {"J", format_levels(levels_t)}};
  if (levels_t.size() != params.n() - t + 1) {
    throw InvalidInputError("|J| = " + std::to_string(levels_t.size()) + " but a tiling pair needs " +
                            std::to_string(params.n() - t + 1) + "; A is not a tile");
  }

  // Case 2: some (d, p^b), b in J, is a zero of A, and so is every (c, p^a)
  // with a in I below b.
  for (unsigned b : levels_t) {
    const bool lower_full = std::all_of(levels_a.begin(), levels_a.end(),
                                        [&](unsigned a) { return a > b || level_fully_zero(za, a); });
    if (!lower_full) continue;
    for (std::uint64_t d = 0; d < p; ++d) {
      if (!za.contains(ClassRep::mixed(d, b))) continue;
      std::vector<Element> generators{{d, params.power(b)}};
      for (unsigned a : levels_a) generators.push_back({0, params.power(a)});
      CaseTrace trace{Theorem::TileToSpectralPower, "Case2", sets};
      trace.witnesses.push_back({"d", std::to_string(d)});
      trace.witnesses.push_back({"b_k", std::to_string(b)});
      return {span_of(params, generators), std::move(trace)};
    }
  }

  // Case 1 would hand T a spectrum larger than T.
  for (unsigned a : levels_a) {
    const bool lower_full = std::all_of(levels_t.begin(), levels_t.end(),
                                        [&](unsigned b) { return b > a || level_fully_zero(zt, b); });
    if (!lower_full) continue;
    for (std::uint64_t d = 0; d < p; ++d) {
      if (zt.contains(ClassRep::mixed(d, a))) {
        throw InvalidInputError("Case1 of the tile construction matched ((" + std::to_string(d) + ",p^" +
                                std::to_string(a) + ") in Z_T), which is impossible for a tiling pair");
      }
    }
  }

  // Case 3: all classes on the levels of I are zeros of A, all classes on
  // the levels of J are zeros of T.
  const bool a_side = std::all_of(levels_a.begin(), levels_a.end(),
                                  [&](unsigned a) { return level_fully_zero(za, a); });
  const bool t_side = std::all_of(levels_t.begin(), levels_t.end(),
                                  [&](unsigned b) { return level_fully_zero(zt, b); });
  if (a_side && t_side) {
    if (zt.has_unit_axis()) {
      throw InvalidInputError("Case3 of the tile construction with (1,0) in Z_T matched, "
                              "which is impossible for a tiling pair");
    }
    if (za.has_unit_axis()) {
      std::vector<Element> generators{{1, 0}};
      for (unsigned a : levels_a) generators.push_back({0, params.power(a)});
      return {span_of(params, generators), CaseTrace{Theorem::TileToSpectralPower, "Case3", sets}};
    }
  }
  throw InvalidInputError("no case of the tile construction applies; A is not a tile");
}

// Spectral set of size p^s, 2 <= s <= n.
Construction complement_of_power(const GroupSet& set, const ZeroProfile& za, unsigned s,
                                 const std::optional<GroupSet>& spectrum) {
  const GroupParams& params = set.params();
  const std::uint64_t p = params.p();
  const unsigned n = params.n();
  const std::vector<unsigned> levels_a = za.levels();

  // Digit positions n-1-i, i in I, are pinned to zero in Cases 1 and 3.
  std::vector<unsigned> mirrored;
  for (unsigned i : levels_a) mirrored.push_back(n - 1 - i);

  if (levels_a.size() == s) {
    CaseTrace trace{Theorem::SpectralToTilePower, "Case1", {{"I", format_levels(levels_a)}}};
    return {digit_family(params, mirrored, [&](std::uint64_t) { return all_residues(p); }), std::move(trace)};
  }

  const GroupSet b = obtain_spectrum(set, spectrum);
  const std::vector<unsigned> levels_b = zero_set(b).levels();
  std::vector<Witness> sets{{"I", format_levels(levels_a)}, {"J", format_levels(levels_b)}};

  if (levels_b.size() + 1 == s) {
    GroupSet t = digit_family(params, levels_b, [](std::uint64_t) { return std::vector<std::uint64_t>{0}; });
    return {std::move(t), CaseTrace{Theorem::SpectralToTilePower, "Case2", std::move(sets)}};
  }

  if (levels_a.size() + 1 == s && levels_b.size() == s) {
    const auto j0 = std::find_if(levels_b.begin(), levels_b.end(),
                                 [&](unsigned j) { return !contains_level(levels_a, n - 1 - j); });
    if (j0 == levels_b.end()) throw InvalidInputError("no j0 in J with n-1-j0 outside I; A is not spectral");
    const unsigned level = n - 1 - *j0;
    const std::uint64_t low = params.power(level);
    const std::vector<Element> members = b.elements();
    for (const Element& first : members) {
      for (const Element& second : members) {
        if (first.x == second.x) continue;
        const std::uint64_t diff = (first.y + params.modulus() - second.y) % params.modulus();
        const std::uint64_t c_prime = (diff / low) % p;
        if (diff % low != 0 || c_prime == 0) continue;
        const std::uint64_t c = (c_prime * inverse_mod((first.x + p - second.x) % p, p)) % p;
        const unsigned pinned_j0 = *j0;
        GroupSet t = digit_family(params, mirrored, [&](std::uint64_t y) {
          return std::vector<std::uint64_t>{(p - (c * digit(y, p, pinned_j0)) % p) % p};
        });
        CaseTrace trace{Theorem::SpectralToTilePower, "Case3", std::move(sets)};
        trace.witnesses.push_back({"j0", std::to_string(*j0)});
        trace.witnesses.push_back({"pair", to_string(first) + "-" + to_string(second)});
        trace.witnesses.push_back({"c", std::to_string(c)});
        return {std::move(t), std::move(trace)};
      }
    }
    throw InvalidInputError("no pair of B realises the level n-1-j0; B is not a spectrum");
  }
  throw InvalidInputError("|I| = " + std::to_string(levels_a.size()) + ", |J| = " +
                          std::to_string(levels_b.size()) + " match no case; A is not spectral");
}

}  // namespace

std::string_view theorem_id(Theorem theorem) {
  switch (theorem) {
    case Theorem::Trivial:
      return "trivial";
    case Theorem::TileToSpectralPrime:
      return "T2S-p";
    case Theorem::TileToSpectralPower:
      return "T2S-pt";
    case Theorem::SpectralToTileBig:
      return "S2T-big";
    case Theorem::SpectralToTilePrime:
      return "S2T-p";
    case Theorem::SpectralToTilePower:
      return "S2T-ps";
    case Theorem::SpectralToTileMixed:
      return "S2T-mps";
  }
  return "?";
}

NonSpectralSizeError::NonSpectralSizeError(SizeObstruction obstruction)
    : InvalidInputError("|A| = " + std::to_string(obstruction.m) + " p^" + std::to_string(obstruction.s) +
                        " with 2 <= m <= p-1; no spectrum exists"),
      obstruction_(obstruction) {}

std::optional<SizeObstruction> nonspectral_size_witness(const GroupSet& set) {
  const std::size_t k = set.size();
  if (k == 0) return std::nullopt;
  const SizeClass size_class = classify_size(k, set.params());
  if (const auto* mixed = std::get_if<MixedSize>(&size_class)) return SizeObstruction{mixed->m, mixed->s};
  return std::nullopt;
}

Construction spectrum_from_tile(const GroupSet& tile, const std::optional<GroupSet>& complement) {
  const GroupParams& params = tile.params();
  const std::size_t k = tile.size();
  if (k == 0) throw InvalidInputError("the empty set is not a tile");
  if (complement) {
    const PairCheck check = check_tiling_pair(tile, *complement);
    if (!check.ok) throw InvalidInputError("(A, T) is not a tiling pair: " + check.reason);
  }
  if (k == 1) return {GroupSet::from_elements(params, std::vector<Element>{{0, 0}}), {Theorem::Trivial, "singleton", {}}};
  if (k == params.order()) return {GroupSet::full(params), {Theorem::Trivial, "full", {}}};

  const SizeClass size_class = classify_size(k, params);
  const auto* power = std::get_if<PurePower>(&size_class);
  if (power == nullptr) {
    throw InvalidInputError("|A| = " + std::to_string(k) + " does not divide |G|; A is not a tile");
  }
  const unsigned t = power->s;
  const ZeroProfile za = zero_set(tile);

  if (t == 1) {
    for (Index i = 1; i < params.order(); ++i) {
      const Element u = params.element(i);
      if (!za.contains_element(u)) continue;
      GroupSet b(params);
      for (std::uint64_t r = 0; r < params.p(); ++r) b.insert(params.multiply(r, u));
      return finish_spectrum(tile, {std::move(b), {Theorem::TileToSpectralPrime, "single", {{"zero", to_string(u)}}}});
    }
    throw InvalidInputError("Z_A is empty; A is not a tile");
  }

  const std::vector<unsigned> levels_a = za.levels();
  if (levels_a.size() == t) {
    std::vector<Element> generators;
    for (unsigned i : levels_a) generators.push_back({0, params.power(i)});
    return finish_spectrum(tile, {span_of(params, generators),
                                  {Theorem::TileToSpectralPower, "I=t", {{"I", format_levels(levels_a)}}}});
  }
  if (levels_a.size() + 1 != t) {
    throw InvalidInputError("|I| = " + std::to_string(levels_a.size()) + " lies outside [t-1, t] for t = " +
                            std::to_string(t) + "; A is not a tile");
  }
  const GroupSet t_set = obtain_complement(tile, complement);
  return finish_spectrum(tile, spectrum_needing_complement(tile, za, levels_a, t_set, t));
}

Construction complement_from_spectrum(const GroupSet& set, const std::optional<GroupSet>& spectrum) {
  const GroupParams& params = set.params();
  const std::size_t k = set.size();
  if (k == 0) throw InvalidInputError("the empty set is not spectral");
  if (spectrum) {
    const PairCheck check = check_spectral_pair(set, *spectrum);
    if (!check.ok) throw InvalidInputError("(A, B) is not a spectral pair: " + check.reason);
  }
  if (k == 1) return {GroupSet::full(params), {Theorem::Trivial, "singleton", {}}};
  if (k > params.modulus()) {
    if (k != params.order()) {
      throw InvalidInputError("|A| = " + std::to_string(k) + " exceeds p^n but A != G; A is not spectral");
    }
    return {GroupSet::from_elements(params, std::vector<Element>{{0, 0}}), {Theorem::SpectralToTileBig, "A=G", {}}};
  }
  if (const auto obstruction = nonspectral_size_witness(set)) throw NonSpectralSizeError(*obstruction);

  const SizeClass size_class = classify_size(k, params);
  const auto* power = std::get_if<PurePower>(&size_class);
  if (power == nullptr) {
    throw InvalidInputError("|A| = " + std::to_string(k) + " is not a power of p; A is not spectral");
  }
  const std::uint64_t p = params.p();
  const unsigned n = params.n();
  const ZeroProfile za = zero_set(set);

  if (power->s >= 2) return finish_complement(set, complement_of_power(set, za, power->s, spectrum));

  if (za.has_unit_axis()) {
    GroupSet t(params);
    for (std::uint64_t y = 0; y < params.modulus(); ++y) t.insert({0, y});
    return finish_complement(set, {std::move(t), {Theorem::SpectralToTilePrime, "Case1", {}}});
  }
  for (unsigned level = 0; level < n; ++level) {
    if (!za.contains(ClassRep::mixed(0, level))) continue;
    GroupSet t = digit_family(params, {n - level - 1}, [&](std::uint64_t) { return all_residues(p); });
    return finish_complement(set, {std::move(t), {Theorem::SpectralToTilePrime, "Case2", {{"s", std::to_string(level)}}}});
  }
  for (unsigned level = 0; level < n; ++level) {
    for (std::uint64_t c = 1; c < p; ++c) {
      if (!za.contains(ClassRep::mixed(c, level))) continue;
      const std::uint64_t c_inv = inverse_mod(c, p);
      GroupSet t = digit_family(params, {}, [&](std::uint64_t y) {
        return std::vector<std::uint64_t>{(p - (c_inv * digit(y, p, n - level - 1)) % p) % p};
      });
      return finish_complement(
          set, {std::move(t),
                {Theorem::SpectralToTilePrime, "Case3", {{"c", std::to_string(c)}, {"s", std::to_string(level)}}}});
    }
  }
  throw InvalidInputError("Z_A is empty; A is not spectral");
}

}  // namespace fuglede
