#include "fuglede/oracle.hpp"

#include <random>

namespace fuglede {
namespace {

void require_same_group(const GroupSet& a, const GroupSet& b) {
  if (!(a.params() == b.params())) {
    throw ParameterError("sets belong to different groups: " + to_string(a.params()) + " vs " +
                         to_string(b.params()));
  }
}

void require_oracle_capacity(const GroupParams& params) {
  if (params.order() > kOracleOrderLimit) {
    throw CapacityError("group order " + std::to_string(params.order()) + " exceeds the oracle limit " +
                        std::to_string(kOracleOrderLimit));
  }
}

// Smallest nonzero element of a set, if any.
std::optional<Element> first_nonzero(const GroupSet& set) {
  std::optional<Element> out;
  set.for_each_index([&](Index i) {
    if (!out && i != 0) out = set.params().element(i);
  });
  return out;
}

// Clique search in the Cayley graph of G with connection set Z_A.
class CliqueSearch {
 public:
  explicit CliqueSearch(GroupSet zeros) : zeros_(std::move(zeros)), params_(zeros_.params()) {
    if (params_.order() <= kCacheLimit) cache_.resize(static_cast<std::size_t>(params_.order()));
  }

  std::optional<GroupSet> run(std::size_t size) {
    chosen_.clear();
    if (!extend(zeros_, size - 1)) return std::nullopt;
    GroupSet out(params_);
    out.insert_index(0);
    for (Index v : chosen_) out.insert_index(v);
    return out;
  }

 private:
  static constexpr std::uint64_t kCacheLimit = 4096;

  GroupSet neighbors(Index v) {
    if (cache_.empty()) return translate(zeros_, params_.element(v));
    auto& slot = cache_[static_cast<std::size_t>(v)];
    if (!slot) slot = translate(zeros_, params_.element(v));
    return *slot;
  }

  // Greedy colouring: a clique uses at most one vertex per colour class.
  bool colour_bound_allows(const GroupSet& cand, std::size_t need) {
    GroupSet uncoloured = cand;
    std::size_t colours = 0;
    while (!uncoloured.empty()) {
      if (++colours >= need) return true;
      GroupSet open = uncoloured;
      while (const auto v = open.first()) {
        uncoloured.erase_index(*v);
        open.erase_index(*v);
        open -= neighbors(*v);
      }
    }
    return colours >= need;
  }

  bool extend(const GroupSet& cand, std::size_t need) {
    if (need == 0) return true;
    if (cand.size() < need || !colour_bound_allows(cand, need)) return false;
    GroupSet rest = cand;
    while (const auto v = rest.first()) {
      if (rest.size() < need) break;
      rest.erase_index(*v);
      chosen_.push_back(*v);
      if (extend(rest & neighbors(*v), need - 1)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  GroupSet zeros_;
  const GroupParams& params_;
  std::vector<std::optional<GroupSet>> cache_;
  std::vector<Index> chosen_;
};

// Exact cover of G by translates of A.
class CoverSearch {
 public:
  explicit CoverSearch(const GroupSet& tile)
      : params_(tile.params()), tile_(tile.elements()), covered_(params_), chosen_(params_) {}

  std::optional<GroupSet> run() {
    if (!extend(params_.order() / tile_.size())) return std::nullopt;
    return chosen_;
  }

 private:
  bool fits(Element g) const {
    for (const Element& a : tile_) {
      if (covered_.contains_index(params_.index(params_.add(a, g)))) return false;
    }
    return true;
  }

  void mark(Element g, bool on) {
    for (const Element& a : tile_) {
      const Index i = params_.index(params_.add(a, g));
      if (on) {
        covered_.insert_index(i);
      } else {
        covered_.erase_index(i);
      }
    }
  }

  bool extend(std::uint64_t remaining) {
    if (remaining == 0) return true;
    GroupSet valid(params_);
    for (Index gi = 0; gi < params_.order(); ++gi) {
      if (fits(params_.element(gi))) valid.insert_index(gi);
    }
    // First-fail: the uncovered cell with the fewest fitting translates.
    std::optional<Index> best_cell;
    std::size_t best_count = 0;
    for (Index c = 0; c < params_.order(); ++c) {
      if (covered_.contains_index(c)) continue;
      const Element cell = params_.element(c);
      std::size_t count = 0;
      for (const Element& a : tile_) count += valid.contains_index(params_.index(params_.sub(cell, a)));
      if (!best_cell || count < best_count) {
        best_cell = c;
        best_count = count;
        if (count == 0) return false;
      }
    }
    const Element cell = params_.element(*best_cell);
    GroupSet options(params_);
    for (const Element& a : tile_) {
      const Index gi = params_.index(params_.sub(cell, a));
      if (valid.contains_index(gi)) options.insert_index(gi);
    }
    bool found = false;
    options.for_each_index([&](Index gi) {
      if (found) return;
      const Element g = params_.element(gi);
      mark(g, true);
      chosen_.insert_index(gi);
      if (extend(remaining - 1)) {
        found = true;
        return;
      }
      chosen_.erase_index(gi);
      mark(g, false);
    });
    return found;
  }

  const GroupParams& params_;
  std::vector<Element> tile_;
  GroupSet covered_;
  GroupSet chosen_;
};

}  // namespace

PairCheck check_spectral_pair(const GroupSet& a, const GroupSet& b) {
  require_same_group(a, b);
  if (a.size() != b.size()) {
    return {false, std::nullopt,
            "size mismatch: |A| = " + std::to_string(a.size()) + ", |B| = " + std::to_string(b.size())};
  }
  const ZeroProfile profile = zero_set(a);
  const GroupParams& params = a.params();
  std::optional<Element> witness;
  difference_set(b).for_each_index([&](Index i) {
    if (witness || i == 0) return;
    const Element d = params.element(i);
    if (!profile.contains_element(d)) witness = d;
  });
  if (witness) return {false, witness, "difference " + to_string(*witness) + " is not a zero of A"};
  return {true, std::nullopt, {}};
}

PairCheck check_tiling_pair(const GroupSet& a, const GroupSet& t) {
  require_same_group(a, t);
  if (a.size() * t.size() != a.params().order()) {
    return {false, std::nullopt,
            "size mismatch: |A| |T| = " + std::to_string(a.size() * t.size()) + ", |G| = " +
                std::to_string(a.params().order())};
  }
  const auto shared = first_nonzero(difference_set(a) & difference_set(t));
  if (shared) return {false, shared, "difference " + to_string(*shared) + " occurs in both A - A and T - T"};
  return {true, std::nullopt, {}};
}

bool verify_spectral_pair(const GroupSet& a, const GroupSet& b) { return check_spectral_pair(a, b).ok; }

bool verify_tiling_pair(const GroupSet& a, const GroupSet& t) { return check_tiling_pair(a, t).ok; }

bool zero_sets_cover(const GroupSet& a, const GroupSet& t) {
  require_same_group(a, t);
  const ZeroProfile za = zero_set(a);
  const ZeroProfile zt = zero_set(t);
  for (std::size_t s = 0; s < rep_count(a.params()); ++s) {
    const ClassRep rep = rep_at_slot(a.params(), s);
    if (!za.contains(rep) && !zt.contains(rep)) return false;
  }
  return true;
}

std::optional<GroupSet> find_spectrum_bruteforce(const GroupSet& set) {
  require_oracle_capacity(set.params());
  const std::size_t k = set.size();
  if (k == 0) return std::nullopt;
  return CliqueSearch(zero_elements(zero_set(set))).run(k);
}

std::optional<GroupSet> find_complement_bruteforce(const GroupSet& set) {
  require_oracle_capacity(set.params());
  const std::size_t k = set.size();
  if (k == 0 || set.params().order() % k != 0) return std::nullopt;
  return CoverSearch(set).run();
}

GroupSet canonicalize(const GroupSet& set) {
  if (set.empty()) return set;
  const GroupParams& params = set.params();
  std::optional<GroupSet> best;
  // The least set of an orbit contains 0, so only translations that move
  // some member of a A onto 0 need to be tried.
  for (std::uint64_t a : params.units()) {
    const GroupSet scaled = scale_translate(set, a, {0, 0});
    for (const Element& e : scaled.elements()) {
      GroupSet image = translate(scaled, params.neg(e));
      if (!best || lex_less(image, *best)) best = std::move(image);
    }
  }
  return *std::move(best);
}

OracleCompareReport oracle_compare(const GroupParams& params, std::uint64_t trials, std::uint64_t seed,
                                   const ZeroTest& test) {
  require_oracle_capacity(params);
  OracleCompareReport report{params, trials, seed, 0, {}};
  std::mt19937_64 engine(seed);
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    GroupSet set = random_subset(params, engine);
    const Element u = params.element(engine() % params.order());
    const bool counting = test(set, u);
    const bool exact = char_value_exact(set, u).is_zero();
    report.zeros += exact;
    if (counting != exact) report.discrepancies.push_back({trial, std::move(set), u, counting, exact});
  }
  return report;
}

}  // namespace fuglede
