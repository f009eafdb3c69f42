#include "small_group.hpp"

#include <bit>

#include "fuglede/errors.hpp"

namespace fuglede::detail {
namespace {

Mask lowest(Mask m) { return m & (~m + 1); }

unsigned first_bit(Mask m) { return static_cast<unsigned>(std::countr_zero(m)); }

}  // namespace

SmallGroup::SmallGroup(GroupParams params)
    : params_(std::move(params)),
      order_(static_cast<unsigned>(params_.order())),
      modulus_(static_cast<unsigned>(params_.modulus())) {
  if (params_.order() > kMaxOrder) {
    throw CapacityError("group order " + std::to_string(params_.order()) + " exceeds the word kernel limit 64");
  }
  row_mask_ = modulus_ == 64 ? ~Mask{0} : (Mask{1} << modulus_) - 1;
  all_ = order_ == 64 ? ~Mask{0} : (Mask{1} << order_) - 1;
  for (Index i = 0; i < order_; ++i) elements_.push_back(params_.element(i));

  const std::size_t reps = rep_count(params_);
  slices_.assign(reps * modulus_, 0);
  class_masks_.assign(reps, 0);
  for (std::size_t s = 0; s < reps; ++s) {
    const ClassRep rep = rep_at_slot(params_, s);
    const Element u = rep_element(params_, rep);
    for (Index i = 0; i < order_; ++i) {
      slices_[s * modulus_ + inner_product(params_, elements_[i], u)] |= Mask{1} << i;
    }
    for (const Element& e : class_members(params_, rep)) class_masks_[s] |= Mask{1} << params_.index(e);
  }

  const std::vector<std::uint64_t> units = params_.units();
  unit_count_ = units.size();
  unit_perm_.resize(unit_count_ * order_);
  for (std::size_t k = 0; k < unit_count_; ++k) {
    for (Index i = 0; i < order_; ++i) {
      unit_perm_[k * order_ + i] = static_cast<unsigned>(params_.index(params_.multiply(units[k], elements_[i])));
    }
  }
}

Mask SmallGroup::translate(Mask set, Index g) const {
  const Element shift = elements_[g];
  const unsigned p = static_cast<unsigned>(params_.p());
  const unsigned dy = static_cast<unsigned>(shift.y);
  Mask out = 0;
  for (unsigned x = 0; x < p; ++x) {
    Mask row = (set >> (x * modulus_)) & row_mask_;
    if (row == 0) continue;
    if (dy != 0) row = ((row << dy) | (row >> (modulus_ - dy))) & row_mask_;
    out |= row << (((x + shift.x) % p) * modulus_);
  }
  return out;
}

Mask SmallGroup::scale(Mask set, std::size_t unit_slot) const {
  const unsigned* perm = &unit_perm_[unit_slot * order_];
  Mask out = 0;
  for (Mask rest = set; rest != 0; rest &= rest - 1) out |= Mask{1} << perm[first_bit(rest)];
  return out;
}

std::uint64_t SmallGroup::zero_slots(Mask set) const {
  const unsigned p = static_cast<unsigned>(params_.p());
  const unsigned step = static_cast<unsigned>(params_.step());
  std::uint64_t slots = 0;
  for (std::size_t s = 0; s < class_masks_.size(); ++s) {
    const Mask* slice = &slices_[s * modulus_];
    bool zero = true;
    for (unsigned t = 0; t < step && zero; ++t) {
      const int base = std::popcount(set & slice[t]);
      for (unsigned j = 1; j < p && zero; ++j) zero = std::popcount(set & slice[t + j * step]) == base;
    }
    if (zero) slots |= std::uint64_t{1} << s;
  }
  return slots;
}

Mask SmallGroup::zero_mask(std::uint64_t slots) const {
  Mask out = 0;
  for (; slots != 0; slots &= slots - 1) out |= class_masks_[first_bit(slots)];
  return out;
}

bool SmallGroup::colour_bound_allows(Mask zeros, Mask cand, unsigned need) const {
  Mask uncoloured = cand;
  unsigned colours = 0;
  while (uncoloured != 0) {
    if (++colours >= need) return true;
    Mask open = uncoloured;
    while (open != 0) {
      const unsigned v = first_bit(open);
      uncoloured &= ~(Mask{1} << v);
      open &= ~(Mask{1} << v);
      open &= ~translate(zeros, v);
    }
  }
  return colours >= need;
}

bool SmallGroup::clique_extend(Mask zeros, Mask cand, unsigned need, Mask& chosen) const {
  if (need == 0) return true;
  if (static_cast<unsigned>(std::popcount(cand)) < need || !colour_bound_allows(zeros, cand, need)) return false;
  Mask rest = cand;
  while (rest != 0) {
    if (static_cast<unsigned>(std::popcount(rest)) < need) break;
    const unsigned v = first_bit(rest);
    rest &= ~(Mask{1} << v);
    chosen |= Mask{1} << v;
    if (clique_extend(zeros, rest & translate(zeros, v), need - 1, chosen)) return true;
    chosen &= ~(Mask{1} << v);
  }
  return false;
}

std::optional<Mask> SmallGroup::find_spectrum(Mask set) const {
  const int k = std::popcount(set);
  if (k == 0) return std::nullopt;
  const Mask zeros = zero_mask(zero_slots(set));
  Mask chosen = 1;
  if (!clique_extend(zeros, zeros, static_cast<unsigned>(k - 1), chosen)) return std::nullopt;
  return chosen;
}

bool SmallGroup::cover_extend(const std::vector<Mask>& placed, const std::vector<Mask>& covering, Mask covered,
                              unsigned remaining, Mask& chosen) const {
  if (remaining == 0) return true;
  Mask valid = 0;
  for (unsigned g = 0; g < order_; ++g) {
    if ((placed[g] & covered) == 0) valid |= Mask{1} << g;
  }
  // First-fail on the uncovered cell with the fewest fitting translates.
  unsigned best_cell = order_;
  int best_count = 0;
  for (Mask open = all_ & ~covered; open != 0; open &= open - 1) {
    const unsigned c = first_bit(open);
    const int count = std::popcount(valid & covering[c]);
    if (best_cell == order_ || count < best_count) {
      best_cell = c;
      best_count = count;
      if (count == 0) return false;
    }
  }
  for (Mask options = valid & covering[best_cell]; options != 0; options &= options - 1) {
    const unsigned g = first_bit(options);
    chosen |= Mask{1} << g;
    if (cover_extend(placed, covering, covered | placed[g], remaining - 1, chosen)) return true;
    chosen &= ~(Mask{1} << g);
  }
  return false;
}

std::optional<Mask> SmallGroup::find_complement(Mask set) const {
  const unsigned k = static_cast<unsigned>(std::popcount(set));
  if (k == 0 || order_ % k != 0) return std::nullopt;
  Mask negated = 0;
  for (Mask rest = set; rest != 0; rest &= rest - 1) {
    negated |= Mask{1} << params_.index(params_.neg(elements_[first_bit(rest)]));
  }
  std::vector<Mask> placed(order_);
  std::vector<Mask> covering(order_);
  for (unsigned g = 0; g < order_; ++g) {
    placed[g] = translate(set, g);
    covering[g] = translate(negated, g);
  }
  Mask chosen = 0;
  if (!cover_extend(placed, covering, 0, order_ / k, chosen)) return std::nullopt;
  return chosen;
}

bool SmallGroup::is_canonical(Mask set) const {
  if (set == 0) return true;
  for (std::size_t k = 0; k < unit_count_; ++k) {
    const Mask scaled = scale(set, k);
    for (Mask rest = scaled; rest != 0; rest &= rest - 1) {
      const Index to_zero = params_.index(params_.neg(elements_[first_bit(rest)]));
      const Mask image = translate(scaled, to_zero);
      const Mask diff = image ^ set;
      if (diff != 0 && (image & lowest(diff)) != 0) return false;
    }
  }
  return true;
}

GroupSet SmallGroup::to_set(Mask set) const {
  GroupSet out(params_);
  for (; set != 0; set &= set - 1) out.insert_index(first_bit(set));
  return out;
}

Mask SmallGroup::from_set(const GroupSet& set) const { return set.words().empty() ? 0 : set.words()[0]; }

}  // namespace fuglede::detail
