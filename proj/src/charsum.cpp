#include "fuglede/charsum.hpp"

#include <algorithm>

namespace fuglede {

SliceCounts slice_counts(const GroupSet& set, Element u) {
  const GroupParams& params = set.params();
  params.check(u);
  SliceCounts out{u, std::vector<std::uint64_t>(static_cast<std::size_t>(params.modulus()), 0)};
  set.for_each_index([&](Index i) { ++out.counts[inner_product(params, params.element(i), u)]; });
  return out;
}

bool is_equidistributed(const GroupParams& params, std::span<const std::uint64_t> counts) {
  if (counts.size() != params.modulus()) throw ParameterError("slice count vector has the wrong length");
  const std::uint64_t step = params.step();
  for (std::uint64_t r = 0; r < step; ++r) {
    const std::uint64_t first = counts[r];
    for (std::uint64_t j = 1; j < params.p(); ++j) {
      if (counts[r + j * step] != first) return false;
    }
  }
  return true;
}

bool is_zero_equidist(const GroupSet& set, Element u) {
  return is_equidistributed(set.params(), slice_counts(set, u).counts);
}

CyclotomicInt::CyclotomicInt(std::uint64_t p, unsigned n) : p_(p), n_(n) {
  const GroupParams params(p, n);
  modulus_ = params.modulus();
  step_ = params.step();
  coeffs_.assign(static_cast<std::size_t>(modulus_ - step_), 0);
}

CyclotomicInt CyclotomicInt::from_powers(std::uint64_t p, unsigned n, std::span<const std::int64_t> weights) {
  CyclotomicInt out(p, n);
  if (weights.size() != out.modulus_) throw ParameterError("weight vector must have length p^n");
  std::vector<std::int64_t> buffer(weights.begin(), weights.end());
  out.reduce_from(buffer);
  return out;
}

void CyclotomicInt::reduce_from(std::vector<std::int64_t>& buffer) {
  const std::uint64_t phi = modulus_ - step_;
  for (std::uint64_t e = modulus_; e-- > phi;) {
    const std::int64_t v = buffer[e];
    if (v == 0) continue;
    buffer[e] = 0;
    const std::uint64_t base = e - phi;
    for (std::uint64_t j = 0; j + 1 < p_; ++j) buffer[base + j * step_] -= v;
  }
  std::copy_n(buffer.begin(), phi, coeffs_.begin());
}

bool CyclotomicInt::is_zero() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::int64_t c) { return c == 0; });
}

CyclotomicInt CyclotomicInt::times_root(std::uint64_t k) const {
  CyclotomicInt out(*this);
  std::vector<std::int64_t> buffer(static_cast<std::size_t>(modulus_), 0);
  k %= modulus_;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) buffer[(j + k) % modulus_] += coeffs_[j];
  out.reduce_from(buffer);
  return out;
}

CyclotomicInt& CyclotomicInt::operator+=(const CyclotomicInt& other) {
  if (p_ != other.p_ || n_ != other.n_) throw ParameterError("cyclotomic integers of different orders");
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += other.coeffs_[j];
  return *this;
}

CyclotomicInt char_value_exact(const GroupSet& set, Element u) {
  const GroupParams& params = set.params();
  params.check(u);
  std::vector<std::int64_t> weights(static_cast<std::size_t>(params.modulus()), 0);
  for (const Element& a : set.elements()) ++weights[inner_product(params, a, u)];
  return CyclotomicInt::from_powers(params.p(), params.n(), weights);
}

ZeroProfile::ZeroProfile(GroupParams params) : params_(params), slots_(rep_count(params), false) {}

bool ZeroProfile::contains(const ClassRep& rep) const {
  if (rep.kind == ClassRep::Kind::Zero) return false;
  return slots_[rep_slot(params_, rep)];
}

bool ZeroProfile::contains_element(Element e) const { return contains(canonical_rep(params_, e)); }

void ZeroProfile::insert(const ClassRep& rep) { slots_[rep_slot(params_, rep)] = true; }

std::vector<ClassRep> ZeroProfile::reps() const {
  std::vector<ClassRep> out;
  for (std::size_t s = 0; s < slots_.size(); ++s) {
    if (slots_[s]) out.push_back(rep_at_slot(params_, s));
  }
  return out;
}

std::vector<unsigned> ZeroProfile::levels() const {
  std::vector<unsigned> out;
  for (unsigned i = 0; i < params_.n(); ++i) {
    if (contains(ClassRep::mixed(0, i))) out.push_back(i);
  }
  return out;
}

bool ZeroProfile::empty() const { return std::none_of(slots_.begin(), slots_.end(), [](bool b) { return b; }); }

std::size_t ZeroProfile::size() const {
  return static_cast<std::size_t>(std::count(slots_.begin(), slots_.end(), true));
}

ZeroProfile zero_set(const GroupSet& set) {
  const GroupParams& params = set.params();
  ZeroProfile profile(params);
  for (std::size_t s = 0; s < rep_count(params); ++s) {
    const ClassRep rep = rep_at_slot(params, s);
    if (is_zero_equidist(set, rep_element(params, rep))) profile.insert(rep);
  }
  return profile;
}

GroupSet zero_elements(const ZeroProfile& profile) {
  GroupSet out(profile.params());
  for (const ClassRep& rep : profile.reps()) {
    for (const Element& e : class_members(profile.params(), rep)) out.insert(e);
  }
  return out;
}

std::vector<CyclotomicInt> character_table(const GroupSet& set) {
  const GroupParams& params = set.params();
  std::vector<CyclotomicInt> table;
  table.reserve(static_cast<std::size_t>(params.order()));
  for (Index i = 0; i < params.order(); ++i) table.push_back(char_value_exact(set, params.element(i)));
  return table;
}

std::optional<GroupSet> invert_character_table(const GroupParams& params,
                                               std::span<const CyclotomicInt> table) {
  if (table.size() != params.order()) throw ParameterError("character table has the wrong size");
  const std::uint64_t m = params.modulus();
  const auto order = static_cast<std::int64_t>(params.order());
  GroupSet out(params);
  std::vector<std::int64_t> buffer(static_cast<std::size_t>(m));
  for (Index gi = 0; gi < params.order(); ++gi) {
    const Element g = params.element(gi);
    std::fill(buffer.begin(), buffer.end(), 0);
    for (Index ui = 0; ui < params.order(); ++ui) {
      const CyclotomicInt& value = table[ui];
      if (value.p() != params.p() || value.n() != params.n()) {
        throw ParameterError("character table entry from a different group");
      }
      const std::uint64_t shift = (m - inner_product(params, params.element(ui), g)) % m;
      const auto coeffs = value.coefficients();
      for (std::size_t j = 0; j < coeffs.size(); ++j) buffer[(j + shift) % m] += coeffs[j];
    }
    const CyclotomicInt total = CyclotomicInt::from_powers(params.p(), params.n(), buffer);
    const auto coeffs = total.coefficients();
    if (std::any_of(coeffs.begin() + 1, coeffs.end(), [](std::int64_t c) { return c != 0; })) {
      return std::nullopt;
    }
    if (coeffs[0] == order) {
      out.insert_index(gi);
    } else if (coeffs[0] != 0) {
      return std::nullopt;
    }
  }
  return out;
}

bool inversion_check(const GroupSet& set, std::span<const CyclotomicInt> table) {
  const auto rebuilt = invert_character_table(set.params(), table);
  return rebuilt.has_value() && *rebuilt == set;
}

bool inversion_check(const GroupSet& set) { return inversion_check(set, character_table(set)); }

}  // namespace fuglede
