#include "fuglede/group.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <utility>

namespace fuglede {

std::string to_string(Element e) {
  return "(" + std::to_string(e.x) + "," + std::to_string(e.y) + ")";
}

bool is_prime(std::uint64_t v) {
  if (v < 2) return false;
  if (v < 4) return true;
  if (v % 2 == 0) return false;
  for (std::uint64_t d = 3; d <= v / d; d += 2) {
    if (v % d == 0) return false;
  }
  return true;
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
  if (m == 1) return 0;
  std::int64_t old_r = static_cast<std::int64_t>(a % m);
  std::int64_t r = static_cast<std::int64_t>(m);
  std::int64_t old_s = 1;
  std::int64_t s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
  }
  if (old_r != 1) {
    throw ParameterError(std::to_string(a) + " is not invertible modulo " + std::to_string(m));
  }
  const auto mm = static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(((old_s % mm) + mm) % mm);
}

GroupParams::GroupParams(std::uint64_t p, unsigned n, std::uint64_t order_limit) : p_(p), n_(n) {
  if (!is_prime(p)) throw ParameterError("p = " + std::to_string(p) + " is not prime");
  if (n < 1) throw ParameterError("n must be at least 1");
  std::uint64_t acc = 1;
  for (unsigned k = 0; k <= n; ++k) {
    if (acc > order_limit / p) {
      throw CapacityError("group order " + std::to_string(p) + "^" + std::to_string(n + 1) +
                          " exceeds the limit " + std::to_string(order_limit));
    }
    acc *= p;
  }
  order_ = acc;
  modulus_ = order_ / p;
  step_ = modulus_ / p;
}

std::uint64_t GroupParams::power(unsigned k) const {
  if (k > n_) throw ParameterError("exponent " + std::to_string(k) + " exceeds n");
  std::uint64_t acc = 1;
  for (unsigned i = 0; i < k; ++i) acc *= p_;
  return acc;
}

void GroupParams::check(Element e) const {
  if (!contains(e)) {
    throw ParameterError("element " + to_string(e) + " is outside " + fuglede::to_string(*this));
  }
}

Index GroupParams::index(Element e) const {
  check(e);
  return e.x * modulus_ + e.y;
}

Element GroupParams::element(Index i) const {
  if (i >= order_) throw ParameterError("index " + std::to_string(i) + " out of range");
  return {i / modulus_, i % modulus_};
}

Element GroupParams::add(Element u, Element v) const {
  return {(u.x + v.x) % p_, (u.y + v.y) % modulus_};
}

Element GroupParams::sub(Element u, Element v) const {
  return {(u.x + p_ - v.x) % p_, (u.y + modulus_ - v.y) % modulus_};
}

Element GroupParams::neg(Element u) const { return {(p_ - u.x) % p_, (modulus_ - u.y) % modulus_}; }

Element GroupParams::multiply(std::uint64_t r, Element u) const {
  const std::uint64_t rx = r % p_;
  const std::uint64_t ry = r % modulus_;
  return {(rx * u.x) % p_, (ry * u.y) % modulus_};
}

std::vector<std::uint64_t> GroupParams::units() const {
  std::vector<std::uint64_t> out;
  out.reserve(static_cast<std::size_t>(modulus_ - modulus_ / p_));
  for (std::uint64_t a = 1; a < modulus_; ++a) {
    if (a % p_ != 0) out.push_back(a);
  }
  return out;
}

std::string to_string(const GroupParams& params) {
  return "Z_" + std::to_string(params.p()) + " x Z_" + std::to_string(params.p()) + "^" +
         std::to_string(params.n());
}

std::uint64_t inner_product(const GroupParams& params, Element u, Element v) {
  params.check(u);
  params.check(v);
  const std::uint64_t m = params.modulus();
  // u.x v.x < p^2 and p^(n-1) p^2 = p^(n+1) <= 2^32, so this cannot overflow.
  const std::uint64_t first = (params.step() * (u.x * v.x)) % m;
  const std::uint64_t second = (u.y * v.y) % m;
  return (first + second) % m;
}

std::vector<std::uint64_t> digits(std::uint64_t t, std::uint64_t p, unsigned m) {
  std::vector<std::uint64_t> out(m);
  for (unsigned i = 0; i < m; ++i) {
    out[i] = t % p;
    t /= p;
  }
  if (t != 0) throw ParameterError("value does not fit in " + std::to_string(m) + " base-p digits");
  return out;
}

std::uint64_t digit(std::uint64_t t, std::uint64_t p, unsigned k) {
  for (unsigned i = 0; i < k; ++i) t /= p;
  return t % p;
}

std::optional<unsigned> valuation(std::uint64_t t, std::uint64_t p, unsigned m) {
  const auto ds = digits(t, p, m);
  for (unsigned i = 0; i < m; ++i) {
    if (ds[i] != 0) return i;
  }
  return std::nullopt;
}

std::string to_string(const ClassRep& rep) {
  switch (rep.kind) {
    case ClassRep::Kind::Zero:
      return "(0,0)";
    case ClassRep::Kind::UnitAxis:
      return "(1,0)";
    case ClassRep::Kind::Mixed:
      return "(" + std::to_string(rep.c) + ",p^" + std::to_string(rep.level) + ")";
  }
  return "?";
}

std::size_t rep_count(const GroupParams& params) {
  return 1 + static_cast<std::size_t>(params.p()) * params.n();
}

std::size_t rep_slot(const GroupParams& params, const ClassRep& rep) {
  switch (rep.kind) {
    case ClassRep::Kind::UnitAxis:
      return 0;
    case ClassRep::Kind::Mixed:
      if (rep.c >= params.p() || rep.level >= params.n()) {
        throw ParameterError("class representative " + to_string(rep) + " out of range");
      }
      return 1 + static_cast<std::size_t>(rep.level) * params.p() + rep.c;
    case ClassRep::Kind::Zero:
      break;
  }
  throw ParameterError("the zero class has no slot");
}

ClassRep rep_at_slot(const GroupParams& params, std::size_t slot) {
  if (slot == 0) return ClassRep::unit_axis();
  if (slot >= rep_count(params)) throw ParameterError("class slot out of range");
  const std::size_t k = slot - 1;
  return ClassRep::mixed(k % params.p(), static_cast<unsigned>(k / params.p()));
}

Element rep_element(const GroupParams& params, const ClassRep& rep) {
  switch (rep.kind) {
    case ClassRep::Kind::Zero:
      return {0, 0};
    case ClassRep::Kind::UnitAxis:
      return {1, 0};
    case ClassRep::Kind::Mixed:
      return {rep.c, params.power(rep.level)};
  }
  return {0, 0};
}

ClassRep canonical_rep(const GroupParams& params, Element u) {
  params.check(u);
  if (u.y == 0) return u.x == 0 ? ClassRep::zero() : ClassRep::unit_axis();
  const std::uint64_t p = params.p();
  unsigned level = 0;
  std::uint64_t w = u.y;
  while (w % p == 0) {
    w /= p;
    ++level;
  }
  // s y = p^level forces s = w^{-1} mod p^(n-level); only s mod p reaches x.
  const std::uint64_t c = (u.x * inverse_mod(w % p, p)) % p;
  return ClassRep::mixed(c, level);
}

std::vector<Element> class_members(const GroupParams& params, const ClassRep& rep) {
  std::vector<Element> out;
  switch (rep.kind) {
    case ClassRep::Kind::Zero:
      out.push_back({0, 0});
      break;
    case ClassRep::Kind::UnitAxis:
      for (std::uint64_t x = 1; x < params.p(); ++x) out.push_back({x, 0});
      break;
    case ClassRep::Kind::Mixed: {
      const Element base = rep_element(params, rep);
      const std::uint64_t period = params.power(params.n() - rep.level);
      for (std::uint64_t s = 1; s < period; ++s) {
        if (s % params.p() != 0) out.push_back(params.multiply(s, base));
      }
      std::sort(out.begin(), out.end());
      break;
    }
  }
  return out;
}

GroupSet::GroupSet(GroupParams params)
    : params_(params), words_(static_cast<std::size_t>((params.order() + 63) / 64), 0) {}

GroupSet GroupSet::full(const GroupParams& params) {
  GroupSet s(params);
  std::fill(s.words_.begin(), s.words_.end(), ~std::uint64_t{0});
  const std::uint64_t tail = params.order() % 64;
  if (tail != 0) s.words_.back() = (std::uint64_t{1} << tail) - 1;
  return s;
}

GroupSet GroupSet::from_elements(const GroupParams& params, std::span<const Element> elements) {
  GroupSet s(params);
  for (const Element& e : elements) s.insert(e);
  return s;
}

GroupSet GroupSet::from_indices(const GroupParams& params, std::span<const Index> indices) {
  GroupSet s(params);
  for (Index i : indices) {
    if (i >= params.order()) throw ParameterError("index " + std::to_string(i) + " out of range");
    s.insert_index(i);
  }
  return s;
}

bool GroupSet::contains(Element e) const { return contains_index(params_.index(e)); }

void GroupSet::insert(Element e) { insert_index(params_.index(e)); }

void GroupSet::erase(Element e) { erase_index(params_.index(e)); }

std::size_t GroupSet::size() const noexcept {
  std::size_t total = 0;
  for (std::uint64_t w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool GroupSet::empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::vector<Index> GroupSet::indices() const {
  std::vector<Index> out;
  out.reserve(size());
  for_each_index([&](Index i) { out.push_back(i); });
  return out;
}

std::vector<Element> GroupSet::elements() const {
  std::vector<Element> out;
  out.reserve(size());
  for_each_index([&](Index i) { out.push_back(params_.element(i)); });
  return out;
}

std::optional<Index> GroupSet::first() const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) return w * 64 + static_cast<Index>(std::countr_zero(words_[w]));
  }
  return std::nullopt;
}

void GroupSet::require_same_group(const GroupSet& other) const {
  if (!(params_ == other.params_)) {
    throw ParameterError("sets belong to different groups: " + to_string(params_) + " vs " +
                         to_string(other.params_));
  }
}

GroupSet& GroupSet::operator|=(const GroupSet& other) {
  require_same_group(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

GroupSet& GroupSet::operator&=(const GroupSet& other) {
  require_same_group(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

GroupSet& GroupSet::operator-=(const GroupSet& other) {
  require_same_group(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other.words_[w];
  return *this;
}

bool lex_less(const GroupSet& a, const GroupSet& b) {
  a.require_same_group(b);
  for (std::size_t w = 0; w < a.words_.size(); ++w) {
    const std::uint64_t diff = a.words_[w] ^ b.words_[w];
    if (diff != 0) return (a.words_[w] & (diff & (~diff + 1))) != 0;
  }
  return false;
}

GroupSet complement(const GroupSet& set) { return GroupSet::full(set.params()) - set; }

GroupSet translate(const GroupSet& set, Element g) {
  const GroupParams& params = set.params();
  params.check(g);
  GroupSet out(params);
  set.for_each_index([&](Index i) { out.insert_index(params.index(params.add(params.element(i), g))); });
  return out;
}

GroupSet scale_translate(const GroupSet& set, std::uint64_t a, Element g) {
  const GroupParams& params = set.params();
  if (!params.is_unit(a)) {
    throw ParameterError(std::to_string(a) + " is not a unit of Z_" + std::to_string(params.modulus()));
  }
  params.check(g);
  GroupSet out(params);
  set.for_each_index([&](Index i) {
    out.insert_index(params.index(params.add(params.multiply(a, params.element(i)), g)));
  });
  return out;
}

GroupSet difference_set(const GroupSet& set) {
  const GroupParams& params = set.params();
  const std::vector<Element> members = set.elements();
  GroupSet out(params);
  for (const Element& a : members) {
    for (const Element& b : members) out.insert_index(params.index(params.sub(a, b)));
  }
  return out;
}

}  // namespace fuglede
