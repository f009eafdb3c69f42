#include "fuglede/structure.hpp"

namespace fuglede {

std::string to_string(const SizeClass& size_class) {
  struct Visitor {
    std::string operator()(const Trivial&) const { return "Trivial"; }
    std::string operator()(const PurePower& v) const { return "PurePower(s=" + std::to_string(v.s) + ")"; }
    std::string operator()(const MixedSize& v) const {
      return "MixedSize(m=" + std::to_string(v.m) + ", s=" + std::to_string(v.s) + ")";
    }
    std::string operator()(const OtherSize&) const { return "OtherSize"; }
  };
  return std::visit(Visitor{}, size_class);
}

SizeClass classify_size(std::uint64_t cardinality, const GroupParams& params) {
  if (cardinality < 1 || cardinality > params.order()) {
    throw ParameterError("cardinality " + std::to_string(cardinality) + " outside [1, " +
                         std::to_string(params.order()) + "]");
  }
  if (cardinality == 1 || cardinality == params.order()) return Trivial{};
  std::uint64_t m = cardinality;
  unsigned s = 0;
  while (m % params.p() == 0) {
    m /= params.p();
    ++s;
  }
  if (m == 1) return PurePower{s};
  if (m < params.p()) return MixedSize{m, s};
  return OtherSize{};
}

unsigned divisibility_exponent(const ZeroProfile& profile) {
  return divisibility_exponent(profile.params(), [&](const ClassRep& rep) { return profile.contains(rep); });
}

std::uint64_t delete_digit(std::uint64_t y, std::uint64_t p, unsigned k) {
  std::uint64_t low_mod = 1;
  for (unsigned i = 0; i < k; ++i) low_mod *= p;
  return y % low_mod + (y / (low_mod * p)) * low_mod;
}

GroupSet project_delete_digit(const GroupSet& set, unsigned r, DigitMap map) {
  const GroupParams& params = set.params();
  if (params.n() < 2) throw ParameterError("digit deletion needs n >= 2");
  if (r >= params.n()) throw ParameterError("level " + std::to_string(r) + " out of range");
  const unsigned k = map == DigitMap::DeleteLevel ? r : params.n() - 1 - r;
  const GroupParams smaller(params.p(), params.n() - 1);
  GroupSet out(smaller);
  for (const Element& e : set.elements()) out.insert({e.x, delete_digit(e.y, params.p(), k)});
  return out;
}

}  // namespace fuglede
