#include <gtest/gtest.h>

#include <random>
#include <set>

#include "fuglede/group.hpp"
#include "support/brute.hpp"

using namespace fuglede;
using brute::make_set;

TEST(GroupParams, RejectsBadParameters) {
  EXPECT_THROW(GroupParams(4, 1), ParameterError);
  EXPECT_THROW(GroupParams(1, 1), ParameterError);
  EXPECT_THROW(GroupParams(0, 2), ParameterError);
  EXPECT_THROW(GroupParams(3, 0), ParameterError);
  EXPECT_THROW(GroupParams(2, 32), CapacityError);  // 2^33 elements
  EXPECT_NO_THROW(GroupParams(2, 31));
  EXPECT_THROW(GroupParams(3, 3, 80), CapacityError);
}

TEST(GroupParams, Sizes) {
  const GroupParams g(3, 2);
  EXPECT_EQ(g.modulus(), 9u);
  EXPECT_EQ(g.step(), 3u);
  EXPECT_EQ(g.order(), 27u);
  EXPECT_EQ(g.power(0), 1u);
  EXPECT_EQ(g.power(2), 9u);
  EXPECT_EQ(to_string(g), "Z_3 x Z_3^2");
}

TEST(GroupParams, PrimalityIsExact) {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t v = 0; v < 60; ++v) {
    if (is_prime(v)) primes.push_back(v);
  }
  EXPECT_EQ(primes, (std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59}));
  EXPECT_TRUE(is_prime(4294967291u));
  EXPECT_FALSE(is_prime(4294967297u));  // 641 * 6700417
}

TEST(GroupParams, IndexRoundTrip) {
  for (auto [p, n] : {std::pair{2u, 1u}, {2u, 3u}, {3u, 2u}, {5u, 1u}}) {
    const GroupParams g(p, n);
    for (Index i = 0; i < g.order(); ++i) {
      const Element e = g.element(i);
      EXPECT_TRUE(g.contains(e));
      EXPECT_EQ(g.index(e), i);
      EXPECT_EQ(e.x * g.modulus() + e.y, i);
    }
  }
  const GroupParams g(2, 2);
  EXPECT_THROW(g.index({2, 0}), ParameterError);
  EXPECT_THROW(g.index({0, 4}), ParameterError);
  EXPECT_THROW(g.element(8), ParameterError);
}

TEST(InnerProduct, Examples) {
  const GroupParams g32(3, 2);
  EXPECT_EQ(inner_product(g32, {2, 4}, {1, 7}), 7u);
  const GroupParams g22(2, 2);
  EXPECT_EQ(inner_product(g22, {0, 1}, {0, 2}), 2u);
  for (const Element& v : brute::all_elements(g32)) EXPECT_EQ(inner_product(g32, {0, 0}, v), 0u);
  EXPECT_THROW(inner_product(g22, {2, 0}, {0, 1}), ParameterError);
}

TEST(InnerProduct, SymmetricAndMatchesFormula) {
  const GroupParams g(3, 2);
  for (const Element& u : brute::all_elements(g)) {
    for (const Element& v : brute::all_elements(g)) {
      EXPECT_EQ(inner_product(g, u, v), inner_product(g, v, u));
      EXPECT_EQ(inner_product(g, u, v), brute::pairing(g, u, v));
    }
  }
}

TEST(Digits, Examples) {
  EXPECT_EQ(digits(18, 3, 3), (std::vector<std::uint64_t>{0, 0, 2}));
  EXPECT_EQ(digits(0, 5, 4), (std::vector<std::uint64_t>{0, 0, 0, 0}));
  EXPECT_EQ(digits(5, 2, 3), (std::vector<std::uint64_t>{1, 0, 1}));
  EXPECT_THROW(digits(8, 2, 3), ParameterError);
  EXPECT_EQ(digit(18, 3, 2), 2u);
  EXPECT_EQ(digit(18, 3, 0), 0u);
}

TEST(Digits, ReassembleToValue) {
  for (std::uint64_t t = 0; t < 243; ++t) {
    const auto d = digits(t, 3, 5);
    std::uint64_t back = 0;
    for (std::size_t i = d.size(); i-- > 0;) back = back * 3 + d[i];
    EXPECT_EQ(back, t);
  }
}

TEST(Valuation, Examples) {
  EXPECT_EQ(valuation(4, 2, 3), 2u);
  EXPECT_EQ(valuation(0, 2, 3), std::nullopt);
  EXPECT_EQ(valuation(6, 3, 2), 1u);
  EXPECT_THROW(valuation(9, 3, 2), ParameterError);
}

TEST(CanonicalRep, Examples) {
  const GroupParams g(2, 2);
  EXPECT_EQ(canonical_rep(g, {1, 3}), ClassRep::mixed(1, 0));
  EXPECT_EQ(canonical_rep(g, {1, 2}), ClassRep::mixed(1, 1));
  EXPECT_EQ(canonical_rep(g, {1, 0}), ClassRep::unit_axis());
  EXPECT_EQ(canonical_rep(g, {0, 0}), ClassRep::zero());
  const GroupParams g52(5, 2);
  EXPECT_EQ(canonical_rep(g52, {1, 0}), ClassRep::unit_axis());
  EXPECT_EQ(canonical_rep(g52, {3, 0}), ClassRep::unit_axis());
}

TEST(CanonicalRep, ReportOrderSlots) {
  const GroupParams g(3, 2);
  ASSERT_EQ(rep_count(g), 7u);
  EXPECT_EQ(rep_at_slot(g, 0), ClassRep::unit_axis());
  EXPECT_EQ(rep_at_slot(g, 1), ClassRep::mixed(0, 0));
  EXPECT_EQ(rep_at_slot(g, 3), ClassRep::mixed(2, 0));
  EXPECT_EQ(rep_at_slot(g, 4), ClassRep::mixed(0, 1));
  for (std::size_t s = 0; s < rep_count(g); ++s) EXPECT_EQ(rep_slot(g, rep_at_slot(g, s)), s);
  EXPECT_EQ(to_string(ClassRep::mixed(2, 1)), "(2,p^1)");
  EXPECT_EQ(to_string(ClassRep::unit_axis()), "(1,0)");
}

// The orbit of a unit-scaling class under s.(x, y) = (s x, s y), computed
// straight from the definition.
std::set<Index> orbit(const GroupParams& g, Element u) {
  std::set<Index> out;
  for (std::uint64_t s = 1; s < g.modulus(); ++s) {
    if (s % g.p() == 0) continue;
    out.insert(g.index({(s * u.x) % g.p(), (s * u.y) % g.modulus()}));
  }
  return out;
}

class ClassPartition : public ::testing::TestWithParam<std::pair<std::uint64_t, unsigned>> {};

TEST_P(ClassPartition, RepsPartitionNonzeroElements) {
  const GroupParams g(GetParam().first, GetParam().second);
  std::vector<int> seen(g.order(), 0);
  for (std::size_t s = 0; s < rep_count(g); ++s) {
    const ClassRep rep = rep_at_slot(g, s);
    const Element r = rep_element(g, rep);
    const std::vector<Element> members = class_members(g, rep);
    std::set<Index> from_members;
    for (const Element& e : members) from_members.insert(g.index(e));
    EXPECT_EQ(from_members, orbit(g, r));
    const std::uint64_t expected =
        rep.kind == ClassRep::Kind::UnitAxis ? g.p() - 1 : g.power(g.n() - rep.level - 1) * (g.p() - 1);
    EXPECT_EQ(members.size(), expected) << to_string(rep);
    for (const Element& e : members) {
      ++seen[g.index(e)];
      EXPECT_EQ(canonical_rep(g, e), rep);
    }
  }
  EXPECT_EQ(seen[0], 0);
  for (Index i = 1; i < g.order(); ++i) EXPECT_EQ(seen[i], 1) << to_string(g.element(i));
}

TEST_P(ClassPartition, CanonicalRepConstantOnOrbits) {
  const GroupParams g(GetParam().first, GetParam().second);
  for (Index i = 1; i < g.order(); ++i) {
    const Element u = g.element(i);
    for (std::uint64_t s : g.units()) EXPECT_EQ(canonical_rep(g, g.multiply(s, u)), canonical_rep(g, u));
  }
}

INSTANTIATE_TEST_SUITE_P(Groups, ClassPartition,
                         ::testing::Values(std::pair{2ull, 1u}, std::pair{2ull, 3u}, std::pair{3ull, 1u},
                                           std::pair{3ull, 2u}, std::pair{5ull, 2u}, std::pair{7ull, 1u},
                                           std::pair{2ull, 5u}));

TEST(GroupSet, BasicOperations) {
  const GroupParams g(2, 2);
  GroupSet a = make_set(g, {{0, 0}, {1, 3}});
  EXPECT_EQ(a.size(), 2u);
  EXPECT_TRUE(a.contains({1, 3}));
  EXPECT_FALSE(a.contains({1, 2}));
  a.insert({1, 2});
  a.erase({0, 0});
  EXPECT_EQ(a.elements(), (std::vector<Element>{{1, 2}, {1, 3}}));
  EXPECT_EQ(a.first(), 6u);
  EXPECT_EQ(complement(a).size(), 6u);
  EXPECT_EQ(GroupSet::full(g).size(), 8u);
  EXPECT_TRUE(GroupSet(g).empty());
  EXPECT_THROW(a.insert({2, 0}), ParameterError);
  EXPECT_THROW(a |= GroupSet(GroupParams(2, 1)), ParameterError);
}

TEST(GroupSet, LexOrder) {
  const GroupParams g(2, 2);
  // The set holding the lowest index where they differ is smaller.
  EXPECT_TRUE(lex_less(make_set(g, {{0, 0}, {1, 3}}), make_set(g, {{0, 1}})));
  EXPECT_TRUE(lex_less(make_set(g, {{0, 1}, {0, 2}}), make_set(g, {{0, 1}})));
  EXPECT_FALSE(lex_less(make_set(g, {{0, 1}}), make_set(g, {{0, 1}})));
}

TEST(ScaleTranslate, Examples) {
  const GroupParams g(2, 2);
  const GroupSet a = make_set(g, {{0, 0}, {0, 1}});
  EXPECT_EQ(scale_translate(a, 1, {0, 0}), a);
  EXPECT_EQ(scale_translate(a, 3, {0, 0}), make_set(g, {{0, 0}, {0, 3}}));
  EXPECT_EQ(scale_translate(a, 1, {1, 2}), make_set(g, {{1, 2}, {1, 3}}));
  EXPECT_THROW(scale_translate(a, 2, {0, 0}), ParameterError);
}

TEST(ScaleTranslate, Composes) {
  const GroupParams g(3, 2);
  std::mt19937_64 rng(11);
  const std::vector<std::uint64_t> units = g.units();
  for (int trial = 0; trial < 200; ++trial) {
    const GroupSet a = brute::random_set(g, rng);
    const std::uint64_t s1 = units[rng() % units.size()];
    const std::uint64_t s2 = units[rng() % units.size()];
    const Element g1 = g.element(rng() % g.order());
    const Element g2 = g.element(rng() % g.order());
    const GroupSet lhs = scale_translate(scale_translate(a, s1, g1), s2, g2);
    const GroupSet rhs = scale_translate(a, (s1 * s2) % g.modulus(), g.add(g.multiply(s2, g1), g2));
    EXPECT_EQ(lhs, rhs);
    EXPECT_EQ(lhs.size(), a.size());
  }
}

TEST(DifferenceSet, Examples) {
  const GroupParams g(2, 2);
  EXPECT_EQ(difference_set(make_set(g, {{1, 1}})), make_set(g, {{0, 0}}));
  EXPECT_EQ(difference_set(make_set(g, {{0, 0}, {0, 1}})), make_set(g, {{0, 0}, {0, 1}, {0, 3}}));
  EXPECT_EQ(difference_set(GroupSet::full(g)), GroupSet::full(g));
  EXPECT_TRUE(difference_set(GroupSet(g)).empty());
}

TEST(DifferenceSet, BoundAndTranslationInvariance) {
  const GroupParams g(5, 1);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const GroupSet a = brute::random_set(g, rng, 0.2);
    const GroupSet d = difference_set(a);
    const std::size_t k = a.size();
    if (k > 0) {
      EXPECT_TRUE(d.contains({0, 0}));
      EXPECT_LE(d.size(), k * k - k + 1);
    }
    EXPECT_EQ(difference_set(translate(a, g.element(rng() % g.order()))), d);
  }
}
