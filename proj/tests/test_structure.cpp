#include <gtest/gtest.h>

#include <random>

#include "fuglede/oracle.hpp"
#include "fuglede/structure.hpp"
#include "support/brute.hpp"

using namespace fuglede;
using brute::make_set;

TEST(ClassifySize, Examples) {
  EXPECT_EQ(classify_size(6, GroupParams(3, 2)), SizeClass(MixedSize{2, 1}));
  EXPECT_EQ(classify_size(8, GroupParams(2, 2)), SizeClass(Trivial{}));
  EXPECT_EQ(classify_size(1, GroupParams(2, 2)), SizeClass(Trivial{}));
  EXPECT_EQ(classify_size(9, GroupParams(3, 2)), SizeClass(PurePower{2}));
  EXPECT_EQ(classify_size(2, GroupParams(3, 2)), SizeClass(MixedSize{2, 0}));
  EXPECT_EQ(classify_size(7, GroupParams(5, 1)), SizeClass(OtherSize{}));
  EXPECT_EQ(classify_size(20, GroupParams(5, 1)), SizeClass(MixedSize{4, 1}));
  EXPECT_EQ(to_string(classify_size(6, GroupParams(3, 2))), "MixedSize(m=2, s=1)");
  EXPECT_THROW(classify_size(0, GroupParams(3, 2)), ParameterError);
  EXPECT_THROW(classify_size(28, GroupParams(3, 2)), ParameterError);
}

TEST(ClassifySize, FactorisationIsFaithful) {
  for (auto [p, n] : {std::pair{2ull, 4u}, {3ull, 2u}, {5ull, 2u}, {7ull, 1u}}) {
    const GroupParams g(p, n);
    for (std::uint64_t k = 1; k <= g.order(); ++k) {
      const SizeClass c = classify_size(k, g);
      if (k == 1 || k == g.order()) {
        EXPECT_TRUE(std::holds_alternative<Trivial>(c));
      } else if (const auto* pp = std::get_if<PurePower>(&c)) {
        EXPECT_EQ(g.power(pp->s), k);
        EXPECT_GE(pp->s, 1u);
        EXPECT_LE(pp->s, n);
      } else if (const auto* ms = std::get_if<MixedSize>(&c)) {
        EXPECT_EQ(ms->m * g.power(ms->s), k);
        EXPECT_GE(ms->m, 2u);
        EXPECT_LE(ms->m, p - 1);
      } else {
        std::uint64_t m = k;
        while (m % p == 0) m /= p;
        EXPECT_GT(m, p);
      }
    }
  }
}

TEST(Divisibility, Examples) {
  const GroupParams g(2, 2);
  const ZeroProfile full = zero_set(GroupSet::full(g));
  EXPECT_TRUE(full.contains(ClassRep::mixed(1, 0)));
  EXPECT_TRUE(full.contains(ClassRep::mixed(0, 1)));
  EXPECT_EQ(divisibility_exponent(full), 2u);
  const ZeroProfile square = zero_set(make_set(g, {{0, 0}, {0, 1}, {1, 0}, {1, 1}}));
  EXPECT_TRUE(square.contains(ClassRep::mixed(1, 0)));
  EXPECT_EQ(divisibility_exponent(square), 2u);
  EXPECT_EQ(divisibility_exponent(ZeroProfile(g)), 0u);
  // A lone zero at level 0 with no axis zeros above it.
  ZeroProfile lone(GroupParams(3, 3));
  lone.insert(ClassRep::mixed(2, 0));
  lone.insert(ClassRep::mixed(1, 2));
  EXPECT_EQ(divisibility_exponent(lone), 1u);
  lone.insert(ClassRep::mixed(0, 2));
  EXPECT_EQ(divisibility_exponent(lone), 2u);
  lone.insert(ClassRep::mixed(0, 1));
  EXPECT_EQ(divisibility_exponent(lone), 3u);
}

TEST(Divisibility, HoldsForEverySubsetOfSmallGroups) {
  for (auto [p, n] : {std::pair{2ull, 2u}, {3ull, 1u}, {2ull, 3u}}) {
    const GroupParams g(p, n);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << g.order()); ++mask) {
      const GroupSet a = brute::from_mask(g, mask);
      const unsigned s = divisibility_exponent(zero_set(a));
      ASSERT_EQ(a.size() % g.power(s), 0u) << mask;
    }
  }
}

TEST(Divisibility, HoldsForRandomSubsetsUpToOrder65536) {
  std::mt19937_64 rng(77);
  for (auto [p, n] : {std::pair{3ull, 3u}, {2ull, 7u}, {5ull, 3u}, {2ull, 15u}, {3ull, 9u}}) {
    const GroupParams g(p, n);
    const int trials = g.order() > 4096 ? 20 : 300;
    for (int trial = 0; trial < trials; ++trial) {
      // Mix plain random sets with unions of cosets, which carry many zeros.
      GroupSet a = brute::random_set(g, rng, 0.3);
      if (trial % 2 == 1) {
        GroupSet coset(g);
        const unsigned level = static_cast<unsigned>(rng() % n);
        for (std::uint64_t y = 0; y < g.modulus(); y += g.power(level)) coset.insert({0, y});
        a = GroupSet(g);
        for (int c = 0; c < 1 + static_cast<int>(rng() % 3); ++c) a |= translate(coset, g.element(rng() % g.order()));
      }
      if (a.empty()) continue;
      const unsigned s = divisibility_exponent(zero_set(a));
      EXPECT_EQ(a.size() % g.power(s), 0u);
    }
  }
}

TEST(DeleteDigit, Arithmetic) {
  EXPECT_EQ(delete_digit(2, 2, 0), 1u);      // 10b -> 1b
  EXPECT_EQ(delete_digit(5, 2, 1), 3u);      // 101b -> 11b
  EXPECT_EQ(delete_digit(17, 3, 2), 8u);     // 122 (base 3) -> 22
  EXPECT_EQ(delete_digit(17, 3, 0), 5u);     // 122 -> 12
}

TEST(Projection, Examples) {
  const GroupParams g(2, 2);
  const GroupParams small(2, 1);
  EXPECT_EQ(project_delete_digit(make_set(g, {{0, 0}, {0, 2}}), 0, DigitMap::DeleteLevel),
            make_set(small, {{0, 0}, {0, 1}}));
  EXPECT_EQ(project_delete_digit(make_set(g, {{0, 0}, {0, 1}}), 0, DigitMap::DeleteMirrorLevel),
            make_set(small, {{0, 0}, {0, 1}}));
  // phi_1 with r = n - 1 truncates the top digit.
  const GroupParams g33(3, 3);
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    const GroupSet a = brute::random_set(g33, rng, 0.2);
    GroupSet truncated(GroupParams(3, 2));
    for (const Element& e : a.elements()) truncated.insert({e.x, e.y % 9});
    EXPECT_EQ(project_delete_digit(a, 2, DigitMap::DeleteLevel), truncated);
    EXPECT_EQ(project_delete_digit(a, 0, DigitMap::DeleteMirrorLevel), truncated);
  }
  EXPECT_THROW(project_delete_digit(make_set(GroupParams(3, 1), {{0, 0}}), 0, DigitMap::DeleteLevel),
               ParameterError);
  EXPECT_THROW(project_delete_digit(make_set(g, {{0, 0}}), 2, DigitMap::DeleteLevel), ParameterError);
}

// For spectral pairs (A, B) of Z_2 x Z_8 and levels r with n-1-r outside I
// and r outside J, deleting digit r from A and digit n-1-r from B leaves a
// spectral pair of Z_2 x Z_4 of the same size.
TEST(Projection, SpectralPairsProjectToSpectralPairs) {
  const GroupParams g(2, 3);
  const unsigned n = g.n();
  std::size_t pairs = 0;
  std::size_t projected = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << g.order()); ++mask) {
    const GroupSet a = brute::from_mask(g, mask);
    if (a.size() < 2 || a.size() == g.order() || !a.contains_index(0)) continue;
    const auto b = find_spectrum_bruteforce(a);
    if (!b) continue;
    ++pairs;
    const std::vector<unsigned> levels_a = zero_set(a).levels();
    const std::vector<unsigned> levels_b = zero_set(*b).levels();
    for (unsigned r = 0; r < n; ++r) {
      const bool a_free = std::find(levels_a.begin(), levels_a.end(), n - 1 - r) == levels_a.end();
      const bool b_free = std::find(levels_b.begin(), levels_b.end(), r) == levels_b.end();
      if (!a_free || !b_free) continue;
      const GroupSet a2 = project_delete_digit(a, r, DigitMap::DeleteLevel);
      const GroupSet b2 = project_delete_digit(*b, r, DigitMap::DeleteMirrorLevel);
      ++projected;
      EXPECT_EQ(a2.size(), a.size()) << mask << " r=" << r;
      EXPECT_EQ(b2.size(), b->size()) << mask << " r=" << r;
      EXPECT_TRUE(verify_spectral_pair(a2, b2)) << mask << " r=" << r;
      EXPECT_TRUE(brute::spectral_pair(a2, b2)) << mask << " r=" << r;
    }
  }
  EXPECT_GT(pairs, 0u);
  EXPECT_GT(projected, 0u);
}
