#include <gtest/gtest.h>

#include <map>
#include <set>

#include "fuglede/enumerate.hpp"
#include "fuglede/errors.hpp"
#include "support/brute.hpp"

using namespace fuglede;

namespace {

// Orbits of e -> u e + g, found by flooding every subset.
struct OrbitCount {
  std::uint64_t orbits = 0;
  std::uint64_t tile_orbits = 0;
  std::map<std::uint64_t, std::uint64_t> by_size;
};

std::uint64_t mask_of(const GroupSet& s) {
  std::uint64_t m = 0;
  for (const Element& e : s.elements()) m |= std::uint64_t{1} << s.params().index(e);
  return m;
}

OrbitCount count_orbits(const GroupParams& g) {
  OrbitCount out;
  const std::uint64_t total = std::uint64_t{1} << g.order();
  std::vector<bool> seen(total, false);
  const std::vector<Element> all = brute::all_elements(g);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    if (seen[mask]) continue;
    const GroupSet a = brute::from_mask(g, mask);
    for (std::uint64_t u : g.units()) {
      for (const Element& shift : all) {
        GroupSet image(g);
        for (const Element& e : a.elements()) image.insert(g.add(g.multiply(u, e), shift));
        seen[mask_of(image)] = true;
      }
    }
    ++out.orbits;
    ++out.by_size[a.size()];
    if (!a.empty() && brute::is_tile(a)) ++out.tile_orbits;
  }
  return out;
}

}  // namespace

TEST(Enumerate, SmallestGroupCounts) {
  const EnumerationReport r = enumerate_and_check(GroupParams(2, 1));
  EXPECT_EQ(r.subsets_examined, 16u);
  // Tiles of Z_2 x Z_2: sizes 1, 2 and 4 all tile; no set of size 3 does.
  EXPECT_EQ(r.tiles, 4u + 6u + 1u);
  EXPECT_EQ(r.spectral, 11u);
  EXPECT_TRUE(r.clean());
  ASSERT_EQ(r.by_size.size(), 5u);
  EXPECT_EQ(r.by_size[3], (SizeTally{3, 4, 0, 0}));
  EXPECT_EQ(r.by_size[0], (SizeTally{0, 1, 0, 0}));
  EXPECT_FALSE(r.orbits_examined.has_value());
}

TEST(Enumerate, CountsMatchBruteForce) {
  for (auto [p, n] : {std::pair{2ull, 2u}, {3ull, 1u}}) {
    const GroupParams g(p, n);
    const EnumerationReport r = enumerate_and_check(g);
    std::uint64_t tiles = 0;
    std::uint64_t spectral = 0;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << g.order()); ++mask) {
      const GroupSet a = brute::from_mask(g, mask);
      tiles += brute::is_tile(a);
      spectral += brute::has_spectrum(a);
    }
    EXPECT_EQ(r.tiles, tiles);
    EXPECT_EQ(r.spectral, spectral);
    EXPECT_TRUE(r.clean()) << format_report(r);
  }
}

TEST(Enumerate, SizeFilter) {
  EnumerationOptions options;
  options.sizes = std::vector<std::uint64_t>{6};
  const EnumerationReport r = enumerate_and_check(GroupParams(3, 2), options);
  EXPECT_EQ(r.subsets_examined, 296010u);  // C(27, 6)
  EXPECT_EQ(r.spectral, 0u);
  EXPECT_EQ(r.tiles, 0u);
  EXPECT_TRUE(r.clean());
  ASSERT_EQ(r.size_filter, options.sizes);
}

TEST(Enumerate, CanonicalModeCountsOrbits) {
  for (auto [p, n] : {std::pair{2ull, 2u}, {3ull, 1u}, {2ull, 3u}}) {
    const GroupParams g(p, n);
    EnumerationOptions options;
    options.canonical = true;
    const EnumerationReport r = enumerate_and_check(g, options);
    OrbitCount expected = count_orbits(g);
    EXPECT_EQ(r.subsets_examined, expected.orbits);
    EXPECT_EQ(r.orbits_examined, expected.orbits);
    EXPECT_EQ(r.tiles, expected.tile_orbits);
    EXPECT_EQ(r.tiles, r.spectral);
    for (const SizeTally& t : r.by_size) EXPECT_EQ(t.subsets, expected.by_size[t.size]);
    EXPECT_TRUE(r.clean());
  }
}

TEST(Enumerate, ReportIndependentOfShardsAndThreads) {
  const GroupParams g(2, 3);
  const std::string text = format_report(enumerate_and_check(g));
  const std::string json = format_report_json(enumerate_and_check(g));
  for (std::uint64_t shards : {4ull, 16ull, 1000ull}) {
    for (unsigned threads : {1u, 3u}) {
      EnumerationOptions options;
      options.shards = shards;
      options.threads = threads;
      const EnumerationReport r = enumerate_and_check(g, options);
      EXPECT_EQ(format_report(r), text) << shards << " " << threads;
      EXPECT_EQ(format_report_json(r), json);
    }
  }
}

TEST(Enumerate, Limits) {
  EXPECT_THROW(enumerate_and_check(GroupParams(3, 3)), CapacityError);
  EXPECT_THROW(enumerate_and_check(GroupParams(2, 4)), CapacityError);
  EnumerationOptions filtered;
  filtered.sizes = std::vector<std::uint64_t>{1};
  EXPECT_THROW(enumerate_and_check(GroupParams(3, 3), filtered), CapacityError);
  filtered.sizes = std::vector<std::uint64_t>{40};
  EXPECT_THROW(enumerate_and_check(GroupParams(2, 1), filtered), ParameterError);
  EnumerationOptions shards;
  shards.shards = 0;
  EXPECT_THROW(enumerate_and_check(GroupParams(2, 1), shards), ParameterError);
  shards.shards = kMaxShards + 1;
  EXPECT_THROW(enumerate_and_check(GroupParams(2, 1), shards), ParameterError);
}

TEST(Enumerate, ListsAreCappedCountsAreNot) {
  // Z_2 x Z_4 has 75 spectral sets; with max_listed = 0 nothing is listed
  // but the report is still clean and counted in full.
  EnumerationOptions options;
  options.max_listed = 0;
  const EnumerationReport r = enumerate_and_check(GroupParams(2, 2), options);
  EXPECT_EQ(r.spectral, 75u);
  EXPECT_TRUE(r.mismatches.empty());
}

TEST(Enumerate, ReportFormat) {
  const EnumerationReport r = enumerate_and_check(GroupParams(2, 1));
  const std::string text = format_report(r);
  EXPECT_NE(text.find("params: p=2 n=1 order=4\n"), std::string::npos) << text;
  EXPECT_NE(text.find("tiles: 11\n"), std::string::npos);
  EXPECT_NE(text.find("mismatches: 0\n"), std::string::npos);
  EXPECT_EQ(text.find("wall_time"), std::string::npos);
  EXPECT_NE(format_report(r, true).find("wall_time: "), std::string::npos);
  EXPECT_NE(format_report_json(r).find("\"spectral\": 11"), std::string::npos);
}
