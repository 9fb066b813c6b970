#include <gtest/gtest.h>

#include <set>

#include "stargenus/stargenus.hpp"
#include "support.hpp"

namespace sg = stargenus;
using sg::PermissiblePartition;
using sg::Side;

TEST(Partitions, CountsAndPermissibility) {
  for (const char* name : {"g8", "gt3c", "ghopf"}) {
    const auto p = sg::build_pipeline(sg::fixtures::by_name(name));
    const auto all = sg::enumerate_permissible_partitions(p.expanded);
    EXPECT_EQ(all.size(), std::size_t{1} << p.expanded.groups.size()) << name;
    for (std::size_t i = 0; i < all.size(); ++i) {
      EXPECT_EQ(sg::partition_index(p.expanded, all[i]), i);
      EXPECT_TRUE(sg::is_permissible(p.expanded, sg::chord_sides(p.expanded, all[i])));
    }
  }
  const auto t3c = sg::build_pipeline(sg::fixtures::gt3c());
  for (const auto& part : sg::enumerate_permissible_partitions(t3c.expanded)) {
    const auto sides = sg::chord_sides(t3c.expanded, part);
    EXPECT_EQ(sides[0], sides[1]);
  }
}

TEST(Partitions, PermissibleSetIsExactlyTheEnumeration) {
  for (const auto& g : sg::testing::random_corpus(60, 6, 17)) {
    const auto p = sg::build_pipeline(g);
    const std::size_t n = p.expanded.chords.size();
    std::set<std::vector<Side>> permissible;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      std::vector<Side> sides(n);
      for (std::size_t i = 0; i < n; ++i) sides[i] = ((mask >> i) & 1U) ? Side::black : Side::white;
      if (sg::is_permissible(p.expanded, sides)) permissible.insert(sides);
    }
    std::set<std::vector<Side>> enumerated;
    for (const auto& part : sg::enumerate_permissible_partitions(p.expanded)) {
      enumerated.insert(sg::chord_sides(p.expanded, part));
    }
    EXPECT_EQ(enumerated, permissible);
  }
}

TEST(GenusOfPartition, Examples) {
  const auto h = sg::build_pipeline(sg::fixtures::ghopf());
  const PermissiblePartition split{{{0, Side::white}, {1, Side::black}}};
  const PermissiblePartition together{{{0, Side::white}, {1, Side::white}}};
  EXPECT_EQ(sg::genus_of_partition(h.matrix, h.expanded, split), (sg::PartitionGenus{0, 0, 0}));
  EXPECT_EQ(sg::genus_of_partition(h.matrix, h.expanded, together), (sg::PartitionGenus{2, 0, 1}));

  const auto t3c = sg::build_pipeline(sg::fixtures::gt3c());
  for (const auto& part : sg::enumerate_permissible_partitions(t3c.expanded)) {
    EXPECT_EQ(sg::genus_of_partition(t3c.matrix, t3c.expanded, part).genus, 1U);
  }
}

TEST(MinGenus, Fixtures) {
  EXPECT_EQ(sg::min_genus(sg::fixtures::g8()).min_genus, 0U);
  EXPECT_EQ(sg::min_genus(sg::fixtures::ghopf()).min_genus, 0U);
  EXPECT_EQ(sg::min_genus(sg::fixtures::gt3f()).min_genus, 0U);
  EXPECT_EQ(sg::min_genus(sg::fixtures::gt3c()).min_genus, 1U);
  EXPECT_EQ(sg::min_genus(sg::fixtures::chain(6)).min_genus, 0U);
  EXPECT_THROW(sg::min_genus(sg::fixtures::gx()), sg::NotSourceSink);
  EXPECT_EQ(sg::min_genus(sg::double_cover(sg::fixtures::gx())).min_genus, 0U);
}

TEST(MinGenus, WitnessAchievesMinimumAndIgnoresThreads) {
  for (const auto& g : sg::testing::random_corpus(80, 9, 23)) {
    const auto p = sg::build_pipeline(g);
    const auto one = sg::min_genus(p, 1);
    const auto many = sg::min_genus(p, 5);
    EXPECT_EQ(one.min_genus, many.min_genus);
    EXPECT_EQ(one.witness, many.witness);
    const auto at = sg::genus_of_partition(p.matrix, p.expanded, one.witness);
    EXPECT_EQ(at.genus, one.min_genus);
    EXPECT_EQ(at.rank_white, one.rank_white);
    EXPECT_EQ(at.rank_black, one.rank_black);
    // least index among minimisers
    for (std::uint64_t i = 0; i < sg::partition_index(p.expanded, one.witness); ++i) {
      EXPECT_GT(sg::genus_of_partition(p.matrix, p.expanded, sg::partition_at(p.expanded, i)).genus, one.min_genus);
    }
  }
}

TEST(Planarity, Examples) {
  const auto h = sg::is_planar(sg::fixtures::ghopf());
  EXPECT_TRUE(h.planar);
  EXPECT_EQ(*h.witness, (PermissiblePartition{{{0, Side::white}, {1, Side::black}}}));
  const auto t3c = sg::is_planar(sg::fixtures::gt3c());
  EXPECT_FALSE(t3c.planar);
  EXPECT_EQ(t3c.conflict, (std::vector<std::size_t>{0, 1}));
  EXPECT_TRUE(sg::is_planar(sg::fixtures::g8()).planar);
  EXPECT_TRUE(sg::is_planar(sg::fixtures::chain(50)).planar);
}

TEST(Planarity, AgreesWithMinGenusAndCertificatesHold) {
  for (const auto& g : sg::testing::random_corpus(200, 8, 31)) {
    const auto p = sg::build_pipeline(g);
    const auto r = sg::is_planar(p.expanded);
    EXPECT_EQ(r.planar, sg::min_genus(p).min_genus == 0);
    if (r.planar) {
      EXPECT_EQ(sg::genus_of_partition(p.matrix, p.expanded, *r.witness).genus, 0U);
      continue;
    }
    // the conflict is a closed walk of constraints with odd total parity
    const auto& d = p.expanded;
    const auto& c = r.conflict;
    ASSERT_GE(c.size(), 2U);
    int parity = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
      const std::size_t x = c[i];
      const std::size_t y = c[(i + 1) % c.size()];
      const bool same_group = d.chords[x].group == d.chords[y].group;
      const auto kind = d.groups[d.chords[x].group].kind;
      if (same_group && kind == sg::AttachmentKind::triad && !sg::linked(d, x, y)) continue;
      ASSERT_TRUE(sg::linked(d, x, y) || same_group);
      parity ^= 1;
    }
    // a linked triad pair also carries a same-side constraint, so it closes any cycle
    bool has_linked_triad = false;
    for (std::size_t i = 0; i < c.size(); ++i) {
      const std::size_t x = c[i];
      const std::size_t y = c[(i + 1) % c.size()];
      has_linked_triad = has_linked_triad || (d.chords[x].group == d.chords[y].group &&
                                              d.groups[d.chords[x].group].kind == sg::AttachmentKind::triad);
    }
    EXPECT_TRUE(parity == 1 || has_linked_triad);
  }
}
