#include <algorithm>
#include <numbers>
#include <set>

#include <gtest/gtest.h>

#include "ellip/registry.hpp"

namespace ellip::verify {
namespace {

const std::vector<InequalityRecord>& records() {
  static const auto r = register_builtin();
  return r;
}

const InequalityRecord& rec(std::string_view id) {
  const auto* r = find_record(records(), id);
  EXPECT_NE(r, nullptr) << id;
  return *r;
}

TEST(Registry, CoversEveryFamily) {
  EXPECT_GE(records().size(), 14u);
  for (const char* id : {"thm1_E", "thm2_F", "thm3_E", "thm4_F", "eq9_F", "eq10", "eq11_F", "eq11_reversed",
                         "eq12_PiE", "eq12_reversed", "eq13", "eq14", "eq15", "eq16", "amm", "amm_b1", "amm_b2",
                         "amm_b3", "amm_upper", "ellip_ellipse", "pointwise_81", "pointwise_37_75"})
    EXPECT_NE(find_record(records(), id), nullptr) << id;
}

TEST(Registry, IdsAreUniqueAndRecordsWellFormed) {
  std::set<std::string> ids;
  for (const auto& r : records()) {
    EXPECT_TRUE(ids.insert(r.id).second) << r.id;
    EXPECT_TRUE(r.has_lower() || r.has_upper()) << r.id;
    EXPECT_TRUE(static_cast<bool>(r.middle)) << r.id;
    EXPECT_FALSE(r.statement.empty()) << r.id;
    EXPECT_EQ(r.default_grid.axes.size(), r.params.size()) << r.id;
  }
}

TEST(Registry, ObserveModeRecords) {
  EXPECT_EQ(rec("eq10").mode, Mode::Observe);
  EXPECT_EQ(rec("eq15").mode, Mode::Observe);
  EXPECT_EQ(rec("thm3_E").mode, Mode::Observe);
  EXPECT_EQ(rec("thm4_F").mode, Mode::Observe);
  EXPECT_EQ(rec("thm1_E").mode, Mode::Enforce);
}

TEST(Registry, Guards) {
  const real bad[] = {0.9L};
  EXPECT_FALSE(rec("eq13").guard(Args(bad)));
  const real reversed[] = {0.8L, 0.2L};
  EXPECT_TRUE(rec("eq11_reversed").guard(Args(reversed)));
  EXPECT_FALSE(rec("eq11_F").guard(Args(reversed)));
  const real swapped[] = {2, 1};
  EXPECT_FALSE(rec("thm2_F").guard(Args(swapped)));
  EXPECT_FALSE(rec("ellip_ellipse").guard(Args(swapped)));
  EXPECT_TRUE(rec("ellip_classical").guard(Args(swapped)));
}

TEST(Registry, EvaluatorsAtKnownPoints) {
  const real half[] = {0.5L};
  const constexpr real pi = std::numbers::pi_v<real>;
  EXPECT_NEAR(static_cast<double>(rec("eq9_F").lower(Args(half))), std::numbers::pi * std::numbers::pi / 6, 1e-17);
  EXPECT_NEAR(static_cast<double>(rec("thm3_E").middle(Args(half)) * pi / 2), 1.46746220933942715546, 1e-17);
  const real none[] = {0};
  EXPECT_NEAR(static_cast<double>(rec("eq14").middle(Args(none, 0))), 1.85407467730137191843, 1e-16);
}

TEST(Registry, ReversalGuardsPartitionTheirGrid) {
  for (const char* pair : {"eq11", "eq12"}) {
    const auto& fwd = rec(std::string(pair) == "eq11" ? "eq11_F" : "eq12_PiE");
    const auto& rev = rec(std::string(pair) + "_reversed");
    const auto& grid = fwd.default_grid;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const auto p = grid.at(i);
      EXPECT_FALSE(fwd.guard(Args(p)) && rev.guard(Args(p)));
    }
  }
}

TEST(Registry, AmmLowerBoundOrdering) {
  const real none[] = {0};
  const Args args(none, 0);
  const real b1 = rec("amm_b1").lower(args);
  EXPECT_GT(b1, rec("amm_b2").lower(args));
  EXPECT_GT(b1, rec("amm_b3").lower(args));
  EXPECT_LT(rec("amm_upper").upper(args), rec("amm").upper(args));
}

}  // namespace
}  // namespace ellip::verify
