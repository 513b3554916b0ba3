// Copyright 2026 The mcdm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include "mcdm/reference.hpp"
#include "printed_tables.hpp"

namespace mcdm {
namespace {

using testing::table71_problem;

TEST(Ideals, RawDomainHonoursDirections) {
  const auto ideals = ideal_solutions(table71_problem());
  EXPECT_EQ(ideals.positive.values, (std::vector<double>{0.948, 1.08, 849}));
  EXPECT_EQ(ideals.negative.values, (std::vector<double>{0.185, 8.88, 174}));
  EXPECT_EQ(ideals.positive.kind, ReferenceKind::PositiveIdeal);
}

TEST(Ideals, AfterMaxMinEverythingIsBenefit) {
  const auto ideals = ideal_solutions(maxmin_normalize(table71_problem()));
  EXPECT_EQ(ideals.positive.values, (std::vector<double>{1, 1, 1}));
  EXPECT_EQ(ideals.negative.values, (std::vector<double>{0, 0, 0}));
}

TEST(Average, RawAndWeighted) {
  const auto p = table71_problem();
  const auto raw = average_solution_raw(p);
  EXPECT_NEAR(raw.values[0], (0.185 + 0.317 + 0.555 + 0.731 + 0.948) / 5, 1e-15);
  const auto v = apply_weights(vector_normalize(p), p.criteria);
  EXPECT_NEAR(average_solution_weighted(v).values[1], 0.1551, 5e-5);
  EXPECT_THROW(average_solution_weighted(vector_normalize(p)), std::logic_error);
}

TEST(Border, GeometricMeanOfMabacMatrix) {
  const auto p = table71_problem();
  const auto border = border_approximation(mabac_weighting(maxmin_normalize(p), p.criteria));
  EXPECT_NEAR(border.values[0], 0.3575, 5e-5);
  EXPECT_NEAR(border.values[1], 0.5675, 5e-5);
  EXPECT_NEAR(border.values[2], 0.4839, 5e-5);
}

TEST(Tiers, OrderStatisticsWithMultiplicity) {
  const Matrix raw = Matrix::from_rows({{1.0, 5.0}, {3.0, 5.0}, {2.0, 4.0}});
  const Direction d[] = {Direction::Maximize, Direction::Minimize};
  const auto tiers = tiered_ideals(apply_weights(vector_normalize(raw, d), std::vector<double>{0.5, 0.5}));
  ASSERT_EQ(tiers.size(), 3u);
  EXPECT_EQ(tiers[0].tier, 1u);
  EXPECT_GT(tiers[0].values[0], tiers[1].values[0]);
  EXPECT_GT(tiers[1].values[0], tiers[2].values[0]);
  // Cost column: smallest first, and the repeated 5 fills two tiers.
  EXPECT_LT(tiers[0].values[1], tiers[1].values[1]);
  EXPECT_DOUBLE_EQ(tiers[1].values[1], tiers[2].values[1]);
}

}  // namespace
}  // namespace mcdm
