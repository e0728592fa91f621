// Copyright 2026 The cpbskew Authors
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

#include <cstring>
#include <vector>

#include <gtest/gtest.h>

#include "cpbskew/error.hpp"
#include "cpbskew/sweep.hpp"

using namespace cpbskew;

namespace {

bool bit_identical(const TraceSeries& a, const TraceSeries& b) {
  return a.rows.size() == b.rows.size() &&
         std::memcmp(a.rows.data(), b.rows.data(), a.rows.size() * sizeof(TraceRow)) == 0;
}

}  // namespace

TEST(TimeGrid, UniformAndEndpointExact) {
  const TimeGrid grid{25.0, 2001};
  const auto t = grid.samples();
  ASSERT_EQ(t.size(), 2001u);
  EXPECT_EQ(t.front(), 0.0);
  EXPECT_EQ(t.back(), 25.0);
  for (std::size_t i = 1; i < t.size(); ++i) EXPECT_GT(t[i], t[i - 1]);
  EXPECT_THROW((TimeGrid{0.0, 10}.validate()), InvalidArgument);
  EXPECT_THROW((TimeGrid{1.0, 1}.validate()), InvalidArgument);
}

TEST(RunTrace, RowInvariants) {
  for (const SweepPoint p : {SweepPoint{0.0, 0.25, 1}, SweepPoint{0.9, 8.0, 0},
                             SweepPoint{0.3, 0.125, 8}}) {
    const auto s = run_trace(p, TimeGrid{25.0, 801});
    ASSERT_EQ(s.rows.size(), 801u);
    EXPECT_EQ(s.rows[0].time, 0.0);
    EXPECT_EQ(s.rows[0].skew, 1.0);
    EXPECT_EQ(s.rows[0].concurrence, 0.0);
    for (std::size_t i = 0; i < s.rows.size(); ++i) {
      const auto& r = s.rows[i];
      if (i > 0) EXPECT_GT(r.time, s.rows[i - 1].time);
      EXPECT_GE(r.skew, 1.0);
      EXPECT_LE(r.skew, 2.0);
      EXPECT_NEAR(r.variance_sum, 1.0 + r.skew, 1e-10);
      EXPECT_GE(r.wy_sum, 0.0);
      EXPECT_LE(r.wy_sum, r.variance_sum + 1e-10);
    }
  }
}

TEST(RunTrace, ParallelMatchesSerialBitForBit) {
  const SweepPoint p{0.3, 1.0 / 6.0, 5};
  const TimeGrid grid{25.0, 1501};
  EXPECT_TRUE(bit_identical(run_trace(p, grid), run_trace_serial(p, grid)));
}

TEST(RunSweep, ParallelMatchesSerialBitForBit) {
  const std::vector<SweepPoint> points{{0.0, 0.25, 1}, {0.3, 0.25, 2}, {0.9, 4.0, 0},
                                       {0.0, 0.125, 8}};
  const TimeGrid grid{25.0, 701};
  const auto par = run_sweep(points, grid);
  const auto ser = run_sweep_serial(points, grid);
  ASSERT_EQ(par.size(), ser.size());
  for (std::size_t i = 0; i < par.size(); ++i) {
    EXPECT_EQ(par[i].rabi, ser[i].rabi);
    EXPECT_TRUE(bit_identical(par[i], ser[i])) << "curve " << i;
  }
}

TEST(RunTrace, RejectsBadPoint) {
  EXPECT_THROW(run_trace({0.0, -1.0, 1}, TimeGrid{1.0, 3}), InvalidArgument);
  EXPECT_THROW(run_sweep(std::vector<SweepPoint>{{0.0, 0.0, 1}}, TimeGrid{1.0, 3}),
               InvalidArgument);
}

TEST(SkewAt, AgreesWithTraceRows) {
  const SweepPoint p{0.9, 0.25, 2};
  const auto s = run_trace(p, TimeGrid{10.0, 101});
  for (const auto& r : s.rows) EXPECT_NEAR(skew_at(p, r.time), r.skew, 1e-14);
}
