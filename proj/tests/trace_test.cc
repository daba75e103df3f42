// Copyright 2026 The ifom Authors
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

#include "ifom/trace.h"

#include <charconv>
#include <cmath>
#include <limits>
#include <string>

#include "gtest/gtest.h"

namespace ifom {
namespace {

TEST(FormatDoubleTest, ShortestRoundTrip) {
  EXPECT_EQ(FormatDouble(0.1), "0.1");
  EXPECT_EQ(FormatDouble(1.0), "1");
  EXPECT_EQ(FormatDouble(-2.5e-300), "-2.5e-300");
  EXPECT_EQ(FormatDouble(std::numeric_limits<double>::quiet_NaN()), "nan");
  EXPECT_EQ(FormatDouble(std::numeric_limits<double>::infinity()), "inf");
  EXPECT_EQ(FormatDouble(-std::numeric_limits<double>::infinity()), "-inf");
}

TEST(FormatDoubleTest, ParsesBack) {
  for (double v : {1.0 / 3.0, 123456.789e10, 5e-324, 0.30000000000000004}) {
    const std::string s = FormatDouble(v);
    double back = 0.0;
    std::from_chars(s.data(), s.data() + s.size(), back);
    EXPECT_EQ(back, v);
  }
}

TEST(TraceCsvTest, HeaderAndEmptyEnvelope) {
  Trace t;
  t.rows.push_back({0, 2.0, 1.0, 0.5, 1, 4.0});
  TraceRow r;
  r.k = 1;
  r.gap = 1.0;
  r.calls = 2;
  t.rows.push_back(r);
  EXPECT_EQ(ToCsv(t),
            "k,gap,grad_norm,dist,calls,envelope\n"
            "0,2,1,0.5,1,4\n"
            "1,1,0,0,2,\n");
  EXPECT_EQ(t.Gaps(), (std::vector<double>{2.0, 1.0}));
  EXPECT_EQ(t.Distances(), (std::vector<double>{0.5, 0.0}));
}

TEST(TraceCsvTest, SaddleHeader) {
  SaddleTrace t;
  t.rows.push_back({0, 1.0, 10.0, 0.25, 0});
  EXPECT_EQ(ToCsv(t), "k,dist2,lyapunov,opnorm,calls\n0,1,10,0.25,0\n");
  EXPECT_EQ(t.SquaredDistances(), std::vector<double>{1.0});
}

TEST(StatusNameTest, Names) {
  EXPECT_STREQ(StatusName(RunStatus::kCompleted), "completed");
  EXPECT_STREQ(StatusName(RunStatus::kDiverged), "diverged");
}

}  // namespace
}  // namespace ifom
