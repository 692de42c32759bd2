// Copyright (c) 2026 The chebgreen authors
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

#include <cstring>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "matrix_io.hpp"
#include "test_support.hpp"

using namespace chebgreen::io;

TEST(MatrixIo, FormatsShortestExactly) {
  EXPECT_EQ(format_double(0.0), "0");
  EXPECT_EQ(format_double(-0.25), "-0.25");
  EXPECT_EQ(format_double(0.1), "0.10000000000000001");
}

TEST(MatrixIo, CsvRoundTripIsBitExact) {
  DenseMatrix m{5, 7, chebgreen::testing::random_vector(35, 11, -1e3, 1e3)};
  m.values[3] = std::numeric_limits<double>::denorm_min();
  m.values[4] = -1e-300;
  m.values[5] = 0.0;
  std::stringstream ss;
  write_csv(ss, m);
  const DenseMatrix back = read_csv(ss);
  ASSERT_EQ(back.rows, m.rows);
  ASSERT_EQ(back.cols, m.cols);
  EXPECT_EQ(std::memcmp(back.values.data(), m.values.data(), m.values.size() * sizeof(double)), 0);
}

TEST(MatrixIo, CsvRejectsRaggedRows) {
  std::stringstream ss("1,2\n3\n");
  EXPECT_THROW(read_csv(ss), std::invalid_argument);
  std::stringstream bad("1,abc\n");
  EXPECT_THROW(read_csv(bad), std::invalid_argument);
}

TEST(MatrixIo, ColumnRoundTrip) {
  const auto v = chebgreen::testing::random_vector(40, 2);
  std::stringstream ss;
  write_column(ss, v);
  EXPECT_EQ(read_column(ss), v);
}

TEST(MatrixIo, Reversal) {
  const DenseMatrix m{2, 3, {1, 2, 3, 4, 5, 6}};
  const DenseMatrix r = reversed(m);
  EXPECT_EQ(r.values, (std::vector<double>{6, 5, 4, 3, 2, 1}));
}

TEST(MatrixIo, JsonLayout) {
  const DenseMatrix m{2, 2, {1.0, -0.5, 0.25, 0.0}};
  std::stringstream ss;
  write_matrix_json(ss, m, 1, "descending");
  const auto doc = nlohmann::json::parse(ss.str());
  EXPECT_EQ(doc["degree"], 1);
  EXPECT_EQ(doc["ordering"], "descending");
  EXPECT_EQ(doc["entries"][0][1].get<double>(), -0.5);
  EXPECT_EQ(doc["entries"].size(), 2u);
}
