// Copyright 2026 The branchpair Authors
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

#include "branchpair/harness.hpp"

namespace branchpair {
namespace {

class Property : public ::testing::TestWithParam<std::string> {};

TEST_P(Property, Holds) {
  auto r = check_property(GetParam(), 200, 1);
  EXPECT_GT(r.cases, 0u);
  EXPECT_TRUE(r.ok()) << r.first_failure;
}

INSTANTIATE_TEST_SUITE_P(All, Property, ::testing::ValuesIn(property_names()),
                         [](const auto& info) {
                           std::string s = info.param;
                           for (char& c : s)
                             if (c == '-') c = '_';
                           return s;
                         });

}  // namespace
}  // namespace branchpair
