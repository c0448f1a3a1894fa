// Copyright 2026 The rotsys Authors
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

#include "rotsys/cli.hpp"

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include <sstream>

#include "rotsys/report.hpp"

namespace rotsys {
namespace {

using ::testing::HasSubstr;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(ROTSYS_FIXTURE_DIR) + "/" + name; }

report::Json json_of(std::vector<std::string> args) {
  args.insert(args.begin(), "--json");
  return report::Json::parse(run(args).out);
}

TEST(CliTest, ExitCodes) {
  EXPECT_EQ(run({"faces", fixture("k4p.rot")}).code, 0);
  EXPECT_EQ(run({"genus", fixture("k4f.rot")}).code, 0);
  EXPECT_EQ(run({"check", fixture("k4p.rot")}).code, 0);
  EXPECT_EQ(run({"check", fixture("k4f.rot")}).code, 1);
  EXPECT_EQ(run({"dual", fixture("k4p.rot")}).code, 0);
  EXPECT_EQ(run({"dual", fixture("k4f.rot")}).code, 1);
  EXPECT_EQ(run({"compare", fixture("k4p.rot"), fixture("k4p.rot")}).code, 0);
  EXPECT_EQ(run({"compare", fixture("k4p.rot"), fixture("k4f.rot")}).code, 1);
  EXPECT_EQ(run({"witness", fixture("k4p.rot"), fixture("k4f.rot")}).code, 0);
  EXPECT_EQ(run({"witness", fixture("k4p.rot"), fixture("k4p.rot")}).code, 2);
  EXPECT_EQ(run({"census", "C~"}).code, 0);
  EXPECT_EQ(run({"verify", "whitney", "C~"}).code, 0);
  EXPECT_EQ(run({"verify", "cuts", "Cl"}).code, 0);
  EXPECT_EQ(run({"check", fixture("truncated.rot")}).code, 2);
  EXPECT_EQ(run({"check", fixture("missing.rot")}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"nonsense"}).code, 2);
  EXPECT_EQ(run({"verify", "bogus", "C~"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(CliTest, TextOutputs) {
  EXPECT_EQ(run({"check", fixture("k4p.rot")}).out, "polyhedral: true, genus: 0\n");
  EXPECT_THAT(run({"check", fixture("k4f.rot")}).out, HasSubstr("violation: NonSimpleFace face 1"));
  EXPECT_THAT(run({"genus", fixture("k4f.rot")}).out, HasSubstr("genus: 1\n"));
  EXPECT_THAT(run({"dual", fixture("k4f.rot")}).out,
              HasSubstr("dual: 2 vertices, 6 edges, 3 loops, 3 parallel edges"));
  const auto w = run({"witness", fixture("k4p.rot"), fixture("k4f.rot")});
  EXPECT_THAT(w.out, HasSubstr("anchor: MixedEdge (0,3)"));
  EXPECT_THAT(w.out, HasSubstr("(length 9)"));
  const auto v = run({"verify", "whitney", "C~"});
  EXPECT_THAT(v.out, HasSubstr("pass: true"));
  EXPECT_THAT(v.out, HasSubstr("rotation systems: 16"));
  EXPECT_THAT(v.out, HasSubstr("polyhedral classes: 1, genus: 0"));
}

TEST(CliTest, ErrorsGoToStderr) {
  const auto r = run({"check", fixture("truncated.rot")});
  EXPECT_THAT(r.err, HasSubstr("error: ParseError: line 2"));
  EXPECT_TRUE(r.out.empty());
}

TEST(CliTest, BudgetGuard) {
  const auto r = run({"--budget", "10", "census", "C~"});
  EXPECT_EQ(r.code, 2);
  EXPECT_THAT(r.err, HasSubstr("TooLarge"));
  EXPECT_EQ(run({"census", "C~", "--budget", "16"}).code, 0);
}

TEST(CliTest, JsonFields) {
  const auto c = json_of({"check", fixture("k4f.rot")});
  EXPECT_EQ(c["command"], "check");
  EXPECT_EQ(c["polyhedral"], false);
  EXPECT_EQ(c["genus"], 1);
  EXPECT_EQ(c["violation"]["type"], "NonSimpleFace");

  const auto census = json_of({"census", "C~"});
  EXPECT_EQ(census["total"], 16);
  EXPECT_EQ(census["raw_by_genus"]["0"], 2);
  EXPECT_EQ(census["raw_by_genus"]["1"], 14);
  EXPECT_EQ(census["classes_by_genus"]["1"], 7);
  EXPECT_EQ(census["polyhedral_classes"], 1);

  const auto w = json_of({"witness", fixture("k4p.rot"), fixture("k4f.rot")});
  EXPECT_EQ(w["anchor"]["type"], "MixedEdge");
  EXPECT_EQ(w["evidence"]["type"], "NonSimpleFace");
  EXPECT_EQ(w["verified"], true);

  const auto err = json_of({"witness", fixture("k4p.rot"), fixture("k4p.rot")});
  EXPECT_EQ(err["error"]["code"], "EquivalentInput");

  const auto pre = json_of({"witness", fixture("k4f.rot"), fixture("k4p.rot")});
  EXPECT_EQ(pre["error"]["reason"], "NotPlane");
}

TEST(CliTest, JsonIsByteStable) {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"--json", "faces", fixture("k4f.rot")},
        std::vector<std::string>{"--json", "census", "C~"},
        std::vector<std::string>{"--json", "witness", fixture("k4p.rot"), fixture("k4f.rot")},
        std::vector<std::string>{"--json", "verify", "cubic", "C~"}}) {
    EXPECT_EQ(run(args).out, run(args).out);
  }
}

TEST(CliTest, GraphFromRotationFile) {
  const auto r = run({"verify", "whitney", fixture("k4f.rot")});
  EXPECT_EQ(r.code, 0);
  EXPECT_THAT(r.out, HasSubstr("rotation systems: 16"));
}

}  // namespace
}  // namespace rotsys
