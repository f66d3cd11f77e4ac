// Copyright 2026 The symcontain Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "symcontain");
  std::ostringstream out, err;
  const int code = symcontain::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, DetAlphaPrintsValue) {
  const auto r = run({"det", "alpha", "--flavor", "generic", "--p", "3", "--q", "3", "--t", "2", "--k", "8"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "12\n");
}

TEST(Cli, PointsGateRefusal) {
  const auto r = run({"points", "certify", "--N", "3", "--m", "1", "--s", "63"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("s below (2m+2)^N = 64"), std::string::npos);
}

TEST(Cli, StarCertifyJson) {
  const auto r =
      run({"star", "certify", "--n", "4", "--h", "2", "--m", "1", "--r", "2", "--c", "2", "--exponents", "3,3,3,3", "--json"});
  EXPECT_EQ(r.code, 0);
  const auto j = symcontain::Json::parse(r.out);
  EXPECT_TRUE(j["verified"].get<bool>());
  EXPECT_TRUE(symcontain::verify_certificate_json(j));
}

TEST(Cli, JsonFlagBeforeSubcommand) {
  const auto r = run({"--json", "star", "alpha", "--n", "5", "--h", "2", "--k", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(symcontain::Json::parse(r.out)["alpha"], 9);
}

TEST(Cli, UnknownFlagIsInvalidInput) {
  const auto r = run({"star", "alpha", "--n", "5", "--h", "2", "--k", "3", "--bogus"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("Usage"), std::string::npos);
}

TEST(Cli, BadValuesAreInvalidInput) {
  EXPECT_EQ(run({"star", "alpha", "--n", "2", "--h", "3", "--k", "3"}).code, 2);
  EXPECT_EQ(run({"det", "alpha", "--flavor", "skew", "--p", "3", "--t", "2", "--k", "1"}).code, 2);
  EXPECT_EQ(run({"points", "certify", "--N", "3", "--m", "1", "--s", "abc"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
}

TEST(Cli, MemberExitCodes) {
  EXPECT_EQ(run({"star", "member", "--n", "3", "--h", "2", "--exponents", "1,1,1", "--k", "2"}).code, 0);
  EXPECT_EQ(run({"star", "member", "--n", "3", "--h", "2", "--exponents", "2,1,0", "--k", "2"}).code, 1);
  EXPECT_EQ(run({"det", "member", "--flavor", "symmetric", "--p", "3", "--t", "2", "--sizes", "2,2", "--k", "3"}).code, 1);
}

TEST(Cli, CertifyNonMemberFails) {
  const auto r = run({"star", "certify", "--n", "3", "--h", "3", "--m", "2", "--r", "2", "--c", "3", "--exponents", "2,2,2"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("not a member"), std::string::npos);
}

TEST(Cli, SeededCertifyIsDeterministicAndVerifies) {
  const std::vector<std::string> star{"--seed", "9", "--json", "star", "certify", "--n", "6", "--h", "3",
                                      "--m", "2", "--r", "3", "--c", "2"};
  const auto a = run(star), b = run(star);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_TRUE(symcontain::verify_certificate_json(symcontain::Json::parse(a.out)));

  const auto d = run({"--seed", "4", "--json", "det", "certify", "--flavor", "pfaffian", "--p", "8", "--t", "2", "--m", "2",
                      "--r", "2", "--c", "1", "--mode", "remark35"});
  EXPECT_EQ(d.code, 0);
  EXPECT_TRUE(symcontain::verify_certificate_json(symcontain::Json::parse(d.out)));
}

TEST(Cli, EveryCertifyRoundTripsThroughVerify) {
  const std::vector<std::vector<std::string>> cmds{
      {"--json", "star", "certify", "--n", "4", "--h", "2", "--m", "1", "--r", "2", "--c", "2", "--exponents", "3,3,3,3"},
      {"--json", "det", "certify", "--flavor", "generic", "--p", "3", "--q", "3", "--t", "2", "--sizes", "3,3,3,3", "--m",
       "1", "--r", "1"},
      {"--json", "points", "certify", "--N", "3", "--m", "1", "--s", "64"}};
  for (const auto& cmd : cmds) {
    const auto r = run(cmd);
    ASSERT_EQ(r.code, 0) << r.err;
    const std::string path = testing::TempDir() + "cert.json";
    std::ofstream(path) << r.out;
    const auto v = run({"verify", path});
    EXPECT_EQ(v.code, 0);
    EXPECT_EQ(v.out, "verified\n");
    std::remove(path.c_str());
  }
}

TEST(Cli, OtherSubcommands) {
  EXPECT_EQ(run({"star", "waldschmidt", "--n", "5", "--h", "2"}).out, "5/2\n");
  EXPECT_EQ(run({"det", "omega", "--flavor", "generic", "--p", "3", "--q", "3", "--t", "2", "--m", "5"}).out, "10\n");
  EXPECT_EQ(run({"det", "demailly", "--flavor", "pfaffian", "--p", "8", "--t", "2", "--m", "3", "--n-max", "15"}).code, 0);
  EXPECT_EQ(run({"points", "lemma24", "--N", "3", "--m", "1", "--k", "3"}).code, 1);
  EXPECT_EQ(run({"points", "sweep", "--N-min", "3", "--N-max", "4", "--m-max", "2"}).code, 0);
  EXPECT_EQ(run({"points", "fermat", "--n", "4"}).code, 0);
  const auto c = run({"--json", "oracle", "crosscheck", "--n", "4", "--h", "2", "--k", "3", "--deg-bound", "10"});
  EXPECT_EQ(c.code, 0);
  EXPECT_TRUE(symcontain::Json::parse(c.out)["ok"].get<bool>());
  EXPECT_EQ(run({"oracle", "crosscheck", "--n", "10", "--h", "2", "--k", "2", "--deg-bound", "20"}).code, 1);
}

TEST(Cli, LargeIntegersAreStrings) {
  const auto r = run({"--json", "points", "certify", "--N", "3", "--m", "1", "--s", "100000000000000000000000000000000000000000000000000000"});
  EXPECT_EQ(r.code, 0);
  const auto j = symcontain::Json::parse(r.out);
  EXPECT_TRUE(j["s"].is_string());
  EXPECT_TRUE(j["reg_bound"].is_string());
}
