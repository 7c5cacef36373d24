// Copyright 2026 The qsdbounds Authors
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

#include <cmath>

#include "oracles.h"
#include "qsd/error.h"
#include "qsd/example.h"
#include "qsd/json_io.h"
#include "qsd/optimality.h"
#include "qsd/rational.h"
#include "qsd/random.h"

namespace qsd {
namespace {

const std::filesystem::path kData = QSD_TEST_DATA_DIR;

TEST(ExactReal, ParsesDecimalsAndFractions) {
  EXPECT_EQ(parse_exact_real("1/3"), 1.0 / 3.0);
  EXPECT_EQ(parse_exact_real("7/8"), 0.875);
  EXPECT_EQ(parse_exact_real("-2/4"), -0.5);
  EXPECT_EQ(parse_exact_real("0.125"), 0.125);
  EXPECT_EQ(parse_exact_real("0.1"), 0.1);
  EXPECT_EQ(parse_exact_real("-2.5e-3"), -0.0025);
  EXPECT_EQ(parse_exact_real("3"), 3.0);
  EXPECT_EQ(parse_exact_real("1.5/3"), 0.5);
  EXPECT_EQ(parse_exact_real(" 1 / 2 "), 0.5);
  for (const char* bad : {"", "abc", "1/0", "1/", "/2", "1e", "--1", "0x10"}) {
    EXPECT_THROW(parse_exact_real(bad), std::invalid_argument) << bad;
  }
}

TEST(ExactReal, StringPriorsSumExactly) {
  const Json good = parse_json_text(
      R"({"dim":1,"states":[[[1]],[[1]],[[1]]],"priors":["1/3","1/3","1/3"]})", "t");
  EXPECT_NO_THROW(ensemble_from_json(good));
  const Json bad = parse_json_text(
      R"({"dim":1,"states":[[[1]],[[1]],[[1]]],"priors":[0.3333,0.3333,0.3333]})", "t");
  EXPECT_THROW(ensemble_from_json(bad), Error);
}

TEST(Dump, SeventeenDigitsAndLayout) {
  Json j;
  j["x"] = 0.1;
  j["v"] = {1.0 / 3.0, 2.0};
  j["m"] = {{1, 2}, {3, 4}};
  const std::string pretty = dump_json(j);
  EXPECT_NE(pretty.find("0.10000000000000001"), std::string::npos);
  EXPECT_NE(pretty.find("[0.33333333333333331, 2]"), std::string::npos);
  EXPECT_NE(pretty.find("[[1, 2], [3, 4]]"), std::string::npos);
  const std::string compact = dump_json(j, -1);
  EXPECT_EQ(compact.find('\n'), std::string::npos);
  EXPECT_EQ(parse_json_text(compact, "c")["x"].get<double>(), 0.1);
}

TEST(Digest, Fnv1a) {
  EXPECT_EQ(fnv1a64_hex(""), "cbf29ce484222325");
  EXPECT_EQ(fnv1a64_hex("a"), "af63dc4c8601ec8c");
}

TEST(EnsembleFile, ExampleFilesAgree) {
  const Ensemble a = ensemble_from_json(parse_json_text(read_file(kData / "example.json"), "a"));
  const Ensemble b =
      ensemble_from_json(parse_json_text(read_file(kData / "example_diagonal.json"), "b"));
  const Ensemble c = example_ensemble();
  ASSERT_EQ(a.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(a.prior(i), c.prior(i));
    EXPECT_EQ(a.state(i).matrix(), c.state(i).matrix());
    EXPECT_EQ(b.state(i).matrix(), c.state(i).matrix());
  }
}

TEST(EnsembleFile, ComplexEntries) {
  const Ensemble e = ensemble_from_json(parse_json_text(read_file(kData / "pair.json"), "p"));
  EXPECT_EQ(e.state(1).matrix()(0, 1), Complex(0.25, -0.25));
  EXPECT_EQ(e.state(1).matrix()(1, 0), Complex(0.25, 0.25));
}

TEST(EnsembleFile, Errors) {
  const auto load = [](const char* text) { return ensemble_from_json(parse_json_text(text, "t")); };
  EXPECT_THROW(parse_json_text("{", "t"), ParseError);
  EXPECT_THROW(read_file(kData / "missing.json"), ParseError);
  EXPECT_THROW(load(R"({"states":[[[1]]],"priors":[1]})"), ParseError);
  EXPECT_THROW(load(R"({"dim":1,"priors":[1]})"), ParseError);
  EXPECT_THROW(load(R"({"dim":1,"states":[[[1]]],"diagonal":[[1]],"priors":[1]})"), ParseError);
  EXPECT_THROW(load(R"({"dim":1,"states":[[[1]],[[1]]],"priors":[1]})"), ParseError);
  EXPECT_THROW(load(R"({"dim":1,"states":[[["x"]],[[1]]],"priors":[0.5,0.5]})"), ParseError);
  EXPECT_THROW(load(R"({"dim":2,"states":[[[1,0],[0]],[[1]]],"priors":[0.5,0.5]})"), ParseError);
  EXPECT_THROW(load(R"({"dim":1,"states":[[[[1,0,0]]],[[1]]],"priors":[0.5,0.5]})"), ParseError);
  try {
    load(R"({"dim":2,"states":[[[1,0],[0,0]],[[1]]],"priors":[0.5,0.5]})");
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDimensionMismatch);
    EXPECT_EQ(e.index(), 1u);
  }
}

TEST(EnsembleFile, RoundTrip) {
  oracle::Gen g(71);
  for (int t = 0; t < 20; ++t) {
    const Ensemble e = g.ensemble(g.integer(1, 4), 3, t % 2 == 0, false);
    const Ensemble back = ensemble_from_json(parse_json_text(dump_json(ensemble_to_json(e)), "r"));
    for (std::size_t i = 0; i < e.size(); ++i) {
      EXPECT_EQ(back.prior(i), e.prior(i));
      EXPECT_EQ(back.state(i).matrix(), e.state(i).matrix());
    }
  }
}

TEST(PovmFile, RoundTrip) {
  RandomSpec spec;
  spec.seed = 3;
  spec.dim = 3;
  const Povm m = random_povm(spec, 4);
  const Povm back = povm_from_json(parse_json_text(dump_json(povm_to_json(m)), "p"));
  ASSERT_EQ(back.size(), 4u);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(back.effect(i).matrix(), m.effect(i).matrix());
  const Povm basis =
      povm_from_json(parse_json_text(read_file(kData / "example_basis_povm.json"), "b"));
  EXPECT_TRUE(check_holevo(example_ensemble(), basis).passed());
}

TEST(ReportFile, RoundTripIsLossless) {
  std::vector<Ensemble> cases = {example_ensemble()};
  oracle::Gen g(72);
  for (int t = 0; t < 30; ++t) {
    cases.push_back(g.ensemble(g.integer(2, 4), static_cast<std::size_t>(g.integer(2, 5)),
                               t % 2 == 0, t % 3 == 0));
  }
  for (int t = 0; t < 10; ++t) cases.push_back(oracle::commuting_case(g, 3, 3, false).ensemble());
  for (const auto& e : cases) {
    ReportFile f;
    f.report = bounds_report(e);
    f.input_digest = "fnv1a64:0123456789abcdef";
    const ReportFile back = report_from_json(parse_json_text(dump_json(report_to_json(f)), "r"));
    EXPECT_EQ(back.report, f.report);
    EXPECT_EQ(back.tool, "qsdbounds");
    EXPECT_EQ(back.version, f.version);
    EXPECT_EQ(back.input_digest, f.input_digest);
  }
}

TEST(ReportFile, MissingFieldIsParseError) {
  ReportFile f;
  f.report = bounds_report(example_ensemble());
  Json j = report_to_json(f);
  j.erase("upper");
  EXPECT_THROW(report_from_json(j), ParseError);
}

TEST(CertificateJson, CarriesVerdict) {
  const Json j = certificate_to_json(check_holevo(example_ensemble(), example_optimal_povm()));
  EXPECT_EQ(j["verdict"], "pass");
  EXPECT_EQ(j["orthogonality_residuals"].size(), 3u);
}

}  // namespace
}  // namespace qsd
