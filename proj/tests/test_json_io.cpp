#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "rocoh/errors.hpp"
#include "rocoh/json_io.hpp"
#include "test_support.hpp"

using namespace rocoh;

TEST(JsonIo, DegreesAndRepresentations) {
  const RODegree d{3, -2};
  EXPECT_EQ(degree_from_json(to_json(d)), d);
  const Prime p5(5);
  const RealRep r = parse_rep(p5, "2x1+x2+3");
  EXPECT_EQ(rep_from_json(p5, to_json(p5, r)), r);
  EXPECT_EQ(rep_from_json(p5, Json("2x1+x2+3")), r);
  const Prime p2(2);
  EXPECT_EQ(rep_from_json(p2, to_json(p2, parse_rep(p2, "3s"))), parse_rep(p2, "3s"));
}

TEST(JsonIo, RingElements) {
  for (int p : {2, 3, 5}) {
    const Prime pr(p);
    for (const auto& m : window_monomials(pr, 4)) {
      EXPECT_EQ(monomial_from_json(to_json(m)), m);
      const RingElement x(pr, m, p - 1);
      EXPECT_EQ(element_from_json(pr, to_json(x)), x);
    }
    const RingElement zero(pr, RODegree{1, -1});
    EXPECT_EQ(element_from_json(pr, to_json(zero)), zero);
  }
}

TEST(JsonIo, CorpusRoundTrips) {
  for (const auto& entry : std::filesystem::directory_iterator(support::data_path("complexes"))) {
    std::ifstream in(entry.path());
    std::stringstream ss;
    ss << in.rdbuf();
    const RepComplex x = rep_complex_from_json(parse_json(ss.str()));
    EXPECT_EQ(to_json(rep_complex_from_json(to_json(x))).dump(), to_json(x).dump()) << entry.path();
  }
}

TEST(JsonIo, WrappedInputIsAccepted) {
  const Json inner = to_json(model_sphere(Prime(3), 1));
  const Json wrapped = {{"input", inner}, {"result", 1}};
  EXPECT_EQ(to_json(gcw_from_json(wrapped)).dump(), inner.dump());
}

TEST(JsonIo, ErrorsAreValidationErrors) {
  EXPECT_THROW(parse_json("{\"p\": 3,"), ValidationError);
  try {
    parse_json("{\n  \"p\": 3,\n  ]");
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("line"), std::string::npos);
  }
  EXPECT_THROW(degree_from_json(parse_json(R"({"m": "x", "n": 1})")), ValidationError);
  EXPECT_THROW(monomial_from_json(parse_json(R"({"cone": "middle", "kappa": 0, "j": 0, "k": 0})")), ValidationError);
  EXPECT_THROW(rep_complex_from_json(parse_json(R"({"p": 3})")), ValidationError);
  EXPECT_THROW(gcw_from_json(parse_json(R"({"p": 3, "cells": [{"name": "a", "dim": 0, "free": true}],
    "boundary": [{"from": "a", "to": "zz", "int": 1}]})")),
               ValidationError);
}
