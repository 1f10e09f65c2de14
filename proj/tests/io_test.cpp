#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "tensor3/core.hpp"
#include "tensor3/io.hpp"

using namespace t3;
using t3::io::json;

namespace {

std::string error_of(const std::string& text) {
  std::istringstream in(text);
  try {
    io::parse_tensor_file(in);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidInput);
    return e.what();
  }
  ADD_FAILURE() << "no error for: " << text;
  return {};
}

json valid_file() { return io::to_json(random_tensor(1)); }

}  // namespace

TEST(TensorFile, RoundTripIsBitwise) {
  for (int s = 0; s < 200; ++s) {
    const Hyper3 a = random_tensor(s) * std::pow(10.0, s % 40 - 20);
    std::istringstream in(io::to_json(a, "t").dump(2));
    const io::TensorFile f = io::parse_tensor_file(in);
    EXPECT_EQ(f.tensor, a);
    EXPECT_EQ(f.name, "t");
  }
}

TEST(TensorFile, EntryLayoutIsIJK) {
  const Hyper3 e = levi_civita();
  const json j = io::to_json(e);
  EXPECT_EQ(j["entries"][0][1][2].get<double>(), 1.0);
  EXPECT_EQ(j["entries"][1][0][2].get<double>(), -1.0);
  EXPECT_EQ(j["dim"], 3);
  EXPECT_EQ(j["order"], 3);
  EXPECT_FALSE(j.contains("name"));
}

TEST(TensorFile, UnknownKeysIgnored) {
  json j = valid_file();
  j["comment"] = "extra";
  j["sigma"] = {1, 2, 3};
  EXPECT_EQ(io::tensor_from_json(j).tensor, random_tensor(1));
}

TEST(TensorFile, SyntaxErrorReportsLineAndColumn) {
  const std::string msg = error_of("{\n  \"dim\": 3,\n  \"order\": 3,\n  \"entries\": [1, 2,, 3]\n}");
  EXPECT_NE(msg.find("line 4"), std::string::npos) << msg;
  EXPECT_NE(msg.find("column"), std::string::npos) << msg;
}

TEST(TensorFile, FieldDiagnostics) {
  json j = valid_file();
  j.erase("entries");
  EXPECT_NE(error_of(j.dump()).find("missing field 'entries'"), std::string::npos);

  j = valid_file();
  j["dim"] = 4;
  EXPECT_NE(error_of(j.dump()).find("dim"), std::string::npos);

  j = valid_file();
  j["order"] = 2;
  EXPECT_NE(error_of(j.dump()).find("order"), std::string::npos);

  j = valid_file();
  j["entries"][1][2][0] = "x";
  EXPECT_NE(error_of(j.dump()).find("entries[1][2][0]: expected a number"), std::string::npos);

  j = valid_file();
  j["entries"][2].erase(1);
  EXPECT_NE(error_of(j.dump()).find("entries[2]: expected 3 elements, got 2"), std::string::npos);

  j = valid_file();
  j["entries"][0][0] = 5;
  EXPECT_NE(error_of(j.dump()).find("entries[0][0]: expected an array"), std::string::npos);

  j = valid_file();
  j["name"] = 7;
  EXPECT_NE(error_of(j.dump()).find("name"), std::string::npos);

  EXPECT_NE(error_of("[1, 2, 3]").find("expected a JSON object"), std::string::npos);
  EXPECT_NE(error_of("").find("malformed JSON"), std::string::npos);
}

TEST(Matrix, ParsesAndValidates) {
  EXPECT_EQ(io::mat3_from_json(json::parse("[[1,0,0],[0,1,0],[0,0,1]]")), Mat3::identity());
  try {
    io::mat3_from_json(json::parse("[[1,0,0],[0,1],[0,0,1]]"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("matrix[1]"), std::string::npos);
  }
}

TEST(FormatDouble, ShortestRoundTrip) {
  EXPECT_EQ(io::format_double(std::sqrt(2.0)), "1.4142135623730951");
  EXPECT_EQ(io::format_double(0.1), "0.1");
  EXPECT_EQ(io::format_double(1.0), "1");
  for (int s = 0; s < 1000; ++s) {
    const double v = random_tensor(s)[s % 27] * std::pow(10.0, s % 60 - 30);
    EXPECT_EQ(std::stod(io::format_double(v)), v);
  }
}

TEST(Reports, InvariantKeys) {
  const json j = io::to_json(InvariantSet{6, 12, 24, 12, 24, 12, 24});
  for (const char* k : {"trU", "trU2", "trU3", "trUbar2", "trUbar3", "trUhat2", "trUhat3"}) EXPECT_TRUE(j.contains(k)) << k;
  EXPECT_EQ(j["trU3"], 24.0);
}

TEST(Reports, SymmetryReportIsFlat) {
  const json j = io::to_json(classify(levi_civita()));
  EXPECT_EQ(j["totally_anti"], true);
  EXPECT_EQ(j["partially_symmetric"], false);
  EXPECT_TRUE(j.contains("tol"));
}
