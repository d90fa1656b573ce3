#include <angsum/io/config.hpp>

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

using namespace angsum;
using namespace angsum::io;

namespace {

std::string message_of(const std::string& text) {
  try {
    parse_config(text);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::invalid_argument);
    return e.what();
  }
  return {};
}

}  // namespace

TEST(Config, RoundTripIsIdentity) {
  RunConfig c;
  c.precision_digits = 30;
  c.truncation_P = 12;
  c.m = 3;
  c.t_min = 0.125;
  c.t_max = 1.0 / 3.0;
  c.region = "-0.5,1.5,0,10";
  c.ns = 40;
  c.nt = 80;
  c.out_dir = "/tmp/angsum out";
  c.format = "json";
  const std::string text = serialize(c);
  EXPECT_EQ(parse_config(text), c);
  EXPECT_EQ(serialize(parse_config(text)), text);
  EXPECT_TRUE(parse_config(text).use_quad());
}

TEST(Config, CommentsBlankLinesAndOverlay) {
  RunConfig base;
  base.m = 2;
  const auto c = parse_config("# contour run\n\n  tmax = 60  \nformat=svg\n", base);
  EXPECT_EQ(c.m, 2);
  EXPECT_EQ(c.t_max, 60);
  EXPECT_EQ(c.format, "svg");
  EXPECT_FALSE(c.use_quad());
}

TEST(Config, ErrorsCarryLineNumbers) {
  EXPECT_NE(message_of("m = 1\nbogus = 3\n").find("config line 2: unknown key 'bogus'"), std::string::npos);
  EXPECT_NE(message_of("m = one\n").find("line 1: not an integer"), std::string::npos);
  EXPECT_NE(message_of("\n\ntmax 40\n").find("line 3: expected key = value"), std::string::npos);
  EXPECT_NE(message_of("tmax = 4e\n").find("not a number"), std::string::npos);
}

TEST(Config, ValidationRejectsBadValues) {
  for (const char* text : {"precision = 40", "precision = 2", "P = -1", "direct_radius = 5", "tmin = 10\ntmax = 5",
                           "ns = 10", "ns = 1\nnt = 1", "format = png", "threads = 0", "region = 0,1,2"})
    EXPECT_THROW(parse_config(text), Error) << text;
}

TEST(Config, RegionParsing) {
  const auto r = RunConfig::parse_region("-4.5, 11.5,0.1,20");
  EXPECT_EQ(r[0], -4.5);
  EXPECT_EQ(r[1], 11.5);
  EXPECT_EQ(r[2], 0.1);
  EXPECT_EQ(r[3], 20);
  for (const char* bad : {"", "1,0,0,1", "0,1,1,1", "0,1,0,1,2", "0,1,0,x", "0,1,0,1x"})
    EXPECT_THROW(RunConfig::parse_region(bad), Error) << bad;
}

TEST(Config, EvalConfigFollowsPrecision) {
  RunConfig c;
  c.truncation_P = 7;
  EXPECT_EQ(c.eval_config().truncation_P, 7);
  EXPECT_EQ(c.eval_config().direct_radius, 200);
}

TEST(Config, OutputDirectoryFromEnvironment) {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "angsum_cfg_test";
  fs::remove_all(dir);
  ::setenv(kOutDirEnv, dir.c_str(), 1);
  RunConfig c;
  ::unsetenv(kOutDirEnv);
  EXPECT_EQ(c.out_dir, dir.string());
  EXPECT_EQ(RunConfig{}.out_dir, ".");
  const auto path = write_output(c, "x.csv", "a,b\n1,2\n");
  std::ifstream f(path);
  std::string first;
  std::getline(f, first);
  EXPECT_EQ(first, "a,b");
  fs::remove_all(dir);
}

TEST(Config, LoadFromFile) {
  namespace fs = std::filesystem;
  const fs::path p = fs::temp_directory_path() / "angsum_cfg_test.conf";
  std::ofstream(p) << "m = 2\ntmax = 45.5\n";
  const auto c = load_config(p.string());
  EXPECT_EQ(c.m, 2);
  EXPECT_EQ(c.t_max, 45.5);
  fs::remove(p);
  try {
    load_config(p.string());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::io_failure);
  }
}
