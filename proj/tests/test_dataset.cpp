#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "kpo/dataset.hpp"

using namespace kpo;

namespace {

Dataset sample() {
  Dataset d;
  d.schema = "kpo.test.v1";
  d.meta = {{"mu", "2"}, {"seed", "42"}};
  d.notes = {"calibration run"};
  d.columns = {{"delta", "K"}, {"level", ""}, {"tag", ""}};
  d.rows = {{0.5, std::int64_t{3}, std::string("a")},
            {-1.25, std::int64_t{-7}, std::string("b")}};
  return d;
}

}  // namespace

TEST_CASE("seventeen-digit formatting round-trips doubles") {
  for (double x : {0.5, 1.0 / 3.0, 2.718281828459045, -1e-17, 6.02e23, 0.0}) {
    std::string s = format17(x);
    CHECK(std::stod(s) == x);
  }
  CHECK(format17(0.5) == "0.5");
  CHECK(format17(2.0) == "2");
}

TEST_CASE("FNV-1a 64 reference values") {
  CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
  CHECK(fnv1a64("abc") == 0xe71fa2190541574bULL);
  CHECK(hash_hex("abc") == "e71fa2190541574b");
}

TEST_CASE("CSV emission is byte-exact") {
  std::ostringstream os;
  write_csv(sample(), os);
  std::string want =
      "# schema=kpo.test.v1\n"
      "# mu=2\n"
      "# seed=42\n"
      "# note=calibration run\n"
      "delta[K],level,tag\n"
      "0.5,3,a\n"
      "-1.25,-7,b\n";
  CHECK(os.str() == want);
}

TEST_CASE("JSON emission is byte-exact and parses") {
  std::ostringstream os;
  write_json(sample(), os);
  std::string want = R"({
  "schema": "kpo.test.v1",
  "meta": {
    "mu": "2",
    "seed": "42"
  },
  "notes": ["calibration run"],
  "columns": [
    {"name": "delta", "unit": "K"},
    {"name": "level", "unit": ""},
    {"name": "tag", "unit": ""}
  ],
  "data": [
    [0.5, 3, "a"],
    [-1.25, -7, "b"]
  ]
}
)";
  CHECK(os.str() == want);
}

TEST_CASE("file writer reproduces the stream writers verbatim") {
  std::string path = "tmp_dataset_test.csv";
  write_file(sample(), path, "csv");
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  std::ostringstream os;
  write_csv(sample(), os);
  CHECK(buf.str() == os.str());
  std::remove(path.c_str());
  CHECK_THROWS_AS(write_file(sample(), path, "yaml"), config_error);
}

TEST_CASE("identical datasets hash identically") {
  std::ostringstream a, b;
  write_csv(sample(), a);
  write_csv(sample(), b);
  CHECK(fnv1a64(a.str()) == fnv1a64(b.str()));
  Dataset other = sample();
  other.rows[0][0] = 0.5000000001;
  std::ostringstream c;
  write_csv(other, c);
  CHECK(fnv1a64(a.str()) != fnv1a64(c.str()));
}
