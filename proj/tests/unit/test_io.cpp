#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "rsl/error.hpp"
#include "rsl/io.hpp"
#include "rsl/report.hpp"

using namespace rsl;

TEST_CASE("csv output round trips doubles") {
  Table t({"x", "y"});
  t.add_row({0.1, 1.0 / 3.0});
  t.add_row({-2.5e-300, 7.0});
  const std::string csv = t.csv();
  std::istringstream in(csv);
  std::string header, line;
  std::getline(in, header);
  CHECK(header == "x,y");
  std::getline(in, line);
  CHECK(std::strtod(line.substr(line.find(',') + 1).c_str(), nullptr) == 1.0 / 3.0);
  CHECK_THROWS_AS(t.add_row({1.0}), Error);
}

TEST_CASE("plot data has two columns") {
  CHECK(plot_data({1.0, 2.0}, {3.0, 4.0}) == "1 3\n2 4\n");
  CHECK_THROWS_AS(plot_data({1.0}, {}), Error);
}

TEST_CASE("non finite numbers are strings in reports") {
  CHECK(number(HUGE_VAL) == "inf");
  CHECK(number(std::nan("")) == "nan");
  CHECK(number(1.5) == 1.5);
  const Json e = error_json(Error(ErrorKind::OutOfRangeSigma, "sigma"));
  CHECK(e["error"] == "OutOfRangeSigma");
}

TEST_CASE("files land under the output root") {
  const auto dir = std::filesystem::temp_directory_path() / "rsl-io-test";
  std::filesystem::remove_all(dir);
  write_text(dir / "a" / "b.txt", "hi");
  std::ifstream f(dir / "a" / "b.txt");
  std::string s;
  f >> s;
  CHECK(s == "hi");
  CHECK(output_root(dir.string()) == dir);
  std::filesystem::remove_all(dir);
}
