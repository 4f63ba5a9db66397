#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "fixtures.hpp"
#include "latdiam/io.hpp"
#include "latdiam/lemmas.hpp"
#include "latdiam/search.hpp"
#include "latdiam/zonotope.hpp"

using namespace latdiam;

namespace {

std::size_t error_line(const std::string& text) {
  std::istringstream in(text);
  try {
    read_points(in);
  } catch (const ParseError& e) {
    return e.line();
  }
  FAIL("accepted: " << text);
  return 0;
}

std::string text_of(const LatticePolytope& P) {
  std::ostringstream os;
  write_polytope(os, P);
  return os.str();
}

}  // namespace

TEST_CASE("point files") {
  std::istringstream in("# unit square\n2 1\n0 0\n\n1 0\n0 1  \n1 1\n");
  const auto ps = read_points(in);
  CHECK(ps.d == 2);
  CHECK(ps.k == 1);
  CHECK(ps.points.size() == 4);
  CHECK(text_of(convex_hull(ps.points, ps.d, ps.k)) == "2 1\n0 0\n0 1\n1 0\n1 1\n");
}

TEST_CASE("parse errors carry line numbers") {
  CHECK(error_line("") == 1);
  CHECK(error_line("2\n0 0\n") == 1);
  CHECK(error_line("2 3\n0 0\n1 x\n") == 3);
  CHECK(error_line("2 3\n0 0\n1 2 3\n") == 3);
  CHECK(error_line("# c\n2 3\n0 4\n") == 3);
  CHECK(error_line("2 3\n0 -1\n") == 2);
  CHECK(error_line("2 3\n") == 1);
  CHECK(error_line("0 3\n") == 1);
  CHECK(error_line("2 3\n99999999999999999999 0\n") == 2);
  std::istringstream in("2 3\n0 0\n1 x\n");
  try {
    read_points(in);
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).rfind("line 3: ", 0) == 0);
  }
}

TEST_CASE("property: hull output round-trips byte-identically") {
  Rng rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const int d = static_cast<int>(rng.uniform(1, 4));
    const auto P = random_polytope(rng, d, rng.uniform(1, 5));
    const auto first = text_of(P);
    std::istringstream in(first);
    const auto ps = read_points(in);
    REQUIRE(text_of(convex_hull(ps.points, ps.d, ps.k)) == first);
  }
}

TEST_CASE("generator files") {
  const auto g = primitive_generators(3, 2);
  std::ostringstream os;
  write_generators(os, g);
  std::istringstream in(os.str());
  CHECK(read_generators(in) == g);
  std::istringstream shortfile("2 3\n1 0\n0 1\n");
  CHECK_THROWS_AS(read_generators(shortfile), ParseError);
  std::istringstream wide("2 1\n1 0 0\n");
  CHECK_THROWS_AS(read_generators(wide), ParseError);
  std::istringstream empty("# nothing\n");
  CHECK_THROWS_AS(read_generators(empty), ParseError);
}

TEST_CASE("certificate stores") {
  const auto r = enumerate_max_diameter_2d(2);
  std::ostringstream os;
  write_certificates(os, r.maximizers);
  std::istringstream in(os.str());
  const auto back = read_certificates(in);
  REQUIRE(back.size() == r.maximizers.size());
  for (std::size_t i = 0; i < back.size(); ++i) {
    CHECK(back[i].canonical_digest == r.maximizers[i].canonical_digest);
    CHECK(back[i].diameter == r.maximizers[i].diameter);
    CHECK(back[i].polytope.vertices == r.maximizers[i].polytope.vertices);
    CHECK(verify_certificate(back[i]).empty());
  }
  std::ostringstream again;
  write_certificates(again, back);
  CHECK(again.str() == os.str());

  std::istringstream bad("diameter 4 digest abc\n2 3\n0 0\n0 0\n");
  CHECK_THROWS_AS(read_certificates(bad), ParseError);
  std::istringstream junk("size 4\n2 3\n0 0\n");
  CHECK_THROWS_AS(read_certificates(junk), ParseError);
}

TEST_CASE("digest files") {
  std::ostringstream os;
  write_digests(os, {"00000000000000ff", "0123456789abcdef"});
  std::istringstream in(os.str());
  const auto s = read_digests(in);
  CHECK(s.size() == 2);
  CHECK(s.count("0123456789abcdef"));
  std::istringstream upper("0123456789ABCDEF\n");
  CHECK_THROWS_AS(read_digests(upper), ParseError);
  std::istringstream two("00000000000000ff 00000000000000ff\n");
  CHECK_THROWS_AS(read_digests(two), ParseError);
}
