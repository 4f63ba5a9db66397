#pragma once

#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "latdiam/geometry.hpp"
#include "latdiam/search.hpp"
#include "latdiam/zonotope.hpp"

namespace latdiam {

/// Malformed text input; the message starts with "line N: ".
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  [[nodiscard]] std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

/// A point file: header "d k", then one point per line. Lines starting with
/// '#' and blank lines are ignored.
struct PointSet {
  int d = 0;
  Int k = 0;
  std::vector<Point> points;
};

PointSet read_points(std::istream& in);

/// Writes the header and the vertices of P, one per line.
void write_polytope(std::ostream& out, const LatticePolytope& P);

/// Generator file: header "d m", then m generator rows.
GeneratorSet read_generators(std::istream& in);
void write_generators(std::ostream& out, const GeneratorSet& gens);

/// Certificate store: each record is a line "diameter N digest HEX" followed
/// by the polytope in point-file format; records are separated by blank lines.
void write_certificates(std::ostream& out, const std::vector<SearchCertificate>& certs);
std::vector<SearchCertificate> read_certificates(std::istream& in);

/// Resume file: one digest per line.
std::unordered_set<std::string> read_digests(std::istream& in);
void write_digests(std::ostream& out, const std::vector<std::string>& digests);

}  // namespace latdiam
