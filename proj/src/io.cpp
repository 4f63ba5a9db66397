#include "latdiam/io.hpp"

#include <charconv>
#include <sstream>

#include "latdiam/graph.hpp"

namespace latdiam {

namespace {

struct Line {
  std::size_t number;
  std::string text;
};

bool skippable(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  return first == std::string::npos || s[first] == '#';
}

std::vector<Int> parse_integers(const Line& line) {
  std::vector<Int> out;
  std::istringstream is(line.text);
  std::string tok;
  while (is >> tok) {
    Int v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec == std::errc::result_out_of_range) throw ParseError(line.number, "integer out of range: " + tok);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
      throw ParseError(line.number, "expected an integer, got '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

// Reads the content lines of one block: either until EOF, or, with
// `stop_at_blank`, until the first blank line after some content.
std::vector<Line> read_block(std::istream& in, std::size_t& line_no, bool stop_at_blank) {
  std::vector<Line> lines;
  std::string s;
  while (std::getline(in, s)) {
    ++line_no;
    const bool blank = s.find_first_not_of(" \t\r") == std::string::npos;
    if (blank && stop_at_blank && !lines.empty()) break;
    if (skippable(s)) continue;
    lines.push_back({line_no, s});
  }
  return lines;
}

std::pair<int, Int> parse_header(const Line& line, const char* what) {
  const auto h = parse_integers(line);
  if (h.size() != 2) throw ParseError(line.number, std::string("header must be \"") + what + "\"");
  if (h[0] < 1 || h[0] > 64) throw ParseError(line.number, "dimension must be between 1 and 64");
  return {static_cast<int>(h[0]), h[1]};
}

PointSet parse_point_block(const std::vector<Line>& lines, std::size_t eof_line) {
  if (lines.empty()) throw ParseError(eof_line, "missing header \"d k\"");
  PointSet ps;
  std::tie(ps.d, ps.k) = parse_header(lines.front(), "d k");
  if (ps.k < 0) throw ParseError(lines.front().number, "k must be non-negative");
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto p = parse_integers(lines[i]);
    if (static_cast<int>(p.size()) != ps.d)
      throw ParseError(lines[i].number, "expected " + std::to_string(ps.d) + " coordinates, got " +
                                            std::to_string(p.size()));
    for (Int x : p)
      if (x < 0 || x > ps.k)
        throw ParseError(lines[i].number, "coordinate " + std::to_string(x) + " outside [0," +
                                              std::to_string(ps.k) + "]");
    ps.points.push_back(std::move(p));
  }
  if (ps.points.empty()) throw ParseError(lines.front().number, "no points after the header");
  return ps;
}

bool is_digest(const std::string& s) {
  return s.size() == 16 && s.find_first_not_of("0123456789abcdef") == std::string::npos;
}

void write_point(std::ostream& out, const Point& p) {
  for (std::size_t i = 0; i < p.size(); ++i) out << (i ? " " : "") << p[i];
  out << '\n';
}

}  // namespace

PointSet read_points(std::istream& in) {
  std::size_t line_no = 0;
  const auto lines = read_block(in, line_no, false);
  return parse_point_block(lines, line_no + 1);
}

void write_polytope(std::ostream& out, const LatticePolytope& P) {
  out << P.d << ' ' << P.k << '\n';
  for (const auto& v : P.vertices) write_point(out, v);
}

GeneratorSet read_generators(std::istream& in) {
  std::size_t line_no = 0;
  const auto lines = read_block(in, line_no, false);
  if (lines.empty()) throw ParseError(line_no + 1, "missing header \"d m\"");
  auto [d, m] = parse_header(lines.front(), "d m");
  if (m < 0) throw ParseError(lines.front().number, "generator count must be non-negative");
  if (static_cast<Int>(lines.size()) - 1 != m)
    throw ParseError(lines.back().number, "header announces " + std::to_string(m) + " generators, found " +
                                              std::to_string(lines.size() - 1));
  GeneratorSet g{d, {}};
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto v = parse_integers(lines[i]);
    if (static_cast<int>(v.size()) != d)
      throw ParseError(lines[i].number, "expected " + std::to_string(d) + " coordinates, got " +
                                            std::to_string(v.size()));
    g.vectors.push_back(std::move(v));
  }
  return g;
}

void write_generators(std::ostream& out, const GeneratorSet& gens) {
  out << gens.d << ' ' << gens.vectors.size() << '\n';
  for (const auto& v : gens.vectors) write_point(out, v);
}

void write_certificates(std::ostream& out, const std::vector<SearchCertificate>& certs) {
  for (std::size_t i = 0; i < certs.size(); ++i) {
    if (i) out << '\n';
    out << "diameter " << certs[i].diameter << " digest " << certs[i].canonical_digest << '\n';
    write_polytope(out, certs[i].polytope);
  }
}

std::vector<SearchCertificate> read_certificates(std::istream& in) {
  std::vector<SearchCertificate> out;
  std::size_t line_no = 0;
  for (;;) {
    auto lines = read_block(in, line_no, true);
    if (lines.empty()) break;
    const Line head = lines.front();
    std::istringstream hs(head.text);
    std::string w1, w2, digest;
    long long diam = 0;
    if (!(hs >> w1 >> diam >> w2 >> digest) || w1 != "diameter" || w2 != "digest")
      throw ParseError(head.number, "expected \"diameter N digest HEX\"");
    if (!is_digest(digest)) throw ParseError(head.number, "malformed digest '" + digest + "'");
    lines.erase(lines.begin());
    const auto ps = parse_point_block(lines, head.number + 1);
    SearchCertificate c;
    try {
      c.polytope = relative_convex_hull(ps.points, ps.d, ps.k);
    } catch (const std::exception& e) {
      throw ParseError(head.number, std::string("record does not describe a polytope: ") + e.what());
    }
    c.diameter = static_cast<int>(diam);
    c.witness = diameter(c.polytope).witness;
    c.canonical_digest = digest;
    out.push_back(std::move(c));
  }
  return out;
}

std::unordered_set<std::string> read_digests(std::istream& in) {
  std::unordered_set<std::string> out;
  std::string s;
  std::size_t line_no = 0;
  while (std::getline(in, s)) {
    ++line_no;
    if (skippable(s)) continue;
    std::istringstream is(s);
    std::string digest, extra;
    is >> digest;
    if (is >> extra) throw ParseError(line_no, "expected a single digest per line");
    if (!is_digest(digest))
      throw ParseError(line_no, "malformed digest '" + digest + "'");
    out.insert(digest);
  }
  return out;
}

void write_digests(std::ostream& out, const std::vector<std::string>& digests) {
  for (const auto& d : digests) out << d << '\n';
}

}  // namespace latdiam
