#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace latdiam {

/// Where a bound on delta(d,k) comes from. The spellings returned by
/// `to_string` are part of the JSON report format.
enum class Provenance {
  Naddef,          ///< delta(d,1) = d; also the floor d for every k
  KleinschmidtOnn, ///< kd
  DelPiaMichini,   ///< kd - ceil(d/2) for k >= 2; delta(d,2) = floor(3d/2)
  Theorem1,        ///< kd - ceil(2d/3) for k >= 3
  Theorem2i,       ///< kd - ceil(2d/3) - (k-2) for k >= 4
  Theorem2ii,      ///< floor(7d/3) - 1 for k = 3, d != 2 mod 3
  Theorem2iii,     ///< floor(7d/3) for k = 3, d = 2 mod 3
  ConjectureLB,    ///< floor((k+1)d/2) for k <= 2d-1, by zonotope construction
  Table1,          ///< tabulated exact values
  TwoDimExact,     ///< reserved for planar exact values beyond the table (unused)
};

std::string_view to_string(Provenance p);

struct Bound {
  long long value = 0;
  Provenance provenance = Provenance::Naddef;

  bool operator==(const Bound&) const = default;
};

struct BoundRecord {
  int d = 0;
  int k = 0;
  Bound lower;
  Bound upper;
  std::optional<Bound> exact;
  bool settled = false;
};

/// Known exact value of delta(d,k) for d, k >= 1, or nullopt if open.
std::optional<Bound> delta_exact(int d, int k);

/// Best lower bound. On ties the conjecture construction wins over a
/// tabulated value, which wins over the floor d.
Bound lower_bound(int d, int k);

/// Best upper bound. On ties the sharper-stated theorem wins; tabulated
/// exact values are considered last.
Bound upper_bound(int d, int k);

/// One record per (d,k) with 1 <= d <= d_max, 1 <= k <= k_max, row-major in d.
/// Throws std::invalid_argument outside 1..50.
std::vector<BoundRecord> bounds_report(int d_max, int k_max);

nlohmann::ordered_json to_json(const BoundRecord& r);
nlohmann::ordered_json to_json(const std::vector<BoundRecord>& records);

/// Individual formulas, exposed for consistency checks. Each returns nullopt
/// outside its stated range of k.
namespace formula {
long long kleinschmidt_onn(int d, int k);
std::optional<long long> del_pia_michini(int d, int k);
std::optional<long long> theorem1(int d, int k);
std::optional<long long> theorem2(int d, int k);  ///< whichever of (i)-(iii) applies
std::optional<long long> conjecture_lower(int d, int k);
}  // namespace formula

}  // namespace latdiam
