#include "latdiam/bounds.hpp"

#include <array>
#include <stdexcept>

namespace latdiam {

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::Naddef: return "Naddef";
    case Provenance::KleinschmidtOnn: return "KleinschmidtOnn";
    case Provenance::DelPiaMichini: return "DelPiaMichini";
    case Provenance::Theorem1: return "Theorem1";
    case Provenance::Theorem2i: return "Theorem2i";
    case Provenance::Theorem2ii: return "Theorem2ii";
    case Provenance::Theorem2iii: return "Theorem2iii";
    case Provenance::ConjectureLB: return "ConjectureLB";
    case Provenance::Table1: return "Table1";
    case Provenance::TwoDimExact: return "TwoDimExact";
  }
  return "?";
}

namespace {

long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

void require_positive(int d, int k) {
  if (d < 1 || k < 1) throw std::invalid_argument("bounds: d and k must be positive");
}

constexpr std::array<long long, 9> kPlaneRow{2, 3, 4, 4, 5, 6, 6, 7, 8};

}  // namespace

namespace formula {

long long kleinschmidt_onn(int d, int k) { return 1LL * k * d; }

std::optional<long long> del_pia_michini(int d, int k) {
  if (k < 2) return std::nullopt;
  return 1LL * k * d - ceil_div(d, 2);
}

std::optional<long long> theorem1(int d, int k) {
  if (k < 3) return std::nullopt;
  return 1LL * k * d - ceil_div(2LL * d, 3);
}

std::optional<long long> theorem2(int d, int k) {
  if (k >= 4) return 1LL * k * d - ceil_div(2LL * d, 3) - (k - 2);
  if (k == 3) return (7LL * d) / 3 - (d % 3 == 2 ? 0 : 1);
  return std::nullopt;
}

std::optional<long long> conjecture_lower(int d, int k) {
  if (k > 2 * d - 1) return std::nullopt;
  return (1LL * (k + 1) * d) / 2;
}

}  // namespace formula

std::optional<Bound> delta_exact(int d, int k) {
  require_positive(d, k);
  if (k == 1) return Bound{d, Provenance::Naddef};
  if (k == 2) return Bound{(3LL * d) / 2, Provenance::DelPiaMichini};
  if (d == 1) return Bound{1, Provenance::Table1};
  if (d == 2 && k <= 9) return Bound{kPlaneRow[k - 1], Provenance::Table1};
  if (d == 3 && k == 3) return Bound{6, Provenance::Table1};
  if (d == 4 && k == 3) return Bound{8, Provenance::Table1};
  return std::nullopt;
}

Bound lower_bound(int d, int k) {
  require_positive(d, k);
  Bound best{d, Provenance::Naddef};
  auto offer = [&](std::optional<Bound> b) {
    if (b && b->value >= best.value) best = *b;
  };
  // Offered weakest-preference first; `>=` lets later offers win ties.
  offer(delta_exact(d, k));
  if (auto c = formula::conjecture_lower(d, k)) offer(Bound{*c, Provenance::ConjectureLB});
  return best;
}

Bound upper_bound(int d, int k) {
  require_positive(d, k);
  Bound best{formula::kleinschmidt_onn(d, k), Provenance::KleinschmidtOnn};
  if (auto e = delta_exact(d, k); e && e->value < best.value) best = *e;
  auto offer = [&](std::optional<long long> v, Provenance p) {
    if (v && *v <= best.value) best = {*v, p};
  };
  offer(formula::del_pia_michini(d, k), Provenance::DelPiaMichini);
  offer(formula::theorem1(d, k), Provenance::Theorem1);
  if (k >= 4) offer(formula::theorem2(d, k), Provenance::Theorem2i);
  if (k == 3)
    offer(formula::theorem2(d, k), d % 3 == 2 ? Provenance::Theorem2iii : Provenance::Theorem2ii);
  return best;
}

std::vector<BoundRecord> bounds_report(int d_max, int k_max) {
  if (d_max < 1 || d_max > 50 || k_max < 1 || k_max > 50)
    throw std::invalid_argument("bounds_report: d_max and k_max must lie in 1..50");
  std::vector<BoundRecord> out;
  out.reserve(static_cast<std::size_t>(d_max) * k_max);
  for (int d = 1; d <= d_max; ++d)
    for (int k = 1; k <= k_max; ++k) {
      BoundRecord r{d, k, lower_bound(d, k), upper_bound(d, k), delta_exact(d, k), false};
      r.settled = r.lower.value == r.upper.value;
      out.push_back(r);
    }
  return out;
}

nlohmann::ordered_json to_json(const BoundRecord& r) {
  nlohmann::ordered_json j;
  j["d"] = r.d;
  j["k"] = r.k;
  j["lower"] = r.lower.value;
  j["lower_provenance"] = to_string(r.lower.provenance);
  j["upper"] = r.upper.value;
  j["upper_provenance"] = to_string(r.upper.provenance);
  j["exact"] = r.exact ? nlohmann::ordered_json(r.exact->value) : nlohmann::ordered_json(nullptr);
  j["settled"] = r.settled;
  return j;
}

nlohmann::ordered_json to_json(const std::vector<BoundRecord>& records) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : records) arr.push_back(to_json(r));
  return arr;
}

}  // namespace latdiam
