#include "premod/json_io.hpp"

#include <stdexcept>

namespace premod {

json to_json(const CyclotomicNumber& x) {
  json coeffs = json::array();
  for (const auto& c : x.coeffs()) coeffs.push_back(to_string(c));
  return json{{"conductor", x.conductor()}, {"coeffs", coeffs}};
}

CyclotomicNumber cyclo_from_json(const json& j) {
  int n = j.at("conductor").get<int>();
  if (n < 1) throw std::invalid_argument("conductor must be positive");
  const json& coeffs = j.at("coeffs");
  CyclotomicNumber out;
  int k = 0;
  for (const auto& c : coeffs) {
    Rational q = parse_rational(c.get<std::string>());
    if (!(q == 0))
      out += CyclotomicNumber(q) * CyclotomicNumber::zeta(n, k);
    ++k;
  }
  return out;
}

json to_json(const RootOfUnity& r) { return json{{"k", r.k}, {"n", r.n}}; }

RootOfUnity root_from_json(const json& j) {
  return RootOfUnity(j.at("k").get<long>(), j.at("n").get<long>());
}

json to_json(const IntPolynomial& p) {
  json coeffs = json::array();
  for (const auto& c : p.c) coeffs.push_back(c.str());
  return json{{"coeffs", coeffs}, {"text", p.str()}};
}

IntPolynomial poly_from_json(const json& j) {
  std::vector<Integer> c;
  for (const auto& e : j.at("coeffs")) c.emplace_back(e.get<std::string>());
  return IntPolynomial(std::move(c));
}

json to_json(const FusionRing& F) {
  return json{{"rank", F.rank}, {"dual", F.dual}, {"N", F.N}};
}

FusionRing ring_from_json(const json& j) {
  FusionRing F;
  F.rank = j.at("rank").get<int>();
  if (F.rank < 1) throw std::invalid_argument("rank must be positive");
  F.dual = j.at("dual").get<std::vector<int>>();
  F.N = j.at("N").get<std::vector<std::vector<std::vector<int>>>>();
  if (static_cast<int>(F.dual.size()) != F.rank || static_cast<int>(F.N.size()) != F.rank)
    throw std::invalid_argument("fusion ring shape mismatch");
  for (const auto& plane : F.N) {
    if (static_cast<int>(plane.size()) != F.rank)
      throw std::invalid_argument("fusion ring shape mismatch");
    for (const auto& row : plane)
      if (static_cast<int>(row.size()) != F.rank)
        throw std::invalid_argument("fusion ring shape mismatch");
  }
  return F;
}

json to_json(const PremodularDatum& D, bool include_s) {
  json j = to_json(D.ring);
  json dims = json::array();
  for (const auto& d : D.dims) dims.push_back(to_json(d));
  json t = json::array();
  for (const auto& r : D.twists) t.push_back(to_json(r));
  j["dims"] = dims;
  j["T"] = t;
  if (include_s) {
    json s = json::array();
    for (const auto& row : D.S) {
      json jrow = json::array();
      for (const auto& x : row) jrow.push_back(to_json(x));
      s.push_back(jrow);
    }
    j["S"] = s;
  }
  return j;
}

PremodularDatum datum_from_json(const json& j, bool* s_synthesized) {
  PremodularDatum D;
  D.ring = ring_from_json(j);
  for (const auto& d : j.at("dims")) D.dims.push_back(cyclo_from_json(d));
  for (const auto& t : j.at("T")) D.twists.push_back(root_from_json(t));
  if (static_cast<int>(D.dims.size()) != D.ring.rank ||
      static_cast<int>(D.twists.size()) != D.ring.rank)
    throw std::invalid_argument("dims/T length mismatch");
  if (j.contains("S")) {
    for (const auto& row : j.at("S")) {
      std::vector<CyclotomicNumber> r;
      for (const auto& x : row) r.push_back(cyclo_from_json(x));
      D.S.push_back(std::move(r));
    }
    if (s_synthesized) *s_synthesized = false;
  } else {
    D.S = s_from_balancing(D.ring, D.dims, D.twists);
    if (s_synthesized) *s_synthesized = true;
  }
  return D;
}

std::string canonical_dump(const json& j) { return j.dump() + "\n"; }

}  // namespace premod
