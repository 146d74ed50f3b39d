#include "lowtype/json_io.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

namespace lowtype {

Json laurent_to_json(const LaurentPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) {
    terms.push_back(Json::array({e, c.str()}));
  }
  return Json{{"terms", std::move(terms)}};
}

LaurentPoly laurent_from_json(const Json& j) {
  std::vector<std::pair<std::int64_t, BigInt>> terms;
  for (const auto& term : j.at("terms")) {
    terms.emplace_back(term.at(0).get<std::int64_t>(), BigInt(term.at(1).get<std::string>()));
  }
  return LaurentPoly::from_terms(terms);
}

Json decomposition_to_json(const Sl2Decomposition& dec) {
  Json mults = Json::array();
  const bool small = std::all_of(dec.mults().begin(), dec.mults().end(), [](const BigInt& a) {
    return a <= std::numeric_limits<std::uint64_t>::max();
  });
  for (const BigInt& a : dec.mults()) {
    if (small) {
      mults.push_back(static_cast<std::uint64_t>(a));
    } else {
      mults.push_back(a.str());
    }
  }
  Json out;
  out["mults"] = std::move(mults);
  if (dec.is_zero()) {
    out["lowest"] = nullptr;
    out["highest"] = nullptr;
  } else {
    out["lowest"] = dec.lowest();
    out["highest"] = dec.highest();
  }
  out["dim"] = dec.dim().str();
  return out;
}

Json bound_report_to_json(const BoundReport& report) {
  Json witnesses = Json::array();
  for (const auto& [lambda, dim] : report.witnesses) {
    witnesses.push_back(Json::array({lambda.str(), dim}));
  }
  Json violations = Json::array();
  for (const auto& lambda : report.violations) violations.push_back(lambda.str());
  return Json{{"n", report.n},
              {"max_boxes", report.max_boxes},
              {"checked", report.checked},
              {"max_min_dim", report.max_min_dim_found},
              {"witnesses", std::move(witnesses)},
              {"violations", std::move(violations)}};
}

}  // namespace lowtype
