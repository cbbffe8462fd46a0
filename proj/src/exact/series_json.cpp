// Copyright 2026 The Bianchi Quintic Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bianchi/exact/series_json.hpp"

#include <vector>

#include "bianchi/errors.hpp"

namespace bianchi::exact {

nlohmann::json to_json(const PuiseuxSeries& s) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back({c.get_num().get_str(), c.get_den().get_str()});
  return {{"ram", s.ram()}, {"lo", s.lo()}, {"trunc", s.trunc()}, {"coeffs", std::move(coeffs)}};
}

PuiseuxSeries series_from_json(const nlohmann::json& j) {
  try {
    std::vector<BigRational> cs;
    for (const auto& pair : j.at("coeffs")) {
      if (!pair.is_array() || pair.size() != 2) throw ParseError("coefficient must be [num, den]");
      cs.push_back(parse_rational(pair[0].get<std::string>() + "/" + pair[1].get<std::string>()));
    }
    return PuiseuxSeries(j.at("ram").get<std::int64_t>(), j.at("lo").get<std::int64_t>(), std::move(cs),
                         j.at("trunc").get<std::int64_t>());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed series JSON: ") + e.what());
  }
}

std::string to_text(const PuiseuxSeries& s) {
  std::string out;
  for (const auto& [e, c] : s.terms()) out += to_string(e) + "  " + to_string(c) + "\n";
  return out;
}

}  // namespace bianchi::exact
