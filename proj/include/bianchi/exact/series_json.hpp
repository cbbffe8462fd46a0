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

#ifndef BIANCHI_EXACT_SERIES_JSON_HPP
#define BIANCHI_EXACT_SERIES_JSON_HPP

#include <string>

#include "json.hpp"

#include "bianchi/exact/puiseux.hpp"

namespace bianchi::exact {

// {"ram": R, "lo": lo, "trunc": trunc, "coeffs": [["num", "den"], ...]}
// with numerators and denominators as decimal strings.
nlohmann::json to_json(const PuiseuxSeries& s);
PuiseuxSeries series_from_json(const nlohmann::json& j);

// One "exponent  coefficient" line per nonzero coefficient, two-space separated.
std::string to_text(const PuiseuxSeries& s);

}  // namespace bianchi::exact

#endif  // BIANCHI_EXACT_SERIES_JSON_HPP
