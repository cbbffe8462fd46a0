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

#ifndef BIANCHI_CLI_CLI_HPP
#define BIANCHI_CLI_CLI_HPP

#include <complex>
#include <ostream>
#include <string_view>

namespace bianchi::cli {

// Exit codes.
constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

// Environment variable holding the default series order.
constexpr const char* kOrderEnv = "BIANCHI_SERIES_ORDER";

// "a+bi" literals: "1.1i", "0.3+1.4i", "-2", "i", "0.5-0.2i". Throws
// ParseError.
std::complex<double> parse_complex(std::string_view text);

// Runs one command line. Data goes to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bianchi::cli

#endif  // BIANCHI_CLI_CLI_HPP
