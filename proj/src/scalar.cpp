// Copyright 2026 The Bananaworld Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bananaworld/scalar.hpp"

#include <regex>

#include "bananaworld/errors.hpp"

namespace bananaworld {

Rational parse_rational(std::string_view text) {
  static const std::regex kPattern(R"(^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$)");
  std::match_results<std::string_view::const_iterator> match;
  if (!std::regex_match(text.begin(), text.end(), match, kPattern)) {
    throw ParseError("malformed rational '" + std::string(text) + "'");
  }
  std::string num = match[1].str();
  if (!num.empty() && num.front() == '+') num.erase(0, 1);
  boost::multiprecision::mpz_int numerator(num);
  boost::multiprecision::mpz_int denominator(1);
  if (match[2].matched) denominator = boost::multiprecision::mpz_int(match[2].str());
  if (denominator == 0) {
    throw ParseError("zero denominator in '" + std::string(text) + "'");
  }
  return Rational(numerator, denominator);
}

std::string format_rational(const Rational &value) {
  return numerator(value).str() + "/" + denominator(value).str();
}

}  // namespace bananaworld
