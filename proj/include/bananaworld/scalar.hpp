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

#ifndef BANANAWORLD_SCALAR_HPP
#define BANANAWORLD_SCALAR_HPP

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace bananaworld {

/// Exact rational scalar. Expression templates are disabled so that `auto`
/// always binds a value.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

/// Parses "num/den" or an integer into a canonical rational.
/// Throws ParseError on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "num/den" text; the denominator is always present ("1/1", "0/1").
std::string format_rational(const Rational &value);

template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool kExact = true;
  static constexpr std::string_view kName = "rational";
  static Rational default_tolerance() { return Rational(0); }
  static double to_double(const Rational &v) { return v.convert_to<double>(); }
};

template <>
struct ScalarTraits<double> {
  static constexpr bool kExact = false;
  static constexpr std::string_view kName = "float";
  static double default_tolerance() { return 1e-9; }
  static double to_double(double v) { return v; }
};

template <class T>
concept Scalar = requires { ScalarTraits<T>::kExact; };

template <Scalar T>
T magnitude(const T &v) {
  return v < 0 ? T(-v) : v;
}

template <Scalar T>
double to_double(const T &v) {
  return ScalarTraits<T>::to_double(v);
}

}  // namespace bananaworld

#endif  // BANANAWORLD_SCALAR_HPP
