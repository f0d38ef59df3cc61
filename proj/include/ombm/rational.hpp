// Copyright 2026 The OMBM Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <gmpxx.h>

#include <string>

namespace ombm {

// Exact rational arithmetic everywhere an analysis result is asserted;
// floats appear only in Monte Carlo summaries.
using Rational = mpq_class;
using Integer = mpz_class;

/// num/den reduced to lowest terms. The two-argument mpq_class constructor
/// does not canonicalize on its own.
inline Rational make_ratio(long num, long den) {
  Rational value(num, den);
  value.canonicalize();
  return value;
}

/// Renders "num/den", keeping unit denominators ("1/1", "5/4").
std::string fraction_string(const Rational& value);

/// Accepts "num/den" or a bare integer, base 10. Throws ParseError otherwise.
Rational rational_from_string(const std::string& text);

/// Exact conversion; every finite binary64 is a dyadic rational.
/// Throws ParseError for NaN or infinities.
Rational rational_from_double(double value);

double to_double(const Rational& value);

}  // namespace ombm
