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

#include "ombm/rational.hpp"

#include <cmath>

#include "ombm/errors.hpp"

namespace ombm {

std::string fraction_string(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational rational_from_string(const std::string& text) {
  if (text.empty()) {
    throw ParseError("empty rational literal");
  }
  Rational value;
  if (value.set_str(text, 10) != 0) {
    throw ParseError("invalid rational literal '" + text + "'");
  }
  if (value.get_den() == 0) {
    throw ParseError("zero denominator in rational literal '" + text + "'");
  }
  value.canonicalize();
  return value;
}

Rational rational_from_double(double value) {
  if (!std::isfinite(value)) {
    throw ParseError("non-finite number cannot be represented as a rational");
  }
  return Rational(value);  // mpq_set_d is exact
}

double to_double(const Rational& value) { return value.get_d(); }

}  // namespace ombm
