// Copyright 2026 The Mereo Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mereo/bekenstein.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace mereo {

BekensteinBound bekenstein_bound(double r, double newton_g) {
  if (newton_g <= 0.0) throw std::invalid_argument("Newton constant must be positive");
  if (r < 0.0) throw std::invalid_argument("radius must be nonnegative");
  const double s = std::numbers::pi * r * r / newton_g;
  return BekensteinBound{s, s};
}

std::string bekenstein_presentation(double s_bh) {
  std::ostringstream out;
  if (s_bh >= 1e6) {
    // Order-of-magnitude rendering of the inner exponent.
    out << "e^(e^" << static_cast<long long>(std::llround(std::log10(s_bh))) << ")";
  } else {
    out << "e^(e^" << s_bh << ")";
  }
  return out.str();
}

}  // namespace mereo
