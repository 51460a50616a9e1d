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

#pragma once

#include <string>

namespace mereo {

struct BekensteinBound {
  double s_bh;              // horizon entropy pi r^2 / G (hbar = c = 1)
  double loglog_dim_bound;  // ln ln of the dimension bound exp(exp(s_bh)); equals s_bh
};

/// Entropy bound for a spherical region of radius r and the induced
/// dimension bound dim <= exp(exp(S_BH)), reported in log-log form only:
/// the double exponential overflows for any interesting input and is never
/// formed.
BekensteinBound bekenstein_bound(double r, double newton_g);

/// Human-readable "e^(e^X)" rendering of the dimension bound. For large
/// entropies the inner exponent is shown as an order of magnitude
/// (log10 of S_BH), e.g. S_BH ~ 1e123 renders as "e^(e^123)".
std::string bekenstein_presentation(double s_bh);

}  // namespace mereo
