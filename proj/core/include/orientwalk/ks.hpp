// Copyright 2026 The orientwalk Authors.
//
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

#include <span>

namespace orientwalk {

struct KsResult {
  double statistic = 0.0;
  double p_value = 1.0;
};

/// Kolmogorov limit survival function Q(lambda) = P(sup|B| > lambda).
double kolmogorov_survival(double lambda);

/// Two-sample Kolmogorov-Smirnov test. The p-value is Q evaluated at
/// (sqrt(ne) + 0.12 + 0.11 / sqrt(ne)) D with ne = n m / (n + m), Stephens'
/// small-sample correction to the asymptotic law.
KsResult ks_two_sample(std::span<const double> a, std::span<const double> b);

}  // namespace orientwalk
