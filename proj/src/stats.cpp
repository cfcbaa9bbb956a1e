// Copyright 2026 The holegrasp Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "holegrasp/stats.hpp"

#include <algorithm>
#include <cmath>

#include "holegrasp/geometry.hpp"

namespace holegrasp {

ConfidenceInterval wilson_ci(const TrialRecord& rec) {
  if (rec.trials < 1) throw DomainError("trials must be >= 1");
  if (rec.successes < 0 || rec.successes > rec.trials)
    throw DomainError("successes must lie in [0, trials]");
  if (!(std::isfinite(rec.z) && rec.z > 0.0)) throw DomainError("z must be > 0");

  const double n = rec.trials;
  const double p = rec.successes / n;
  const double z2 = rec.z * rec.z;
  const double center = p + z2 / (2.0 * n);
  const double spread = rec.z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n));
  const double denom = 1.0 + z2 / n;
  ConfidenceInterval ci{std::clamp((center - spread) / denom, 0.0, 1.0),
                        std::clamp((center + spread) / denom, 0.0, 1.0)};
  // Both bounds are exact at the extremes; rounding would otherwise leave ~1e-17.
  if (rec.successes == 0) ci.lower = 0.0;
  if (rec.successes == rec.trials) ci.upper = 1.0;
  return ci;
}

std::vector<NamedInterval> batch_ci(const std::vector<NamedRecord>& records) {
  std::vector<NamedInterval> out;
  out.reserve(records.size());
  for (const auto& r : records) {
    try {
      out.push_back({r.name, r.record, wilson_ci(r.record)});
    } catch (const DomainError& e) {
      throw DomainError(r.name + ": " + e.what());
    }
  }
  return out;
}

}  // namespace holegrasp
