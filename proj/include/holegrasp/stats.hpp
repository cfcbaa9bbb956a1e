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

#pragma once

#include <string>
#include <vector>

namespace holegrasp {

struct TrialRecord {
  int successes = 0;
  int trials = 0;
  double z = 1.96;
};

struct ConfidenceInterval {
  double lower = 0.0;
  double upper = 0.0;
};

// Wilson score interval for a binomial proportion, clamped to [0, 1].
// Throws DomainError when trials < 1, successes outside [0, trials] or z <= 0.
ConfidenceInterval wilson_ci(const TrialRecord& rec);

struct NamedRecord {
  std::string name;
  TrialRecord record;
};

struct NamedInterval {
  std::string name;
  TrialRecord record;
  ConfidenceInterval interval;
};

// Order preserved. A bad record raises DomainError prefixed with its name.
std::vector<NamedInterval> batch_ci(const std::vector<NamedRecord>& records);

}  // namespace holegrasp
