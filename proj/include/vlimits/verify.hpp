// Copyright 2026 The vlimits Authors
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

// Invariant suites run by `vlimits verify` on a user graph. Each check is
// an identity between two independent computations.

#ifndef VLIMITS_VERIFY_HPP_
#define VLIMITS_VERIFY_HPP_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "vlimits/chipfire.hpp"
#include "vlimits/io.hpp"

namespace vlimits {

// mt19937_64 with plain modulo reduction, so draws are identical across
// standard libraries (std::uniform_int_distribution is not).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  // Uniform enough on [lo, hi] for test generation.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(engine_() % span);
  }
  bool coin() { return (engine_() & 1) != 0; }

 private:
  std::mt19937_64 engine_;
};

// Random admissible divisor on sub: vertex coefficients in [-c, c] and a
// chip on each chain with probability 1/2.
Divisor random_admissible(const SubdivisionPtr& sub, Rng& rng,
                          std::int64_t c = 2);
// f with f(v0) = 0 and the other values in [-r, r].
IntCochain0 random_cochain(const Graph& g, Rng& rng, std::int64_t r);

struct SuiteResult {
  std::string name;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::vector<std::string> messages;  // failures and skipped parts
  bool ok() const { return failures == 0; }
};

const std::vector<std::string>& suite_names();

// Throws std::invalid_argument for an unknown suite name.
SuiteResult run_suite(const std::string& name, const GraphDocument& doc,
                      std::uint64_t seed);

}  // namespace vlimits

#endif  // VLIMITS_VERIFY_HPP_
