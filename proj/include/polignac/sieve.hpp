// Copyright 2026 The polignac Authors
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

#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace polignac {

using BigInt = boost::multiprecision::cpp_int;

struct PrimeTable {
  std::uint64_t limit = 0;
  std::vector<std::uint64_t> primes;  // strictly increasing, every prime <= limit
};

/// Sieve of Eratosthenes over odd numbers. Empty table for limit < 2.
PrimeTable primes_up_to(std::uint64_t limit);

/// Product of all primes <= k. Throws InputError for k < 1.
BigInt primorial(std::int64_t k);

struct CensusReport {
  std::uint64_t x = 0;
  std::uint64_t dmax = 0;
  // even d in [2, dmax] -> #{(p, q) prime : p < q <= x, q - p = d}
  std::map<std::uint64_t, std::uint64_t> counts;
};

struct CensusOptions {
  std::uint64_t max_x = 100'000'000;
};

/// Counts prime pairs at each even difference up to dmax.
/// Requires x >= 2, dmax >= 2 even, x <= options.max_x.
CensusReport prime_pair_census(std::uint64_t x, std::uint64_t dmax,
                               const CensusOptions& options = {});

}  // namespace polignac
