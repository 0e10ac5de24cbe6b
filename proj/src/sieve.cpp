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

#include "polignac/sieve.hpp"

#include <string>

#include "polignac/errors.hpp"

namespace polignac {

namespace {

// is_prime[i] for i in [0, limit].
std::vector<bool> sieve_flags(std::uint64_t limit) {
  std::vector<bool> flags(limit + 1, true);
  flags[0] = false;
  if (limit >= 1) flags[1] = false;
  for (std::uint64_t i = 4; i <= limit; i += 2) flags[i] = false;
  for (std::uint64_t p = 3; p * p <= limit; p += 2) {
    if (!flags[p]) continue;
    for (std::uint64_t m = p * p; m <= limit; m += 2 * p) flags[m] = false;
  }
  return flags;
}

}  // namespace

PrimeTable primes_up_to(std::uint64_t limit) {
  PrimeTable table;
  table.limit = limit;
  if (limit < 2) return table;

  // odd-only sieve: bit i represents 2i + 1
  const std::uint64_t half = (limit - 1) / 2 + 1;
  std::vector<bool> composite(half, false);
  for (std::uint64_t i = 1; (2 * i + 1) * (2 * i + 1) <= limit; ++i) {
    if (composite[i]) continue;
    const std::uint64_t p = 2 * i + 1;
    for (std::uint64_t j = (p * p) / 2; j < half; j += p) composite[j] = true;
  }

  table.primes.push_back(2);
  for (std::uint64_t i = 1; i < half; ++i)
    if (!composite[i]) table.primes.push_back(2 * i + 1);
  return table;
}

BigInt primorial(std::int64_t k) {
  if (k < 1) throw InputError("primorial: k must be >= 1, got " + std::to_string(k));
  BigInt product = 1;
  for (auto p : primes_up_to(static_cast<std::uint64_t>(k)).primes) product *= p;
  return product;
}

CensusReport prime_pair_census(std::uint64_t x, std::uint64_t dmax,
                               const CensusOptions& options) {
  if (x < 2) throw InputError("census: x must be >= 2");
  if (dmax < 2 || dmax % 2 != 0) throw InputError("census: dmax must be a positive even integer");
  if (x > options.max_x)
    throw InputError("census: x exceeds the configured limit " + std::to_string(options.max_x));

  CensusReport report;
  report.x = x;
  report.dmax = dmax;
  for (std::uint64_t d = 2; d <= dmax; d += 2) report.counts[d] = 0;

  const auto flags = sieve_flags(x);
  // p = 2 pairs only with odd differences, none of which are counted.
  for (std::uint64_t p = 3; p <= x; p += 2) {
    if (!flags[p]) continue;
    for (std::uint64_t d = 2; d <= dmax && p + d <= x; d += 2)
      if (flags[p + d]) ++report.counts[d];
  }
  return report;
}

}  // namespace polignac
