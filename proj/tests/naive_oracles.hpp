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

// Brute-force reference implementations used only by tests. Nothing here
// calls into the library's sieve, admissibility or packing code.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

namespace naive {

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<std::int64_t> primes_to(std::int64_t limit) {
  std::vector<std::int64_t> out;
  for (std::int64_t n = 2; n <= limit; ++n)
    if (is_prime(n)) out.push_back(n);
  return out;
}

inline std::map<std::int64_t, std::int64_t> census(std::int64_t x, std::int64_t dmax) {
  std::map<std::int64_t, std::int64_t> counts;
  for (std::int64_t d = 2; d <= dmax; d += 2) counts[d] = 0;
  const auto ps = primes_to(x);
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (std::size_t j = i + 1; j < ps.size(); ++j) {
      const auto d = ps[j] - ps[i];
      if (d % 2 == 0 && d <= dmax) ++counts[d];
    }
  return counts;
}

// Scans every prime up to diameter + 1; primes beyond that see distinct residues
// for distinct offsets, so covering them would need more offsets than exist.
inline bool admissible(const std::vector<std::int64_t>& offsets) {
  const auto diameter = *std::max_element(offsets.begin(), offsets.end()) -
                        *std::min_element(offsets.begin(), offsets.end());
  for (auto p : primes_to(diameter + 1)) {
    std::set<std::int64_t> residues;
    for (auto h : offsets) residues.insert(((h % p) + p) % p);
    if (static_cast<std::int64_t>(residues.size()) == p) return false;
  }
  return true;
}

inline std::set<std::int64_t> differences(const std::vector<std::int64_t>& offsets) {
  std::set<std::int64_t> d;
  for (auto a : offsets)
    for (auto b : offsets)
      if (b > a) d.insert(b - a);
  return d;
}

inline bool disjoint(const std::set<std::int64_t>& a, const std::set<std::int64_t>& b) {
  for (auto v : a)
    if (b.count(v)) return false;
  return true;
}

// Maximum packing over all 2^n subsets; ties go to the lexicographically
// smallest sorted index sequence.
inline std::vector<std::size_t> max_packing(const std::vector<std::set<std::int64_t>>& sets) {
  const std::size_t n = sets.size();
  std::vector<std::size_t> best;
  bool have = false;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<std::size_t> pick;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) pick.push_back(i);
    bool ok = true;
    for (std::size_t a = 0; a < pick.size() && ok; ++a)
      for (std::size_t b = a + 1; b < pick.size() && ok; ++b)
        ok = disjoint(sets[pick[a]], sets[pick[b]]);
    if (!ok) continue;
    if (!have || pick.size() > best.size() || (pick.size() == best.size() && pick < best)) {
      best = pick;
      have = true;
    }
  }
  return best;
}

}  // namespace naive
