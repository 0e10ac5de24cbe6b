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
#include <vector>

#include "polignac/admissible.hpp"
#include "polignac/packing.hpp"

namespace polignac {

struct PackingInstance {
  std::int64_t x = 0;
  std::vector<DiffSet> candidates;         // canonical order, no duplicates
  std::vector<AdmissibleTuple> witnesses;  // parallel to candidates

  /// Builds an instance from bare difference sets, sorting them canonically
  /// and reconstructing a witness pattern of size 2 or 3 for each. Throws
  /// InputError on duplicates, values outside [1, x], or a set that is not the
  /// difference set of an admissible pattern of size 2 or 3.
  static PackingInstance from_sets(std::int64_t x, std::vector<DiffSet> sets);
};

/// Every distinct difference set of an admissible {0, a, a+b} with a+b <= x.
/// Only k = 3 is supported.
PackingInstance enumerate_admissible_diffsets(std::int64_t k, std::int64_t x);

enum class TieBreak {
  /// The first optimum met by the (deterministic) search.
  search_order,
  /// The optimum whose sorted candidate positions are lexicographically
  /// smallest. Needs one feasibility proof per skipped candidate, which gets
  /// expensive beyond x ~ 100 for k = 3 instances.
  lexicographic,
};

struct OracleOptions {
  std::size_t max_candidates = 5000;
  TieBreak tie_break = TieBreak::search_order;
};

/// Exact maximum packing by branch and bound. The seed is the better of two
/// first-fit passes; the optimum is then certified by exhaustive search.
/// Throws InputError when the instance exceeds options.max_candidates.
PackingCertificate max_disjoint_packing(const PackingInstance& instance,
                                        const OracleOptions& options = {});

}  // namespace polignac
