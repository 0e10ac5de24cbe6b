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
#include <string>
#include <string_view>
#include <vector>

#include "polignac/admissible.hpp"
#include "polignac/rational.hpp"

namespace polignac {

enum class BoundKind { theorem2_lower, trivial_upper, k3_upper_asymptotic };

std::string_view to_string(BoundKind kind);

struct DensityBound {
  BoundKind kind;
  std::int64_t k;
  Rational value;
};

/// 2 / ((k-1)((k-1)(k-2)+2) P(k)): the density of a maximal packing of
/// regular difference sets. Requires k >= 3.
DensityBound lower_bound_density(std::int64_t k);

/// 1 / (2(k-1)). Requires k >= 2.
DensityBound trivial_upper_bound_density(std::int64_t k);

/// 7/36, the asymptotic rate of k3_finite_upper_bound.
DensityBound k3_upper_asymptotic_density();

struct PackingMember {
  std::string label;
  std::int64_t index;         // n for constructed families, candidate position for the oracle
  AdmissibleTuple witness;    // an admissible pattern whose difference set is `diffs`
  DiffSet diffs;
};

struct PackingCertificate {
  std::int64_t k = 0;
  std::int64_t x = 0;
  std::vector<PackingMember> members;
  std::vector<Offset> covered;  // sorted union of member values
  std::size_t count = 0;
  Rational density;             // count / x
  std::size_t raw_count = 0;    // members generated before disjointness filtering

  std::vector<std::int64_t> indices() const;
};

/// Fills covered, count and density from members. raw_count is left alone.
void finalize_certificate(PackingCertificate& cert);

/// Re-checks every certificate invariant from scratch (pairwise
/// intersection, witness admissibility, bookkeeping). Throws InvariantViolation.
void validate_certificate(const PackingCertificate& cert);

/// True iff D_k^n and D_k^m share a value, i.e. i*m == j*n for some
/// 1 <= i < j <= k-1. Requires k >= 3 and 1 <= n < m.
bool regular_overlap(std::int64_t k, std::int64_t n, std::int64_t m);

struct GreedyOptions {
  std::int64_t max_candidates = 100'000'000;
};

/// First-fit over n = 1, 2, ..., floor(x / ((k-1)P(k))), keeping n when
/// D_k^n misses every set kept so far. Requires k >= 3, x >= 1.
PackingCertificate greedy_regular_packing(std::int64_t k, std::int64_t x,
                                          const GreedyOptions& options = {});

/// floor(2 floor(x/((k-1)P(k))) / ((k-1)(k-2)+2)) - 1, clamped at 0.
std::int64_t greedy_count_floor(std::int64_t k, std::int64_t x);

enum class GehStrategy { paper_literal, extended };

std::string_view to_string(GehStrategy strategy);

struct GehAssignment {
  std::int64_t x = 0;
  // slot i (1-based) at position i-1; zero exactly when 3 | i, otherwise the
  // multiples of 6 in [6, x-2] in decreasing order.
  std::vector<Offset> zero_padded_sequence;
  GehStrategy strategy = GehStrategy::paper_literal;

  std::int64_t slots() const { return static_cast<std::int64_t>(zero_padded_sequence.size()); }
  Offset at(std::int64_t i) const { return zero_padded_sequence.at(static_cast<std::size_t>(i - 1)); }
};

GehAssignment geh_assignment(std::int64_t x, GehStrategy strategy);

/// The 3-tuples {0, 2n, 2n + a_n} for 3 ∤ n, a_n != 0, with n <= floor(x/6)
/// (paper_literal) or n <= N (extended). Out-of-range tuples are dropped and
/// the rest filtered first-fit for disjointness; raw_count records how many
/// were generated. Requires x >= 2.
PackingCertificate geh_family(std::int64_t x, GehStrategy strategy);

/// floor(x/12) + floor((floor(x/2) - 2 floor(x/12)) / 3). Requires x >= 0.
std::int64_t k3_finite_upper_bound(std::int64_t x);

}  // namespace polignac
