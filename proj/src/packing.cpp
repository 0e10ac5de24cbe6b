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

#include "polignac/packing.hpp"

#include <algorithm>
#include <string>

#include "polignac/errors.hpp"
#include "polignac/sieve.hpp"

namespace polignac {

namespace {

__extension__ using Wide = __int128;

// floor(x / ((k-1) P(k))), the number of regular sets whose differences fit in [1, x].
BigInt regular_candidate_count(std::int64_t k, std::int64_t x) {
  return BigInt(x) / (BigInt(k - 1) * primorial(k));
}

}  // namespace

std::string_view to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::theorem2_lower: return "theorem2_lower";
    case BoundKind::trivial_upper: return "trivial_upper";
    case BoundKind::k3_upper_asymptotic: return "k3_upper_asymptotic";
  }
  return "unknown";
}

std::string_view to_string(GehStrategy strategy) {
  return strategy == GehStrategy::paper_literal ? "paper-literal" : "extended";
}

DensityBound lower_bound_density(std::int64_t k) {
  if (k < 3) throw InputError("lower bound density requires k >= 3, got " + std::to_string(k));
  const BigInt km1 = k - 1;
  const BigInt denom = km1 * (km1 * (k - 2) + 2) * primorial(k);
  return {BoundKind::theorem2_lower, k, Rational(BigInt(2), denom)};
}

DensityBound trivial_upper_bound_density(std::int64_t k) {
  if (k < 2) throw InputError("trivial upper bound requires k >= 2, got " + std::to_string(k));
  return {BoundKind::trivial_upper, k, Rational(BigInt(1), BigInt(2) * (k - 1))};
}

DensityBound k3_upper_asymptotic_density() {
  return {BoundKind::k3_upper_asymptotic, 3, Rational(BigInt(7), BigInt(36))};
}

std::vector<std::int64_t> PackingCertificate::indices() const {
  std::vector<std::int64_t> out;
  out.reserve(members.size());
  for (const auto& m : members) out.push_back(m.index);
  return out;
}

void finalize_certificate(PackingCertificate& cert) {
  cert.covered.clear();
  for (const auto& m : cert.members)
    cert.covered.insert(cert.covered.end(), m.diffs.values().begin(), m.diffs.values().end());
  std::sort(cert.covered.begin(), cert.covered.end());
  cert.count = cert.members.size();
  cert.density = cert.x > 0 ? Rational(BigInt(cert.count), BigInt(cert.x)) : Rational(0);
}

void validate_certificate(const PackingCertificate& cert) {
  auto fail = [](const std::string& what) { throw InvariantViolation("certificate: " + what); };

  std::vector<Offset> all;
  for (const auto& m : cert.members) {
    if (m.diffs.empty()) fail("member " + m.label + " has an empty difference set");
    if (m.diffs.values().front() < 1 || m.diffs.span() > cert.x)
      fail("member " + m.label + " leaves [1, x]");
    if (!is_admissible(m.witness)) fail("witness of " + m.label + " is not admissible");
    if (difference_set(m.witness) != m.diffs)
      fail("witness of " + m.label + " does not generate its difference set");
    all.insert(all.end(), m.diffs.values().begin(), m.diffs.values().end());
  }
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end())
    fail("members are not pairwise disjoint");
  if (all != cert.covered) fail("covered is not the union of member values");
  if (cert.count != cert.members.size()) fail("count does not match members");
  if (cert.count > cert.raw_count) fail("count exceeds raw_count");
  if (cert.x < 1 || cert.density != Rational(BigInt(cert.count), BigInt(cert.x)))
    fail("density is not count/x");
}

bool regular_overlap(std::int64_t k, std::int64_t n, std::int64_t m) {
  if (k < 3) throw InputError("regular_overlap: k must be >= 3");
  if (n < 1 || n >= m) throw InputError("regular_overlap: requires 1 <= n < m");
  // For each j, the only i with i*m == j*n is j*n/m; n < m forces i < j.
  for (std::int64_t j = 2; j <= k - 1; ++j) {
    const auto jn = static_cast<Wide>(j) * n;
    if (jn >= m && jn % m == 0) return true;
  }
  return false;
}

std::int64_t greedy_count_floor(std::int64_t k, std::int64_t x) {
  if (k < 3) throw InputError("greedy_count_floor: k must be >= 3");
  const BigInt candidates = regular_candidate_count(k, x);
  const BigInt conflicts = BigInt(k - 1) * (k - 2) + 2;
  return static_cast<std::int64_t>(BigInt(2) * candidates / conflicts) - 1;
}

PackingCertificate greedy_regular_packing(std::int64_t k, std::int64_t x,
                                          const GreedyOptions& options) {
  if (k < 3) throw InputError("greedy_regular_packing: k must be >= 3");
  if (x < 1) throw InputError("greedy_regular_packing: x must be >= 1");

  PackingCertificate cert;
  cert.k = k;
  cert.x = x;
  const BigInt big_n = regular_candidate_count(k, x);
  if (big_n > options.max_candidates)
    throw InputError("greedy_regular_packing: " + big_n.str() +
                     " candidates exceed the configured limit");
  const auto n_max = static_cast<std::int64_t>(big_n);
  cert.raw_count = static_cast<std::size_t>(n_max);

  if (n_max > 0) {
    // nonzero n_max means (k-1) P(k) <= x, so P(k) fits in 64 bits
    const auto step = static_cast<Offset>(primorial(k));
    // used[v] marks the difference v * P(k)
    std::vector<bool> used(static_cast<std::size_t>((k - 1) * n_max + 1), false);
    for (std::int64_t n = 1; n <= n_max; ++n) {
      bool clash = false;
      for (std::int64_t i = 1; i < k && !clash; ++i) clash = used[static_cast<std::size_t>(i * n)];
      if (clash) continue;

      std::vector<Offset> offsets;
      offsets.reserve(static_cast<std::size_t>(k));
      for (std::int64_t i = 0; i < k; ++i) {
        offsets.push_back(i * n * step);
        if (i > 0) used[static_cast<std::size_t>(i * n)] = true;
      }
      AdmissibleTuple witness(std::move(offsets));
      DiffSet diffs = difference_set(witness);
      cert.members.push_back({"n=" + std::to_string(n), n, std::move(witness), std::move(diffs)});
    }
  }
  finalize_certificate(cert);
  return cert;
}

GehAssignment geh_assignment(std::int64_t x, GehStrategy strategy) {
  if (x < 2) throw InputError("geh: x must be >= 2");
  GehAssignment a;
  a.x = x;
  a.strategy = strategy;
  const std::int64_t multiples = x >= 8 ? (x - 2) / 6 : 0;
  if (multiples == 0) return a;

  // slot of the t-th non-multiple of 3 is t + (t-1)/2
  const std::int64_t slots = multiples + (multiples - 1) / 2;
  a.zero_padded_sequence.reserve(static_cast<std::size_t>(slots));
  std::int64_t next = multiples;
  for (std::int64_t i = 1; i <= slots; ++i)
    a.zero_padded_sequence.push_back(i % 3 == 0 ? 0 : 6 * next--);
  return a;
}

PackingCertificate geh_family(std::int64_t x, GehStrategy strategy) {
  const GehAssignment assignment = geh_assignment(x, strategy);

  PackingCertificate cert;
  cert.k = 3;
  cert.x = x;
  std::int64_t n_max = assignment.slots();
  if (strategy == GehStrategy::paper_literal) n_max = std::min(n_max, x / 6);

  std::vector<bool> used(static_cast<std::size_t>(x) + 1, false);
  for (std::int64_t n = 1; n <= n_max; ++n) {
    const Offset a_n = assignment.at(n);
    if (n % 3 == 0 || a_n == 0) continue;
    ++cert.raw_count;
    if (2 * n + a_n > x) continue;

    AdmissibleTuple witness({0, 2 * n, 2 * n + a_n});
    if (!is_admissible(witness))
      throw InvariantViolation("geh: generated pattern " + witness.to_string() +
                               " is not admissible");
    DiffSet diffs = difference_set(witness);
    const auto vals = diffs.values();
    if (std::any_of(vals.begin(), vals.end(),
                    [&](Offset v) { return used[static_cast<std::size_t>(v)]; }))
      continue;
    for (auto v : vals) used[static_cast<std::size_t>(v)] = true;
    cert.members.push_back({"n=" + std::to_string(n), n, std::move(witness), std::move(diffs)});
  }
  finalize_certificate(cert);
  return cert;
}

std::int64_t k3_finite_upper_bound(std::int64_t x) {
  if (x < 0) throw InputError("k3_finite_upper_bound: x must be >= 0");
  const std::int64_t regular = x / 12;
  return regular + (x / 2 - 2 * regular) / 3;
}

}  // namespace polignac
