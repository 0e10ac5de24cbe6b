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

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace polignac {

using Offset = std::int64_t;

/// A normalized offset pattern: strictly increasing, first element 0.
/// Holding one does not imply the pattern is admissible; see is_admissible.
class AdmissibleTuple {
 public:
  /// Validates an already-normalized sequence. Throws InputError otherwise.
  explicit AdmissibleTuple(std::vector<Offset> offsets);

  std::span<const Offset> offsets() const { return offsets_; }
  std::size_t size() const { return offsets_.size(); }
  Offset diameter() const { return offsets_.back(); }

  std::string to_string() const;

  friend bool operator==(const AdmissibleTuple&, const AdmissibleTuple&) = default;

 private:
  std::vector<Offset> offsets_;
};

/// Positive pairwise differences of a pattern, kept sorted and unique.
class DiffSet {
 public:
  DiffSet() = default;
  /// Sorts and deduplicates; every value must be positive.
  explicit DiffSet(std::vector<Offset> values);

  std::span<const Offset> values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }
  /// Largest value, 0 for the empty set.
  Offset span() const { return values_.empty() ? 0 : values_.back(); }

  bool contains(Offset v) const;
  bool intersects(const DiffSet& other) const;
  std::string to_string() const;

  friend bool operator==(const DiffSet&, const DiffSet&) = default;
  // Canonical order: by largest value, then lexicographically.
  friend std::strong_ordering operator<=>(const DiffSet& a, const DiffSet& b);

 private:
  std::vector<Offset> values_;
};

/// Sort, dedupe and translate so the minimum is 0. Throws InputError on empty input.
AdmissibleTuple normalize(std::span<const Offset> raw);

/// True iff no prime p has every residue class mod p hit by the offsets.
/// Only primes p <= k are inspected; k offsets cannot cover more than k classes.
bool is_admissible(const AdmissibleTuple& tuple);

DiffSet difference_set(const AdmissibleTuple& tuple);

/// {0, nP(k), 2nP(k), ..., (k-1)nP(k)}. Throws InputError for k < 2, n < 1,
/// or when the largest offset does not fit in 64 bits.
AdmissibleTuple regular_admissible(std::int64_t k, std::int64_t n);

}  // namespace polignac
