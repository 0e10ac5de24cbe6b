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

#include "polignac/admissible.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "polignac/errors.hpp"
#include "polignac/sieve.hpp"

namespace polignac {

namespace {

template <typename Range>
std::string brace_list(const Range& values) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (auto v : values) {
    if (!first) os << ',';
    os << v;
    first = false;
  }
  os << '}';
  return os.str();
}

}  // namespace

AdmissibleTuple::AdmissibleTuple(std::vector<Offset> offsets) : offsets_(std::move(offsets)) {
  if (offsets_.empty()) throw InputError("offset pattern must be non-empty");
  if (offsets_.front() != 0) throw InputError("offset pattern must start at 0");
  for (std::size_t i = 1; i < offsets_.size(); ++i)
    if (offsets_[i] <= offsets_[i - 1])
      throw InputError("offset pattern must be strictly increasing");
}

std::string AdmissibleTuple::to_string() const { return brace_list(offsets_); }

DiffSet::DiffSet(std::vector<Offset> values) : values_(std::move(values)) {
  std::sort(values_.begin(), values_.end());
  values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
  if (!values_.empty() && values_.front() <= 0)
    throw InputError("difference set values must be positive");
}

bool DiffSet::contains(Offset v) const {
  return std::binary_search(values_.begin(), values_.end(), v);
}

bool DiffSet::intersects(const DiffSet& other) const {
  auto a = values_.begin();
  auto b = other.values_.begin();
  while (a != values_.end() && b != other.values_.end()) {
    if (*a == *b) return true;
    if (*a < *b) ++a; else ++b;
  }
  return false;
}

std::string DiffSet::to_string() const { return brace_list(values_); }

std::strong_ordering operator<=>(const DiffSet& a, const DiffSet& b) {
  if (auto c = a.span() <=> b.span(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.values_.begin(), a.values_.end(),
                                                b.values_.begin(), b.values_.end());
}

AdmissibleTuple normalize(std::span<const Offset> raw) {
  if (raw.empty()) throw InputError("normalize: empty offset list");
  std::vector<Offset> v(raw.begin(), raw.end());
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  const Offset base = v.front();
  // differences of int64 values may not fit; compute in unsigned and check
  for (auto& o : v) {
    const auto shifted = static_cast<std::uint64_t>(o) - static_cast<std::uint64_t>(base);
    if (shifted > static_cast<std::uint64_t>(std::numeric_limits<Offset>::max()))
      throw InputError("normalize: pattern diameter exceeds 64-bit range");
    o = static_cast<Offset>(shifted);
  }
  return AdmissibleTuple(std::move(v));
}

bool is_admissible(const AdmissibleTuple& tuple) {
  const auto k = tuple.size();
  std::vector<bool> hit;
  for (auto p64 : primes_up_to(k).primes) {
    const auto p = static_cast<Offset>(p64);
    hit.assign(static_cast<std::size_t>(p), false);
    std::size_t distinct = 0;
    for (auto h : tuple.offsets()) {
      auto r = static_cast<std::size_t>(h % p);
      if (!hit[r]) {
        hit[r] = true;
        ++distinct;
      }
    }
    if (distinct == static_cast<std::size_t>(p)) return false;
  }
  return true;
}

DiffSet difference_set(const AdmissibleTuple& tuple) {
  const auto h = tuple.offsets();
  std::vector<Offset> d;
  d.reserve(h.size() * (h.size() - 1) / 2);
  for (std::size_t i = 0; i < h.size(); ++i)
    for (std::size_t j = i + 1; j < h.size(); ++j) d.push_back(h[j] - h[i]);
  return DiffSet(std::move(d));
}

AdmissibleTuple regular_admissible(std::int64_t k, std::int64_t n) {
  if (k < 2) throw InputError("regular_admissible: k must be >= 2");
  if (n < 1) throw InputError("regular_admissible: n must be >= 1");
  const BigInt step = BigInt(n) * primorial(k);
  if (step * (k - 1) > std::numeric_limits<Offset>::max())
    throw InputError("regular_admissible: offsets exceed 64-bit range");
  const auto s = static_cast<Offset>(step);
  std::vector<Offset> offsets;
  offsets.reserve(static_cast<std::size_t>(k));
  for (std::int64_t i = 0; i < k; ++i) offsets.push_back(i * s);
  return AdmissibleTuple(std::move(offsets));
}

}  // namespace polignac
