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

#include "polignac/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "polignac/errors.hpp"

namespace polignac {

namespace {

std::optional<AdmissibleTuple> reconstruct_witness(const DiffSet& d) {
  const auto v = d.values();
  std::vector<std::vector<Offset>> options;
  if (v.size() == 1) {
    options.push_back({0, v[0]});
  } else if (v.size() == 2 && v[1] == 2 * v[0]) {
    options.push_back({0, v[0], v[1]});
  } else if (v.size() == 3 && v[0] + v[1] == v[2]) {
    options.push_back({0, v[0], v[2]});
    options.push_back({0, v[1], v[2]});
  }
  for (auto& o : options) {
    AdmissibleTuple t(std::move(o));
    if (is_admissible(t)) return t;
  }
  return std::nullopt;
}

// Bitset over the compressed universe of candidate values.
using Mask = std::vector<std::uint64_t>;
using Pool = std::vector<std::size_t>;

constexpr int kModulus = 4;

// Exact maximum set packing. Search branches on the free element with the
// fewest candidates (cover it with one of them, or leave it uncovered).
// Pruning uses a relaxation over candidate classes (size, hits in a fixed
// hitting set, value sum mod 4): chosen sets need distinct elements, distinct
// hitting-set elements, and when at most one free element stays uncovered the
// value sums must balance mod 4.
class PackingSolver {
 public:
  explicit PackingSolver(const PackingInstance& instance) {
    std::vector<Offset> universe;
    for (const auto& c : instance.candidates)
      universe.insert(universe.end(), c.values().begin(), c.values().end());
    std::sort(universe.begin(), universe.end());
    universe.erase(std::unique(universe.begin(), universe.end()), universe.end());
    words_ = (universe.size() + 63) / 64;
    for (auto v : universe) residue_of_element_.push_back(static_cast<int>(v % kModulus));

    for (const auto& c : instance.candidates) {
      Item item;
      item.mask.assign(words_, 0);
      int sum = 0;
      for (auto v : c.values()) {
        const auto e = static_cast<std::size_t>(
            std::lower_bound(universe.begin(), universe.end(), v) - universe.begin());
        item.mask[e / 64] |= std::uint64_t{1} << (e % 64);
        sum = (sum + static_cast<int>(v % kModulus)) % kModulus;
      }
      item.size = static_cast<int>(c.size());
      item.residue = sum;
      items_.push_back(std::move(item));
    }
    hitting_ = greedy_hitting_set();
    for (auto& item : items_) item.hits = popcount(intersect(item.mask, hitting_));
  }

  /// Sorted candidate indices of a maximum packing.
  std::vector<std::size_t> solve(TieBreak tie_break) {
    Pool all(items_.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;

    best_count_ = seed_lower_bound() - 1;
    std::vector<std::size_t> chosen;
    maximize(all, chosen);
    if (tie_break == TieBreak::search_order) {
      std::sort(best_.begin(), best_.end());
      return best_;
    }

    // Fix candidates in canonical order whenever the optimum stays reachable
    // from the candidates after them.
    const auto optimum = static_cast<std::size_t>(best_count_);
    std::vector<std::size_t> result;
    Pool pool = all;
    while (result.size() < optimum) {
      const auto c = pool.front();
      Pool rest;
      for (std::size_t j = 1; j < pool.size(); ++j)
        if (disjoint(items_[c].mask, items_[pool[j]].mask)) rest.push_back(pool[j]);
      if (reachable(rest, optimum - result.size() - 1)) {
        result.push_back(c);
        pool = std::move(rest);
      } else {
        pool.erase(pool.begin());
      }
    }
    return result;
  }

 private:
  struct Item {
    Mask mask;
    int size = 0;
    int hits = 0;
    int residue = 0;
  };

  static int popcount(const Mask& m) {
    int n = 0;
    for (auto w : m) n += std::popcount(w);
    return n;
  }
  Mask intersect(const Mask& a, const Mask& b) const {
    Mask r(words_);
    for (std::size_t w = 0; w < words_; ++w) r[w] = a[w] & b[w];
    return r;
  }
  bool disjoint(const Mask& a, const Mask& b) const {
    for (std::size_t w = 0; w < words_; ++w)
      if (a[w] & b[w]) return false;
    return true;
  }
  static bool has(const Mask& m, std::size_t e) { return (m[e / 64] >> (e % 64)) & 1; }

  Mask union_of(const Pool& pool) const {
    Mask u(words_, 0);
    for (auto c : pool)
      for (std::size_t w = 0; w < words_; ++w) u[w] |= items_[c].mask[w];
    return u;
  }

  Mask greedy_hitting_set() const {
    Mask hit(words_, 0);
    std::vector<bool> done(items_.size(), false);
    std::size_t remaining = items_.size();
    while (remaining > 0) {
      std::vector<std::size_t> freq(words_ * 64, 0);
      for (std::size_t c = 0; c < items_.size(); ++c) {
        if (done[c]) continue;
        for (std::size_t w = 0; w < words_; ++w)
          for (auto bits = items_[c].mask[w]; bits; bits &= bits - 1)
            ++freq[w * 64 + static_cast<std::size_t>(std::countr_zero(bits))];
      }
      const auto e = static_cast<std::size_t>(
          std::max_element(freq.begin(), freq.end()) - freq.begin());
      hit[e / 64] |= std::uint64_t{1} << (e % 64);
      for (std::size_t c = 0; c < items_.size(); ++c) {
        if (!done[c] && has(items_[c].mask, e)) {
          done[c] = true;
          --remaining;
        }
      }
    }
    return hit;
  }

  std::ptrdiff_t seed_lower_bound() const {
    auto first_fit = [&](const Pool& order) {
      Mask used(words_, 0);
      std::ptrdiff_t n = 0;
      for (auto c : order) {
        if (!disjoint(used, items_[c].mask)) continue;
        for (std::size_t w = 0; w < words_; ++w) used[w] |= items_[c].mask[w];
        ++n;
      }
      return n;
    };
    Pool canonical(items_.size());
    for (std::size_t i = 0; i < canonical.size(); ++i) canonical[i] = i;
    Pool by_size = canonical;
    std::stable_sort(by_size.begin(), by_size.end(), [&](std::size_t a, std::size_t b) {
      return items_[a].size < items_[b].size;
    });
    return std::max(first_fit(canonical), first_fit(by_size));
  }

  // Relaxation: can `need` pairwise disjoint members of `pool` exist?
  bool could_reach(const Pool& pool, std::size_t need) const {
    if (need == 0) return true;
    if (pool.size() < need) return false;

    const Mask free = union_of(pool);
    const int free_count = popcount(free);
    const int hit_budget = popcount(intersect(free, hitting_));
    int free_sum = 0;
    unsigned free_residues = 0;
    for (std::size_t w = 0; w < words_; ++w)
      for (auto bits = free[w]; bits; bits &= bits - 1) {
        const int r = residue_of_element_[w * 64 + static_cast<std::size_t>(std::countr_zero(bits))];
        free_sum = (free_sum + r) % kModulus;
        free_residues |= 1u << r;
      }

    struct Group {
      int size, hits;
      std::size_t avail = 0;
      std::size_t by_residue[kModulus] = {};
    };
    std::vector<Group> groups;
    for (auto c : pool) {
      const auto& it = items_[c];
      auto g = std::find_if(groups.begin(), groups.end(),
                            [&](const Group& q) { return q.size == it.size && q.hits == it.hits; });
      if (g == groups.end()) {
        groups.push_back(Group{it.size, it.hits});
        g = groups.end() - 1;
      }
      ++g->avail;
      ++g->by_residue[it.residue];
    }
    std::sort(groups.begin(), groups.end(), [](const Group& a, const Group& b) {
      return std::pair(a.size, a.hits) < std::pair(b.size, b.hits);
    });

    // residue_reach[g][n]: residues of sums of n members drawn from group g
    std::vector<std::vector<unsigned>> residue_reach(groups.size());
    auto reach_of = [&](std::size_t g, std::size_t n) {
      auto& table = residue_reach[g];
      if (table.empty()) {
        table.assign(need + 1, 0);
        table[0] = 1;
        for (int r = 0; r < kModulus; ++r) {
          std::vector<unsigned> next(need + 1, 0);
          for (std::size_t have = 0; have <= need; ++have) {
            if (!table[have]) continue;
            for (std::size_t m = 0; m <= groups[g].by_residue[r] && have + m <= need; ++m) {
              const int shift = static_cast<int>((m * static_cast<std::size_t>(r)) % kModulus);
              const unsigned rotated =
                  ((table[have] << shift) | (table[have] >> (kModulus - shift))) & 0xF;
              next[have + m] |= rotated;
            }
          }
          table = std::move(next);
        }
      }
      return table[n];
    };

    std::vector<std::size_t> counts(groups.size(), 0);
    auto search = [&](auto&& self, std::size_t g, std::size_t left, int size_used,
                      int hits_used) -> bool {
      if (g == groups.size()) {
        if (left != 0) return false;
        const int waste = free_count - size_used;
        if (waste >= 2) return true;
        unsigned sums = 1;
        for (std::size_t i = 0; i < groups.size(); ++i) {
          const unsigned r = reach_of(i, counts[i]);
          unsigned combined = 0;
          for (int a = 0; a < kModulus; ++a)
            if (sums >> a & 1)
              for (int b = 0; b < kModulus; ++b)
                if (r >> b & 1) combined |= 1u << ((a + b) % kModulus);
          sums = combined;
        }
        for (int s = 0; s < kModulus; ++s) {
          if (!(sums >> s & 1)) continue;
          const int leftover = ((free_sum - s) % kModulus + kModulus) % kModulus;
          if (waste == 0 && leftover == 0) return true;
          if (waste == 1 && (free_residues >> leftover & 1)) return true;
        }
        return false;
      }
      // groups are sorted by size, so the remainder costs at least left * size
      if (size_used + static_cast<int>(left) * groups[g].size > free_count) return false;
      const std::size_t top = std::min(left, groups[g].avail);
      for (std::size_t n = top + 1; n-- > 0;) {
        const int s = size_used + static_cast<int>(n) * groups[g].size;
        const int h = hits_used + static_cast<int>(n) * groups[g].hits;
        if (s > free_count || h > hit_budget) continue;
        counts[g] = n;
        if (self(self, g + 1, left - n, s, h)) return true;
      }
      counts[g] = 0;
      return false;
    };
    return search(search, 0, need, 0, 0);
  }

  // Free element contained in the fewest pool members.
  std::size_t branch_element(const Pool& pool) const {
    std::vector<std::size_t> freq(words_ * 64, 0);
    for (auto c : pool)
      for (std::size_t w = 0; w < words_; ++w)
        for (auto bits = items_[c].mask[w]; bits; bits &= bits - 1)
          ++freq[w * 64 + static_cast<std::size_t>(std::countr_zero(bits))];
    std::size_t best = 0, best_freq = SIZE_MAX;
    for (std::size_t e = 0; e < freq.size(); ++e)
      if (freq[e] > 0 && freq[e] < best_freq) {
        best = e;
        best_freq = freq[e];
      }
    return best;
  }

  template <typename Visit>
  void branch(const Pool& pool, Visit&& visit) const {
    const auto e = branch_element(pool);
    // least-conflicting covers first, so early dives land near the optimum
    std::vector<std::pair<std::size_t, std::size_t>> covers;
    for (auto c : pool) {
      if (!has(items_[c].mask, e)) continue;
      std::size_t conflicts = 0;
      for (auto d : pool) conflicts += !disjoint(items_[c].mask, items_[d].mask);
      covers.emplace_back(conflicts, c);
    }
    std::sort(covers.begin(), covers.end());
    for (auto [conflicts, c] : covers) {
      Pool next;
      for (auto d : pool)
        if (d != c && disjoint(items_[c].mask, items_[d].mask)) next.push_back(d);
      if (visit(&c, next)) return;
    }
    Pool next;
    for (auto d : pool)
      if (!has(items_[d].mask, e)) next.push_back(d);
    visit(nullptr, next);
  }

  void maximize(const Pool& pool, std::vector<std::size_t>& chosen) {
    if (static_cast<std::ptrdiff_t>(chosen.size()) > best_count_) {
      best_count_ = static_cast<std::ptrdiff_t>(chosen.size());
      best_ = chosen;
    }
    if (pool.empty()) return;
    const auto need = static_cast<std::size_t>(best_count_ + 1) - chosen.size();
    if (!could_reach(pool, need)) return;
    branch(pool, [&](const std::size_t* c, const Pool& next) {
      if (c) chosen.push_back(*c);
      maximize(next, chosen);
      if (c) chosen.pop_back();
      return false;
    });
  }

  bool reachable(const Pool& pool, std::size_t need) const {
    if (need == 0) return true;
    if (!could_reach(pool, need)) return false;
    bool found = false;
    branch(pool, [&](const std::size_t* c, const Pool& next) {
      found = reachable(next, c ? need - 1 : need);
      return found;
    });
    return found;
  }

  std::size_t words_ = 0;
  std::vector<Item> items_;
  std::vector<int> residue_of_element_;
  Mask hitting_;
  std::ptrdiff_t best_count_ = -1;
  std::vector<std::size_t> best_;
};

}  // namespace

PackingInstance PackingInstance::from_sets(std::int64_t x, std::vector<DiffSet> sets) {
  if (x < 1) throw InputError("packing instance: x must be >= 1");
  std::sort(sets.begin(), sets.end());
  if (std::adjacent_find(sets.begin(), sets.end()) != sets.end())
    throw InputError("packing instance: duplicate candidate");
  PackingInstance inst;
  inst.x = x;
  for (auto& s : sets) {
    if (s.empty() || s.values().front() < 1 || s.span() > x)
      throw InputError("packing instance: candidate " + s.to_string() + " leaves [1, x]");
    auto witness = reconstruct_witness(s);
    if (!witness)
      throw InputError("packing instance: " + s.to_string() +
                       " is not the difference set of an admissible pattern of size 2 or 3");
    inst.witnesses.push_back(std::move(*witness));
    inst.candidates.push_back(std::move(s));
  }
  return inst;
}

PackingInstance enumerate_admissible_diffsets(std::int64_t k, std::int64_t x) {
  if (k != 3) throw InputError("enumerate_admissible_diffsets: only k = 3 is supported");
  if (x < 1) throw InputError("enumerate_admissible_diffsets: x must be >= 1");

  std::map<DiffSet, AdmissibleTuple> found;  // first witness wins
  for (Offset a = 1; a < x; ++a) {
    for (Offset b = 1; a + b <= x; ++b) {
      AdmissibleTuple t({0, a, a + b});
      if (!is_admissible(t)) continue;
      found.try_emplace(difference_set(t), std::move(t));
    }
  }
  PackingInstance inst;
  inst.x = x;
  for (auto& [d, t] : found) {
    inst.candidates.push_back(d);
    inst.witnesses.push_back(t);
  }
  return inst;
}

PackingCertificate max_disjoint_packing(const PackingInstance& instance,
                                        const OracleOptions& options) {
  if (instance.candidates.size() > options.max_candidates)
    throw InputError("max_disjoint_packing: instance too large (" +
                     std::to_string(instance.candidates.size()) + " candidates, cap " +
                     std::to_string(options.max_candidates) + ")");
  if (instance.witnesses.size() != instance.candidates.size())
    throw InputError("max_disjoint_packing: witnesses and candidates differ in length");

  PackingCertificate cert;
  cert.k = 3;
  cert.x = instance.x;
  cert.raw_count = instance.candidates.size();
  if (!instance.candidates.empty()) {
    PackingSolver solver(instance);
    for (auto c : solver.solve(options.tie_break)) {
      cert.members.push_back({"#" + std::to_string(c), static_cast<std::int64_t>(c),
                              instance.witnesses[c], instance.candidates[c]});
    }
  }
  finalize_certificate(cert);
  return cert;
}

}  // namespace polignac
