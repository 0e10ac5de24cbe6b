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

// End-to-end acceptance checks. One PASS/FAIL line per criterion; the exit
// status is non-zero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "polignac/admissible.hpp"
#include "polignac/oracle.hpp"
#include "polignac/packing.hpp"
#include "polignac/sieve.hpp"

using namespace polignac;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << " [failed: " << what << "]";
    }
  }
};

int failures = 0;

void criterion(int id, const std::string& name, double budget_seconds,
               const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.ok = false;
    out.detail << " [exception: " << e.what() << "]";
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs >= budget_seconds) {
    out.ok = false;
    out.detail << " [over time budget " << budget_seconds << "s]";
  }
  if (!out.ok) ++failures;
  std::printf("%s AC%d %s (%.3fs)%s\n", out.ok ? "PASS" : "FAIL", id, name.c_str(), secs,
              out.detail.str().c_str());
}

// Direct pairwise check, independent of validate_certificate.
bool pairwise_disjoint(const PackingCertificate& cert) {
  std::set<Offset> seen;
  for (const auto& m : cert.members)
    for (auto v : m.diffs.values())
      if (!seen.insert(v).second) return false;
  return true;
}

std::vector<std::int64_t> naive_primes(std::int64_t limit) {
  std::vector<std::int64_t> out;
  for (std::int64_t n = 2; n <= limit; ++n) {
    bool prime = true;
    for (std::int64_t d = 2; d * d <= n && prime; ++d) prime = n % d != 0;
    if (prime) out.push_back(n);
  }
  return out;
}

bool naive_admissible(const std::vector<Offset>& h) {
  for (auto p : naive_primes(h.back() + 1)) {
    std::set<Offset> r;
    for (auto v : h) r.insert(v % p);
    if (static_cast<std::int64_t>(r.size()) == p) return false;
  }
  return true;
}

}  // namespace

int main() {
  criterion(1, "lower-bound density values", 1.0, [](Outcome& o) {
    o.require(lower_bound_density(3).value == Rational(1, 24), "k=3 is 1/24");
    o.require(lower_bound_density(5).value == Rational(1, 840), "k=5 is 1/840");
    const auto v50 = lower_bound_density(50).value;
    o.require(v50 == Rational(BigInt(1), BigInt("35462538431226065088930")), "k=50 value");
    o.require(numerator(v50) == 1, "k=50 numerator 1");
    o.require(denominator(v50) == 57673 * primorial(50), "k=50 denominator = 57673 P(50)");
    o.require(v50 > Rational(BigInt(2819), boost::multiprecision::pow(BigInt(10), 26)), "k=50 exceeds 2.819e-23");
    o.detail << " k=50: " << to_fraction_string(v50) << " ~ " << to_decimal_string(v50);
  });

  criterion(2, "overlap criterion equals direct intersection", 5.0, [](Outcome& o) {
    std::size_t cases = 0, mismatches = 0;
    for (std::int64_t k = 3; k <= 6; ++k) {
      const auto p = static_cast<Offset>(primorial(k));
      for (std::int64_t m = 2; m <= 100; ++m)
        for (std::int64_t n = 1; n < m; ++n) {
          std::set<Offset> dn, dm;
          for (std::int64_t i = 1; i < k; ++i) {
            dn.insert(i * n * p);
            dm.insert(i * m * p);
          }
          bool direct = false;
          for (auto v : dn) direct = direct || dm.count(v);
          ++cases;
          if (direct != regular_overlap(k, n, m)) ++mismatches;
        }
    }
    o.require(cases == 4 * 4950, "case count");
    o.require(mismatches == 0, "zero mismatches");
    o.detail << " cases=" << cases << " mismatches=" << mismatches;
  });

  criterion(3, "greedy counting bound and disjointness", 10.0, [](Outcome& o) {
    for (std::int64_t k : {3, 5})
      for (std::int64_t x : {1'000, 10'000, 100'000, 1'000'000}) {
        const auto cert = greedy_regular_packing(k, x);
        validate_certificate(cert);
        o.require(pairwise_disjoint(cert), "disjoint k=" + std::to_string(k) + " x=" + std::to_string(x));
        const BigInt candidates = BigInt(x) / (BigInt(k - 1) * primorial(k));
        const BigInt floor_bound = BigInt(2) * candidates / (BigInt(k - 1) * (k - 2) + 2) - 1;
        o.require(BigInt(cert.count) >= floor_bound,
                  "count bound k=" + std::to_string(k) + " x=" + std::to_string(x));
      }
    const auto small = greedy_regular_packing(3, 100);
    o.require(small.count == 5, "(3,100) count 5");
    o.require(small.indices() == std::vector<std::int64_t>{1, 3, 4, 5, 7}, "(3,100) indices");
  });

  criterion(4, "exact oracle ground truth", 60.0, [](Outcome& o) {
    const auto inst = enumerate_admissible_diffsets(3, 12);
    std::set<std::vector<Offset>> got;
    for (const auto& d : inst.candidates) got.insert({d.values().begin(), d.values().end()});
    const std::set<std::vector<Offset>> expected{{6, 12},      {2, 4, 6},  {2, 6, 8},
                                                 {4, 6, 10}, {2, 10, 12}, {4, 8, 12}};
    o.require(got == expected && inst.candidates.size() == 6, "x=12 enumeration");
    o.require(max_disjoint_packing(inst).count == 1, "x=12 optimum 1");
    for (std::int64_t x : {12, 24, 36, 48, 60}) {
      const auto best = max_disjoint_packing(enumerate_admissible_diffsets(3, x));
      validate_certificate(best);
      const auto cap = k3_finite_upper_bound(x);
      const auto greedy = greedy_regular_packing(3, x).count;
      o.require(static_cast<std::int64_t>(best.count) <= cap, "cap at x=" + std::to_string(x));
      o.require(best.count >= greedy, "greedy at x=" + std::to_string(x));
      o.detail << " x=" << x << ":" << greedy << "<=" << best.count << "<=" << cap;
    }
  });

  criterion(5, "finite upper bound anchor", 1.0, [](Outcome& o) {
    o.require(k3_finite_upper_bound(36) == 7, "cap(36) = 7");
    o.require(Rational(BigInt(k3_finite_upper_bound(36)), BigInt(36)) ==
                  k3_upper_asymptotic_density().value,
              "7/36 at x=36");
  });

  criterion(6, "three-element construction", 10.0, [](Outcome& o) {
    auto sets = [](const PackingCertificate& c) {
      std::vector<std::vector<Offset>> v;
      for (const auto& m : c.members) v.push_back({m.diffs.values().begin(), m.diffs.values().end()});
      return v;
    };
    const auto lit = geh_family(20, GehStrategy::paper_literal);
    const auto ext = geh_family(20, GehStrategy::extended);
    o.require(lit.count == 2 && sets(lit) == std::vector<std::vector<Offset>>{{2, 18, 20}, {4, 12, 16}},
              "x=20 paper-literal");
    o.require(ext.count == 3 && sets(ext) == std::vector<std::vector<Offset>>{{2, 18, 20}, {4, 12, 16}, {6, 8, 14}},
              "x=20 extended");

    const std::int64_t x = 10'000;
    for (auto strategy : {GehStrategy::paper_literal, GehStrategy::extended}) {
      const auto cert = geh_family(x, strategy);
      validate_certificate(cert);
      bool admissible = true, inside = true;
      for (const auto& m : cert.members) {
        admissible = admissible && naive_admissible({m.witness.offsets().begin(), m.witness.offsets().end()});
        inside = inside && m.diffs.values().front() >= 2 && m.diffs.span() <= x;
      }
      const std::string tag(to_string(strategy));
      o.require(admissible, tag + " all admissible");
      o.require(inside, tag + " inside [2, x]");
      o.require(pairwise_disjoint(cert), tag + " disjoint");
      o.detail << " " << tag << ": count=" << cert.count << " raw=" << cert.raw_count
               << " density=" << to_fraction_string(cert.density) << " ~"
               << to_decimal_string(cert.density);
    }
    const auto greedy = greedy_regular_packing(3, x).count;
    const auto extended = geh_family(x, GehStrategy::extended).count;
    o.require(Rational(BigInt(std::max(greedy, extended)), BigInt(x)) >= lower_bound_density(3).value,
              "best density >= 1/24");
    o.detail << " (claimed 1/6 reported, not asserted)";
  });

  criterion(7, "admissibility equivalence for 3-tuples", 5.0, [](Outcome& o) {
    std::size_t cases = 0, mismatches = 0;
    for (Offset a = 1; a < 60; ++a)
      for (Offset b = a + 1; b <= 60; ++b) {
        const bool fast = is_admissible(AdmissibleTuple({0, a, b}));
        const bool slow = naive_admissible({0, a, b});
        const std::set<Offset> mod3{0, a % 3, b % 3};
        const bool characterized = a % 2 == 0 && (b - a) % 2 == 0 && mod3.size() < 3;
        ++cases;
        if (fast != slow || fast != characterized) ++mismatches;
      }
    o.require(mismatches == 0, "zero mismatches");
    o.detail << " cases=" << cases << " mismatches=" << mismatches;
  });

  criterion(8, "census diagnostic", 1.0, [](Outcome& o) {
    const auto ps = naive_primes(1000);
    std::uint64_t twins = 0;
    for (std::size_t i = 0; i < ps.size(); ++i)
      for (std::size_t j = i + 1; j < ps.size(); ++j)
        if (ps[j] - ps[i] == 2) ++twins;
    const auto report = prime_pair_census(1000, 2);
    o.require(report.counts.at(2) == twins, "d=2 count");
    o.detail << " d=2 count=" << report.counts.at(2);
  });

  std::printf("%s: %d criteria failed\n", failures ? "FAILED" : "OK", failures);
  return failures ? 1 : 0;
}
