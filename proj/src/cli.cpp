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

#include "polignac/cli.hpp"

#include <functional>
#include <sstream>

#include <CLI11.hpp>

#include "polignac/admissible.hpp"
#include "polignac/errors.hpp"
#include "polignac/oracle.hpp"
#include "polignac/packing.hpp"
#include "polignac/sieve.hpp"

namespace polignac::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class Format { text, json, csv };

constexpr std::int64_t kMaxK = 10'000;
constexpr std::int64_t kMaxX = 1'000'000'000;
constexpr std::int64_t kMaxGehX = 100'000'000;

// Rendered output of one subcommand.
struct Rendered {
  Json payload;
  std::string csv;
  std::string text;
};

std::string join(const std::vector<std::string>& args) {
  std::string s;
  for (const auto& a : args) {
    if (!s.empty()) s += ' ';
    s += a;
  }
  return s;
}

std::string semicolon_list(std::span<const Offset> values) {
  std::string s;
  for (auto v : values) {
    if (!s.empty()) s += ';';
    s += std::to_string(v);
  }
  return s;
}

Json offsets_json(std::span<const Offset> values) {
  return Json(std::vector<Offset>(values.begin(), values.end()));
}

void put_rational(Json& j, const char* key, const Rational& r) {
  j[key] = to_fraction_string(r);
  j[std::string(key) + "_decimal"] = to_decimal_string(r);
}

Rendered render_bound(const std::string& command, const DensityBound& b) {
  Rendered r;
  r.payload = {{"command", command}, {"k", b.k}, {"kind", std::string(to_string(b.kind))}};
  put_rational(r.payload, "value", b.value);
  r.csv = "kind,k,value,decimal\n" + std::string(to_string(b.kind)) + "," + std::to_string(b.k) +
          "," + to_fraction_string(b.value) + "," + to_decimal_string(b.value) + "\n";
  r.text = std::string(to_string(b.kind)) + " density for k=" + std::to_string(b.k) + ": " +
           to_fraction_string(b.value) + " (~" + to_decimal_string(b.value) + ")\n";
  return r;
}

Rendered render_certificate(const std::string& command, const PackingCertificate& cert) {
  validate_certificate(cert);

  Rendered r;
  Json members = Json::array();
  std::ostringstream csv, text;
  csv << "label,values,span\n";
  text << "k=" << cert.k << " x=" << cert.x << " count=" << cert.count
       << " raw_count=" << cert.raw_count << " density=" << to_fraction_string(cert.density)
       << " (~" << to_decimal_string(cert.density) << ")\n";
  for (const auto& m : cert.members) {
    members.push_back({{"label", m.label},
                       {"index", m.index},
                       {"witness", offsets_json(m.witness.offsets())},
                       {"values", offsets_json(m.diffs.values())},
                       {"span", m.diffs.span()}});
    csv << m.label << ',' << semicolon_list(m.diffs.values()) << ',' << m.diffs.span() << '\n';
    text << "  " << m.label << ' ' << m.witness.to_string() << " -> " << m.diffs.to_string()
         << '\n';
  }
  r.payload = {{"command", command},
               {"k", cert.k},
               {"x", cert.x},
               {"count", cert.count},
               {"raw_count", cert.raw_count}};
  put_rational(r.payload, "density", cert.density);
  r.payload["indices"] = cert.indices();
  r.payload["members"] = std::move(members);
  r.csv = csv.str();
  r.text = text.str();
  return r;
}

Rendered render_tuple(const std::string& command, const AdmissibleTuple& t, bool with_diffs) {
  Rendered r;
  r.payload = {{"command", command},
               {"k", t.size()},
               {"offsets", offsets_json(t.offsets())},
               {"admissible", is_admissible(t)}};
  const bool adm = r.payload["admissible"].get<bool>();
  if (with_diffs) {
    const auto d = difference_set(t);
    r.payload["values"] = offsets_json(d.values());
    r.payload["count"] = d.size();
    r.payload["span"] = d.span();
    r.csv = "label,values,span\n" + t.to_string() + "," + semicolon_list(d.values()) + "," +
            std::to_string(d.span()) + "\n";
    r.text = t.to_string() + " -> " + d.to_string() + " (" + std::to_string(d.size()) +
             " differences)\n";
  } else {
    r.csv = "offsets,admissible\n" + semicolon_list(t.offsets()) + "," +
            (adm ? "true" : "false") + "\n";
    r.text = t.to_string() + (adm ? " is admissible\n" : " is not admissible\n");
  }
  return r;
}

}  // namespace

CommandResult run_command(const std::vector<std::string>& args) {
  CommandResult result;
  result.command = join(args);

  CLI::App app{"Admissible-set packings and density bounds for weak Polignac numbers",
               "polignac"};
  app.require_subcommand(1);
  app.fallthrough();

  Format format = Format::text;
  const std::map<std::string, Format> format_names{
      {"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}};
  app.add_option("--format", format, "Output format")
      ->transform(CLI::CheckedTransformer(format_names, CLI::ignore_case));

  std::function<Rendered()> action;
  const std::string& cmd = result.command;

  std::int64_t k = 0;
  std::int64_t x = 0;

  auto* bound = app.add_subcommand("bound", "Lower density bound from maximal regular packings");
  bound->add_option("--k", k, "Tuple size")->required()->check(CLI::Range(std::int64_t{3}, kMaxK));
  bound->callback([&] { action = [&] { return render_bound(cmd, lower_bound_density(k)); }; });

  std::vector<Offset> offsets;
  auto* check = app.add_subcommand("check", "Decide admissibility of an offset pattern");
  check->add_option("offsets", offsets, "Offsets")->required();
  check->callback([&] { action = [&] { return render_tuple(cmd, normalize(offsets), false); }; });

  auto* diffs = app.add_subcommand("diffs", "Difference set of an offset pattern");
  diffs->add_option("offsets", offsets, "Offsets")->required();
  diffs->callback([&] { action = [&] { return render_tuple(cmd, normalize(offsets), true); }; });

  auto* pack = app.add_subcommand("pack", "Build a packing certificate");
  pack->require_subcommand(1);

  auto* regular = pack->add_subcommand("regular", "First-fit packing of regular sets");
  regular->add_option("--k", k, "Tuple size")->required()->check(CLI::Range(std::int64_t{3}, kMaxK));
  regular->add_option("--x", x, "Interval bound")->required()->check(CLI::Range(std::int64_t{1}, kMaxX));
  regular->callback([&] {
    action = [&] {
      auto r = render_certificate(cmd, greedy_regular_packing(k, x));
      r.payload["count_floor"] = greedy_count_floor(k, x);
      put_rational(r.payload, "lower_bound", lower_bound_density(k).value);
      return r;
    };
  });

  GehStrategy strategy = GehStrategy::paper_literal;
  std::string strategy_name = "paper-literal";
  auto* geh = pack->add_subcommand("geh", "Three-element construction {0, 2n, 2n + a_n}");
  geh->add_option("--x", x, "Interval bound")->required()->check(CLI::Range(std::int64_t{2}, kMaxGehX));
  geh->add_option("--strategy", strategy_name, "Index range")
      ->check(CLI::IsMember({"paper-literal", "extended"}))
      ->capture_default_str();
  geh->callback([&] {
    strategy = strategy_name == "extended" ? GehStrategy::extended : GehStrategy::paper_literal;
    action = [&] {
      auto r = render_certificate(cmd, geh_family(x, strategy));
      r.payload["strategy"] = std::string(to_string(strategy));
      r.payload["claimed_density"] = "1/6";
      return r;
    };
  });

  OracleOptions oracle_options;
  auto* exact = pack->add_subcommand("exact", "Exact maximum packing of admissible 3-tuples");
  exact->add_option("--x", x, "Interval bound")->required()->check(CLI::Range(std::int64_t{1}, kMaxX));
  exact->add_option("--max-candidates", oracle_options.max_candidates, "Search cap")
      ->capture_default_str();
  std::string tie_break = "search-order";
  exact->add_option("--tie-break", tie_break, "Which optimum to report")
      ->check(CLI::IsMember({"search-order", "lexicographic"}))
      ->capture_default_str();
  exact->callback([&] {
    oracle_options.tie_break =
        tie_break == "lexicographic" ? TieBreak::lexicographic : TieBreak::search_order;
    action = [&] {
      const auto instance = enumerate_admissible_diffsets(3, x);
      auto r = render_certificate(cmd, max_disjoint_packing(instance, oracle_options));
      r.payload["upper_bound"] = k3_finite_upper_bound(x);
      return r;
    };
  });

  bool k3_finite = false;
  auto* upper = app.add_subcommand("upper", "Upper bounds on packing density");
  auto* upper_k = upper->add_option("--k", k, "Tuple size")->check(CLI::Range(std::int64_t{2}, kMaxK));
  auto* upper_finite = upper->add_flag("--k3-finite", k3_finite, "Finite-x cap for k = 3");
  auto* upper_x = upper->add_option("--x", x, "Interval bound")->check(CLI::Range(std::int64_t{0}, kMaxX));
  upper_k->excludes(upper_finite);
  upper_finite->needs(upper_x);
  upper_x->needs(upper_finite);
  upper->callback([&] {
    if (!k3_finite && upper_k->count() == 0)
      throw CLI::ValidationError("upper", "either --k or --k3-finite --x is required");
    action = [&] {
      if (!k3_finite) return render_bound(cmd, trivial_upper_bound_density(k));
      Rendered r;
      const auto cap = k3_finite_upper_bound(x);
      r.payload = {{"command", cmd}, {"k", 3}, {"x", x}, {"count", cap}};
      std::string density = "undefined";
      if (x > 0) {
        const Rational d{BigInt(cap), BigInt(x)};
        put_rational(r.payload, "density", d);
        density = to_fraction_string(d);
      }
      put_rational(r.payload, "asymptotic", k3_upper_asymptotic_density().value);
      r.csv = "x,count,density\n" + std::to_string(x) + "," + std::to_string(cap) + "," +
              density + "\n";
      r.text = "at most " + std::to_string(cap) + " disjoint k=3 difference sets in [1, " +
               std::to_string(x) + "]\n";
      return r;
    };
  });

  std::int64_t dmax = 0;
  CensusOptions census_options;
  auto* census = app.add_subcommand("census", "Prime pairs by even difference");
  census->add_option("--x", x, "Upper limit")->required()->check(CLI::Range(std::int64_t{2}, kMaxX));
  census->add_option("--dmax", dmax, "Largest difference (even)")
      ->required()
      ->check(CLI::Range(std::int64_t{2}, kMaxX));
  census->add_option("--max-x", census_options.max_x, "Configured limit on x")
      ->capture_default_str();
  census->callback([&] {
    action = [&] {
      const auto rep = prime_pair_census(static_cast<std::uint64_t>(x),
                                         static_cast<std::uint64_t>(dmax), census_options);
      Rendered r;
      Json counts = Json::object();
      std::string csv = "d,count\n";
      std::string text;
      for (const auto& [d, c] : rep.counts) {
        counts[std::to_string(d)] = c;
        csv += std::to_string(d) + "," + std::to_string(c) + "\n";
        text += "d=" + std::to_string(d) + ": " + std::to_string(c) + "\n";
      }
      r.payload = {{"command", cmd}, {"x", rep.x}, {"dmax", rep.dmax}, {"counts", std::move(counts)}};
      r.csv = std::move(csv);
      r.text = std::move(text);
      return r;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    result.out = app.help();
    return result;
  } catch (const CLI::CallForAllHelp&) {
    result.out = app.help("", CLI::AppFormatMode::All);
    return result;
  } catch (const CLI::ParseError& e) {
    result.err = std::string(e.what()) + "\n";
    result.exit_code = kInputError;
    return result;
  }

  try {
    Rendered r = action();
    result.payload = std::move(r.payload);
    switch (format) {
      case Format::json: result.out = result.payload.dump(2) + "\n"; break;
      case Format::csv: result.out = std::move(r.csv); break;
      case Format::text: result.out = std::move(r.text); break;
    }
  } catch (const InputError& e) {
    result.err = std::string("error: ") + e.what() + "\n";
    result.exit_code = kInputError;
  } catch (const InvariantViolation& e) {
    result.err = std::string("internal invariant violated: ") + e.what() + "\n";
    result.exit_code = kInvariantViolation;
  } catch (const std::exception& e) {
    result.err = std::string("internal error: ") + e.what() + "\n";
    result.exit_code = kInvariantViolation;
  }
  return result;
}

}  // namespace polignac::cli
