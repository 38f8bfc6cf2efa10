// Command implementations behind the CLI: verify, series, ybe, classify,
// closure, power-table. Each command produces one structured report (JSON or
// CSV) and an exit status:
//
//   0  all checks passed (or the command is purely informational)
//   1  a check failed; the report embeds a replayable witness
//   2  malformed input or an unsupported configuration
//
// Reports contain no timing or environment data: identical configuration
// (including seed) yields byte-identical output.

#pragma once

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "braces/axioms.hpp"
#include "braces/cayley.hpp"
#include "braces/check.hpp"
#include "braces/core.hpp"
#include "braces/free_d2.hpp"
#include "braces/free_d3.hpp"
#include "braces/io.hpp"
#include "braces/series.hpp"
#include "braces/ybe.hpp"

namespace braces {

enum class OutputFormat { json, csv };

struct RunConfig {
  std::string command;
  std::string spec_path;  // --spec
  std::string family;     // --family
  std::optional<std::int64_t> modulus;
  std::optional<std::pair<std::int64_t, std::int64_t>> range;  // --range A..B
  std::string strategy;  // "", "exhaustive", "sampled"
  std::uint64_t samples = 10000;
  std::uint64_t seed = 0;
  std::uint32_t max_depth = 10;
  std::string out_path;  // --out; empty = stdout
  OutputFormat format = OutputFormat::json;
};

namespace detail {

inline SpecDocument resolve_spec(const RunConfig& cfg) {
  if (!cfg.spec_path.empty() && !cfg.family.empty())
    throw ParseError("--spec and --family are mutually exclusive");
  if (!cfg.spec_path.empty()) return load_spec_file(cfg.spec_path);
  if (!cfg.family.empty()) {
    Json doc;
    doc["kind"] = cfg.family;
    if (cfg.modulus) doc["modulus"] = *cfg.modulus;
    return parse_spec_document(doc);
  }
  throw ParseError("one of --spec or --family is required");
}

inline Json spec_to_json(const RunConfig& cfg, const SpecDocument& sd) {
  Json j;
  j["kind"] = sd.kind;
  if (sd.kind == "quotient_d2" || sd.kind == "quotient_d3" ||
      sd.kind == "trivial_cyclic")
    j["modulus"] = sd.modulus;
  if (!sd.elements.empty()) j["order"] = sd.elements.size();
  if (!cfg.spec_path.empty()) j["path"] = cfg.spec_path;
  return j;
}

inline Strategy resolve_strategy(const RunConfig& cfg, bool finite) {
  if (cfg.strategy.empty())
    return finite ? Strategy(Exhaustive{})
                  : Strategy(Sampled{cfg.samples, cfg.seed});
  if (cfg.strategy == "exhaustive") {
    if (!finite)
      throw UnsupportedStrategy(
          "exhaustive strategy requires a finite carrier; use sampled");
    return Exhaustive{};
  }
  if (cfg.strategy == "sampled") return Sampled{cfg.samples, cfg.seed};
  throw ParseError("unknown strategy '" + cfg.strategy +
                   "' (expected exhaustive or sampled)");
}

inline Json strategy_to_json(const Strategy& s) {
  Json j;
  if (is_sampled(s)) {
    const auto& smp = std::get<Sampled>(s);
    j["kind"] = "sampled";
    j["samples"] = smp.count;
    j["seed"] = smp.seed;
  } else {
    j["kind"] = "exhaustive";
  }
  return j;
}

inline IntRange resolve_range(const RunConfig& cfg, std::int64_t lo,
                              std::int64_t hi) {
  if (!cfg.range) return IntRange{lo, hi};
  if (cfg.range->first > cfg.range->second)
    throw ParseError("empty --range for this command");
  return IntRange{cfg.range->first, cfg.range->second};
}

// Construction-time rejection (failed axiom, illegal modulus) rendered as a
// failed check inside the report.
inline Json construction_to_json(const AxiomViolation& e) {
  Json c;
  c["name"] = e.failed_check().name;
  c["status"] = "fail";
  c["detail"] = e.failed_check().detail;
  c["witness"] = e.witness_labels();
  c["tuples"] = e.failed_check().tuples;
  c["message"] = e.what();
  return c;
}

struct Outcome {
  Json report;
  bool pass = true;
};

// --- verify -------------------------------------------------------------------

inline Outcome cmd_verify(const RunConfig& cfg) {
  Outcome oc;
  oc.report["command"] = "verify";
  SpecDocument sd = resolve_spec(cfg);
  oc.report["spec"] = spec_to_json(cfg, sd);

  std::optional<LoadedBrace> lb;
  try {
    lb = build_from_spec(sd);
  } catch (const AxiomViolation& e) {
    oc.report["construction"] = construction_to_json(e);
    oc.report["overall"] = "fail";
    oc.pass = false;
    return oc;
  }

  const bool finite = lb->finite();
  Strategy strat = resolve_strategy(cfg, finite);
  oc.report["strategy"] = strategy_to_json(strat);
  Json brace_info;
  brace_info["describe"] = lb->describe();
  if (finite) brace_info["order"] = lb->cayley().size();
  oc.report["brace"] = brace_info;

  IntRange range = resolve_range(cfg, -6, 6);
  Json checks = Json::array();

  std::visit(
      [&](const auto& b) {
        using B = std::decay_t<decltype(b)>;
        auto fmt = [&](const auto& e) { return b.format(e); };
        auto push = [&](const auto& c) {
          checks.push_back(check_to_json(c, fmt));
          oc.pass = oc.pass && c.passed();
        };
        for (const auto& c : check_brace_axioms(b, strat)) push(c);
        for (const auto& c : check_derived_identities(b, strat)) push(c);
        if constexpr (std::is_same_v<B, CayleyBrace>) {
          SeriesReport sr = classify_NS(b, cfg.max_depth);
          bool a3_zero = sr.k.has_value() && *sr.k <= 3;
          oc.report["a3_is_zero"] = a3_zero;
          if (a3_zero)
            for (const auto& c : check_A3_identities(b, range, strat)) push(c);
        } else {
          auto fc = classify_free(b, std::get<Sampled>(strat));
          for (const auto& c : fc.evidence) push(c);
          oc.report["a3_is_zero"] = fc.conclusive();
          if (fc.conclusive())
            for (const auto& c : check_A3_identities(b, range, strat)) push(c);
        }
      },
      lb->value);

  oc.report["checks"] = checks;
  oc.report["overall"] = oc.pass ? "pass" : "fail";
  return oc;
}

// --- series -------------------------------------------------------------------

inline Json subgroup_sizes(const std::vector<AdditiveSubgroup>& chain) {
  Json sizes = Json::array();
  for (const auto& s : chain) sizes.push_back(s.size());
  return sizes;
}

inline Outcome cmd_series(const RunConfig& cfg) {
  Outcome oc;
  oc.report["command"] = "series";
  SpecDocument sd = resolve_spec(cfg);
  oc.report["spec"] = spec_to_json(cfg, sd);
  if (sd.kind == "free_d2" || sd.kind == "free_d3")
    throw UnsupportedStrategy(
        "series requires a finite brace; free braces have infinite carrier");

  std::optional<LoadedBrace> lb;
  try {
    lb = build_from_spec(sd);
  } catch (const AxiomViolation& e) {
    oc.report["construction"] = construction_to_json(e);
    oc.report["overall"] = "fail";
    oc.pass = false;
    return oc;
  }

  const CayleyBrace& b = lb->cayley();
  SeriesReport sr = classify_NS(b, cfg.max_depth);
  Json series;
  series["left_sizes"] = subgroup_sizes(sr.left_chain);
  series["star_sizes"] = subgroup_sizes(sr.star_chain);
  series["k"] = sr.k ? Json(*sr.k) : Json(nullptr);
  series["n"] = sr.n ? Json(*sr.n) : Json(nullptr);
  series["class"] = sr.nilpotent_within_bound()
                        ? "N_S(" + std::to_string(*sr.n) + "," +
                              std::to_string(*sr.k) + ")"
                        : std::string("not-nilpotent-within-bound");
  series["max_depth"] = cfg.max_depth;
  oc.report["brace"] = Json{{"describe", b.describe()}, {"order", b.size()}};
  oc.report["series"] = series;
  oc.report["overall"] = "pass";
  return oc;
}

// --- ybe ----------------------------------------------------------------------

inline Outcome cmd_ybe(const RunConfig& cfg) {
  Outcome oc;
  oc.report["command"] = "ybe";
  SpecDocument sd = resolve_spec(cfg);
  oc.report["spec"] = spec_to_json(cfg, sd);

  std::optional<YbeMap> map;
  if (sd.kind == "ybe_solution") {
    map = ybe_map_from_spec(sd);
  } else {
    if (sd.kind == "free_d2" || sd.kind == "free_d3")
      throw UnsupportedStrategy(
          "ybe requires a finite brace; free braces have infinite carrier");
    std::optional<LoadedBrace> lb;
    try {
      lb = build_from_spec(sd);
    } catch (const AxiomViolation& e) {
      oc.report["construction"] = construction_to_json(e);
      oc.report["overall"] = "fail";
      oc.pass = false;
      return oc;
    }
    map = derive_solution(lb->cayley());
  }

  oc.report["solution_of"] = map->describe;
  oc.report["carrier_size"] = map->n;

  Json checks = Json::array();
  auto fmt = [&](std::uint32_t i) { return map->labels[i]; };
  for (const auto& c : check_solution(*map)) {
    checks.push_back(check_to_json(c, fmt));
    oc.pass = oc.pass && c.passed();
  }
  oc.report["checks"] = checks;
  oc.report["flip"] = is_flip(*map);
  // Embed the re-ingestable export for small carriers only.
  if (map->n <= 64) oc.report["solution"] = solution_to_json(*map);
  oc.report["overall"] = oc.pass ? "pass" : "fail";
  return oc;
}

// --- classify -----------------------------------------------------------------

inline std::optional<std::uint32_t> generator_sequence_termination(
    const CayleyBrace& b, std::uint32_t max_depth) {
  if (!b.generator()) return std::nullopt;
  auto gs = generator_sequence(b, *b.generator(), max_depth);
  for (std::size_t j = 0; j < gs.size(); ++j)
    if (gs[j] == b.zero()) return static_cast<std::uint32_t>(j + 1);
  return std::nullopt;
}

inline Outcome cmd_classify(const RunConfig& cfg) {
  if (cfg.family.empty()) throw ParseError("classify requires --family");
  if (!cfg.range) throw ParseError("classify requires --range A..B");
  const std::string& fam = cfg.family;
  if (fam != "quotient_d2" && fam != "quotient_d3" && fam != "trivial_cyclic")
    throw ParseError("classify supports families quotient_d2, quotient_d3, "
                     "trivial_cyclic");

  Outcome oc;
  oc.report["command"] = "classify";
  oc.report["family"] = fam;
  oc.report["range"] = Json::array({cfg.range->first, cfg.range->second});
  Json rows = Json::array();
  for (std::int64_t m = cfg.range->first; m <= cfg.range->second; ++m) {
    Json row;
    row["modulus"] = m;
    try {
      CayleyBrace b =
          fam == "trivial_cyclic"
              ? build_trivial_cyclic(m)
              : build_quotient({fam == "quotient_d2" ? QuotientFamily::d2
                                                     : QuotientFamily::d3,
                                m});
      SeriesReport sr = classify_NS(b, cfg.max_depth);
      row["legal"] = true;
      row["order"] = b.size();
      row["n"] = sr.n ? Json(*sr.n) : Json(nullptr);
      row["k"] = sr.k ? Json(*sr.k) : Json(nullptr);
      row["class"] = sr.nilpotent_within_bound()
                         ? "N_S(" + std::to_string(*sr.n) + "," +
                               std::to_string(*sr.k) + ")"
                         : std::string("not-nilpotent-within-bound");
      auto term = generator_sequence_termination(b, cfg.max_depth);
      row["generator_sequence_terminates"] = term ? Json(*term) : Json(nullptr);
    } catch (const AxiomViolation& e) {
      row["legal"] = false;
      row["reason"] = e.what();
    } catch (const DomainError& e) {
      row["legal"] = false;
      row["reason"] = e.what();
    }
    rows.push_back(std::move(row));
  }
  oc.report["rows"] = rows;
  oc.report["overall"] = "pass";
  return oc;
}

// --- closure ------------------------------------------------------------------

inline Outcome cmd_closure(const RunConfig& cfg) {
  Outcome oc;
  oc.report["command"] = "closure";
  SpecDocument sd = resolve_spec(cfg);
  oc.report["spec"] = spec_to_json(cfg, sd);
  if (sd.kind == "free_d2" || sd.kind == "free_d3")
    throw UnsupportedStrategy(
        "closure requires a finite brace; free braces have infinite carrier");

  std::optional<LoadedBrace> lb;
  try {
    lb = build_from_spec(sd);
  } catch (const AxiomViolation& e) {
    oc.report["construction"] = construction_to_json(e);
    oc.report["overall"] = "fail";
    oc.pass = false;
    return oc;
  }
  const CayleyBrace& b = lb->cayley();

  // Designated generator when the construction provides one; otherwise the
  // first element whose subbrace closure is the whole carrier.
  std::optional<std::uint32_t> gen = b.generator();
  if (!gen) {
    for (std::uint32_t i = 0; i < b.size(); ++i)
      if (subbrace_closure(b, {i}).size() == b.size()) {
        gen = i;
        break;
      }
  }

  Json cl;
  cl["order"] = b.size();
  if (!gen) {
    cl["one_generator"] = false;
    oc.report["closure"] = cl;
    oc.report["overall"] = "pass";
    return oc;
  }

  AdditiveSubgroup closure = subbrace_closure(b, {*gen});
  cl["generator"] = b.format(*gen);
  cl["closure_size"] = closure.size();
  cl["full_carrier"] = closure.size() == b.size();
  cl["one_generator"] = closure.size() == b.size();

  Json seq = Json::array();
  auto gs = generator_sequence(b, *gen, cfg.max_depth);
  for (const auto& e : gs) {
    seq.push_back(b.format(e));
    if (e == b.zero()) break;
  }
  cl["generator_sequence"] = seq;
  Json orders = Json::array();
  std::uint32_t a1 = *gen;
  std::uint32_t a2 = star(b, a1, a1);
  std::uint32_t a3 = star(b, a2, a1);
  orders.push_back(additive_order(b, a1));
  orders.push_back(additive_order(b, a2));
  orders.push_back(additive_order(b, a3));
  cl["additive_orders"] = orders;

  // Every element of br(a) must decompose as k1 a1 + k2 a2 + k3 a3 and
  // reassemble to itself.
  std::string round_trip = "pass";
  for (std::uint32_t x : closure.members) {
    try {
      Decomposition d = decompose(b, *gen, x);
      std::uint32_t back = b.add(
          b.add(scalar_mul(b, Int(d.k1), a1), scalar_mul(b, Int(d.k2), a2)),
          scalar_mul(b, Int(d.k3), a3));
      if (back != x) {
        round_trip = "fail at " + b.format(x);
        oc.pass = false;
        break;
      }
    } catch (const NotInSubbrace&) {
      round_trip = "fail at " + b.format(x) + " (no decomposition)";
      oc.pass = false;
      break;
    }
  }
  cl["decompose_round_trip"] = round_trip;

  oc.report["closure"] = cl;
  oc.report["overall"] = oc.pass ? "pass" : "fail";
  return oc;
}

// --- power-table --------------------------------------------------------------

inline Outcome cmd_power_table(const RunConfig& cfg) {
  Outcome oc;
  oc.report["command"] = "power-table";
  SpecDocument sd = resolve_spec(cfg);
  oc.report["spec"] = spec_to_json(cfg, sd);

  std::optional<LoadedBrace> lb;
  try {
    lb = build_from_spec(sd);
  } catch (const AxiomViolation& e) {
    oc.report["construction"] = construction_to_json(e);
    oc.report["overall"] = "fail";
    oc.pass = false;
    return oc;
  }

  IntRange range = resolve_range(cfg, -10, 10);
  Json rows = Json::array();
  std::visit(
      [&](const auto& b) {
        using B = std::decay_t<decltype(b)>;
        element_t<B> a;
        if constexpr (std::is_same_v<B, CayleyBrace>) {
          std::optional<std::uint32_t> gen = b.generator();
          if (!gen)
            throw ParseError(
                "power-table requires a designated generator; table specs "
                "have none");
          a = *gen;
        } else {
          a = b.generator();
        }
        oc.report["generator"] = b.format(a);
        for (std::int64_t m = range.lo; m <= range.hi; ++m) {
          element_t<B> closed = power(b, a, Int(m));
          element_t<B> oracle = power_oracle(b, a, Int(m));
          Json row;
          row["m"] = m;
          row["power"] = b.format(closed);
          row["oracle"] = b.format(oracle);
          row["match"] = closed == oracle;
          oc.pass = oc.pass && closed == oracle;
          rows.push_back(std::move(row));
        }
      },
      lb->value);
  oc.report["rows"] = rows;
  oc.report["overall"] = oc.pass ? "pass" : "fail";
  return oc;
}

// --- output -------------------------------------------------------------------

inline std::string json_field(const Json& j, const char* key) {
  if (!j.contains(key) || j[key].is_null()) return "";
  const Json& v = j[key];
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) out += "|";
      out += v[i].is_string() ? v[i].get<std::string>() : v[i].dump();
    }
    return out;
  }
  return v.dump();
}

inline std::string report_to_csv(const Json& report) {
  const std::string cmd = report["command"].get<std::string>();
  if (cmd == "verify" || cmd == "ybe") {
    CsvWriter w({"name", "status", "detail", "witness", "tuples", "seed"});
    auto emit = [&](const Json& c) {
      w.append_row({json_field(c, "name"), json_field(c, "status"),
                    json_field(c, "detail"), json_field(c, "witness"),
                    json_field(c, "tuples"), json_field(c, "seed")});
    };
    if (report.contains("construction")) emit(report["construction"]);
    if (report.contains("checks"))
      for (const Json& c : report["checks"]) emit(c);
    return w.str();
  }
  if (cmd == "series") {
    CsvWriter w({"chain", "stage", "size"});
    if (report.contains("series")) {
      const Json& s = report["series"];
      for (std::size_t i = 0; i < s["left_sizes"].size(); ++i)
        w.append_row({"left", std::to_string(i + 1),
                      s["left_sizes"][i].dump()});
      for (std::size_t i = 0; i < s["star_sizes"].size(); ++i)
        w.append_row({"star", std::to_string(i + 1),
                      s["star_sizes"][i].dump()});
      w.append_row({"class", "n", json_field(s, "n")});
      w.append_row({"class", "k", json_field(s, "k")});
    } else if (report.contains("construction")) {
      w.append_row({"construction", json_field(report["construction"], "name"),
                    "fail"});
    }
    return w.str();
  }
  if (cmd == "classify") {
    CsvWriter w({"modulus", "order", "legal", "n", "k",
                 "generator_sequence_terminates", "reason"});
    for (const Json& r : report["rows"])
      w.append_row({json_field(r, "modulus"), json_field(r, "order"),
                    json_field(r, "legal"), json_field(r, "n"),
                    json_field(r, "k"),
                    json_field(r, "generator_sequence_terminates"),
                    json_field(r, "reason")});
    return w.str();
  }
  if (cmd == "closure") {
    CsvWriter w({"field", "value"});
    if (report.contains("closure"))
      for (auto it = report["closure"].begin(); it != report["closure"].end();
           ++it)
        w.append_row({it.key(), json_field(report["closure"], it.key().c_str())});
    else if (report.contains("construction"))
      w.append_row({"construction",
                    json_field(report["construction"], "name")});
    return w.str();
  }
  if (cmd == "power-table") {
    CsvWriter w({"m", "power", "oracle", "match"});
    if (report.contains("rows"))
      for (const Json& r : report["rows"])
        w.append_row({json_field(r, "m"), json_field(r, "power"),
                      json_field(r, "oracle"), json_field(r, "match")});
    return w.str();
  }
  throw ParseError("no CSV rendering for command '" + cmd + "'");
}

inline Outcome dispatch(const RunConfig& cfg) {
  if (cfg.command == "verify") return cmd_verify(cfg);
  if (cfg.command == "series") return cmd_series(cfg);
  if (cfg.command == "ybe") return cmd_ybe(cfg);
  if (cfg.command == "classify") return cmd_classify(cfg);
  if (cfg.command == "closure") return cmd_closure(cfg);
  if (cfg.command == "power-table") return cmd_power_table(cfg);
  throw ParseError("unknown command '" + cfg.command + "'");
}

}  // namespace detail

inline int run(const RunConfig& cfg) {
  try {
    detail::Outcome oc = detail::dispatch(cfg);
    std::string text = cfg.format == OutputFormat::json
                           ? oc.report.dump(2) + "\n"
                           : detail::report_to_csv(oc.report);
    write_text(cfg.out_path, text);
    return oc.pass ? 0 : 1;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const UnsupportedStrategy& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace braces
