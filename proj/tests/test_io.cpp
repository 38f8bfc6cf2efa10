#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "braces/braces.hpp"

namespace {

using namespace braces;

std::string temp_path(const std::string& name) {
  return "/tmp/braces_io_test_" + name;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  REQUIRE(out.good());
  out << content;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Serialized table spec of the d2 mod 2 quotient with scrambled element order.
Json relabeled_d2m2_spec() {
  CayleyBrace good = build_quotient({QuotientFamily::d2, 2});
  const std::vector<std::uint32_t> perm = {2, 0, 3, 1};
  std::vector<std::uint32_t> inv_perm(4);
  for (std::uint32_t i = 0; i < 4; ++i) inv_perm[perm[i]] = i;
  Json doc;
  doc["kind"] = "table";
  Json elements = Json::array();
  for (std::uint32_t i = 0; i < 4; ++i) elements.push_back(good.format(perm[i]));
  doc["elements"] = elements;
  Json add = Json::array(), mul = Json::array();
  for (std::uint32_t i = 0; i < 4; ++i) {
    Json arow = Json::array(), mrow = Json::array();
    for (std::uint32_t j = 0; j < 4; ++j) {
      arow.push_back(inv_perm[good.add(perm[i], perm[j])]);
      mrow.push_back(inv_perm[good.mul(perm[i], perm[j])]);
    }
    add.push_back(arow);
    mul.push_back(mrow);
  }
  doc["add"] = add;
  doc["mul"] = mul;
  return doc;
}

}  // namespace

TEST_CASE("spec document parsing", "[io]") {
  SECTION("family kinds") {
    CHECK(parse_spec_document(Json{{"kind", "free_d2"}}).kind == "free_d2");
    SpecDocument q =
        parse_spec_document(Json{{"kind", "quotient_d3"}, {"modulus", 5}});
    CHECK(q.kind == "quotient_d3");
    CHECK(q.modulus == 5);
  }

  SECTION("table kind") {
    SpecDocument s = parse_spec_document(relabeled_d2m2_spec());
    CHECK(s.elements.size() == 4);
    CHECK(s.add.size() == 16);
    CHECK(s.mul.size() == 16);
  }

  SECTION("ybe_solution kind") {
    Json doc;
    doc["kind"] = "ybe_solution";
    doc["elements"] = Json::array({"0", "1"});
    // The flip on two elements.
    doc["r"] = Json::array({Json::array({0, 0}), Json::array({1, 0}),
                            Json::array({0, 1}), Json::array({1, 1})});
    SpecDocument s = parse_spec_document(doc);
    CHECK(s.r_left == std::vector<std::uint32_t>{0, 1, 0, 1});
    CHECK(s.r_right == std::vector<std::uint32_t>{0, 0, 1, 1});
    YbeMap m = ybe_map_from_spec(s);
    CHECK(is_flip(m));
  }

  SECTION("malformed documents") {
    CHECK_THROWS_AS(parse_spec_document(Json::array()), ParseError);
    CHECK_THROWS_AS(parse_spec_document(Json{{"kind", "octonion"}}), ParseError);
    CHECK_THROWS_AS(parse_spec_document(Json{{"kind", "quotient_d2"}}),
                    ParseError);
    CHECK_THROWS_AS(parse_spec_document(Json{{"modulus", 3}}), ParseError);

    Json dup = relabeled_d2m2_spec();
    dup["elements"][1] = dup["elements"][0];
    CHECK_THROWS_AS(parse_spec_document(dup), ParseError);

    Json ragged = relabeled_d2m2_spec();
    ragged["add"][2] = Json::array({0, 1});
    CHECK_THROWS_AS(parse_spec_document(ragged), ParseError);

    Json out_of_range = relabeled_d2m2_spec();
    out_of_range["mul"][0][0] = 9;
    CHECK_THROWS_AS(parse_spec_document(out_of_range), ParseError);

    Json no_table = Json{{"kind", "table"},
                         {"elements", Json::array({"a", "b"})}};
    CHECK_THROWS_AS(parse_spec_document(no_table), ParseError);
  }

  SECTION("files") {
    const std::string p = temp_path("spec.json");
    write_file(p, R"({"kind": "trivial_cyclic", "modulus": 4})");
    SpecDocument s = load_spec_file(p);
    CHECK(s.kind == "trivial_cyclic");
    CHECK(s.modulus == 4);
    CHECK_THROWS_AS(load_spec_file(temp_path("missing.json")), ParseError);
    write_file(temp_path("broken.json"), "{not json");
    CHECK_THROWS_AS(load_spec_file(temp_path("broken.json")), ParseError);
  }
}

TEST_CASE("building braces from specs", "[io]") {
  CHECK_FALSE(build_from_spec(parse_spec_document(Json{{"kind", "free_d2"}}))
                  .finite());
  CHECK(build_from_spec(parse_spec_document(Json{{"kind", "free_d3"}}))
            .describe() == "free_d3");

  LoadedBrace q = build_from_spec(
      parse_spec_document(Json{{"kind", "quotient_d3"}, {"modulus", 3}}));
  REQUIRE(q.finite());
  CHECK(q.cayley().size() == 27);

  LoadedBrace t = build_from_spec(parse_spec_document(relabeled_d2m2_spec()));
  REQUIRE(t.finite());
  CHECK(t.cayley().size() == 4);
  CHECK(t.cayley().format(t.cayley().zero()) == "(0,0)");

  CHECK_THROWS_AS(
      build_from_spec(parse_spec_document(
          Json{{"kind", "quotient_d3"}, {"modulus", 2}})),
      IllegalModulus);

  Json ybe = Json{{"kind", "ybe_solution"},
                  {"elements", Json::array({"0"})},
                  {"r", Json::array({Json::array({0, 0})})}};
  CHECK_THROWS_AS(build_from_spec(parse_spec_document(ybe)), ParseError);
}

TEST_CASE("solution export round trip", "[io]") {
  CayleyBrace b = build_quotient({QuotientFamily::d2, 3});
  YbeMap derived = derive_solution(b);
  Json exported = solution_to_json(derived);
  exported["kind"] = "ybe_solution";

  YbeMap reloaded = ybe_map_from_spec(parse_spec_document(exported));
  CHECK(reloaded.n == derived.n);
  CHECK(reloaded.left == derived.left);
  CHECK(reloaded.right == derived.right);
  CHECK(reloaded.labels == derived.labels);
  for (const auto& c : check_solution(reloaded)) CHECK(c.passed());
}

TEST_CASE("check serialization", "[io]") {
  CayleyBrace t = build_trivial_cyclic(4);
  auto fmt = [&](std::uint32_t i) { return t.format(i); };

  CheckResult<std::uint32_t> ok;
  ok.name = "demo";
  ok.tuples = 12;
  Json j = check_to_json(ok, fmt);
  CHECK(j["name"] == "demo");
  CHECK(j["status"] == "pass");
  CHECK(j["tuples"] == 12);
  CHECK_FALSE(j.contains("witness"));
  CHECK_FALSE(j.contains("seed"));

  CheckResult<std::uint32_t> bad;
  bad.name = "demo";
  bad.detail = "broke";
  bad.witness = {1, 3};
  bad.tuples = 5;
  bad.seed = 99;
  Json k = check_to_json(bad, fmt);
  CHECK(k["status"] == "fail");
  CHECK(k["detail"] == "broke");
  CHECK(k["witness"] == Json::array({"1", "3"}));
  CHECK(k["seed"] == 99);
}

TEST_CASE("csv writing", "[io]") {
  CsvWriter w({"a", "b"});
  w.append_row({"plain", "with,comma"});
  w.append_row({"with\"quote", "multi\nline"});
  CHECK(w.str() ==
        "a,b\n"
        "plain,\"with,comma\"\n"
        "\"with\"\"quote\",\"multi\nline\"\n");
  CHECK_THROWS_AS(w.append_row({"too", "many", "fields"}), DomainError);
}

TEST_CASE("run: verify exit codes and reports", "[io]") {
  SECTION("legal quotient passes exhaustively") {
    RunConfig cfg;
    cfg.command = "verify";
    cfg.family = "quotient_d3";
    cfg.modulus = 3;
    cfg.out_path = temp_path("verify_q3.json");
    REQUIRE(braces::run(cfg) == 0);

    Json report = Json::parse(read_file(cfg.out_path));
    CHECK(report["command"] == "verify");
    CHECK(report["spec"]["kind"] == "quotient_d3");
    CHECK(report["strategy"]["kind"] == "exhaustive");
    CHECK(report["brace"]["order"] == 27);
    CHECK(report["a3_is_zero"] == true);
    CHECK(report["overall"] == "pass");
    REQUIRE(report["checks"].is_array());
    CHECK(report["checks"].size() == 13);
    for (const Json& c : report["checks"]) CHECK(c["status"] == "pass");
  }

  SECTION("illegal modulus yields a failure report and exit 1") {
    RunConfig cfg;
    cfg.command = "verify";
    cfg.family = "quotient_d3";
    cfg.modulus = 2;
    cfg.out_path = temp_path("verify_q2.json");
    REQUIRE(braces::run(cfg) == 1);

    Json report = Json::parse(read_file(cfg.out_path));
    CHECK(report["overall"] == "fail");
    const Json& c = report["construction"];
    CHECK(c["name"] == "multiplicative-group");
    CHECK(c["detail"] == "mul-associative");
    CHECK(c["witness"] ==
          Json::array({"(1,0,0)", "(1,0,0)", "(1,0,0)"}));
  }

  SECTION("free brace verifies under the sampled default") {
    RunConfig cfg;
    cfg.command = "verify";
    cfg.family = "free_d3";
    cfg.samples = 400;
    cfg.seed = 11;
    cfg.out_path = temp_path("verify_free.json");
    REQUIRE(braces::run(cfg) == 0);

    Json report = Json::parse(read_file(cfg.out_path));
    CHECK(report["strategy"]["kind"] == "sampled");
    CHECK(report["strategy"]["samples"] == 400);
    CHECK(report["strategy"]["seed"] == 11);
    CHECK(report["a3_is_zero"] == true);
    // 4 axiom + 4 derived-identity + 5 classification evidence + 5 A^3 checks.
    CHECK(report["checks"].size() == 18);
  }

  SECTION("exhaustive on a free brace is a configuration error") {
    RunConfig cfg;
    cfg.command = "verify";
    cfg.family = "free_d2";
    cfg.strategy = "exhaustive";
    cfg.out_path = temp_path("unused.json");
    CHECK(braces::run(cfg) == 2);
  }

  SECTION("input errors exit 2") {
    RunConfig both;
    both.command = "verify";
    both.family = "free_d2";
    both.spec_path = temp_path("spec.json");
    CHECK(braces::run(both) == 2);

    RunConfig neither;
    neither.command = "verify";
    CHECK(braces::run(neither) == 2);

    RunConfig missing_mod;
    missing_mod.command = "verify";
    missing_mod.family = "quotient_d2";
    CHECK(braces::run(missing_mod) == 2);

    RunConfig unknown;
    unknown.command = "verify";
    unknown.family = "octonion";
    CHECK(braces::run(unknown) == 2);

    RunConfig bad_strategy;
    bad_strategy.command = "verify";
    bad_strategy.family = "free_d2";
    bad_strategy.strategy = "psychic";
    CHECK(braces::run(bad_strategy) == 2);
  }

  SECTION("ingest rejection carries the brace-law witness") {
    std::vector<std::uint32_t> phi = {0, 2, 1, 3};
    Json doc;
    doc["kind"] = "table";
    doc["elements"] = Json::array({"0", "1", "2", "3"});
    Json add = Json::array(), mul = Json::array();
    for (std::uint32_t i = 0; i < 4; ++i) {
      Json arow = Json::array(), mrow = Json::array();
      for (std::uint32_t j = 0; j < 4; ++j) {
        arow.push_back((i + j) % 4);
        mrow.push_back(phi[(phi[i] + phi[j]) % 4]);
      }
      add.push_back(arow);
      mul.push_back(mrow);
    }
    doc["add"] = add;
    doc["mul"] = mul;
    const std::string p = temp_path("bad_table.json");
    write_file(p, doc.dump());

    RunConfig cfg;
    cfg.command = "verify";
    cfg.spec_path = p;
    cfg.out_path = temp_path("verify_bad_table.json");
    REQUIRE(braces::run(cfg) == 1);
    Json report = Json::parse(read_file(cfg.out_path));
    CHECK(report["construction"]["name"] == "left-brace-law");
    CHECK(report["construction"]["witness"] == Json::array({"2", "1", "1"}));
  }
}

TEST_CASE("run: series, ybe, classify, closure, power-table", "[io]") {
  SECTION("series on d3 mod 5") {
    RunConfig cfg;
    cfg.command = "series";
    cfg.family = "quotient_d3";
    cfg.modulus = 5;
    cfg.out_path = temp_path("series_q5.json");
    REQUIRE(braces::run(cfg) == 0);
    Json report = Json::parse(read_file(cfg.out_path));
    CHECK(report["series"]["left_sizes"] == Json::array({125, 25, 1}));
    CHECK(report["series"]["star_sizes"] == Json::array({125, 25, 5, 1}));
    CHECK(report["series"]["class"] == "N_S(4,3)");
  }

  SECTION("series rejects free braces") {
    RunConfig cfg;
    cfg.command = "series";
    cfg.family = "free_d3";
    CHECK(braces::run(cfg) == 2);
  }

  SECTION("series CSV rendering") {
    RunConfig cfg;
    cfg.command = "series";
    cfg.family = "quotient_d2";
    cfg.modulus = 3;
    cfg.format = OutputFormat::csv;
    cfg.out_path = temp_path("series_q3.csv");
    REQUIRE(braces::run(cfg) == 0);
    CHECK(read_file(cfg.out_path) ==
          "chain,stage,size\n"
          "left,1,9\nleft,2,3\nleft,3,1\n"
          "star,1,9\nstar,2,3\nstar,3,1\n"
          "class,n,3\nclass,k,3\n");
  }

  SECTION("ybe on a derived and a corrupted solution") {
    RunConfig cfg;
    cfg.command = "ybe";
    cfg.family = "quotient_d2";
    cfg.modulus = 3;
    cfg.out_path = temp_path("ybe_q3.json");
    REQUIRE(braces::run(cfg) == 0);
    Json report = Json::parse(read_file(cfg.out_path));
    CHECK(report["carrier_size"] == 9);
    CHECK(report["flip"] == false);
    REQUIRE(report.contains("solution"));

    // Feed the exported solution back in: still a pass.
    Json good = report["solution"];
    good["kind"] = "ybe_solution";
    const std::string good_path = temp_path("ybe_good.json");
    write_file(good_path, good.dump());
    RunConfig reload;
    reload.command = "ybe";
    reload.spec_path = good_path;
    reload.out_path = temp_path("ybe_reload.json");
    CHECK(braces::run(reload) == 0);

    // Corrupt one entry of r until the braid relation fails, then expect 1.
    YbeMap derived = derive_solution(build_quotient({QuotientFamily::d2, 3}));
    bool found = false;
    for (std::size_t p = 0; p < derived.left.size() && !found; ++p)
      for (std::uint32_t v = 0; v < derived.n && !found; ++v) {
        if (v == derived.left[p]) continue;
        YbeMap bad = derived;
        bad.left[p] = v;
        if (check_braid(bad).passed()) continue;
        found = true;
        Json doc = solution_to_json(bad);
        doc["kind"] = "ybe_solution";
        write_file(temp_path("ybe_bad.json"), doc.dump());
      }
    REQUIRE(found);
    RunConfig badcfg;
    badcfg.command = "ybe";
    badcfg.spec_path = temp_path("ybe_bad.json");
    badcfg.out_path = temp_path("ybe_bad_report.json");
    REQUIRE(braces::run(badcfg) == 1);
    Json bad_report = Json::parse(read_file(badcfg.out_path));
    CHECK(bad_report["overall"] == "fail");
    CHECK(bad_report["checks"][0]["name"] == "braid");
    CHECK(bad_report["checks"][0]["status"] == "fail");
    REQUIRE(bad_report["checks"][0]["witness"].is_array());
    CHECK(bad_report["checks"][0]["witness"].size() == 3);
  }

  SECTION("classify over a modulus range") {
    RunConfig cfg;
    cfg.command = "classify";
    cfg.family = "quotient_d3";
    cfg.range = {{2, 5}};
    cfg.out_path = temp_path("classify_d3.json");
    REQUIRE(braces::run(cfg) == 0);
    Json report = Json::parse(read_file(cfg.out_path));
    REQUIRE(report["rows"].size() == 4);
    CHECK(report["rows"][0]["legal"] == false);
    CHECK(report["rows"][1]["legal"] == true);
    CHECK(report["rows"][1]["class"] == "N_S(4,3)");
    CHECK(report["rows"][1]["generator_sequence_terminates"] == 4);
    CHECK(report["rows"][2]["legal"] == false);
    CHECK(report["rows"][3]["class"] == "N_S(4,3)");

    RunConfig no_range;
    no_range.command = "classify";
    no_range.family = "quotient_d3";
    CHECK(braces::run(no_range) == 2);

    RunConfig bad_family;
    bad_family.command = "classify";
    bad_family.family = "free_d2";
    bad_family.range = {{2, 3}};
    CHECK(braces::run(bad_family) == 2);
  }

  SECTION("closure of a quotient generator") {
    RunConfig cfg;
    cfg.command = "closure";
    cfg.family = "quotient_d3";
    cfg.modulus = 3;
    cfg.out_path = temp_path("closure_q3.json");
    REQUIRE(braces::run(cfg) == 0);
    Json report = Json::parse(read_file(cfg.out_path));
    const Json& cl = report["closure"];
    CHECK(cl["generator"] == "(1,0,0)");
    CHECK(cl["closure_size"] == 27);
    CHECK(cl["full_carrier"] == true);
    CHECK(cl["one_generator"] == true);
    CHECK(cl["generator_sequence"] ==
          Json::array({"(1,0,0)", "(0,1,0)", "(0,0,1)", "(0,0,0)"}));
    CHECK(cl["additive_orders"] == Json::array({3, 3, 3}));
    CHECK(cl["decompose_round_trip"] == "pass");
  }

  SECTION("power-table matches the oracle") {
    RunConfig cfg;
    cfg.command = "power-table";
    cfg.family = "free_d3";
    cfg.range = {{-4, 4}};
    cfg.out_path = temp_path("power_free.json");
    REQUIRE(braces::run(cfg) == 0);
    Json report = Json::parse(read_file(cfg.out_path));
    CHECK(report["generator"] == "(1,0,0)");
    REQUIRE(report["rows"].size() == 9);
    for (const Json& r : report["rows"]) CHECK(r["match"] == true);
    CHECK(report["rows"][8]["m"] == 4);
    CHECK(report["rows"][8]["power"] == "(4,6,0)");

    // A table spec designates no generator.
    const std::string p = temp_path("table_spec.json");
    write_file(p, relabeled_d2m2_spec().dump());
    RunConfig nogen;
    nogen.command = "power-table";
    nogen.spec_path = p;
    CHECK(braces::run(nogen) == 2);
  }
}

TEST_CASE("identical configuration yields byte-identical reports", "[io]") {
  auto run_twice = [&](RunConfig cfg, const std::string& tag) {
    cfg.out_path = temp_path(tag + "_a");
    REQUIRE(braces::run(cfg) == 0);
    RunConfig again = cfg;
    again.out_path = temp_path(tag + "_b");
    REQUIRE(braces::run(again) == 0);
    std::string a = read_file(cfg.out_path);
    std::string b = read_file(again.out_path);
    CHECK(a == b);
    CHECK_FALSE(a.empty());
  };

  RunConfig verify_free;
  verify_free.command = "verify";
  verify_free.family = "free_d3";
  verify_free.samples = 300;
  verify_free.seed = 2024;
  run_twice(verify_free, "det_verify_free");

  RunConfig verify_fin;
  verify_fin.command = "verify";
  verify_fin.family = "quotient_d2";
  verify_fin.modulus = 4;
  run_twice(verify_fin, "det_verify_fin");

  RunConfig ybe;
  ybe.command = "ybe";
  ybe.family = "quotient_d2";
  ybe.modulus = 3;
  ybe.format = OutputFormat::csv;
  run_twice(ybe, "det_ybe_csv");
}
