#include "lhp/report.hpp"

#include <catch_amalgamated.hpp>

using namespace lhp;

namespace {

void check_round_trip(const Report& rep) {
  const json j = rep;
  CHECK(j.at("status") == (rep.pass ? "pass" : "fail"));
  const Report back = json::parse(j.dump()).get<Report>();
  CHECK(back == rep);
  CHECK(back.exit_code() == (rep.pass ? 0 : 1));
  if (!rep.pass) CHECK(j.contains("witness"));
}

}  // namespace

TEST_CASE("parse_polynomial", "[report]") {
  CHECK(parse_polynomial("2,3,1") == Polynomial{2, 3, 1});
  CHECK(parse_polynomial(" 1/2 , -3 ") == Polynomial{Rational(1, 2), -3});
  CHECK(parse_polynomial(R"(["0", "1"])") == Polynomial{0, 1});
  CHECK(parse_polynomial("[]").is_zero());
  CHECK_THROWS_AS(parse_polynomial("1,,2"), UsageError);
  CHECK_THROWS_AS(parse_polynomial("1,x"), UsageError);
  CHECK_THROWS_AS(parse_polynomial("[1, 2"), UsageError);
  CHECK_THROWS_AS(parse_polynomial(R"(["1", "0"])"), UsageError);
}

TEST_CASE("parse_nx_matrix", "[report]") {
  const NXMatrix m = parse_nx_matrix(R"([[{"const": "1"}, {"const": "1"}], [{"x": "1"}, {"x": "2"}]])");
  CHECK(m.rows() == 2);
  CHECK(m(1, 1).is_linear());
  CHECK(m(1, 1).value() == 2);
  const json saved = cmd_lemma_matrix(5);
  CHECK(parse_nx_matrix(saved.dump()) == lemma_matrix(5));
  CHECK(parse_nx_matrix("[]").rows() == 0);
  CHECK_THROWS_AS(parse_nx_matrix(R"([[{"const": "-1"}]])"), UsageError);
  CHECK_THROWS_AS(parse_nx_matrix(R"([[{"x": "0"}]])"), UsageError);
  CHECK_THROWS_AS(parse_nx_matrix(R"([[{"const": "1"}], []])"), UsageError);
  CHECK_THROWS_AS(parse_nx_matrix("not json"), UsageError);
}

TEST_CASE("local-h command", "[report]") {
  const Report rep = cmd_local_h(3, 3, false, true);
  CHECK(rep.pass);
  CHECK(rep.result.at("polynomial") == json(Polynomial{0, 1, 1}));
  CHECK(rep.result.at("real_rooted") == true);
  CHECK(rep.lines.front() == "local h (n=3, r=3): x + x^2");
  check_round_trip(rep);

  const Report zero = cmd_local_h(1, 2, false, true);
  CHECK(zero.pass);
  CHECK(zero.lines.front() == "local h (n=1, r=2): 0");

  const Report oracle = cmd_local_h(2, 3, true, false);
  CHECK(oracle.result.at("match") == true);
  CHECK(oracle.result.at("oracle") == json(Polynomial{0, 2}));
  check_round_trip(oracle);

  CHECK_THROWS_AS(cmd_local_h(5, 3, true, false), UsageError);
  CHECK_THROWS_AS(cmd_local_h(3, 5, true, false), UsageError);
  CHECK_THROWS_AS(cmd_local_h(3, 0, false, false), UsageError);
}

TEST_CASE("sections command", "[report]") {
  const Report rep = cmd_sections(2, 3, true);
  CHECK(rep.pass);
  CHECK(rep.result.at("sections").at("sections") == json::parse(R"([["1"], ["2"], ["1"]])"));
  CHECK(rep.result.at("interlacing").at("interlacing") == true);
  check_round_trip(rep);
  CHECK(cmd_sections(0, 4, true).pass);
  CHECK(cmd_sections(3, 3, true).result.at("sections").at("sections")[0] == json::parse(R"(["1", "1"])"));
  CHECK_THROWS_AS(cmd_sections(2, 1, true), UsageError);
}

TEST_CASE("nx-check command", "[report]") {
  const Report fail = cmd_nx_check(parse_nx_matrix(R"([[{"const": "1"}, {"const": "1"}], [{"x": "1"}, {"x": "2"}]])"));
  CHECK_FALSE(fail.pass);
  CHECK(fail.exit_code() == 1);
  CHECK(fail.result.at("condition") == 3);
  CHECK(fail.result.at("rows") == json::parse("[1, 2]"));
  CHECK(fail.result.at("cols") == json::parse("[1, 2]"));
  CHECK(fail.lines.front() == "fails condition 3 at rows(1,2) x cols(1,2), ad - bc = 1");
  check_round_trip(fail);

  CHECK(cmd_nx_check(NXMatrix(0, 0)).pass);
  CHECK(cmd_nx_check(lemma_matrix(5)).pass);
}

TEST_CASE("lemma-matrix command", "[report]") {
  const Report rep = cmd_lemma_matrix(3);
  CHECK(rep.lines == std::vector<std::string>{"1 1 0", "0 1 1", "x 0 1"});
  check_round_trip(rep);
  CHECK_THROWS_AS(cmd_lemma_matrix(1), UsageError);
}

TEST_CASE("verify-theorem command", "[report]") {
  const Report rep = cmd_verify_theorem(8, 6, false);
  CHECK(rep.pass);
  CHECK(rep.lines.back() == "48 cells, 0 failures");
  CHECK(rep.result.at("cells").size() == 48);

  const Report tiny = cmd_verify_theorem(1, 2, false);
  CHECK(tiny.pass);
  CHECK(tiny.result.at("cells")[1].at("local_h") == json::array());

  const Report oracle = cmd_verify_theorem(4, 4, true);
  CHECK(oracle.pass);
  for (const auto& cell : oracle.result.at("cells")) CHECK(cell.at("oracle_match") == true);
  check_round_trip(oracle);

  CHECK_THROWS_AS(cmd_verify_theorem(0, 3, false), UsageError);
}

TEST_CASE("isolate-roots command", "[report]") {
  const Report rep = cmd_isolate_roots(Polynomial{2, 3, 1}, std::nullopt);
  CHECK(rep.pass);
  CHECK(rep.result.at("real_rooted") == true);
  CHECK(rep.result.at("isolation").at("roots").size() == 2);
  check_round_trip(rep);

  const Report refined = cmd_isolate_roots(Polynomial{-2, 0, 1}, Rational(1, 100));
  for (const auto& root : refined.result.at("isolation").at("roots"))
    CHECK(root.at("hi").get<Rational>() - root.at("lo").get<Rational>() < Rational(1, 100));

  const Report complex_roots = cmd_isolate_roots(Polynomial{1, 0, 1}, std::nullopt);
  CHECK(complex_roots.result.at("real_rooted") == false);

  CHECK_THROWS_AS(cmd_isolate_roots(Polynomial{}, std::nullopt), UsageError);
  CHECK_THROWS_AS(cmd_isolate_roots(Polynomial{1, 1}, Rational(0)), UsageError);
}

TEST_CASE("interlaces command", "[report]") {
  const Report yes = cmd_interlaces(Polynomial{1, 1}, Polynomial{2, 3, 1});
  CHECK(yes.pass);
  check_round_trip(yes);

  const Report no = cmd_interlaces(Polynomial{0, 1}, Polynomial{2, 3, 1});
  CHECK_FALSE(no.pass);
  CHECK(no.witness->at("kind") == "chain");
  check_round_trip(no);

  const Report not_real = cmd_interlaces(Polynomial{1, 0, 1}, Polynomial{0, 1, 1});
  CHECK_FALSE(not_real.pass);
  CHECK(not_real.witness->contains("reason"));

  CHECK_THROWS_AS(cmd_interlaces(Polynomial{0, -1}, Polynomial{0, 1, 1}), UsageError);
}

TEST_CASE("oracle-local-h command", "[report]") {
  const Report rep = cmd_oracle_local_h(2, 3);
  CHECK(rep.pass);
  CHECK(rep.result.at("f_vector") == json::parse("[1, 4, 3]"));
  CHECK(rep.result.at("h_polynomial") == json(Polynomial{1, 2}));
  CHECK(rep.result.at("local_h") == json(Polynomial{0, 2}));
  CHECK(rep.result.at("face_count_law") == true);
  check_round_trip(rep);
  CHECK_THROWS_AS(cmd_oracle_local_h(5, 2), UsageError);
  CHECK_THROWS_AS(cmd_oracle_local_h(0, 2), UsageError);
}

TEST_CASE("barycentric command", "[report]") {
  const Report rep = cmd_barycentric(4);
  CHECK(rep.pass);
  CHECK(rep.result.at("local_h") == json(Polynomial{0, 1, 7, 1}));
  check_round_trip(rep);
  CHECK_THROWS_AS(cmd_barycentric(8), UsageError);
  CHECK_THROWS_AS(cmd_barycentric(0), UsageError);
}

TEST_CASE("report JSON validation", "[report]") {
  json j = cmd_local_h(2, 2, false, false);
  j["status"] = "maybe";
  CHECK_THROWS(j.get<Report>());
  j["status"] = "fail";
  CHECK_THROWS(j.get<Report>());
  CHECK(render_text(cmd_local_h(2, 2, false, false)) == "local h (n=2, r=2): x\nstatus: pass\n");
}
