#include <doctest.h>

#include "lctkit/json_io.hpp"

using namespace lctkit;
using lctkit::io::json;

TEST_CASE("verdict JSON") {
  const auto t2 = io::verdict_to_json(Rational(5, 6), t2_member(Rational(5, 6)));
  CHECK(t2["c"] == "5/6");
  CHECK(t2["verdict"] == "in_t2");
  CHECK(t2["witness"] == json::parse(R"([{"m":1,"k":1},{"m":2,"k":0},{"m":3,"k":0}])"));
  CHECK(t2["theta"] == json::parse(R"(["5/6","1/2","2/3"])"));

  const auto t1 = io::verdict_to_json(Rational(1, 3), t2_member(Rational(1, 3)));
  CHECK(t1["verdict"] == "in_t1");
  CHECK(t1["n"] == 3);

  const auto no = io::verdict_to_json(Rational(5, 7), t2_member(Rational(5, 7)));
  CHECK(no["verdict"] == "not_in_t2");
  CHECK(no["bounds"]["r_min"] == 3);
  CHECK(no["bounds"]["m_bounds"].is_array());

  CHECK(io::witness_terms_text({{1, 1}, {2, 0}}) == "(1,1) (2,0)");
}

TEST_CASE("graph JSON round trip") {
  const auto j = json::parse(R"({
    "curves": [{"id": 1, "self_int": -3, "f_mult": 2}, {"id": 2, "self_int": -2, "f_mult": 3},
               {"id": 3, "self_int": -1, "f_mult": 6}],
    "edges": [[1, 3], [2, 3]],
    "ends": [{"curve": 3, "mult": "1"}]
  })");
  const auto g = io::graph_from_json(j);
  CHECK(lct_from_graph(g).value == Rational(5, 6));
  const auto back = io::graph_to_json(g);
  CHECK(io::graph_to_json(io::graph_from_json(back)) == back);
  CHECK(back["ends"][0]["mult"] == "1");
}

TEST_CASE("malformed graph JSON is a structural error") {
  CHECK_THROWS_AS(io::graph_from_json(json::array()), StructuralError);
  CHECK_THROWS_AS(io::graph_from_json(json::parse(R"({"curves": [{"id": 1}]})")), StructuralError);
  CHECK_THROWS_AS(io::graph_from_json(json::parse(R"({"curves": [{"id": "a", "self_int": -1}]})")),
                  StructuralError);
  CHECK_THROWS_AS(io::graph_from_json(json::parse(R"({"curves": [{"id": 1, "self_int": -1}], "edges": [[1]]})")),
                  StructuralError);
  CHECK_THROWS_AS(
      io::graph_from_json(json::parse(R"({"curves": [{"id": 1, "self_int": -1}], "ends": [{"curve": 1, "mult": "x"}]})")),
      StructuralError);
  CHECK_THROWS_AS(io::load_graph("/nonexistent/graph.json"), StructuralError);
}

TEST_CASE("rationals in JSON") {
  CHECK(io::rational_from_json(json(3)) == Rational(3));
  CHECK(io::rational_from_json(json("2/4")) == Rational(1, 2));
  CHECK_THROWS_AS(io::rational_from_json(json(0.5)), StructuralError);
}

TEST_CASE("ledger and instance JSON") {
  EqSLedger l;
  l.diff_terms = {{2, 1}};
  l.c = Rational(1, 3);
  const auto j = io::ledger_to_json(l);
  CHECK(j["terms"][0]["s"] == 2);
  CHECK(j["c"] == "1/3");
  const PairDiscrInstance inst{CyclicQuotientGerm(5, 2), {Rational(1), Rational(11, 12)}, 6};
  CHECK(io::pair_instance_to_json(inst)["lambda2"] == "11/12");
  CHECK(io::lattice_vector_to_json({Rational(1, 5), Rational(2, 5)}) == json::parse(R"(["1/5","2/5"])"));
}
