#include <doctest.h>

#include <cmath>
#include <limits>
#include <string>

#include "vandal/errors.hpp"
#include "vandal/serialize.hpp"

using namespace vandal;

TEST_CASE("numbers keep 17 significant digits") {
  Json j;
  j["x"] = 0.1;
  j["third"] = 1.0 / 3.0;
  j["bad"] = std::numeric_limits<double>::infinity();
  const auto text = dump_json(j, -1);
  CHECK(text.find("0.10000000000000001") != std::string::npos);
  CHECK(text.find("0.33333333333333331") != std::string::npos);
  CHECK(text.find("\"bad\":null") != std::string::npos);
  CHECK(format_number(1.0 / 3.0, 6) == "0.333333");
  CHECK(format_number(std::numeric_limits<double>::infinity(), 6) == "inf");
}

TEST_CASE("node sets round-trip through JSON and text") {
  const auto ns = gen_random_separated(7, 3, 0.1, 12);
  const auto from_json = parse_nodeset(dump_json(to_json(ns)));
  CHECK(from_json.coords() == ns.coords());
  const auto from_text = parse_nodeset(nodeset_to_text(ns));
  CHECK(from_text.coords() == ns.coords());
  CHECK(to_json(ns)["separation"].get<double>() == *ns.cached_separation());
  CHECK(to_json(NodeSet(1, {0.5}))["separation"].is_null());
}

TEST_CASE("text node files skip comments and blank lines") {
  const auto ns = parse_nodeset("# two nodes\n\n0.1 0.2\n  0.3\t0.4  \n");
  CHECK(ns.dim() == 2);
  CHECK(ns.size() == 2);
  CHECK(ns.node(1)[1] == 0.4);
}

TEST_CASE("malformed node input is rejected") {
  CHECK_THROWS_AS(parse_nodeset(""), InvalidInput);
  CHECK_THROWS_AS(parse_nodeset("# only a comment\n"), InvalidInput);
  CHECK_THROWS_AS(parse_nodeset("0.1 0.2\n0.3\n"), InvalidInput);
  CHECK_THROWS_AS(parse_nodeset("0.1 abc\n"), InvalidInput);
  CHECK_THROWS_AS(parse_nodeset("{\"dim\": 2, \"nodes\": [[0.1]]}"), InvalidInput);
  CHECK_THROWS_AS(parse_nodeset("{\"dim\": 0, \"nodes\": []}"), InvalidInput);
  CHECK_THROWS_AS(parse_nodeset("{\"dim\": 1, \"nodes\": [[\"x\"]]}"), InvalidInput);
  CHECK_THROWS_AS(parse_nodeset("{not json"), InvalidInput);
  CHECK_THROWS_AS(read_nodeset_file("/nonexistent/nodes.txt"), InvalidInput);
}

TEST_CASE("spectral results and bound reports carry the documented keys") {
  const auto sp = spectrum(VandermondeSpec(gen_equispaced(3, 1), 6));
  const auto j = to_json(sp);
  for (const char* key : {"sigma_min", "sigma_max", "cond", "path", "residual"}) CHECK(j.contains(key));
  CHECK(j["path"] == "gram");

  SpectralResult singular;
  singular.sigma_max = 1.0;
  singular.cond = std::numeric_limits<double>::infinity();
  CHECK(to_json(singular)["cond"].is_null());

  const auto rep = to_json(ingham_bound(100, 0.02, 1));
  for (const char* key : {"theorem", "applicable", "condition_lhs", "condition_rhs", "bound", "normalized"}) {
    CHECK(rep.contains(key));
  }
  CHECK(rep["bound"].is_null());
  CHECK(rep["theorem"] == "ingham");
  CHECK(to_json(small_r_bound(20, 0.1, 1, 2))["r"] == 2);
}
