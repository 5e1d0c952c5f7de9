#include "doctest.h"
#include "json.hpp"
#include "tanlim/cli.hpp"

using namespace tanlim;
using namespace tanlim::cli;

namespace {

Request req(std::string command, std::string surface, std::string divisor = "") {
  Request r;
  r.command = std::move(command);
  r.surface = std::move(surface);
  r.divisor = parse_divisor(divisor);
  return r;
}

}  // namespace

TEST_CASE("documented commands") {
  auto limit = run(req("limit", "z^2 - x^2*(x + y^2)"));
  CHECK(limit.status == 0);
  CHECK(limit.out == "Sigma_o(S) = pencil of planes containing {x=z=0}; dual points: (0:0:1)\n");

  auto decide = run(req("decide", "z^5 - x^2*y", "x"));
  CHECK(decide.status == 0);
  CHECK(decide.out == "FULL (non-well-behaved exceptional curve at depth 2)\n");

  auto cone = run(req("tangent-cone", "z^2 - x^3"));
  CHECK(cone.status == 0);
  CHECK(cone.out == "z^2\n");

  auto cusp = run(req("decide", "z^2 - x^3", "x"));
  CHECK(cusp.out == "FINITE {(0:0:1)}\n");
}

TEST_CASE("other commands") {
  CHECK(run(req("discriminant", "z^2 - x^3 - y^2")).out == "x^3 + y^2\n");
  auto b = run(req("blowup", "z^5 - x^2*y"));
  CHECK(b.status == 0);
  CHECK(b.out.find("y1^2*z1^5 - x1^2") != std::string::npos);
  auto t = run(req("trace", "z^5 - x^2*y", "x"));
  CHECK(t.status == 0);
  CHECK(t.out.find("SECONDSEQ") != std::string::npos);
  Request at = req("tangent-cone", "z^2 - (x - 1)^3");
  at.point = parse_point("1, 0, 0");
  CHECK(run(at).out == "z^2\n");
}

TEST_CASE("input errors") {
  auto bad = run(req("limit", "z^2 - x^^3"));
  CHECK(bad.status == 1);
  CHECK(bad.err.find("line 1, column") != std::string::npos);

  Request off = req("decide", "z^2 - x^3", "x");
  off.point = {1, 0, 0};
  CHECK(run(off).status == 1);

  CHECK(run(req("decide", "z^2 - x^3")).status == 1);
  CHECK(run(req("frobnicate", "z")).status == 1);
  CHECK_THROWS(parse_point("1,2"));
  CHECK_THROWS(parse_point("1,a,2"));
  CHECK_THROWS(parse_divisor("w"));
  CHECK_THROWS(parse_divisor("xx"));
  CHECK(parse_divisor("x,z") == std::vector<std::size_t>{0, 2});
  CHECK(parse_point("1/2,-3,0") == std::vector<Rat>{Rat(1, 2), -3, 0});
}

TEST_CASE("depth bound reports unresolved") {
  Request r = req("decide", "z^5 - x^2*y", "x");
  r.max_depth = 1;
  auto res = run(r);
  CHECK(res.status == 2);
  CHECK(res.out.find("unresolved:") != std::string::npos);
}

TEST_CASE("json trace round-trips") {
  for (auto r : {req("limit", "z^2 - x^2*(x + y^2)"), req("decide", "z^5 - x^2*y", "x"),
                 req("limit", "256*z^3 - 27*y^4 - 128*x^2*z^2 + 144*x*y^2*z + 16*x^4*z - 4*x^3*y^2")}) {
    r.json = true;
    auto res = run(r);
    REQUIRE(res.status == 0);
    auto j = nlohmann::json::parse(res.out);
    CHECK(j["trace"]["nodes"].size() > 1);
    CHECK(j["verdict"].contains("kind"));
    CHECK(j["verdict"].contains("points"));
    CHECK(j["verdict"].contains("pencils"));
    CHECK(j["verdict"].contains("unresolved"));
    CHECK(verify_json_trace(res.out));
  }
  auto j = nlohmann::json::parse(run([] {
                                   auto r = req("decide", "z^5 - x^2*y", "x");
                                   r.json = true;
                                   return r;
                                 }()).out);
  CHECK(j["verdict"]["kind"] == "full");
  j["trace"]["nodes"][1]["strict_transform"] = "x1^2*z1^5 - y1^2";
  CHECK_FALSE(verify_json_trace(j.dump()));
}
