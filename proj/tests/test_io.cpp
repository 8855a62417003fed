#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "hodgering/constructors.hpp"
#include "hodgering/io.hpp"
#include "oracles.hpp"

using namespace hodgering;

namespace {

RingDocument torus_doc(int d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto [r, sigma] = torus_ring(oracles::random_alternating(2 * d, rng));
  return {std::move(r), {{"sigma", std::move(sigma)}}};
}

}  // namespace

TEST_CASE("round trip is byte-identical and structure-preserving") {
  for (int d = 1; d <= 3; ++d) {
    const RingDocument doc = torus_doc(d, 40 + d);
    const std::string text = serialize(doc);
    const RingDocument back = deserialize(text);
    CHECK(serialize(back) == text);
    CHECK(back.ring.splitting.pieces == doc.ring.splitting.pieces);
    CHECK(back.ring.dim_c() == doc.ring.dim_c());
    CHECK(back.ring.mult.size() == doc.ring.mult.size());
    for (const auto& [key, row] : doc.ring.mult)
      CHECK(back.ring.mult.at(key) == row);
    CHECK(vec_equal(back.elements.at("sigma"), doc.elements.at("sigma")));
    CHECK(back.ring.geometric == doc.ring.geometric);
  }
  // rings with nontrivial conjugation round trip too
  auto [r1, sigma1] = elliptic_weight1_ring(1);
  const RingDocument wdoc{std::move(r1), {{"sigma", std::move(sigma1)}}};
  const std::string text = serialize(wdoc);
  const RingDocument back = deserialize(text);
  CHECK(serialize(back) == text);
  REQUIRE(back.ring.conjugation.has_value());
  CHECK(mat_equal(*back.ring.conjugation, *wdoc.ring.conjugation));
}

TEST_CASE("load and save files") {
  const RingDocument doc = torus_doc(1, 50);
  const std::string path = "/tmp/hodgering_io_test.json";
  save(doc, path);
  const RingDocument back = load(path);
  CHECK(serialize(back) == serialize(doc));
  CHECK_THROWS_AS(load("/tmp/hodgering_io_missing.json"), ParseError);
}

TEST_CASE("schema violations are reported") {
  const std::string text = serialize(torus_doc(1, 51));

  SUBCASE("bad schema version") {
    std::string bad = text;
    bad.replace(bad.find("\"1\""), 3, "\"2\"");
    CHECK_THROWS_AS(deserialize(bad), SchemaVersionMismatch);
  }
  SUBCASE("not json") { CHECK_THROWS_AS(deserialize("nope["), ParseError); }
  SUBCASE("lower entries rejected") {
    std::string bad = text;
    const auto at = bad.find("\"i\": 1,");
    REQUIRE(at != std::string::npos);
    bad.replace(at, 7, "\"i\": 3,");  // pairs with "j": 2
    CHECK_THROWS_AS(deserialize(bad), ParseError);
    try {
      deserialize(bad);
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).find("upper-triangular") != std::string::npos);
    }
  }
  SUBCASE("element length mismatch") {
    std::string bad = text;
    const auto at = bad.find("\"elements\"");
    REQUIRE(at != std::string::npos);
    bad.replace(at, 10, "\"elements\": {\"x\": []}, \"unused\"");
    CHECK_THROWS_AS(deserialize(bad), ParseError);
  }
}

TEST_CASE("documents violating ring axioms fail validation") {
  RingDocument doc = torus_doc(1, 52);
  // e_1 e_2 lands in the unit piece: bidegree violation
  doc.ring.mult[(std::uint64_t(1) << 32) | 2] = {{0, 1}};
  CHECK_THROWS_AS(deserialize(serialize(doc)), ValidationFailed);
}

TEST_CASE("matrix loader accepts integers and num/den pairs") {
  const std::string path = "/tmp/hodgering_matrix_test.json";
  {
    std::ofstream out(path);
    out << "[[0, {\"num\": 1, \"den\": 2}], [{\"num\": -1, \"den\": 2}, 0]]";
  }
  const Mat m = load_matrix(path);
  CHECK(m(0, 1) == Rational(1, 2));
  CHECK(m(1, 0) == -m(0, 1));
  {
    std::ofstream out(path);
    out << "[[0, 1], [2]]";
  }
  CHECK_THROWS_AS(load_matrix(path), ParseError);
}

TEST_CASE("report json carries the passed flag and tables") {
  Report rep;
  rep.add({"alpha", true, false, "w", ""});
  rep.add({"beta", false, false, "", ""});
  rep.add({"gamma", false, true, "", "not applicable"});
  rep.hodge_table[{0, 0}] = 1;
  rep.nu[0] = 0;
  CHECK_FALSE(rep.passed);  // beta failed; gamma skipped, not counted
  const std::string js = report_json(rep);
  CHECK(js.find("\"passed\": false") != std::string::npos);
  CHECK(js.find("\"skipped_reason\": \"not applicable\"") != std::string::npos);
  const std::string txt = report_text(rep);
  CHECK(txt.find("FAIL  beta") != std::string::npos);
  CHECK(txt.find("SKIP  gamma") != std::string::npos);
}

TEST_CASE("diamond places entries on the 2p = l axis") {
  const RingDocument doc = torus_doc(2, 53);
  const std::string art = render_diamond(doc.ring);
  // 5 occupied degrees plus the axis marker line
  CHECK(std::count(art.begin(), art.end(), '\n') == 6);
  CHECK(art.find('6') != std::string::npos);
  CHECK(art.find('^') != std::string::npos);
  const std::string js = diamond_json(doc.ring);
  CHECK(js.find("\"hodge_table\"") != std::string::npos);
}
