#include "rwg/descriptor.hpp"
#include "rwg/error.hpp"
#include "rwg/realweyl.hpp"

#include <doctest.h>

#include <algorithm>

using namespace rwg;

TEST_CASE("descriptor round trip") {
  for (const char* id : {"compact:G2", "split:E8", "painted:B4:2",
                         "sl2R:compactCSA", "g2:intermediate"}) {
    CAPTURE(id);
    Descriptor d = catalog_entry(id);
    std::string text = descriptor_to_json(d);
    Descriptor parsed = descriptor_from_json(text);
    CHECK(descriptor_to_json(parsed) == text);
    CHECK(parsed.type == d.type);
    CHECK(parsed.lattice == d.lattice);
  }
}

TEST_CASE("descriptor schema violations") {
  auto expect_malformed = [](const std::string& text) {
    try {
      descriptor_from_json(text);
      CHECK(false);
    } catch (const validation_error& e) {
      CHECK(e.code() == errc::descriptor_malformed);
    }
  };
  expect_malformed("not json at all");
  expect_malformed("{}");
  expect_malformed(R"({"type": {"series": "A", "rank": 1}})");
  expect_malformed(
      R"({"type": {"series": "A", "rank": 1}, "theta": [[-1]],
          "vogan": {"involution": [1], "painted": []}})");
  expect_malformed(
      R"({"type": {"series": "A", "rank": 1}, "theta": [[-1, 0]]})");
  expect_malformed(
      R"({"type": {"series": "A", "rank": 1}, "theta": [[-1]],
          "lattice": "both"})");
  expect_malformed(
      R"({"type": {"series": "A", "rank": 1}, "theta": [[-1]],
          "grading_seed": [{"root": [1], "sign": 2}]})");

  try {
    descriptor_from_json(R"({"type": {"series": "Z", "rank": 1}, "theta": [[-1]]})");
    CHECK(false);
  } catch (const validation_error& e) {
    CHECK(e.code() == errc::invalid_cartan_type);
  }
}

TEST_CASE("catalog contents") {
  auto ids = catalog_ids();
  auto has = [&](const std::string& id) {
    return std::find(ids.begin(), ids.end(), id) != ids.end();
  };
  CHECK(has("compact:G2"));
  CHECK(has("compact:E8"));
  CHECK(has("split:E8"));
  CHECK(has("split:B1"));
  CHECK(has("painted:A8:4"));
  CHECK(has("painted:D8:8"));
  CHECK(has("sl2R:compactCSA"));
  CHECK(has("g2:intermediate"));
  CHECK_FALSE(has("painted:E8:1"));
  CHECK_FALSE(has("painted:G2:1"));

  // every catalog entry parses, serializes, and round-trips
  for (const auto& id : ids) {
    CAPTURE(id);
    Descriptor d = catalog_entry(id);
    CHECK(descriptor_to_json(descriptor_from_json(descriptor_to_json(d))) ==
          descriptor_to_json(d));
  }

  CHECK_THROWS_AS(catalog_entry("compact:H3"), validation_error);
  try {
    catalog_entry("nonsense:id");
    CHECK(false);
  } catch (const validation_error& e) {
    CHECK(e.code() == errc::unknown_catalog_id);
  }
}

TEST_CASE("lattice flag flows through the descriptor") {
  Descriptor d = catalog_entry("sl2R:compactCSA");
  d.lattice = LatticeMode::root;
  std::string text = descriptor_to_json(d);
  CHECK(text.find("\"lattice\": \"root\"") != std::string::npos);
  Descriptor parsed = descriptor_from_json(text);
  CHECK(parsed.lattice == LatticeMode::root);
  RealWeylDecomposition dec = compute(realize(parsed), parsed.lattice);
  CHECK(dec.order_a == 2);
}

TEST_CASE("vogan node indices are one-based in JSON") {
  Descriptor d = catalog_entry("painted:A3:2");
  std::string text = descriptor_to_json(d);
  CHECK(text.find("\"painted\": [\n      2\n    ]") != std::string::npos);
  Descriptor parsed = descriptor_from_json(text);
  REQUIRE(parsed.vogan.has_value());
  CHECK(parsed.vogan->painted == std::vector<int>{1});
}
