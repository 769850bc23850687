#include <doctest.h>

#include "golden.hpp"
#include "isotori/serialize.hpp"

TEST_CASE("golden files") {
  const auto cases = golden::load();
  CHECK(cases.size() >= 10);
  for (const auto& c : cases) {
    CAPTURE(c.name);
    const golden::Outcome o = golden::run(c.args);
    CHECK(o.exit == c.exit);
    if (golden::updating()) {
      std::ofstream(golden::expected_path(c), std::ios::binary) << o.out;
      continue;
    }
    CHECK(o.out == golden::slurp(golden::expected_path(c)));
    // Determinism: a second run is byte-identical.
    CHECK(golden::run(c.args).out == o.out);
  }
}

TEST_CASE("error objects are machine-readable") {
  for (const auto& c : golden::load()) {
    if (c.exit != 2) continue;
    CAPTURE(c.name);
    const auto j = nlohmann::json::parse(golden::run(c.args).out);
    CHECK(j.contains("error"));
    CHECK(j["error"].is_string());
  }
}

TEST_CASE("mirror then dual then dual reproduces the mirror lattice") {
  for (const char* t : {"@t12.json", "@nonsplit.json", "@product.json", "@rescaled.json"}) {
    const golden::Outcome m = golden::run({"mirror", t});
    REQUIRE(m.exit == 0);
    const golden::Outcome d1 = golden::run({"dual", "-"}, m.out);
    REQUIRE(d1.exit == 0);
    const golden::Outcome d2 = golden::run({"dual", "-"}, d1.out);
    REQUIRE(d2.exit == 0);
    auto lattice = nlohmann::ordered_json::parse(m.out);
    lattice.erase("polarization");
    CHECK(nlohmann::ordered_json::parse(d2.out) == lattice);
  }
}

TEST_CASE("stdin input and usage errors") {
  const golden::Outcome d = golden::run({"divisors", "-"}, "[[\"0\",\"3\"],[\"-3\",\"0\"]]");
  CHECK(d.exit == 0);
  CHECK(nlohmann::json::parse(d.out)["divisors"] == nlohmann::json::array({"3"}));
  CHECK(golden::run({}).exit == 2);
  CHECK(golden::run({"classify", "@t12.json"}).exit == 2);
  CHECK(golden::run({"frobnicate"}).exit == 2);
  CHECK(golden::run({"reduce", "--areas", "1,1", "--l-vector", "2,2"}).exit == 2);
}
