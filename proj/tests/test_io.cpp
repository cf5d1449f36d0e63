#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "dilute1d/io.hpp"
#include "dilute1d/scattering.hpp"

using namespace dilute1d;
using nlohmann::json;

TEST_CASE("scalar potential round trip through the document schema") {
  const json doc = {
      {"schema", "dilute1d/1"},
      {"R0", 0.1},
      {"atoms", json::array({{{"x", -0.1}, {"weight", 4.0}},
                             {{"x", 0.1}, {"weight", 4.0}}})}};
  const auto v = io::scalar_potential_from_json(doc);
  CHECK(v.support_radius == 0.1);
  REQUIRE(v.atoms.size() == 2);
  CHECK(v.atoms[0].x == -0.1);
  CHECK(v.atoms[1].weight == 4.0);

  // this is the double-delta 2c(delta_-r0 + delta_r0) with c=2
  const auto res =
      scatter::solve_scalar_scattering(v, 1.0, scatter::Parity::Even);
  CHECK(res.a == doctest::Approx(0.1 - 0.5).epsilon(1e-10));
}

TEST_CASE("unknown fields are rejected") {
  const json doc = {{"schema", "dilute1d/1"}, {"R0", 0.1}, {"bogus", 1}};
  CHECK_THROWS(io::scalar_potential_from_json(doc));
  const json atom_doc = {
      {"schema", "dilute1d/1"},
      {"R0", 0.1},
      {"atoms", json::array({{{"x", 0.0}, {"weight", 1.0}, {"extra", 2}}})}};
  CHECK_THROWS(io::scalar_potential_from_json(atom_doc));
}

TEST_CASE("wrong schema version rejected") {
  const json doc = {{"schema", "dilute1d/2"}, {"R0", 0.1}};
  CHECK_THROWS(io::scalar_potential_from_json(doc));
}

TEST_CASE("matrix potential with per-entry atom increments") {
  // scalar delta plus a swap-commuting diagonal increment
  json doc = {{"schema", "dilute1d/1"},
              {"R0", 0.0},
              {"dim", 4},
              {"atoms", json::array({{{"x", 0.0}, {"weight", 2.0}}})}};
  json part;
  for (int i = 0; i < 4; ++i)
    part[std::to_string(i) + "," + std::to_string(i)] = {
        {"atoms", json::array({{{"x", 0.0}, {"weight", 1.0}}})}};
  doc["matrix_part"] = part;
  const auto m = io::matrix_potential_from_json(doc);
  REQUIRE(m.atoms.size() == 1);
  CHECK(m.atoms[0].weight(0, 0) == doctest::Approx(3.0));
  CHECK(m.atoms[0].weight(0, 1) == 0.0);
}

TEST_CASE("matrix_part density increments unsupported, key format enforced") {
  json doc = {{"schema", "dilute1d/1"}, {"R0", 0.1}, {"dim", 4}};
  doc["matrix_part"]["0,0"] = {
      {"density", {{"xs", json::array({-0.1, 0.1})},
                   {"vals", json::array({1.0, 1.0})}}}};
  CHECK_THROWS(io::matrix_potential_from_json(doc));

  json bad_key = {{"schema", "dilute1d/1"}, {"R0", 0.0}, {"dim", 4}};
  bad_key["matrix_part"]["nope"] = {{"atoms", json::array()}};
  CHECK_THROWS(io::matrix_potential_from_json(bad_key));
}

TEST_CASE("dump_json formats doubles with 17 significant digits, stably") {
  nlohmann::ordered_json j;
  j["x"] = 0.1;
  j["y"] = 1.0 / 3.0;
  const std::string a = io::dump_json(j);
  const std::string b = io::dump_json(j);
  CHECK(a == b);
  CHECK(a.find("0.10000000000000001") != std::string::npos);
  CHECK(a.find("0.33333333333333331") != std::string::npos);
}

TEST_CASE("scalar result serialization flags -inf") {
  scatter::ScalarPotential v;
  v.support_radius = 0.0;
  const auto res =
      scatter::solve_scalar_scattering(v, 1.0, scatter::Parity::Even);
  const auto out = io::scalar_result_to_json(res);
  CHECK(out.at("a") == "-inf");
  CHECK(out.at("schema") == "dilute1d/1");
}
