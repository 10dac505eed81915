#include "doctest.h"
#include "kkit/io.hpp"

using namespace kkit;
using kkit::io::json;

TEST_CASE("hypergraph json round trip") {
  const auto h = Hypergraph::from_lists(5, {{3, 4}, {1, 2}});
  const json j = io::to_json(h);
  CHECK(j == json::parse(R"({"n":5,"edges":[[1,2],[3,4]]})"));
  CHECK(io::hypergraph_from_json(j) == h);
}

TEST_CASE("hypergraph json errors name the field") {
  auto message = [](const char* text) {
    try {
      io::hypergraph_from_json(json::parse(text));
    } catch (const std::invalid_argument& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(message(R"({"edges":[]})").find("'n'") != std::string::npos);
  CHECK(message(R"({"n":3})").find("'edges'") != std::string::npos);
  CHECK(message(R"({"n":3,"edges":[[1,"x"]]})").find("edges[0]") != std::string::npos);
  CHECK(message(R"({"n":3,"edges":[[1,4]]})").find("'edges'") != std::string::npos);
  CHECK(message(R"([1,2])").find("'n'") != std::string::npos);
}

TEST_CASE("signed vector and tau json") {
  const SignedVector x(3, {2, 0, 2, 1, 0, 3});
  CHECK(io::to_json(x) == json::parse(R"({"p":3,"x":[2,0,2,1,0,3]})"));
  CHECK(io::signed_vector_from_json(io::to_json(x)) == x);
  CHECK_THROWS_AS(io::signed_vector_from_json(json::parse(R"({"p":2,"x":[3]})")), std::invalid_argument);

  const auto tau = io::tau_from_json(json::parse(R"({"r":2,"default":1,"table":{"3":0}})"));
  CHECK(tau(3) == 0);
  CHECK(tau(1) == 1);
  CHECK(io::tau_from_json(io::to_json(tau)) == tau);
  CHECK_THROWS_AS(io::tau_from_json(json::parse(R"({"r":2,"default":1,"table":{"x":0}})")), std::invalid_argument);
  CHECK_THROWS_AS(io::tau_from_json(json::parse(R"({"r":2,"default":2})")), std::invalid_argument);
}

TEST_CASE("coloring and kneser json") {
  const auto h = complete_uniform(3, 2);
  const auto c = io::coloring_from_json(json::parse(R"({"colors":[1,2,2]})"), h);
  CHECK(c.color(1) == 2);
  CHECK(io::to_json(c)["colors"] == json::parse("[1,2,2]"));
  CHECK_THROWS_AS(io::coloring_from_json(json::parse(R"({"colors":[1,2]})"), h), std::invalid_argument);
  CHECK_THROWS_AS(io::coloring_from_json(json::parse(R"({"colors":[1,0,2]})"), h), std::invalid_argument);

  const auto table = io::correspondence_table(kneser_power(h, 2));
  CHECK(table[0] == json::parse(R"({"vertex":1,"edge":[1,2]})"));
}

TEST_CASE("lambda json round trip") {
  LambdaMap lambda(2, 2, {1, 1});
  for (std::size_t code = 1; code < lambda.space().size(); ++code)
    lambda.set(code, {lambda.space().first_nonzero(code), alt(lambda.space().decode(code))});
  const json j = io::to_json(lambda);
  CHECK(j["m"] == 2);
  CHECK(j["entries"].size() == 8);
  const LambdaMap back = io::lambda_from_json(j);
  for (std::size_t code = 1; code < lambda.space().size(); ++code) CHECK(back.at(code) == lambda.at(code));

  json broken = j;
  broken["entries"][0]["x"] = json::array({1});
  CHECK_THROWS_AS(io::lambda_from_json(broken), std::invalid_argument);
  broken = j;
  broken["gamma"] = json::array({1});
  CHECK_THROWS_AS(io::lambda_from_json(broken), std::invalid_argument);
}

TEST_CASE("ramsey report json") {
  const auto rep = ramsey_number_exact(RamseyInstance(2, {2, 2}));
  const json j = io::to_json(rep);
  CHECK(j["exact"] == 5);
  CHECK(j["formula"] == 5);
  CHECK(j["status"] == "confirmed");
  CHECK(j["verified_false_at"] == 4);
  CHECK(j["verified_true_at"] == 5);
  CHECK(j["instance"] == json::parse(R"({"r":2,"s":[2,2]})"));
}

TEST_CASE("missing files") { CHECK_THROWS_AS(io::read_json_file("/nonexistent/file.json"), std::invalid_argument); }
