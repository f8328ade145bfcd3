#include <doctest.h>

#include <filesystem>

#include "geocrystal/commands.hpp"
#include "geocrystal/error.hpp"
#include "geocrystal/io.hpp"

using namespace geocrystal;
using json = nlohmann::json;

namespace {

json data(const char* name) { return io::read_json_file(std::string(GEOCRYSTAL_TEST_DATA) + "/" + name); }

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("matrix round trip") {
    const MatRF m = sl::gen_x(1, RatFun::parse("(3/2)*t/(u+1)"), 2);
    const json j = io::to_json(m);
    CHECK(j["n"] == 2);
    CHECK(j["entries"].size() == 3);
    CHECK(io::matrix_from_json(j) == m);
    CHECK_THROWS_AS(io::matrix_from_json(json{{"n", 1}, {"entries", {{"1", "0"}}}}), ParseError);
  }

  TEST_CASE("chart round trip") {
    const auto p = charts::symbolic_a(3);
    const json j = io::to_json(p);
    CHECK(j["chart"] == "a");
    CHECK(j["coords"]["2,3"] == "a[2,3]");
    CHECK(std::get<charts::TorusPointA>(io::chart_from_json(j)) == p);
    const auto q = charts::symbolic_A(2);
    CHECK(std::get<charts::TorusPointB>(io::chart_from_json(io::to_json(q))) == q);

    const auto file = io::chart_from_json(data("chartA_n1.json"));
    REQUIRE(std::holds_alternative<charts::TorusPointB>(file));
    CHECK(std::get<charts::TorusPointB>(file).A(1, 1) == RatFun(6));

    CHECK_THROWS_AS(io::chart_from_json(json{{"n", 1}, {"chart", "b"}, {"coords", {{"1,1", "1"}}}}), ParseError);
    CHECK_THROWS_AS(io::chart_from_json(json{{"n", 2}, {"chart", "a"}, {"coords", {{"1,1", "1"}}}}), ParseError);
  }

  TEST_CASE("B# element round trip") {
    const gyt::SharpElement v(2, {2, 1, 3});
    CHECK(io::sharp_from_json(data("sharp_213.json")) == v);
    CHECK(io::sharp_from_json(io::to_json(v)) == v);
    CHECK(io::to_json(v)["B"]["2,3"] == 3);
    CHECK_THROWS_AS(io::sharp_from_json(json{{"n", 2}, {"B", {{"1,2", 1}}}}), ParseError);
    CHECK_THROWS_AS(io::sharp_from_json(json{{"n", 1}, {"B", {{"1,2", "x"}}}}), ParseError);
    CHECK_THROWS_AS(io::sharp_from_json(json::parse("[1, 2]")), ParseError);
  }

  TEST_CASE("tableau round trip") {
    const gyt::Tableau t{{3, 1}, {{1, 1, 2}, {3}}};
    CHECK(io::tableau_from_json(io::to_json(t)) == t);
    CHECK_THROWS_AS(io::tableau_from_json(json::parse(R"({"shape": [2], "rows": [[1]]})")), ParseError);
  }

  TEST_CASE("identity report") {
    const json j = io::to_json(sl::IdentityReport{"demo", true, std::nullopt});
    CHECK(j["identity"] == "demo");
    CHECK(j["holds"] == true);
    CHECK(j["witness"].is_null());
  }

  TEST_CASE("file helpers") {
    const auto path = std::filesystem::temp_directory_path() / "geocrystal_io_test.json";
    io::write_text_file(path.string(), "{\"n\": 1, \"B\": {\"1,2\": 4}}\n");
    CHECK(io::sharp_from_json(io::read_json_file(path.string())) == gyt::SharpElement(1, {4}));
    std::filesystem::remove(path);
    CHECK_THROWS(io::read_json_file("/nonexistent/geocrystal.json"));
    CHECK(io::index_key(1, 3) == "1,3");
  }

  TEST_CASE("act command") {
    auto r = cli::cmd_act("sharp", 2, "1", data("sharp_213.json"));
    CHECK(io::sharp_from_json(r.state) == gyt::SharpElement(2, {2, 1, 2}));
    auto back = cli::cmd_act("sharp", 2, "-1", r.state);
    CHECK(io::sharp_from_json(back.state) == gyt::SharpElement(2, {2, 1, 3}));

    auto g = cli::cmd_act("geomA", 1, "3", data("chartA_n1.json"));
    CHECK(g.state["coords"]["1,1"] == "2");

    CHECK_THROWS_AS(cli::cmd_act("geomAlpha", 1, "2", data("charta_zero_phi.json")), PhiVanishes);
    CHECK_THROWS(cli::cmd_act("geomA", 1, "0", data("chartA_n1.json")));
    CHECK_THROWS(cli::cmd_act("sharp", 3, "1", data("sharp_213.json")));
  }

  TEST_CASE("graph command") {
    const gyt::SharpElement zero(1);
    const auto slice = cli::cmd_graph(zero, 2, 4);
    CHECK(slice.nodes.size() == 5);
    CHECK(slice.arcs.size() == 8);
    CHECK(cli::cmd_graph(zero, 0, 4).nodes.size() == 1);
    CHECK_THROWS(cli::cmd_graph(zero, 5, 4));
    CHECK(slice.to_dot() == cli::cmd_graph(zero, 2, 4).to_dot());
    CHECK(slice.to_dot().rfind("digraph", 0) == 0);
    CHECK(slice.to_json()["nodes"].size() == 5);
    // Rank 2 radius 1: the root plus one e and one f neighbour per index.
    CHECK(cli::cmd_graph(gyt::SharpElement(2), 1, 4).nodes.size() == 5);
  }

  TEST_CASE("verify command") {
    cli::VerifyOptions opts;
    opts.n = 2;
    const auto reports = cli::cmd_verify("verma", opts);
    REQUIRE(reports.size() == 1);
    CHECK(reports[0].check == "verma[1,2]");
    CHECK(reports[0].holds);
    CHECK(reports[0].to_line().rfind("PASS verma[1,2] n=2", 0) == 0);

    opts.n = 1;
    CHECK(cli::cmd_verify("verma", opts).empty());
    for (const auto& r : cli::cmd_verify("all", opts)) CHECK(r.holds);

    opts.n = 9;
    CHECK_THROWS_AS(cli::cmd_verify("verma", opts), std::invalid_argument);
    CHECK_THROWS_AS(cli::cmd_verify("nonsense", opts), std::invalid_argument);
    CHECK(cli::suite_cap("verma") == 3);
    CHECK(cli::suite_cap("sharp-axioms") == 5);
  }

  TEST_CASE("trop command") {
    CHECK(cli::cmd_trop_named("alpha_ik", 1, 1, 1, {7, 1}).to_line() == "1");
    CHECK(cli::cmd_trop_named("gammaA", 2, 1, 1, {2, 1, 3}).to_line() == "-3 -4");
    const auto fwd = cli::cmd_trop_named("xi", 2, 1, 1, {1, -2, 4});
    std::vector<std::int64_t> mid;
    for (const auto& v : fwd.values) mid.push_back(*v);
    std::vector<std::int64_t> round;
    for (const auto& v : cli::cmd_trop_named("xi_inv", 2, 1, 1, mid).values) round.push_back(*v);
    CHECK(round == std::vector<std::int64_t>{1, -2, 4});
    CHECK(cli::cmd_trop_expr("(x+y)/z", {}, {2, 0, 1}).to_line() == "1");
    CHECK_THROWS_AS(cli::cmd_trop_expr("x - y", {}, {1, 2}), NotPositive);
    CHECK_THROWS_AS(cli::cmd_trop_named("gammaA", 2, 1, 1, {1, 2}), DimensionMismatch);
    CHECK_THROWS(cli::cmd_trop_named("bogus", 2, 1, 1, {1, 2, 3}));
  }
}
