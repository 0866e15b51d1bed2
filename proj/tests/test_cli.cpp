#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "helpers.hpp"
#include "prodtri/cli.hpp"
#include "prodtri/families.hpp"
#include "prodtri/io.hpp"
#include "prodtri/reference_data.hpp"

using namespace prodtri;
using namespace prodtri::test;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

HttpGet no_network() {
  return [](const std::string&) -> std::optional<std::string> { return std::nullopt; };
}

Run run(std::vector<std::string> args, const std::string& input = {}, HttpGet http = no_network()) {
  std::ostringstream out, err;
  std::istringstream in(input);
  const int code = run_cli(args, out, err, in, std::move(http));
  return {code, out.str(), err.str()};
}

fs::path scratch_dir(const std::string& name) {
  const auto p = fs::temp_directory_path() / ("prodtri-cli-" + std::to_string(::getpid()) + "-" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

}  // namespace

TEST_CASE("triangle") {
  const auto h1 = run({"triangle", "hanna", "--r", "1", "--n", "7"});
  CHECK(h1.code == 0);
  CHECK(h1.out == render_plain(reference::hanna(1)));

  const auto custom = run({"triangle", "custom", "--a", "1,0,0,0,0,0,0", "--n", "7"});
  CHECK(custom.code == 0);
  CHECK(custom.out == render_plain(reference::hanna(0)));

  const auto piped = run({"triangle", "custom", "--a", "-", "--n", "7"}, "1 1 3 13 71 461\n");
  CHECK(piped.out == render_plain(reference::hanna(1)));

  const auto from_cf = run({"triangle", "custom", "--cf", "S:1,2,2,3,3,4,4", "--n", "7"});
  CHECK(from_cf.out == render_plain(reference::hanna(1)));

  const auto file = scratch_dir("afile") / "a.txt";
  std::ofstream(file) << "1\n2\n4\n8\n16\n32\n";
  CHECK(run({"triangle", "custom", "--a-file", file.string(), "--n", "7"}).out ==
        render_plain(reference::geometric_triangle(2)));

  CHECK(run({"triangle", "hanna", "--r", "1", "--production"}).out == render_plain(reference::hanna1_production()));
  CHECK(run({"triangle", "appell", "--r", "2", "--delta"}).out == render_plain(reference::geometric_delta(2)));
  CHECK(run({"triangle", "hanna-poly", "--n", "8"}).out == render_plain(reference::hanna_coefficients()));
  CHECK(run({"triangle", "appell-poly"}).out == render_plain(reference::appell_coefficients()));

  const auto deleham = run({"triangle", "deleham", "--n", "6", "--compare", "--format", "json"});
  CHECK(deleham.code == 0);
  const auto dj = nlohmann::json::parse(deleham.out);
  CHECK(matrix_from_json(dj.at("coefficients")) == reference::hanna_coefficients().leading_block(6).square());
}

TEST_CASE("every triangle format re-parses or matches the library rendering") {
  for (long r = 0; r <= 4; ++r) {
    const auto m = hanna_triangle(r, 9);
    const auto n = std::string("9"), rs = std::to_string(r);
    const auto json = run({"triangle", "hanna", "--r", rs, "--n", n, "--format", "json"});
    REQUIRE(json.code == 0);
    CHECK(matrix_from_json(nlohmann::json::parse(json.out)) == m.square());
    CHECK(run({"triangle", "hanna", "--r", rs, "--n", n, "--format", "csv"}).out == render_csv(m));
    CHECK(run({"triangle", "hanna", "--r", rs, "--n", n, "--format", "latex"}).out == render_latex(m));
  }
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({"triangle", "hanna", "--r", "-1"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"triangle"}).code == 2);
  CHECK(run({"triangle", "pascal"}).code == 2);
  CHECK(run({"triangle", "custom"}).code == 2);
  CHECK(run({"triangle", "custom", "--a", "1,x"}).code == 2);
  CHECK(run({"triangle", "custom", "--a", "1,1", "--n", "7"}).code == 2);
  CHECK(run({"triangle", "hanna", "--n", "0"}).code == 2);
  CHECK(run({"triangle", "hanna", "--format", "yaml"}).code == 2);
  CHECK(run({"cf", "fit", "--seq", "1,3,11"}).code == 2);
  CHECK(run({"cf", "expand", "--s", "1,2", "--terms", "5"}).code == 2);
  CHECK(run({"oeis", "A000000"}).code == 2);
  CHECK(run({"oeis", "X1"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("verify") {
  const auto prop = run({"verify", "proposition", "--a", "random", "--trials", "100", "--n", "12", "--seed", "7"});
  CHECK(prop.code == 0);
  CHECK(prop.out == "proposition: 100/100 hold (N = 12)\n");

  const auto pj = run({"verify", "proposition", "--a", "2,-3,5,7,0,1", "--n", "6", "--json"});
  CHECK(pj.code == 0);
  CHECK(nlohmann::json::parse(pj.out).at("ok") == true);

  const auto hanna = run({"verify", "hanna", "--r", "3", "--n", "7"});
  CHECK(hanna.code == 0);
  CHECK(hanna.out.find("[pass] H(3): matches the published block") != std::string::npos);
  CHECK(hanna.out.find("[fail]") == std::string::npos);
  CHECK(run({"verify", "hanna", "--r", "6", "--n", "10"}).code == 0);

  const auto claims = run({"verify", "claims", "--offline", "--json"});
  CHECK(claims.code == 0);
  const auto cj = nlohmann::json::parse(claims.out);
  CHECK(cj.at("fail") == 0);
  std::set<std::string> deviations;
  for (const auto& c : cj.at("claims"))
    if (c.at("status") == "deviation") deviations.insert(c.at("id").get<std::string>());
  for (const char* id : {"mk.m-side", "mk.jacobi", "hanna.m-cf", "hanna.printed-recurrence", "appell.jacobi",
                         "geometric2.delta", "h1.invert", "oeis.A111544"})
    CHECK(deviations.count(id) == 1);
}

TEST_CASE("cf") {
  CHECK(run({"cf", "expand", "--s", "1,2,2,3,3,4,4", "--terms", "7"}).out == "1,1,3,13,71,461,3447\n");
  CHECK(run({"cf", "fit", "--seq", "1,3,11,49,261,1631", "--depth", "3"}).out == "J: a=3,5,7 b=2,6\n");
  CHECK(run({"cf", "contract", "--s", "1,2,2,3,3,4"}).out == "J: a=1,4,6 b=2,6\n");
  CHECK(run({"cf", "expand", "--ja", "3,5,7,9,11", "--jb", "2,6,12,20", "--terms", "10"}).out ==
        "1,3,11,49,261,1631,11743,95901,876809,8877691\n");
  CHECK(run({"cf", "expand", "--s", "2", "--finite", "--terms", "4"}).out == "1,2,4,8\n");
  CHECK(run({"cf", "fit", "--seq", "1,1,3,13,71,461,3447", "--depth", "6", "--kind", "stieltjes"}).out ==
        "S: c=1,2,2,3,3,4\n");
  const auto half = run({"cf", "expand", "--s", "1/2", "--finite", "--terms", "3"});
  CHECK(half.code == 2);  // list entries are integers
  const auto degenerate = run({"cf", "fit", "--seq", "1,0,0,1", "--depth", "2"});
  CHECK(degenerate.code == 1);
  CHECK(degenerate.err.find("degenerate") != std::string::npos);

  const auto json = run({"cf", "fit", "--seq", "1,3,11,49,261,1631", "--depth", "3", "--format", "json"});
  CHECK(cf_from_json(nlohmann::json::parse(json.out)) == CFSpec{jacobi({3, 5, 7}, {2, 6})});
}

TEST_CASE("oeis") {
  const auto cache = scratch_dir("cache");
  const std::string dir = cache.string();
  auto r = run({"oeis", "A111530", "--against", "hanna-col --r 3", "--offline", "--cache-dir", dir});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("A111530: match", 0) == 0);
  r = run({"oeis", "A001339", "--against", "binomial-transform --r 1 --base shifted-factorials", "--offline",
           "--cache-dir", dir});
  CHECK(r.code == 0);
  r = run({"oeis", "A003319", "--against", "cf --s 1,2,2,3,3,4,4,5,5,6,6", "--start", "1", "--limit", "12",
           "--offline", "--cache-dir", dir});
  CHECK(r.code == 0);
  r = run({"oeis", "A003319", "--against", "hanna-col --r 2", "--start", "1", "--offline", "--cache-dir", dir});
  CHECK(r.code == 1);
  CHECK(r.out.find("mismatch at term 2") != std::string::npos);
  CHECK(run({"oeis", "A104980", "--against", "hanna-triangle --r 1", "--offline"}).code == 0);
  CHECK(run({"oeis", "A111184", "--against", "deleham", "--offline"}).code == 0);
  CHECK(run({"oeis", "A003319", "--against", "martin-kearney --alpha 1 --beta -2 --gamma 1", "--start", "1",
             "--offline"})
            .code == 0);
  CHECK(run({"oeis", "A081923", "--against", "binomial-transform --r 2", "--offline"}).code == 0);
  CHECK(run({"oeis", "A003319", "--against", "frobnicate", "--offline"}).code == 2);

  CHECK(run({"oeis", "A000045", "--offline", "--cache-dir", dir}).code == 3);
  CHECK(run({"oeis", "A000045", "--cache-dir", dir}).code == 3);

  const std::string body = "1 1\n2 1\n3 2\n4 3\n5 5\n6 8\n";
  HttpGet fake = [&](const std::string& url) -> std::optional<std::string> {
    if (url == "https://oeis.org/A000045/b000045.txt") return body;
    return std::nullopt;
  };
  r = run({"oeis", "A000045", "--cache-dir", dir, "--json"}, {}, fake);
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out).at("source") == "fetched");
  r = run({"oeis", "A000045", "--offline", "--cache-dir", dir, "--json"});
  CHECK(nlohmann::json::parse(r.out).at("source") == "cached");

  // OEIS_CACHE_DIR is honoured when --cache-dir is absent.
  ::setenv("OEIS_CACHE_DIR", dir.c_str(), 1);
  CHECK(run({"oeis", "A000045", "--offline"}).code == 0);
  ::unsetenv("OEIS_CACHE_DIR");
  fs::remove_all(cache);
}

TEST_CASE("parse_cf_spec") {
  CHECK(parse_cf_spec("S:1,2,2,3") == CFSpec{stieltjes({1, 2, 2, 3})});
  CHECK(parse_cf_spec("J:3,5,7;2,6") == CFSpec{jacobi({3, 5, 7}, {2, 6})});
  CHECK(parse_cf_spec("J:1!") == CFSpec{jacobi({1}, {}, true)});
  CHECK(error_code_of([] { parse_cf_spec("T:1"); }) == ErrorCode::parse);
}
