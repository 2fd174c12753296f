#include <cstdlib>
#include <sstream>

#include "doctest.h"
#include "krullkit_cli/cli.hpp"
#include "json.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "krullkit");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = krullkit::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(KRULLKIT_TEST_DATA) + "/" + name; }

bool contains(const std::string& haystack, const std::string& needle) { return haystack.find(needle) != std::string::npos; }

}  // namespace

using krullkit::cli::ExitCode;

TEST_CASE("dim-lattice") {
  CHECK(run({"dim-lattice", "--lattice", data("chain-3.json")}).out == "dimension = 1\n");
  CHECK(run({"dim-lattice", "--lattice", data("boolean-8.json")}).out == "dimension = 0\n");
  CHECK(run({"dim-lattice", "--lattice", data("singleton.json")}).out == "dimension = -1\n");
  CHECK(run({"dim-lattice", "--lattice", data("diamond-raw.json")}).out == "dimension = 0\n");

  const auto j = run({"--json", "dim-lattice", "--lattice", data("chain-3.json")});
  CHECK(j.code == ExitCode::kTrue);
  CHECK(nlohmann::json::parse(j.out)["dimension"] == 1);

  const auto leq = run({"dim-lattice", "--lattice", data("chain-3.json"), "--leq", "0"});
  CHECK(leq.code == ExitCode::kFalse);
  CHECK(contains(leq.out, "fails"));
  CHECK(contains(leq.out, "0x1"));
  CHECK(run({"dim-lattice", "--lattice", data("chain-3.json"), "--leq", "1"}).code == ExitCode::kTrue);

  const auto pentagon = run({"dim-lattice", "--lattice", data("pentagon-raw.json")});
  CHECK(pentagon.code == ExitCode::kUsage);
  CHECK(contains(pentagon.err, "distributiv"));
  CHECK(run({"dim-lattice", "--lattice", data("missing.json")}).code == ExitCode::kUsage);
}

TEST_CASE("kr-entails") {
  const auto holds = run({"kr-entails", "--lattice", data("boolean-4.json"), "--query", data("boolean-4-atom.json")});
  CHECK(holds.code == ExitCode::kTrue);
  CHECK(contains(holds.out, "witness x = (0x2)"));
  const auto fails = run({"kr-entails", "--lattice", data("chain-3.json"), "--query", data("chain-3-dim0.json")});
  CHECK(fails.code == ExitCode::kFalse);
  for (const char* method : {"witness", "heyting", "both"}) {
    CHECK(run({"kr-entails", "--lattice", data("diamond-raw.json"), "--query", data("diamond-atom.json"), "--method", method})
              .code == ExitCode::kTrue);
  }
  const auto named = run({"--json", "kr-entails", "--lattice", data("diamond-raw.json"), "--query", data("diamond-atom.json")});
  CHECK(nlohmann::json::parse(named.out)["witness"][0] == "b");
  CHECK(run({"kr-entails", "--lattice", data("chain-3.json"), "--query", data("trivial.json"), "--workers", "4"}).code ==
        ExitCode::kTrue);
  CHECK(run({"kr-entails", "--lattice", data("chain-3.json"), "--query", data("chain-3.json")}).code == ExitCode::kUsage);
  CHECK(run({"kr-entails", "--lattice", data("chain-3.json"), "--query", data("trivial.json"), "--method", "guess"}).code ==
        ExitCode::kUsage);
}

TEST_CASE("ring-singular") {
  const auto z = run({"ring-singular", "--ring", "zz", "--seq", "2, 3"});
  CHECK(z.code == ExitCode::kTrue);
  CHECK(z.out == "certificate {\"a\":[\"-2\",\"1\"],\"m\":[0,0]}\n");
  const auto p = run({"--json", "ring-singular", "--ring", "poly:zp5:1", "--seq", "x1, x1^2"});
  CHECK(p.code == ExitCode::kTrue);
  const auto cert = nlohmann::json::parse(p.out)["certificate"];
  CHECK(cert["m"] == nlohmann::json::array({0, 1}));
  CHECK(cert["a"] == nlohmann::json::array({"-x1", "0"}));
  CHECK(run({"ring-singular", "--ring", "poly:zp5:1", "--seq", "x1"}).code == ExitCode::kUnknown);
  CHECK(run({"ring-singular", "--ring", "zmod:12", "--seq", "5"}).code == ExitCode::kTrue);
  CHECK(run({"ring-singular", "--ring", "zz", "--seq", "2, y"}).code == ExitCode::kUsage);
  CHECK(run({"ring-singular", "--ring", "zq", "--seq", "2"}).code == ExitCode::kUsage);
}

TEST_CASE("search budget from the environment") {
  ::setenv("KRULLKIT_MAX_SEARCH", "5", 1);
  const auto r = run({"ring-singular", "--ring", "zz", "--seq", "2, 3, 5"});
  ::unsetenv("KRULLKIT_MAX_SEARCH");
  CHECK(r.code == ExitCode::kResource);
}

TEST_CASE("ring-collapse") {
  const auto same = run({"ring-collapse", "--chain", data("chain-z-form1.json")});
  CHECK(same.code == ExitCode::kTrue);
  CHECK(contains(same.out, "collapsed (form 1)"));
  const auto three = run({"--json", "ring-collapse", "--chain", data("chain-z-form1.json"), "--to", "3"});
  CHECK(three.code == ExitCode::kTrue);
  const auto doc = nlohmann::json::parse(three.out);
  CHECK(doc.dump().find("\"form\":3") != std::string::npos);
  CHECK(run({"ring-collapse", "--chain", data("chain-z-form1.json"), "--to", "2"}).code == ExitCode::kUsage);
}

TEST_CASE("zar") {
  const auto imp = run({"zar", "--op", "implies", "--ring", "poly:q:2", "--a", "x1", "--b", "x1*x2"});
  CHECK(imp.code == ExitCode::kTrue);
  CHECK(imp.out == "radical of (x2)\n");
  CHECK(run({"zar", "--op", "leq", "--ring", "zz", "--a", "6", "--b", "2"}).code == ExitCode::kTrue);
  CHECK(run({"zar", "--op", "leq", "--ring", "zz", "--a", "2", "--b", "6"}).code == ExitCode::kFalse);
  CHECK(run({"zar", "--op", "join", "--ring", "zz", "--a", "6", "--b", "10"}).out == "radical of (2)\n");
  CHECK(run({"zar", "--op", "meet", "--ring", "zz", "--a", "6", "--b", "10"}).out == "radical of (30)\n");
  CHECK(run({"zar", "--op", "meet", "--ring", "poly:q:1", "--a", "x1^2", "--b", "x1^3 - x1^2"}).out == "radical of (x1^2 - x1)\n");
  CHECK(run({"zar", "--op", "join", "--ring", "zmod:12", "--a", "2", "--b", "3"}).code == ExitCode::kTrue);
  CHECK(run({"zar", "--op", "xor", "--ring", "zz", "--a", "2", "--b", "3"}).code == ExitCode::kUsage);
}

TEST_CASE("usage") {
  CHECK(run({}).code == ExitCode::kUsage);
  CHECK(run({"--help"}).code == ExitCode::kTrue);
  CHECK(run({"frobnicate"}).code == ExitCode::kUsage);
  CHECK(run({"dim-lattice"}).code == ExitCode::kUsage);
}
