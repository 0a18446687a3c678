#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "setup.hpp"

using namespace vgr;
using namespace vgr::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "vgr");
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string setup_path(const std::string& name) { return std::string(VGR_SETUPS_DIR) + "/" + name + ".setup"; }

}  // namespace

TEST_CASE("setup parsing") {
  SetupFile s = parse_setup(R"S(
# comment
valuation { x = "(1,0)"  y = "(0,1)" }
choice = generators
domain = group
generators { "(1,0)" = "x" "(0,1)" = "y" }
campaign { seed = 5 samples = 10 bound = 3 }
counterexample { primes = "2 3" enumerate = true constants = "1 -1" }
)S");
  CHECK(s.valuation.size() == 2);
  CHECK(s.valuation[1] == std::pair<std::string, std::string>{"y", "(0,1)"});
  CHECK(s.choice == "generators");
  CHECK(s.campaign.seed == 5);
  CHECK(s.campaign.samples == 10);
  REQUIRE(s.counterexample);
  CHECK(s.counterexample->primes == std::vector<unsigned>{2, 3});
  CHECK(s.counterexample->constants == std::vector<std::string>{"1", "-1"});
  CHECK(s.counterexample->enumerate);

  CHECK_THROWS_AS(parse_setup("choice = sometimes\n"), ParseError);
  CHECK_THROWS_AS(parse_setup("valuation { x = \"1\"\n"), ParseError);
  CHECK_THROWS_AS(parse_setup("mystery = 1\n"), ParseError);
  try {
    parse_setup("subring = field\n\nspan = many\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("print_setup round-trips every shipped setup") {
  for (const char* name : {"free_z2", "twisted_z2", "twisted_2x", "extension_chain", "root_not_found",
                           "counterexample_conflict", "counterexample_consistent", "counterexample_enumerate",
                           "example_field"}) {
    SetupFile s = read_setup(setup_path(name));
    CHECK_MESSAGE(parse_setup(print_setup(s)) == s, name);
    CHECK(print_setup(parse_setup(print_setup(s))) == print_setup(s));
  }
}

TEST_CASE("exit codes") {
  CHECK(invoke({"build", "--setup", setup_path("root_not_found")}).code == 3);
  CHECK(invoke({"counterexample", "--setup", setup_path("counterexample_conflict")}).code == 1);
  CHECK(invoke({"counterexample", "--setup", setup_path("counterexample_enumerate")}).code == 0);
  CHECK(invoke({"build", "--setup", setup_path("does_not_exist")}).code == 2);
  CHECK(invoke({"frobnicate"}).code == 2);
  CHECK(invoke({"build"}).code == 2);
  CHECK(invoke({"build", "--setup", setup_path("counterexample_conflict")}).code == 2);
  CHECK(invoke({"twisting", "--setup", setup_path("twisted_2x")}).code == 0);
  CHECK(invoke({"ring-axioms", "--setup", setup_path("twisted_2x"), "--samples", "20"}).code == 0);
  CHECK(invoke({"iso-verify", "--setup", setup_path("free_z2"), "--samples", "20"}).code == 0);
  CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("same seed gives byte-identical output") {
  for (const char* cmd : {"ring-axioms", "iso-verify"}) {
    Result a = invoke({cmd, "--setup", setup_path("twisted_z2"), "--seed", "17", "--samples", "30", "--machine"});
    Result b = invoke({cmd, "--setup", setup_path("twisted_z2"), "--seed", "17", "--samples", "30", "--machine"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("seed=17") != std::string::npos);
  }
}

TEST_CASE("command output") {
  Result t = invoke({"twisting", "--setup", setup_path("twisted_2x"), "--machine"});
  CHECK(t.out.find("twist[1;1]=4") != std::string::npos);
  CHECK(t.out.find("is_trivial.trivial=false") != std::string::npos);
  CHECK(t.out.find("is_trivial.counterexample=1;1") != std::string::npos);
  CHECK(t.out.find("agree=true") != std::string::npos);

  Result b = invoke({"build", "--setup", setup_path("extension_chain"), "--machine", "--bound", "2"});
  CHECK(b.code == 0);
  CHECK(b.out.find("step[1].root=z^3 / y") != std::string::npos);
  CHECK(b.out.find("step[2].period=3") != std::string::npos);
  CHECK(b.out.find("eps[1/2]=z^3") != std::string::npos);
  CHECK(b.out.find("eps[1/6]=z") != std::string::npos);
  CHECK(b.out.find("twisting.trivial=true") != std::string::npos);

  Result c = invoke({"counterexample", "--setup", setup_path("counterexample_conflict"), "--machine"});
  CHECK(c.out.find("verdict=CONFLICT") != std::string::npos);
  CHECK(c.out.find("conflict_prime=3") != std::string::npos);

  Result e = invoke({"counterexample", "--setup", setup_path("counterexample_enumerate"), "--machine"});
  CHECK(e.out.find("enumeration.consistent=2") != std::string::npos);
  CHECK(e.out.find("enumeration.degrees=6") != std::string::npos);
  CHECK(e.out.find("enumeration.all_divisible=true") != std::string::npos);

  Result i = invoke({"iso-verify", "--setup", setup_path("example_field"), "--samples", "20"});
  CHECK(i.code == 0);
  CHECK(i.out.find("SKIPPED (no lifting oracle declared)") != std::string::npos);
}

TEST_CASE("command examples") {
  CHECK(invoke({"ring-axioms", "--setup", setup_path("free_z2"), "--samples", "20"}).code == 0);
  CHECK(invoke({"iso-verify", "--setup", setup_path("twisted_2x"), "--samples", "40"}).code == 0);

  Result c = invoke({"counterexample", "--setup", setup_path("counterexample_consistent")});
  CHECK(c.code == 0);
  CHECK(c.out.find("verdict: DIVISIBILITY 6 | deg eps(1) = 6 holds") != std::string::npos);

  Result b = invoke({"build", "--setup", setup_path("free_z2"), "--machine", "--bound", "2"});
  CHECK(b.code == 0);
  CHECK(b.out.find("eps[(1,-1)]=x / y") != std::string::npos);
  CHECK(b.out.find("certified=true") != std::string::npos);
}

TEST_CASE("malformed setups are rejected at load") {
  const std::string path = "malformed_test.setup";
  auto write_and_run = [&](const std::string& text) {
    std::ofstream(path) << text;
    Result r = invoke({"ring-axioms", "--setup", path, "--samples", "5"});
    std::remove(path.c_str());
    return r;
  };
  // v(eps(1)) = 2, not 1.
  Result wrong_value = write_and_run("valuation { x = \"1\" }\nchoice = table\ntable { \"1\" = \"x^2\" }\n");
  CHECK(wrong_value.code == 2);
  CHECK(wrong_value.err.find("invalid choice function") != std::string::npos);
  // w is not a variable of the valuation.
  CHECK(write_and_run("valuation { x = \"1\" }\nchoice = table\ntable { \"1\" = \"w\" }\n").code == 2);
  CHECK(write_and_run("valuation { x = \"1\" }\nchoice = generators\n").code == 2);
}

TEST_CASE("empty prime set is vacuous") {
  const std::string path = "vacuous_test.setup";
  {
    std::ofstream f(path);
    f << "counterexample { primes = \"\" }\n";
  }
  Result r = invoke({"counterexample", "--setup", path});
  CHECK(r.code == 0);
  CHECK(r.out.find("vacuous PASS") != std::string::npos);
  std::remove(path.c_str());
}
