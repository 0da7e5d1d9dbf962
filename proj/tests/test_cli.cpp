#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

// Runs the CLI with stderr folded into stdout; exit code via pclose.
RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(PARIDHI_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  RunResult result;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    result.out.append(buf.data(), got);
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("pi csv is sorted and frozen") {
  RunResult r = run_cli("pi --digits 7 --format csv");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.substr(0, r.out.find('\n')) ==
        "method_id,tradition,exact_form,value,rel_error,digits_correct");
  // worst method first
  CHECK(contains(r.out, "\nvedic_three,Vedic,3,3.0000000,"));
  CHECK(contains(r.out, "virasena,Jaina,355/113,3.1415929,0.000000084913679,6"));
  CHECK(contains(r.out, "babylonian_sqrt2,External,30547/21600,1.4142130,"));
  CHECK(contains(r.out, "madhava,Kerala,2827433388233/900000000000,"));
  // determinism across processes
  RunResult again = run_cli("pi --digits 7 --format csv");
  CHECK(again.out == r.out);
}

TEST_CASE("pi sorts certifiably even at one digit") {
  RunResult r = run_cli("pi --digits 1 --format csv");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("vedic_three") < r.out.find("jaina_sqrt10"));
  CHECK(r.out.find("jaina_sqrt10") < r.out.find("aryabhata"));
  CHECK(r.out.find("aryabhata") < r.out.find("madhava"));
}

TEST_CASE("pi json parses") {
  RunResult r = run_cli("pi --format json");
  REQUIRE(r.exit_code == 0);
  auto parsed = nlohmann::json::parse(r.out);
  REQUIRE(parsed.is_array());
  CHECK(parsed.size() == 15);
  CHECK(parsed[0]["method_id"] == "vedic_three");
}

TEST_CASE("construct subcommand") {
  RunResult bau = run_cli("construct --method baudhayana --side 1");
  REQUIRE(bau.exit_code == 0);
  CHECK(contains(bau.out, "radius = (2+√2)/6"));
  CHECK(contains(bau.out, "implied π = 54-36√2"));
  CHECK(contains(bau.out, "1.01725"));

  RunResult mai = run_cli("construct --method maitrayaniya --side 16 --digits 6");
  REQUIRE(mai.exit_code == 0);
  CHECK(contains(mai.out, "radius = 9"));
  CHECK(contains(mai.out, "0.994020"));

  RunResult man = run_cli("construct --method manava --side 2 --digits 10");
  REQUIRE(man.exit_code == 0);
  CHECK(contains(man.out, "3.1583985844"));
}

TEST_CASE("segment subcommand") {
  RunResult seg = run_cli("segment --d 2 --c 2");
  REQUIRE(seg.exit_code == 0);
  CHECK(contains(seg.out, "arc = √10"));

  RunResult scan = run_cli(
      "segment --scan --formula mahavira_area --from 90 --to 180 --step 90 --format csv");
  REQUIRE(scan.exit_code == 0);
  CHECK(contains(scan.out, "theta_deg,approx,oracle,rel_error"));
  CHECK(contains(scan.out, "\n90,"));
  CHECK(contains(scan.out, "\n180,"));
}

TEST_CASE("sine subcommand") {
  RunResult theta = run_cli("sine --theta 10");
  REQUIRE(theta.exit_code == 0);
  CHECK(contains(theta.out, "bhaskara1 = 17/97"));

  RunResult table = run_cli("sine --table 3438 --format csv");
  REQUIRE(table.exit_code == 0);
  CHECK(contains(table.out, "index,arcmin,rsine,diff"));
  CHECK(contains(table.out, "\n1,225,225,225\n"));
  CHECK(contains(table.out, "\n24,5400,3438,7\n"));

  RunResult scan = run_cli("sine --scan --from 5 --to 175 --step 5");
  REQUIRE(scan.exit_code == 0);
  CHECK(contains(scan.out, "largest bhaskara1 rel"));
}

TEST_CASE("arc subcommand") {
  RunResult r = run_cli("arc --c 1 --d 2");
  REQUIRE(r.exit_code == 0);
  CHECK(contains(r.out, "arc/p = 1/6"));

  RunResult exact = run_cli("arc --c 2 --d 2 --p 355/113 --digits 8");
  REQUIRE(exact.exit_code == 0);
  CHECK(contains(exact.out, "arc = 355/226"));
}

TEST_CASE("kerala subcommand") {
  RunResult r = run_cli("kerala --n 50");
  REQUIRE(r.exit_code == 0);
  CHECK(contains(r.out, "digits_correct: 11"));
  CHECK(contains(r.out, "3.141592653590511"));
}

TEST_CASE("doubling subcommand") {
  RunResult near = run_cli("doubling --diameter 20000 --doublings 6 --mode nearest");
  REQUIRE(near.exit_code == 0);
  CHECK(contains(near.out, "perimeter = 62831"));

  RunResult flo = run_cli("doubling --diameter 20000 --doublings 6 --mode floor");
  REQUIRE(flo.exit_code == 0);
  CHECK(contains(flo.out, "perimeter = 62840"));

  RunResult hp = run_cli("doubling --diameter 20000 --doublings 6 --hp --digits 9");
  REQUIRE(hp.exit_code == 0);
  CHECK(contains(hp.out, "3.141557608"));

  RunResult search = run_cli("doubling --diameter 20000 --doublings 6 --search 62832");
  REQUIRE(search.exit_code == 0);
  CHECK(contains(search.out, "all nearest -> 62831"));
  CHECK(contains(search.out, "all floor -> 62840"));
  CHECK(contains(search.out, "policies reaching 62832: 172"));
  CHECK(contains(search.out, "ceil,ceil,floor,floor,floor,ceil,ceil"));
}

TEST_CASE("exit codes") {
  CHECK(run_cli("pi --digits 99").exit_code == 2);       // out of range
  CHECK(run_cli("segment --d 2 --c 3").exit_code == 3);  // chord exceeds diameter
  CHECK(run_cli("construct --method baudhayana --side abc").exit_code == 2);
  CHECK(run_cli("bogus").exit_code == 2);
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("doubling --diameter 101 --doublings 3").exit_code == 3);
}

}  // TEST_SUITE
