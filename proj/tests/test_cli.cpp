#include "doctest.h"

#include "cli_support.hpp"
#include "commands.hpp"
#include "json.hpp"

using cli_support::fixture;
using cli_support::run;

TEST_SUITE("cli") {
  TEST_CASE("check on beilinson P2") {
    const auto r = run("check " + fixture("p2.json") + " beilinson");
    CHECK(r.status == 0);
    CHECK(r.out.find("strongly exceptional: PASS") != std::string::npos);
  }

  TEST_CASE("failed check renders violations and exits 1") {
    const auto r = run("check " + fixture("p1.json") + " reversed");
    CHECK(r.status == 1);
    CHECK(r.out.find("exceptional: FAIL") != std::string::npos);
    const auto j = run("--json check " + fixture("p1.json") + " reversed");
    CHECK(j.status == 1);
    const auto doc = nlohmann::json::parse(j.out);
    CHECK(doc["exceptional"]["violations"][0]["source"] == 1);
    CHECK(doc["exceptional"]["violations"][0]["target"] == 0);
    CHECK(doc["exceptional"]["violations"][0]["degree"] == 0);
    CHECK(doc["exceptional"]["violations"][0]["dimension"] == 2);
  }

  TEST_CASE("cohomology output") {
    const auto r = run("cohomology " + fixture("p2.json") + " K");
    CHECK(r.status == 0);
    CHECK(r.out == "h0=0 h1=0 h2=1\n");
  }

  TEST_CASE("twist search on F1") {
    const auto r = run("twist-search " + fixture("f1_over_p1.json") + " F1toP1 --fiber fiber --base base --kmax 10");
    CHECK(r.status == 0);
    CHECK(r.out.find("k = 0") != std::string::npos);
    const auto j = run("twist-search " + fixture("f1_over_p1.json") + " F1toP1 --fiber fiber --base base --json");
    const auto doc = nlohmann::json::parse(j.out);
    CHECK(doc["k"] == 0);
    CHECK(doc["collection"].size() == 4);
    CHECK(doc["report"]["verdict"] == "pass");
  }

  TEST_CASE("exhausted twist search exits 1") {
    const auto r =
        run("twist-search " + fixture("hirzebruch.json") + " F3toP1 --fiber fiber_neg --base base --kmax 2 --json");
    CHECK(r.status == 1);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["k"].is_null());
    CHECK_FALSE(doc["report"]["violations"].empty());
  }

  TEST_CASE("constructions emit parseable workspaces") {
    for (const std::string args : {std::string("construct-beilinson --n 3"),
                                   "construct-product " + fixture("p1.json") + " beilinson beilinson",
                                   "construct-fibration " + fixture("f1_over_p1.json") + " F1toP1 --fiber fiber --base base"}) {
      CAPTURE(args);
      const auto r = run("--json " + args);
      CHECK(r.status == 0);
      const auto doc = nlohmann::json::parse(r.out);
      CHECK(doc["report"]["verdict"] == "pass");
      CHECK(doc["k0_length"] == true);
      CHECK_NOTHROW(toricsec::cli::parse_workspace(doc["workspace"].dump()));
    }
  }

  TEST_CASE("input errors exit 2") {
    CHECK(run("check " + fixture("bad_syntax.json") + " x").status == 2);
    CHECK(run("check " + fixture("bad_reference.json") + " x").status == 2);
    CHECK(run("check " + fixture("incomplete.json") + " c").status == 2);
    CHECK(run("check " + fixture("p2.json") + " missing").status == 2);
    CHECK(run("check " + fixture("does_not_exist.json") + " x").status == 2);
    CHECK(run("frobnicate").status == 2);
    CHECK(run("").status == 2);
    CHECK(run("construct-beilinson --n 0").status == 2);
    CHECK(run("twist-search " + fixture("f1_over_p1.json") + " F1toP1 --base base --kmax -1").status == 2);
    CHECK(run("twist-search " + fixture("f1_over_p1.json") + " F1toP1 --base base --ample nowhere").status == 2);
    CHECK(run("construct-product " + fixture("p1.json") + " reversed beilinson").status == 2);
  }

  TEST_CASE("machine output is byte-identical across runs") {
    for (const std::string args : {"check " + fixture("p2.json") + " beilinson",
                                   "ext-table " + fixture("hirzebruch.json") + " base",
                                   "twist-search " + fixture("hirzebruch.json") + " F2toP1 --fiber fiber_pos --base base"}) {
      const auto a = run("--json --threads 1 " + args);
      const auto b = run("--json --threads 4 " + args);
      CHECK(a.status == b.status);
      CHECK(a.out == b.out);
    }
  }

  TEST_CASE("run_command without a process") {
    toricsec::cli::CommandRequest req;
    req.command = "nope";
    const auto res = toricsec::cli::run_command(nullptr, req);
    CHECK(res.exit_code == toricsec::cli::kInputError);
    CHECK(res.error.find("UnknownCommand") != std::string::npos);
    req.command = "check";
    req.operands = {"x"};
    CHECK(toricsec::cli::run_command(nullptr, req).exit_code == toricsec::cli::kInputError);
    CHECK(toricsec::cli::known_commands().size() == 9);
  }
}
