#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "pealab/cli.hpp"

using namespace pealab;
namespace fs = std::filesystem;

namespace {

// Scratch directory shared by the CLI tests, fresh per process run.
fs::path scratch_dir() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "pealab_cli_tests";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string write_file(const std::string& name, const std::string& text) {
  fs::path path = scratch_dir() / name;
  std::ofstream out(path, std::ios::binary);
  out << text;
  return path.string();
}

std::string two_equality_path() {
  static std::string path =
      write_file("two_equality.pea", emit_model(to_document(testing::two_equality())));
  return path;
}

std::string two_directed_path() {
  static std::string path =
      write_file("two_directed.pea", emit_model(to_document(testing::two_directed())));
  return path;
}

std::string luk3_hoop_path() {
  static std::string path =
      write_file("luk3.hoop", emit_model(to_document(testing::luk3_hoop())));
  return path;
}

}  // namespace

TEST_CASE("check subcommand") {
  CHECK(run_cli({"check", two_equality_path()}).code == 0);
  CHECK(run_cli({"check", luk3_hoop_path()}).code == 0);

  SECTION("built-in model by name") {
    CliResult r = run_cli({"check", "ciungu5"});
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS") != std::string::npos);
  }

  SECTION("condition (xii) flips the verdict for the built-in model") {
    CliResult r = run_cli({"check", "ciungu5", "--xii"});
    CHECK(r.code == 1);
    CHECK(r.out.find("condition (xii): FAIL") != std::string::npos);
    CHECK(r.out.find("xii-imp at (b,c,a)") != std::string::npos);
  }

  SECTION("original axioms and the collapse report") {
    CliResult r = run_cli({"check", two_equality_path(), "--jk"});
    CHECK(r.code == 0);
    CHECK(r.out.find("collapse: sim and bsim coincide") != std::string::npos);
    CliResult r2 = run_cli({"check", two_directed_path(), "--jk"});
    CHECK(r2.code == 1);
  }

  SECTION("an invalid model fails with witnesses") {
    std::string path = write_file("broken.pea",
                                  "kind pea\nelements 0 1\ntop 1\ntable meet\n0 0\n0 1\n"
                                  "table sim\n1 1\n0 1\ntable bsim\n1 0\n0 1\n");
    CliResult r = run_cli({"check", path});
    CHECK(r.code == 1);
    CHECK(r.out.find("FAIL") != std::string::npos);
  }

  SECTION("missing file is an input error") {
    CHECK(run_cli({"check", "no_such_file.pea"}).code == 2);
  }

  SECTION("parse errors are input errors") {
    std::string path = write_file("garbled.pea", "kind pea\nelements 0 0\n");
    CliResult r = run_cli({"check", path});
    CHECK(r.code == 2);
    CHECK(r.out.find("duplicate element") != std::string::npos);
  }
}

TEST_CASE("props subcommand") {
  CHECK(run_cli({"props", two_equality_path()}).code == 0);
  CHECK(run_cli({"props", two_directed_path()}).code == 0);
  CliResult r = run_cli({"props", "ciungu5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("P1-P4: PASS") != std::string::npos);
  CHECK(r.out.find("meet absorption: skipped") != std::string::npos);
  CHECK(run_cli({"props", luk3_hoop_path()}).code == 2);
}

TEST_CASE("bridge subcommand") {
  SECTION("pea to pbck and back") {
    CliResult forward = run_cli({"bridge", two_directed_path(), "--to", "pbck"});
    REQUIRE(forward.code == 0);
    std::string pbck_path = write_file("bridge_fwd.pbck", forward.out);
    CliResult back = run_cli({"bridge", pbck_path, "--to", "pea"});
    REQUIRE(back.code == 0);
    // The directed model is invariant, so the round trip recovers it.
    CHECK(same_tables(to_algebra(parse_model(back.out)), testing::two_directed()));
  }

  SECTION("G refuses the built-in counterexample, naming the witness") {
    CliResult r = run_cli({"bridge", "ciungu5", "--to", "pea"});
    CHECK(r.code == 1);
    CHECK(r.out.find("rejected") != std::string::npos);
    CHECK(r.out.find("witness") != std::string::npos);
  }

  SECTION("roundtrip report for a pea document") {
    CliResult r = run_cli({"bridge", two_directed_path(), "--roundtrip"});
    CHECK(r.code == 0);
    CHECK(r.out.find("F(G(F(A))) = F(A): yes") != std::string::npos);
    CHECK(r.out.find("invariant (G(F(A)) = A): yes") != std::string::npos);

    CliResult r2 = run_cli({"bridge", two_equality_path(), "--roundtrip"});
    CHECK(r2.code == 0);
    CHECK(r2.out.find("invariant (G(F(A)) = A): no") != std::string::npos);
  }

  SECTION("roundtrip report for a pbck document") {
    std::string path =
        write_file("two_chain.pbck", emit_model(to_document(testing::two_chain_bck())));
    CliResult r = run_cli({"bridge", path, "--roundtrip"});
    CHECK(r.code == 0);
    CHECK(r.out.find("F(G(B)) = B: yes") != std::string::npos);
    CHECK(run_cli({"bridge", "ciungu5", "--roundtrip"}).code == 1);
  }
}

TEST_CASE("ds and con subcommands") {
  CliResult ds = run_cli({"ds", two_equality_path()});
  CHECK(ds.code == 0);
  CHECK(ds.out.find("deductive systems (filter=all): 2") != std::string::npos);
  CHECK(ds.out.find("{1} closed=yes normal=yes commutative=yes") != std::string::npos);
  CHECK(ds.out.find("{0,1} closed=yes normal=yes commutative=yes") != std::string::npos);

  CliResult filtered = run_cli({"ds", two_equality_path(), "--filter", "normal_closed"});
  CHECK(filtered.code == 0);
  CHECK(run_cli({"ds", two_equality_path(), "--filter", "sideways"}).code == 2);

  CliResult con = run_cli({"con", two_equality_path()});
  CHECK(con.code == 0);
  CHECK(con.out.find("congruences: 2") != std::string::npos);
  CHECK(con.out.find("{0,1}") != std::string::npos);
  CHECK(con.out.find("{0}{1}") != std::string::npos);

  CliResult bij = run_cli({"con", two_equality_path(), "--bijection"});
  CHECK(bij.code == 0);
  CHECK(bij.out.find("bijection with normal closed deductive systems: ok (2 congruences, 2 "
                     "normal closed systems)") != std::string::npos);
}

TEST_CASE("quotient subcommand") {
  SECTION("quotient by the top class is the model itself") {
    CliResult r = run_cli({"quotient", two_equality_path(), "--ds", "1"});
    REQUIRE(r.code == 0);
    CHECK(same_tables(to_algebra(parse_model(r.out)), testing::two_equality()));
  }

  SECTION("quotient by the whole carrier is degenerate") {
    CliResult r = run_cli({"quotient", two_equality_path(), "--ds", "0,1"});
    REQUIRE(r.code == 0);
    CHECK(to_algebra(parse_model(r.out)).size == 1);
  }

  SECTION("diagnoses the failed predicate precisely") {
    CliResult missing_top = run_cli({"quotient", two_equality_path(), "--ds", "0"});
    CHECK(missing_top.code == 2);
    CHECK(missing_top.out.find("does not contain the top element") != std::string::npos);

    CliResult unknown = run_cli({"quotient", two_equality_path(), "--ds", "zap"});
    CHECK(unknown.code == 2);
    CHECK(unknown.out.find("unknown element 'zap'") != std::string::npos);

    // Not an upset: {h,1} is closed upward... use {0,1} minus h on the
    // three-element chain: {0,1} misses h although 0 <= h.
    std::string chain =
        write_file("chain3.pea", emit_model(to_document(hoop_to_pea(testing::luk3_hoop()))));
    CliResult not_upset = run_cli({"quotient", chain, "--ds", "0,1"});
    CHECK(not_upset.code == 2);
    CHECK(not_upset.out.find("not an upset") != std::string::npos);
  }
}

TEST_CASE("hoop subcommand") {
  CliResult r = run_cli({"hoop", luk3_hoop_path()});
  REQUIRE(r.code == 0);
  FiniteAlgebra image = to_algebra(parse_model(r.out));
  CHECK(check_new_axioms(image).verdict);
  CHECK(run_cli({"hoop", two_equality_path()}).code == 2);
}

TEST_CASE("search subcommand") {
  CliResult census = run_cli({"search", "--kind", "pea", "--n", "3"});
  CHECK(census.code == 0);
  CHECK(census.out.find("kind=pea n=3 up_to_iso=yes count=9") != std::string::npos);

  CliResult labeled = run_cli({"search", "--kind", "pea", "--n", "2", "--labeled"});
  CHECK(labeled.out.find("count=2") != std::string::npos);

  SECTION("predicates") {
    CliResult none = run_cli({"search", "--predicate", "jk_with_sim_neq_bsim", "--n", "3"});
    CHECK(none.code == 0);
    CHECK(none.out.find("no witness up to n=3") != std::string::npos);

    CliResult found = run_cli({"search", "--predicate", "sim_neq_bsim", "--n", "2"});
    CHECK(found.code == 0);
    CHECK(found.out.find("witness at n=2") != std::string::npos);

    CHECK(run_cli({"search", "--predicate", "wat", "--n", "2"}).code == 2);
    CHECK(run_cli({"search", "--n", "2"}).code == 2);
  }

  SECTION("census-scoped predicate scans") {
    CliResult r = run_cli({"search", "--kind", "pea", "--n", "3", "--predicate",
                           "ds_not_closed"});
    CHECK(r.code == 0);
    CHECK(r.out.find("kind=pea n=3") != std::string::npos);
    CHECK(r.out.find("predicate ds_not_closed: ") != std::string::npos);
    CHECK(run_cli({"search", "--kind", "hoop", "--n", "2", "--predicate", "ds_not_closed"})
              .code == 2);
    CHECK(run_cli({"search", "--kind", "pea", "--n", "2", "--predicate", "pbck_without_xii"})
              .code == 2);
  }

  SECTION("capacity and bound overrides") {
    CHECK(run_cli({"search", "--kind", "pea", "--n", "9"}).code == 3);
    setenv("PEALAB_ENUM_BOUND", "2", 1);
    CHECK(run_cli({"search", "--kind", "pea", "--n", "3"}).code == 3);
    setenv("PEALAB_ENUM_BOUND", "not_a_number", 1);
    CHECK(run_cli({"search", "--kind", "pea", "--n", "2"}).code == 2);
    unsetenv("PEALAB_ENUM_BOUND");
  }

  SECTION("persisting and re-verifying a census") {
    fs::path dir = scratch_dir() / "census_pea2";
    CliResult persisted =
        run_cli({"search", "--kind", "pea", "--n", "2", "--out", dir.string()});
    REQUIRE(persisted.code == 0);
    CHECK(fs::exists(dir / "index.txt"));

    CliResult verified = run_cli({"census", dir.string()});
    CHECK(verified.code == 0);
    CHECK(verified.out.find("2/2 exemplars verified") != std::string::npos);

    // Corrupt one exemplar: the re-verification must fail.
    {
      std::ofstream out(dir / "pea_n2_000.pea", std::ios::binary);
      out << "kind pea\nelements 0 1\ntop 1\ntable meet\n0 0\n0 1\n"
             "table sim\n1 1\n0 1\ntable bsim\n1 0\n0 1\n";
    }
    CliResult corrupted = run_cli({"census", dir.string()});
    CHECK(corrupted.code == 1);
    CHECK(corrupted.out.find("FAIL") != std::string::npos);

    CHECK(run_cli({"census", (scratch_dir() / "nowhere").string()}).code == 2);
  }
}

TEST_CASE("reports are byte-identical across runs") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"check", "ciungu5", "--xii"},
        std::vector<std::string>{"ds", two_equality_path()},
        std::vector<std::string>{"con", two_directed_path(), "--bijection"},
        std::vector<std::string>{"search", "--kind", "pea", "--n", "3"}}) {
    CliResult first = run_cli(args);
    CliResult second = run_cli(args);
    CHECK(first.out == second.out);
    CHECK(first.code == second.code);
  }
}

TEST_CASE("argument errors") {
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"bogus"}).code == 2);
  CHECK(run_cli({"check"}).code == 2);
  CHECK(run_cli({"bridge", two_equality_path()}).code == 2);
  CliResult help = run_cli({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("check") != std::string::npos);
}
