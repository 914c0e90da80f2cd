#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "curvedhh/category_io.hpp"
#include "curvedhh/errors.hpp"
#include "curvedhh/examples.hpp"
#include "curvedhh/hochschild.hpp"
#include "curvedhh/report.hpp"

using namespace curvedhh;
namespace fs = std::filesystem;

namespace {

const char* kSmall =
    "# two points\n"
    "format 1\n"
    "name pair\n"
    "field Q\n"
    "object X1\n"
    "object X2\n"
    "gen e1 X1 X1 0\n"
    "gen e2 X2 X2 0\n"
    "gen a X1 X2 0\n"
    "gen b X2 X1 0\n"
    "gen x1 X1 X1 0\n"
    "unit X1 e1\n"
    "unit X2 e2\n"
    "mu 2 b a -> x1 1\n";

template <class E>
E expect_error(const std::string& text) {
  try {
    parse_category(text);
  } catch (const E& e) {
    return e;
  } catch (const std::exception& e) {
    FAIL("wrong exception: " << e.what());
  }
  FAIL("no exception for:\n" << text);
  throw;
}

int run(const std::string& args) {
  const std::string cmd = std::string(CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

fs::path scratch() {
  auto dir = fs::temp_directory_path() / ("curvedhh_io_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("parse a small file") {
  const auto doc = parse_category(kSmall, false);
  CHECK(doc.category.object_count() == 2);
  CHECK(doc.category.generator_count() == 5);
  CHECK(doc.category.name() == "pair");
  CHECK(doc.notes == std::vector<std::string>{"two points"});
  CHECK_FALSE(doc.has_dimension);
}

TEST_CASE("write then parse is the identity on every example") {
  for (const auto& name : example_names()) {
    for (const Field f : {Field::rationals(), Field::prime(3)}) {
      const auto ex = generate_example(name, 3, 2, f);
      const auto doc = document_from_pair(ex);
      const auto text = write_category(doc);
      const auto back = parse_category(text);
      CHECK(same_category(back.category, doc.category));
      CHECK(back.dimension == doc.dimension);
      CHECK(write_category(back) == text);
      // A is recovered as the directed part of B.
      CHECK(same_category(*pair_from_document(back).a, *ex.a));
    }
  }
}

TEST_CASE("fixture files equal the generators") {
  const fs::path dir = FIXTURE_DIR;
  const std::vector<std::pair<std::string, ExamplePair>> cases = {
      {"branched-cover-m2.cat", gen_branched_cover(2)},
      {"two-spheres-d2.cat", gen_two_spheres(2)},
      {"am-quiver-m2-d3.cat", gen_am_quiver(2, 3)},
      {"empty.cat", gen_empty()},
      {"branched-cover-m3.cat", gen_branched_cover(3)},
      {"am-quiver-m3-d2.cat", gen_am_quiver(3, 2)},
  };
  for (const auto& [file, ex] : cases) {
    const auto doc = read_category(dir / file);
    CHECK_MESSAGE(same_category(doc.category, *ex.b), file);
    CHECK(doc.dimension == ex.dimension);
    const auto pair = pair_from_document(doc);
    CHECK(pair.a->generator_count() == ex.a->generator_count());
  }
}

TEST_CASE("syntax errors carry line and column") {
  auto e = expect_error<ParseError>("format 1\nobject X\nfrobnicate X\n");
  CHECK(e.line() == 3);
  CHECK(e.column() == 1);
  e = expect_error<ParseError>("format 1\nobject X\ngen e X X zero\n");
  CHECK(e.line() == 3);
  CHECK(e.column() == 11);
  e = expect_error<ParseError>("object X\n");
  CHECK(e.line() == 1);
  e = expect_error<ParseError>("format 2\n");
  CHECK(e.column() == 8);
  e = expect_error<ParseError>("format 1\nobject X\ngen e X X 0\nunit X e\ngen x X X 1\nmu 2 x x => x 1\n");
  CHECK(e.line() == 6);
  CHECK(e.column() == 10);
  e = expect_error<ParseError>("format 1\nobject X\ngen e X X 0\nunit X e\ngen x X X 2\nmu 2 x x -> x 0.5\n");
  CHECK(e.line() == 6);
  CHECK(e.column() == 15);
  e = expect_error<ParseError>("format 1\nfield 4\n");
  CHECK(e.line() == 2);
  e = expect_error<ParseError>("format 1\nfield 3\nobject X\ngen e X X 0\nunit X e\ngen x X X 0\nmu 2 x x -> x 1/3\n");
  CHECK(e.line() == 7);
}

TEST_CASE("semantic errors name the record") {
  auto e = expect_error<SemanticError>("format 1\nobject X\ngen e X Y 0\n");
  CHECK(e.line() == 3);
  CHECK(std::string(e.what()).find("'Y'") != std::string::npos);
  e = expect_error<SemanticError>("format 1\nobject X\ngen e X X 0\nunit X e\nmu 1 e -> y 1\n");
  CHECK(e.line() == 5);
  // Degree rule: |mu^2(x, x)| must be 2|x|.
  e = expect_error<SemanticError>("format 1\nobject X\ngen e X X 0\nunit X e\ngen x X X 1\nmu 2 x x -> x 1\n");
  CHECK(e.line() == 6);
  e = expect_error<SemanticError>("format 1\nobject X\nobject X\n");
  CHECK(e.line() == 3);
  e = expect_error<SemanticError>("format 1\nobject X\ngen e X X 0\nunit X e\ngen x X X 0\nmu 2 x x -> x 1\nmu 2 x x -> x 2\n");
  CHECK(e.line() == 7);
  expect_error<SemanticError>("format 1\nobject X\ngen x X X 0\n");  // no unit
}

TEST_CASE("failed relations are reported") {
  // mu^2(x, x) = x with |x| = 0 is associative; a lone mu^3(x, x, x) = y is not.
  const std::string ok = "format 1\nobject X\ngen e X X 0\nunit X e\ngen x X X 0\nmu 2 x x -> x 1\n";
  CHECK_NOTHROW(parse_category(ok));
  const std::string bad = ok + "gen y X X -1\nmu 3 x x x -> y 1\n";
  CHECK_THROWS_AS(parse_category(bad), RelationViolation);
  CHECK_NOTHROW(parse_category(bad, false));
}

TEST_CASE("empty file") {
  const auto doc = parse_category("format 1\n");
  CHECK(doc.category.object_count() == 0);
}

TEST_CASE("CSV round trip and stability") {
  const auto ex = gen_two_spheres(2);
  const CurvedCategory d(ex.a, ex.b, 3);
  const auto rows = hochschild_betti_table(d, 3, Field::rationals());
  const auto csv = to_csv(rows);
  CHECK(csv.rfind("p,degree,dim\n", 0) == 0);
  auto nonzero = rows;
  CHECK(parse_csv(csv) == nonzero);
  CHECK(to_csv(hochschild_betti_table(d, 3, Field::rationals())) == csv);
  CHECK_THROWS_AS(parse_csv("p,degree,dim\n1,2\n"), ParseError);
  CHECK_THROWS_AS(parse_csv("x,y,z\n"), ParseError);
  CHECK(parse_csv("p,degree,dim\n").empty());
}

TEST_CASE("text table runs from the most negative degree to zero") {
  BettiReport r;
  r.kind = "hochschild";
  r.field = "Q";
  r.input_hash = fnv1a_hex("");
  r.rows = {{0, {{0, 2}}}, {1, {{-2, 3}, {-1, 1}}}};
  const auto text = to_text(r);
  CHECK(text.find("p       -2    -1     0") != std::string::npos);
  CHECK(text.find("1        3     1     .") != std::string::npos);
  CHECK(fnv1a_hex("") == "cbf29ce484222325");
  CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
}

TEST_CASE("command line exit codes") {
  const fs::path dir = FIXTURE_DIR;
  const auto tmp = scratch();
  const auto fx = [&](const char* f) { return (dir / f).string(); };
  CHECK(run("validate " + fx("two-spheres-d2.cat")) == 0);
  CHECK(run("hochschild " + fx("empty.cat") + " --pmax 2") == 0);
  CHECK(run("hochschild " + fx("two-spheres-d2.cat") + " --pmax 1 --field 2") == 0);
  CHECK(run("e1 " + fx("am-quiver-m2-d3.cat") + " --pmax 2") == 0);
  CHECK(run("donaldson " + fx("two-spheres-d2.cat")) == 0);
  CHECK(run("connes " + fx("two-spheres-d2.cat") + " --pmax 1 --field 3") == 0);
  CHECK(run("bar " + fx("am-quiver-m2-d3.cat") + " --pmax 1 --check-insert-a --check-serre-step") == 0);

  CHECK(run("") == 2);
  CHECK(run("hochschild") == 2);
  CHECK(run("hochschild " + (tmp / "missing.cat").string() + " --pmax 1") == 2);
  {
    std::ofstream(tmp / "bad.cat") << "format 1\nobject X\nwhat\n";
    CHECK(run("validate " + (tmp / "bad.cat").string()) == 2);
  }
  {
    std::ofstream(tmp / "rel.cat") << "format 1\nobject X\ngen e X X 0\nunit X e\ngen x X X 0\n"
                                      "mu 2 x x -> x 1\ngen y X X -1\nmu 3 x x x -> y 1\n";
    CHECK(run("validate " + (tmp / "rel.cat").string()) == 1);
  }
  CHECK(run("hochschild " + fx("two-spheres-d2.cat") + " --pmax 1 --field 6") == 1);
  CHECK(run("hochschild " + fx("two-spheres-d2.cat") + " --pmax -1") == 1);

  // CSV output is byte-stable and re-parses to the same table.
  const auto a = (tmp / "a.csv").string(), b = (tmp / "b.csv").string();
  REQUIRE(run("hochschild " + fx("two-spheres-d2.cat") + " --pmax 2 --csv " + a) == 0);
  REQUIRE(run("hochschild " + fx("two-spheres-d2.cat") + " --pmax 2 --csv " + b) == 0);
  CHECK(read_file(a) == read_file(b));
  const auto ex = gen_two_spheres(2);
  CHECK(parse_csv(read_file(a)) == hochschild_betti_table(CurvedCategory(ex.a, ex.b, 2), 2, Field::rationals()));

  // gen writes a file that reads back as the generator output.
  const auto out = (tmp / "s3.cat").string();
  REQUIRE(run("gen two-spheres --d 3 -o " + out) == 0);
  CHECK(same_category(read_category(out).category, *gen_two_spheres(3).b));
  CHECK(run("gen nonsense -o " + out) == 2);
  fs::remove_all(tmp);
}
