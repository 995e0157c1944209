#include <doctest.h>

#include <filesystem>

#include "homalg/fixtures.hpp"
#include "homalg/io.hpp"
#include "support/oracles.hpp"

using namespace homalg;

namespace {

const FieldSpec Q = FieldSpec::rationals();

std::string parse_error(std::string_view text) {
  try {
    (void)parse_algebra_file(text);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Parse);
    return e.what();
  }
  FAIL("parsed");
  return {};
}

}  // namespace

TEST_CASE("fixtures round-trip through the file format") {
  for (const auto& id : fixture_ids()) {
    CAPTURE(id);
    const Fixture f = load_fixture(id);
    const std::string text = dump_algebra_file(f.file);
    const AlgebraFile back = parse_algebra_file(text);
    CHECK(back == f.file);
    CHECK(dump_algebra_file(back) == text);
  }
}

TEST_CASE("non-adjoint fixture loads with its alpha") {
  const AlgebraFile f = parse_algebra_file(dump_algebra_file(load_fixture("ex-non-adjoint").file));
  REQUIRE(f.alpha);
  CHECK(f.alpha->matrix() == Matrix::from_ints(Q, {{1, 1}, {0, 1}}));
}

TEST_CASE("alpha may be omitted") {
  const AlgebraFile f = parse_algebra_file(R"({"field":"Q","dim":2,"products":[[0,0,1,"1"]]})");
  CHECK_FALSE(f.alpha);
  CHECK_THROWS_AS(f.hom_algebra(), Error);
  CHECK(f.algebra.sc(0, 0, 1).is_one());
}

TEST_CASE("scalars are normalized on save") {
  const AlgebraFile f = parse_algebra_file(R"({"field":"Q","dim":1,"products":[[0,0,0,"2/4"]],"alpha":[["6/3"]]})");
  const std::string text = dump_algebra_file(f);
  CHECK(text.find("\"1/2\"") != std::string::npos);
  CHECK(text.find("\"2\"") != std::string::npos);
  CHECK(text.find("2/4") == std::string::npos);
}

TEST_CASE("GF(p) files") {
  const AlgebraFile f = parse_algebra_file(R"({"field":{"GF":5},"dim":1,"products":[[0,0,0,"-1"]],"unit":["4"]})");
  CHECK(f.algebra.sc(0, 0, 0).residue() == 4);
  CHECK(f.algebra.field() == FieldSpec::prime(5));
}

TEST_CASE("parse errors name the field") {
  CHECK(parse_error("{").find("malformed") != std::string::npos);
  CHECK(parse_error(R"({"dim":1})").find("field") != std::string::npos);
  CHECK(parse_error(R"({"field":"R","dim":1})").find("field") != std::string::npos);
  CHECK(parse_error(R"({"field":{"GF":4},"dim":1})").find("field.GF") != std::string::npos);
  CHECK(parse_error(R"({"field":"Q","dim":0})").find("dim") != std::string::npos);
  CHECK(parse_error(R"({"field":"Q","dim":2,"products":[[0,0,2,"1"]]})").find("products[0]") != std::string::npos);
  CHECK(parse_error(R"({"field":"Q","dim":2,"products":[[0,0,1,"1"],[0,0,1,"2"]]})").find("duplicate") !=
        std::string::npos);
  CHECK(parse_error(R"({"field":"Q","dim":2,"products":[[0,0,1,"x"]]})").find("products[0][3]") != std::string::npos);
  CHECK(parse_error(R"({"field":"Q","dim":2,"alpha":[["1","0"],["0","1"],["0","0"]]})").find("alpha") !=
        std::string::npos);
  CHECK(parse_error(R"({"field":"Q","dim":2,"alpha":[["1"],["0"]]})").find("alpha[0]") != std::string::npos);
  CHECK(parse_error(R"({"field":"Q","dim":2,"unit":["1"]})").find("unit") != std::string::npos);
  CHECK(parse_error(R"({"field":"Q","dim":1,"colour":"red"})").find("colour") != std::string::npos);
  CHECK(parse_error(R"({"field":"Q","dim":1,"basis":["a","b"]})").find("basis") != std::string::npos);
}

TEST_CASE("save and load through the filesystem") {
  const auto path = std::filesystem::temp_directory_path() / "homalg_io_roundtrip.json";
  const AlgebraFile f = load_fixture("mat2-gf2").file;
  save_algebra_file(f, path);
  CHECK(load_algebra_file(path) == f);
  std::filesystem::remove(path);
  CHECK_THROWS_AS(load_algebra_file(path), Error);
}

TEST_CASE("random algebras round-trip") {
  oracle::Gen g(5);
  for (int trial = 0; trial < 50; ++trial) {
    const FieldSpec f = g.field();
    const std::size_t n = 1 + g.below(4);
    AlgebraFile file{g.algebra(f, n), LinearMap(g.matrix(f, n, n)), std::nullopt, "{}"};
    if (g.coin()) file.unit = g.vector(f, n);
    CHECK(parse_algebra_file(dump_algebra_file(file)) == file);
  }
}

TEST_CASE("search spec parsing") {
  const SearchSpec s = parse_search_spec(R"({"field":{"GF":3},"dim":2,"constraints":["hom-associative","unital:0"],
    "goal":"count-models","budget":1000,"fixed":{"alpha":[[1,0],[0,"1"]],"products":[[0,1,1,"2"]]}})");
  CHECK(s.field == FieldSpec::prime(3));
  CHECK(s.dim == 2);
  CHECK(s.constraints.size() == 2);
  CHECK(s.goal.kind == GoalKind::CountModels);
  CHECK(s.budget == 1000);
  REQUIRE(s.fixed_alpha);
  CHECK(*s.fixed_alpha == std::vector<std::uint32_t>{1, 0, 0, 1});
  REQUIRE(s.fixed_products.size() == 1);
  CHECK(s.fixed_products[0].value == 2);

  const SearchSpec c = parse_search_spec(R"({"field":{"GF":2},"dim":1,"goal":{"countermodel":"alpha-adjoint"}})");
  CHECK(c.goal.kind == GoalKind::FindCountermodel);
  CHECK(c.goal.identity == "alpha-adjoint");

  CHECK_THROWS_AS(parse_search_spec(R"({"field":"Q","dim":1})"), Error);
  CHECK_THROWS_AS(parse_search_spec(R"({"field":{"GF":2},"dim":1,"goal":"win"})"), Error);
  CHECK_THROWS_AS(parse_search_spec(R"({"field":{"GF":2},"dim":1,"constraints":["bogus"]})"), Error);
}

TEST_CASE("fixtures match their documented properties") {
  CHECK(fixture_ids().size() == 6);
  CHECK(is_fixture_id("mat2-gf2"));
  CHECK_FALSE(is_fixture_id("mat3"));
  CHECK_THROWS_AS(load_fixture("mat3"), Error);
  CHECK_THROWS_AS(load_fixture("ex-dim-two-kernel", 1), Error);
  for (const auto& id : fixture_ids()) {
    CAPTURE(id);
    const Fixture f = load_fixture(id);
    REQUIRE(f.file.alpha);
    CHECK(check_hom_associative(f.file.hom_algebra(), f.in_bound).passed);
    if (f.file.unit) CHECK(is_unit(f.file.algebra, *f.file.unit));
  }
}
