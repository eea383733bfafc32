#include <filesystem>
#include <stdexcept>

#include "cackit/code_io.hpp"
#include "cackit/constructions.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace cackit;

TEST_SUITE("code_io") {

TEST_CASE("round trip keeps codewords and generator tags") {
  const Cac c1 = construct_c1(37, 4);
  const Cac back = cac_from_json(to_json(c1));
  CHECK(back == c1);
  CHECK(back.generator_set() == c1.generator_set());
  CHECK(to_json(back) == to_json(c1));

  const Cac e1 = fixtures::code_15_3();
  const std::string text = to_json(e1);
  CHECK(text.find("generators") == std::string::npos);
  CHECK(cac_from_json(text) == e1);
  CHECK(text == R"({"codewords":[[0,1,2],[0,5,10],[0,6,12],[0,7,11]],"length":15,"weight":3})");
}

TEST_CASE("partial generator tags are stored as null") {
  const Cac mixed(15, 3, {Codeword(ResidueSet(15, {0, 5, 10}), 5), Codeword(ResidueSet(15, {0, 7, 11}))});
  const std::string text = to_json(mixed);
  CHECK(text.find("null") != std::string::npos);
  CHECK(cac_from_json(text).generators() == mixed.generators());
}

TEST_CASE("malformed input") {
  CHECK_THROWS_AS((void)cac_from_json("not json"), CodeFormatError);
  CHECK_THROWS_AS((void)cac_from_json("[]"), CodeFormatError);
  CHECK_THROWS_AS((void)cac_from_json(R"({"length":15,"weight":3})"), CodeFormatError);
  CHECK_THROWS_AS((void)cac_from_json(R"({"length":15,"weight":3,"codewords":[[0,1]]})"), CodeFormatError);
  CHECK_THROWS_AS((void)cac_from_json(R"({"length":15,"weight":3,"codewords":[[0,1,15]]})"), CodeFormatError);
  CHECK_THROWS_AS((void)cac_from_json(R"({"length":15,"weight":3,"codewords":[[1,2,3]]})"), CodeFormatError);
  CHECK_THROWS_AS((void)cac_from_json(R"({"length":15,"weight":3,"codewords":[[0,5,10]],"generators":[4]})"),
                  CodeFormatError);
  CHECK_THROWS_AS((void)cac_from_json(R"({"length":15,"weight":3,"codewords":[[0,5,10]],"generators":[5,6]})"),
                  CodeFormatError);
  CHECK_THROWS_AS((void)cac_from_json(R"({"length":"x","weight":3,"codewords":[]})"), CodeFormatError);
  CHECK_THROWS_AS((void)read_cac_file("/nonexistent/code.json"), CodeFormatError);
}

TEST_CASE("files") {
  const auto path = std::filesystem::temp_directory_path() / "cackit_io_test.json";
  write_cac_file(fixtures::code_26_4(), path);
  CHECK(read_cac_file(path) == fixtures::code_26_4());
  std::filesystem::remove(path);
}

}  // TEST_SUITE
