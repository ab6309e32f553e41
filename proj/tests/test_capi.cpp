#include <string>

#include <json.hpp>

#include "arrmi/arrmi.h"
#include "doctest.h"

namespace {

using Json = nlohmann::json;

const char* kCoordinate = R"({"points": [["1","0","0"], ["0","1","0"], ["0","0","1"]]})";
const char* kCollinear = R"({"points": [["1","0","0"], ["0","1","0"], ["1","1","0"]]})";
const char* kConic =
    R"({"points": [["1","0","0"], ["1","1","1"], ["1","-1","1"], ["1","2","4"], ["1","-2","4"], ["1","3","9"]]})";
const char* kMixed = R"({"points": [["1","0","0"], ["0","1","0"], ["1","1","0"], ["0","0","1"]]})";

// Owns an arrangement handle and the strings returned through it.
struct Handle {
  arrmi_arrangement* a = nullptr;

  explicit Handle(const char* text, int has_seed = 0, uint64_t seed = 0) {
    REQUIRE(arrmi_arrangement_parse(text, has_seed, seed, &a) == ARRMI_OK);
  }
  ~Handle() { arrmi_arrangement_free(a); }
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
};

std::string take(char* s) {
  std::string out = s ? s : "";
  arrmi_string_free(s);
  return out;
}

Json run_lct(const char* text) {
  Handle h(text);
  char* out = nullptr;
  REQUIRE(arrmi_lct(h.a, nullptr, &out) == ARRMI_OK);
  return Json::parse(take(out));
}

}  // namespace

TEST_CASE("lct through the C API") {
  CHECK(run_lct(kCoordinate)["result"]["lct"] == "3/2");
  CHECK(run_lct(kCollinear)["result"]["lct"] == "5/3");
  CHECK(run_lct(kConic)["result"]["lct"] == "4/3");
  CHECK(run_lct(R"({"generator": {"general": 6, "seed": 21}})")["result"]["lct"] == "1");
}

TEST_CASE("multiplier ideal documents") {
  Handle h(kCoordinate);
  char* out = nullptr;
  REQUIRE(arrmi_multiplier_ideal(h.a, "3/2", nullptr, &out) == ARRMI_OK);
  const Json doc = Json::parse(take(out));
  CHECK(doc["command"] == "mi");
  CHECK(doc["result"]["ideal"] == Json::array({"x", "y", "z"}));
  CHECK(doc["result"]["branch"] == "A[0,2)");
  CHECK_FALSE(doc.contains("timings"));

  REQUIRE(arrmi_multiplier_ideal(h.a, "1", nullptr, &out) == ARRMI_OK);
  CHECK(Json::parse(take(out))["result"]["ideal"] == Json::array({"1"}));

  Handle conic(kConic);
  REQUIRE(arrmi_multiplier_ideal(conic.a, "13/10", nullptr, &out) == ARRMI_OK);
  CHECK(Json::parse(take(out))["result"]["ideal"] == Json::array({"1"}));
  REQUIRE(arrmi_multiplier_ideal(conic.a, "4/3", nullptr, &out) == ARRMI_OK);
  const Json proper = Json::parse(take(out))["result"]["ideal"];
  CHECK_FALSE(proper.empty());
  CHECK(proper != Json::array({"1"}));

  const arrmi_options timed{1};
  REQUIRE(arrmi_multiplier_ideal(h.a, "1/2", &timed, &out) == ARRMI_OK);
  CHECK(Json::parse(take(out)).contains("timings"));
}

TEST_CASE("classification documents") {
  Handle h(R"({"generator": {"general": 8, "seed": 5}})");
  char* out = nullptr;
  REQUIRE(arrmi_classify(h.a, nullptr, &out) == ARRMI_OK);
  const Json r = Json::parse(take(out))["result"];
  CHECK(r["case"] == "C");
  CHECK(r["d"] == 3);
  CHECK(r["e"] == 4);
  CHECK(r["envelope_degree"] == 9);
  CHECK(r["residual_degree"] == 1);

  Handle coord(kCoordinate);
  REQUIRE(arrmi_classify(coord.a, nullptr, &out) == ARRMI_OK);
  const Json a = Json::parse(take(out))["result"];
  CHECK(a["case"] == "A");
  CHECK(a["d"] == 2);
  CHECK(a["ggds"] == Json::array({2}));

  Handle mixed(kMixed);
  REQUIRE(arrmi_classify(mixed.a, nullptr, &out) == ARRMI_OK);
  CHECK(Json::parse(take(out))["result"]["case"] == "unsupported");
}

TEST_CASE("status codes and error messages") {
  arrmi_arrangement* a = nullptr;
  CHECK(arrmi_arrangement_parse("{\"points\": [[\"1\",\"0\",\"0\"], [\"2\",\"0\",\"0\"]]}", 0, 0, &a) ==
        ARRMI_PARSE_ERROR);
  CHECK(a == nullptr);
  CHECK(std::string(arrmi_last_error_message()).find("points[1]") != std::string::npos);
  CHECK(arrmi_arrangement_parse("{\"points\": [[\"1\",\"0\"]]}", 0, 0, &a) == ARRMI_PARSE_ERROR);
  CHECK(arrmi_arrangement_parse("{\"generator\": {\"general\": -1}}", 0, 0, &a) == ARRMI_PARSE_ERROR);
  CHECK(std::string(arrmi_last_error_message()).find("generator.general") != std::string::npos);
  CHECK(arrmi_arrangement_parse("[1, 2", 0, 0, &a) == ARRMI_PARSE_ERROR);
  CHECK(arrmi_arrangement_parse(nullptr, 0, 0, &a) == ARRMI_INVALID_ARGUMENT);

  Handle mixed(kMixed);
  char* out = nullptr;
  CHECK(arrmi_lct(mixed.a, nullptr, &out) == ARRMI_UNSUPPORTED);
  CHECK(out == nullptr);
  CHECK(std::string(arrmi_last_error_message()).find("classification unsupported") == 0);

  Handle h(kCoordinate);
  CHECK(arrmi_multiplier_ideal(h.a, "abc", nullptr, &out) == ARRMI_PARSE_ERROR);
  CHECK(arrmi_multiplier_ideal(h.a, "11", nullptr, &out) == ARRMI_INVALID_ARGUMENT);
  CHECK(arrmi_multiplier_ideal(h.a, "-1", nullptr, &out) == ARRMI_INVALID_ARGUMENT);
  CHECK(arrmi_verify(h.a, "1,,2", nullptr, &out) == ARRMI_PARSE_ERROR);
  REQUIRE(arrmi_lct(h.a, nullptr, &out) == ARRMI_OK);
  arrmi_string_free(out);
  CHECK(std::string(arrmi_last_error_message()).empty());
}

TEST_CASE("verify reports") {
  Handle h(kCoordinate);
  char* out = nullptr;
  REQUIRE(arrmi_verify(h.a, "1/2,1,5/4,3/2,7/4,2,5/2", nullptr, &out) == ARRMI_OK);
  const Json r = Json::parse(take(out))["result"];
  CHECK(r["passed"] == true);
  CHECK(r["grid"].size() == 7);

  Handle mixed(kMixed);
  CHECK(arrmi_verify(mixed.a, nullptr, nullptr, &out) == ARRMI_UNSUPPORTED);
  const Json u = Json::parse(take(out))["result"];
  CHECK(u["passed"] == false);
  REQUIRE(u["checks"].size() == 1);
  CHECK(u["checks"][0]["name"] == "classification");
}

TEST_CASE("property: input echo round-trips to the same digest") {
  for (const char* text : {kCoordinate, kCollinear, kConic, kMixed, R"({"generator": {"general": 9, "seed": 3}})",
                           R"({"points": [["2","4","6"], ["0","-3/2","3"], ["5","0","1/7"]]})"}) {
    Handle h(text);
    char* out = nullptr;
    REQUIRE(arrmi_classify(h.a, nullptr, &out) == ARRMI_OK);
    const Json doc = Json::parse(take(out));
    Handle again(doc["input"].dump().c_str());
    char* digest = nullptr;
    REQUIRE(arrmi_arrangement_digest(again.a, &digest) == ARRMI_OK);
    CHECK(take(digest) == doc["input_digest"].get<std::string>());
  }
}

TEST_CASE("property: documents are deterministic") {
  for (const char* text : {kCollinear, kConic, R"({"generator": {"general": 7, "seed": 99}})"}) {
    std::string first, second;
    for (std::string* target : {&first, &second}) {
      Handle h(text);
      char* out = nullptr;
      REQUIRE(arrmi_jumps(h.a, "3", nullptr, &out) == ARRMI_OK);
      *target = take(out);
    }
    CHECK(first == second);
  }
}

TEST_CASE("seed override and digests") {
  Handle a(R"({"generator": {"general": 5, "seed": 1}})", 1, 2);
  Handle b(R"({"generator": {"general": 5, "seed": 2}})");
  char* da = nullptr;
  char* db = nullptr;
  REQUIRE(arrmi_arrangement_digest(a.a, &da) == ARRMI_OK);
  REQUIRE(arrmi_arrangement_digest(b.a, &db) == ARRMI_OK);
  CHECK(take(da) == take(db));

  arrmi_arrangement* p = nullptr;
  CHECK(arrmi_arrangement_parse(kCoordinate, 1, 2, &p) == ARRMI_PARSE_ERROR);

  // Order and scaling of the points do not change the digest.
  Handle c(R"({"points": [["0","0","5"], ["0","2","0"], ["-3","0","0"]]})");
  Handle d(kCoordinate);
  char* dc = nullptr;
  char* dd = nullptr;
  REQUIRE(arrmi_arrangement_digest(c.a, &dc) == ARRMI_OK);
  REQUIRE(arrmi_arrangement_digest(d.a, &dd) == ARRMI_OK);
  const std::string digest = take(dc);
  CHECK(digest == take(dd));
  CHECK(digest.rfind("fnv1a64:", 0) == 0);
  CHECK(digest.size() == 8 + 16);

  uint64_t n = 0;
  REQUIRE(arrmi_arrangement_size(c.a, &n) == ARRMI_OK);
  CHECK(n == 3);
}

TEST_CASE("text rendering") {
  Handle h(kCollinear);
  char* out = nullptr;
  REQUIRE(arrmi_lct(h.a, nullptr, &out) == ARRMI_OK);
  const std::string doc = take(out);
  char* text = nullptr;
  REQUIRE(arrmi_render_text(doc.c_str(), &text) == ARRMI_OK);
  const std::string rendered = take(text);
  CHECK(rendered.find("lct: 5/3\n") != std::string::npos);
  CHECK(rendered.find("command: lct\n") == 0);
  CHECK(arrmi_render_text("{", &text) == ARRMI_PARSE_ERROR);
}
