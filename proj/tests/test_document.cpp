#include <doctest.h>

#include "nonarch/document.hpp"

using namespace nonarch;

namespace {

nlohmann::ordered_json run_text(const std::string& text, const std::optional<std::string>& op = std::nullopt) {
  return run_document(parse_document(text), op).report;
}

DocumentError input_error(const std::string& text, const std::optional<std::string>& op = std::nullopt) {
  try {
    run_text(text, op);
  } catch (const DocumentError& e) {
    return e;
  }
  FAIL("document accepted");
  return DocumentError(ErrorCode::ValidationError, "", "");
}

}  // namespace

TEST_CASE("polygon request") {
  auto r = run_text(R"({"p": "5", "objects": {"f": {"coeffs": [[0, "-5"], [2, "1"]]}},
                        "requests": [{"op": "polygon", "f": "f"}]})");
  CHECK(r["schema"] == "1");
  const auto& res = r["results"][0];
  CHECK(res["status"] == "ok");
  CHECK(res["window"] == "(-inf, inf)");
  REQUIRE(res["critical_radii"].size() == 1);
  CHECK(res["critical_radii"][0]["rho"] == "-1/2");
  CHECK(res["critical_radii"][0]["delta"] == 2);
}

TEST_CASE("smt request") {
  auto r = run_text(R"({"p": "5", "requests": [
      {"f": {"num": ["0", "1"], "den": ["1", "-1", "1"]}, "targets": ["0", "1", "inf"]}]})",
                    "smt");
  const auto& res = r["results"][0];
  CHECK(res["holds"] == true);
  CHECK(res["sup"] == "0");
  CHECK(res["S"]["right_slope"] == "0");
}

TEST_CASE("inline series with a tail bound") {
  auto r = run_text(R"({"p": "5", "requests": [{"op": "polygon", "f": {"coeffs": [[0, "1"], [1, "1"]],
      "exact": false, "n_lo": 0, "n_hi": 1, "tail_bound": ["0", "0"]}}]})");
  CHECK(r["results"][0]["window"] == "(-inf, 0)");
}

TEST_CASE("mathematical failures stay inside the request") {
  auto r = run_text(R"({"p": "5", "requests": [
      {"op": "divide", "f": ["0", "0", "1"], "P": ["1", "1"], "rho": "-1"},
      {"op": "zeros", "f": ["1", "1"], "rho1": "0", "rho2": "1"}]})");
  CHECK(r["results"][0]["status"] == "error");
  CHECK(r["results"][0]["error"] == "NotDominant");
  CHECK(r["results"][1]["status"] == "ok");
  CHECK(r["results"][1]["count"] == 1);
}

TEST_CASE("input errors carry a path") {
  DocumentError a = input_error(R"({"p": "5", "requests": [{"op": "zeros", "f": ["1//2"], "rho1": "0", "rho2": "1"}]})");
  CHECK(a.code() == ErrorCode::ParseError);
  CHECK(a.path() == "requests[0].f[0]");
  DocumentError b = input_error(R"({"p": "6", "requests": []})");
  CHECK(b.code() == ErrorCode::NotPrime);
  DocumentError c = input_error(R"({"p": "5", "requests": [{"op": "polygon", "f": "g"}]})");
  CHECK(c.path() == "requests[0].f");
  DocumentError d = input_error(R"({"p": "5", "objects": {"f": ["1"], "f": ["2"]}, "requests": []})");
  CHECK(d.path() == "f");
  DocumentError e = input_error(R"({"p": "5", "requests": [{"f": ["1"]}]})");
  CHECK(e.path() == "requests[0].op");
  DocumentError f = input_error(R"({"p": "5", "requests": [{"op": "spin"}]})");
  CHECK(f.path() == "requests[0].op");
  DocumentError g = input_error(R"({"p": "5", "requests": [)");
  CHECK(g.code() == ErrorCode::ParseError);
  DocumentError h = input_error(R"({"p": "5", "requests": [{"op": "polygon", "f": {"coeffs": [[0, 1.5]]}}]})");
  CHECK(h.path() == "requests[0].f.coeffs[0][1]");
}

TEST_CASE("reports are deterministic and exact") {
  std::string doc = R"({"p": "13", "precision": 4, "objects": {"t": {"coeffs": [[-1, "1"], [3, "1"]]}},
      "requests": [{"op": "schnirelman", "f": "t", "n": 6},
                   {"op": "nevanlinna", "f": {"num": ["-1", "0", "1"], "den": ["1"]}},
                   {"op": "residue", "num": ["1"], "den": {"factored": [["13", 1], ["0", 2]]}, "rho": "-2"},
                   {"op": "build", "zeros": {"zeros": [["13", 2]], "m0": 1}, "order": 5},
                   {"op": "factor", "f": ["13", "1", "1"], "rho": "0", "target": "4"},
                   {"op": "invert", "f": ["1", "13"], "rho": "0"},
                   {"op": "abc", "f": ["0", "0", "1"], "g": ["1", "0", "-1"], "h": ["1"]}]})";
  RunOutput a = run_document(parse_document(doc));
  RunOutput b = run_document(parse_document(doc));
  CHECK(a.report.dump() == b.report.dump());
  CHECK(a.csv == b.csv);
  for (const auto& res : a.report["results"]) CHECK(res["status"] == "ok");
  CHECK(a.report["results"][0]["value"] == "1");
  CHECK(a.report["results"][0]["modulus"] == "28561");
  CHECK(a.report["results"][2]["residue_sum"] == "-1/169");
  std::string text = a.report.dump();
  CHECK(text.find('.') == std::string::npos);
  CHECK(a.csv.rfind("# lossy", 0) == 0);
}

TEST_CASE("precision override") {
  std::string doc = R"({"p": "5", "requests": [{"op": "invert", "f": ["1", "5"], "rho": "0"}]})";
  auto r = run_document(parse_document(doc), std::nullopt, 2).report;
  CHECK(r["precision"] == 2);
  CHECK(r["results"][0]["error"] == "-3");
}
