#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "nonarch/error.hpp"

namespace nonarch {

/// An input problem in an analysis document, located by a JSON path such as
/// "requests[2].rho".
class DocumentError : public Error {
 public:
  DocumentError(ErrorCode code, std::string path, const std::string& message)
      : Error(code, path + ": " + message), path_(std::move(path)) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

/// Parses document text, rejecting duplicate keys. Throws DocumentError.
nlohmann::json parse_document(const std::string& text);

struct RunOutput {
  nlohmann::ordered_json report;
  /// request,function,rho,value rows for every piecewise-linear result.
  std::string csv;
};

/// Runs every request of the document in order.
///
/// Malformed documents raise DocumentError. Mathematical failures of a single
/// request are reported in that request's entry with status "error".
/// `default_op` fills in requests without an "op" field.
RunOutput run_document(const nlohmann::json& doc, const std::optional<std::string>& default_op = std::nullopt,
                       std::optional<long> precision = std::nullopt);

}  // namespace nonarch
