#ifndef COZC_REPORT_HPP
#define COZC_REPORT_HPP

#include <cstddef>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

namespace cozc {

using Json = nlohmann::ordered_json;

/// Outcome of one verified statement on one frame. A failed report keeps the
/// first counterexample found; it names concrete elements and values so the
/// failure can be replayed.
struct PropertyReport {
  std::string frame;
  std::string property;
  bool verdict = true;
  /// False when the frame does not meet the hypothesis of the statement; the
  /// verdict is then informational and does not fail a verification run.
  bool mandatory = true;
  Json witnesses = Json::array();
  std::optional<Json> counterexample;
  std::size_t checked = 0;

  PropertyReport() = default;
  PropertyReport(std::string frame_name, std::string property_name)
      : frame(std::move(frame_name)), property(std::move(property_name)) {}

  /// Records one check; on the first failure stores `detail` as counterexample.
  bool expect(bool ok, const Json& detail = Json::object()) {
    ++checked;
    if (!ok && verdict) {
      verdict = false;
      counterexample = detail;
    }
    return ok;
  }

  void fail(const Json& detail) { expect(false, detail); }
  void witness(Json w) { witnesses.push_back(std::move(w)); }
};

/// {"frame", "property", "verdict", "witnesses", "counterexample", "mandatory", "checked"}
Json to_json(const PropertyReport& report);

}  // namespace cozc

#endif  // COZC_REPORT_HPP
