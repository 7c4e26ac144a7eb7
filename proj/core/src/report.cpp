#include "cozc/report.hpp"

namespace cozc {

Json to_json(const PropertyReport& report) {
  Json out;
  out["frame"] = report.frame;
  out["property"] = report.property;
  out["verdict"] = report.verdict;
  out["witnesses"] = report.witnesses;
  out["counterexample"] = report.counterexample ? *report.counterexample : Json(nullptr);
  out["mandatory"] = report.mandatory;
  out["checked"] = report.checked;
  return out;
}

}  // namespace cozc
