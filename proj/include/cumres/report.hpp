#pragma once

// Shared result records: a tagged measure value and a single
// proposition-check report, plus the 9-significant-digit formatter used
// everywhere numbers leave the library.

#include <cstdio>
#include <string>

#include "cumres/quadrature.hpp"

namespace cumres {

struct MeasureValue {
  std::string name;
  std::string inputs;
  double value = 0.0;
  IntegralResult result;

  bool diverged() const { return result.diverged; }
};

struct PropositionReport {
  std::string proposition_id;
  std::string inputs;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;  // >= -tolerance passes inequality checks
  bool passed = false;
  double tolerance = 0.0;
  bool precondition_ok = true;
  std::string note;
};

/// 9 significant digits, no trailing noise; the one float format for CSV/JSON.
inline std::string format_g9(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

/// One report as a JSON object with a stable key order.
inline std::string report_to_json(const PropositionReport& r) {
  std::string s = "{\"id\":\"" + r.proposition_id + "\",\"inputs\":\"" + r.inputs +
                  "\",\"lhs\":" + format_g9(r.lhs) + ",\"rhs\":" + format_g9(r.rhs) +
                  ",\"margin\":" + format_g9(r.margin) +
                  ",\"tolerance\":" + format_g9(r.tolerance) +
                  ",\"precondition_ok\":" + (r.precondition_ok ? "true" : "false") +
                  ",\"passed\":" + (r.passed ? "true" : "false");
  if (!r.note.empty()) s += ",\"note\":\"" + r.note + "\"";
  s += "}";
  return s;
}

}  // namespace cumres
