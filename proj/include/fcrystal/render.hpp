#pragma once

#include <string>
#include <vector>

#include "fcrystal/analysis.hpp"
#include "fcrystal/bruhat.hpp"
#include "fcrystal/classify.hpp"

namespace fcrystal {

enum class OutputFormat { csv, json, md };

OutputFormat parse_format(const std::string& s);

// "num/den:mult" entries, space separated, slopes ascending.
std::string slope_multiset_string(const std::vector<SlopeEntry>& slopes);

// The class table in the requested format.  Deterministic: equal inputs give
// byte-identical output.  raw_config is echoed into the JSON format.
std::string render_classes(const Analysis& A, const std::vector<ClassRecord>& classes,
                           OutputFormat format, const std::string& raw_config);

// Structural verification of a prepared analysis: every check is a named
// pass/fail line.
struct VerifyCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;
  bool all_pass = true;
};

VerifyReport run_verification(const Analysis& A);
std::string render_verification(const VerifyReport& report);

}  // namespace fcrystal
