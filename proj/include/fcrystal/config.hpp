#pragma once

#include <string>

#include "fcrystal/analysis.hpp"

namespace fcrystal {

// A parsed configuration: the quintuple plus resource limits and the raw
// document (echoed into JSON output).
struct LoadedConfig {
  Quintuple q;
  Limits limits;
  std::string raw;
};

// Schema:
// {
//   "p": 2,
//   "factors": [{"lie_type": "B", "rank": 4, "copies": 1, "twist": "none"}],
//   "mu": [["w1"]],            // per factor, one entry per copy: a named
//                              // coweight ("trivial", "w<k>") or a raw
//                              // integer vector of the copy width
//   "limits": {"max_weyl_order": 1000000,
//              "max_oracle_points": 200000, "threads": 1}   // optional
// }
// Errors carry the offending field path and map to CLI exit code 2.
LoadedConfig load_config_text(const std::string& text);
LoadedConfig load_config_file(const std::string& path);

}  // namespace fcrystal
