#include "fcrystal/config.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "fcrystal/errors.hpp"

namespace fcrystal {

namespace {

using nlohmann::json;

bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

LieType parse_lie_type(const std::string& s, const std::string& path) {
  if (s == "A") return LieType::A;
  if (s == "B") return LieType::B;
  if (s == "C") return LieType::C;
  if (s == "D") return LieType::D;
  if (s == "GL") return LieType::GL;
  throw ConfigError(path + ": unknown lie_type '" + s + "' (expected A, B, C, D or GL)");
}

Twist parse_twist(const std::string& s, const std::string& path) {
  if (s == "none") return Twist::none;
  if (s == "diagram") return Twist::diagram;
  throw ConfigError(path + ": unknown twist '" + s + "' (expected none or diagram)");
}

int get_int(const json& j, const std::string& path) {
  if (!j.is_number_integer())
    throw ConfigError(path + ": expected an integer");
  return j.get<int>();
}

// Expands one mu entry (name or raw vector) to a copy-local vector.
Vec parse_mu_entry(const json& j, const FactorSpec& fs, const std::string& path) {
  const int width = copy_width(fs.type, fs.rank);
  if (j.is_string()) {
    const std::string name = j.get<std::string>();
    if (name == "trivial") return Vec(width, 0);
    if (name.size() >= 2 && name[0] == 'w') {
      int node = 0;
      try {
        size_t used = 0;
        node = std::stoi(name.substr(1), &used);
        if (used + 1 != name.size()) throw std::invalid_argument("");
      } catch (...) {
        throw ConfigError(path + ": malformed coweight name '" + name + "'");
      }
      try {
        return fundamental_coweight(fs.type, fs.rank, node);
      } catch (const ConfigError&) {
        std::ostringstream os;
        os << path << ": node " << node << " is out of range for "
           << lie_type_name(fs.type) << fs.rank;
        throw ConfigError(os.str());
      }
    }
    throw ConfigError(path + ": expected 'trivial', 'w<k>' or an integer vector");
  }
  if (j.is_array()) {
    if (static_cast<int>(j.size()) != width) {
      std::ostringstream os;
      os << path << ": expected " << width << " coordinates for "
         << lie_type_name(fs.type) << fs.rank << ", got " << j.size();
      throw ConfigError(os.str());
    }
    Vec v;
    for (size_t i = 0; i < j.size(); ++i)
      v.push_back(get_int(j[i], path + "[" + std::to_string(i) + "]"));
    return v;
  }
  throw ConfigError(path + ": expected a string or an integer vector");
}

}  // namespace

LoadedConfig load_config_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config: invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config: top level must be an object");

  LoadedConfig out;
  out.raw = doc.dump();

  if (!doc.contains("p")) throw ConfigError("p: missing");
  if (!doc["p"].is_number_integer()) throw ConfigError("p: expected an integer");
  out.q.p = doc["p"].get<long long>();
  if (!is_prime(out.q.p)) throw ConfigError("p: must be a prime");

  if (!doc.contains("factors") || !doc["factors"].is_array() || doc["factors"].empty())
    throw ConfigError("factors: expected a non-empty array");
  std::vector<FactorSpec> factors;
  for (size_t i = 0; i < doc["factors"].size(); ++i) {
    const json& jf = doc["factors"][i];
    const std::string path = "factors[" + std::to_string(i) + "]";
    if (!jf.is_object()) throw ConfigError(path + ": expected an object");
    FactorSpec fs;
    if (!jf.contains("lie_type") || !jf["lie_type"].is_string())
      throw ConfigError(path + ".lie_type: expected a string");
    fs.type = parse_lie_type(jf["lie_type"].get<std::string>(), path + ".lie_type");
    if (!jf.contains("rank")) throw ConfigError(path + ".rank: missing");
    fs.rank = get_int(jf["rank"], path + ".rank");
    if (fs.rank < 1) throw ConfigError(path + ".rank: must be >= 1");
    if (fs.type == LieType::D && fs.rank < 4)
      throw ConfigError(path + ".rank: D factors need rank >= 4");
    fs.copies = jf.contains("copies") ? get_int(jf["copies"], path + ".copies") : 1;
    if (fs.copies < 1 || fs.copies > 64)
      throw ConfigError(path + ".copies: must be in 1..64");
    fs.twist = jf.contains("twist")
                   ? parse_twist(jf["twist"].is_string() ? jf["twist"].get<std::string>() : "?",
                                 path + ".twist")
                   : Twist::none;
    if (fs.twist == Twist::diagram &&
        (fs.type == LieType::B || fs.type == LieType::C))
      throw ConfigError(path + ".twist: B and C factors have no diagram twist");
    factors.push_back(fs);
  }
  out.q.rd = build_root_datum(factors);

  if (!doc.contains("mu") || !doc["mu"].is_array() ||
      doc["mu"].size() != factors.size())
    throw ConfigError("mu: expected one entry per factor");
  Vec mu(out.q.rd.rank, 0);
  for (size_t f = 0; f < factors.size(); ++f) {
    const json& jm = doc["mu"][f];
    const std::string path = "mu[" + std::to_string(f) + "]";
    if (!jm.is_array() || static_cast<int>(jm.size()) != factors[f].copies) {
      std::ostringstream os;
      os << path << ": expected " << factors[f].copies << " entries (one per copy)";
      throw ConfigError(os.str());
    }
    for (int c = 0; c < factors[f].copies; ++c) {
      const Vec local = parse_mu_entry(jm[c], factors[f],
                                       path + "[" + std::to_string(c) + "]");
      for (const CopyBlock& blk : out.q.rd.blocks)
        if (blk.factor == static_cast<int>(f) && blk.copy == c)
          for (int k = 0; k < blk.width; ++k) mu[blk.offset + k] = local[k];
    }
  }
  out.q.mu = std::move(mu);
  // Early minusculity validation with a config-level error.
  epsilon_partition(out.q.rd, out.q.mu);

  out.q.sigma = build_sigma(out.q.rd);

  if (doc.contains("limits")) {
    const json& jl = doc["limits"];
    if (!jl.is_object()) throw ConfigError("limits: expected an object");
    if (jl.contains("max_weyl_order")) {
      const long long v = jl["max_weyl_order"].get<long long>();
      if (v < 1) throw ConfigError("limits.max_weyl_order: must be >= 1");
      out.limits.max_weyl_order = static_cast<unsigned long long>(v);
    }
    if (jl.contains("max_oracle_points")) {
      const long long v = jl["max_oracle_points"].get<long long>();
      if (v < 1) throw ConfigError("limits.max_oracle_points: must be >= 1");
      out.limits.max_oracle_points = static_cast<unsigned long long>(v);
    }
    if (jl.contains("threads")) {
      const int v = get_int(jl["threads"], "limits.threads");
      if (v < 1 || v > 256) throw ConfigError("limits.threads: must be in 1..256");
      out.limits.threads = v;
    }
  }
  return out;
}

LoadedConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_config_text(buf.str());
}

}  // namespace fcrystal
