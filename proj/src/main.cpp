#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "fcrystal/bruhat.hpp"
#include "fcrystal/classify.hpp"
#include "fcrystal/config.hpp"
#include "fcrystal/errors.hpp"
#include "fcrystal/oracle.hpp"
#include "fcrystal/render.hpp"

using namespace fcrystal;

namespace {

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(out_path, std::ios::binary);
  if (!os) throw ConfigError("cannot open output file '" + out_path + "'");
  os << text;
}

std::string type_string(const FinalType& t) {
  std::ostringstream os;
  for (const auto& [dim, image_dim] : t) os << '(' << dim << ',' << image_dim << ')';
  return os.str();
}

int run_oracle(const LoadedConfig& cfg, const Analysis& A, int m, int want_r, int want_d,
               bool census, bool orbits, int moves, const std::string& out_path) {
  require(m >= 1 && m <= 4, "--m must be between 1 and 4");
  const auto [r, d] = shadow_parameters(A);
  if (want_r >= 0)
    require(want_r == r, "--r is " + std::to_string(want_r) +
                             " but the configuration describes GL_" + std::to_string(r));
  if (want_d >= 0)
    require(want_d == d, "--d is " + std::to_string(want_d) +
                             " but the configuration has Hodge number " + std::to_string(d));

  const GF field = GF::make(static_cast<int>(A.q.p), m);
  const std::vector<ClassRecord> classes = enumerate_classes(A);
  const PointCounts pc = gl_point_counts(field.q, r, d);

  std::ostringstream os;
  bool all_ok = true;
  os << "field F_" << field.q << " (p = " << field.p << ", m = " << m << ")\n";
  os << "group GL_" << r << "(F_" << field.q << "), order " << pc.g_order << ", Hodge number "
     << d << "\n";
  os << "twisted action group order " << pc.h_order << "\n";
  os << "exact classification: " << classes.size() << " classes (expected binomial "
     << binomial(r, d) << ")\n";

  if (mass_identity_holds(A, classes, m)) {
    os << "ok mass identity |G| = |H| * sum p^(-m*S)\n";
  } else {
    os << "FAIL mass identity |G| = |H| * sum p^(-m*S)\n";
    all_ok = false;
  }

  if (census) {
    const auto rows =
        type_census(field, r, d, cfg.limits.threads, cfg.limits.max_oracle_points);
    os << "census: " << rows.size() << " final types over " << pc.g_order << " points\n";
    for (const CensusEntry& e : rows)
      os << "  type " << type_string(e.type) << " count " << e.count << "\n";
    if (rows.size() == classes.size()) {
      os << "ok census bucket count matches the exact class count\n";
    } else {
      os << "FAIL census bucket count differs from the exact class count\n";
      all_ok = false;
    }
  }

  if (orbits) {
    const auto orbs = twisted_orbits(field, r, d, cfg.limits.max_oracle_points);
    os << "orbits: " << orbs.size() << " twisted orbits\n";
    if (orbits_refine_types(field, r, d, cfg.limits.max_oracle_points)) {
      os << "ok every orbit lies in a single final-type bucket\n";
    } else {
      os << "FAIL an orbit meets two final-type buckets\n";
      all_ok = false;
    }
  }

  if (moves > 0) {
    if (random_moves_preserve_type(field, r, d, moves, 0x5eedULL)) {
      os << "ok " << moves << " random twisted moves preserve the final type\n";
    } else {
      os << "FAIL a random twisted move changed the final type\n";
      all_ok = false;
    }
  }

  os << "oracle: " << (all_ok ? "PASS" : "FAIL") << "\n";
  write_output(os.str(), out_path);
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact classification of the twisted Weyl-group conjugation classes attached to a "
      "root datum with minuscule cocharacter, with a finite-field brute-force oracle"};
  app.require_subcommand(1);

  std::string config_path;
  std::string format_str = "csv";
  std::string out_path;
  unsigned long long max_weyl = 0;
  int threads = 0;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "configuration file (JSON)")->required();
    sub->add_option("--max-weyl-order", max_weyl,
                    "abort if the Weyl group would exceed this order");
    sub->add_option("--threads", threads, "worker threads for the brute-force census");
    sub->add_option("--out", out_path, "write the report to a file instead of stdout");
  };

  CLI::App* classes_cmd = app.add_subcommand(
      "classes", "enumerate the classes with their invariants and dimensions");
  add_common(classes_cmd);
  classes_cmd->add_option("--format", format_str, "output format: csv, json or md")
      ->default_str("csv");

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "run all internal consistency checks and report each");
  add_common(verify_cmd);

  CLI::App* oracle_cmd = app.add_subcommand(
      "oracle", "brute-force finite-field cross-check of the GL classification");
  add_common(oracle_cmd);
  int m = 0;
  int want_r = -1, want_d = -1;
  bool census = false, orbits = false;
  int moves = 0;
  oracle_cmd->add_option("--m", m, "field degree: work over F_{p^m}")->required();
  oracle_cmd->add_option("--r", want_r, "expected GL rank (cross-check)");
  oracle_cmd->add_option("--d", want_d, "expected Hodge number (cross-check)");
  oracle_cmd->add_flag("--census", census, "tally final types over every group point");
  oracle_cmd->add_flag("--orbits", orbits,
                       "compute all twisted orbits and check they refine the types");
  oracle_cmd->add_option("--moves", moves,
                         "spot-check this many random twisted moves preserve the type");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    LoadedConfig cfg = load_config_file(config_path);
    if (max_weyl > 0) cfg.limits.max_weyl_order = max_weyl;
    if (threads != 0) {
      require(threads >= 1 && threads <= 256, "--threads must be between 1 and 256");
      cfg.limits.threads = threads;
    }
    const Analysis A = prepare(cfg.q, cfg.limits);

    if (*classes_cmd) {
      const auto classes = enumerate_classes(A);
      write_output(render_classes(A, classes, parse_format(format_str), cfg.raw), out_path);
      return 0;
    }
    if (*verify_cmd) {
      const VerifyReport report = run_verification(A);
      write_output(render_verification(report), out_path);
      return report.all_pass ? 0 : 1;
    }
    return run_oracle(cfg, A, m, want_r, want_d, census, orbits, moves, out_path);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const LimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InvariantError& e) {
    std::cerr << "internal invariant violated: " << e.what() << "\n";
    return 3;
  }
}
