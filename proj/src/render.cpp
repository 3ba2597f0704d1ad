#include "fcrystal/render.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

#include "fcrystal/errors.hpp"

namespace fcrystal {

OutputFormat parse_format(const std::string& s) {
  if (s == "csv") return OutputFormat::csv;
  if (s == "json") return OutputFormat::json;
  if (s == "md") return OutputFormat::md;
  throw ConfigError("format: expected csv, json or md, got '" + s + "'");
}

std::string slope_multiset_string(const std::vector<SlopeEntry>& slopes) {
  std::ostringstream os;
  for (size_t i = 0; i < slopes.size(); ++i) {
    if (i) os << ' ';
    os << slopes[i].slope.numerator() << '/' << slopes[i].slope.denominator() << ':'
       << slopes[i].mult;
  }
  return os.str();
}

namespace {

std::vector<std::string> factor_type_names(const Analysis& A) {
  std::vector<std::string> names;
  for (const FactorType& t : simple_factor_types(A.q.rd, A.q.mu, A.q.sigma))
    names.push_back(factor_type_name(t));
  return names;
}

std::string render_csv(const Analysis& A, const std::vector<ClassRecord>& classes) {
  std::ostringstream os;
  os << "class_id,representative,class_size,s_value,dim_orbit,dim_stratum_universal,"
        "slopes,pivotal,open,dim_x_fp,dim_y,dim_y0,dim_w_span\n";
  for (size_t i = 0; i < classes.size(); ++i) {
    const ClassRecord& c = classes[i];
    os << i << ',' << reduced_word(A.q.rd, A.W, c.rep) << ',' << c.members.size() << ','
       << c.s_val << ',' << c.dim_orbit << ',' << c.dim_stratum << ','
       << slope_multiset_string(c.ad_slopes) << ',' << (c.pivotal ? 1 : 0) << ','
       << (c.open_stratum ? 1 : 0) << ',' << c.z.dim_x_fp << ',' << c.z.dim_y << ','
       << c.z.dim_y0 << ',' << c.z.dim_w_span << '\n';
  }
  return os.str();
}

std::string render_md(const Analysis& A, const std::vector<ClassRecord>& classes) {
  std::ostringstream os;
  os << "| class | representative | size | S | dim orbit | dim stratum | slopes | "
        "pivotal | open | dim x_fp | dim y | dim y0 | dim w_span |\n";
  os << "|---|---|---|---|---|---|---|---|---|---|---|---|---|\n";
  for (size_t i = 0; i < classes.size(); ++i) {
    const ClassRecord& c = classes[i];
    os << "| " << i << " | `" << reduced_word(A.q.rd, A.W, c.rep) << "` | "
       << c.members.size() << " | " << c.s_val << " | " << c.dim_orbit << " | "
       << c.dim_stratum << " | " << slope_multiset_string(c.ad_slopes) << " | "
       << (c.pivotal ? "yes" : "no") << " | " << (c.open_stratum ? "yes" : "no") << " | "
       << c.z.dim_x_fp << " | " << c.z.dim_y << " | " << c.z.dim_y0 << " | "
       << c.z.dim_w_span << " |\n";
  }
  return os.str();
}

std::string render_json(const Analysis& A, const std::vector<ClassRecord>& classes,
                        const std::string& raw_config) {
  nlohmann::ordered_json doc;
  doc["config"] = raw_config.empty() ? nlohmann::ordered_json(nullptr)
                                     : nlohmann::ordered_json::parse(raw_config);
  nlohmann::ordered_json summary;
  summary["rank"] = A.q.rd.rank;
  summary["roots"] = A.q.rd.num_roots();
  summary["dim_g"] = A.ep.dim_G;
  summary["dim_p"] = A.ep.dim_P;
  summary["dim_n"] = A.ep.dim_N;
  summary["positive_roots"] = static_cast<int>(A.canon.positives.size());
  summary["d_u"] = d_u_value(A);
  summary["weyl_order"] = A.W.size();
  summary["parabolic_order"] = static_cast<int>(A.W_P.size());
  summary["class_count"] = static_cast<int>(classes.size());
  summary["sigma_order"] = A.q.sigma.order;
  summary["factor_types"] = factor_type_names(A);
  doc["summary"] = summary;

  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (size_t i = 0; i < classes.size(); ++i) {
    const ClassRecord& c = classes[i];
    nlohmann::ordered_json jc;
    jc["class_id"] = i;
    jc["representative"] = reduced_word(A.q.rd, A.W, c.rep);
    jc["class_size"] = c.members.size();
    jc["s_value"] = c.s_val;
    jc["dim_orbit"] = c.dim_orbit;
    jc["dim_stratum_universal"] = c.dim_stratum;
    nlohmann::ordered_json slopes = nlohmann::ordered_json::array();
    for (const SlopeEntry& s : c.ad_slopes) {
      slopes.push_back({{"num", s.slope.numerator()},
                        {"den", s.slope.denominator()},
                        {"mult", s.mult}});
    }
    jc["slopes"] = slopes;
    jc["pivotal"] = c.pivotal;
    jc["open"] = c.open_stratum;
    jc["dim_x_fp"] = c.z.dim_x_fp;
    jc["dim_y"] = c.z.dim_y;
    jc["dim_y0"] = c.z.dim_y0;
    jc["dim_w_span"] = c.z.dim_w_span;
    arr.push_back(jc);
  }
  doc["classes"] = arr;
  return doc.dump(2) + "\n";
}

}  // namespace

std::string render_classes(const Analysis& A, const std::vector<ClassRecord>& classes,
                           OutputFormat format, const std::string& raw_config) {
  switch (format) {
    case OutputFormat::csv: return render_csv(A, classes);
    case OutputFormat::md: return render_md(A, classes);
    case OutputFormat::json: return render_json(A, classes, raw_config);
  }
  throw InvariantError("render_classes: unhandled format");
}

namespace {

void add_check(VerifyReport& rep, const std::string& name,
               const std::function<std::pair<bool, std::string>()>& body) {
  VerifyCheck c;
  c.name = name;
  try {
    auto [pass, detail] = body();
    c.pass = pass;
    c.detail = detail;
  } catch (const InvariantError& e) {
    c.pass = false;
    c.detail = e.what();
  }
  rep.all_pass = rep.all_pass && c.pass;
  rep.checks.push_back(std::move(c));
}

}  // namespace

VerifyReport run_verification(const Analysis& A) {
  VerifyReport rep;
  const auto ok = []() { return std::pair<bool, std::string>{true, ""}; };
  const auto fail = [](const std::string& d) {
    return std::pair<bool, std::string>{false, d};
  };

  add_check(rep, "weyl order matches the per-copy product", [&] {
    const auto expected = theoretical_weyl_order(A.q.rd.factors);
    if (static_cast<unsigned long long>(A.W.size()) != expected)
      return fail("enumerated " + std::to_string(A.W.size()));
    return ok();
  });

  add_check(rep, "sigma normalizes W and has finite order", [&] {
    for (int w = 0; w < A.W.size(); ++w) sigma_conjugate(A.W, A.q.sigma, w);
    IntMatrix pow = IntMatrix::identity(A.q.rd.rank);
    for (int i = 0; i < A.q.sigma.order; ++i) pow = pow * A.q.sigma.m;
    if (!pow.is_identity()) return fail("sigma^order is not the identity");
    return ok();
  });

  add_check(rep, "parabolic subgroup: stabilizer equals the Levi-generated group", [&] {
    const auto generated = levi_generated_subgroup(A.q.rd, A.W, A.ep);
    if (generated != A.W_P) return fail("subgroups differ");
    return ok();
  });

  std::vector<ClassRecord> classes;
  add_check(rep, "classes partition W into [W:W_P] classes of size |W_P|", [&] {
    classes = enumerate_classes(A);
    size_t covered = 0;
    for (const ClassRecord& c : classes) covered += c.members.size();
    if (covered != static_cast<size_t>(A.W.size())) return fail("union misses elements");
    if (static_cast<int>(classes.size()) != A.parabolic_index())
      return fail("class count " + std::to_string(classes.size()));
    for (const ClassRecord& c : classes)
      if (c.members.size() != A.W_P.size()) return fail("class of wrong size");
    return ok();
  });
  if (classes.empty()) {
    rep.all_pass = false;
    return rep;
  }

  add_check(rep, "S and the slope multiset are constant on every class", [&] {
    for (const ClassRecord& c : classes)
      for (int x : c.members) {
        if (s_value(A, x) != c.s_val) return fail("S varies inside a class");
        if (adjoint_slopes(A, x) != c.ad_slopes) return fail("slopes vary inside a class");
      }
    return ok();
  });

  add_check(rep, "slope sum vanishes for every element", [&] {
    for (int w = 0; w < A.W.size(); ++w) {
      long long balance = 0;
      for (const PiOrbit& o : pi_orbits(A, w).orbits) balance += o.m_plus - o.m_minus;
      if (balance != 0) return fail("element " + std::to_string(w));
    }
    return ok();
  });

  add_check(rep, "exactly one pivotal class, with orbit dimension dim P", [&] {
    int count = 0;
    for (const ClassRecord& c : classes)
      if (c.pivotal) {
        ++count;
        if (c.dim_orbit != A.ep.dim_P)
          return fail("pivotal orbit dimension " + std::to_string(c.dim_orbit));
      }
    if (count != 1) return fail("pivotal count " + std::to_string(count));
    return ok();
  });

  add_check(rep, "pivotal class has all adjoint slopes zero", [&] {
    for (const ClassRecord& c : classes)
      if (c.pivotal)
        for (const SlopeEntry& s : c.ad_slopes)
          if (s.slope != Rat(0)) return fail("slope " + slope_multiset_string({s}));
    return ok();
  });

  add_check(rep, "exactly one open class (S = 0)", [&] {
    int count = 0;
    for (const ClassRecord& c : classes)
      if (c.open_stratum) ++count;
    if (count != 1) return fail("open count " + std::to_string(count));
    return ok();
  });

  add_check(rep, "zero-space dimensions are consistent for every element", [&] {
    for (int w = 0; w < A.W.size(); ++w) {
      const ZeroSpaceDims z = zero_space_dims(A, w);
      if (z.dim_y != s_value(A, w)) return fail("dim_y != S");
      if (z.dim_y0 > z.dim_y || z.dim_y > A.ep.dim_N) return fail("y-dims out of range");
      if (z.dim_w_span < z.dim_x_fp) return fail("w_span < x_fp");
    }
    return ok();
  });

  add_check(rep, "coset invariants: constancy, length formula, extremes", [&] {
    coset_invariants(A);
    return ok();
  });

  add_check(rep, "multiset identity {S} = {s_cl - d_u}", [&] {
    if (!multisets_match(A, classes, coset_invariants(A))) return fail("multisets differ");
    return ok();
  });

  return rep;
}

std::string render_verification(const VerifyReport& report) {
  std::ostringstream os;
  int passed = 0;
  for (const VerifyCheck& c : report.checks) {
    if (c.pass) {
      os << "ok " << c.name << '\n';
      ++passed;
    } else {
      os << "FAIL " << c.name;
      if (!c.detail.empty()) os << ": " << c.detail;
      os << '\n';
    }
  }
  os << "verification: " << (report.all_pass ? "PASS" : "FAIL") << " (" << passed << '/'
     << report.checks.size() << ")\n";
  return os.str();
}

}  // namespace fcrystal
