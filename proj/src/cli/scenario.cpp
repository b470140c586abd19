#include "frobsys/cli/scenario.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "frobsys/cli/properties.hpp"
#include "frobsys/errors.hpp"
#include "frobsys/fsing.hpp"
#include "frobsys/proj.hpp"

#ifndef FROBSYS_SCENARIO_DIR
#define FROBSYS_SCENARIO_DIR "scenarios"
#endif

namespace frobsys::cli {

namespace {

/// Maps byte offsets of the scenario text to 1-based line/column pairs.
class Locator {
 public:
  explicit Locator(const std::string& text) : text_(text) {}

  std::pair<std::size_t, std::size_t> at(std::size_t offset) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < offset && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    return {line, col};
  }

  /// Position of the first occurrence of a quoted string literal.
  std::optional<std::size_t> find_literal(const std::string& s) const {
    std::size_t pos = text_.find('"' + s + '"');
    if (pos == std::string::npos) return std::nullopt;
    return pos + 1;
  }

  [[noreturn]] void fail_at_literal(const std::string& literal, const std::string& what) const {
    if (auto pos = find_literal(literal)) {
      auto [line, col] = at(*pos);
      throw ParseError(what, line, col);
    }
    throw ParseError(what, 1, 1);
  }

 private:
  const std::string& text_;
};

struct Context {
  RingPtr ring;
  std::uint64_t seed = 0;
  const Locator* locator = nullptr;
};

struct JobOutput {
  Json result = Json::object();
  std::optional<Ideal> ideal;  // compared against expect.ideal
  std::optional<int> iterations;
  bool theorem = false;        // verdict defaults to result.holds
};

// ---------------------------------------------------------------------------
// Field access

const Json& need(const Json& job, const char* key) {
  if (!job.contains(key)) throw ParseError(std::string("missing field '") + key + "'", 0, 0);
  return job.at(key);
}

[[noreturn]] void bad_field(const char* key, const char* expected) {
  throw ParseError(std::string("field '") + key + "' must be " + expected, 0, 0);
}

std::int64_t int_field(const Json& job, const char* key) {
  const Json& v = need(job, key);
  if (!v.is_number_integer()) bad_field(key, "an integer");
  return v.get<std::int64_t>();
}

std::int64_t int_field(const Json& job, const char* key, std::int64_t fallback) {
  return job.contains(key) ? int_field(job, key) : fallback;
}

std::uint64_t count_field(const Json& job, const char* key) {
  std::int64_t v = int_field(job, key);
  if (v < 0) bad_field(key, "a nonnegative integer");
  return static_cast<std::uint64_t>(v);
}

std::uint64_t count_field(const Json& job, const char* key, std::uint64_t fallback) {
  return job.contains(key) ? count_field(job, key) : fallback;
}

bool bool_field(const Json& job, const char* key, bool fallback) {
  if (!job.contains(key)) return fallback;
  if (!job.at(key).is_boolean()) bad_field(key, "true or false");
  return job.at(key).get<bool>();
}

Poly poly_value(const Context& ctx, const Json& v, const std::string& where) {
  if (!v.is_string()) throw ParseError(where + " must be a polynomial string", 0, 0);
  const std::string s = v.get<std::string>();
  try {
    return parse_poly(ctx.ring, s);
  } catch (const ParseError& e) {
    // Report the position inside the scenario file when the literal can be found.
    if (auto pos = ctx.locator->find_literal(s)) {
      auto [line, col] = ctx.locator->at(*pos + e.column() - 1);
      throw ParseError(where + ": " + e.detail(), line, col);
    }
    throw ParseError(where + ": " + e.detail(), e.column());
  }
}

Poly poly_field(const Context& ctx, const Json& job, const char* key) {
  return poly_value(ctx, need(job, key), std::string("field '") + key + "'");
}

std::vector<Poly> poly_list(const Context& ctx, const Json& job, const char* key) {
  const Json& v = need(job, key);
  if (!v.is_array()) bad_field(key, "a list of polynomial strings");
  std::vector<Poly> out;
  for (const Json& s : v) out.push_back(poly_value(ctx, s, std::string("field '") + key + "'"));
  return out;
}

Ideal ideal_field(const Context& ctx, const Json& job, const char* key) {
  return Ideal(ctx.ring, poly_list(ctx, job, key));
}

std::vector<Coeff> point_value(const Context& ctx, const Json& v, const char* key) {
  if (!v.is_array()) bad_field(key, "a list of coordinates");
  std::vector<Coeff> out;
  const std::int64_t p = ctx.ring->characteristic();
  for (const Json& c : v) {
    if (!c.is_number_integer())
      throw UnsupportedError(std::string("field '") + key +
                             "': only F_p-rational points with integer coordinates are supported");
    std::int64_t x = c.get<std::int64_t>() % p;
    out.push_back(static_cast<Coeff>(x < 0 ? x + p : x));
  }
  if (out.size() != ctx.ring->nvars())
    throw DomainError(std::string("field '") + key + "': point has " + std::to_string(out.size()) +
                      " coordinates, ring has " + std::to_string(ctx.ring->nvars()) + " variables");
  return out;
}

std::vector<Coeff> point_field(const Context& ctx, const Json& job, const char* key) {
  return point_value(ctx, need(job, key), key);
}

/// {"f": "x", "a": 5, "e": 1} or {"components": [{"f": ..., "a": ...}], "e": 1},
/// optionally with "ambient": [...]. A missing pair means the zero divisor.
PairDivisor pair_field(const Context& ctx, const Json& job) {
  if (!job.contains("pair")) return PairDivisor(Poly::constant(ctx.ring, 1), 0, 1);
  const Json& pj = job.at("pair");
  if (!pj.is_object()) bad_field("pair", "an object");
  const int e = static_cast<int>(int_field(pj, "e", 1));
  std::vector<PairComponent> comps;
  if (pj.contains("components")) {
    if (!pj.at("components").is_array()) bad_field("components", "a list");
    for (const Json& c : pj.at("components")) comps.push_back({poly_field(ctx, c, "f"), count_field(c, "a")});
  } else {
    comps.push_back({poly_field(ctx, pj, "f"), count_field(pj, "a")});
  }
  std::vector<Poly> ambient;
  if (pj.contains("ambient")) ambient = poly_list(ctx, pj, "ambient");
  return PairDivisor(std::move(comps), e, std::move(ambient));
}

ProjScheme scheme_field(const Context& ctx, const Json& job) {
  if (!job.contains("scheme")) return ProjScheme::projective_space(ctx.ring);
  const Json& sj = job.at("scheme");
  if (!sj.is_object()) bad_field("scheme", "an object");
  if (sj.contains("n")) {
    std::int64_t n = int_field(sj, "n");
    if (n + 1 != static_cast<std::int64_t>(ctx.ring->nvars()))
      throw DomainError("scheme: n=" + std::to_string(n) + " needs " + std::to_string(n + 1) +
                        " variables, header declares " + std::to_string(ctx.ring->nvars()));
  }
  if (!sj.contains("hypersurfaces")) return ProjScheme::projective_space(ctx.ring);
  return ProjScheme::complete_intersection(ctx.ring, poly_list(ctx, sj, "hypersurfaces"));
}

S0Kind which_field(const Json& job) {
  if (!job.contains("which")) return S0Kind::kSigma;
  const Json& w = job.at("which");
  if (w == "sigma") return S0Kind::kSigma;
  if (w == "tau") return S0Kind::kTau;
  bad_field("which", "\"sigma\" or \"tau\"");
}

std::uint32_t degree_field(const Json& job) {
  std::int64_t m = int_field(job, "degree");
  if (m < 0) throw DomainError("degree must be nonnegative, got " + std::to_string(m));
  return static_cast<std::uint32_t>(m);
}

// ---------------------------------------------------------------------------
// Result encoding

Json ideal_json(const Ideal& i) {
  Json out = Json::array();
  for (const Poly& g : i.groebner()) out.push_back(g.to_string());
  return out;
}

Json subspace_json(const GradedSubspace& v) {
  Json out;
  out["degree"] = v.degree();
  out["dim"] = v.dim();
  out["ambient_dim"] = v.ambient_dim();
  out["full"] = v.is_full();
  Json basis = Json::array();
  for (const Poly& b : v.basis()) basis.push_back(b.to_string());
  out["basis"] = basis;
  return out;
}

void put_s0(Json& out, const S0Result& r) {
  const Json space = subspace_json(r.space);
  for (auto& [k, v] : space.items()) out[k] = v;
  out["levels"] = r.levels;
  out["dims"] = r.dims;
}

/// The subspace named by a job: explicit "forms", or S⁰ of the job's pair.
GradedSubspace subspace_of(const Context& ctx, const Json& job, const ProjScheme& x, JobOutput& out) {
  const std::uint32_t m = degree_field(job);
  if (job.contains("forms")) {
    std::vector<Poly> forms = poly_list(ctx, job, "forms");
    for (const Poly& f : forms)
      if (!f.is_zero() && (!f.is_homogeneous() || f.degree() != static_cast<int>(m)))
        throw DomainError("form " + f.to_string() + " is not homogeneous of degree " + std::to_string(m));
    return GradedSubspace::span(x.chart(m), forms);
  }
  S0Result r = s0_compute(x, pair_field(ctx, job), m, which_field(job));
  out.iterations = r.levels;
  return r.space;
}

// ---------------------------------------------------------------------------
// Operations

using OpFn = std::function<JobOutput(const Context&, const Json&)>;

JobOutput op_chain(const Context& ctx, const Json& job, bool is_tau) {
  PairDivisor pair = pair_field(ctx, job);
  std::optional<Poly> c;
  if (is_tau && job.contains("c")) c = poly_field(ctx, job, "c");
  ChainResult r = is_tau ? tau_chain(pair, c) : sigma_chain(pair);
  JobOutput out;
  out.result["pair"] = pair.describe();
  out.result["ideal"] = ideal_json(r.ideal);
  out.result["steps"] = r.steps;
  out.iterations = r.steps;
  out.ideal = r.ideal;
  return out;
}

JobOutput op_fpure(const Context& ctx, const Json& job) {
  PairDivisor pair = pair_field(ctx, job);
  JobOutput out;
  out.result["value"] = job.contains("point") ? is_sharply_F_pure_at(pair, point_field(ctx, job, "point"))
                                             : is_sharply_F_pure(pair);
  return out;
}

JobOutput op_sfr(const Context& ctx, const Json& job) {
  PairDivisor pair = pair_field(ctx, job);
  JobOutput out;
  if (job.contains("point")) {
    out.result["value"] = is_strongly_F_regular_at(pair, point_field(ctx, job, "point"));
  } else {
    std::optional<Poly> c;
    if (job.contains("c")) c = poly_field(ctx, job, "c");
    out.result["value"] = is_strongly_F_regular(pair, c);
  }
  return out;
}

JobOutput op_compatible(const Context& ctx, const Json& job) {
  JobOutput out;
  out.result["value"] = is_compatible(ideal_field(ctx, job, "Z"), pair_field(ctx, job));
  return out;
}

JobOutput op_mult(const Context& ctx, const Json& job) {
  std::vector<Coeff> point = point_field(ctx, job, "point");
  JobOutput out;
  if (!job.contains("l")) {
    out.result["value"] = multiplicity(poly_field(ctx, job, "f"), point);
    return out;
  }
  MultContainment r = mult_containment_check(pair_field(ctx, job), point, count_field(job, "l"));
  out.theorem = true;
  out.result["mult"] = std::to_string(r.mult_num) + "/" + std::to_string(r.mult_den);
  out.result["applicable"] = r.applicable;
  out.result["contained"] = r.contained;
  out.result["tau"] = ideal_json(r.tau_ideal);
  out.result["holds"] = r.verdict();
  out.ideal = r.tau_ideal;
  return out;
}

JobOutput op_groebner(const Context& ctx, const Json& job) {
  Ideal i = ideal_field(ctx, job, "ideal");
  JobOutput out;
  out.result["ideal"] = ideal_json(i);
  out.result["size"] = i.groebner().size();
  out.ideal = i;
  return out;
}

JobOutput op_fedder(const Context& ctx, const Json& job) {
  Ideal i = ideal_field(ctx, job, "ideal");
  std::vector<Coeff> point = job.contains("point") ? point_field(ctx, job, "point")
                                                   : std::vector<Coeff>(ctx.ring->nvars(), 0);
  JobOutput out;
  const bool fedder = fedder_oracle(i, point_ideal(ctx.ring, point));
  out.result["value"] = fedder;
  if (bool_field(job, "cross_check", false)) {
    if (i.generators().size() != 1)
      throw PreconditionError("fedder cross check needs a principal ideal");
    const bool local = is_sharply_F_pure_at(PairDivisor(i.generators().front(), ctx.ring->characteristic() - 1, 1), point);
    out.theorem = true;
    out.result["local"] = local;
    out.result["holds"] = local == fedder;
  }
  return out;
}

JobOutput op_twist(const Context& ctx, const Json& job) {
  TwistReport r = twist_check(pair_field(ctx, job), poly_field(ctx, job, "g"));
  JobOutput out;
  out.theorem = true;
  out.result["augmented"] = ideal_json(r.augmented);
  out.result["twisted"] = ideal_json(r.twisted);
  out.result["holds"] = r.holds;
  out.ideal = r.augmented;
  return out;
}

JobOutput op_s0(const Context& ctx, const Json& job) {
  ProjScheme x = scheme_field(ctx, job);
  PairDivisor pair = pair_field(ctx, job);
  const std::uint32_t m = degree_field(job);
  const S0Kind which = which_field(job);
  const std::string route = job.value("route", std::string("ideal"));
  JobOutput out;
  out.result["source_degree"] = s0_source_degree(x, pair, m, 1);
  if (route == "ideal" || route == "direct") {
    S0Result r = route == "ideal" ? s0_compute(x, pair, m, which)
                                  : s0_direct(x, pair, m, which, bool_field(job, "parallel", true));
    put_s0(out.result, r);
    out.iterations = r.levels;
  } else if (route == "both") {
    S0Result a = s0_compute(x, pair, m, which);
    S0Result b = s0_direct(x, pair, m, which, bool_field(job, "parallel", true));
    put_s0(out.result, a);
    out.result["routes_agree"] = a.space == b.space;
    out.iterations = a.levels;
  } else {
    bad_field("route", "\"ideal\", \"direct\" or \"both\"");
  }
  return out;
}

JobOutput op_bpf(const Context& ctx, const Json& job) {
  ProjScheme x = scheme_field(ctx, job);
  JobOutput out;
  GradedSubspace v = subspace_of(ctx, job, x, out);
  out.theorem = true;
  out.result["space"] = subspace_json(v);
  out.result["holds"] = is_base_point_free(v);
  return out;
}

JobOutput op_separates(const Context& ctx, const Json& job) {
  ProjScheme x = scheme_field(ctx, job);
  JobOutput out;
  GradedSubspace v = subspace_of(ctx, job, x, out);
  SeparationReport r = separates(x, v, static_cast<int>(int_field(job, "k", 2)));
  out.theorem = true;
  out.result["space"] = subspace_json(v);
  out.result["extension_degree"] = r.extension_degree;
  out.result["points"] = r.points;
  out.result["pairs_checked"] = r.pairs_checked;
  out.result["tangents_checked"] = r.tangents_checked;
  out.result["failures"] = r.failures;
  out.result["coverage"] = r.coverage;
  out.result["holds"] = r.ok();
  return out;
}

JobOutput op_gg(const Context& ctx, const Json& job) {
  JobOutput out;
  out.theorem = true;
  out.result["holds"] = global_generation_check(ideal_field(ctx, job, "ideal"), degree_field(job));
  return out;
}

JobOutput op_s0gg(const Context& ctx, const Json& job) {
  ProjScheme x = scheme_field(ctx, job);
  GlobalGenerationReport r =
      s0_global_generation_check(x, pair_field(ctx, job), degree_field(job), which_field(job));
  JobOutput out;
  out.theorem = true;
  out.result["s0"] = subspace_json(r.s0.space);
  out.result["target"] = ideal_json(r.target);
  out.result["holds"] = r.holds;
  out.iterations = r.s0.levels;
  return out;
}

JobOutput op_thm46(const Context& ctx, const Json& job) {
  const Json& pj = need(job, "points");
  if (!pj.is_array()) bad_field("points", "a list of points");
  std::vector<std::vector<Coeff>> points;
  for (const Json& p : pj) points.push_back(point_value(ctx, p, "points"));
  const std::uint32_t d = static_cast<std::uint32_t>(count_field(job, "d"));
  const std::uint32_t l = static_cast<std::uint32_t>(count_field(job, "l"));
  const std::uint32_t e = static_cast<std::uint32_t>(count_field(job, "e"));
  DegreeBoundResult r = degree_bound_pipeline(ctx.ring, points, poly_field(ctx, job, "A"), d, l, e);
  bool vanishes = !r.form.is_zero();
  for (const auto& p : points) vanishes = vanishes && r.form.evaluate(p) == 0;
  JobOutput out;
  out.theorem = true;
  out.result["delta"] = r.delta;
  out.result["form"] = r.form.to_string();
  out.result["a"] = r.a;
  out.result["level"] = r.level;
  out.result["exact_coefficient"] = r.exact_coefficient;
  out.result["tau"] = ideal_json(r.tau_ideal);
  out.result["sections"] = r.sections;
  out.result["holds"] = l > 0 && r.delta == d * e / l && vanishes;
  out.ideal = r.tau_ideal;
  return out;
}

JobOutput op_restrict(const Context& ctx, const Json& job) {
  ProjScheme x = scheme_field(ctx, job);
  RestrictionReport r = restriction_surjectivity(x, pair_field(ctx, job), ideal_field(ctx, job, "Z"),
                                                 static_cast<int>(int_field(job, "degree")));
  JobOutput out;
  out.theorem = true;
  out.result["s0_x"] = subspace_json(r.s0_x);
  out.result["s0_z"] = subspace_json(r.s0_z);
  out.result["restricted"] = subspace_json(r.restricted);
  out.result["holds"] = r.surjective;
  return out;
}

JobOutput op_property(const Context& ctx, const Json& job) {
  const Json& name = need(job, "property");
  if (!name.is_string()) bad_field("property", "a property name");
  const std::uint64_t seed = job.contains("seed") ? count_field(job, "seed") : ctx.seed;
  PropertyOutcome r = run_property(name.get<std::string>(), count_field(job, "cases", 100), seed);
  JobOutput out;
  out.theorem = true;
  out.result["property"] = r.name;
  out.result["seed"] = seed;
  out.result["cases"] = r.cases;
  out.result["failures"] = r.failures;
  out.result["witnesses"] = r.witnesses;
  out.result["holds"] = r.failures == 0;
  out.iterations = static_cast<int>(r.cases);
  return out;
}

const std::map<std::string, OpFn>& registry() {
  static const std::map<std::string, OpFn> ops = {
      {"sigma", [](const Context& c, const Json& j) { return op_chain(c, j, false); }},
      {"tau", [](const Context& c, const Json& j) { return op_chain(c, j, true); }},
      {"fpure", op_fpure},
      {"sfr", op_sfr},
      {"compatible", op_compatible},
      {"mult", op_mult},
      {"groebner", op_groebner},
      {"fedder", op_fedder},
      {"twist", op_twist},
      {"s0", op_s0},
      {"bpf", op_bpf},
      {"separates", op_separates},
      {"gg", op_gg},
      {"s0gg", op_s0gg},
      {"thm46", op_thm46},
      {"restrict", op_restrict},
      {"property", op_property},
  };
  return ops;
}

// ---------------------------------------------------------------------------
// Verdicts

struct JobRecord {
  Json json;
  std::string text;
  bool success = false;
  bool has_verdict = false;
  bool pass = false;
};

bool expect_matches(const Context& ctx, const Json& expect, const JobOutput& out, Json& mismatches) {
  bool ok = true;
  for (auto& [key, want] : expect.items()) {
    if (key == "error") continue;
    if (key == "ideal") {
      if (!want.is_array()) bad_field("expect.ideal", "a list of polynomial strings");
      std::vector<Poly> gens;
      for (const Json& s : want) gens.push_back(poly_value(ctx, s, "field 'expect.ideal'"));
      if (!out.ideal || !(*out.ideal == Ideal(ctx.ring, std::move(gens)))) {
        ok = false;
        mismatches.push_back(key);
      }
      continue;
    }
    if (!out.result.contains(key) || out.result.at(key) != want) {
      ok = false;
      mismatches.push_back(key);
    }
  }
  return ok;
}

std::string format_ms(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f ms", ms);
  return buf;
}

/// One-line digest of a result for the text report.
std::string digest(const Json& result) {
  std::ostringstream os;
  bool first = true;
  for (const char* key : {"ideal", "value", "dim", "delta", "form", "holds", "failures", "steps", "levels"}) {
    if (!result.contains(key)) continue;
    const Json& v = result.at(key);
    os << (first ? "" : "  ") << key << "=";
    if (key == std::string("ideal") && v.is_array()) {
      os << "(";
      for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i].get<std::string>();
      if (v.empty()) os << "0";
      os << ")";
    } else if (v.is_string()) {
      os << v.get<std::string>();
    } else if (v.is_array()) {
      os << v.size();
    } else {
      os << v.dump();
    }
    first = false;
  }
  return os.str();
}

JobRecord run_job(const Context& ctx, const Json& job, std::size_t index) {
  JobRecord rec;
  Json& j = rec.json;
  const std::string op = job.at("op").get<std::string>();
  j["index"] = index;
  if (job.contains("name")) j["name"] = job.at("name");
  j["op"] = op;
  Json inputs = job;
  inputs.erase("op");
  inputs.erase("name");
  inputs.erase("expect");
  j["inputs"] = inputs;

  const Json expect = job.contains("expect") ? job.at("expect") : Json();
  const std::string expected_error =
      expect.is_object() && expect.contains("error") ? expect.at("error").get<std::string>() : "";

  auto t0 = std::chrono::steady_clock::now();
  std::ostringstream line;
  line << "[" << index << "] " << op;
  if (job.contains("name")) line << " " << job.at("name").get<std::string>();
  line << ": ";
  try {
    if (!expect.is_null() && !expect.is_object()) bad_field("expect", "an object");
    JobOutput out = registry().at(op)(ctx, job);
    j["status"] = "ok";
    j["result"] = out.result;
    if (out.iterations) j["iterations"] = *out.iterations;
    rec.success = expected_error.empty();
    Json mismatches = Json::array();
    if (expect.is_object()) {
      rec.has_verdict = true;
      rec.pass = expected_error.empty() && expect_matches(ctx, expect, out, mismatches);
      if (!expected_error.empty()) mismatches.push_back("error");
    } else if (out.theorem) {
      rec.has_verdict = true;
      rec.pass = out.result.value("holds", false);
      if (!rec.pass) mismatches.push_back("holds");
    }
    if (!mismatches.empty()) j["mismatches"] = mismatches;
    line << digest(out.result);
  } catch (const Error& e) {
    j["status"] = "error";
    j["error"] = {{"kind", e.kind()}, {"message", e.what()}};
    rec.success = !expected_error.empty() && expected_error == e.kind();
    if (!expected_error.empty()) {
      rec.has_verdict = true;
      rec.pass = rec.success;
    }
    line << e.kind() << " error: " << e.what();
  } catch (const std::exception& e) {
    j["status"] = "error";
    j["error"] = {{"kind", "internal"}, {"message", e.what()}};
    line << "internal error: " << e.what();
  }
  j["verdict"] = rec.has_verdict ? (rec.pass ? "PASS" : "FAIL") : "none";
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  line << "  [" << (rec.has_verdict ? (rec.pass ? "PASS" : "FAIL") : (rec.success ? "ok" : "ERROR")) << ", "
       << format_ms(ms) << "]";
  rec.text = line.str();
  return rec;
}

Json parse_document(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, col] = Locator(text).at(e.byte == 0 ? 0 : e.byte - 1);
    std::string msg = e.what();
    // Drop nlohmann's own "[json.exception.parse_error.101] parse error at line x, column y: " prefix.
    if (auto pos = msg.find(": "); pos != std::string::npos) msg = msg.substr(pos + 2);
    throw ParseError("invalid JSON: " + msg, line, col);
  }
}

MonomialOrder order_of(const Json& doc, const Locator& loc) {
  const std::string order = doc.value("order", std::string("grevlex"));
  if (order == "grevlex") return MonomialOrder::kGrevlex;
  if (order == "lex") return MonomialOrder::kLex;
  loc.fail_at_literal(order, "unknown monomial order '" + order + "' (expected grevlex or lex)");
}

Caps caps_of(const Json& doc, Caps caps) {
  if (!doc.contains("caps")) return caps;
  const Json& c = doc.at("caps");
  if (!c.is_object()) bad_field("caps", "an object");
  std::ostringstream joined;
  bool first = true;
  for (auto& [k, v] : c.items()) {
    if (!v.is_number_integer()) bad_field("caps", "an object of integers");
    joined << (first ? "" : ",") << k << "=" << v.get<std::int64_t>();
    first = false;
  }
  return parse_caps(joined.str(), caps);
}

Json caps_json(const Caps& c) {
  return Json{{"degree", c.max_degree}, {"generators", c.max_generators}, {"steps", c.max_steps},
              {"q", c.max_q}, {"levels", c.max_s0_levels}};
}

}  // namespace

Caps parse_caps(const std::string& text, Caps base) {
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("caps entry '" + item + "' is not key=value", 0, 0);
    const std::string key = item.substr(0, eq);
    long long value = 0;
    try {
      std::size_t used = 0;
      value = std::stoll(item.substr(eq + 1), &used);
      if (used != item.size() - eq - 1) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw ParseError("caps entry '" + item + "' has a non-integer value", 0, 0);
    }
    if (value <= 0) throw DomainError("cap '" + key + "' must be positive");
    if (key == "degree") base.max_degree = static_cast<std::uint32_t>(value);
    else if (key == "generators") base.max_generators = static_cast<std::size_t>(value);
    else if (key == "steps") base.max_steps = static_cast<int>(value);
    else if (key == "q") base.max_q = static_cast<std::uint64_t>(value);
    else if (key == "levels") base.max_s0_levels = static_cast<int>(value);
    else throw DomainError("unknown cap '" + key + "' (expected degree, generators, steps, q, levels)");
  }
  return base;
}

ScenarioReport run_scenario_text(const std::string& text, const std::string& name, const RunOptions& options) {
  const Locator loc(text);
  const Json doc = parse_document(text);
  if (!doc.is_object()) throw ParseError("scenario must be a JSON object", 1, 1);

  if (!doc.contains("p") || !doc.at("p").is_number_unsigned())
    throw ParseError("header field 'p' must be a prime", 1, 1);
  if (!doc.contains("vars") || !doc.at("vars").is_array() || doc.at("vars").empty())
    throw ParseError("header field 'vars' must be a nonempty list of names", 1, 1);
  std::vector<std::string> vars;
  for (const Json& v : doc.at("vars")) {
    if (!v.is_string()) throw ParseError("header field 'vars' must contain strings", 1, 1);
    vars.push_back(v.get<std::string>());
  }
  Caps caps = caps_of(doc, Caps{});
  if (options.caps) caps = parse_caps(*options.caps, caps);

  Context ctx;
  ctx.locator = &loc;
  ctx.ring = Ring::make(doc.at("p").get<std::uint32_t>(), vars, order_of(doc, loc), 0, caps);
  ctx.seed = options.seed ? *options.seed : doc.value("seed", std::uint64_t{0});

  const Json jobs = doc.contains("jobs") ? doc.at("jobs") : Json::array();
  if (!jobs.is_array()) throw ParseError("header field 'jobs' must be a list", 1, 1);
  for (const Json& job : jobs) {
    if (!job.is_object() || !job.contains("op") || !job.at("op").is_string())
      throw ParseError("every job needs an \"op\" string", 1, 1);
    const std::string op = job.at("op").get<std::string>();
    if (!registry().count(op)) loc.fail_at_literal(op, "unknown op '" + op + "'");
  }

  std::vector<JobRecord> records(jobs.size());
  const bool parallel = doc.value("parallel", false);
  const long n = static_cast<long>(jobs.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (long i = 0; i < n; ++i) records[i] = run_job(ctx, jobs[i], static_cast<std::size_t>(i));

  ScenarioReport report;
  Json& j = report.json;
  j["scenario"] = name;
  if (doc.contains("title")) j["title"] = doc.at("title");
  if (doc.contains("criterion")) j["criterion"] = doc.at("criterion");
  j["ring"] = ctx.ring->describe();
  j["seed"] = ctx.seed;
  j["caps"] = caps_json(caps);
  j["jobs"] = Json::array();

  std::ostringstream text_out;
  text_out << "scenario " << name << "  " << ctx.ring->describe() << "  seed=" << ctx.seed << "\n";
  std::size_t ok = 0, errors = 0, pass = 0, fail = 0;
  for (JobRecord& r : records) {
    j["jobs"].push_back(std::move(r.json));
    text_out << "  " << r.text << "\n";
    if (r.success) ++ok; else ++errors;
    if (r.has_verdict) (r.pass ? pass : fail) += 1;
  }
  j["summary"] = {{"jobs", records.size()}, {"ok", ok}, {"errors", errors}, {"pass", pass}, {"fail", fail}};
  report.success = errors == 0 && fail == 0;
  text_out << "  " << records.size() << " jobs, " << ok << " ok, " << errors << " errors, " << pass
           << " PASS, " << fail << " FAIL -> " << (report.success ? "success" : "failure") << "\n";
  report.text = text_out.str();
  return report;
}

ScenarioReport run_scenario_file(const std::filesystem::path& path, const RunOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open scenario file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return run_scenario_text(buf.str(), path.filename().string(), options);
}

std::filesystem::path default_scenario_dir() { return FROBSYS_SCENARIO_DIR; }

SuiteReport run_suite(const std::string& name, const std::filesystem::path& dir, const RunOptions& options) {
  namespace fs = std::filesystem;
  const fs::path root = dir / name;
  if (name.empty() || name.find('/') != std::string::npos || !fs::is_directory(root)) {
    std::vector<std::string> names;
    if (fs::is_directory(dir))
      for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_directory()) names.push_back(entry.path().filename().string());
    std::sort(names.begin(), names.end());
    std::string known;
    for (const std::string& n : names) known += (known.empty() ? "" : ", ") + n;
    throw DomainError("unknown suite '" + name + "'" + (known.empty() ? "" : " (available: " + known + ")"));
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(root))
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end());

  SuiteReport suite;
  suite.json["suite"] = name;
  suite.json["scenarios"] = Json::array();
  std::ostringstream table;
  table << "suite " << name << "\n";
  char row[256];
  std::snprintf(row, sizeof row, "%-10s %-36s %5s %7s  %s\n", "criterion", "scenario", "jobs", "time", "verdict");
  table << row;
  bool all = true;
  for (const fs::path& f : files) {
    auto t0 = std::chrono::steady_clock::now();
    Json entry;
    entry["scenario"] = f.filename().string();
    std::string criterion = "-";
    std::size_t njobs = 0;
    bool ok = false;
    std::string detail;
    try {
      ScenarioReport r = run_scenario_file(f, options);
      if (r.json.contains("criterion")) {
        const Json& c = r.json.at("criterion");
        criterion = c.is_string() ? c.get<std::string>() : c.dump();
      }
      njobs = r.json["summary"]["jobs"].get<std::size_t>();
      ok = r.success;
      entry["summary"] = r.json["summary"];
      if (!ok) detail = r.text;
    } catch (const Error& e) {
      entry["error"] = {{"kind", e.kind()}, {"message", e.what()}};
      detail = std::string("  ") + e.kind() + " error: " + e.what() + "\n";
    }
    entry["criterion"] = criterion;
    entry["verdict"] = ok ? "PASS" : "FAIL";
    suite.json["scenarios"].push_back(entry);
    all = all && ok;
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::snprintf(row, sizeof row, "%-10s %-36s %5zu %6.2fs  %s\n", criterion.c_str(),
                  f.filename().string().c_str(), njobs, s, ok ? "PASS" : "FAIL");
    table << row << detail;
  }
  suite.success = all && !files.empty();
  suite.json["verdict"] = suite.success ? "PASS" : "FAIL";
  table << (suite.success ? "all PASS" : "FAILURES present") << " (" << files.size() << " scenarios)\n";
  suite.text = table.str();
  return suite;
}

}  // namespace frobsys::cli
