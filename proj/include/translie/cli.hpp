#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "translie/derivation_solver.hpp"
#include "translie/identity_lab.hpp"
#include "translie/json_io.hpp"
#include "translie/tp_structures.hpp"

namespace translie::cli {

using json_io::Json;

inline constexpr const char* kVersion = "1.0.0";

enum class Command { CheckLaws, SolveDerivations, TpTriviality, BuildTp, VerifyTp, Generators };

inline std::string to_string(Command c) {
  switch (c) {
    case Command::CheckLaws: return "check-laws";
    case Command::SolveDerivations: return "solve-derivations";
    case Command::TpTriviality: return "tp-triviality";
    case Command::BuildTp: return "build-tp";
    case Command::VerifyTp: return "verify-tp";
    case Command::Generators: return "generators";
  }
  return "?";
}

inline std::optional<Command> parse_command(std::string_view s) {
  for (auto c : {Command::CheckLaws, Command::SolveDerivations, Command::TpTriviality, Command::BuildTp,
                 Command::VerifyTp, Command::Generators})
    if (to_string(c) == s) return c;
  return std::nullopt;
}

struct AlgebraSpec {
  BracketKind kind = BracketKind::AOmegaDelta;
  std::int64_t k = 0;
  FiniteFunctional f;

  BracketDef make() const {
    switch (kind) {
      case BracketKind::AOmegaDeltaOmegaForm: return BracketDef::omega_form();
      case BracketKind::AOmegaDelta: return BracketDef::a_omega_delta();
      case BracketKind::AFK: return BracketDef::afk(k, f);
    }
    return BracketDef::a_omega_delta();
  }
};

/// Either explicit (alpha, c, d) or the rank-one example family.
struct TPSpec {
  bool example_family = false;
  Scalar alpha;
  std::map<std::int64_t, Scalar> c;
  std::map<IndexTriple, Scalar> d;
  std::map<std::int64_t, Scalar> d_seq;

  TPParams make(const FiniteFunctional& f, std::int64_t k) const {
    if (example_family) return build_example_family(f, d_seq, c, k);
    TPParams p;
    p.alpha = alpha;
    p.f = f;
    p.k = k;
    for (const auto& [q, v] : c) p.set_c(q, v);
    for (const auto& [key, v] : d) p.set_d(key[0], key[1], key[2], v);
    return p;
  }
};

struct RunConfig {
  Command command = Command::CheckLaws;
  std::optional<AlgebraSpec> algebra;
  std::optional<Window> domain, equation, core, image, index, basis, sample;
  std::optional<TPSpec> tp_params;
  CheckMode mode = CheckMode::Exhaustive;
  std::optional<std::size_t> budget;
  std::uint64_t seed = 0;
  std::int64_t degree = 0;
  std::vector<BasisSymbol> generators;
  std::size_t max_rounds = 12;
};

namespace detail {

inline const Json* child(const Json& obj, const char* key) {
  auto it = obj.find(key);
  return it == obj.end() || it->is_null() ? nullptr : &*it;
}

inline BracketKind parse_kind(const std::string& s) {
  if (s == "a-omega-delta") return BracketKind::AOmegaDelta;
  if (s == "a-omega-delta-omega-form") return BracketKind::AOmegaDeltaOmegaForm;
  if (s == "a-f-k") return BracketKind::AFK;
  throw SchemaError("algebra.kind: unknown algebra '" + s + "'");
}

inline std::string kind_name(BracketKind k) {
  switch (k) {
    case BracketKind::AOmegaDeltaOmegaForm: return "a-omega-delta-omega-form";
    case BracketKind::AOmegaDelta: return "a-omega-delta";
    case BracketKind::AFK: return "a-f-k";
  }
  return "?";
}

inline std::string expect_string(const Json& j, const std::string& field) {
  if (!j.is_string()) throw SchemaError(field + ": expected a string");
  return j.get<std::string>();
}

inline std::size_t expect_count(const Json& j, const std::string& field) {
  auto v = json_io::read_int(j, field);
  if (v < 0) throw SchemaError(field + ": expected a non-negative integer");
  return static_cast<std::size_t>(v);
}

inline AlgebraSpec parse_algebra(const Json& j) {
  if (!j.is_object()) throw SchemaError("algebra: expected an object");
  const Json* kind = child(j, "kind");
  if (!kind) throw SchemaError("algebra.kind: required field missing");
  AlgebraSpec out;
  out.kind = parse_kind(expect_string(*kind, "algebra.kind"));
  if (const Json* k = child(j, "k")) out.k = json_io::read_int(*k, "algebra.k");
  if (const Json* f = child(j, "f")) out.f = FiniteFunctional(json_io::read_index_map(*f, "algebra.f"));
  if (out.kind == BracketKind::AFK && out.f.is_zero()) throw SchemaError("algebra.f: a-f-k needs a nonzero f");
  return out;
}

inline TPSpec parse_tp(const Json& j) {
  if (!j.is_object()) throw SchemaError("tp_params: expected an object");
  TPSpec out;
  if (const Json* fam = child(j, "example_family")) {
    out.example_family = true;
    if (const Json* d = child(*fam, "d_seq")) out.d_seq = json_io::read_index_map(*d, "tp_params.example_family.d_seq");
    if (const Json* c = child(*fam, "c")) out.c = json_io::read_index_map(*c, "tp_params.example_family.c");
    return out;
  }
  if (const Json* a = child(j, "alpha")) out.alpha = json_io::read_scalar(*a, "tp_params.alpha");
  if (const Json* c = child(j, "c")) out.c = json_io::read_index_map(*c, "tp_params.c");
  if (const Json* d = child(j, "d")) {
    if (!d->is_array()) throw SchemaError("tp_params.d: expected [[i, j, q, scalar], ...]");
    for (std::size_t n = 0; n < d->size(); ++n) {
      const std::string field = "tp_params.d[" + std::to_string(n) + "]";
      const Json& e = (*d)[n];
      if (!e.is_array() || e.size() != 4) throw SchemaError(field + ": expected [i, j, q, scalar]");
      IndexTriple key{json_io::read_int(e[0], field), json_io::read_int(e[1], field), json_io::read_int(e[2], field)};
      Scalar v = json_io::read_scalar(e[3], field);
      if (!v.is_zero()) out.d[key] = v;
    }
  }
  return out;
}

inline void require(bool present, const std::string& field, Command c) {
  if (!present) throw SchemaError(field + ": required for " + to_string(c));
}

}  // namespace detail

/// Parses and validates a JSON run configuration.
inline RunConfig parse_config(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("config: ") + e.what());
  }
  if (!doc.is_object()) throw SchemaError("config: top level must be an object");

  RunConfig cfg;
  const Json* cmd = detail::child(doc, "command");
  if (!cmd) throw SchemaError("command: required field missing");
  const auto name = detail::expect_string(*cmd, "command");
  auto command = parse_command(name);
  if (!command) throw SchemaError("command: unknown command '" + name + "'");
  cfg.command = *command;

  if (const Json* a = detail::child(doc, "algebra")) cfg.algebra = detail::parse_algebra(*a);
  if (const Json* w = detail::child(doc, "windows")) {
    if (!w->is_object()) throw SchemaError("windows: expected an object");
    const std::pair<const char*, std::optional<Window>*> slots[] = {
        {"domain", &cfg.domain}, {"equation", &cfg.equation}, {"core", &cfg.core},   {"image", &cfg.image},
        {"index", &cfg.index},   {"basis", &cfg.basis},       {"sample", &cfg.sample}};
    for (const auto& [key, slot] : slots)
      if (const Json* v = detail::child(*w, key)) *slot = json_io::read_window(*v, std::string("windows.") + key);
  }
  if (const Json* t = detail::child(doc, "tp_params")) cfg.tp_params = detail::parse_tp(*t);
  if (const Json* m = detail::child(doc, "mode")) {
    const auto s = detail::expect_string(*m, "mode");
    if (s == "exhaustive") cfg.mode = CheckMode::Exhaustive;
    else if (s == "randomized") cfg.mode = CheckMode::Randomized;
    else throw SchemaError("mode: expected 'exhaustive' or 'randomized'");
  }
  if (const Json* b = detail::child(doc, "budget")) cfg.budget = detail::expect_count(*b, "budget");
  if (const Json* s = detail::child(doc, "seed")) cfg.seed = detail::expect_count(*s, "seed");
  if (const Json* g = detail::child(doc, "degree")) cfg.degree = json_io::read_int(*g, "degree");
  if (const Json* r = detail::child(doc, "max_rounds")) cfg.max_rounds = detail::expect_count(*r, "max_rounds");
  if (const Json* g = detail::child(doc, "generators")) {
    if (!g->is_array()) throw SchemaError("generators: expected an array of symbols");
    for (std::size_t n = 0; n < g->size(); ++n) {
      const std::string field = "generators[" + std::to_string(n) + "]";
      try {
        cfg.generators.push_back(BasisSymbol::parse(detail::expect_string((*g)[n], field)));
      } catch (const ParseError& e) {
        throw ParseError(field + ": " + e.what());
      }
    }
  }

  const Command c = cfg.command;
  if (c != Command::TpTriviality) detail::require(cfg.algebra.has_value(), "algebra", c);
  if (c != Command::TpTriviality && c != Command::BuildTp && c != Command::VerifyTp)
    detail::require(cfg.domain.has_value(), "windows.domain", c);
  if (c == Command::SolveDerivations) detail::require(cfg.core.has_value(), "windows.core", c);
  if (c == Command::TpTriviality)
    detail::require(cfg.domain || (cfg.index && cfg.basis), "windows.domain (or windows.index and windows.basis)", c);
  if (c == Command::BuildTp || c == Command::VerifyTp) {
    detail::require(cfg.tp_params.has_value(), "tp_params", c);
    if (cfg.algebra->kind != BracketKind::AFK) throw SchemaError("algebra.kind: " + to_string(c) + " needs a-f-k");
  }
  if (c == Command::Generators) detail::require(!cfg.generators.empty(), "generators", c);
  return cfg;
}

/// Normalized form of a config, echoed into every report.
inline Json to_json(const RunConfig& cfg) {
  Json out{{"command", to_string(cfg.command)}};
  if (cfg.algebra) {
    Json a{{"kind", detail::kind_name(cfg.algebra->kind)}};
    if (cfg.algebra->kind == BracketKind::AFK) {
      a["k"] = cfg.algebra->k;
      a["f"] = json_io::to_json(cfg.algebra->f);
    }
    out["algebra"] = a;
  }
  Json w = Json::object();
  const std::pair<const char*, const std::optional<Window>*> slots[] = {
      {"domain", &cfg.domain}, {"equation", &cfg.equation}, {"core", &cfg.core},   {"image", &cfg.image},
      {"index", &cfg.index},   {"basis", &cfg.basis},       {"sample", &cfg.sample}};
  for (const auto& [key, slot] : slots)
    if (*slot) w[key] = json_io::to_json(**slot);
  out["windows"] = w;
  if (cfg.tp_params) {
    const auto& t = *cfg.tp_params;
    if (t.example_family) {
      out["tp_params"] = Json{{"example_family", {{"d_seq", json_io::to_json(t.d_seq)}, {"c", json_io::to_json(t.c)}}}};
    } else {
      Json d = Json::array();
      for (const auto& [key, v] : t.d) d.push_back(Json::array({key[0], key[1], key[2], v.to_string()}));
      out["tp_params"] = Json{{"alpha", t.alpha.to_string()}, {"c", json_io::to_json(t.c)}, {"d", d}};
    }
  }
  out["mode"] = to_string(cfg.mode);
  out["budget"] = cfg.budget ? Json(*cfg.budget) : Json(nullptr);
  out["seed"] = cfg.seed;
  if (cfg.command == Command::SolveDerivations) out["degree"] = cfg.degree;
  if (cfg.command == Command::Generators) {
    out["generators"] = json_io::to_json(cfg.generators);
    out["max_rounds"] = cfg.max_rounds;
  }
  return out;
}

struct ReportEntry {
  std::string law;
  std::string anchor;
  bool passed = false;
  std::size_t cases_run = 0;
  Json violations = Json::array();
  Json details = Json::object();
};

struct RunReport {
  Json config;
  std::vector<ReportEntry> entries;
  std::optional<std::string> error;
  std::optional<std::int64_t> timing_ms;

  bool passed() const {
    if (error) return false;
    for (const auto& e : entries)
      if (!e.passed) return false;
    return true;
  }
  int exit_code() const { return error ? 2 : passed() ? 0 : 1; }
};

inline ReportEntry entry_from(const CheckReport& r) {
  ReportEntry e{r.law, r.anchor, r.passed(), r.cases_run};
  for (const auto& v : r.violations) e.violations.push_back(json_io::to_json(v));
  e.details = Json{{"mode", to_string(r.mode)}, {"violation_count", r.violation_count}, {"skipped", r.skipped}};
  if (r.mode == CheckMode::Randomized) e.details["seed"] = r.seed;
  return e;
}

inline Json to_json(const RunReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries)
    entries.push_back(Json{{"law", e.law},
                           {"anchor", e.anchor},
                           {"passed", e.passed},
                           {"cases_run", e.cases_run},
                           {"violations", e.violations},
                           {"details", e.details}});
  Json out{{"tool", "translie"}, {"version", kVersion}, {"config", r.config}};
  out["verdict"] = r.error ? "error" : r.passed() ? "pass" : "fail";
  if (r.error) out["error"] = *r.error;
  out["entries"] = entries;
  out["timing_ms"] = r.timing_ms ? Json(*r.timing_ms) : Json(nullptr);
  return out;
}

namespace detail {

inline CheckOptions options_for(const RunConfig& cfg) {
  CheckOptions o;
  o.mode = cfg.mode;
  o.seed = cfg.seed;
  if (cfg.budget) {
    if (cfg.mode == CheckMode::Randomized) o.samples = *cfg.budget;
    else o.exhaustive_cap = *cfg.budget;
  }
  if (cfg.sample) o.sample_range = *cfg.sample;
  return o;
}

inline void run_check_laws(const RunConfig& cfg, RunReport& out) {
  const auto bracket = cfg.algebra->make();
  const auto opts = options_for(cfg);
  const Window skew_window = cfg.equation.value_or(*cfg.domain);
  out.entries.push_back(entry_from(check_skew_symmetry(bracket, skew_window, opts)));
  out.entries.push_back(entry_from(check_fundamental_identity(bracket, *cfg.domain, opts)));
  if (bracket.kind() != BracketKind::AFK)
    out.entries.push_back(entry_from(check_relabel_intertwining(skew_window, opts)));
}

inline void run_solve(const RunConfig& cfg, RunReport& out) {
  const auto bracket = cfg.algebra->make();
  const Window domain = *cfg.domain;
  const bool graded = bracket.kind() == BracketKind::AOmegaDelta;
  const Ansatz ansatz = graded ? Ansatz::graded(cfg.degree, domain) : Ansatz::full_window(domain, cfg.image.value_or(domain));
  const auto verdict = solve_and_classify(bracket, ansatz, cfg.equation.value_or(domain), *cfg.core);

  ReportEntry e{"one-third-derivation-classification", graded ? "graded-one-third-derivations-of-a-omega-delta"
                                                               : "one-third-derivations-of-a-f-k",
                verdict.matches, verdict.row_count};
  for (const auto& [i, reason] : verdict.offending_vectors)
    e.violations.push_back(Json{{"basis_vector", i},
                                {"reason", reason},
                                {"vector", json_io::to_json(verdict.core_space.unknowns, verdict.core_space.basis[i])}});
  Json basis = Json::array();
  for (const auto& v : verdict.core_space.basis) basis.push_back(json_io::to_json(verdict.core_space.unknowns, v));
  e.details = Json{{"expected", verdict.expected_description},
                   {"core_dimension", verdict.core_dimension},
                   {"expected_dimension", verdict.expected_dimension},
                   {"window_dimension", verdict.window_dimension},
                   {"rows", verdict.row_count},
                   {"core_basis", basis}};
  out.entries.push_back(std::move(e));
}

inline void run_tp_triviality(const RunConfig& cfg, RunReport& out) {
  const Window index = cfg.index.value_or(cfg.domain.value_or(Window(0, 0)));
  const Window basis = cfg.basis.value_or(cfg.domain.value_or(Window(0, 0)));
  const auto space = tp_triviality_solver(index, basis);
  ReportEntry e{"tp-triviality", "no-nontrivial-transposed-poisson-on-a-omega-delta", space.dimension() == 0,
                space.unknowns.size()};
  for (const auto& v : space.basis) e.violations.push_back(json_io::to_json(space.unknowns, v));
  e.details = Json{{"dimension", space.dimension()}, {"unknowns", space.unknowns.size()}, {"rank", space.constraint_rank}};
  out.entries.push_back(std::move(e));
}

inline ReportEntry validation_entry(const TPParams& p) {
  const auto report = validate_params(p);
  const auto idx = p.support_indices();
  const std::size_t n = idx.size();
  ReportEntry e{"params-valid", "transposed-poisson-parameter-constraints", report.valid(), p.d.size() + n * n + n * n * n * n};
  if (!report.valid()) e.violations.push_back(json_io::to_json(report));
  e.details = Json{{"params", json_io::to_json(p)}};
  return e;
}

inline void run_build_tp(const RunConfig& cfg, RunReport& out) {
  const auto p = cfg.tp_params->make(cfg.algebra->f, cfg.algebra->k);
  out.entries.push_back(validation_entry(p));
}

inline void run_verify_tp(const RunConfig& cfg, RunReport& out) {
  const auto bracket = cfg.algebra->make();
  const auto p = cfg.tp_params->make(cfg.algebra->f, cfg.algebra->k);
  auto valid = validation_entry(p);
  const bool ok = valid.passed;
  out.entries.push_back(std::move(valid));
  if (!ok) return;

  const auto product = tp_product(p);
  const Window window = cfg.domain.value_or(support_closure(p));
  CheckOptions exhaustive = options_for(cfg);
  exhaustive.mode = CheckMode::Exhaustive;

  auto comm = entry_from(check_commutative_associative(product, window, exhaustive));
  comm.details["window"] = json_io::to_json(window);
  out.entries.push_back(std::move(comm));

  auto tp = entry_from(check_tp_compatibility(bracket, product, window, exhaustive));
  tp.details["window"] = json_io::to_json(window);
  out.entries.push_back(std::move(tp));

  CheckOptions randomized = options_for(cfg);
  randomized.mode = CheckMode::Randomized;
  if (!cfg.budget || cfg.mode != CheckMode::Randomized) randomized.samples = 1000;
  auto tp_rand = entry_from(check_tp_compatibility(bracket, product, window, randomized));
  tp_rand.details["sample_range"] = json_io::to_json(randomized.sample_range);
  out.entries.push_back(std::move(tp_rand));

  // The dichotomy passes when the predicted class agrees with the Poisson check.
  const auto cls = classify_poisson(p);
  CheckOptions poisson_opts = exhaustive;
  poisson_opts.max_recorded = 1;
  const auto poisson = check_poisson_compatibility(bracket, product, window, poisson_opts);
  const bool predicted_poisson = cls == PoissonClass::PoissonAndTransposed;
  ReportEntry e{"poisson-dichotomy", "poisson-iff-alpha-and-c-vanish", predicted_poisson == poisson.passed(),
                poisson.cases_run};
  e.details = Json{{"classification", to_string(cls)}, {"poisson_law_holds", poisson.passed()}};
  if (!poisson.violations.empty()) e.details["poisson_witness"] = json_io::to_json(poisson.violations.front());
  out.entries.push_back(std::move(e));
}

inline void run_generators(const RunConfig& cfg, RunReport& out) {
  const auto bracket = cfg.algebra->make();
  std::vector<Element> gens(cfg.generators.begin(), cfg.generators.end());
  const auto res = generator_closure(bracket, gens, *cfg.domain, cfg.max_rounds);
  ReportEntry e{"generator-closure", "finite-generation", res.spanned, res.rounds_used};
  if (!res.spanned) e.violations.push_back(Json{{"missing", json_io::to_json(res.missing)}});
  e.details = Json{{"rounds_used", res.rounds_used}, {"span_dimension", res.span_dimension}};
  out.entries.push_back(std::move(e));
}

}  // namespace detail

/// Dispatches one command. Library errors are captured in the report and map
/// to exit code 2.
inline RunReport run(const RunConfig& cfg, bool with_timing = false) {
  RunReport out;
  out.config = to_json(cfg);
  const auto start = std::chrono::steady_clock::now();
  try {
    switch (cfg.command) {
      case Command::CheckLaws: detail::run_check_laws(cfg, out); break;
      case Command::SolveDerivations: detail::run_solve(cfg, out); break;
      case Command::TpTriviality: detail::run_tp_triviality(cfg, out); break;
      case Command::BuildTp: detail::run_build_tp(cfg, out); break;
      case Command::VerifyTp: detail::run_verify_tp(cfg, out); break;
      case Command::Generators: detail::run_generators(cfg, out); break;
    }
  } catch (const Error& e) {
    out.entries.clear();
    out.error = e.what();
  }
  if (with_timing)
    out.timing_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace translie::cli
