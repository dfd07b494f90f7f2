#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "translie/bracket.hpp"
#include "translie/linear_system.hpp"
#include "translie/operators.hpp"
#include "translie/product.hpp"
#include "translie/window.hpp"

namespace translie {

enum class CheckMode { Exhaustive, Randomized };

inline std::string to_string(CheckMode m) { return m == CheckMode::Exhaustive ? "exhaustive" : "randomized"; }

struct CheckOptions {
  CheckMode mode = CheckMode::Exhaustive;
  /// Exhaustive runs refuse to start above this many instances.
  std::size_t exhaustive_cap = 2'000'000;
  /// Number of random instances in randomized mode.
  std::size_t samples = 10'000;
  std::uint64_t seed = 0;
  /// Indices drawn in randomized mode.
  Window sample_range{-20, 20};
  /// Violations beyond this many are counted but not stored.
  std::size_t max_recorded = 32;
  /// Count instances where an operator is undefined as skipped instead of
  /// failing with DomainError.
  bool skip_undefined = false;
};

struct Violation {
  std::vector<BasisSymbol> inputs;
  Element lhs;
  Element rhs;
  Element residual;  // lhs - rhs, never zero
};

struct CheckReport {
  std::string law;
  std::string anchor;
  CheckMode mode = CheckMode::Exhaustive;
  std::size_t cases_run = 0;
  std::size_t skipped = 0;
  std::size_t violation_count = 0;
  std::vector<Violation> violations;
  std::uint64_t seed = 0;

  bool passed() const { return violation_count == 0; }
};

namespace detail {

class LawRun {
 public:
  LawRun(std::string law, std::string anchor, const CheckOptions& opts) : opts_(opts) {
    report_.law = std::move(law);
    report_.anchor = std::move(anchor);
    report_.mode = opts.mode;
    report_.seed = opts.mode == CheckMode::Randomized ? opts.seed : 0;
  }

  void compare(std::span<const BasisSymbol> inputs, const Element& lhs, const Element& rhs) {
    if (lhs == rhs) return;
    ++report_.violation_count;
    if (report_.violations.size() < opts_.max_recorded)
      report_.violations.push_back({{inputs.begin(), inputs.end()}, lhs, rhs, lhs - rhs});
  }

  const CheckOptions& options() const { return opts_; }
  CheckReport& report() { return report_; }

 private:
  const CheckOptions& opts_;
  CheckReport report_;
};

inline std::size_t checked_power(std::size_t base, std::size_t exp, std::size_t cap) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && out > cap / base) return cap + 1;
    out *= base;
  }
  return out;
}

inline BasisSymbol random_symbol(std::mt19937_64& rng, const Window& range) {
  std::uniform_int_distribution<std::int64_t> idx(range.lo(), range.hi());
  std::uniform_int_distribution<int> fam(0, 1);
  Family f = fam(rng) == 0 ? Family::L : Family::M;
  return {f, idx(rng)};
}

/// Drives body(args, run) over every N-tuple of basis symbols of `w`
/// (exhaustive) or over opts.samples random N-tuples (randomized).
template <std::size_t N, class Body>
CheckReport quantify(LawRun run, const Window& w, CheckMode mode, Body&& body) {
  const auto& opts = run.options();
  auto invoke = [&](const std::array<BasisSymbol, N>& args) {
    try {
      body(args, run);
      ++run.report().cases_run;
    } catch (const DomainError&) {
      if (!opts.skip_undefined) throw;
      ++run.report().skipped;
    }
  };
  run.report().mode = mode;
  if (mode == CheckMode::Exhaustive) {
    const auto symbols = w.symbols();
    const std::size_t n = symbols.size();
    const std::size_t total = checked_power(n, N, opts.exhaustive_cap);
    if (total > opts.exhaustive_cap)
      throw BudgetExceeded(run.report().law + ": exhaustive run over " + w.to_string() + " exceeds the cap of " +
                           std::to_string(opts.exhaustive_cap) + " instances");
    std::array<std::size_t, N> pos{};
    std::array<BasisSymbol, N> args;
    for (std::size_t done = 0; done < total; ++done) {
      for (std::size_t i = 0; i < N; ++i) args[i] = symbols[pos[i]];
      invoke(args);
      for (std::size_t i = N; i-- > 0;) {
        if (++pos[i] < n) break;
        pos[i] = 0;
      }
    }
  } else {
    std::mt19937_64 rng(opts.seed);
    std::array<BasisSymbol, N> args;
    for (std::size_t s = 0; s < opts.samples; ++s) {
      for (auto& a : args) a = random_symbol(rng, opts.sample_range);
      invoke(args);
    }
  }
  return std::move(run.report());
}

}  // namespace detail

/// [x,y,[u,v,w]] = [[x,y,u],v,w] + [u,[x,y,v],w] + [u,v,[x,y,w]] on basis 5-tuples.
template <TernaryBracket B>
CheckReport check_fundamental_identity(const B& bracket, const Window& w, const CheckOptions& opts = {}) {
  detail::LawRun run("fundamental-identity", "filippov-fundamental-identity", opts);
  return detail::quantify<5>(std::move(run), w, opts.mode, [&](const std::array<BasisSymbol, 5>& a, detail::LawRun& r) {
    const auto& [x, y, u, v, z] = a;
    Element lhs = bracket_eval(bracket, x, y, bracket(u, v, z));
    Element rhs = bracket_eval(bracket, bracket(x, y, u), v, z);
    rhs += bracket_eval(bracket, u, bracket(x, y, v), z);
    rhs += bracket_eval(bracket, u, v, bracket(x, y, z));
    r.compare(a, lhs, rhs);
  });
}

/// Every transposition of arguments negates the bracket.
template <TernaryBracket B>
CheckReport check_skew_symmetry(const B& bracket, const Window& w, const CheckOptions& opts = {}) {
  detail::LawRun run("skew-symmetry", "3-lie-skew-symmetry", opts);
  return detail::quantify<3>(std::move(run), w, CheckMode::Exhaustive,
                             [&](const std::array<BasisSymbol, 3>& a, detail::LawRun& r) {
                               const auto& [x, y, z] = a;
                               Element negated = -bracket(x, y, z);
                               r.compare(std::array{y, x, z}, bracket(y, x, z), negated);
                               r.compare(std::array{x, z, y}, bracket(x, z, y), negated);
                               r.compare(std::array{z, y, x}, bracket(z, y, x), negated);
                             });
}

/// phi([x,y,z]) = 1/3 ([phi x,y,z] + [x,phi y,z] + [x,y,phi z]) on basis triples.
template <TernaryBracket B, LinearMap Op>
CheckReport check_one_third_derivation(const B& bracket, const Op& op, const Window& w, const CheckOptions& opts = {}) {
  detail::LawRun run("one-third-derivation", "one-third-derivation", opts);
  const Scalar third(1, 3);
  return detail::quantify<3>(std::move(run), w, opts.mode, [&](const std::array<BasisSymbol, 3>& a, detail::LawRun& r) {
    const auto& [x, y, z] = a;
    Element lhs = operator_apply(op, bracket(x, y, z));
    Element rhs = bracket_eval(bracket, op(x), y, z);
    rhs += bracket_eval(bracket, x, op(y), z);
    rhs += bracket_eval(bracket, x, y, op(z));
    r.compare(a, lhs, rhs * third);
  });
}

/// Leibniz rule op(xy) = op(x) y + x op(y) on basis pairs.
template <LinearMap Op, BinaryProduct P = ProductDef>
CheckReport check_derivation(const Op& op, const Window& w, const P& product = ProductDef::algebra_a(),
                             const CheckOptions& opts = {}) {
  detail::LawRun run("derivation-leibniz", "derivation-of-a", opts);
  return detail::quantify<2>(std::move(run), w, CheckMode::Exhaustive,
                             [&](const std::array<BasisSymbol, 2>& a, detail::LawRun& r) {
                               const auto& [x, y] = a;
                               Element lhs = operator_apply(op, product(x, y));
                               Element rhs = product_eval(product, op(x), y) + product_eval(product, x, op(y));
                               r.compare(a, lhs, rhs);
                             });
}

/// op(op(x)) = x on basis symbols.
template <LinearMap Op>
CheckReport check_involution(const Op& op, const Window& w, const CheckOptions& opts = {}) {
  detail::LawRun run("involution", "omega-involution", opts);
  return detail::quantify<1>(std::move(run), w, CheckMode::Exhaustive,
                             [&](const std::array<BasisSymbol, 1>& a, detail::LawRun& r) {
                               r.compare(a, operator_apply(op, op(a[0])), Element(a[0]));
                             });
}

/// op(xy) = op(x) op(y) on basis pairs.
template <LinearMap Op, BinaryProduct P = ProductDef>
CheckReport check_algebra_morphism(const Op& op, const Window& w, const P& product = ProductDef::algebra_a(),
                                   const CheckOptions& opts = {}) {
  detail::LawRun run("algebra-morphism", "omega-algebra-morphism", opts);
  return detail::quantify<2>(std::move(run), w, CheckMode::Exhaustive,
                             [&](const std::array<BasisSymbol, 2>& a, detail::LawRun& r) {
                               const auto& [x, y] = a;
                               r.compare(a, operator_apply(op, product(x, y)), product_eval(product, op(x), op(y)));
                             });
}

/// relabel([x,y,z]_omega) = [relabel x, relabel y, relabel z] in A_omega^delta.
inline CheckReport check_relabel_intertwining(const Window& w, const CheckOptions& opts = {}) {
  const auto omega_form = BracketDef::omega_form();
  const auto target = BracketDef::a_omega_delta();
  detail::LawRun run("relabel-intertwining", "m-index-negation-relabelling", opts);
  return detail::quantify<3>(std::move(run), w, CheckMode::Exhaustive,
                             [&](const std::array<BasisSymbol, 3>& a, detail::LawRun& r) {
                               const auto& [x, y, z] = a;
                               Element lhs = relabel_m_negation(omega_form(x, y, z));
                               Element rhs = bracket_eval(target, relabel_m_negation(x), relabel_m_negation(y),
                                                          relabel_m_negation(z));
                               r.compare(a, lhs, rhs);
                             });
}

/// 3 u[x,y,z] = [xu,y,z] + [x,yu,z] + [x,y,zu] on basis 4-tuples (u,x,y,z).
template <TernaryBracket B, BinaryProduct P>
CheckReport check_tp_compatibility(const B& bracket, const P& product, const Window& w, const CheckOptions& opts = {}) {
  detail::LawRun run("transposed-leibniz", "transposed-poisson-compatibility", opts);
  return detail::quantify<4>(std::move(run), w, opts.mode, [&](const std::array<BasisSymbol, 4>& a, detail::LawRun& r) {
    const auto& [u, x, y, z] = a;
    Element lhs = product_eval(product, u, bracket(x, y, z)) * Scalar(3);
    Element rhs = bracket_eval(bracket, product(x, u), y, z);
    rhs += bracket_eval(bracket, x, product(y, u), z);
    rhs += bracket_eval(bracket, x, y, product(z, u));
    r.compare(a, lhs, rhs);
  });
}

/// [x,y,uv] = u[x,y,v] + [x,y,u]v on basis 4-tuples (x,y,u,v).
template <TernaryBracket B, BinaryProduct P>
CheckReport check_poisson_compatibility(const B& bracket, const P& product, const Window& w,
                                        const CheckOptions& opts = {}) {
  detail::LawRun run("poisson-leibniz", "poisson-compatibility", opts);
  return detail::quantify<4>(std::move(run), w, opts.mode, [&](const std::array<BasisSymbol, 4>& a, detail::LawRun& r) {
    const auto& [x, y, u, v] = a;
    Element lhs = bracket_eval(bracket, x, y, product(u, v));
    Element rhs = product_eval(product, u, bracket(x, y, v)) + product_eval(product, bracket(x, y, u), v);
    r.compare(a, lhs, rhs);
  });
}

/// xy = yx on basis pairs and (xy)z = x(yz) on basis triples.
template <BinaryProduct P>
CheckReport check_commutative_associative(const P& product, const Window& w, const CheckOptions& opts = {}) {
  CheckReport comm = detail::quantify<2>(detail::LawRun("commutativity", "", opts), w, opts.mode,
                                         [&](const std::array<BasisSymbol, 2>& a, detail::LawRun& r) {
                                           r.compare(a, product(a[0], a[1]), product(a[1], a[0]));
                                         });
  CheckReport assoc = detail::quantify<3>(detail::LawRun("associativity", "", opts), w, opts.mode,
                                          [&](const std::array<BasisSymbol, 3>& a, detail::LawRun& r) {
                                            const auto& [x, y, z] = a;
                                            r.compare(a, product_eval(product, product(x, y), z),
                                                      product_eval(product, x, product(y, z)));
                                          });
  CheckReport out;
  out.law = "commutative-associative";
  out.anchor = "commutative-associative-product";
  out.mode = opts.mode;
  out.seed = comm.seed;
  out.cases_run = comm.cases_run + assoc.cases_run;
  out.violation_count = comm.violation_count + assoc.violation_count;
  out.violations = std::move(comm.violations);
  for (auto& v : assoc.violations)
    if (out.violations.size() < opts.max_recorded) out.violations.push_back(std::move(v));
  return out;
}

struct ClosureResult {
  bool spanned = false;
  std::size_t rounds_used = 0;
  std::vector<BasisSymbol> missing;
  std::size_t span_dimension = 0;
};

/// Closes span(gens) under the bracket, one round at a time, until every
/// basis symbol of `w` lies in the span or nothing new appears. Elements
/// with a term outside w padded by `margin` (default: w.width()) are dropped.
template <TernaryBracket B>
ClosureResult generator_closure(const B& bracket, const std::vector<Element>& gens, const Window& w,
                                std::size_t max_rounds, std::optional<std::int64_t> margin = std::nullopt) {
  if (gens.empty()) throw DomainError("generator_closure needs at least one generator");
  const Window reach = w.padded(margin.value_or(w.width()));
  const auto column = [&](BasisSymbol s) {
    return static_cast<std::size_t>(s.index - reach.lo()) + (s.is_m() ? reach.count() : 0);
  };
  RowReducer span(2 * reach.count());
  std::vector<Element> elements;

  auto add = [&](const Element& e) {
    if (e.empty()) return;
    SparseRow row;
    for (const auto& [s, c] : e) {
      if (!reach.contains(s)) return;
      row.emplace_back(column(s), c);
    }
    if (span.insert(std::move(row))) elements.push_back(e);
  };
  auto missing_symbols = [&] {
    std::vector<BasisSymbol> out;
    for (auto s : w.symbols())
      if (!span.in_span({{column(s), Scalar(1)}})) out.push_back(s);
    return out;
  };

  for (const auto& g : gens) add(g);
  ClosureResult result;
  std::size_t processed = 0;
  while (true) {
    result.missing = missing_symbols();
    if (result.missing.empty() || elements.size() == processed) break;
    if (result.rounds_used == max_rounds)
      throw BudgetExceeded("generator closure did not settle within " + std::to_string(max_rounds) + " rounds");
    ++result.rounds_used;
    const std::size_t fresh = processed;
    const std::size_t n = elements.size();
    processed = n;
    for (std::size_t l = fresh; l < n; ++l)
      for (std::size_t j = 0; j < l; ++j)
        for (std::size_t i = 0; i < j; ++i) add(bracket_eval(bracket, elements[i], elements[j], elements[l]));
  }
  result.spanned = result.missing.empty();
  result.span_dimension = span.rank();
  return result;
}

}  // namespace translie
