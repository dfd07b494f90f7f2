#pragma once

#include <array>
#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "translie/element.hpp"
#include "translie/functional.hpp"

namespace translie {

/// Anything that evaluates a trilinear bracket on basis triples.
template <class B>
concept TernaryBracket = requires(const B& b, BasisSymbol s) {
  { b(s, s, s) } -> std::convertible_to<Element>;
};

/// Arguments sorted into canonical order plus the sign of the sorting
/// permutation.
struct SortedTriple {
  std::array<BasisSymbol, 3> args;
  int sign = 1;
};

/// nullopt when two arguments coincide.
inline std::optional<SortedTriple> sort_with_sign(BasisSymbol x, BasisSymbol y, BasisSymbol z) {
  SortedTriple t{{x, y, z}, 1};
  auto& a = t.args;
  if (a[1] < a[0]) std::swap(a[0], a[1]), t.sign = -t.sign;
  if (a[2] < a[1]) std::swap(a[1], a[2]), t.sign = -t.sign;
  if (a[1] < a[0]) std::swap(a[0], a[1]), t.sign = -t.sign;
  if (a[0] == a[1] || a[1] == a[2]) return std::nullopt;
  return t;
}

enum class BracketKind {
  AOmegaDeltaOmegaForm,  // the bracket before relabelling M_r -> M_{-r}
  AOmegaDelta,
  AFK,
};

/// Closed-form structure constants of the three ternary brackets, extended to
/// arbitrary argument order by total antisymmetry.
class BracketDef {
 public:
  static BracketDef omega_form() { return BracketDef(BracketKind::AOmegaDeltaOmegaForm, 0, {}); }
  static BracketDef a_omega_delta() { return BracketDef(BracketKind::AOmegaDelta, 0, {}); }
  static BracketDef afk(std::int64_t k, FiniteFunctional f) {
    if (f.is_zero()) throw DomainError("A_{f,k} requires a nonzero functional f");
    return BracketDef(BracketKind::AFK, k, std::move(f));
  }

  BracketKind kind() const { return kind_; }
  std::int64_t k() const { return k_; }
  const FiniteFunctional& f() const { return f_; }

  std::string name() const {
    switch (kind_) {
      case BracketKind::AOmegaDeltaOmegaForm: return "a-omega-delta-omega-form";
      case BracketKind::AOmegaDelta: return "a-omega-delta";
      case BracketKind::AFK: return "a-f-k";
    }
    return "?";
  }

  Element operator()(BasisSymbol x, BasisSymbol y, BasisSymbol z) const {
    auto sorted = sort_with_sign(x, y, z);
    if (!sorted) return {};
    Element out = canonical(sorted->args);
    if (sorted->sign < 0) out *= Scalar(-1);
    return out;
  }

  /// Bracket on a canonically ordered triple (L's first, indices ascending).
  Element canonical(const std::array<BasisSymbol, 3>& a) const {
    const auto [x, y, z] = a;
    const bool llm = x.is_l() && y.is_l() && z.is_m();
    const bool lmm = x.is_l() && y.is_m() && z.is_m();
    const std::int64_t r = x.index, s = y.index, t = z.index;
    switch (kind_) {
      case BracketKind::AOmegaDeltaOmegaForm:
        // [L_r,L_s,M_t] = (s-r) L_{r+s-t},  [L_r,M_s,M_t] = (t-s) M_{s+t-r}
        if (llm) return Element::term(L(checked_sub(checked_add(r, s), t)), Scalar(checked_sub(s, r)));
        if (lmm) return Element::term(M(checked_sub(checked_add(s, t), r)), Scalar(checked_sub(t, s)));
        return {};
      case BracketKind::AOmegaDelta:
        // [L_r,L_s,M_t] = (s-r) L_{r+s+t},  [L_r,M_s,M_t] = (s-t) M_{r+s+t}
        if (llm) return Element::term(L(checked_add(r, s, t)), Scalar(checked_sub(s, r)));
        if (lmm) return Element::term(M(checked_add(r, s, t)), Scalar(checked_sub(s, t)));
        return {};
      case BracketKind::AFK:
        // [L_r,L_s,M_t] = f(M_t) (r-s) L_{r+s+k}
        if (llm) {
          Scalar ft = f_.at(t);
          if (ft.is_zero()) return {};
          return Element::term(L(checked_add(r, s, k_)), ft * Scalar(checked_sub(r, s)));
        }
        return {};
    }
    return {};
  }

 private:
  BracketDef(BracketKind kind, std::int64_t k, FiniteFunctional f) : kind_(kind), k_(k), f_(std::move(f)) {}

  BracketKind kind_;
  std::int64_t k_;
  FiniteFunctional f_;
};

/// Trilinear extension of a basis bracket to arbitrary elements.
template <TernaryBracket B>
Element bracket_eval(const B& bracket, const Element& x, const Element& y, const Element& z) {
  Element out;
  for (const auto& [sx, cx] : x)
    for (const auto& [sy, cy] : y) {
      Scalar cxy = cx * cy;
      for (const auto& [sz, cz] : z) out.add_scaled(bracket(sx, sy, sz), cxy * cz);
    }
  return out;
}

}  // namespace translie
