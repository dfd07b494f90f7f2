#pragma once

#include <concepts>
#include <cstdint>
#include <map>
#include <string>
#include <variant>

#include "translie/element.hpp"
#include "translie/product.hpp"

namespace translie {

/// Anything that maps a basis symbol to an element (a linear map given on
/// the basis).
template <class Op>
concept LinearMap = requires(const Op& op, BasisSymbol s) {
  { op(s) } -> std::convertible_to<Element>;
};

/// delta(L_r) = r L_r, delta(M_r) = r M_r
struct DegreeOperator {};
/// omega(L_r) = M_{-r}, omega(M_r) = L_{-r}
struct OmegaInvolution {};
/// d_k(L_r) = r L_{r+k}, d_k(M_r) = 0
struct WittDerivation {
  std::int64_t k = 0;
};
/// D_k(L_r) = L_{r+k}, D_k(M_r) = M_{r+k}
struct DegreeShift {
  std::int64_t k = 0;
};
/// x -> c x
struct ScalarMultiple {
  Scalar factor;
};
/// Explicit image table; evaluation outside the table is a DomainError.
struct CustomTable {
  std::map<BasisSymbol, Element> images;
};

class LinearOperator {
 public:
  using Variant = std::variant<DegreeOperator, OmegaInvolution, WittDerivation, DegreeShift, ScalarMultiple, CustomTable>;

  static LinearOperator delta() { return LinearOperator(DegreeOperator{}); }
  static LinearOperator omega() { return LinearOperator(OmegaInvolution{}); }
  static LinearOperator d_sub(std::int64_t k) { return LinearOperator(WittDerivation{k}); }
  static LinearOperator d_cap(std::int64_t k) { return LinearOperator(DegreeShift{k}); }
  static LinearOperator scaling(Scalar c) { return LinearOperator(ScalarMultiple{std::move(c)}); }
  static LinearOperator custom(std::map<BasisSymbol, Element> images) {
    return LinearOperator(CustomTable{std::move(images)});
  }

  const Variant& variant() const { return op_; }

  std::string name() const {
    struct Namer {
      std::string operator()(const DegreeOperator&) const { return "delta"; }
      std::string operator()(const OmegaInvolution&) const { return "omega"; }
      std::string operator()(const WittDerivation& d) const { return "d_" + std::to_string(d.k); }
      std::string operator()(const DegreeShift& d) const { return "D_" + std::to_string(d.k); }
      std::string operator()(const ScalarMultiple& s) const { return "scale(" + s.factor.to_string() + ")"; }
      std::string operator()(const CustomTable& t) const { return "custom(" + std::to_string(t.images.size()) + ")"; }
    };
    return std::visit(Namer{}, op_);
  }

  Element operator()(BasisSymbol s) const {
    struct Apply {
      BasisSymbol s;
      Element operator()(const DegreeOperator&) const { return Element::term(s, Scalar(s.index)); }
      Element operator()(const OmegaInvolution&) const {
        return Element(BasisSymbol{s.is_l() ? Family::M : Family::L, checked_neg(s.index)});
      }
      Element operator()(const WittDerivation& d) const {
        if (s.is_m()) return {};
        return Element::term(L(checked_add(s.index, d.k)), Scalar(s.index));
      }
      Element operator()(const DegreeShift& d) const { return Element(BasisSymbol{s.family, checked_add(s.index, d.k)}); }
      Element operator()(const ScalarMultiple& m) const { return Element::term(s, m.factor); }
      Element operator()(const CustomTable& t) const {
        auto it = t.images.find(s);
        if (it == t.images.end()) throw DomainError("operator is not defined on " + s.to_string());
        return it->second;
      }
    };
    return std::visit(Apply{s}, op_);
  }

 private:
  explicit LinearOperator(Variant v) : op_(std::move(v)) {}
  Variant op_;
};

/// Left multiplication y -> x * y for a fixed element x.
template <BinaryProduct P>
struct LeftMultiplication {
  P product;
  Element by;

  Element operator()(BasisSymbol s) const { return product_eval(product, by, Element(s)); }
};

/// Linear extension of a map given on basis symbols.
template <LinearMap Op>
Element operator_apply(const Op& op, const Element& x) {
  Element out;
  for (const auto& [s, c] : x) out.add_scaled(op(s), c);
  return out;
}

/// Fixes every L_r term and sends M_r to M_{-r}.
inline Element relabel_m_negation(const Element& x) {
  Element out;
  for (const auto& [s, c] : x) out.add_term(s.is_m() ? M(checked_neg(s.index)) : s, c);
  return out;
}

/// Witt-type Lie bracket on A induced by d_k: [u,v]_k = d_k(u) v - d_k(v) u.
inline Element witt_bracket(std::int64_t k, const Element& u, const Element& v) {
  const auto a = ProductDef::algebra_a();
  const auto d = LinearOperator::d_sub(k);
  return product_eval(a, operator_apply(d, u), v) - product_eval(a, operator_apply(d, v), u);
}

}  // namespace translie
