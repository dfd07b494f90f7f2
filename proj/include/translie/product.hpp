#pragma once

#include <concepts>
#include <optional>
#include <string>

#include "translie/element.hpp"
#include "translie/tp_params.hpp"

namespace translie {

template <class P>
concept BinaryProduct = requires(const P& p, BasisSymbol s) {
  { p(s, s) } -> std::convertible_to<Element>;
};

enum class ProductKind { AlgebraA, Zero, TPFamily };

/// Commutative products on span{L_r, M_r}: the algebra A itself, the zero
/// product, and the parametrised family on A_{f,k}.
class ProductDef {
 public:
  /// L_r L_s = L_{r+s}, M_r M_s = M_{r+s}, L_r M_s = 0
  static ProductDef algebra_a() { return ProductDef(ProductKind::AlgebraA, std::nullopt); }
  static ProductDef zero() { return ProductDef(ProductKind::Zero, std::nullopt); }
  /// No validation; tp_product() is the checked entry point.
  static ProductDef unchecked_tp_family(TPParams params) { return ProductDef(ProductKind::TPFamily, std::move(params)); }

  ProductKind kind() const { return kind_; }
  const TPParams& params() const { return *params_; }

  std::string name() const {
    switch (kind_) {
      case ProductKind::AlgebraA: return "algebra-a";
      case ProductKind::Zero: return "zero";
      case ProductKind::TPFamily: return "tp-family";
    }
    return "?";
  }

  Element operator()(BasisSymbol x, BasisSymbol y) const {
    switch (kind_) {
      case ProductKind::AlgebraA:
        if (x.family != y.family) return {};
        return Element(BasisSymbol{x.family, checked_add(x.index, y.index)});
      case ProductKind::Zero:
        return {};
      case ProductKind::TPFamily:
        return tp_table(x, y);
    }
    return {};
  }

 private:
  ProductDef(ProductKind kind, std::optional<TPParams> params) : kind_(kind), params_(std::move(params)) {}

  Element tp_table(BasisSymbol x, BasisSymbol y) const {
    const TPParams& p = *params_;
    if (x.is_l() && y.is_l()) return {};
    if (x.is_m() && y.is_l()) std::swap(x, y);
    if (x.is_l())  // L_i M_j = alpha f(M_j) L_i
      return Element::term(x, p.alpha * p.f.at(y.index));
    Element out;
    Scalar ff = p.f.at(x.index) * p.f.at(y.index);
    if (!ff.is_zero())
      for (const auto& [q, cq] : p.c) out.add_term(L(q), ff * cq);
    p.for_each_d(x.index, y.index, [&](std::int64_t q, const Scalar& v) { out.add_term(M(q), v); });
    return out;
  }

  ProductKind kind_;
  std::optional<TPParams> params_;
};

/// Bilinear extension of a basis product.
template <BinaryProduct P>
Element product_eval(const P& product, const Element& x, const Element& y) {
  Element out;
  for (const auto& [sx, cx] : x)
    for (const auto& [sy, cy] : y) out.add_scaled(product(sx, sy), cx * cy);
  return out;
}

}  // namespace translie
