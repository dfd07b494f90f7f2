#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "translie/element.hpp"

namespace translie {

/// Linear functional vanishing on every L_r with finitely many nonzero
/// values f(M_r).
class FiniteFunctional {
 public:
  FiniteFunctional() = default;
  FiniteFunctional(std::initializer_list<std::pair<const std::int64_t, Scalar>> values) {
    for (const auto& [r, v] : values) set(r, v);
  }
  explicit FiniteFunctional(const std::map<std::int64_t, Scalar>& values) {
    for (const auto& [r, v] : values) set(r, v);
  }

  void set(std::int64_t r, const Scalar& v) {
    if (v.is_zero())
      values_.erase(r);
    else
      values_[r] = v;
  }

  /// f(M_r)
  Scalar at(std::int64_t r) const {
    auto it = values_.find(r);
    return it == values_.end() ? Scalar() : it->second;
  }

  Scalar operator()(BasisSymbol s) const { return s.is_m() ? at(s.index) : Scalar(); }

  Scalar operator()(const Element& x) const {
    Scalar acc;
    for (const auto& [s, c] : x)
      if (s.is_m()) acc += c * at(s.index);
    return acc;
  }

  bool is_zero() const { return values_.empty(); }
  const std::map<std::int64_t, Scalar>& values() const { return values_; }

  std::vector<std::int64_t> support() const {
    std::vector<std::int64_t> out;
    for (const auto& kv : values_) out.push_back(kv.first);
    return out;
  }

  friend bool operator==(const FiniteFunctional&, const FiniteFunctional&) = default;

 private:
  std::map<std::int64_t, Scalar> values_;
};

inline Scalar functional_eval(const FiniteFunctional& f, const Element& x) { return f(x); }

}  // namespace translie
