#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <set>

#include "translie/functional.hpp"

namespace translie {

using IndexTriple = std::array<std::int64_t, 3>;

/// Coefficients (alpha, c_p, d_{i,j,q}) of a commutative product on A_{f,k}:
///   L_i L_j = 0
///   L_i M_j = alpha f(M_j) L_i
///   M_i M_j = f(M_i) f(M_j) sum_p c_p L_p + sum_q d_{i,j,q} M_q
/// All maps are finitely supported; zero entries are never stored.
struct TPParams {
  Scalar alpha;
  std::map<std::int64_t, Scalar> c;
  std::map<IndexTriple, Scalar> d;
  FiniteFunctional f;
  std::int64_t k = 0;

  void set_c(std::int64_t p, const Scalar& v) {
    if (v.is_zero())
      c.erase(p);
    else
      c[p] = v;
  }

  void set_d(std::int64_t i, std::int64_t j, std::int64_t q, const Scalar& v) {
    if (v.is_zero())
      d.erase({i, j, q});
    else
      d[{i, j, q}] = v;
  }

  Scalar d_at(std::int64_t i, std::int64_t j, std::int64_t q) const {
    auto it = d.find({i, j, q});
    return it == d.end() ? Scalar() : it->second;
  }

  /// Calls fn(q, d_{i,j,q}) for every stored q.
  template <class Fn>
  void for_each_d(std::int64_t i, std::int64_t j, Fn&& fn) const {
    for (auto it = d.lower_bound({i, j, INT64_MIN}); it != d.end() && it->first[0] == i && it->first[1] == j; ++it)
      fn(it->first[2], it->second);
  }

  /// Every index appearing in supp f, supp c or any d triple.
  std::set<std::int64_t> support_indices() const {
    std::set<std::int64_t> out;
    for (const auto& kv : f.values()) out.insert(kv.first);
    for (const auto& kv : c) out.insert(kv.first);
    for (const auto& kv : d) out.insert(kv.first.begin(), kv.first.end());
    return out;
  }
};

}  // namespace translie
