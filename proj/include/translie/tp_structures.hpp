#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "translie/errors.hpp"
#include "translie/product.hpp"
#include "translie/tp_params.hpp"
#include "translie/window.hpp"

namespace translie {

struct ParamWitness {
  std::vector<std::int64_t> indices;
  Scalar residual;
};

/// Violations of the three constraint families on (alpha, c, d):
///   symmetry  d[i,j,q] = d[j,i,q]
///   marginal  sum_q f(M_q) d[i,j,q] = alpha f(M_i) f(M_j)
///   exchange  sum_q d[r,s,q] d[q,t,p] = sum_q d[s,t,q] d[q,r,p]
struct TPValidationReport {
  std::vector<ParamWitness> symmetry;
  std::vector<ParamWitness> marginal;
  std::vector<ParamWitness> exchange;

  bool valid() const { return symmetry.empty() && marginal.empty() && exchange.empty(); }
};

class InvalidParams : public Error {
 public:
  explicit InvalidParams(TPValidationReport report)
      : Error("transposed Poisson parameters violate their constraints"), report_(std::move(report)) {}
  const TPValidationReport& report() const { return report_; }

 private:
  TPValidationReport report_;
};

/// Checks the constraints over the index closure of the supports. Outside
/// that set every term of every constraint vanishes, so the check is complete.
inline TPValidationReport validate_params(const TPParams& p) {
  TPValidationReport out;
  const auto support = p.support_indices();
  const std::vector<std::int64_t> idx(support.begin(), support.end());

  for (const auto& [key, v] : p.d) {
    const auto& [i, j, q] = key;
    Scalar diff = v - p.d_at(j, i, q);
    if (!diff.is_zero()) out.symmetry.push_back({{i, j, q}, diff});
  }

  for (auto i : idx)
    for (auto j : idx) {
      Scalar acc;
      p.for_each_d(i, j, [&](std::int64_t q, const Scalar& v) { acc += p.f.at(q) * v; });
      acc -= p.alpha * p.f.at(i) * p.f.at(j);
      if (!acc.is_zero()) out.marginal.push_back({{i, j}, acc});
    }

  for (auto r : idx)
    for (auto s : idx)
      for (auto t : idx)
        for (auto q_out : idx) {
          Scalar lhs, rhs;
          p.for_each_d(r, s, [&](std::int64_t q, const Scalar& v) { lhs += v * p.d_at(q, t, q_out); });
          p.for_each_d(s, t, [&](std::int64_t q, const Scalar& v) { rhs += v * p.d_at(q, r, q_out); });
          Scalar diff = lhs - rhs;
          if (!diff.is_zero()) out.exchange.push_back({{r, s, t, q_out}, diff});
        }
  return out;
}

/// d[i,j,p] = d_p f(M_i) f(M_j) and alpha = sum_q f(M_q) d_q.
inline TPParams build_example_family(const FiniteFunctional& f, const std::map<std::int64_t, Scalar>& d_seq,
                                     const std::map<std::int64_t, Scalar>& c, std::int64_t k) {
  TPParams p;
  p.f = f;
  p.k = k;
  for (const auto& [q, v] : c) p.set_c(q, v);
  for (const auto& [q, dq] : d_seq) p.alpha += f.at(q) * dq;
  for (const auto& [i, fi] : f.values())
    for (const auto& [j, fj] : f.values())
      for (const auto& [q, dq] : d_seq) p.set_d(i, j, q, dq * fi * fj);
  return p;
}

/// The multiplication table as a ProductDef; throws InvalidParams when the
/// constraints fail.
inline ProductDef tp_product(const TPParams& p) {
  auto report = validate_params(p);
  if (!report.valid()) throw InvalidParams(std::move(report));
  return ProductDef::unchecked_tp_family(p);
}

enum class PoissonClass { PoissonAndTransposed, TransposedOnly };

inline std::string to_string(PoissonClass c) {
  return c == PoissonClass::PoissonAndTransposed ? "PoissonAndTransposed" : "TransposedOnly";
}

/// The structure is also Poisson exactly when alpha = 0 and every c_p = 0.
inline PoissonClass classify_poisson(const TPParams& p) {
  auto report = validate_params(p);
  if (!report.valid()) throw InvalidParams(std::move(report));
  return p.alpha.is_zero() && p.c.empty() ? PoissonClass::PoissonAndTransposed : PoissonClass::TransposedOnly;
}

/// Smallest window holding every support index and every r+s+k for r, s in
/// the supports, padded by |k|. Products and brackets of symbols outside it
/// reduce to the L_i M_j rule.
inline Window support_closure(const TPParams& p) {
  const auto support = p.support_indices();
  if (support.empty()) return {0, 0};
  std::int64_t lo = *support.begin();
  std::int64_t hi = *support.rbegin();
  for (auto r : support)
    for (auto s : support) {
      auto img = checked_add(r, s, p.k);
      lo = std::min(lo, img);
      hi = std::max(hi, img);
    }
  const std::int64_t pad = p.k < 0 ? checked_neg(p.k) : p.k;
  return Window(lo, hi).padded(pad);
}

}  // namespace translie
