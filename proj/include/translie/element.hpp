#pragma once

#include <algorithm>
#include <cstdlib>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "translie/basis.hpp"
#include "translie/scalar.hpp"

namespace translie {

/// Finite formal linear combination of basis symbols. Terms are kept sorted
/// by symbol and no stored coefficient is ever zero.
class Element {
 public:
  using Term = std::pair<BasisSymbol, Scalar>;

  Element() = default;
  Element(BasisSymbol s) { terms_.emplace_back(s, Scalar(1)); }  // NOLINT(google-explicit-constructor)
  Element(std::initializer_list<Term> terms) {
    for (const auto& [s, c] : terms) add_term(s, c);
  }

  static Element term(BasisSymbol s, Scalar c) {
    Element e;
    e.add_term(s, std::move(c));
    return e;
  }

  const std::vector<Term>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  Scalar coefficient(BasisSymbol s) const {
    auto it = find(s);
    return it == terms_.end() ? Scalar() : it->second;
  }

  bool contains(BasisSymbol s) const { return find(s) != terms_.end(); }

  void add_term(BasisSymbol s, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), s,
                               [](const Term& t, const BasisSymbol& key) { return t.first < key; });
    if (it != terms_.end() && it->first == s) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    } else {
      terms_.insert(it, Term{s, c});
    }
    check_invariants();
  }

  /// this += c * other
  void add_scaled(const Element& other, const Scalar& c) {
    if (c.is_zero() || other.empty()) return;
    std::vector<Term> merged;
    merged.reserve(terms_.size() + other.terms_.size());
    auto a = terms_.begin();
    auto b = other.terms_.begin();
    while (a != terms_.end() || b != other.terms_.end()) {
      if (b == other.terms_.end() || (a != terms_.end() && a->first < b->first)) {
        merged.push_back(std::move(*a++));
      } else if (a == terms_.end() || b->first < a->first) {
        merged.emplace_back(b->first, b->second * c);
        ++b;
      } else {
        Scalar sum = a->second + b->second * c;
        if (!sum.is_zero()) merged.emplace_back(a->first, std::move(sum));
        ++a;
        ++b;
      }
    }
    terms_ = std::move(merged);
    check_invariants();
  }

  Element& operator+=(const Element& o) {
    add_scaled(o, Scalar(1));
    return *this;
  }
  Element& operator-=(const Element& o) {
    add_scaled(o, Scalar(-1));
    return *this;
  }
  Element& operator*=(const Scalar& c) {
    if (c.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& t : terms_) t.second *= c;
    return *this;
  }

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator-(Element a) { return a *= Scalar(-1); }
  friend Element operator*(const Scalar& c, Element a) { return a *= c; }
  friend Element operator*(Element a, const Scalar& c) { return a *= c; }

  friend bool operator==(const Element& a, const Element& b) { return a.terms_ == b.terms_; }

  /// The smallest and largest index appearing in any term; undefined when empty.
  std::pair<std::int64_t, std::int64_t> index_range() const {
    std::int64_t lo = terms_.front().first.index;
    std::int64_t hi = lo;
    for (const auto& t : terms_) {
      lo = std::min(lo, t.first.index);
      hi = std::max(hi, t.first.index);
    }
    return {lo, hi};
  }

  void check_invariants() const {
#ifdef TRANSLIE_CHECK_INVARIANTS
    if (!invariants_hold()) std::abort();
#endif
  }

  bool invariants_hold() const {
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      if (terms_[i].second.is_zero()) return false;
      if (i > 0 && !(terms_[i - 1].first < terms_[i].first)) return false;
    }
    return true;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [s, c] : terms_) {
      if (!out.empty()) out += " + ";
      if (c == Scalar(1)) {
        out += s.to_string();
      } else {
        out += "(" + c.to_string() + ")" + s.to_string();
      }
    }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const Element& e) { return os << e.to_string(); }

 private:
  std::vector<Term>::const_iterator find(BasisSymbol s) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), s,
                               [](const Term& t, const BasisSymbol& key) { return t.first < key; });
    return (it != terms_.end() && it->first == s) ? it : terms_.end();
  }

  std::vector<Term> terms_;
};

/// a*x + b*y
inline Element element_combine(const Scalar& a, const Element& x, const Scalar& b, const Element& y) {
  Element out;
  out.add_scaled(x, a);
  out.add_scaled(y, b);
  return out;
}

}  // namespace translie
