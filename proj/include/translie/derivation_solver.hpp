#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "translie/bracket.hpp"
#include "translie/identity_lab.hpp"
#include "translie/linear_system.hpp"
#include "translie/operators.hpp"
#include "translie/window.hpp"

namespace translie {

enum class AnsatzKind { GradedDegree, FullWindow };

/// Unknown images of a linear map phi on the basis symbols of `domain`.
///
/// GradedDegree(g): phi(L_r) = a[r] L_{r+g} + b[r] M_{r+g},
///                  phi(M_r) = c[r] L_{r+g} + d[r] M_{r+g}.
/// FullWindow:      phi(L_r) = sum_i a[r,i] L_i + sum_j b[r,j] M_j,
///                  phi(M_r) = sum_i c[r,i] L_i + sum_j d[r,j] M_j, i,j in image.
///
/// Columns are grouped by tag (all a, then b, c, d), then by r, then by image
/// index.
class Ansatz {
 public:
  static Ansatz graded(std::int64_t degree, Window domain) {
    return Ansatz(AnsatzKind::GradedDegree, degree, domain, domain);
  }
  static Ansatz full_window(Window domain, Window image) { return Ansatz(AnsatzKind::FullWindow, 0, domain, image); }

  AnsatzKind kind() const { return kind_; }
  std::int64_t degree() const { return degree_; }
  const Window& domain() const { return domain_; }
  const Window& image() const { return image_; }

  std::size_t unknown_count() const { return 4 * block_size(); }

  std::vector<UnknownId> unknowns() const {
    std::vector<UnknownId> out;
    out.reserve(unknown_count());
    for (char tag : {'a', 'b', 'c', 'd'})
      for (auto r : domain_.indices()) {
        if (kind_ == AnsatzKind::GradedDegree) {
          out.push_back({std::string(1, tag), {r}});
        } else {
          for (auto i : image_.indices()) out.push_back({std::string(1, tag), {r, i}});
        }
      }
    return out;
  }

  bool covers(BasisSymbol s) const { return domain_.contains(s); }

  /// (column, image symbol) pairs making up phi(s); s must be covered.
  std::vector<std::pair<std::size_t, BasisSymbol>> image_terms(BasisSymbol s) const {
    std::vector<std::pair<std::size_t, BasisSymbol>> out;
    const std::size_t to_l = s.is_l() ? 0 : 2;  // a or c
    const std::size_t to_m = to_l + 1;           // b or d
    if (kind_ == AnsatzKind::GradedDegree) {
      const auto target = checked_add(s.index, degree_);
      out.emplace_back(column(to_l, s.index, 0), L(target));
      out.emplace_back(column(to_m, s.index, 0), M(target));
    } else {
      out.reserve(2 * image_.count());
      for (auto i : image_.indices()) out.emplace_back(column(to_l, s.index, i), L(i));
      for (auto j : image_.indices()) out.emplace_back(column(to_m, s.index, j), M(j));
    }
    return out;
  }

  /// Source symbol and image symbol an unknown connects.
  std::pair<BasisSymbol, BasisSymbol> describe(const UnknownId& id) const {
    const char tag = id.tag.at(0);
    const std::int64_t r = id.subscripts.at(0);
    const std::int64_t target = kind_ == AnsatzKind::GradedDegree ? checked_add(r, degree_) : id.subscripts.at(1);
    const BasisSymbol source = (tag == 'a' || tag == 'b') ? L(r) : M(r);
    const BasisSymbol image = (tag == 'a' || tag == 'c') ? L(target) : M(target);
    return {source, image};
  }

 private:
  Ansatz(AnsatzKind kind, std::int64_t degree, Window domain, Window image)
      : kind_(kind), degree_(degree), domain_(domain), image_(image) {}

  std::size_t per_source() const { return kind_ == AnsatzKind::GradedDegree ? 1 : image_.count(); }
  std::size_t block_size() const { return domain_.count() * per_source(); }

  std::size_t column(std::size_t tag, std::int64_t r, std::int64_t i) const {
    std::size_t within = kind_ == AnsatzKind::GradedDegree ? 0 : static_cast<std::size_t>(i - image_.lo());
    return tag * block_size() + static_cast<std::size_t>(r - domain_.lo()) * per_source() + within;
  }

  AnsatzKind kind_;
  std::int64_t degree_;
  Window domain_;
  Window image_;
};

/// Rows of phi([x,y,z]) = 1/3([phi x,y,z] + [x,phi y,z] + [x,y,phi z]),
/// scaled by 3, for every strictly increasing basis triple of eq_window whose
/// arguments and bracket output are all covered by the ansatz. One row per
/// output coordinate; rows ordered by triple, then coordinate.
template <TernaryBracket B>
ConstraintSystem assemble_system(const B& bracket, const Ansatz& ansatz, const Window& eq_window) {
  ConstraintSystem sys(ansatz.unknowns());
  const auto symbols = eq_window.symbols();
  const std::size_t n = symbols.size();
  std::size_t qualifying = 0;
  for (std::size_t a = 0; a < n; ++a) {
    if (!ansatz.covers(symbols[a])) continue;
    for (std::size_t b = a + 1; b < n; ++b) {
      if (!ansatz.covers(symbols[b])) continue;
      for (std::size_t c = b + 1; c < n; ++c) {
        if (!ansatz.covers(symbols[c])) continue;
        const std::array<BasisSymbol, 3> triple{symbols[a], symbols[b], symbols[c]};
        const Element out = bracket(triple[0], triple[1], triple[2]);
        bool representable = true;
        for (const auto& t : out)
          if (!ansatz.covers(t.first)) representable = false;
        if (!representable) continue;
        ++qualifying;

        std::map<BasisSymbol, SparseRow> acc;
        for (const auto& [s, coef] : out)
          for (const auto& [col, img] : ansatz.image_terms(s)) acc[img].emplace_back(col, coef * Scalar(3));
        for (std::size_t slot = 0; slot < 3; ++slot) {
          for (const auto& [col, img] : ansatz.image_terms(triple[slot])) {
            auto args = triple;
            args[slot] = img;
            for (const auto& [s, coef] : bracket(args[0], args[1], args[2])) acc[s].emplace_back(col, -coef);
          }
        }
        for (auto& [coord, row] : acc) sys.add_row(std::move(row), RowOrigin{{triple.begin(), triple.end()}, coord});
      }
    }
  }
  if (qualifying == 0)
    throw EmptySystem("no basis triple of " + eq_window.to_string() + " is representable in the ansatz");
  return sys;
}

/// Coordinates of the truncation of `op` to the ansatz: the coefficient of
/// each unknown's image symbol in op(source).
template <LinearMap Op>
DenseVector ansatz_coordinates(const Ansatz& ansatz, const Op& op) {
  DenseVector v;
  const auto ids = ansatz.unknowns();
  v.reserve(ids.size());
  std::map<BasisSymbol, Element> cache;
  for (const auto& id : ids) {
    auto [source, image] = ansatz.describe(id);
    auto it = cache.find(source);
    if (it == cache.end()) it = cache.emplace(source, op(source)).first;
    v.push_back(it->second.coefficient(image));
  }
  return v;
}

/// The linear map encoded by one solution vector, defined on the source
/// symbols of its unknowns.
inline LinearOperator materialize_operator(const Ansatz& ansatz, const std::vector<UnknownId>& unknowns,
                                           const DenseVector& v) {
  std::map<BasisSymbol, Element> images;
  for (std::size_t i = 0; i < unknowns.size(); ++i) {
    auto [source, image] = ansatz.describe(unknowns[i]);
    images[source].add_term(image, v[i]);
  }
  return LinearOperator::custom(std::move(images));
}

/// D(L_r) = h L_r,  D(M_r) = f(M_r) sum_i c_i L_i + sum_j d[r,j] M_j with
/// d[r,j] = diagonal [r = j] + extra_d[r,j]. A one-third derivation of
/// A_{f,k} exactly when sum_j f(M_j) d[r,j] = h f(M_r) for every r.
struct AfkDerivationFamily {
  FiniteFunctional f;
  Scalar h;
  Scalar diagonal;
  std::map<std::int64_t, Scalar> c;
  std::map<std::pair<std::int64_t, std::int64_t>, Scalar> extra_d;

  Scalar d(std::int64_t r, std::int64_t j) const {
    Scalar out = r == j ? diagonal : Scalar();
    auto it = extra_d.find({r, j});
    if (it != extra_d.end()) out += it->second;
    return out;
  }

  /// sum_j f(M_j) d[r,j] - h f(M_r)
  Scalar constraint_residual(std::int64_t r) const {
    Scalar acc = diagonal * f.at(r) - h * f.at(r);
    for (auto it = extra_d.lower_bound({r, INT64_MIN}); it != extra_d.end() && it->first.first == r; ++it)
      acc += f.at(it->first.second) * it->second;
    return acc;
  }

  Element operator()(BasisSymbol s) const {
    if (s.is_l()) return Element::term(s, h);
    Element out;
    Scalar fr = f.at(s.index);
    if (!fr.is_zero())
      for (const auto& [i, ci] : c) out.add_term(L(i), fr * ci);
    out.add_term(s, diagonal);
    for (auto it = extra_d.lower_bound({s.index, INT64_MIN}); it != extra_d.end() && it->first.first == s.index; ++it)
      out.add_term(M(it->first.second), it->second);
    return out;
  }
};

struct ClassificationVerdict {
  bool matches = false;
  std::string expected_description;
  std::size_t core_dimension = 0;
  std::size_t expected_dimension = 0;
  std::size_t window_dimension = 0;
  std::size_t row_count = 0;
  /// Indices into core_space.basis with the first failed pattern condition.
  std::vector<std::pair<std::size_t, std::string>> offending_vectors;
  SolutionSpace core_space;
};

struct SolveOptions {
  /// Required distance between core and domain edges; defaults to half the
  /// domain radius.
  std::optional<std::int64_t> boundary_margin;
};

namespace detail {

inline std::optional<std::string> graded_pattern_mismatch(const SolutionSpace& space, const DenseVector& v) {
  std::optional<Scalar> level;
  for (std::size_t i = 0; i < space.unknowns.size(); ++i) {
    const auto& id = space.unknowns[i];
    const char tag = id.tag[0];
    if (tag == 'b' || tag == 'c') {
      if (!v[i].is_zero()) return id.to_string() + " is nonzero";
      continue;
    }
    if (!level) level = v[i];
    if (v[i] != *level) return id.to_string() + " differs from the common value " + level->to_string();
  }
  if (!level || level->is_zero()) return "a and d vanish";
  return std::nullopt;
}

inline std::optional<std::string> afk_pattern_mismatch(const SolutionSpace& space, const DenseVector& v,
                                                       const FiniteFunctional& f, const Window& core) {
  std::map<std::pair<char, std::int64_t>, std::map<std::int64_t, Scalar>> rows;
  for (std::size_t i = 0; i < space.unknowns.size(); ++i) {
    const auto& id = space.unknowns[i];
    rows[{id.tag[0], id.subscripts[0]}][id.subscripts[1]] = v[i];
  }
  const Scalar h = rows[{'a', core.lo()}][core.lo()];
  std::optional<std::int64_t> anchor;
  for (auto r : core.indices())
    if (!f.at(r).is_zero()) {
      anchor = r;
      break;
    }
  for (auto r : core.indices()) {
    for (const auto& [i, x] : rows[{'a', r}]) {
      const Scalar expected = i == r ? h : Scalar();
      if (x != expected) return "a[" + std::to_string(r) + "," + std::to_string(i) + "] != h[r=i]";
    }
    for (const auto& [j, x] : rows[{'b', r}])
      if (!x.is_zero()) return "b[" + std::to_string(r) + "," + std::to_string(j) + "] is nonzero";
    for (const auto& [i, x] : rows[{'c', r}]) {
      Scalar expected;
      if (anchor) expected = rows[{'c', *anchor}][i] / f.at(*anchor) * f.at(r);
      if (x != expected) return "c[" + std::to_string(r) + "," + std::to_string(i) + "] is not c_i f(M_r)";
    }
    Scalar marginal;
    for (const auto& [j, x] : rows[{'d', r}]) marginal += f.at(j) * x;
    if (marginal != h * f.at(r)) return "sum_j f(M_j) d[" + std::to_string(r) + ",j] != h f(M_r)";
  }
  return std::nullopt;
}

}  // namespace detail

/// Solves the windowed one-third-derivation system, projects onto the core
/// unknowns and compares with the closed-form classification:
///  - A_omega^delta, graded degree g: one-dimensional, spanned by D_g;
///  - A_{f,k}, full window: D(L_r) = h L_r, D(M_r) = f(M_r) sum c_i L_i +
///    sum d[r,j] M_j with sum_j f(M_j) d[r,j] = h f(M_r).
inline ClassificationVerdict solve_and_classify(const BracketDef& bracket, const Ansatz& ansatz,
                                                const Window& eq_window, const Window& core,
                                                const SolveOptions& opts = {}) {
  const Window& domain = ansatz.domain();
  const std::int64_t margin = opts.boundary_margin.value_or(domain.width() / 4);
  if (!domain.contains(core) || core.lo() - domain.lo() < margin || domain.hi() - core.hi() < margin)
    throw DomainError("core " + core.to_string() + " must sit inside " + domain.to_string() + " with margin " +
                      std::to_string(margin));

  const bool graded = ansatz.kind() == AnsatzKind::GradedDegree;
  if (graded && bracket.kind() != BracketKind::AOmegaDelta)
    throw DomainError("graded solving is only offered for a-omega-delta");
  if (!graded && bracket.kind() != BracketKind::AFK)
    throw DomainError("full-window classification is only offered for a-f-k");
  if (!graded) {
    if (!ansatz.image().contains(core)) throw DomainError("image window must contain the core");
    for (auto j : bracket.f().support())
      if (!ansatz.image().contains(j)) throw DomainError("support of f must lie in the image window");
  }

  const ConstraintSystem sys = assemble_system(bracket, ansatz, eq_window);
  const SolutionSpace full = nullspace(sys);

  std::vector<UnknownId> keep;
  for (const auto& id : full.unknowns)
    if (core.contains(id.subscripts[0])) keep.push_back(id);

  ClassificationVerdict verdict;
  verdict.row_count = sys.row_count();
  verdict.window_dimension = full.dimension();
  verdict.core_space = project_solution(full, keep);
  verdict.core_dimension = verdict.core_space.dimension();

  for (std::size_t i = 0; i < verdict.core_space.basis.size(); ++i) {
    const auto& v = verdict.core_space.basis[i];
    auto mismatch = graded ? detail::graded_pattern_mismatch(verdict.core_space, v)
                           : detail::afk_pattern_mismatch(verdict.core_space, v, bracket.f(), core);
    if (mismatch) verdict.offending_vectors.emplace_back(i, *mismatch);
  }

  if (graded) {
    verdict.expected_dimension = 1;
    verdict.expected_description = "span of D_" + std::to_string(ansatz.degree()) + ": a = d constant, b = c = 0";
  } else {
    const std::size_t core_n = core.count();
    const std::size_t image_n = ansatz.image().count();
    bool f_on_core = false;
    for (auto r : core.indices()) f_on_core = f_on_core || !bracket.f().at(r).is_zero();
    verdict.expected_dimension = 1 + (f_on_core ? image_n : 0) + core_n * image_n - core_n;
    verdict.expected_description =
        "D(L_r) = h L_r, D(M_r) = f(M_r) sum c_i L_i + sum d[r,j] M_j, sum_j f(M_j) d[r,j] = h f(M_r)";
  }
  verdict.matches = verdict.offending_vectors.empty() && verdict.core_dimension == verdict.expected_dimension;
  return verdict;
}

/// Checks that a closed-form family member really is a one-third derivation.
template <LinearMap Op>
CheckReport forward_check_family(const BracketDef& bracket, const Op& family, const Window& w,
                                 const CheckOptions& opts = {}) {
  CheckReport r = check_one_third_derivation(bracket, family, w, opts);
  r.law = "forward-family";
  r.anchor = "one-third-derivation-family";
  return r;
}

/// Commutativity L_i M_j = M_j L_i for products L_i . y = sum_k alpha[i,k] D_k(y)
/// and M_j . y = sum_k beta[j,k] D_k(y), over i, j in w_basis, k in w_index.
/// The only solution is zero. With include_m_rows = false the M-coordinate
/// comparisons are dropped, leaving alpha unconstrained.
inline SolutionSpace tp_triviality_solver(const Window& w_index, const Window& w_basis, bool include_m_rows = true) {
  ConstraintSystem sys;
  for (const char* tag : {"alpha", "beta"})
    for (auto i : w_basis.indices())
      for (auto k : w_index.indices()) sys.add_unknown({tag, {i, k}});
  for (auto i : w_basis.indices())
    for (auto j : w_basis.indices()) {
      std::map<BasisSymbol, SparseRow> acc;
      for (auto k : w_index.indices()) {
        acc[M(checked_add(k, j))].emplace_back(sys.column({"alpha", {i, k}}), Scalar(1));
        acc[L(checked_add(k, i))].emplace_back(sys.column({"beta", {j, k}}), Scalar(-1));
      }
      for (auto& [coord, row] : acc) {
        if (coord.is_m() && !include_m_rows) continue;
        sys.add_row(std::move(row), RowOrigin{{L(i), M(j)}, coord});
      }
    }
  return nullspace(sys);
}

}  // namespace translie
