#include "heightfilter/subsystem.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "heightfilter/errors.hpp"
#include "heightfilter/linalg.hpp"

namespace heightfilter {

namespace {

using CoeffSet = std::unordered_set<std::vector<int>, VecHash>;

CoeffSet coeff_set(const std::vector<Root>& roots) {
  CoeffSet s;
  s.reserve(roots.size() * 2);
  for (const auto& r : roots) s.insert(r.coeffs);
  return s;
}

std::vector<std::vector<int>> columns_of(const std::vector<Root>& roots) {
  std::vector<std::vector<int>> cols;
  cols.reserve(roots.size());
  for (const auto& r : roots) cols.push_back(r.coeffs);
  return cols;
}

}  // namespace

int HeightSubsystem::sub_height_of(const Root& beta) const {
  for (std::size_t i = 0; i < positive.size(); ++i)
    if (positive[i] == beta) return sub_heights[i];
  throw std::domain_error("root is not in R^+(m)");
}

std::vector<Root> extract_base(const RootSystem& rs, const std::vector<Root>& positive) {
  (void)rs;
  const CoeffSet members = coeff_set(positive);
  std::vector<Root> base;
  std::vector<int> diff;
  for (const auto& beta : positive) {
    bool decomposable = false;
    for (const auto& gamma : positive) {
      if (gamma.height >= beta.height) continue;
      diff = beta.coeffs;
      bool nonneg = true;
      for (std::size_t k = 0; k < diff.size(); ++k) {
        diff[k] -= gamma.coeffs[k];
        if (diff[k] < 0) nonneg = false;
      }
      if (nonneg && members.count(diff)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) base.push_back(beta);
  }
  return base;
}

std::vector<Root> base_of(const HeightSubsystem& sub) {
  return extract_base(*sub.parent, sub.positive);
}

HeightSubsystem r_of_m(const RootSystem& rs, int m) {
  if (m <= 0) throw std::domain_error("r_of_m requires m >= 1");

  HeightSubsystem sub;
  sub.parent = &rs;
  sub.m = m;
  for (const auto& r : rs.positive_roots()) {
    if (r.height % m == 0) sub.positive.push_back(r);
    if (r.height == m) sub.slice_m.push_back(r);
  }
  sub.base = extract_base(rs, sub.positive);

  // R_m is contained in the base: no difference of two height-m roots is
  // a root, so none of them decomposes.  The base may contain at most one
  // further root, of height 2m.
  std::vector<Root> extra;
  for (const auto& b : sub.base)
    if (b.height != m) extra.push_back(b);
  if (sub.base.size() != sub.slice_m.size() + extra.size())
    throw internal_error("height-m slice is not contained in the extracted base");
  if (extra.size() > 1) throw internal_error("more than one base root outside R_m");
  if (!extra.empty()) {
    if (extra[0].height != 2 * m) throw internal_error("extra base root does not have height 2m");
    sub.delta = extra[0];
  }

  // Every element of R^+(m) must expand over the base with nonnegative
  // integer coefficients; the expansion is obtained by an exact linear
  // solve, which catches any extraction defect immediately.
  if (!sub.positive.empty()) {
    ColumnSolver solver(rs.dim(), columns_of(sub.base));
    if (!solver.full_column_rank()) throw internal_error("extracted base is linearly dependent");
    sub.expansions.reserve(sub.positive.size());
    sub.sub_heights.reserve(sub.positive.size());
    for (const auto& beta : sub.positive) {
      const auto x = solver.solve(beta.coeffs);
      if (!x) throw internal_error("R^+(m) element outside the span of its base");
      std::vector<int> exp(x->size());
      int total = 0;
      for (std::size_t j = 0; j < x->size(); ++j) {
        const Rational& q = (*x)[j];
        if (!is_integer(q) || q < 0)
          throw internal_error("non-integral or negative base expansion in R(m)");
        exp[j] = static_cast<int>(numerator(q));
        total += exp[j];
      }
      sub.expansions.push_back(std::move(exp));
      sub.sub_heights.push_back(total);
    }
  }

  // Base roots must be indecomposable with pairwise non-positive pairings.
  for (std::size_t i = 0; i < sub.base.size(); ++i)
    for (std::size_t j = i + 1; j < sub.base.size(); ++j)
      if (rs.cartan_pairing(sub.base[i], sub.base[j]) > 0)
        throw internal_error("positive pairing between base roots of R(m)");

  return sub;
}

DynkinType classify_roots(const RootSystem& rs, const std::vector<Root>& base,
                          const std::optional<Root>& delta) {
  std::vector<ComponentLabel> labels;
  for (const auto& comp : pairing_components(rs, base)) {
    ComponentLabel label = recognize_component(rs, comp);
    if (delta && std::find(comp.begin(), comp.end(), *delta) != comp.end()) label.dagger = true;
    labels.push_back(label);
  }
  return DynkinType::of(std::move(labels));
}

DynkinType classify(const HeightSubsystem& sub) {
  return classify_roots(*sub.parent, sub.base, sub.delta);
}

bool is_levi_type(const HeightSubsystem& sub) {
  const RootSystem& rs = *sub.parent;
  if (sub.empty()) return true;
  const int r = static_cast<int>(sub.base.size());
  if (r == rs.dim()) {
    // Full span: R cap span = R, so Levi exactly when R(m) is all of R.
    return sub.positive.size() == rs.positive_roots().size();
  }
  ColumnSolver solver(rs.dim(), columns_of(sub.base));
  const CoeffSet members = coeff_set(sub.positive);
  for (const auto& beta : rs.positive_roots()) {
    if (members.count(beta.coeffs)) continue;
    if (solver.in_span(beta.coeffs)) return false;
  }
  return true;
}

bool rm_is_partial_base(const RootSystem& rs, int m) {
  if (m <= 0) throw std::domain_error("rm_is_partial_base requires m >= 1");
  std::vector<Root> slice;
  for (const auto& r : rs.positive_roots())
    if (r.height == m) slice.push_back(r);
  if (slice.empty()) return true;

  for (std::size_t i = 0; i < slice.size(); ++i) {
    for (std::size_t j = i + 1; j < slice.size(); ++j) {
      if (rs.cartan_pairing(slice[i], slice[j]) > 0) return false;
      std::vector<int> diff(slice[i].coeffs.size());
      for (std::size_t k = 0; k < diff.size(); ++k)
        diff[k] = slice[i].coeffs[k] - slice[j].coeffs[k];
      if (rs.is_root(diff)) return false;
    }
  }

  ColumnSolver solver(rs.dim(), columns_of(slice));
  if (!solver.full_column_rank()) return false;

  // R_m must be a base of R cap span(R_m): every root of the span
  // intersection expands with nonnegative integer coefficients.
  for (const auto& beta : rs.positive_roots()) {
    if (!solver.in_span(beta.coeffs)) continue;
    const auto x = solver.solve(beta.coeffs);
    if (!x) return false;
    for (const Rational& q : *x)
      if (!is_integer(q) || q < 0) return false;
  }
  return true;
}

}  // namespace heightfilter
