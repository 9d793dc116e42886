#include "heightfilter/dm.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "heightfilter/errors.hpp"
#include "heightfilter/linalg.hpp"

namespace heightfilter {

Rational weight_pairing(const RootSystem& rs, const WeightVector& w, const Root& beta) {
  // (w, beta) through the symmetrized form, evaluated as sum over
  // coordinates of w_i * 6*(alpha_i, beta) / 6.
  Rational total = 0;
  const int d = rs.dim();
  std::vector<int> unit(d, 0);
  for (int i = 0; i < d; ++i) {
    if (w.coords[i] == 0) continue;
    unit.assign(d, 0);
    unit[i] = 1;
    total += w.coords[i] * Rational(rs.pairing6(unit, beta.coeffs), 6);
  }
  return total;
}

namespace {

WeightVector half_sum_of_coroots(const RootSystem& rs, const std::vector<Root>& roots) {
  WeightVector w;
  w.coords.assign(rs.dim(), Rational(0));
  for (const auto& beta : roots) {
    // beta^vee = 2 beta / (beta, beta); (beta,beta) = pairing6(beta,beta)/6
    const Rational scale(12, rs.pairing6(beta, beta));
    for (int i = 0; i < rs.dim(); ++i)
      if (beta.coeffs[i] != 0) w.coords[i] += scale * beta.coeffs[i];
  }
  for (auto& c : w.coords) c /= 2;
  return w;
}

}  // namespace

WeightVector rho(const RootSystem& rs) {
  WeightVector w = half_sum_of_coroots(rs, rs.positive_roots());
  for (int i = 0; i < rs.dim(); ++i)
    if (weight_pairing(rs, w, rs.simple_root(i)) != 1)
      throw internal_error("rho does not pair to 1 with a simple root");
  return w;
}

WeightVector rho_sub(const HeightSubsystem& sub) {
  const RootSystem& rs = *sub.parent;
  WeightVector w = half_sum_of_coroots(rs, sub.positive);
  for (const auto& gamma : sub.base)
    if (weight_pairing(rs, w, gamma) != 1)
      throw internal_error("rho_m does not pair to 1 with a base root");
  return w;
}

WeightVector fundamental_coweight(const HeightSubsystem& sub) {
  if (!sub.delta) throw std::domain_error("subsystem has no extra base root");
  const RootSystem& rs = *sub.parent;
  const int r = static_cast<int>(sub.base.size());

  // Solve Gram * c = e_delta over the base; scaling by 6 keeps the
  // system integral.
  std::vector<std::vector<int>> gram6(r, std::vector<int>(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      gram6[i][j] = static_cast<int>(rs.pairing6(sub.base[i], sub.base[j]));
  std::vector<std::vector<int>> cols(r, std::vector<int>(r));
  for (int j = 0; j < r; ++j)
    for (int i = 0; i < r; ++i) cols[j][i] = gram6[i][j];
  ColumnSolver solver(r, cols);
  if (!solver.full_column_rank()) throw internal_error("degenerate Gram matrix on a base");

  std::vector<int> rhs(r, 0);
  for (int i = 0; i < r; ++i)
    if (sub.base[i] == *sub.delta) rhs[i] = 6;
  const auto c = solver.solve(rhs);
  if (!c) throw internal_error("fundamental coweight solve failed");

  WeightVector w;
  w.coords.assign(rs.dim(), Rational(0));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < rs.dim(); ++j)
      if (sub.base[i].coeffs[j] != 0) w.coords[j] += (*c)[i] * sub.base[i].coeffs[j];

  for (const auto& gamma : sub.base) {
    const Rational expected = gamma == *sub.delta ? 1 : 0;
    if (weight_pairing(rs, w, gamma) != expected)
      throw internal_error("fundamental coweight pairing check failed");
  }
  return w;
}

DmReport compute_dm(const HeightSubsystem& sub) {
  if (sub.empty()) throw std::domain_error("compute_dm requires a nonempty subsystem");
  const RootSystem& rs = *sub.parent;

  DmReport report;
  report.m = sub.m;

  const WeightVector num = rho(rs);
  const WeightVector den = rho_sub(sub);

  Rational product = 1;
  Rational heights = 1;
  for (std::size_t i = 0; i < sub.positive.size(); ++i) {
    const Root& beta = sub.positive[i];
    const Rational top = weight_pairing(rs, num, beta);
    const Rational bottom = weight_pairing(rs, den, beta);
    // <rho, beta> = ht(beta) and <rho_m, beta> = subht(beta), checked
    // factor by factor so the two evaluations stay independent.
    if (top != beta.height) throw internal_error("<rho, beta> != ht(beta)");
    if (bottom != sub.sub_heights[i]) throw internal_error("<rho_m, beta> != subht(beta)");
    product *= top / (sub.m * bottom);
    heights *= Rational(beta.height, sub.m * static_cast<long>(sub.sub_heights[i]));
  }

  report.d_product = product;
  report.d_heights = heights;
  if (product != heights) throw internal_error("d_m evaluations disagree");
  if (!is_integer(product) || product <= 0)
    throw internal_error("d_m is not a positive integer");
  report.d = numerator(product);
  if ((report.d == 1) != sub.gamma_equals_slice())
    throw internal_error("d_m = 1 does not match Gamma(m) = R_m");
  return report;
}

namespace {

std::string describe_node(Family fam, int comp_rank, const std::string& kind) {
  std::ostringstream os;
  os << kind << " node of " << family_char(fam) << comp_rank;
  return os.str();
}

}  // namespace

std::optional<BigInt> dimension_oracle(const HeightSubsystem& sub, const DynkinType& type) {
  if (!sub.delta) return BigInt(1);
  const RootSystem& rs = *sub.parent;

  std::vector<Root> comp;
  for (const auto& c : pairing_components(rs, sub.base)) {
    if (std::find(c.begin(), c.end(), *sub.delta) != c.end()) {
      comp = c;
      break;
    }
  }
  if (comp.empty()) throw internal_error("delta is not in the base");
  const ComponentLabel label = recognize_component(rs, comp);
  {
    // consistency with the classification the caller already holds
    ComponentLabel want = label;
    want.dagger = true;
    const auto norm = normalize_component(want);
    if (std::find(type.components.begin(), type.components.end(), norm.front()) ==
        type.components.end())
      throw internal_error("daggered component mismatch between classify and oracle");
  }

  std::vector<Root> rest;
  for (const auto& r : comp)
    if (!(r == *sub.delta)) rest.push_back(r);

  const int q = label.rank - 1;  // rank of the component minus the delta node
  if (label.family == Family::A) {
    // delta must be an end node, i.e. the remainder stays connected
    const auto rest_comps = pairing_components(rs, rest);
    if (rest.empty() || rest_comps.size() == 1) return BigInt(label.rank + 1);
    throw unsupported_pattern("delta is an interior node of an A component");
  }
  if (label.family == Family::D) {
    const auto rest_comps = pairing_components(rs, rest);
    if (rest_comps.size() != 1)
      throw unsupported_pattern("removing delta disconnects its D component");
    const ComponentLabel rest_label = recognize_component(rs, rest_comps.front());
    if (rest_label.family == Family::A && rest_label.rank == q) {
      return BigInt(1) << q;  // spin node
    }
    if (rest_label.family == Family::D && rest_label.rank == q) {
      return BigInt(2) * (q + 1);  // vector node
    }
    throw unsupported_pattern("delta sits at an unsupported node of a D component");
  }
  throw unsupported_pattern("daggered component is not of type A or D");
}

DmReport dm_report(const HeightSubsystem& sub, const DynkinType& type) {
  DmReport report = compute_dm(sub);
  report.d_oracle = dimension_oracle(sub, type);
  if (*report.d_oracle != report.d)
    throw internal_error("dimension oracle disagrees with the d_m product");

  if (sub.delta) {
    const RootSystem& rs = *sub.parent;
    std::vector<Root> comp;
    for (const auto& c : pairing_components(rs, sub.base))
      if (std::find(c.begin(), c.end(), *sub.delta) != c.end()) comp = c;
    const ComponentLabel label = recognize_component(rs, comp);
    if (label.family == Family::A || label.rank == 1) {
      report.node = describe_node(Family::A, label.rank, "end");
    } else {
      report.node = describe_node(Family::D, label.rank,
                                  report.d == (BigInt(1) << (label.rank - 1)) ? "spin" : "vector");
    }
  }
  return report;
}

}  // namespace heightfilter
