#include "heightfilter/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "heightfilter/errors.hpp"

namespace heightfilter {

char family_char(Family f) { return static_cast<char>(f); }

std::optional<Family> family_from_char(char c) {
  switch (std::toupper(static_cast<unsigned char>(c))) {
    case 'A': return Family::A;
    case 'B': return Family::B;
    case 'C': return Family::C;
    case 'D': return Family::D;
    case 'E': return Family::E;
    case 'F': return Family::F;
    case 'G': return Family::G;
    default: return std::nullopt;
  }
}

SystemLabel::SystemLabel(Family f, int r) : family(f), rank(r) {
  const auto fail = [&](const char* constraint) {
    std::ostringstream os;
    os << "invalid rank " << r << " for family " << family_char(f) << " (" << constraint << ")";
    throw std::domain_error(os.str());
  };
  switch (f) {
    case Family::A: if (r < 1) fail("A requires rank >= 1"); break;
    case Family::B: if (r < 2) fail("B requires rank >= 2"); break;
    case Family::C: if (r < 2) fail("C requires rank >= 2"); break;
    case Family::D: if (r < 3) fail("D stores the parameter n of D_{n+1}; requires n >= 3"); break;
    case Family::E: if (r < 6 || r > 8) fail("E requires rank in {6,7,8}"); break;
    case Family::F: if (r != 4) fail("F requires rank 4"); break;
    case Family::G: if (r != 2) fail("G requires rank 2"); break;
  }
}

int SystemLabel::dimension() const {
  return family == Family::D ? rank + 1 : rank;
}

int SystemLabel::coxeter_number() const {
  switch (family) {
    case Family::A: return rank + 1;
    case Family::B:
    case Family::C:
    case Family::D: return 2 * rank;
    case Family::E: return rank == 6 ? 12 : (rank == 7 ? 18 : 30);
    case Family::F: return 12;
    case Family::G: return 6;
  }
  throw internal_error("unreachable family");
}

std::string SystemLabel::to_string() const {
  return std::string(1, family_char(family)) + std::to_string(dimension());
}

SystemLabel SystemLabel::parse(const std::string& text) {
  if (text.size() < 2) throw std::domain_error("cannot parse system label '" + text + "'");
  const auto fam = family_from_char(text[0]);
  if (!fam) throw std::domain_error("unknown family in system label '" + text + "'");
  int shown = 0;
  for (std::size_t i = 1; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw std::domain_error("cannot parse system label '" + text + "'");
    shown = shown * 10 + (text[i] - '0');
    if (shown > 1000) throw std::domain_error("rank out of range in '" + text + "'");
  }
  // The displayed rank of a D-system is n+1 for stored parameter n.
  return SystemLabel(*fam, *fam == Family::D ? shown - 1 : shown);
}

namespace {

struct DiagramSpec {
  std::vector<long> len6;                     // 6 * (alpha_i, alpha_i)
  std::vector<std::pair<int, int>> edges;
};

DiagramSpec diagram_spec(const SystemLabel& label) {
  const int d = label.dimension();
  DiagramSpec spec;
  const auto chain = [&](int from, int to) {
    for (int i = from; i < to; ++i) spec.edges.emplace_back(i, i + 1);
  };
  switch (label.family) {
    case Family::A:
      spec.len6.assign(d, 12);
      chain(0, d - 1);
      break;
    case Family::B:
      spec.len6.assign(d, 12);
      spec.len6[0] = 6;  // alpha_1 = eps_1 is short
      chain(0, d - 1);
      break;
    case Family::C:
      spec.len6.assign(d, 6);
      spec.len6[0] = 12;  // alpha_1 = 2 eps_1 is long
      chain(0, d - 1);
      break;
    case Family::D:
      // Nodes 0..n with alpha_0 = eps_1 + eps_0; both 0 and 1 attach to 2.
      spec.len6.assign(d, 12);
      spec.edges.emplace_back(0, 2);
      chain(1, d - 1);
      break;
    case Family::E:
      // Bourbaki numbering: 1-3-4-5-...-r in a chain, node 2 attached to 4.
      spec.len6.assign(d, 12);
      spec.edges.emplace_back(0, 2);
      spec.edges.emplace_back(1, 3);
      chain(2, d - 1);
      break;
    case Family::F:
      spec.len6 = {12, 12, 6, 6};  // a, b long; c, d short
      chain(0, 3);
      break;
    case Family::G:
      spec.len6 = {4, 12};  // alpha short, beta long
      spec.edges.emplace_back(0, 1);
      break;
  }
  return spec;
}

}  // namespace

RootSystem RootSystem::build(const SystemLabel& label) {
  RootSystem rs;
  rs.label_ = label;
  rs.dim_ = label.dimension();
  const int d = rs.dim_;

  const DiagramSpec spec = diagram_spec(label);
  rs.sym6_.assign(d, std::vector<int>(d, 0));
  for (int i = 0; i < d; ++i) rs.sym6_[i][i] = static_cast<int>(spec.len6[i]);
  for (const auto& [i, j] : spec.edges) {
    const int v = -static_cast<int>(std::max(spec.len6[i], spec.len6[j]) / 2);
    rs.sym6_[i][j] = v;
    rs.sym6_[j][i] = v;
  }

  rs.cartan_.assign(d, std::vector<int>(d, 0));
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      const long num = 2L * rs.sym6_[i][j];
      if (num % rs.sym6_[i][i] != 0) throw internal_error("non-integral Cartan entry");
      rs.cartan_[i][j] = static_cast<int>(num / rs.sym6_[i][i]);
    }
  }

  // Positive roots by height-increasing closure: beta + alpha_i enters
  // exactly when the alpha_i-string through beta continues upward, i.e.
  // q = p - <beta, alpha_i^vee> >= 1 with p the number of downward steps.
  std::unordered_map<std::vector<int>, int, VecHash> seen;
  std::vector<std::vector<std::vector<int>>> layers(2);
  for (int i = 0; i < d; ++i) {
    std::vector<int> e(d, 0);
    e[i] = 1;
    layers[1].push_back(e);
    seen.emplace(e, 1);
  }
  for (int h = 1; h < static_cast<int>(layers.size()) && !layers[h].empty(); ++h) {
    layers.resize(std::max<std::size_t>(layers.size(), h + 2));
    for (const auto& beta : layers[h]) {
      for (int i = 0; i < d; ++i) {
        int pairing = 0;
        for (int j = 0; j < d; ++j) pairing += rs.cartan_[i][j] * beta[j];
        int p = 0;
        std::vector<int> down = beta;
        for (;;) {
          down[i] -= 1;
          if (down[i] < 0 || !seen.count(down)) break;
          ++p;
        }
        if (p - pairing >= 1) {
          std::vector<int> up = beta;
          up[i] += 1;
          if (seen.emplace(up, h + 1).second) layers[h + 1].push_back(up);
        }
      }
    }
  }

  for (const auto& [coeffs, h] : seen) {
    Root r;
    r.coeffs = coeffs;
    r.height = h;
    r.long_root = rs.pairing6(coeffs, coeffs) == 12;
    rs.positive_.push_back(std::move(r));
  }
  std::sort(rs.positive_.begin(), rs.positive_.end());
  rs.index_.reserve(rs.positive_.size());
  for (int i = 0; i < static_cast<int>(rs.positive_.size()); ++i)
    rs.index_.emplace(rs.positive_[i].coeffs, i);

  rs.simple_index_.assign(d, -1);
  for (int i = 0; i < d; ++i) {
    std::vector<int> e(d, 0);
    e[i] = 1;
    rs.simple_index_[i] = rs.index_.at(e);
  }

  rs.coxeter_h_ = rs.positive_.back().height + 1;
  rs.pi_.assign(rs.coxeter_h_ + 1, 0);
  for (const auto& r : rs.positive_) rs.pi_[r.height] += 1;

  // Exponents from the height distribution: m occurs pi(m) - pi(m+1) times.
  for (int m = 1; m < rs.coxeter_h_; ++m) {
    const int mult = rs.pi_[m] - (m + 1 < static_cast<int>(rs.pi_.size()) ? rs.pi_[m + 1] : 0);
    if (mult < 0) throw internal_error("height distribution is not a partition dual");
    rs.exponents_.insert(rs.exponents_.end(), mult, m);
  }

  rs.check_invariants();
  return rs;
}

void RootSystem::check_invariants() const {
  if (coxeter_h_ != label_.coxeter_number())
    throw internal_error("Coxeter number mismatch for " + label_.to_string());
  if (static_cast<int>(positive_.size()) * 2 != dim_ * coxeter_h_)
    throw internal_error("|R+| != rank * h / 2 for " + label_.to_string());
  if (pi_[coxeter_h_ - 1] != 1)
    throw internal_error("highest root is not unique for " + label_.to_string());
  if (pi_[1] != dim_)
    throw internal_error("pi(1) != rank for " + label_.to_string());
  if (static_cast<int>(exponents_.size()) != dim_)
    throw internal_error("exponent count != rank for " + label_.to_string());
  if (std::accumulate(exponents_.begin(), exponents_.end(), 0) !=
      static_cast<int>(positive_.size()))
    throw internal_error("exponents do not sum to |R+| for " + label_.to_string());
  for (int i = 0; i < dim_; ++i) {
    if (cartan_[i][i] != 2) throw internal_error("Cartan diagonal != 2");
    for (int j = 0; j < dim_; ++j)
      if (i != j && cartan_[i][j] > 0) throw internal_error("positive off-diagonal Cartan entry");
  }
  long max_len = 0;
  for (const auto& r : positive_) max_len = std::max(max_len, pairing6(r, r));
  if (max_len != 12) throw internal_error("long roots are not normalized to squared length 2");
}

std::vector<std::vector<Rational>> RootSystem::sym_form() const {
  std::vector<std::vector<Rational>> s(dim_, std::vector<Rational>(dim_));
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) s[i][j] = Rational(sym6_[i][j], 6);
  return s;
}

std::optional<int> RootSystem::index_of(const std::vector<int>& coeffs) const {
  const auto it = index_.find(coeffs);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool RootSystem::is_root(const std::vector<int>& coeffs) const {
  if (static_cast<int>(coeffs.size()) != dim_) return false;
  if (index_.count(coeffs)) return true;
  std::vector<int> neg(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) neg[i] = -coeffs[i];
  return index_.count(neg) != 0;
}

Root RootSystem::root_from_coeffs(const std::vector<int>& coeffs) const {
  if (!is_root(coeffs)) throw std::domain_error("not a root of " + label_.to_string());
  Root r;
  r.coeffs = coeffs;
  r.height = std::accumulate(coeffs.begin(), coeffs.end(), 0);
  r.long_root = pairing6(coeffs, coeffs) == 12;
  return r;
}

int RootSystem::height_of(const Root& beta) const {
  if (!is_root(beta.coeffs)) throw std::domain_error("not a root of " + label_.to_string());
  return std::accumulate(beta.coeffs.begin(), beta.coeffs.end(), 0);
}

int RootSystem::pi(int k) const {
  if (k <= 0 || k >= coxeter_h_) return 0;
  return pi_[k];
}

int RootSystem::cartan_pairing(const Root& beta, const Root& gamma) const {
  if (!is_root(beta.coeffs) || !is_root(gamma.coeffs))
    throw std::domain_error("cartan_pairing: not a root of " + label_.to_string());
  const long num = 2L * pairing6(beta, gamma);
  const long den = pairing6(gamma, gamma);
  if (num % den != 0) throw internal_error("non-integral Cartan pairing");
  return static_cast<int>(num / den);
}

long RootSystem::pairing6(const std::vector<int>& a, const std::vector<int>& b) const {
  long total = 0;
  for (int i = 0; i < dim_; ++i) {
    if (a[i] == 0) continue;
    long row = 0;
    for (int j = 0; j < dim_; ++j)
      if (b[j] != 0) row += static_cast<long>(sym6_[i][j]) * b[j];
    total += static_cast<long>(a[i]) * row;
  }
  return total;
}

std::vector<int> RootSystem::epsilon_coords(const Root& beta) const {
  const auto& c = beta.coeffs;
  std::vector<int> eps;
  switch (label_.family) {
    case Family::A:
      // alpha_i = eps_{i+1} - eps_i, indices 1..n with n = rank+1 coordinates
      eps.assign(dim_ + 1, 0);
      for (int i = 0; i < dim_; ++i) {
        eps[i + 1] += c[i];
        eps[i] -= c[i];
      }
      break;
    case Family::B:
      // alpha_1 = eps_1, alpha_i = eps_i - eps_{i-1}
      eps.assign(dim_, 0);
      eps[0] += c[0];
      for (int i = 1; i < dim_; ++i) {
        eps[i] += c[i];
        eps[i - 1] -= c[i];
      }
      break;
    case Family::C:
      // alpha_1 = 2 eps_1, alpha_i = eps_i - eps_{i-1}
      eps.assign(dim_, 0);
      eps[0] += 2 * c[0];
      for (int i = 1; i < dim_; ++i) {
        eps[i] += c[i];
        eps[i - 1] -= c[i];
      }
      break;
    case Family::D:
      // alpha_0 = eps_1 + eps_0, alpha_i = eps_i - eps_{i-1}; coordinates eps_0..eps_n
      eps.assign(dim_, 0);
      eps[1] += c[0];
      eps[0] += c[0];
      for (int i = 1; i < dim_; ++i) {
        eps[i] += c[i];
        eps[i - 1] -= c[i];
      }
      break;
    default:
      throw std::domain_error("epsilon coordinates are defined for families A, B, C, D only");
  }
  return eps;
}

Root RootSystem::root_from_epsilon(const std::vector<int>& eps) const {
  for (const auto& r : positive_) {
    if (epsilon_coords(r) == eps) return r;
  }
  std::vector<int> neg(eps.size());
  for (std::size_t i = 0; i < eps.size(); ++i) neg[i] = -eps[i];
  for (const auto& r : positive_) {
    if (epsilon_coords(r) == neg) {
      Root m = r;
      for (auto& x : m.coeffs) x = -x;
      m.height = -r.height;
      return m;
    }
  }
  throw std::domain_error("no root of " + label_.to_string() + " with the given epsilon coordinates");
}

std::string RootSystem::epsilon_string(const Root& beta) const {
  const std::vector<int> eps = epsilon_coords(beta);
  // Indexing of the coordinates: families A/B/C start at eps_1, family D at eps_0.
  const int base = label_.family == Family::D ? 0 : 1;
  std::ostringstream os;
  bool first = true;
  for (int i = static_cast<int>(eps.size()) - 1; i >= 0; --i) {
    const int v = eps[i];
    if (v == 0) continue;
    if (first) {
      if (v < 0) os << '-';
    } else {
      os << (v < 0 ? '-' : '+');
    }
    if (std::abs(v) != 1) os << std::abs(v);
    os << 'e' << i + base;
    first = false;
  }
  if (first) os << '0';
  return os.str();
}

}  // namespace heightfilter
