#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "heightfilter/rational.hpp"

namespace heightfilter {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

char family_char(Family f);
std::optional<Family> family_from_char(char c);

// Label of a reduced irreducible root system.
//
// For family D the stored rank is the parameter n of the system D_{n+1},
// whose simple roots are numbered 0..n: label {D, 6} is the system D_7.
// Everywhere a display name is needed ("D7") the actual system is meant.
struct SystemLabel {
  Family family;
  int rank;

  SystemLabel(Family f, int r);

  int dimension() const;       // number of simple roots (n+1 for family D)
  int coxeter_number() const;  // closed form; cross-checked against the built system
  std::string to_string() const;
  static SystemLabel parse(const std::string& text);

  friend bool operator==(const SystemLabel&, const SystemLabel&) = default;
};

// A root as an integer coefficient vector over the base, with its height
// and length class cached.  Positive roots have all coefficients >= 0;
// negatives are their negations.
struct Root {
  std::vector<int> coeffs;
  int height = 0;
  bool long_root = true;  // squared length equals 2 under the normalized form

  friend bool operator==(const Root& a, const Root& b) { return a.coeffs == b.coeffs; }
  friend bool operator<(const Root& a, const Root& b) {
    if (a.height != b.height) return a.height < b.height;
    return a.coeffs < b.coeffs;
  }
};

struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

class RootSystem {
 public:
  // Constructs the system: simple root data for the family, then the
  // positive roots by height-increasing string closure.
  static RootSystem build(const SystemLabel& label);

  const SystemLabel& label() const { return label_; }
  int dim() const { return dim_; }
  int coxeter_number() const { return coxeter_h_; }
  const std::vector<int>& exponents() const { return exponents_; }  // ascending

  // cartan()[i][j] = <alpha_j, alpha_i^vee>
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  // (alpha_i, alpha_j) with long roots normalized to squared length 2
  std::vector<std::vector<Rational>> sym_form() const;

  const std::vector<Root>& positive_roots() const { return positive_; }
  const Root& simple_root(int i) const { return positive_[simple_index_[i]]; }
  const Root& highest_root() const { return positive_.back(); }

  std::optional<int> index_of(const std::vector<int>& coeffs) const;  // positive roots only
  bool is_root(const std::vector<int>& coeffs) const;                 // positive or negative
  Root root_from_coeffs(const std::vector<int>& coeffs) const;        // domain error if not a root

  int height_of(const Root& beta) const;  // signed sum of coefficients
  int pi(int k) const;                    // number of positive roots of height k

  // <beta, gamma^vee> = 2(beta,gamma)/(gamma,gamma), exact integer
  int cartan_pairing(const Root& beta, const Root& gamma) const;

  // 6*(beta,gamma): integral for every family (the factor 6 absorbs the
  // short-root lengths 1 and 2/3), so pairings stay in machine integers.
  long pairing6(const std::vector<int>& a, const std::vector<int>& b) const;
  long pairing6(const Root& a, const Root& b) const { return pairing6(a.coeffs, b.coeffs); }

  // epsilon-coordinate view of the classical families A/B/C/D, matching
  // the numbering conventions the heights are stated in.
  std::vector<int> epsilon_coords(const Root& beta) const;
  Root root_from_epsilon(const std::vector<int>& eps) const;
  std::string epsilon_string(const Root& beta) const;

 private:
  RootSystem() = default;
  void check_invariants() const;

  SystemLabel label_{Family::A, 1};
  int dim_ = 0;
  int coxeter_h_ = 0;
  std::vector<std::vector<int>> cartan_;
  std::vector<std::vector<int>> sym6_;  // 6 * (alpha_i, alpha_j)
  std::vector<Root> positive_;          // sorted by (height, lex coeffs)
  std::vector<int> simple_index_;
  std::vector<int> exponents_;
  std::vector<int> pi_;  // pi_[k] for 0 <= k <= h
  std::unordered_map<std::vector<int>, int, VecHash> index_;
};

}  // namespace heightfilter
