#include "heightfilter/weyl_orbit.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <string>
#include <unordered_set>

#include "heightfilter/errors.hpp"

namespace heightfilter {

long long default_orbit_budget() {
  if (const char* env = std::getenv("HEIGHTFILTER_ORBIT_BUDGET")) {
    char* end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return 2'000'000;
}

long long WeylGroup::order_formula(const SystemLabel& label) {
  const auto factorial = [](int n) {
    long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
  };
  switch (label.family) {
    case Family::A: return factorial(label.rank + 1);
    case Family::B:
    case Family::C: return (1LL << label.rank) * factorial(label.rank);
    case Family::D: return (1LL << label.rank) * factorial(label.rank + 1);
    case Family::E:
      return label.rank == 6 ? 51840LL : (label.rank == 7 ? 2903040LL : 696729600LL);
    case Family::F: return 1152;
    case Family::G: return 12;
  }
  throw internal_error("unreachable family");
}

namespace {

struct PermHash {
  std::size_t operator()(const std::vector<std::uint16_t>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (std::uint16_t x : v) {
      h ^= x + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace

WeylGroup WeylGroup::enumerate(const RootSystem& rs, long long budget) {
  const long long order = order_formula(rs.label());
  if (order > budget) {
    throw budget_exceeded("Weyl group of " + rs.label().to_string() + " has order " +
                          std::to_string(order) + " > budget " + std::to_string(budget) +
                          "; use is_levi_type instead of the orbit oracle");
  }

  WeylGroup g;
  g.rs_ = &rs;
  g.n_pos_ = static_cast<int>(rs.positive_roots().size());
  const int d = rs.dim();
  const int total = 2 * g.n_pos_;

  // Root index i is positive_roots()[i]; index i + n_pos_ its negation.
  const auto index_of_vec = [&](const std::vector<int>& v) -> int {
    if (const auto i = rs.index_of(v)) return *i;
    std::vector<int> neg(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) neg[k] = -v[k];
    const auto i = rs.index_of(neg);
    if (!i) throw internal_error("reflection image is not a root");
    return *i + g.n_pos_;
  };

  // Simple reflections as permutations of the signed root set.
  std::vector<std::vector<std::uint16_t>> gen(d, std::vector<std::uint16_t>(total));
  for (int s = 0; s < d; ++s) {
    for (int i = 0; i < total; ++i) {
      std::vector<int> v = rs.positive_roots()[i % g.n_pos_].coeffs;
      if (i >= g.n_pos_)
        for (auto& x : v) x = -x;
      int pairing = 0;
      for (int j = 0; j < d; ++j) pairing += rs.cartan()[s][j] * v[j];
      v[s] -= pairing;
      gen[s][i] = static_cast<std::uint16_t>(index_of_vec(v));
    }
  }

  // A group element is determined by its images of the simple roots, so
  // dedup on that short key while storing full permutations.
  std::vector<int> simple_idx(d);
  for (int s = 0; s < d; ++s) simple_idx[s] = rs.index_of(rs.simple_root(s).coeffs).value();
  const auto key_of = [&](const std::vector<std::uint16_t>& perm) {
    std::vector<std::uint16_t> key(d);
    for (int s = 0; s < d; ++s) key[s] = perm[simple_idx[s]];
    return key;
  };

  std::unordered_set<std::vector<std::uint16_t>, PermHash> seen;
  std::vector<std::uint16_t> identity(total);
  for (int i = 0; i < total; ++i) identity[i] = static_cast<std::uint16_t>(i);
  g.perms_.push_back(identity);
  seen.insert(key_of(identity));
  for (std::size_t head = 0; head < g.perms_.size(); ++head) {
    const std::vector<std::uint16_t> w = g.perms_[head];  // copy: perms_ may reallocate
    for (int s = 0; s < d; ++s) {
      std::vector<std::uint16_t> next(total);
      for (int i = 0; i < total; ++i) next[i] = gen[s][w[i]];
      if (seen.insert(key_of(next)).second) g.perms_.push_back(std::move(next));
    }
  }

  if (static_cast<long long>(g.perms_.size()) != order)
    throw internal_error("Weyl enumeration size does not match the order formula");
  return g;
}

bool WeylGroup::maps_to_standard_levi(const HeightSubsystem& sub) const {
  const RootSystem& rs = *rs_;
  if (sub.parent != &rs) throw std::invalid_argument("subsystem belongs to a different system");
  if (sub.empty()) return true;
  const int d = rs.dim();
  const int n_pos = n_pos_;

  // Candidate targets: for each subset I of the simple roots, the roots
  // supported on I (these are exactly R cap span(I)).
  std::unordered_set<std::vector<std::uint16_t>, PermHash> targets;
  const std::size_t want = sub.positive.size();
  for (unsigned mask = 0; mask < (1u << d); ++mask) {
    std::vector<std::uint16_t> set;
    for (int i = 0; i < n_pos; ++i) {
      const auto& c = rs.positive_roots()[i].coeffs;
      bool inside = true;
      for (int j = 0; j < d && inside; ++j)
        if (c[j] != 0 && !(mask & (1u << j))) inside = false;
      if (inside) set.push_back(static_cast<std::uint16_t>(i));
    }
    if (set.size() == want) targets.insert(std::move(set));
  }
  if (targets.empty()) return false;

  std::vector<std::uint16_t> members(want);
  for (std::size_t i = 0; i < want; ++i)
    members[i] = static_cast<std::uint16_t>(rs.index_of(sub.positive[i].coeffs).value());

  // w maps R(m) onto R_I setwise iff the image of the positive part,
  // with signs dropped, is exactly the positive part of R_I.
  std::vector<std::uint16_t> image(want);
  for (const auto& w : perms_) {
    for (std::size_t i = 0; i < want; ++i) {
      const std::uint16_t im = w[members[i]];
      image[i] = static_cast<std::uint16_t>(im >= n_pos ? im - n_pos : im);
    }
    std::sort(image.begin(), image.end());
    if (targets.count(image)) return true;
  }
  return false;
}

bool weyl_orbit_levi_oracle(const HeightSubsystem& sub, long long budget) {
  const WeylGroup g = WeylGroup::enumerate(*sub.parent, budget);
  return g.maps_to_standard_levi(sub);
}

}  // namespace heightfilter
