#include "heightfilter/dynkin.hpp"

#include <algorithm>
#include <tuple>

#include "heightfilter/errors.hpp"

namespace heightfilter {

std::string ComponentLabel::to_string() const {
  std::string s(1, family_char(family));
  s += std::to_string(rank);
  if (short_roots) s += "(s)";
  if (dagger) s += "†";
  return s;
}

long long ComponentLabel::positive_count() const {
  const long long q = rank;
  switch (family) {
    case Family::A: return q * (q + 1) / 2;
    case Family::B:
    case Family::C: return q * q;
    case Family::D: return q * (q - 1);
    case Family::E: return rank == 6 ? 36 : (rank == 7 ? 63 : 120);
    case Family::F: return 24;
    case Family::G: return 6;
  }
  throw internal_error("unreachable family");
}

std::vector<ComponentLabel> normalize_component(const ComponentLabel& c) {
  ComponentLabel n = c;
  if (n.rank == 1) {
    n.family = Family::A;
    return {n};
  }
  if (n.family == Family::D && n.rank == 2) {
    ComponentLabel a1{Family::A, 1, n.short_roots, n.dagger};
    ComponentLabel b1{Family::A, 1, n.short_roots, false};
    return {a1, b1};
  }
  if (n.family == Family::D && n.rank == 3) n.family = Family::A;
  if (n.family == Family::C && n.rank == 2) n.family = Family::B;
  return {n};
}

namespace {

// rank descending, then family, short components first, dagger last
std::tuple<int, char, int, int> sort_key(const ComponentLabel& c) {
  return {-c.rank, family_char(c.family), c.short_roots ? 0 : 1, c.dagger ? 1 : 0};
}

}  // namespace

DynkinType DynkinType::of(std::vector<ComponentLabel> comps) {
  DynkinType t;
  for (const auto& c : comps) {
    const auto n = normalize_component(c);
    t.components.insert(t.components.end(), n.begin(), n.end());
  }
  std::sort(t.components.begin(), t.components.end(),
            [](const ComponentLabel& a, const ComponentLabel& b) { return sort_key(a) < sort_key(b); });
  int daggers = 0;
  for (const auto& c : t.components) daggers += c.dagger ? 1 : 0;
  if (daggers > 1) throw internal_error("more than one daggered component");
  return t;
}

std::string DynkinType::to_string() const {
  if (components.empty()) return "empty";
  std::string s;
  std::size_t i = 0;
  while (i < components.size()) {
    std::size_t j = i;
    while (j < components.size() && components[j] == components[i]) ++j;
    if (!s.empty()) s += " + ";
    if (j - i > 1) s += std::to_string(j - i);
    s += components[i].to_string();
    i = j;
  }
  return s;
}

long long DynkinType::positive_count() const {
  long long total = 0;
  for (const auto& c : components) total += c.positive_count();
  return total;
}

int DynkinType::node_count() const {
  int total = 0;
  for (const auto& c : components) total += c.rank;
  return total;
}

bool DynkinType::has_dagger() const {
  for (const auto& c : components) if (c.dagger) return true;
  return false;
}

std::vector<std::vector<Root>> pairing_components(const RootSystem& rs,
                                                  const std::vector<Root>& roots) {
  const int n = static_cast<int>(roots.size());
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{s};
    comp[s] = ncomp;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w = 0; w < n; ++w) {
        if (comp[w] >= 0 || rs.pairing6(roots[v], roots[w]) == 0) continue;
        comp[w] = ncomp;
        stack.push_back(w);
      }
    }
    ++ncomp;
  }
  std::vector<std::vector<Root>> out(ncomp);
  for (int i = 0; i < n; ++i) out[comp[i]].push_back(roots[i]);
  return out;
}

ComponentLabel recognize_component(const RootSystem& rs, const std::vector<Root>& roots) {
  const int n = static_cast<int>(roots.size());
  if (n == 0) throw internal_error("empty component");

  ComponentLabel label;
  label.rank = n;
  label.short_roots = std::none_of(roots.begin(), roots.end(),
                                   [](const Root& r) { return r.long_root; });
  if (n == 1) {
    label.family = Family::A;
    return label;
  }

  // Bond multiplicities <a,b^vee><b,a^vee> and node degrees.
  std::vector<std::vector<int>> adj(n);
  std::vector<std::vector<int>> mult(n, std::vector<int>(n, 0));
  int edges = 0, doubles = 0, triples = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const int cij = rs.cartan_pairing(roots[i], roots[j]);
      const int cji = rs.cartan_pairing(roots[j], roots[i]);
      if (cij > 0 || cji > 0) throw internal_error("positive pairing inside a base component");
      const int m = cij * cji;
      if (m == 0) continue;
      if (m > 3) throw internal_error("bond multiplicity > 3 in a base component");
      adj[i].push_back(j);
      adj[j].push_back(i);
      mult[i][j] = mult[j][i] = m;
      ++edges;
      if (m == 2) ++doubles;
      if (m == 3) ++triples;
    }
  }
  if (edges != n - 1) throw internal_error("base component is not a tree");
  for (int i = 0; i < n; ++i)
    if (static_cast<int>(adj[i].size()) > 3) throw internal_error("node of degree > 3 in a base component");

  if (triples > 0) {
    if (n != 2 || triples != 1) throw internal_error("triple bond outside G2");
    label.family = Family::G;
    return label;
  }

  std::vector<int> branch_nodes;
  for (int i = 0; i < n; ++i)
    if (adj[i].size() == 3) branch_nodes.push_back(i);

  if (doubles > 0) {
    if (doubles > 1 || !branch_nodes.empty())
      throw internal_error("unrecognized multiply-laced component");
    int di = -1, dj = -1;
    for (int i = 0; i < n && di < 0; ++i)
      for (int j : adj[i])
        if (mult[i][j] == 2) { di = i; dj = j; break; }
    const bool di_end = adj[di].size() == 1;
    const bool dj_end = adj[dj].size() == 1;
    if (!di_end && !dj_end) {
      // interior double bond: the only finite type is F4
      if (n != 4) throw internal_error("interior double bond outside F4");
      label.family = Family::F;
      return label;
    }
    if (n == 2) {
      label.family = Family::B;  // B2 and C2 coincide; normalized to B2
      return label;
    }
    // The extreme node of the double bond fixes the orientation: a short
    // end gives B, a long end gives C.
    const int end = di_end ? di : dj;
    label.family = roots[end].long_root ? Family::C : Family::B;
    return label;
  }

  // Simply laced: A (path), D (one branch, two legs of length 1),
  // E (one branch, legs 1,2,q).
  if (branch_nodes.empty()) {
    label.family = Family::A;
    return label;
  }
  if (branch_nodes.size() > 1) throw internal_error("two branch nodes in a base component");
  const int center = branch_nodes[0];
  std::vector<int> legs;
  for (int start : adj[center]) {
    int len = 1, prev = center, cur = start;
    while (adj[cur].size() == 2) {
      const int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = next;
      ++len;
    }
    legs.push_back(len);
  }
  std::sort(legs.begin(), legs.end());
  if (legs[0] == 1 && legs[1] == 1) {
    label.family = Family::D;  // rank legs[2] + 3
    return label;
  }
  if (legs[0] == 1 && legs[1] == 2 && legs[2] >= 2 && legs[2] <= 4) {
    label.family = Family::E;
    return label;
  }
  throw internal_error("branch node legs do not match any finite type");
}

}  // namespace heightfilter
