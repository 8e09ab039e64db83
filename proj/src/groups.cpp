#include "eqbif/groups.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "eqbif/errors.hpp"

namespace eqbif {

ElementSet::ElementSet(int universe)
    : universe_(universe), words_((static_cast<std::size_t>(universe) + 63) / 64, 0) {}

int ElementSet::count() const {
  int c = 0;
  for (auto w : words_) c += std::popcount(w);
  return c;
}

bool ElementSet::subset_of(const ElementSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

ElementSet ElementSet::operator&(const ElementSet& other) const {
  ElementSet r(universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & other.words_[i];
  return r;
}

std::vector<int> ElementSet::elements() const {
  std::vector<int> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits) {
      int b = std::countr_zero(bits);
      out.push_back(static_cast<int>(w * 64 + b));
      bits &= bits - 1;
    }
  }
  return out;
}

bool ElementSet::lex_less(const ElementSet& other) const { return elements() < other.elements(); }

std::size_t ElementSet::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (auto w : words_) {
    h ^= static_cast<std::size_t>(w);
    h *= 1099511628211ull;
    h ^= h >> 29;
  }
  return h;
}

// ---------------------------------------------------------------------------

DihedralElement dihedral_mul(int N, DihedralElement a, DihedralElement b) {
  int r = a.reflection ? a.rotation - b.rotation : a.rotation + b.rotation;
  r %= N;
  if (r < 0) r += N;
  return {r, a.reflection != b.reflection};
}

int dihedral_act(int N, DihedralElement g, int vertex) {
  int v = (g.reflection ? -vertex : vertex) + g.rotation;
  v %= N;
  return v < 0 ? v + N : v;
}

int dihedral_index(int N, DihedralElement g) { return g.rotation + (g.reflection ? N : 0); }

DihedralElement dihedral_from_index(int N, int index) { return {index % N, index >= N}; }

std::string dihedral_label(DihedralElement g) {
  std::string s;
  if (g.rotation == 1) s = "g";
  else if (g.rotation > 1) s = "g" + std::to_string(g.rotation);
  if (g.reflection) s += "k";
  return s.empty() ? "e" : s;
}

GammaPrimeElement gamma_prime_mul(int N, const GammaPrimeElement& a, const GammaPrimeElement& b) {
  return {a.kappa1 * b.kappa1, a.kappa2 * b.kappa2, dihedral_mul(N, a.dihedral, b.dihedral)};
}

int gamma_prime_index(int N, const GammaPrimeElement& g) {
  int z = (g.kappa1 == -1 ? 2 : 0) + (g.kappa2 == -1 ? 1 : 0);
  return z * 2 * N + dihedral_index(N, g.dihedral);
}

GammaPrimeElement gamma_prime_from_index(int N, int index) {
  int z = index / (2 * N);
  return {(z & 2) ? -1 : 1, (z & 1) ? -1 : 1, dihedral_from_index(N, index % (2 * N))};
}

// ---------------------------------------------------------------------------

FiniteGroup::FiniteGroup(std::string name, std::vector<std::string> labels, std::vector<int> table)
    : name_(std::move(name)), labels_(std::move(labels)), table_(std::move(table)) {
  order_ = static_cast<int>(labels_.size());
  if (order_ == 0 || table_.size() != static_cast<std::size_t>(order_) * order_)
    throw std::invalid_argument("Cayley table size does not match element count");
  for (int a = 0; a < order_; ++a) {
    std::vector<char> row(order_, 0), col(order_, 0);
    for (int b = 0; b < order_; ++b) {
      int ab = mul(a, b), ba = mul(b, a);
      if (ab < 0 || ab >= order_ || ba < 0 || ba >= order_ || row[ab] || col[ba])
        throw std::invalid_argument("Cayley table is not a Latin square");
      row[ab] = col[ba] = 1;
    }
  }
  identity_ = -1;
  for (int e = 0; e < order_ && identity_ < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < order_ && ok; ++a) ok = mul(e, a) == a && mul(a, e) == a;
    if (ok) identity_ = e;
  }
  if (identity_ < 0) throw std::invalid_argument("Cayley table has no identity");
  inverse_.assign(order_, -1);
  for (int a = 0; a < order_; ++a)
    for (int b = 0; b < order_; ++b)
      if (mul(a, b) == identity_) inverse_[a] = b;
}

int FiniteGroup::element_order(int a) const {
  int k = 1;
  for (int x = a; x != identity_; x = mul(x, a)) ++k;
  return k;
}

ElementSet FiniteGroup::closure(const std::vector<int>& generators) const {
  ElementSet s(order_);
  std::vector<int> frontier{identity_};
  s.insert(identity_);
  while (!frontier.empty()) {
    int x = frontier.back();
    frontier.pop_back();
    for (int g : generators) {
      int y = mul(x, g);
      if (!s.contains(y)) {
        s.insert(y);
        frontier.push_back(y);
      }
    }
  }
  return s;
}

std::vector<int> FiniteGroup::generating_set(const std::vector<int>& sorted_elements) const {
  std::vector<int> gens;
  ElementSet span = closure(gens);
  for (int x : sorted_elements) {
    if (span.contains(x)) continue;
    gens.push_back(x);
    span = closure(gens);
  }
  return gens;
}

FiniteGroup dihedral_group(int N) {
  if (N < 3) throw std::invalid_argument("dihedral order N must be at least 3");
  int n = 2 * N;
  std::vector<std::string> labels(n);
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    labels[a] = dihedral_label(dihedral_from_index(N, a));
    for (int b = 0; b < n; ++b)
      table[static_cast<std::size_t>(a) * n + b] =
          dihedral_index(N, dihedral_mul(N, dihedral_from_index(N, a), dihedral_from_index(N, b)));
  }
  FiniteGroup G("D" + std::to_string(N), std::move(labels), std::move(table));
  G.dihedral_n_ = N;
  return G;
}

FiniteGroup gamma_prime(int N) {
  if (N < 3) throw std::invalid_argument("dihedral order N must be at least 3");
  int n = 8 * N;
  std::vector<std::string> labels(n);
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  auto sign = [](int k) { return k == 1 ? std::string("1") : std::string("-1"); };
  for (int a = 0; a < n; ++a) {
    GammaPrimeElement ga = gamma_prime_from_index(N, a);
    labels[a] = "(" + sign(ga.kappa1) + "," + sign(ga.kappa2) + "," + dihedral_label(ga.dihedral) + ")";
    for (int b = 0; b < n; ++b) {
      GammaPrimeElement gb = gamma_prime_from_index(N, b);
      table[static_cast<std::size_t>(a) * n + b] = gamma_prime_index(N, gamma_prime_mul(N, ga, gb));
    }
  }
  FiniteGroup G("Z2xZ2xD" + std::to_string(N), std::move(labels), std::move(table));
  G.dihedral_n_ = N;
  G.gamma_prime_ = true;
  return G;
}

FiniteGroup trivial_group() { return FiniteGroup("1", {"e"}, {0}); }

FiniteGroup klein_four_group() {
  std::vector<int> table(16);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) table[a * 4 + b] = a ^ b;
  return FiniteGroup("Z2xZ2", {"e", "a", "b", "ab"}, std::move(table));
}

// ---------------------------------------------------------------------------

std::vector<Subgroup> enumerate_subgroups(const FiniteGroup& G, int cap) {
  if (G.order() > cap)
    throw GroupSizeError("group order " + std::to_string(G.order()) + " exceeds cap " +
                         std::to_string(cap));
  struct Entry {
    ElementSet set;
    std::vector<int> gens;
  };
  std::vector<Entry> found;
  std::unordered_map<ElementSet, int, ElementSetHash> seen;
  found.push_back({G.closure({}), {}});
  seen.emplace(found.back().set, 0);
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (int g = 0; g < G.order(); ++g) {
      if (found[i].set.contains(g)) continue;
      std::vector<int> gens = found[i].gens;
      gens.push_back(g);
      ElementSet s = G.closure(gens);
      if (seen.emplace(s, static_cast<int>(found.size())).second) found.push_back({s, gens});
    }
  }
  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (auto& e : found) out.push_back({e.set, e.set.elements()});
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements < b.elements;
  });
  return out;
}

LatticePtr SubgroupClassLattice::build(std::shared_ptr<const FiniteGroup> G, int cap) {
  std::shared_ptr<SubgroupClassLattice> L(new SubgroupClassLattice());
  L->group_ = G;
  L->subgroups_ = enumerate_subgroups(*G, cap);
  const int ns = static_cast<int>(L->subgroups_.size());
  const int order = G->order();
  for (int i = 0; i < ns; ++i) L->index_.emplace(L->subgroups_[i].set, i);

  L->conj_table_.assign(static_cast<std::size_t>(order) * ns, -1);
  for (int g = 0; g < order; ++g) {
    for (int i = 0; i < ns; ++i) {
      ElementSet c(order);
      for (int x : L->subgroups_[i].elements) c.insert(G->conj(g, x));
      int j = L->find_subgroup(c);
      if (j < 0) throw InternalConsistencyError("conjugate of a subgroup missing from enumeration");
      L->conj_table_[static_cast<std::size_t>(g) * ns + i] = j;
    }
  }

  L->subgroup_class_.assign(ns, -1);
  std::vector<SubgroupClass> classes;
  for (int i = 0; i < ns; ++i) {
    if (L->subgroup_class_[i] != -1) continue;
    SubgroupClass c;
    for (int g = 0; g < order; ++g) c.members.push_back(L->conjugate_subgroup(g, i));
    std::sort(c.members.begin(), c.members.end());
    c.members.erase(std::unique(c.members.begin(), c.members.end()), c.members.end());
    // Subgroups are sorted by (order, elements), so the first member is lex-minimal.
    c.rep = L->subgroups_[c.members.front()];
    for (int g = 0; g < order; ++g)
      if (L->conjugate_subgroup(g, c.members.front()) == c.members.front()) ++c.normalizer_order;
    if (c.normalizer_order % c.rep.order() != 0)
      throw InternalConsistencyError("normalizer order not divisible by subgroup order");
    c.weyl_order = c.normalizer_order / c.rep.order();
    if (static_cast<int>(c.members.size()) * c.normalizer_order != order)
      throw InternalConsistencyError("orbit-stabilizer failure in subgroup conjugation");
    for (int m : c.members) L->subgroup_class_[m] = -2;
    classes.push_back(std::move(c));
  }
  std::sort(classes.begin(), classes.end(), [](const SubgroupClass& a, const SubgroupClass& b) {
    if (a.order() != b.order()) return a.order() > b.order();
    return a.rep.elements < b.rep.elements;
  });
  for (std::size_t id = 0; id < classes.size(); ++id) {
    classes[id].id = static_cast<int>(id);
    for (int m : classes[id].members) L->subgroup_class_[m] = static_cast<int>(id);
  }
  L->classes_ = std::move(classes);

  const std::size_t nc = L->classes_.size();
  L->n_table_.assign(nc * nc, 0);
  for (std::size_t h = 0; h < nc; ++h)
    for (std::size_t k = 0; k < nc; ++k) {
      if (L->classes_[k].order() < L->classes_[h].order()) continue;
      int cnt = 0;
      for (int m : L->classes_[k].members)
        if (L->classes_[h].rep.set.subset_of(L->subgroups_[m].set)) ++cnt;
      L->n_table_[h * nc + k] = cnt;
    }
  return L;
}

int SubgroupClassLattice::find_subgroup(const ElementSet& s) const {
  auto it = index_.find(s);
  return it == index_.end() ? -1 : it->second;
}

int SubgroupClassLattice::class_of(const ElementSet& s) const {
  int i = find_subgroup(s);
  if (i < 0) throw std::invalid_argument("element set is not a subgroup");
  return subgroup_class_[i];
}

std::string SubgroupClassLattice::class_label(int id) const {
  const auto& rep = cls(id).rep;
  auto gens = group_->generating_set(rep.elements);
  if (gens.empty()) return "<e>";
  std::string s = "<";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) s += ",";
    s += group_->label(gens[i]);
  }
  return s + ">";
}

} // namespace eqbif
