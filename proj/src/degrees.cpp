#include "eqbif/degrees.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "eqbif/errors.hpp"

namespace eqbif {

EquivariantContext::EquivariantContext(int N) : N_(N) {
  lattice_ = SubgroupClassLattice::build(std::make_shared<FiniteGroup>(gamma_prime(N)));
  burnside_ = std::make_unique<BurnsideRing>(lattice_);
  twisted_ = std::make_unique<TwistedAlgebra>(lattice_);
}

std::vector<DressedIrrep> EquivariantContext::dressed_irreps() const {
  std::vector<DressedIrrep> out;
  for (const auto& V : character_table(N_))
    for (int d : {0, 1}) out.push_back({V, d});
  return out;
}

const BurnsideElement& EquivariantContext::basic_degree(const DressedIrrep& V) const {
  auto key = std::make_pair(V.base.label(), V.dressing);
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = basic_cache_.find(key);
    if (it != basic_cache_.end()) return it->second;
  }
  BurnsideElement d = eqbif::basic_degree(lattice_, V);
  std::lock_guard<std::mutex> lock(mutex_);
  return basic_cache_.emplace(key, std::move(d)).first->second;
}

TwistedSum EquivariantContext::twisted_basic_degree(const GIrrep& V) const {
  if (V.m < 1) throw std::invalid_argument("twisted basic degree requires m >= 1");
  auto key = std::make_pair(V.dressed.base.label(), V.dressed.dressing);
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = twisted_cache_.find(key);
    if (it != twisted_cache_.end()) return fold(V.m, it->second);
  }
  TwistedSum d = eqbif::twisted_basic_degree(*twisted_, GIrrep{1, V.dressed});
  std::lock_guard<std::mutex> lock(mutex_);
  return fold(V.m, twisted_cache_.emplace(key, std::move(d)).first->second);
}

// ---------------------------------------------------------------------------

BurnsideElement basic_degree(const LatticePtr& lattice, const FixedDimFn& fixed_dim) {
  const auto& L = *lattice;
  BurnsideElement result(lattice);
  std::vector<std::int64_t> n(L.size(), 0);
  for (int h = 0; h < L.size(); ++h) {
    std::int64_t num = (fixed_dim(L.cls(h).rep) % 2) ? -1 : 1;
    for (int k = 0; k < h; ++k)
      if (n[k] != 0) num -= n[k] * L.n(h, k) * L.cls(k).weyl_order;
    std::int64_t w = L.cls(h).weyl_order;
    if (num % w != 0) throw InternalConsistencyError("inexact division in basic degree recurrence");
    n[h] = num / w;
    result.add(h, n[h]);
  }
  return result;
}

BurnsideElement basic_degree(const LatticePtr& lattice, const DressedIrrep& V) {
  const int N = lattice->group().dihedral_n();
  if (!lattice->group().is_gamma_prime() || N != V.base.N())
    throw std::invalid_argument("dressed irrep does not match the lattice");
  return basic_degree(lattice, [&](const Subgroup& H) {
    std::vector<GammaPrimeElement> hs;
    for (int x : H.elements) hs.push_back(gamma_prime_from_index(N, x));
    return fixed_dim(V, hs);
  });
}

int twisted_fixed_dim(const DressedIrrep& V, const TwistedSubgroup& H) {
  const int N = V.base.N();
  double s = 0;
  for (std::size_t i = 0; i < H.elements.size(); ++i)
    s += std::cos(H.phi[i].radians()) * V.character(gamma_prime_from_index(N, H.elements[i]));
  double d = 2.0 * s / static_cast<double>(H.elements.size());
  double r = std::round(d);
  if (std::abs(d - r) > 1e-9 || r < 0)
    throw InternalConsistencyError("twisted fixed dimension is not a non-negative integer");
  return static_cast<int>(r);
}

std::vector<TwistedTypeData> positive_fixed_types(const TwistedAlgebra& T, const GIrrep& V) {
  if (V.m < 1) throw std::invalid_argument("twisted types require m >= 1");
  if (V.dressed.base.N() != T.N()) throw std::invalid_argument("irrep does not match N");
  const auto& L = *T.lattice();
  std::set<TwistedSubgroup> found;
  std::vector<TwistedTypeData> out;
  for (int c = 0; c < L.size(); ++c) {
    const auto& K = L.cls(c).rep.elements;
    for (auto& phi : T.homomorphisms(K)) {
      TwistedSubgroup H{K, std::move(phi), V.m};
      int d = twisted_fixed_dim(V.dressed, H);
      if (d == 0) continue;
      auto t = T.canonicalize(H);
      if (found.insert(t.rep).second) out.push_back({t.rep, d, t.weyl_mod_circle});
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.type < b.type; });
  return out;
}

TwistedSum twisted_basic_degree(const TwistedAlgebra& T, const GIrrep& V) {
  auto types = positive_fixed_types(T, V);
  TwistedSum result;
  std::vector<std::int64_t> n(types.size(), 0);
  for (std::size_t h = 0; h < types.size(); ++h) {
    if (types[h].fixed_dim % 2) throw InternalConsistencyError("odd fixed dimension in W_m (x) V");
    std::int64_t num = types[h].fixed_dim / 2;
    for (std::size_t l = 0; l < h; ++l)
      if (n[l] != 0) num -= n[l] * T.n(types[h].type, types[l].type) * types[l].weyl_mod_circle;
    std::int64_t w = types[h].weyl_mod_circle;
    if (num % w != 0) throw InternalConsistencyError("inexact division in twisted basic degree");
    n[h] = num / w;
    result.add(types[h].type, n[h]);
  }
  return result;
}

std::vector<TwistedOrbitType> maximal_kind_types(const TwistedAlgebra& T, const GIrrep& V) {
  auto types = positive_fixed_types(T, V);
  std::vector<TwistedOrbitType> out;
  for (std::size_t i = 0; i < types.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < types.size() && maximal; ++j)
      if (j != i && T.n(types[i].type, types[j].type) > 0) maximal = false;
    if (maximal) out.push_back({types[i].type, types[i].weyl_mod_circle});
  }
  return out;
}

BurnsideElement linear_iso_degree(const EquivariantContext& ctx,
                                  const std::vector<std::pair<DressedIrrep, int>>& negative_spectrum) {
  BurnsideElement r = BurnsideElement::unit(ctx.lattice());
  for (const auto& [V, mult] : negative_spectrum) {
    if (mult < 0) throw std::invalid_argument("negative multiplicity");
    for (int i = 0; i < mult; ++i) r = ctx.burnside().multiply(r, ctx.basic_degree(V));
  }
  return r;
}

} // namespace eqbif
