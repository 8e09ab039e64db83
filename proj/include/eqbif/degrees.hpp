#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "eqbif/burnside.hpp"
#include "eqbif/reps.hpp"
#include "eqbif/twisted.hpp"

namespace eqbif {

// Everything attached to one dihedral order N: Gamma', its lattice, A(Gamma'),
// the twisted module, and memoized degrees.
class EquivariantContext {
public:
  explicit EquivariantContext(int N);

  int N() const { return N_; }
  const FiniteGroup& group() const { return lattice_->group(); }
  const LatticePtr& lattice() const { return lattice_; }
  const BurnsideRing& burnside() const { return *burnside_; }
  const TwistedAlgebra& twisted() const { return *twisted_; }

  // Every D_N irrep with both dressings.
  std::vector<DressedIrrep> dressed_irreps() const;

  const BurnsideElement& basic_degree(const DressedIrrep& V) const;
  // Twisted basic degree at folding m, obtained by folding the m = 1 degree.
  TwistedSum twisted_basic_degree(const GIrrep& V) const;

private:
  int N_;
  LatticePtr lattice_;
  std::unique_ptr<BurnsideRing> burnside_;
  std::unique_ptr<TwistedAlgebra> twisted_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<std::string, int>, BurnsideElement> basic_cache_;
  mutable std::map<std::pair<std::string, int>, TwistedSum> twisted_cache_;
};

using FixedDimFn = std::function<int(const Subgroup&)>;

// Recurrence n_H = ((-1)^{dim V^H} - sum_{K > H} n_K n(H,K) |W(K)|) / |W(H)|.
BurnsideElement basic_degree(const LatticePtr& lattice, const FixedDimFn& fixed_dim);
BurnsideElement basic_degree(const LatticePtr& gamma_prime_lattice, const DressedIrrep& V);

// dim_R (W_m (x) V)^{K^{phi,m}} = (2/|K|) sum_k Re(phi(k) chi_V(k)); independent of m >= 1.
int twisted_fixed_dim(const DressedIrrep& V, const TwistedSubgroup& H);

struct TwistedTypeData {
  TwistedSubgroup type; // canonical
  int fixed_dim = 0;
  int weyl_mod_circle = 0;
};

// Canonical twisted types at folding V.m with positive fixed dimension, largest K first.
std::vector<TwistedTypeData> positive_fixed_types(const TwistedAlgebra& T, const GIrrep& V);

TwistedSum twisted_basic_degree(const TwistedAlgebra& T, const GIrrep& V);
std::vector<TwistedOrbitType> maximal_kind_types(const TwistedAlgebra& T, const GIrrep& V);

// Product of basic degrees over the negative spectrum, each raised to its multiplicity.
BurnsideElement linear_iso_degree(const EquivariantContext& ctx,
                                  const std::vector<std::pair<DressedIrrep, int>>& negative_spectrum);

} // namespace eqbif
