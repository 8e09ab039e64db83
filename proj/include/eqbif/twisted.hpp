#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "eqbif/burnside.hpp"
#include "eqbif/groups.hpp"
#include "eqbif/reps.hpp"
#include "eqbif/turn.hpp"

namespace eqbif {

// K^{phi,l} = {(z,k) in S^1 x K : phi(k) = z^l}; l = 0 is the product S^1 x K.
// phi[i] is the value on elements[i], as a fraction of a full turn.
struct TwistedSubgroup {
  std::vector<int> elements;
  std::vector<Turn> phi;
  int fold = 0;

  int order() const { return static_cast<int>(elements.size()); }
  Turn value(int element) const; // throws if element not in K
  bool operator==(const TwistedSubgroup&) const = default;
  // Deterministic report order: fold, then larger K first, then element and phi tables.
  std::strong_ordering operator<=>(const TwistedSubgroup& o) const;
};

struct TwistedOrbitType {
  TwistedSubgroup rep; // canonical representative
  int weyl_mod_circle = 0;
};

class TwistedSum {
public:
  const std::map<TwistedSubgroup, std::int64_t>& terms() const { return terms_; }
  std::int64_t coeff(const TwistedSubgroup& canonical) const;
  void add(const TwistedSubgroup& canonical, std::int64_t c);
  bool is_zero() const { return terms_.empty(); }
  TwistedSum operator+(const TwistedSum& o) const;
  TwistedSum operator*(std::int64_t s) const;
  bool operator==(const TwistedSum& o) const { return terms_ == o.terms_; }

private:
  std::map<TwistedSubgroup, std::int64_t> terms_;
};

// Twisted subgroups of S^1 x Z2 x Z2 x D_N and the A(Gamma')-module structure.
class TwistedAlgebra {
public:
  explicit TwistedAlgebra(LatticePtr gamma_prime_lattice);

  int N() const { return N_; }
  const FiniteGroup& group() const { return lattice_->group(); }
  const LatticePtr& lattice() const { return lattice_; }

  void validate(const TwistedSubgroup& H) const;
  TwistedSubgroup conjugate(int g, const TwistedSubgroup& H) const;
  TwistedOrbitType canonicalize(const TwistedSubgroup& H) const;
  int weyl_mod_circle(const TwistedSubgroup& H) const;

  // small <= big as subgroups of S^1 x Gamma'.
  bool contains(const TwistedSubgroup& big, const TwistedSubgroup& small) const;
  bool subconjugate(const TwistedSubgroup& H, const TwistedSubgroup& L) const { return n(H, L) > 0; }
  // Number of conjugates of L containing H.
  int n(const TwistedSubgroup& H, const TwistedSubgroup& L) const;

  // All homomorphisms from the subgroup with these sorted elements to S^1.
  std::vector<std::vector<Turn>> homomorphisms(const std::vector<int>& elements) const;
  TwistedSubgroup restrict_to(const TwistedSubgroup& H, const std::vector<int>& sub_elements) const;

  // Twisted subgroup generated by circle elements together with the kernel Z_l.
  TwistedSubgroup from_generators(const std::vector<CircleElement>& generators, int fold) const;
  std::vector<CircleElement> generators_of(const TwistedSubgroup& H) const;

  TwistedSum module_product(const BurnsideElement& a, const TwistedSum& b) const;
  const TwistedSum& generator_module_product(int k_class, const TwistedSubgroup& H) const;
  TwistedSum generator_module_product_oracle(int k_class, const TwistedSubgroup& H) const;

  std::string to_string(const TwistedSubgroup& H) const;

private:
  const std::vector<TwistedSubgroup>& conjugates(const TwistedSubgroup& canonical) const;
  TwistedSum compute_module_product(int k_class, const TwistedSubgroup& H) const;

  LatticePtr lattice_;
  int N_;
  mutable std::mutex mutex_;
  mutable std::map<TwistedSubgroup, TwistedOrbitType> canonical_cache_;
  mutable std::map<TwistedSubgroup, std::vector<TwistedSubgroup>> conjugate_cache_;
  mutable std::map<std::pair<int, TwistedSubgroup>, TwistedSum> product_cache_;
};

// Psi_s preimage: (K^{phi,l}) -> (K^{phi,s*l}).
TwistedSum fold(int s, const TwistedSum& a);

} // namespace eqbif
