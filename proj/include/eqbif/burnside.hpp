#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "eqbif/groups.hpp"
#include "eqbif/parallel.hpp"

namespace eqbif {

// Integer combination of subgroup classes of one lattice.
class BurnsideElement {
public:
  BurnsideElement() = default;
  explicit BurnsideElement(LatticePtr lattice) : lattice_(std::move(lattice)) {}
  static BurnsideElement generator(LatticePtr lattice, int class_id, std::int64_t coeff = 1);
  static BurnsideElement unit(LatticePtr lattice) { return generator(lattice, 0); }

  const LatticePtr& lattice() const { return lattice_; }
  const std::map<int, std::int64_t>& terms() const { return terms_; }
  std::int64_t coeff(int class_id) const;
  void add(int class_id, std::int64_t c);
  bool is_zero() const { return terms_.empty(); }

  BurnsideElement operator+(const BurnsideElement& o) const;
  BurnsideElement operator-(const BurnsideElement& o) const;
  BurnsideElement operator*(std::int64_t s) const;
  bool operator==(const BurnsideElement& o) const { return terms_ == o.terms_; }

  std::string str() const;

private:
  void check_class(int class_id) const;
  LatticePtr lattice_;
  std::map<int, std::int64_t> terms_;
};

class BurnsideRing {
public:
  explicit BurnsideRing(LatticePtr lattice);

  const LatticePtr& lattice() const { return lattice_; }

  // Production path: top-down recurrence over the total order.
  BurnsideElement multiply(const BurnsideElement& a, const BurnsideElement& b) const;
  const BurnsideElement& generator_product(int h, int k) const;

  // Oracle: orbit counting on (G/H) x (G/K).
  BurnsideElement multiply_oracle(const BurnsideElement& a, const BurnsideElement& b) const;
  BurnsideElement generator_product_oracle(int h, int k) const;

  // All generator products, row-major over (h, k).
  std::vector<BurnsideElement> product_table(Exec exec) const;
  std::vector<BurnsideElement> oracle_table(Exec exec) const;

private:
  BurnsideElement compute_product(int h, int k) const;

  LatticePtr lattice_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<int, int>, BurnsideElement> cache_;
};

} // namespace eqbif
