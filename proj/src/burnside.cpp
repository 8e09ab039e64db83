#include "eqbif/burnside.hpp"

#include <omp.h>

#include <sstream>
#include <stdexcept>

#include "eqbif/errors.hpp"

namespace eqbif {

int max_threads() { return omp_get_max_threads(); }

BurnsideElement BurnsideElement::generator(LatticePtr lattice, int class_id, std::int64_t coeff) {
  BurnsideElement e(std::move(lattice));
  e.add(class_id, coeff);
  return e;
}

void BurnsideElement::check_class(int class_id) const {
  if (!lattice_ || class_id < 0 || class_id >= lattice_->size())
    throw std::out_of_range("unknown subgroup class id " + std::to_string(class_id));
}

std::int64_t BurnsideElement::coeff(int class_id) const {
  check_class(class_id);
  auto it = terms_.find(class_id);
  return it == terms_.end() ? 0 : it->second;
}

void BurnsideElement::add(int class_id, std::int64_t c) {
  check_class(class_id);
  if (c == 0) return;
  auto& v = terms_[class_id];
  v += c;
  if (v == 0) terms_.erase(class_id);
}

BurnsideElement BurnsideElement::operator+(const BurnsideElement& o) const {
  BurnsideElement r = lattice_ ? *this : BurnsideElement(o.lattice_);
  for (auto [k, v] : o.terms_) r.add(k, v);
  return r;
}

BurnsideElement BurnsideElement::operator-(const BurnsideElement& o) const { return *this + o * -1; }

BurnsideElement BurnsideElement::operator*(std::int64_t s) const {
  BurnsideElement r(lattice_);
  if (s != 0)
    for (auto [k, v] : terms_) r.terms_[k] = v * s;
  return r;
}

std::string BurnsideElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto [k, v] : terms_) {
    if (!first) os << (v < 0 ? " - " : " + ");
    else if (v < 0) os << "-";
    std::int64_t a = v < 0 ? -v : v;
    if (a != 1) os << a;
    os << "(" << lattice_->class_label(k) << ")";
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------------------

BurnsideRing::BurnsideRing(LatticePtr lattice) : lattice_(std::move(lattice)) {}

BurnsideElement BurnsideRing::compute_product(int h, int k) const {
  const auto& L = *lattice_;
  const int nc = L.size();
  const std::int64_t lead_h = L.cls(h).weyl_order, lead_k = L.cls(k).weyl_order;
  std::vector<std::int64_t> n(nc, 0);
  std::vector<int> support;
  for (int l = 0; l < nc; ++l) {
    if (!L.leq(l, h) || !L.leq(l, k)) continue;
    std::int64_t num = L.n(l, h) * lead_h * L.n(l, k) * lead_k;
    for (int t : support) num -= n[t] * L.n(l, t) * L.cls(t).weyl_order;
    std::int64_t w = L.cls(l).weyl_order;
    if (num % w != 0)
      throw InternalConsistencyError("inexact division in Burnside recurrence at class " +
                                     std::to_string(l));
    n[l] = num / w;
    if (n[l] != 0) support.push_back(l);
  }
  BurnsideElement r(lattice_);
  for (int l : support) r.add(l, n[l]);
  return r;
}

const BurnsideElement& BurnsideRing::generator_product(int h, int k) const {
  if (h > k) std::swap(h, k);
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = cache_.find({h, k});
    if (it != cache_.end()) return it->second;
  }
  BurnsideElement r = compute_product(h, k);
  std::lock_guard<std::mutex> lock(mutex_);
  return cache_.emplace(std::make_pair(h, k), std::move(r)).first->second;
}

BurnsideElement BurnsideRing::multiply(const BurnsideElement& a, const BurnsideElement& b) const {
  BurnsideElement r(lattice_);
  for (auto [h, x] : a.terms())
    for (auto [k, y] : b.terms())
      for (auto [l, z] : generator_product(h, k).terms()) r.add(l, x * y * z);
  return r;
}

namespace {

// Coset representatives x of G/H, each with the subgroup index of xHx^-1.
std::vector<int> conjugates_over_cosets(const SubgroupClassLattice& L, int class_id) {
  const auto& G = L.group();
  const auto& rep = L.cls(class_id).rep;
  int rep_index = L.find_subgroup(rep.set);
  std::vector<char> covered(G.order(), 0);
  std::vector<int> out;
  for (int x = 0; x < G.order(); ++x) {
    if (covered[x]) continue;
    for (int h : rep.elements) covered[G.mul(x, h)] = 1;
    out.push_back(L.conjugate_subgroup(x, rep_index));
  }
  return out;
}

} // namespace

BurnsideElement BurnsideRing::generator_product_oracle(int h, int k) const {
  const auto& L = *lattice_;
  auto ch = conjugates_over_cosets(L, h);
  auto ck = conjugates_over_cosets(L, k);
  std::vector<std::int64_t> points(L.size(), 0);
  for (int a : ch)
    for (int b : ck) {
      ElementSet iso = L.subgroups()[a].set & L.subgroups()[b].set;
      ++points[L.class_of(iso)];
    }
  BurnsideElement r(lattice_);
  const std::int64_t order = L.group().order();
  for (int l = 0; l < L.size(); ++l) {
    if (points[l] == 0) continue;
    // Every orbit of type (L) has |G|/|L| points.
    std::int64_t p = points[l] * L.cls(l).order();
    if (p % order != 0) throw InternalConsistencyError("orbit count not integral");
    r.add(l, p / order);
  }
  return r;
}

BurnsideElement BurnsideRing::multiply_oracle(const BurnsideElement& a,
                                              const BurnsideElement& b) const {
  BurnsideElement r(lattice_);
  for (auto [h, x] : a.terms())
    for (auto [k, y] : b.terms()) {
      BurnsideElement p = generator_product_oracle(h, k);
      for (auto [l, z] : p.terms()) r.add(l, x * y * z);
    }
  return r;
}

std::vector<BurnsideElement> BurnsideRing::product_table(Exec exec) const {
  const int nc = lattice_->size();
  std::vector<BurnsideElement> table(static_cast<std::size_t>(nc) * nc);
  if (exec == Exec::Serial) {
    for (int h = 0; h < nc; ++h)
      for (int k = 0; k < nc; ++k) table[static_cast<std::size_t>(h) * nc + k] = compute_product(h, k);
    return table;
  }
#pragma omp parallel for schedule(dynamic)
  for (int idx = 0; idx < nc * nc; ++idx) table[idx] = compute_product(idx / nc, idx % nc);
  return table;
}

std::vector<BurnsideElement> BurnsideRing::oracle_table(Exec exec) const {
  const int nc = lattice_->size();
  std::vector<BurnsideElement> table(static_cast<std::size_t>(nc) * nc);
  if (exec == Exec::Serial) {
    for (int h = 0; h < nc; ++h)
      for (int k = 0; k < nc; ++k)
        table[static_cast<std::size_t>(h) * nc + k] = generator_product_oracle(h, k);
    return table;
  }
#pragma omp parallel for schedule(dynamic)
  for (int idx = 0; idx < nc * nc; ++idx) table[idx] = generator_product_oracle(idx / nc, idx % nc);
  return table;
}

} // namespace eqbif
