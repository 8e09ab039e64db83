#include "eqbif/twisted.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "eqbif/errors.hpp"

namespace eqbif {

Turn TwistedSubgroup::value(int element) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), element);
  if (it == elements.end() || *it != element)
    throw std::out_of_range("element not in twisted subgroup");
  return phi[static_cast<std::size_t>(it - elements.begin())];
}

std::strong_ordering TwistedSubgroup::operator<=>(const TwistedSubgroup& o) const {
  if (auto c = fold <=> o.fold; c != 0) return c;
  if (auto c = o.order() <=> order(); c != 0) return c;
  if (auto c = elements <=> o.elements; c != 0) return c;
  return phi <=> o.phi;
}

std::int64_t TwistedSum::coeff(const TwistedSubgroup& canonical) const {
  auto it = terms_.find(canonical);
  return it == terms_.end() ? 0 : it->second;
}

void TwistedSum::add(const TwistedSubgroup& canonical, std::int64_t c) {
  if (c == 0) return;
  auto& v = terms_[canonical];
  v += c;
  if (v == 0) terms_.erase(canonical);
}

TwistedSum TwistedSum::operator+(const TwistedSum& o) const {
  TwistedSum r = *this;
  for (const auto& [k, v] : o.terms_) r.add(k, v);
  return r;
}

TwistedSum TwistedSum::operator*(std::int64_t s) const {
  TwistedSum r;
  if (s != 0)
    for (const auto& [k, v] : terms_) r.terms_[k] = v * s;
  return r;
}

TwistedSum fold(int s, const TwistedSum& a) {
  if (s < 1) throw std::invalid_argument("folding factor must be at least 1");
  TwistedSum r;
  for (const auto& [k, v] : a.terms()) {
    TwistedSubgroup f = k;
    f.fold *= s;
    r.add(f, v);
  }
  return r;
}

// ---------------------------------------------------------------------------

TwistedAlgebra::TwistedAlgebra(LatticePtr gamma_prime_lattice)
    : lattice_(std::move(gamma_prime_lattice)), N_(lattice_->group().dihedral_n()) {
  if (!lattice_->group().is_gamma_prime())
    throw std::invalid_argument("twisted algebra requires the Z2 x Z2 x D_N lattice");
}

void TwistedAlgebra::validate(const TwistedSubgroup& H) const {
  const auto& G = group();
  if (H.fold < 0) throw std::invalid_argument("negative folding");
  if (H.elements.size() != H.phi.size() || H.elements.empty())
    throw std::invalid_argument("twisted subgroup tables have mismatched sizes");
  if (!std::is_sorted(H.elements.begin(), H.elements.end()))
    throw std::invalid_argument("twisted subgroup elements must be sorted");
  ElementSet s(G.order());
  for (int x : H.elements) s.insert(x);
  if (lattice_->find_subgroup(s) < 0) throw std::invalid_argument("K is not a subgroup");
  for (std::size_t a = 0; a < H.elements.size(); ++a)
    for (std::size_t b = 0; b < H.elements.size(); ++b)
      if (H.value(G.mul(H.elements[a], H.elements[b])) != H.phi[a] + H.phi[b])
        throw std::invalid_argument("phi is not a homomorphism");
  if (H.fold == 0)
    for (const auto& t : H.phi)
      if (!t.is_zero()) throw std::invalid_argument("product subgroup requires trivial phi");
}

TwistedSubgroup TwistedAlgebra::conjugate(int g, const TwistedSubgroup& H) const {
  const auto& G = group();
  std::vector<std::pair<int, Turn>> pairs;
  pairs.reserve(H.elements.size());
  for (std::size_t i = 0; i < H.elements.size(); ++i) pairs.emplace_back(G.conj(g, H.elements[i]), H.phi[i]);
  std::sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  TwistedSubgroup out;
  out.fold = H.fold;
  for (auto& [e, t] : pairs) {
    out.elements.push_back(e);
    out.phi.push_back(t);
  }
  return out;
}

TwistedOrbitType TwistedAlgebra::canonicalize(const TwistedSubgroup& H) const {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = canonical_cache_.find(H);
    if (it != canonical_cache_.end()) return it->second;
  }
  validate(H);
  TwistedSubgroup best = H;
  for (int g = 0; g < group().order(); ++g) {
    TwistedSubgroup c = conjugate(g, H);
    if (std::tie(c.elements, c.phi) < std::tie(best.elements, best.phi)) best = std::move(c);
  }
  TwistedOrbitType t{best, weyl_mod_circle(best)};
  std::lock_guard<std::mutex> lock(mutex_);
  canonical_cache_.emplace(H, t);
  return t;
}

int TwistedAlgebra::weyl_mod_circle(const TwistedSubgroup& H) const {
  int normalizer = 0;
  for (int g = 0; g < group().order(); ++g)
    if (conjugate(g, H) == H) ++normalizer;
  if (normalizer % H.order() != 0)
    throw InternalConsistencyError("twisted normalizer order not divisible by |K|");
  return normalizer / H.order();
}

bool TwistedAlgebra::contains(const TwistedSubgroup& big, const TwistedSubgroup& small) const {
  if (small.fold == 0) {
    if (big.fold != 0) return false;
  } else if (big.fold % small.fold != 0) {
    return false;
  }
  const std::int64_t ratio = small.fold == 0 ? 0 : big.fold / small.fold;
  for (std::size_t i = 0; i < small.elements.size(); ++i) {
    int k = small.elements[i];
    if (!std::binary_search(big.elements.begin(), big.elements.end(), k)) return false;
    if (small.fold != 0 && big.value(k) != small.phi[i] * ratio) return false;
  }
  return true;
}

const std::vector<TwistedSubgroup>& TwistedAlgebra::conjugates(const TwistedSubgroup& canonical) const {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = conjugate_cache_.find(canonical);
    if (it != conjugate_cache_.end()) return it->second;
  }
  std::set<TwistedSubgroup> all;
  for (int g = 0; g < group().order(); ++g) all.insert(conjugate(g, canonical));
  std::vector<TwistedSubgroup> v(all.begin(), all.end());
  std::lock_guard<std::mutex> lock(mutex_);
  return conjugate_cache_.emplace(canonical, std::move(v)).first->second;
}

int TwistedAlgebra::n(const TwistedSubgroup& H, const TwistedSubgroup& L) const {
  const auto& cl = conjugates(canonicalize(L).rep);
  int c = 0;
  for (const auto& x : cl) c += contains(x, H);
  return c;
}

std::vector<std::vector<Turn>> TwistedAlgebra::homomorphisms(const std::vector<int>& elements) const {
  const auto& G = group();
  auto gens = G.generating_set(elements);
  std::vector<int> orders;
  for (int g : gens) orders.push_back(G.element_order(g));
  std::vector<std::vector<Turn>> out;
  std::vector<int> choice(gens.size(), 0);
  while (true) {
    std::vector<int> assigned(G.order(), 0);
    std::vector<Turn> val(G.order());
    assigned[G.identity()] = 1;
    std::vector<int> queue{G.identity()};
    bool ok = true;
    for (std::size_t q = 0; q < queue.size() && ok; ++q) {
      int x = queue[q];
      for (std::size_t i = 0; i < gens.size() && ok; ++i) {
        int y = G.mul(x, gens[i]);
        Turn v = val[x] + Turn(choice[i], orders[i]);
        if (!assigned[y]) {
          assigned[y] = 1;
          val[y] = v;
          queue.push_back(y);
        } else if (val[y] != v) {
          ok = false;
        }
      }
    }
    if (ok) {
      std::vector<Turn> phi;
      for (int x : elements) phi.push_back(val[x]);
      out.push_back(std::move(phi));
    }
    std::size_t i = 0;
    for (; i < gens.size(); ++i) {
      if (++choice[i] < orders[i]) break;
      choice[i] = 0;
    }
    if (i == gens.size()) break;
  }
  return out;
}

TwistedSubgroup TwistedAlgebra::restrict_to(const TwistedSubgroup& H, const std::vector<int>& sub) const {
  TwistedSubgroup r;
  r.fold = H.fold;
  r.elements = sub;
  for (int x : sub) r.phi.push_back(H.value(x));
  return r;
}

TwistedSubgroup TwistedAlgebra::from_generators(const std::vector<CircleElement>& generators, int fold) const {
  if (fold < 0) throw std::invalid_argument("negative folding");
  auto F = generate_circle_group(N_, generators);
  std::map<int, Turn> phi;
  for (const auto& e : F) {
    int k = gamma_prime_index(N_, e.g);
    Turn v = e.theta * fold;
    auto [it, inserted] = phi.emplace(k, v);
    if (!inserted && it->second != v)
      throw std::invalid_argument("generators do not lie in a twisted subgroup of folding " +
                                  std::to_string(fold));
  }
  TwistedSubgroup H;
  H.fold = fold;
  for (auto& [k, v] : phi) {
    H.elements.push_back(k);
    H.phi.push_back(v);
  }
  validate(H);
  return H;
}

std::vector<CircleElement> TwistedAlgebra::generators_of(const TwistedSubgroup& H) const {
  std::vector<CircleElement> out;
  for (int g : group().generating_set(H.elements)) {
    Turn theta = H.fold == 0 ? Turn() : H.value(g).divided(H.fold);
    out.push_back({theta, gamma_prime_from_index(N_, g)});
  }
  return out;
}

std::string TwistedAlgebra::to_string(const TwistedSubgroup& H) const {
  auto gens = group().generating_set(H.elements);
  std::string s = "[";
  if (gens.empty()) s += group().label(group().identity());
  for (std::size_t i = 0; i < gens.size(); ++i) s += (i ? "," : "") + group().label(gens[i]);
  s += " | ";
  if (gens.empty()) s += "0";
  for (std::size_t i = 0; i < gens.size(); ++i) s += (i ? "," : "") + H.value(gens[i]).str();
  return s + " | " + std::to_string(H.fold) + "]";
}

// ---------------------------------------------------------------------------

TwistedSum TwistedAlgebra::compute_module_product(int k_class, const TwistedSubgroup& H) const {
  const auto& L = *lattice_;
  const auto& G = group();
  ElementSet kh(G.order());
  for (int x : H.elements) kh.insert(x);

  std::set<TwistedSubgroup> candidates;
  for (const auto& S : L.subgroups())
    if (S.set.subset_of(kh)) candidates.insert(canonicalize(restrict_to(H, S.elements)).rep);

  const std::int64_t wk = L.cls(k_class).weyl_order;
  const std::int64_t wh = canonicalize(H).weyl_mod_circle;
  std::vector<std::pair<TwistedSubgroup, std::int64_t>> done;
  TwistedSum result;
  for (const auto& T : candidates) {
    ElementSet ts(G.order());
    for (int x : T.elements) ts.insert(x);
    int t_class = L.class_of(ts);
    std::int64_t num = static_cast<std::int64_t>(L.n(t_class, k_class)) * wk * n(T, H) * wh;
    for (const auto& [U, nu] : done) num -= nu * n(T, U) * canonicalize(U).weyl_mod_circle;
    std::int64_t w = canonicalize(T).weyl_mod_circle;
    if (num % w != 0)
      throw InternalConsistencyError("inexact division in twisted module recurrence");
    std::int64_t c = num / w;
    if (c != 0) {
      done.emplace_back(T, c);
      result.add(T, c);
    }
  }
  return result;
}

const TwistedSum& TwistedAlgebra::generator_module_product(int k_class, const TwistedSubgroup& H) const {
  TwistedSubgroup canon = canonicalize(H).rep;
  auto key = std::make_pair(k_class, canon);
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = product_cache_.find(key);
    if (it != product_cache_.end()) return it->second;
  }
  TwistedSum r = compute_module_product(k_class, canon);
  std::lock_guard<std::mutex> lock(mutex_);
  return product_cache_.emplace(key, std::move(r)).first->second;
}

TwistedSum TwistedAlgebra::generator_module_product_oracle(int k_class, const TwistedSubgroup& H) const {
  // G-orbits on (Gamma'/K) x (G/H) correspond to H-orbits on Gamma'/K, where H acts
  // through its projection K_H; the isotropy of xK is (K_H cap xKx^-1)^{phi,l}.
  const auto& G = group();
  const auto& K = lattice_->cls(k_class).rep;
  std::vector<int> coset_of(G.order(), -1);
  std::vector<int> reps;
  for (int x = 0; x < G.order(); ++x) {
    if (coset_of[x] >= 0) continue;
    for (int k : K.elements) coset_of[G.mul(x, k)] = static_cast<int>(reps.size());
    reps.push_back(x);
  }
  std::vector<char> seen(reps.size(), 0);
  TwistedSum result;
  for (std::size_t c = 0; c < reps.size(); ++c) {
    if (seen[c]) continue;
    for (int h : H.elements) seen[coset_of[G.mul(h, reps[c])]] = 1;
    std::vector<int> iso;
    for (int h : H.elements)
      if (coset_of[G.mul(h, reps[c])] == static_cast<int>(c)) iso.push_back(h);
    result.add(canonicalize(restrict_to(H, iso)).rep, 1);
  }
  return result;
}

TwistedSum TwistedAlgebra::module_product(const BurnsideElement& a, const TwistedSum& b) const {
  TwistedSum r;
  for (auto [k, x] : a.terms())
    for (const auto& [H, y] : b.terms())
      r = r + generator_module_product(k, H) * (x * y);
  return r;
}

} // namespace eqbif
