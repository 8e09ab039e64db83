#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace eqbif {

// Fixed-universe bitset over dense element indices.
class ElementSet {
public:
  ElementSet() = default;
  explicit ElementSet(int universe);

  int universe() const { return universe_; }
  void insert(int i) { words_[static_cast<std::size_t>(i) >> 6] |= (std::uint64_t{1} << (i & 63)); }
  bool contains(int i) const {
    return (words_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1u;
  }
  int count() const;
  bool subset_of(const ElementSet& other) const;
  ElementSet operator&(const ElementSet& other) const;
  std::vector<int> elements() const;

  bool operator==(const ElementSet& other) const { return words_ == other.words_; }
  // Lexicographic comparison of the sorted index lists.
  bool lex_less(const ElementSet& other) const;
  std::size_t hash() const;

private:
  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

// gamma^rotation kappa^reflection in D_N, acting on cycle vertices by
// i -> (reflection ? -i : i) + rotation (mod N).
struct DihedralElement {
  int rotation = 0;
  bool reflection = false;
  bool operator==(const DihedralElement&) const = default;
};

struct GammaPrimeElement {
  int kappa1 = 1;
  int kappa2 = 1;
  DihedralElement dihedral;
  bool operator==(const GammaPrimeElement&) const = default;
};

DihedralElement dihedral_mul(int N, DihedralElement a, DihedralElement b);
int dihedral_act(int N, DihedralElement g, int vertex);
int dihedral_index(int N, DihedralElement g);
DihedralElement dihedral_from_index(int N, int index);
std::string dihedral_label(DihedralElement g);

GammaPrimeElement gamma_prime_mul(int N, const GammaPrimeElement& a, const GammaPrimeElement& b);
int gamma_prime_index(int N, const GammaPrimeElement& g);
GammaPrimeElement gamma_prime_from_index(int N, int index);

class FiniteGroup {
public:
  // table[a * order + b] = index of a*b. Validates the Latin-square property
  // and locates identity and inverses.
  FiniteGroup(std::string name, std::vector<std::string> labels, std::vector<int> table);

  const std::string& name() const { return name_; }
  int order() const { return order_; }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }
  int inv(int a) const { return inverse_[a]; }
  int conj(int g, int x) const { return mul(mul(g, x), inverse_[g]); }
  int element_order(int a) const;
  const std::string& label(int a) const { return labels_[a]; }

  // Dihedral order N when built by dihedral_group / gamma_prime, else 0.
  int dihedral_n() const { return dihedral_n_; }
  bool is_gamma_prime() const { return gamma_prime_; }

  ElementSet closure(const std::vector<int>& generators) const;
  // Greedy generating set: scan the sorted elements, keep those not yet spanned.
  std::vector<int> generating_set(const std::vector<int>& sorted_elements) const;

private:
  friend FiniteGroup dihedral_group(int N);
  friend FiniteGroup gamma_prime(int N);

  std::string name_;
  std::vector<std::string> labels_;
  std::vector<int> table_;
  std::vector<int> inverse_;
  int order_ = 0;
  int identity_ = 0;
  int dihedral_n_ = 0;
  bool gamma_prime_ = false;
};

FiniteGroup dihedral_group(int N);
// Z2 x Z2 x D_N with index ((kappa1 == -1) * 2 + (kappa2 == -1)) * 2N + dihedral index.
FiniteGroup gamma_prime(int N);
FiniteGroup trivial_group();
FiniteGroup klein_four_group();

struct Subgroup {
  ElementSet set;
  std::vector<int> elements;
  int order() const { return static_cast<int>(elements.size()); }
};

constexpr int kDefaultGroupCap = 200;

std::vector<Subgroup> enumerate_subgroups(const FiniteGroup& G, int cap = kDefaultGroupCap);

struct SubgroupClass {
  int id = 0;
  Subgroup rep;
  int normalizer_order = 0;
  int weyl_order = 0;
  std::vector<int> members; // indices into SubgroupClassLattice::subgroups()
  int order() const { return rep.order(); }
};

class SubgroupClassLattice;
using LatticePtr = std::shared_ptr<const SubgroupClassLattice>;

class SubgroupClassLattice {
public:
  static LatticePtr build(std::shared_ptr<const FiniteGroup> G, int cap = kDefaultGroupCap);

  const FiniteGroup& group() const { return *group_; }
  std::shared_ptr<const FiniteGroup> group_ptr() const { return group_; }
  int size() const { return static_cast<int>(classes_.size()); }
  const SubgroupClass& cls(int id) const { return classes_.at(static_cast<std::size_t>(id)); }
  const std::vector<Subgroup>& subgroups() const { return subgroups_; }

  int class_of_subgroup(int subgroup_index) const { return subgroup_class_[subgroup_index]; }
  int find_subgroup(const ElementSet& s) const;
  // Class id of the subgroup with this element set; throws if s is not a subgroup.
  int class_of(const ElementSet& s) const;
  int conjugate_subgroup(int g, int subgroup_index) const {
    return conj_table_[static_cast<std::size_t>(g) * subgroups_.size() + subgroup_index];
  }

  // Number of subgroups in class k that contain the representative of class h.
  int n(int h, int k) const { return n_table_[static_cast<std::size_t>(h) * classes_.size() + k]; }
  bool leq(int h, int k) const { return n(h, k) > 0; }
  int top() const { return 0; }
  int bottom() const { return size() - 1; }
  std::string class_label(int id) const;

private:
  SubgroupClassLattice() = default;
  std::shared_ptr<const FiniteGroup> group_;
  std::vector<Subgroup> subgroups_;
  std::unordered_map<ElementSet, int, ElementSetHash> index_;
  std::vector<int> conj_table_;
  std::vector<int> subgroup_class_;
  std::vector<SubgroupClass> classes_;
  std::vector<int> n_table_;
};

} // namespace eqbif
