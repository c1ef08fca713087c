#pragma once

#include <memory>
#include <string>
#include <vector>

namespace fuscat {

// Finite group given by its Cayley table. Element 0 is always the identity.
class FiniteGroup {
 public:
  // table[a][b] = a*b. Throws structural_error unless the table is a Latin
  // square with two-sided identity 0, inverses, and an associative product.
  // Associativity is checked directly for small orders and via Light's test
  // on a generating set for large ones.
  explicit FiniteGroup(std::vector<std::vector<int>> table,
                       std::vector<std::string> names = {});

  int order() const { return static_cast<int>(table_.size()); }
  int mul(int a, int b) const { return table_.at(a).at(b); }
  int inv(int a) const { return inverse_.at(a); }
  const std::string& name(int a) const { return names_.at(a); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<std::vector<int>>& table() const { return table_; }

  bool same_as(const FiniteGroup& other) const {
    return table_ == other.table_;
  }

 private:
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
  std::vector<std::string> names_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

// Stock constructions used throughout the test corpus.
GroupPtr cyclic_group(int n);
GroupPtr dihedral_group(int n);    // order 2n, n >= 1
GroupPtr symmetric_group(int n);   // n <= 6
GroupPtr alternating_group(int n); // n <= 6
GroupPtr quaternion_group();       // Q8

// Closure of permutation generators acting on {0..degree-1}. Elements are
// enumerated breadth-first from the identity, multiplying by generators in
// input order; element indices are therefore reproducible. Composition is
// (x*s)[i] = x[s[i]]. Throws size_error past order_cap.
GroupPtr from_permutations(int degree,
                           const std::vector<std::vector<int>>& generators,
                           int order_cap = 20000);

// Partition into conjugacy classes: identity class first, the rest sorted by
// (size, smallest element). Each class lists elements in increasing order.
std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g);

// All normal subgroups as sorted element lists (unions of conjugacy classes
// closed under product), ordered by (size, lexicographic elements). Includes
// {identity} and the whole group.
std::vector<std::vector<int>> normal_subgroups(const FiniteGroup& g);

// Nontrivial group with no proper nontrivial normal subgroup. The trivial
// group is not simple.
bool is_simple(const FiniteGroup& g);

// Group homomorphism with explicit source and target handles.
struct GroupHom {
  GroupPtr source;
  GroupPtr target;
  std::vector<int> map;  // map[a] in target

  // Throws structural_error unless map respects products and identity.
  GroupHom(GroupPtr source, GroupPtr target, std::vector<int> map);

  bool injective() const;
  bool surjective() const;
  std::vector<int> kernel() const;  // sorted
  std::vector<int> image() const;   // sorted
};

// Subgroup generated by verifying closure of the given element set; elements
// are reordered ascending with the identity first. The embedding hom maps the
// new group's indices back into the parent.
struct Subgroup {
  GroupPtr group;
  std::vector<int> elements;  // parent indices, ascending, elements[0] == 0
  GroupHom embedding;
};
Subgroup subgroup(const GroupPtr& g, std::vector<int> elements);

// Quotient by a normal subgroup. Coset of the identity gets index 0; other
// cosets are ordered by their smallest member. Throws precondition_error if
// the subgroup is not normal.
struct Quotient {
  GroupPtr group;
  GroupHom projection;
};
Quotient quotient(const GroupPtr& g, const std::vector<int>& normal_sub);

// Exactness of 1 -> A -i-> G -p-> B -> 1: i injective, p surjective,
// image(i) == kernel(p). Throws structural_error when i.target and p.source
// are different groups.
bool check_group_exact(const GroupHom& i, const GroupHom& p);

}  // namespace fuscat
