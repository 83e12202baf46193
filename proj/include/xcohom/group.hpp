#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "xcohom/errors.hpp"

namespace xcohom {

// A finite group as a dense multiplication table over element indices
// 0..order-1. The identity is always index 0.
struct FiniteGroup {
  int order = 0;
  std::vector<int> mul_table;  // row-major, order x order
  std::vector<int> inv_table;
  std::string name;

  static constexpr int id = 0;

  int mul(int x, int y) const { return mul_table[x * order + y]; }
  int inv(int x) const { return inv_table[x]; }
  int conj(int x, int y) const { return mul(mul(x, y), inv(x)); }  // x y x^-1
  int pow(int x, int k) const;
  int element_order(int x) const;
  std::map<int, int> order_census() const;  // element order -> count
  bool is_abelian() const;
};

bool operator==(const FiniteGroup& a, const FiniteGroup& b);
inline bool operator!=(const FiniteGroup& a, const FiniteGroup& b) { return !(a == b); }

// Validates the table (identity at index 0, associativity, inverses) and
// fills in the inverse table.
// Throws BadShape / NoIdentity / NotAssociative / NoInverse.
FiniteGroup make_group(const std::vector<std::vector<int>>& mul, std::string name = "");
FiniteGroup make_group_flat(int order, std::vector<int> mul, std::string name = "");

FiniteGroup cyclic_group(int n);
FiniteGroup klein_four();
FiniteGroup symmetric3();
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

// Named builtins: C1, C2, C3, C4, C8, K4, S3.
std::optional<FiniteGroup> builtin_group(const std::string& name);
std::vector<std::string> builtin_group_names();

struct GroupHom {
  FiniteGroup src, dst;
  std::vector<int> map;

  int operator()(int x) const { return map[x]; }
};

// Throws BadShape / NotHomomorphic with a witness pair.
GroupHom make_hom(FiniteGroup src, FiniteGroup dst, std::vector<int> map);
GroupHom identity_hom(const FiniteGroup& g);
GroupHom trivial_hom(const FiniteGroup& src, const FiniteGroup& dst);

// Left action of `actor` on a finite set (optionally a group, in which case
// every actor element must act as an automorphism).
struct GroupAction {
  FiniteGroup actor;
  int target_size = 0;
  std::optional<FiniteGroup> target_group;
  std::vector<int> table;  // actor.order x target_size

  int operator()(int g, int t) const { return table[g * target_size + t]; }
};

// Throws NotFunctorial / NotAutomorphic with witnesses.
GroupAction make_action(FiniteGroup actor, int target_size, const std::vector<std::vector<int>>& rows);
GroupAction make_action(FiniteGroup actor, FiniteGroup target, const std::vector<std::vector<int>>& rows);
GroupAction make_action_flat(FiniteGroup actor, std::optional<FiniteGroup> target_group, int target_size,
                             std::vector<int> table);
GroupAction trivial_action(const FiniteGroup& actor, const FiniteGroup& target);

std::vector<int> fixed_points(const GroupAction& act);

// All automorphisms of M, ordered lexicographically by their map tables (so
// index 0 is the identity) with composition (a*b)(x) = a(b(x)).
struct AutomorphismGroup {
  FiniteGroup group;
  std::vector<std::vector<int>> perms;

  int index_of(const std::vector<int>& perm) const;  // -1 if absent
};

AutomorphismGroup automorphism_group(const FiniteGroup& m);

// The homomorphism actor -> Aut(target) induced by a group action.
GroupHom action_to_aut_hom(const GroupAction& act, const AutomorphismGroup& aut);

// Backtracking over generator images; deterministic (first match in index order).
std::optional<std::vector<int>> find_isomorphism(const FiniteGroup& a, const FiniteGroup& b);
bool are_isomorphic(const FiniteGroup& a, const FiniteGroup& b);

// Greedy generating sequence: repeatedly adjoin the least element outside the
// generated subgroup.
std::vector<int> generating_chain(const FiniteGroup& g);
std::vector<int> subgroup_closure(const FiniteGroup& g, std::vector<int> gens);

// Subgroup re-indexed as a fresh group, with explicit embedding tables.
struct Subgroup {
  FiniteGroup group;
  std::vector<int> embed;         // sub index -> parent index (ascending)
  std::vector<int> index_in_sub;  // parent index -> sub index, -1 outside
};

Subgroup subgroup_from_elements(const FiniteGroup& g, std::vector<int> elements);

// Quotient by a normal subgroup, cosets indexed by their least representative.
struct Quotient {
  FiniteGroup group;
  std::vector<int> proj;  // parent index -> coset index
  std::vector<int> reps;  // coset index -> least parent representative
};

Quotient quotient_by_normal(const FiniteGroup& g, const std::vector<int>& normal_elements);

}  // namespace xcohom
