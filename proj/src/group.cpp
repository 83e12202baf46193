#include "xcohom/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace xcohom {

int FiniteGroup::pow(int x, int k) const {
  int r = id;
  if (k < 0) {
    x = inv(x);
    k = -k;
  }
  for (int i = 0; i < k; ++i) r = mul(r, x);
  return r;
}

int FiniteGroup::element_order(int x) const {
  int r = x, k = 1;
  while (r != id) {
    r = mul(r, x);
    ++k;
  }
  return k;
}

std::map<int, int> FiniteGroup::order_census() const {
  std::map<int, int> census;
  for (int x = 0; x < order; ++x) ++census[element_order(x)];
  return census;
}

bool FiniteGroup::is_abelian() const {
  for (int x = 0; x < order; ++x)
    for (int y = 0; y < x; ++y)
      if (mul(x, y) != mul(y, x)) return false;
  return true;
}

bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
  return a.order == b.order && a.mul_table == b.mul_table;
}

FiniteGroup make_group_flat(int order, std::vector<int> mul, std::string name) {
  if (order <= 0)
    throw ValidationError("BadShape", {}, "group order must be positive");
  if ((int)mul.size() != order * order)
    throw ValidationError("BadShape", {}, "multiplication table is not square");
  for (int x = 0; x < order; ++x)
    for (int y = 0; y < order; ++y) {
      int v = mul[x * order + y];
      if (v < 0 || v >= order)
        throw ValidationError("BadShape", {x, y}, "table entry out of range");
    }

  auto at = [&](int x, int y) { return mul[x * order + y]; };

  // two-sided identity, required at index 0
  int e = -1;
  for (int c = 0; c < order && e < 0; ++c) {
    bool ok = true;
    for (int x = 0; x < order && ok; ++x) ok = at(c, x) == x && at(x, c) == x;
    if (ok) e = c;
  }
  if (e < 0)
    throw ValidationError("NoIdentity", {}, "no two-sided identity element");
  if (e != 0)
    throw ValidationError("NoIdentity", {e},
                          "identity element must be index 0, found index " + std::to_string(e));

  for (int x = 0; x < order; ++x)
    for (int y = 0; y < order; ++y)
      for (int z = 0; z < order; ++z)
        if (at(at(x, y), z) != at(x, at(y, z)))
          throw ValidationError("NotAssociative", {x, y, z},
                                "(x*y)*z != x*(y*z) at the witness triple");

  std::vector<int> inv(order, -1);
  for (int x = 0; x < order; ++x) {
    for (int y = 0; y < order; ++y)
      if (at(x, y) == 0 && at(y, x) == 0) {
        inv[x] = y;
        break;
      }
    if (inv[x] < 0)
      throw ValidationError("NoInverse", {x}, "element has no two-sided inverse");
  }

  FiniteGroup g;
  g.order = order;
  g.mul_table = std::move(mul);
  g.inv_table = std::move(inv);
  g.name = std::move(name);
  return g;
}

FiniteGroup make_group(const std::vector<std::vector<int>>& mul, std::string name) {
  int n = (int)mul.size();
  std::vector<int> flat;
  flat.reserve((size_t)n * n);
  for (const auto& row : mul) {
    if ((int)row.size() != n)
      throw ValidationError("BadShape", {}, "multiplication table is not square");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return make_group_flat(n, std::move(flat), std::move(name));
}

FiniteGroup cyclic_group(int n) {
  std::vector<int> mul((size_t)n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) mul[x * n + y] = (x + y) % n;
  return make_group_flat(n, std::move(mul), "C" + std::to_string(n));
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  int n = a.order * b.order;
  std::vector<int> mul((size_t)n * n);
  auto idx = [&](int x, int y) { return x * b.order + y; };
  for (int x1 = 0; x1 < a.order; ++x1)
    for (int y1 = 0; y1 < b.order; ++y1)
      for (int x2 = 0; x2 < a.order; ++x2)
        for (int y2 = 0; y2 < b.order; ++y2)
          mul[idx(x1, y1) * n + idx(x2, y2)] = idx(a.mul(x1, x2), b.mul(y1, y2));
  std::string name = a.name.empty() || b.name.empty() ? "" : a.name + "x" + b.name;
  return make_group_flat(n, std::move(mul), std::move(name));
}

FiniteGroup klein_four() {
  auto g = direct_product(cyclic_group(2), cyclic_group(2));
  g.name = "K4";
  return g;
}

FiniteGroup symmetric3() {
  // the 6 permutations of {0,1,2} in lexicographic one-line order;
  // composition (p*q)(x) = p(q(x)), identity first
  std::vector<std::vector<int>> perms = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                         {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  int n = (int)perms.size();
  std::vector<int> mul((size_t)n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<int> c(3);
      for (int x = 0; x < 3; ++x) c[x] = perms[i][perms[j][x]];
      mul[i * n + j] = (int)(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return make_group_flat(n, std::move(mul), "S3");
}

std::vector<std::string> builtin_group_names() {
  return {"C1", "C2", "C3", "C4", "C8", "K4", "S3"};
}

std::optional<FiniteGroup> builtin_group(const std::string& name) {
  if (name == "C1") return cyclic_group(1);
  if (name == "C2") return cyclic_group(2);
  if (name == "C3") return cyclic_group(3);
  if (name == "C4") return cyclic_group(4);
  if (name == "C8") return cyclic_group(8);
  if (name == "K4") return klein_four();
  if (name == "S3") return symmetric3();
  return std::nullopt;
}

GroupHom make_hom(FiniteGroup src, FiniteGroup dst, std::vector<int> map) {
  if ((int)map.size() != src.order)
    throw ValidationError("BadShape", {}, "homomorphism table has wrong length");
  for (int x = 0; x < src.order; ++x)
    if (map[x] < 0 || map[x] >= dst.order)
      throw ValidationError("BadShape", {x}, "homomorphism value out of range");
  if (map[FiniteGroup::id] != FiniteGroup::id)
    throw ValidationError("NotHomomorphic", {0}, "identity is not mapped to identity");
  for (int x = 0; x < src.order; ++x)
    for (int y = 0; y < src.order; ++y)
      if (map[src.mul(x, y)] != dst.mul(map[x], map[y]))
        throw ValidationError("NotHomomorphic", {x, y}, "map(x*y) != map(x)*map(y)");
  return GroupHom{std::move(src), std::move(dst), std::move(map)};
}

GroupHom identity_hom(const FiniteGroup& g) {
  std::vector<int> map(g.order);
  std::iota(map.begin(), map.end(), 0);
  return GroupHom{g, g, std::move(map)};
}

GroupHom trivial_hom(const FiniteGroup& src, const FiniteGroup& dst) {
  return GroupHom{src, dst, std::vector<int>(src.order, 0)};
}

GroupAction make_action_flat(FiniteGroup actor, std::optional<FiniteGroup> target_group,
                             int target_size, std::vector<int> table) {
  if (target_group && target_group->order != target_size)
    throw ValidationError("BadShape", {}, "target group order does not match target size");
  if ((int)table.size() != actor.order * target_size)
    throw ValidationError("BadShape", {}, "action table has wrong shape");
  auto at = [&](int g, int t) { return table[g * target_size + t]; };
  for (int g = 0; g < actor.order; ++g)
    for (int t = 0; t < target_size; ++t)
      if (at(g, t) < 0 || at(g, t) >= target_size)
        throw ValidationError("BadShape", {g, t}, "action value out of range");

  for (int t = 0; t < target_size; ++t)
    if (at(FiniteGroup::id, t) != t)
      throw ValidationError("NotFunctorial", {t}, "identity does not act trivially");

  if (target_group) {
    const FiniteGroup& m = *target_group;
    for (int g = 0; g < actor.order; ++g) {
      std::vector<char> seen(target_size, 0);
      for (int t = 0; t < target_size; ++t) {
        if (seen[at(g, t)])
          throw ValidationError("NotAutomorphic", {g, t}, "actor element acts non-bijectively");
        seen[at(g, t)] = 1;
      }
      for (int t1 = 0; t1 < target_size; ++t1)
        for (int t2 = 0; t2 < target_size; ++t2)
          if (at(g, m.mul(t1, t2)) != m.mul(at(g, t1), at(g, t2)))
            throw ValidationError("NotAutomorphic", {g, t1, t2},
                                  "actor element does not act as a homomorphism");
    }
  }

  for (int g = 0; g < actor.order; ++g)
    for (int h = 0; h < actor.order; ++h)
      for (int t = 0; t < target_size; ++t)
        if (at(actor.mul(g, h), t) != at(g, at(h, t)))
          throw ValidationError("NotFunctorial", {g, h, t}, "act(g*h, t) != act(g, act(h, t))");

  GroupAction a;
  a.actor = std::move(actor);
  a.target_size = target_size;
  a.target_group = std::move(target_group);
  a.table = std::move(table);
  return a;
}

static std::vector<int> flatten_rows(int expected_rows, const std::vector<std::vector<int>>& rows) {
  if ((int)rows.size() != expected_rows)
    throw ValidationError("BadShape", {}, "action table has wrong number of rows");
  std::vector<int> flat;
  for (const auto& row : rows) flat.insert(flat.end(), row.begin(), row.end());
  return flat;
}

GroupAction make_action(FiniteGroup actor, int target_size, const std::vector<std::vector<int>>& rows) {
  auto flat = flatten_rows(actor.order, rows);
  return make_action_flat(std::move(actor), std::nullopt, target_size, std::move(flat));
}

GroupAction make_action(FiniteGroup actor, FiniteGroup target, const std::vector<std::vector<int>>& rows) {
  auto flat = flatten_rows(actor.order, rows);
  int size = target.order;
  return make_action_flat(std::move(actor), std::move(target), size, std::move(flat));
}

GroupAction trivial_action(const FiniteGroup& actor, const FiniteGroup& target) {
  std::vector<int> table((size_t)actor.order * target.order);
  for (int g = 0; g < actor.order; ++g)
    for (int t = 0; t < target.order; ++t) table[g * target.order + t] = t;
  return make_action_flat(actor, target, target.order, std::move(table));
}

std::vector<int> fixed_points(const GroupAction& act) {
  std::vector<int> fixed;
  for (int t = 0; t < act.target_size; ++t) {
    bool ok = true;
    for (int g = 0; g < act.actor.order && ok; ++g) ok = act(g, t) == t;
    if (ok) fixed.push_back(t);
  }
  return fixed;
}

std::vector<int> subgroup_closure(const FiniteGroup& g, std::vector<int> gens) {
  std::set<int> members = {FiniteGroup::id};
  std::vector<int> frontier = {FiniteGroup::id};
  for (int x : gens)
    if (members.insert(x).second) frontier.push_back(x);
  while (!frontier.empty()) {
    int x = frontier.back();
    frontier.pop_back();
    for (int y : gens) {
      int z = g.mul(x, y);
      if (members.insert(z).second) frontier.push_back(z);
    }
  }
  return {members.begin(), members.end()};
}

std::vector<int> generating_chain(const FiniteGroup& g) {
  std::vector<int> gens;
  std::vector<int> sub = {FiniteGroup::id};
  while ((int)sub.size() < g.order) {
    int next = -1;
    std::set<int> in_sub(sub.begin(), sub.end());
    for (int x = 0; x < g.order; ++x)
      if (!in_sub.count(x)) {
        next = x;
        break;
      }
    gens.push_back(next);
    sub = subgroup_closure(g, gens);
  }
  return gens;
}

namespace {

// Breadth-first expressions of all elements as words in the generators:
// order[k] is reached as order[parent] * gens[gen], letting candidate
// generator images determine a full map.
struct WordTree {
  std::vector<int> order;   // discovery order, order[0] = id
  std::vector<int> parent;  // position in `order`
  std::vector<int> gen;     // generator index used
};

WordTree word_tree(const FiniteGroup& g, const std::vector<int>& gens) {
  WordTree t;
  std::vector<int> pos(g.order, -1);
  t.order.push_back(FiniteGroup::id);
  t.parent.push_back(-1);
  t.gen.push_back(-1);
  pos[FiniteGroup::id] = 0;
  for (size_t i = 0; i < t.order.size(); ++i) {
    for (int j = 0; j < (int)gens.size(); ++j) {
      int next = g.mul(t.order[i], gens[j]);
      if (pos[next] < 0) {
        pos[next] = (int)t.order.size();
        t.order.push_back(next);
        t.parent.push_back((int)i);
        t.gen.push_back(j);
      }
    }
  }
  return t;
}

// Enumerates all isomorphisms src -> dst (all automorphisms when src == dst),
// via backtracking over generator images filtered by element order.
std::vector<std::vector<int>> all_isomorphisms(const FiniteGroup& src, const FiniteGroup& dst,
                                               bool first_only) {
  std::vector<std::vector<int>> found;
  if (src.order != dst.order) return found;

  auto gens = generating_chain(src);
  auto tree = word_tree(src, gens);

  std::vector<std::vector<int>> candidates(gens.size());
  for (size_t i = 0; i < gens.size(); ++i) {
    int ord = src.element_order(gens[i]);
    for (int y = 0; y < dst.order; ++y)
      if (dst.element_order(y) == ord) candidates[i].push_back(y);
    if (candidates[i].empty()) return found;
  }

  std::vector<size_t> pick(gens.size(), 0);
  while (true) {
    std::vector<int> map(src.order, -1);
    map[FiniteGroup::id] = FiniteGroup::id;
    for (size_t i = 1; i < tree.order.size(); ++i) {
      int img_parent = map[tree.order[tree.parent[i]]];
      map[tree.order[i]] = dst.mul(img_parent, candidates[tree.gen[i]][pick[tree.gen[i]]]);
    }
    bool ok = true;
    std::vector<char> seen(dst.order, 0);
    for (int x = 0; x < src.order && ok; ++x) {
      if (seen[map[x]]) ok = false;
      seen[map[x]] = 1;
    }
    for (int x = 0; x < src.order && ok; ++x)
      for (int y = 0; y < src.order && ok; ++y)
        if (map[src.mul(x, y)] != dst.mul(map[x], map[y])) ok = false;
    if (ok) {
      found.push_back(map);
      if (first_only) return found;
    }

    // odometer over candidate tuples
    size_t i = 0;
    for (; i < gens.size(); ++i) {
      if (++pick[i] < candidates[i].size()) break;
      pick[i] = 0;
    }
    if (i == gens.size()) break;
  }
  return found;
}

}  // namespace

AutomorphismGroup automorphism_group(const FiniteGroup& m) {
  auto perms = all_isomorphisms(m, m, false);
  std::sort(perms.begin(), perms.end());

  int n = (int)perms.size();
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < n; ++i) index[perms[i]] = i;

  std::vector<int> mul((size_t)n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::vector<int> c(m.order);
      for (int x = 0; x < m.order; ++x) c[x] = perms[a][perms[b][x]];
      mul[a * n + b] = index.at(c);
    }

  AutomorphismGroup aut;
  aut.group = make_group_flat(n, std::move(mul),
                              m.name.empty() ? "Aut" : "Aut(" + m.name + ")");
  aut.perms = std::move(perms);
  return aut;
}

int AutomorphismGroup::index_of(const std::vector<int>& perm) const {
  auto it = std::lower_bound(perms.begin(), perms.end(), perm);
  if (it == perms.end() || *it != perm) return -1;
  return (int)(it - perms.begin());
}

GroupHom action_to_aut_hom(const GroupAction& act, const AutomorphismGroup& aut) {
  std::vector<int> map(act.actor.order);
  for (int g = 0; g < act.actor.order; ++g) {
    std::vector<int> perm(act.target_size);
    for (int t = 0; t < act.target_size; ++t) perm[t] = act(g, t);
    int idx = aut.index_of(perm);
    if (idx < 0)
      throw ValidationError("NotAutomorphic", {g}, "actor element is not an automorphism");
    map[g] = idx;
  }
  return make_hom(act.actor, aut.group, std::move(map));
}

std::optional<std::vector<int>> find_isomorphism(const FiniteGroup& a, const FiniteGroup& b) {
  auto found = all_isomorphisms(a, b, true);
  if (found.empty()) return std::nullopt;
  return found.front();
}

bool are_isomorphic(const FiniteGroup& a, const FiniteGroup& b) {
  return find_isomorphism(a, b).has_value();
}

Subgroup subgroup_from_elements(const FiniteGroup& g, std::vector<int> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (elements.empty() || elements[0] != FiniteGroup::id)
    throw ValidationError("NotASubgroup", {}, "subset does not contain the identity");

  std::vector<int> index_in_sub(g.order, -1);
  for (int i = 0; i < (int)elements.size(); ++i) index_in_sub[elements[i]] = i;
  for (int x : elements)
    for (int y : elements)
      if (index_in_sub[g.mul(x, y)] < 0)
        throw ValidationError("NotASubgroup", {x, y}, "subset is not closed under multiplication");
  for (int x : elements)
    if (index_in_sub[g.inv(x)] < 0)
      throw ValidationError("NotASubgroup", {x}, "subset is not closed under inverses");

  int n = (int)elements.size();
  std::vector<int> mul((size_t)n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) mul[i * n + j] = index_in_sub[g.mul(elements[i], elements[j])];

  Subgroup sub;
  sub.group = make_group_flat(n, std::move(mul));
  sub.embed = std::move(elements);
  sub.index_in_sub = std::move(index_in_sub);
  return sub;
}

Quotient quotient_by_normal(const FiniteGroup& g, const std::vector<int>& normal_elements) {
  Subgroup n = subgroup_from_elements(g, normal_elements);
  for (int x = 0; x < g.order; ++x)
    for (int m : n.embed)
      if (n.index_in_sub[g.conj(x, m)] < 0)
        throw ValidationError("NotNormal", {x, m}, "subgroup is not closed under conjugation");

  std::vector<int> coset_rep(g.order);
  for (int x = 0; x < g.order; ++x) {
    int rep = g.order;
    for (int m : n.embed) rep = std::min(rep, g.mul(x, m));
    coset_rep[x] = rep;
  }
  std::vector<int> reps;
  for (int x = 0; x < g.order; ++x)
    if (coset_rep[x] == x) reps.push_back(x);
  std::sort(reps.begin(), reps.end());

  std::vector<int> proj(g.order);
  for (int x = 0; x < g.order; ++x)
    proj[x] = (int)(std::lower_bound(reps.begin(), reps.end(), coset_rep[x]) - reps.begin());

  int q = (int)reps.size();
  std::vector<int> mul((size_t)q * q);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) mul[i * q + j] = proj[g.mul(reps[i], reps[j])];
  // well-definedness across all representatives
  for (int x = 0; x < g.order; ++x)
    for (int y = 0; y < g.order; ++y)
      check(proj[g.mul(x, y)] == mul[proj[x] * q + proj[y]], "quotient multiplication ill-defined");

  Quotient quot;
  quot.group = make_group_flat(q, std::move(mul));
  quot.proj = std::move(proj);
  quot.reps = std::move(reps);
  return quot;
}

}  // namespace xcohom
