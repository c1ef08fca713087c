#include "fuscat/finite_group.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "fuscat/errors.hpp"

namespace fuscat {

namespace {

// Greedy generating set for Light's associativity test: grow the closure of
// the chosen generators until it covers the whole table.
std::vector<int> light_generators(const std::vector<std::vector<int>>& t) {
  const int n = static_cast<int>(t.size());
  std::vector<int> gens;
  std::vector<char> reach(n, 0);
  reach[0] = 1;
  int covered = 1;
  while (covered < n) {
    int fresh = -1;
    for (int x = 0; x < n; ++x)
      if (!reach[x]) {
        fresh = x;
        break;
      }
    gens.push_back(fresh);
    std::queue<int> q;
    for (int x = 0; x < n; ++x)
      if (reach[x]) q.push(x);
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      for (int g : gens) {
        int y = t[x][g];
        if (!reach[y]) {
          reach[y] = 1;
          ++covered;
          q.push(y);
        }
      }
    }
  }
  return gens;
}

}  // namespace

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> table,
                         std::vector<std::string> names)
    : table_(std::move(table)), names_(std::move(names)) {
  const int n = static_cast<int>(table_.size());
  if (n == 0) throw structural_error("group table is empty");
  for (const auto& row : table_) {
    if (static_cast<int>(row.size()) != n)
      throw structural_error("group table is not square");
    for (int v : row)
      if (v < 0 || v >= n)
        throw structural_error("group table entry out of range");
  }
  for (int a = 0; a < n; ++a)
    if (table_[0][a] != a || table_[a][0] != a)
      throw structural_error("element 0 is not a two-sided identity");
  for (int a = 0; a < n; ++a) {
    std::vector<char> row_seen(n, 0), col_seen(n, 0);
    for (int b = 0; b < n; ++b) {
      if (row_seen[table_[a][b]]++)
        throw structural_error("group table row is not a permutation");
      if (col_seen[table_[b][a]]++)
        throw structural_error("group table column is not a permutation");
    }
  }

  if (n <= 300) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
            throw structural_error("group table is not associative");
  } else {
    // Light's test: associativity against a generating set implies
    // associativity everywhere.
    for (int g : light_generators(table_))
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          if (table_[table_[a][g]][b] != table_[a][table_[g][b]])
            throw structural_error("group table is not associative");
  }

  inverse_.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (table_[a][b] == 0) {
        if (table_[b][a] != 0)
          throw structural_error("one-sided inverse in group table");
        inverse_[a] = b;
      }

  if (names_.empty()) {
    names_.resize(n);
    for (int a = 0; a < n; ++a) names_[a] = "g" + std::to_string(a);
  } else if (static_cast<int>(names_.size()) != n) {
    throw structural_error("group name count does not match order");
  }
}

GroupPtr cyclic_group(int n) {
  if (n <= 0) throw structural_error("cyclic group order must be positive");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  std::vector<std::string> names(n);
  for (int a = 0; a < n; ++a) {
    names[a] = std::to_string(a);
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  }
  return std::make_shared<FiniteGroup>(std::move(t), std::move(names));
}

GroupPtr dihedral_group(int n) {
  if (n <= 0) throw structural_error("dihedral parameter must be positive");
  const int order = 2 * n;
  auto idx = [n](int a, int b) { return ((a % n) + n) % n + n * b; };
  std::vector<std::vector<int>> t(order, std::vector<int>(order));
  std::vector<std::string> names(order);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < 2; ++b) {
      const int x = idx(a, b);
      names[x] = b == 0 ? (a == 0 ? std::string("e")
                                  : "r" + std::to_string(a))
                        : (a == 0 ? std::string("s")
                                  : "sr" + std::to_string(a));
      for (int a2 = 0; a2 < n; ++a2)
        for (int b2 = 0; b2 < 2; ++b2)
          // r^a s^b * r^c s^d = r^(a + (-1)^b c) s^(b xor d)
          t[x][idx(a2, b2)] = idx(b == 0 ? a + a2 : a - a2, b ^ b2);
    }
  return std::make_shared<FiniteGroup>(std::move(t), std::move(names));
}

GroupPtr from_permutations(int degree,
                           const std::vector<std::vector<int>>& generators,
                           int order_cap) {
  if (degree <= 0) throw structural_error("permutation degree must be positive");
  if (generators.empty())
    throw structural_error("permutation group needs at least one generator");
  for (const auto& g : generators) {
    if (static_cast<int>(g.size()) != degree)
      throw structural_error("generator length does not match degree");
    std::vector<char> seen(degree, 0);
    for (int v : g) {
      if (v < 0 || v >= degree || seen[v]++)
        throw structural_error("generator is not a permutation");
    }
  }

  std::vector<int> identity(degree);
  std::iota(identity.begin(), identity.end(), 0);
  std::vector<std::vector<int>> elems{identity};
  std::map<std::vector<int>, int> index{{identity, 0}};
  // Breadth-first closure, multiplying by generators on the right in input
  // order, so element indices are reproducible across runs.
  for (std::size_t head = 0; head < elems.size(); ++head) {
    const auto x = elems[head];
    for (const auto& g : generators) {
      std::vector<int> w(degree);
      for (int i = 0; i < degree; ++i) w[i] = x[g[i]];
      if (index.emplace(w, static_cast<int>(elems.size())).second) {
        elems.push_back(std::move(w));
        if (static_cast<int>(elems.size()) > order_cap)
          throw size_error("permutation closure exceeds order cap");
      }
    }
  }

  const int n = static_cast<int>(elems.size());
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::vector<int> w(degree);
      for (int i = 0; i < degree; ++i) w[i] = elems[a][elems[b][i]];
      t[a][b] = index.at(w);
    }

  std::vector<std::string> names(n);
  for (int a = 0; a < n; ++a) {
    std::ostringstream os;
    if (degree <= 10) {
      for (int v : elems[a]) os << v;
    } else {
      for (int i = 0; i < degree; ++i) os << (i ? "," : "") << elems[a][i];
    }
    names[a] = os.str();
  }
  return std::make_shared<FiniteGroup>(std::move(t), std::move(names));
}

GroupPtr symmetric_group(int n) {
  if (n < 1 || n > 6) throw size_error("symmetric_group supports n in 1..6");
  if (n == 1) return cyclic_group(1);
  std::vector<int> cycle(n), swap01(n);
  std::iota(cycle.begin(), cycle.end(), 0);
  std::rotate(cycle.begin(), cycle.begin() + 1, cycle.end());
  std::iota(swap01.begin(), swap01.end(), 0);
  std::swap(swap01[0], swap01[1]);
  return from_permutations(n, {cycle, swap01});
}

GroupPtr alternating_group(int n) {
  if (n < 3 || n > 6) throw size_error("alternating_group supports n in 3..6");
  std::vector<int> three(n);
  std::iota(three.begin(), three.end(), 0);
  three[0] = 1;
  three[1] = 2;
  three[2] = 0;
  if (n == 3) return from_permutations(n, {three});
  std::vector<int> big(n);
  std::iota(big.begin(), big.end(), 0);
  if (n % 2 == 1) {
    std::rotate(big.begin(), big.begin() + 1, big.end());
  } else {
    std::rotate(big.begin() + 1, big.begin() + 2, big.end());
  }
  return from_permutations(n, {three, big});
}

GroupPtr quaternion_group() {
  // Elements 1,-1,i,-i,j,-j,k,-k encoded as (symbol, sign).
  // mul table on symbols e,i,j,k with the sign of the product.
  static const int sym[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sgn[4][4] = {{+1, +1, +1, +1},
                                {+1, -1, +1, -1},
                                {+1, -1, -1, +1},
                                {+1, +1, -1, -1}};
  auto enc = [](int s, int sign) { return 2 * s + (sign < 0 ? 1 : 0); };
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      const int sa = a / 2, sb = b / 2;
      const int signa = a % 2 ? -1 : 1, signb = b % 2 ? -1 : 1;
      t[a][b] = enc(sym[sa][sb], signa * signb * sgn[sa][sb]);
    }
  std::vector<std::string> names{"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  return std::make_shared<FiniteGroup>(std::move(t), std::move(names));
}

std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g) {
  const int n = g.order();
  std::vector<int> cls(n, -1);
  std::vector<std::vector<int>> classes;
  for (int x = 0; x < n; ++x) {
    if (cls[x] >= 0) continue;
    std::vector<int> c;
    for (int h = 0; h < n; ++h) {
      int y = g.mul(g.mul(h, x), g.inv(h));
      if (cls[y] < 0) {
        cls[y] = 0;  // provisional mark
        c.push_back(y);
      }
    }
    std::sort(c.begin(), c.end());
    classes.push_back(std::move(c));
  }
  std::sort(classes.begin() + 1, classes.end(),
            [](const auto& a, const auto& b) {
              return std::pair(a.size(), a[0]) < std::pair(b.size(), b[0]);
            });
  return classes;
}

std::vector<std::vector<int>> normal_subgroups(const FiniteGroup& g) {
  const auto classes = conjugacy_classes(g);
  const int r = static_cast<int>(classes.size());
  if (r - 1 > 24)
    throw size_error("normal_subgroups: too many conjugacy classes");
  const int n = g.order();

  std::vector<std::vector<int>> out;
  for (std::uint32_t mask = 0; mask < (1u << (r - 1)); ++mask) {
    int size = static_cast<int>(classes[0].size());
    for (int c = 1; c < r; ++c)
      if (mask & (1u << (c - 1))) size += static_cast<int>(classes[c].size());
    if (n % size != 0) continue;

    std::vector<char> in(n, 0);
    in[0] = 1;
    std::vector<int> elems{0};
    for (int c = 1; c < r; ++c)
      if (mask & (1u << (c - 1)))
        for (int x : classes[c]) {
          in[x] = 1;
          elems.push_back(x);
        }
    // A finite subset closed under the product is a subgroup; being a union
    // of classes makes it normal.
    bool closed = true;
    for (std::size_t i = 0; i < elems.size() && closed; ++i)
      for (std::size_t j = 0; j < elems.size(); ++j)
        if (!in[g.mul(elems[i], elems[j])]) {
          closed = false;
          break;
        }
    if (!closed) continue;
    std::sort(elems.begin(), elems.end());
    out.push_back(std::move(elems));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

bool is_simple(const FiniteGroup& g) {
  if (g.order() == 1) return false;
  return normal_subgroups(g).size() == 2;
}

GroupHom::GroupHom(GroupPtr source_in, GroupPtr target_in,
                   std::vector<int> map_in)
    : source(std::move(source_in)), target(std::move(target_in)),
      map(std::move(map_in)) {
  if (!source || !target) throw structural_error("hom with null group");
  const int n = source->order();
  if (static_cast<int>(map.size()) != n)
    throw structural_error("hom map length does not match source order");
  for (int v : map)
    if (v < 0 || v >= target->order())
      throw structural_error("hom map value out of range");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (map[source->mul(a, b)] != target->mul(map[a], map[b])) {
        std::ostringstream os;
        os << "not a homomorphism at (" << source->name(a) << ","
           << source->name(b) << ")";
        throw structural_error(os.str());
      }
}

bool GroupHom::injective() const {
  return kernel().size() == 1;
}

bool GroupHom::surjective() const {
  return static_cast<int>(image().size()) == target->order();
}

std::vector<int> GroupHom::kernel() const {
  std::vector<int> k;
  for (int a = 0; a < source->order(); ++a)
    if (map[a] == 0) k.push_back(a);
  return k;
}

std::vector<int> GroupHom::image() const {
  std::set<int> s(map.begin(), map.end());
  return {s.begin(), s.end()};
}

Subgroup subgroup(const GroupPtr& g, std::vector<int> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()),
                 elements.end());
  if (elements.empty() || elements[0] != 0)
    throw precondition_error("subgroup must contain the identity");
  std::vector<int> pos(g->order(), -1);
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (elements[i] < 0 || elements[i] >= g->order())
      throw structural_error("subgroup element out of range");
    pos[elements[i]] = static_cast<int>(i);
  }
  const int m = static_cast<int>(elements.size());
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  std::vector<std::string> names(m);
  for (int i = 0; i < m; ++i) {
    names[i] = g->name(elements[i]);
    for (int j = 0; j < m; ++j) {
      int p = pos[g->mul(elements[i], elements[j])];
      if (p < 0)
        throw precondition_error("subgroup set is not closed under product");
      t[i][j] = p;
    }
  }
  auto sub = std::make_shared<FiniteGroup>(std::move(t), std::move(names));
  GroupHom embed(sub, g, elements);
  return Subgroup{std::move(sub), std::move(elements), std::move(embed)};
}

Quotient quotient(const GroupPtr& g, const std::vector<int>& normal_sub) {
  Subgroup sub = subgroup(g, normal_sub);
  const auto& nset = sub.elements;
  std::vector<char> in(g->order(), 0);
  for (int x : nset) in[x] = 1;
  for (int a = 0; a < g->order(); ++a)
    for (int x : nset)
      if (!in[g->mul(g->mul(a, x), g->inv(a))])
        throw precondition_error("subgroup is not normal");

  // Left cosets; scanning elements in increasing order makes the first
  // unvisited element the smallest of its coset, so coset indices are
  // ordered by smallest member with the identity coset first.
  std::vector<int> coset_of(g->order(), -1);
  std::vector<int> reps;
  for (int a = 0; a < g->order(); ++a) {
    if (coset_of[a] >= 0) continue;
    const int idx = static_cast<int>(reps.size());
    reps.push_back(a);
    for (int x : nset) coset_of[g->mul(a, x)] = idx;
  }
  const int q = static_cast<int>(reps.size());
  std::vector<std::vector<int>> t(q, std::vector<int>(q));
  std::vector<std::string> names(q);
  for (int a = 0; a < q; ++a) {
    names[a] = "[" + g->name(reps[a]) + "]";
    for (int b = 0; b < q; ++b)
      t[a][b] = coset_of[g->mul(reps[a], reps[b])];
  }
  auto qg = std::make_shared<FiniteGroup>(std::move(t), std::move(names));
  GroupHom proj(g, qg, coset_of);
  return Quotient{std::move(qg), std::move(proj)};
}

bool check_group_exact(const GroupHom& i, const GroupHom& p) {
  if (!i.target->same_as(*p.source))
    throw structural_error(
        "check_group_exact: middle groups of i and p differ");
  if (!i.injective() || !p.surjective()) return false;
  return i.image() == p.kernel();
}

}  // namespace fuscat
