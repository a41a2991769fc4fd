#include "loopforge/group.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

namespace loopforge {

// ---- GroupTable -------------------------------------------------------------

GroupPtr GroupTable::trusted(std::size_t order, std::vector<Elem> mul,
                             std::vector<std::string> labels) {
  auto g = std::shared_ptr<GroupTable>(new GroupTable());
  g->n_ = order;
  g->mul_ = std::move(mul);
  g->inv_.assign(order, 0);
  for (Elem a = 0; a < order; ++a) {
    for (Elem b = 0; b < order; ++b) {
      if (g->mul(a, b) == 0) {
        g->inv_[a] = b;
        break;
      }
    }
  }
  g->orders_.assign(order, 1);
  for (Elem a = 1; a < order; ++a) {
    std::size_t k = 1;
    Elem x = a;
    while (x != 0) {
      x = g->mul(x, a);
      ++k;
    }
    g->orders_[a] = k;
  }
  g->abelian_ = true;
  for (Elem a = 0; a < order && g->abelian_; ++a)
    for (Elem b = a + 1; b < order; ++b)
      if (g->mul(a, b) != g->mul(b, a)) {
        g->abelian_ = false;
        break;
      }
  if (labels.size() != order) {
    labels.resize(order);
    for (Elem a = 0; a < order; ++a) labels[a] = a == 0 ? "e" : "g" + std::to_string(a);
  }
  g->labels_ = std::move(labels);
  return g;
}

Elem GroupTable::power(Elem x, long long k) const noexcept {
  if (k < 0) {
    x = inv_[x];
    k = -k;
  }
  k %= static_cast<long long>(orders_[x]);
  Elem r = 0;
  Elem base = x;
  while (k > 0) {
    if (k & 1) r = mul(r, base);
    base = mul(base, base);
    k >>= 1;
  }
  return r;
}

std::vector<std::vector<Elem>> GroupTable::rows() const {
  std::vector<std::vector<Elem>> out(n_);
  for (std::size_t a = 0; a < n_; ++a)
    out[a].assign(mul_.begin() + static_cast<std::ptrdiff_t>(a * n_),
                  mul_.begin() + static_cast<std::ptrdiff_t>((a + 1) * n_));
  return out;
}

// ---- ElementSet -------------------------------------------------------------

ElementSet::ElementSet(GroupPtr parent, std::vector<Elem> members)
    : parent_(std::move(parent)), members_(std::move(members)) {
  const std::size_t n = parent_->order();
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (!members_.empty() && members_.back() >= n)
    fail(Errc::InvalidArgument, "element index " + std::to_string(members_.back()) +
                                    " out of range for group of order " + std::to_string(n));
  mask_.assign(n, 0);
  for (Elem x : members_) mask_[x] = 1;
}

ElementSet ElementSet::subgroup(GroupPtr parent, std::vector<Elem> members) {
  ElementSet s(std::move(parent), std::move(members));
  if (!is_closed_subgroup(*s.parent_, s.members_))
    fail(Errc::NotSubgroup, "element set is not a subgroup");
  s.isSubgroup_ = true;
  return s;
}

ElementSet ElementSet::assume_subgroup(GroupPtr parent, std::vector<Elem> members) {
  ElementSet s(std::move(parent), std::move(members));
  s.isSubgroup_ = true;
  return s;
}

ElementSet ElementSet::trivial(GroupPtr parent) {
  return assume_subgroup(std::move(parent), {0});
}

ElementSet ElementSet::whole(GroupPtr parent) {
  std::vector<Elem> all(parent->order());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<Elem>(i);
  return assume_subgroup(std::move(parent), std::move(all));
}

bool ElementSet::subset_of(const ElementSet& other) const {
  for (Elem x : members_)
    if (!other.contains(x)) return false;
  return true;
}

// ---- GroupHomomorphism ------------------------------------------------------

bool GroupHomomorphism::is_homomorphism() const {
  const auto& s = *source;
  const auto& t = *target;
  if (imageOf.size() != s.order() || imageOf[0] != 0) return false;
  for (Elem x : imageOf)
    if (x >= t.order()) return false;
  for (Elem a = 0; a < s.order(); ++a)
    for (Elem b = 0; b < s.order(); ++b)
      if (imageOf[s.mul(a, b)] != t.mul(imageOf[a], imageOf[b])) return false;
  return true;
}

bool GroupHomomorphism::is_injective() const {
  std::vector<char> seen(target->order(), 0);
  for (Elem y : imageOf) {
    if (seen[y]) return false;
    seen[y] = 1;
  }
  return true;
}

bool GroupHomomorphism::is_bijective() const {
  return source->order() == target->order() && is_injective();
}

ElementSet GroupHomomorphism::image() const {
  return ElementSet::assume_subgroup(target, imageOf);
}

ElementSet GroupHomomorphism::kernel() const {
  std::vector<Elem> k;
  for (Elem x = 0; x < imageOf.size(); ++x)
    if (imageOf[x] == 0) k.push_back(x);
  return ElementSet::assume_subgroup(source, std::move(k));
}

// ---- actions ----------------------------------------------------------------

Action trivial_action(const GroupTable& g, const GroupTable& q) {
  return Action{std::vector<Perm>(g.order(), identity_perm(q.order()))};
}

namespace {

bool is_automorphism(const GroupTable& q, const Perm& p) {
  if (p.size() != q.order() || !is_permutation(p)) return false;
  for (Elem a = 0; a < q.order(); ++a)
    for (Elem b = 0; b < q.order(); ++b)
      if (p[q.mul(a, b)] != q.mul(p[a], p[b])) return false;
  return true;
}

}  // namespace

bool is_action(const GroupTable& g, const GroupTable& q, const Action& action) {
  if (action.ofElement.size() != g.order()) return false;
  for (const auto& p : action.ofElement)
    if (!is_automorphism(q, p)) return false;
  if (!is_identity(action.ofElement[0])) return false;
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = 0; b < g.order(); ++b)
      if (action.ofElement[g.mul(a, b)] != compose(action.ofElement[a], action.ofElement[b]))
        return false;
  return true;
}

Action action_from_generators(const GroupTable& g, const GroupTable& q,
                              std::span<const Elem> generators, std::span<const Perm> images) {
  if (generators.size() != images.size())
    fail(Errc::InvalidArgument, "generator and image counts differ");
  for (const auto& p : images)
    if (!is_automorphism(q, p)) fail(Errc::NotAnAction, "generator image is not an automorphism");
  std::vector<Perm> of(g.order());
  std::vector<char> known(g.order(), 0);
  of[0] = identity_perm(q.order());
  known[0] = 1;
  std::deque<Elem> queue{0};
  while (!queue.empty()) {
    Elem a = queue.front();
    queue.pop_front();
    for (std::size_t j = 0; j < generators.size(); ++j) {
      Elem b = g.mul(a, generators[j]);
      Perm pb = compose(of[a], images[j]);
      if (!known[b]) {
        known[b] = 1;
        of[b] = std::move(pb);
        queue.push_back(b);
      } else if (of[b] != pb) {
        fail(Errc::NotAnAction, "generator images violate the group relations");
      }
    }
  }
  for (Elem a = 0; a < g.order(); ++a)
    if (!known[a]) fail(Errc::NotAnAction, "generators do not generate the acting group");
  return Action{std::move(of)};
}

// ---- construction -------------------------------------------------------------

GroupPtr group_from_cayley_graph(std::size_t order, std::size_t k, const std::vector<Elem>& right,
                                 const std::vector<Elem>& parent,
                                 const std::vector<std::size_t>& via,
                                 std::vector<std::string> labels) {
  std::vector<Elem> mul(order * order);
  for (std::size_t a = 0; a < order; ++a) mul[a * order] = static_cast<Elem>(a);
  for (std::size_t b = 1; b < order; ++b) {
    const Elem p = parent[b];
    const std::size_t j = via[b];
    for (std::size_t a = 0; a < order; ++a) mul[a * order + b] = right[mul[a * order + p] * k + j];
  }
  return GroupTable::trusted(order, std::move(mul), std::move(labels));
}

GroupPtr build_from_table(const std::vector<std::vector<Elem>>& table,
                          std::vector<std::string> labels, const BuildOptions& options) {
  const std::size_t n = table.size();
  if (n == 0) fail(Errc::InvalidArgument, "empty table");
  if (n > options.maxOrder)
    fail(Errc::OrderBoundExceeded, "order " + std::to_string(n) + " exceeds bound " +
                                       std::to_string(options.maxOrder));
  for (const auto& row : table) {
    if (row.size() != n) fail(Errc::InvalidArgument, "table is not square");
    for (Elem x : row)
      if (x >= n) fail(Errc::InvalidArgument, "table entry out of range");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!is_permutation(table[i])) fail(Errc::NotLatinSquare, "row " + std::to_string(i));
    std::vector<Elem> col(n);
    for (std::size_t j = 0; j < n; ++j) col[j] = table[j][i];
    if (!is_permutation(col)) fail(Errc::NotLatinSquare, "column " + std::to_string(i));
  }
  std::optional<Elem> e;
  for (Elem c = 0; c < n && !e; ++c) {
    bool ok = true;
    for (Elem x = 0; x < n && ok; ++x) ok = table[c][x] == x && table[x][c] == x;
    if (ok) e = c;
  }
  if (!e) fail(Errc::NoIdentity, "no two-sided identity");
  for (Elem x = 0; x < n; ++x) {
    bool found = false;
    for (Elem y = 0; y < n && !found; ++y) found = table[x][y] == *e && table[y][x] == *e;
    if (!found) fail(Errc::NoInverse, "element " + std::to_string(x) + " has no two-sided inverse");
  }
  if (n <= options.associativityCheckBound) {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) {
        const Elem ab = table[a][b];
        for (Elem c = 0; c < n; ++c)
          if (table[ab][c] != table[a][table[b][c]])
            fail(Errc::NotAssociative, "(" + std::to_string(a) + "," + std::to_string(b) + "," +
                                           std::to_string(c) + ")");
      }
  }
  // Relabel so that the identity becomes 0 by swapping it with element 0.
  auto swap_id = [&](Elem x) -> Elem {
    if (x == *e) return 0;
    if (x == 0) return *e;
    return x;
  };
  std::vector<Elem> mul(n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) mul[swap_id(a) * n + swap_id(b)] = swap_id(table[a][b]);
  if (labels.size() == n && *e != 0) std::swap(labels[0], labels[*e]);
  return GroupTable::trusted(n, std::move(mul), std::move(labels));
}

PermutationGroup permutation_closure(std::size_t degree, const std::vector<Perm>& generators,
                                     const BuildOptions& options) {
  for (const auto& p : generators)
    if (p.size() != degree || !is_permutation(p))
      fail(Errc::InvalidArgument, "generator is not a permutation of the given degree");
  const std::size_t k = generators.size();
  std::vector<Perm> elements{identity_perm(degree)};
  std::unordered_map<Perm, Elem, PermHash> index{{elements[0], 0}};
  std::vector<Elem> right;
  std::vector<Elem> parent{0};
  std::vector<std::size_t> via{0};
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      Perm next = compose(elements[i], generators[j]);
      auto it = index.find(next);
      Elem id;
      if (it == index.end()) {
        if (elements.size() >= options.maxOrder)
          fail(Errc::OrderBoundExceeded, "permutation closure exceeds order bound " +
                                             std::to_string(options.maxOrder));
        id = static_cast<Elem>(elements.size());
        index.emplace(next, id);
        elements.push_back(std::move(next));
        parent.push_back(static_cast<Elem>(i));
        via.push_back(j);
      } else {
        id = it->second;
      }
      right.push_back(id);
    }
  }
  std::vector<std::string> labels;
  labels.reserve(elements.size());
  for (const auto& p : elements) labels.push_back(cycle_string(p));
  PermutationGroup out;
  out.degree = degree;
  out.group = group_from_cayley_graph(elements.size(), k, right, parent, via, std::move(labels));
  out.elements = std::move(elements);
  return out;
}

GroupPtr build_from_generators(std::size_t degree, const std::vector<Perm>& generators,
                               const BuildOptions& options) {
  return permutation_closure(degree, generators, options).group;
}

// ---- subgroups ----------------------------------------------------------------

bool is_closed_subgroup(const GroupTable& g, std::span<const Elem> members) {
  std::vector<char> in(g.order(), 0);
  for (Elem x : members) in[x] = 1;
  if (!in[0]) return false;
  for (Elem a : members) {
    if (!in[g.inv(a)]) return false;
    for (Elem b : members)
      if (!in[g.mul(a, b)]) return false;
  }
  return true;
}

ElementSet generated_subgroup(const GroupPtr& g, std::span<const Elem> seed) {
  std::vector<Elem> gens;
  for (Elem x : seed)
    if (x != 0 && std::find(gens.begin(), gens.end(), x) == gens.end()) gens.push_back(x);
  std::vector<char> in(g->order(), 0);
  std::vector<Elem> members{0};
  in[0] = 1;
  for (std::size_t i = 0; i < members.size(); ++i)
    for (Elem s : gens) {
      Elem y = g->mul(members[i], s);
      if (!in[y]) {
        in[y] = 1;
        members.push_back(y);
      }
    }
  return ElementSet::assume_subgroup(g, std::move(members));
}

ElementSet generated_subgroup(const ElementSet& seed) {
  return generated_subgroup(seed.parent(), seed.members());
}

namespace {

void require_subgroup(const ElementSet& h) {
  if (!h.is_subgroup() && !is_closed_subgroup(h.group(), h.members()))
    fail(Errc::NotSubgroup, "expected a subgroup");
}

}  // namespace

std::vector<std::vector<Elem>> right_cosets(const ElementSet& h) {
  require_subgroup(h);
  const auto& g = h.group();
  std::vector<char> done(g.order(), 0);
  std::vector<std::vector<Elem>> blocks;
  for (Elem x = 0; x < g.order(); ++x) {
    if (done[x]) continue;
    std::vector<Elem> block;
    for (Elem a : h) block.push_back(g.mul(a, x));
    std::sort(block.begin(), block.end());
    for (Elem y : block) done[y] = 1;
    blocks.push_back(std::move(block));
  }
  return blocks;
}

std::vector<std::size_t> right_coset_index(const ElementSet& h) {
  require_subgroup(h);
  const auto& g = h.group();
  std::vector<std::size_t> idx(g.order(), static_cast<std::size_t>(-1));
  std::size_t next = 0;
  for (Elem x = 0; x < g.order(); ++x) {
    if (idx[x] != static_cast<std::size_t>(-1)) continue;
    for (Elem a : h) idx[g.mul(a, x)] = next;
    ++next;
  }
  return idx;
}

std::size_t index_of(const ElementSet& h) { return h.group().order() / h.size(); }

std::vector<ElementSet> conjugation_orbits(const ElementSet& acting) {
  const auto& g = acting.group();
  std::vector<char> done(g.order(), 0);
  std::vector<ElementSet> out;
  for (Elem x = 0; x < g.order(); ++x) {
    if (done[x]) continue;
    std::vector<Elem> orbit;
    for (Elem a : acting) {
      Elem y = g.conj(x, a);
      if (!done[y]) {
        done[y] = 1;
        orbit.push_back(y);
      }
    }
    out.emplace_back(acting.parent(), std::move(orbit));
  }
  return out;
}

std::vector<ElementSet> conjugacy_classes(const GroupPtr& g) {
  return conjugation_orbits(ElementSet::whole(g));
}

std::vector<std::size_t> conjugacy_class_index(const GroupPtr& g) {
  std::vector<std::size_t> idx(g->order());
  auto classes = conjugacy_classes(g);
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (Elem x : classes[i]) idx[x] = i;
  return idx;
}

ElementSet centralizer(const GroupPtr& g, std::span<const Elem> s) {
  std::vector<Elem> c;
  for (Elem x = 0; x < g->order(); ++x) {
    bool ok = true;
    for (Elem y : s)
      if (g->mul(x, y) != g->mul(y, x)) {
        ok = false;
        break;
      }
    if (ok) c.push_back(x);
  }
  return ElementSet::assume_subgroup(g, std::move(c));
}

ElementSet centralizer(const ElementSet& s) { return centralizer(s.parent(), s.members()); }

ElementSet center(const GroupPtr& g) { return centralizer(ElementSet::whole(g)); }

ElementSet normalizer(const ElementSet& h) {
  require_subgroup(h);
  const auto& g = h.group();
  std::vector<Elem> n;
  for (Elem x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (Elem a : h)
      if (!h.contains(g.conj(a, x))) {
        ok = false;
        break;
      }
    if (ok) n.push_back(x);
  }
  return ElementSet::assume_subgroup(h.parent(), std::move(n));
}

ElementSet conjugate(const ElementSet& h, Elem x) {
  std::vector<Elem> c;
  c.reserve(h.size());
  for (Elem a : h) c.push_back(h.group().conj(a, x));
  ElementSet out(h.parent(), std::move(c));
  if (h.is_subgroup()) return ElementSet::assume_subgroup(h.parent(), out.members());
  return out;
}

bool is_normal(const ElementSet& h) {
  require_subgroup(h);
  const auto& g = h.group();
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem a : h)
      if (!h.contains(g.conj(a, x))) return false;
  return true;
}

ElementSet core(const ElementSet& h) {
  require_subgroup(h);
  const auto& g = h.group();
  std::vector<Elem> c;
  for (Elem a : h) {
    bool ok = true;
    for (Elem x = 0; x < g.order() && ok; ++x) ok = h.contains(g.conj(a, x));
    if (ok) c.push_back(a);
  }
  return ElementSet::assume_subgroup(h.parent(), std::move(c));
}

ElementSet normal_closure(const ElementSet& s) {
  const auto& g = s.group();
  std::vector<char> in(g.order(), 0);
  std::vector<Elem> conjugates;
  for (Elem a : s)
    for (Elem x = 0; x < g.order(); ++x) {
      Elem y = g.conj(a, x);
      if (!in[y]) {
        in[y] = 1;
        conjugates.push_back(y);
      }
    }
  return generated_subgroup(s.parent(), conjugates);
}

ElementSet derived_subgroup(const GroupPtr& g) {
  std::vector<char> in(g->order(), 0);
  std::vector<Elem> comms;
  for (Elem a = 0; a < g->order(); ++a)
    for (Elem b = 0; b < g->order(); ++b) {
      Elem c = g->commutator(a, b);
      if (!in[c]) {
        in[c] = 1;
        comms.push_back(c);
      }
    }
  return generated_subgroup(g, comms);
}

ElementSet intersection(const ElementSet& a, const ElementSet& b) {
  std::vector<Elem> c;
  for (Elem x : a)
    if (b.contains(x)) c.push_back(x);
  if (a.is_subgroup() && b.is_subgroup()) return ElementSet::assume_subgroup(a.parent(), std::move(c));
  return ElementSet(a.parent(), std::move(c));
}

ElementSet join(const ElementSet& a, const ElementSet& b) {
  std::vector<Elem> seed = a.members();
  seed.insert(seed.end(), b.begin(), b.end());
  return generated_subgroup(a.parent(), seed);
}

ElementSet product_set(const ElementSet& a, const ElementSet& b) {
  std::vector<Elem> c;
  c.reserve(a.size() * b.size());
  for (Elem x : a)
    for (Elem y : b) c.push_back(a.group().mul(x, y));
  return ElementSet(a.parent(), std::move(c));
}

bool is_abelian(const ElementSet& h) {
  const auto& g = h.group();
  for (Elem a : h)
    for (Elem b : h)
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

bool is_cyclic(const ElementSet& h) {
  for (Elem a : h)
    if (h.group().element_order(a) == h.size()) return true;
  return false;
}

// ---- products and quotients -------------------------------------------------

ProductGroup direct_product(const GroupPtr& g1, const GroupPtr& g2, const BuildOptions& options) {
  const std::size_t n1 = g1->order(), n2 = g2->order(), n = n1 * n2;
  if (n > options.maxOrder)
    fail(Errc::OrderBoundExceeded, "direct product of order " + std::to_string(n));
  std::vector<Elem> mul(n * n);
  std::vector<std::string> labels(n);
  for (Elem a1 = 0; a1 < n1; ++a1)
    for (Elem a2 = 0; a2 < n2; ++a2) {
      const std::size_t a = a1 * n2 + a2;
      labels[a] = "(" + g1->label(a1) + "," + g2->label(a2) + ")";
      for (Elem b1 = 0; b1 < n1; ++b1)
        for (Elem b2 = 0; b2 < n2; ++b2)
          mul[a * n + b1 * n2 + b2] = static_cast<Elem>(g1->mul(a1, b1) * n2 + g2->mul(a2, b2));
    }
  ProductGroup out;
  out.group = GroupTable::trusted(n, std::move(mul), std::move(labels));
  out.first = {g1, out.group, std::vector<Elem>(n1)};
  out.second = {g2, out.group, std::vector<Elem>(n2)};
  for (Elem a = 0; a < n1; ++a) out.first.imageOf[a] = static_cast<Elem>(a * n2);
  for (Elem b = 0; b < n2; ++b) out.second.imageOf[b] = b;
  return out;
}

ProductGroup semidirect_product(const GroupPtr& g, const GroupPtr& q, const Action& action,
                                const BuildOptions& options) {
  if (!is_action(*g, *q, action)) fail(Errc::NotAnAction, "not a right action by automorphisms");
  const std::size_t ng = g->order(), nq = q->order(), n = ng * nq;
  if (n > options.maxOrder)
    fail(Errc::OrderBoundExceeded, "semidirect product of order " + std::to_string(n));
  std::vector<Elem> mul(n * n);
  std::vector<std::string> labels(n);
  for (Elem a = 0; a < ng; ++a)
    for (Elem x = 0; x < nq; ++x) {
      const std::size_t ax = a * nq + x;
      labels[ax] = "(" + g->label(a) + "," + q->label(x) + ")";
      for (Elem b = 0; b < ng; ++b) {
        const Elem xb = action.ofElement[b][x];
        for (Elem y = 0; y < nq; ++y)
          mul[ax * n + b * nq + y] = static_cast<Elem>(g->mul(a, b) * nq + q->mul(xb, y));
      }
    }
  ProductGroup out;
  out.group = GroupTable::trusted(n, std::move(mul), std::move(labels));
  out.first = {g, out.group, std::vector<Elem>(ng)};
  out.second = {q, out.group, std::vector<Elem>(nq)};
  for (Elem a = 0; a < ng; ++a) out.first.imageOf[a] = static_cast<Elem>(a * nq);
  for (Elem x = 0; x < nq; ++x) out.second.imageOf[x] = x;
  return out;
}

QuotientGroup quotient(const ElementSet& n) {
  if (!is_normal(n)) fail(Errc::NotNormal, "quotient by a non-normal subgroup");
  const auto& g = n.group();
  auto cosets = right_cosets(n);
  auto idx = right_coset_index(n);
  const std::size_t m = cosets.size();
  std::vector<Elem> mul(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      mul[i * m + j] = static_cast<Elem>(idx[g.mul(cosets[i][0], cosets[j][0])]);
  std::vector<std::string> labels(m);
  for (std::size_t i = 0; i < m; ++i) labels[i] = "[" + g.label(cosets[i][0]) + "]";
  QuotientGroup out;
  out.group = GroupTable::trusted(m, std::move(mul), std::move(labels));
  out.projection = {n.parent(), out.group, std::vector<Elem>(g.order())};
  for (Elem x = 0; x < g.order(); ++x) out.projection.imageOf[x] = static_cast<Elem>(idx[x]);
  out.cosets = std::move(cosets);
  return out;
}

SubgroupAsGroup as_group(const ElementSet& h) {
  require_subgroup(h);
  const auto& g = h.group();
  const std::size_t n = h.size();
  std::vector<Elem> pos(g.order(), 0);
  for (std::size_t i = 0; i < n; ++i) pos[h.members()[i]] = static_cast<Elem>(i);
  std::vector<Elem> mul(n * n);
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = g.label(h.members()[i]);
    for (std::size_t j = 0; j < n; ++j) mul[i * n + j] = pos[g.mul(h.members()[i], h.members()[j])];
  }
  return {GroupTable::trusted(n, std::move(mul), std::move(labels)), h.members()};
}

}  // namespace loopforge
