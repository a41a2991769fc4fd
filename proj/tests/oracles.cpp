#include "oracles.hpp"

#include <algorithm>
#include <set>

namespace oracle {

Set closure(const GroupTable& g, const Set& generators) {
  std::vector<char> in(g.order(), 0);
  Set members{0};
  in[0] = 1;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (Elem s : generators) {
      Elem y = g.mul(members[i], s);
      if (!in[y]) {
        in[y] = 1;
        members.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<Set> subgroups(const GroupTable& g) {
  std::set<Set> found;
  std::vector<Set> frontier;
  for (Elem x = 0; x < g.order(); ++x) {
    Set c = closure(g, {x});
    if (found.insert(c).second) frontier.push_back(c);
  }
  std::vector<Set> cyclic(found.begin(), found.end());
  while (!frontier.empty()) {
    std::vector<Set> next;
    for (const Set& a : frontier)
      for (const Set& b : cyclic) {
        Set gens = a;
        gens.insert(gens.end(), b.begin(), b.end());
        Set c = closure(g, gens);
        if (found.insert(c).second) next.push_back(c);
      }
    frontier = std::move(next);
  }
  return {found.begin(), found.end()};
}

Set center(const GroupTable& g) {
  Set z;
  for (Elem x = 0; x < g.order(); ++x) {
    bool central = true;
    for (Elem y = 0; y < g.order() && central; ++y) central = g.mul(x, y) == g.mul(y, x);
    if (central) z.push_back(x);
  }
  return z;
}

Set derived_subgroup(const GroupTable& g) {
  Set comms;
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = 0; b < g.order(); ++b) comms.push_back(g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b)));
  return closure(g, comms);
}

Set intersect(const Set& a, const Set& b) {
  Set r;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

std::vector<Set> right_cosets(const GroupTable& g, const Set& h) {
  std::vector<char> seen(g.order(), 0);
  std::vector<Set> cosets;
  for (Elem x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    Set c;
    for (Elem y : h) c.push_back(g.mul(y, x));
    std::sort(c.begin(), c.end());
    for (Elem y : c) seen[y] = 1;
    cosets.push_back(c);
  }
  return cosets;
}

bool is_transversal(const GroupTable& g, const Set& h, const Set& t) {
  auto cosets = right_cosets(g, h);
  if (t.size() != cosets.size()) return false;
  for (const Set& c : cosets) {
    std::size_t hits = 0;
    for (Elem x : t) hits += std::binary_search(c.begin(), c.end(), x);
    if (hits != 1) return false;
  }
  return true;
}

bool is_invariant(const GroupTable& g, const Set& acting, const Set& t) {
  Set sorted = t;
  std::sort(sorted.begin(), sorted.end());
  for (Elem u : acting)
    for (Elem x : t)
      if (!std::binary_search(sorted.begin(), sorted.end(), g.mul(g.mul(g.inv(u), x), u))) return false;
  return true;
}

std::vector<Set> invariant_transversals(const GroupTable& g, const Set& h, const Set& acting) {
  auto cosets = right_cosets(g, h);  // the first coset is H itself
  std::vector<Set> result;
  std::vector<std::size_t> pick(cosets.size(), 0);
  while (true) {
    Set t{0};
    for (std::size_t i = 1; i < cosets.size(); ++i) t.push_back(cosets[i][pick[i]]);
    std::sort(t.begin(), t.end());
    if (is_invariant(g, acting, t)) result.push_back(t);
    std::size_t i = 1;
    while (i < cosets.size() && ++pick[i] == cosets[i].size()) pick[i++] = 0;
    if (i >= cosets.size()) break;
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<Set> invariant_transversals(const GroupTable& g, const Set& h) {
  Set all(g.order());
  for (Elem x = 0; x < g.order(); ++x) all[x] = x;
  return invariant_transversals(g, h, all);
}

std::size_t abelian_p_rank(const GroupTable& g, const Set& k, std::size_t p) {
  std::set<Elem> powers;
  for (Elem x : k) {
    Elem y = 0;
    for (std::size_t i = 0; i < p; ++i) y = g.mul(y, x);
    powers.insert(y);
  }
  std::size_t ratio = k.size() / powers.size();
  std::size_t r = 0;
  while (ratio > 1) {
    ratio /= p;
    ++r;
  }
  return r;
}

Elem transfer(const GroupTable& g, const Set& h, const Set& t, Elem x) {
  Elem product = 0;
  for (Elem ti : t) {
    Elem y = g.mul(ti, x);
    // y = λ t' with t' in T and λ in H
    for (Elem tj : t) {
      Elem lambda = g.mul(y, g.inv(tj));
      if (std::binary_search(h.begin(), h.end(), lambda)) {
        product = g.mul(product, lambda);
        break;
      }
    }
  }
  return product;
}

bool loop_is_associative(const loopforge::LoopTable& l) {
  const std::size_t n = l.order();
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (l.mul(l.mul(a, b), c) != l.mul(a, l.mul(b, c))) return false;
  return true;
}

namespace {

using Perm = std::vector<Elem>;

Perm right_mult(const loopforge::LoopTable& l, Elem x) {
  Perm p(l.order());
  for (Elem a = 0; a < l.order(); ++a) p[a] = l.mul(a, x);
  return p;
}

// apply p then q
Perm then(const Perm& p, const Perm& q) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[p[i]];
  return r;
}

Perm invert(const Perm& p) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<Elem>(i);
  return r;
}

}  // namespace

bool loop_is_rcc(const loopforge::LoopTable& l) {
  std::vector<Perm> r;
  for (Elem x = 0; x < l.order(); ++x) r.push_back(right_mult(l, x));
  for (Elem x = 0; x < l.order(); ++x)
    for (Elem y = 0; y < l.order(); ++y) {
      Perm c = then(then(invert(r[x]), r[y]), r[x]);
      if (c != r[c[0]]) return false;
    }
  return true;
}

std::size_t right_multiplication_order(const loopforge::LoopTable& l) {
  std::vector<Perm> gens;
  for (Elem x = 0; x < l.order(); ++x) gens.push_back(right_mult(l, x));
  Perm id(l.order());
  for (Elem i = 0; i < l.order(); ++i) id[i] = i;
  std::set<Perm> seen{id};
  std::vector<Perm> queue{id};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const Perm& s : gens) {
      Perm p = then(queue[i], s);
      if (seen.insert(p).second) queue.push_back(p);
    }
  return seen.size();
}

}  // namespace oracle
