#include "loopforge/loop.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "loopforge/group_io.hpp"

namespace loopforge {

LoopTable LoopTable::from_rows(const std::vector<std::vector<Elem>>& rows,
                               std::vector<std::string> labels) {
  const std::size_t n = rows.size();
  if (n == 0) fail(Errc::InvalidArgument, "empty loop table");
  for (const auto& r : rows) {
    if (r.size() != n) fail(Errc::InvalidArgument, "loop table is not square");
    for (Elem x : r)
      if (x >= n) fail(Errc::InvalidArgument, "loop table entry out of range");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!is_permutation(rows[i])) fail(Errc::NotLatinSquare, "row " + std::to_string(i));
    std::vector<Elem> col(n);
    for (std::size_t j = 0; j < n; ++j) col[j] = rows[j][i];
    if (!is_permutation(col)) fail(Errc::NotLatinSquare, "column " + std::to_string(i));
  }
  std::optional<Elem> e;
  for (Elem c = 0; c < n && !e; ++c) {
    bool ok = true;
    for (Elem x = 0; x < n && ok; ++x) ok = rows[c][x] == x && rows[x][c] == x;
    if (ok) e = c;
  }
  if (!e) fail(Errc::NoIdentity, "loop table has no two-sided identity");
  auto swap_id = [&](Elem x) -> Elem {
    if (x == *e) return 0;
    if (x == 0) return *e;
    return x;
  };
  LoopTable l;
  l.n_ = n;
  l.mul_.resize(n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) l.mul_[swap_id(a) * n + swap_id(b)] = swap_id(rows[a][b]);
  if (labels.size() != n) {
    labels.resize(n);
    for (Elem x = 0; x < n; ++x) labels[x] = std::to_string(x);
  } else if (*e != 0) {
    std::swap(labels[0], labels[*e]);
  }
  l.labels_ = std::move(labels);
  return l;
}

LoopTable LoopTable::from_group(const GroupTable& g) { return from_rows(g.rows(), g.labels()); }

std::vector<std::vector<Elem>> LoopTable::rows() const {
  std::vector<std::vector<Elem>> out(n_, std::vector<Elem>(n_));
  for (Elem a = 0; a < n_; ++a)
    for (Elem b = 0; b < n_; ++b) out[a][b] = mul(a, b);
  return out;
}

Perm right_translation(const LoopTable& l, Elem x) {
  Perm r(l.order());
  for (Elem y = 0; y < l.order(); ++y) r[y] = l.mul(y, x);
  return r;
}

RightMultiplicationGroup right_multiplication_group(const LoopTable& l, std::size_t maxOrder) {
  std::vector<Perm> gens;
  for (Elem x = 1; x < l.order(); ++x) gens.push_back(right_translation(l, x));
  BuildOptions opts;
  opts.maxOrder = maxOrder;
  RightMultiplicationGroup out;
  out.perms = permutation_closure(l.order(), gens, opts);
  std::unordered_map<Perm, Elem, PermHash> index;
  for (Elem i = 0; i < out.perms.elements.size(); ++i) index.emplace(out.perms.elements[i], i);
  out.translation.resize(l.order());
  for (Elem x = 0; x < l.order(); ++x) out.translation[x] = index.at(right_translation(l, x));
  const GroupPtr& g = out.perms.group;
  out.translations = ElementSet(g, out.translation);
  std::vector<Elem> stab;
  for (Elem i = 0; i < out.perms.elements.size(); ++i)
    if (out.perms.elements[i][0] == 0) stab.push_back(i);
  out.stabilizer = ElementSet::assume_subgroup(g, std::move(stab));
  return out;
}

RccCheck is_rcc_loop(const LoopTable& l) {
  const std::size_t n = l.order();
  std::vector<Perm> r(n), rinv(n);
  for (Elem x = 0; x < n; ++x) {
    r[x] = right_translation(l, x);
    rinv[x] = inverse(r[x]);
  }
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      Perm c = compose(compose(rinv[x], r[y]), r[x]);
      // A translation R_z is determined by z = 0^{R_z}.
      if (c != r[c[0]]) return RccCheck{false, std::make_pair(x, y)};
    }
  return RccCheck{};
}

bool is_associative(const LoopTable& l) {
  const std::size_t n = l.order();
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      const Elem ab = l.mul(a, b);
      for (Elem c = 0; c < n; ++c)
        if (l.mul(ab, c) != l.mul(a, l.mul(b, c))) return false;
    }
  return true;
}

namespace {

// Per-element invariant preserved by loop isomorphisms fixing the identity.
std::vector<std::vector<std::size_t>> element_invariants(const LoopTable& l) {
  const std::size_t n = l.order();
  std::vector<std::vector<std::size_t>> inv(n);
  for (Elem a = 0; a < n; ++a) {
    Perm r = right_translation(l, a);
    std::vector<char> seen(n, 0);
    std::vector<std::size_t> cycles;
    for (Elem s = 0; s < n; ++s) {
      if (seen[s]) continue;
      std::size_t len = 0;
      for (Elem x = s; !seen[x]; x = r[x]) {
        seen[x] = 1;
        ++len;
      }
      cycles.push_back(len);
    }
    std::sort(cycles.begin(), cycles.end());
    std::size_t commuting = 0;
    for (Elem b = 0; b < n; ++b)
      if (l.mul(a, b) == l.mul(b, a)) ++commuting;
    inv[a] = cycles;
    inv[a].push_back(l.mul(a, a) == 0 ? 1 : 0);
    inv[a].push_back(commuting);
  }
  return inv;
}

class LoopIsoSearch {
 public:
  LoopIsoSearch(const LoopTable& a, const LoopTable& b)
      : a_(a), b_(b), n_(a.order()), ia_(element_invariants(a)), ib_(element_invariants(b)) {}

  std::optional<std::vector<Elem>> run() {
    map_.assign(n_, kUnset);
    used_.assign(n_, 0);
    map_[0] = 0;
    used_[0] = 1;
    assigned_ = {0};
    if (search()) return map_;
    return std::nullopt;
  }

 private:
  // Closes the partial map under products; returns false on a contradiction.
  // Newly assigned elements are appended to assigned_.
  bool propagate(std::size_t from) {
    for (std::size_t i = from; i < assigned_.size(); ++i) {
      for (std::size_t j = 0; j <= i; ++j) {
        for (int side = 0; side < 2; ++side) {
          Elem x = side ? assigned_[j] : assigned_[i];
          Elem y = side ? assigned_[i] : assigned_[j];
          Elem xy = a_.mul(x, y);
          Elem img = b_.mul(map_[x], map_[y]);
          if (map_[xy] == kUnset) {
            if (used_[img] || ia_[xy] != ib_[img]) return false;
            map_[xy] = img;
            used_[img] = 1;
            assigned_.push_back(xy);
          } else if (map_[xy] != img) {
            return false;
          }
        }
      }
    }
    return true;
  }

  bool search() {
    Elem next = kUnset;
    for (Elem x = 0; x < n_; ++x)
      if (map_[x] == kUnset) {
        next = x;
        break;
      }
    if (next == kUnset) return true;
    for (Elem c = 0; c < n_; ++c) {
      if (used_[c] || ia_[next] != ib_[c]) continue;
      auto savedMap = map_;
      auto savedUsed = used_;
      const std::size_t savedSize = assigned_.size();
      map_[next] = c;
      used_[c] = 1;
      assigned_.push_back(next);
      if (propagate(0) && search()) return true;
      map_ = std::move(savedMap);
      used_ = std::move(savedUsed);
      assigned_.resize(savedSize);
    }
    return false;
  }

  static constexpr Elem kUnset = static_cast<Elem>(-1);
  const LoopTable& a_;
  const LoopTable& b_;
  std::size_t n_;
  std::vector<std::vector<std::size_t>> ia_, ib_;
  std::vector<Elem> map_;
  std::vector<char> used_;
  std::vector<Elem> assigned_;
};

}  // namespace

std::optional<std::vector<Elem>> find_loop_isomorphism(const LoopTable& a, const LoopTable& b,
                                                       std::size_t maxOrder) {
  if (a.order() > maxOrder || b.order() > maxOrder)
    fail(Errc::OrderBoundExceeded, "loop isomorphism search is limited to order " +
                                       std::to_string(maxOrder));
  if (a.order() != b.order()) return std::nullopt;
  auto ia = element_invariants(a), ib = element_invariants(b);
  std::sort(ia.begin(), ia.end());
  std::sort(ib.begin(), ib.end());
  if (ia != ib) return std::nullopt;
  return LoopIsoSearch(a, b).run();
}

bool loop_isomorphic(const LoopTable& a, const LoopTable& b) {
  return find_loop_isomorphism(a, b).has_value();
}

LoopTable parse_loop_text(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  std::optional<std::size_t> order;
  std::vector<std::vector<Elem>> rows;
  while (std::getline(in, raw)) {
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.resize(hash);
    std::istringstream ls(raw);
    std::string head;
    if (!(ls >> head)) continue;
    if (head == "loop") {
      std::string n;
      ls >> n;
      auto v = parse_index_list(n);
      if (v.size() != 1) fail(Errc::ParseError, "bad loop header");
      order = v[0];
    } else {
      if (!order) fail(Errc::ParseError, "missing `loop <order>` header");
      rows.push_back(parse_index_list(raw));
    }
  }
  if (!order) fail(Errc::ParseError, "missing `loop <order>` header");
  if (rows.size() != *order)
    fail(Errc::ParseError, "expected " + std::to_string(*order) + " rows, got " +
                               std::to_string(rows.size()));
  return LoopTable::from_rows(rows);
}

std::string format_loop(const LoopTable& l) {
  std::ostringstream out;
  out << "loop " << l.order() << "\n";
  for (Elem a = 0; a < l.order(); ++a) {
    for (Elem b = 0; b < l.order(); ++b) out << (b ? " " : "") << l.mul(a, b);
    out << "\n";
  }
  return out.str();
}

}  // namespace loopforge
