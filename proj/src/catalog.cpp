#include "loopforge/catalog.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <unordered_map>

#include "loopforge/numeric.hpp"

namespace loopforge {

namespace {

// Breadth-first closure of a set of generators under right multiplication;
// elements are deduplicated through `key`.
template <typename T, typename Mul, typename Key>
std::pair<GroupPtr, std::vector<T>> closure(const T& identity, const std::vector<T>& gens, Mul mul,
                                            Key key, std::size_t maxOrder,
                                            const std::function<std::string(const T&)>& label) {
  using K = decltype(key(identity));
  std::vector<T> elements{identity};
  std::map<K, Elem> index{{key(identity), 0}};
  std::vector<Elem> right, parent{0};
  std::vector<std::size_t> via{0};
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = 0; j < gens.size(); ++j) {
      T next = mul(elements[i], gens[j]);
      auto k = key(next);
      auto it = index.find(k);
      Elem id;
      if (it == index.end()) {
        if (elements.size() >= maxOrder)
          fail(Errc::OrderBoundExceeded, "closure exceeds order bound " + std::to_string(maxOrder));
        id = static_cast<Elem>(elements.size());
        index.emplace(k, id);
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
  for (const auto& e : elements) labels.push_back(label(e));
  auto g = group_from_cayley_graph(elements.size(), gens.size(), right, parent, via,
                                   std::move(labels));
  return {g, std::move(elements)};
}

void check_order(std::size_t n) {
  if (n == 0) fail(Errc::InvalidArgument, "group order must be positive");
  if (n > kDefaultMaxOrder)
    fail(Errc::OrderBoundExceeded, "order " + std::to_string(n) + " exceeds " +
                                       std::to_string(kDefaultMaxOrder));
}

std::string power_label(const std::string& base, std::size_t i) {
  if (i == 0) return "";
  return i == 1 ? base : base + "^" + std::to_string(i);
}

std::string join_labels(const std::string& a, const std::string& b) {
  if (a.empty() && b.empty()) return "e";
  if (a.empty()) return b;
  if (b.empty()) return a;
  return a + " " + b;
}

}  // namespace

GroupPtr cyclic(std::size_t n) {
  check_order(n);
  std::vector<Elem> mul(n * n);
  std::vector<std::string> labels(n);
  for (std::size_t a = 0; a < n; ++a) {
    labels[a] = a == 0 ? "e" : power_label("a", a);
    for (std::size_t b = 0; b < n; ++b) mul[a * n + b] = static_cast<Elem>((a + b) % n);
  }
  return GroupTable::trusted(n, std::move(mul), std::move(labels));
}

GroupPtr dihedral(std::size_t order) {
  if (order < 2 || order % 2 != 0) fail(Errc::InvalidArgument, "dihedral order must be even");
  check_order(order);
  const std::size_t n = order / 2;
  std::vector<Elem> mul(order * order);
  std::vector<std::string> labels(order);
  for (std::size_t j = 0; j < 2; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t x = j * n + i;
      labels[x] = join_labels(power_label("f", j), power_label("r", i));
      for (std::size_t l = 0; l < 2; ++l)
        for (std::size_t m = 0; m < n; ++m) {
          // f^j r^i f^l r^m = f^(j+l) r^(i(-1)^l + m)
          const std::size_t ri = l == 0 ? i : (n - i) % n;
          mul[x * order + l * n + m] = static_cast<Elem>(((j + l) % 2) * n + (ri + m) % n);
        }
    }
  return GroupTable::trusted(order, std::move(mul), std::move(labels));
}

GroupPtr dicyclic(std::size_t order) {
  if (order < 4 || order % 4 != 0) fail(Errc::InvalidArgument, "dicyclic order must be 4n");
  check_order(order);
  const std::size_t n2 = order / 2;  // order of a
  const std::size_t n = n2 / 2;
  std::vector<Elem> mul(order * order);
  std::vector<std::string> labels(order);
  for (std::size_t j = 0; j < 2; ++j)
    for (std::size_t i = 0; i < n2; ++i) {
      const std::size_t x = j * n2 + i;
      labels[x] = join_labels(power_label("a", i), power_label("x", j));
      for (std::size_t l = 0; l < 2; ++l)
        for (std::size_t k = 0; k < n2; ++k) {
          // a^i x^j a^k x^l = a^(i + (-1)^j k) x^j x^l, with x^2 = a^n
          std::size_t e = j == 0 ? i + k : i + n2 - k;
          std::size_t xj = j + l;
          if (xj == 2) {
            e += n;
            xj = 0;
          }
          mul[x * order + l * n2 + k] = static_cast<Elem>(xj * n2 + e % n2);
        }
    }
  return GroupTable::trusted(order, std::move(mul), std::move(labels));
}

GroupPtr symmetric(std::size_t n) {
  if (n == 0) fail(Errc::InvalidArgument, "degree must be positive");
  if (n == 1) return cyclic(1);
  std::vector<Perm> gens;
  Perm t = identity_perm(n);
  std::swap(t[0], t[1]);
  gens.push_back(t);
  Perm c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = static_cast<Elem>((i + 1) % n);
  gens.push_back(c);
  return build_from_generators(n, gens);
}

GroupPtr alternating(std::size_t n) {
  if (n == 0) fail(Errc::InvalidArgument, "degree must be positive");
  if (n < 3) return cyclic(1);
  std::vector<Perm> gens;
  for (std::size_t i = 2; i < n; ++i) {
    Perm c = identity_perm(n);
    c[0] = 1;
    c[1] = static_cast<Elem>(i);
    c[i] = 0;
    gens.push_back(c);
  }
  return build_from_generators(n, gens);
}

GroupPtr abelian(const std::vector<std::size_t>& orders) {
  GroupPtr g = cyclic(1);
  std::size_t total = 1;
  for (std::size_t m : orders) {
    if (m == 0) fail(Errc::InvalidArgument, "cyclic factor order must be positive");
    total *= m;
    check_order(total);
  }
  if (orders.empty()) return g;
  g = cyclic(orders[0]);
  for (std::size_t i = 1; i < orders.size(); ++i) g = direct_product(g, cyclic(orders[i])).group;
  return g;
}

// ---- affine groups ------------------------------------------------------------

Elem AffineGroup::element(unsigned alpha, unsigned beta) const {
  for (Elem x = 0; x < alphaOf.size(); ++x)
    if (alphaOf[x] == alpha && betaOf[x] == beta) return x;
  fail(Errc::InvalidArgument, "no such affine map");
}

AffineGroup affine_group(std::size_t q) {
  if (q < 2 || q > 64) fail(Errc::InvalidArgument, "affine groups are built for 2 <= q <= 64");
  FiniteField f = gf_of_order(static_cast<unsigned>(q));
  std::vector<unsigned> alphas{1};
  for (unsigned a = 2; a < q; ++a) alphas.push_back(a);
  std::vector<std::size_t> alphaPos(q, 0);
  for (std::size_t i = 0; i < alphas.size(); ++i) alphaPos[alphas[i]] = i;
  const std::size_t n = q * (q - 1);
  std::vector<unsigned> alphaOf(n), betaOf(n);
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < alphas.size(); ++i)
    for (unsigned b = 0; b < q; ++b) {
      const std::size_t x = i * q + b;
      alphaOf[x] = alphas[i];
      betaOf[x] = b;
      labels[x] = "t(" + f.to_string(alphas[i]) + "," + f.to_string(b) + ")";
    }
  std::vector<Elem> mul(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const unsigned a = alphaOf[x], b = betaOf[x], c = alphaOf[y], d = betaOf[y];
      const unsigned ac = f.mul(a, c);
      const unsigned adb = f.add(f.mul(a, d), b);
      mul[x * n + y] = static_cast<Elem>(alphaPos[ac] * q + adb);
    }
  auto g = GroupTable::trusted(n, std::move(mul), std::move(labels));
  std::vector<Elem> p, l;
  for (Elem x = 0; x < n; ++x) {
    if (alphaOf[x] == 1) p.push_back(x);
    if (betaOf[x] == 0) l.push_back(x);
  }
  return AffineGroup{g,
                     f,
                     std::move(alphaOf),
                     std::move(betaOf),
                     ElementSet::assume_subgroup(g, std::move(p)),
                     ElementSet::assume_subgroup(g, std::move(l))};
}

ElementSet affine_subgroup(const AffineGroup& aff, std::size_t d) {
  const std::size_t q = aff.field.size();
  if ((q - 1) % d != 0) fail(Errc::InvalidArgument, "d must divide q - 1");
  std::vector<Elem> members;
  for (Elem x = 0; x < aff.alphaOf.size(); ++x)
    if (aff.field.pow(aff.alphaOf[x], static_cast<long long>(d)) == 1) members.push_back(x);
  return ElementSet::assume_subgroup(aff.group, std::move(members));
}

// ---- Suzuki point stabilizer --------------------------------------------------

namespace {

Matrix4 mat_mul(const FiniteField& f, const Matrix4& a, const Matrix4& b) {
  Matrix4 c{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      unsigned s = 0;
      for (int k = 0; k < 4; ++k) s = f.add(s, f.mul(a[i * 4 + k], b[k * 4 + j]));
      c[i * 4 + j] = s;
    }
  return c;
}

std::string mat_label(const FiniteField& f, const Matrix4& m) {
  std::string s = "[";
  for (int i = 0; i < 16; ++i) {
    if (i) s += (i % 4 == 0) ? ";" : ",";
    s += f.to_string(m[i]);
  }
  return s + "]";
}

}  // namespace

Matrix4 suzuki_s(const FiniteField& f, unsigned m, unsigned a, unsigned b) {
  const unsigned pa = f.frobenius_power(a, m + 1);
  const unsigned pb = f.frobenius_power(b, m + 1);
  const unsigned a2 = f.mul(a, a);
  Matrix4 s{};
  s[0] = 1;
  s[4] = a;
  s[5] = 1;
  s[8] = b;
  s[9] = pa;
  s[10] = 1;
  s[12] = f.add(f.add(f.mul(pa, a2), f.mul(a, b)), pb);
  s[13] = f.add(f.mul(pa, a), b);
  s[14] = a;
  s[15] = 1;
  return s;
}

Matrix4 suzuki_m(const FiniteField& f, unsigned m, unsigned lambda) {
  const long long t = 1LL << m;
  Matrix4 d{};
  d[0] = f.pow(lambda, 1 + t);
  d[5] = f.pow(lambda, t);
  d[10] = f.pow(lambda, -t);
  d[15] = f.pow(lambda, -1 - t);
  return d;
}

SuzukiStabilizer suzuki_point_stabilizer(unsigned m) {
  if (m == 0) fail(Errc::InvalidArgument, "m must be positive");
  if (m > 1) fail(Errc::OrderBoundExceeded, "only m = 1 (order 448) is within the order bound");
  FiniteField f = gf(2, 2 * m + 1);
  const unsigned q = f.size();
  std::vector<Matrix4> gens;
  for (unsigned a = 0; a < q; ++a)
    for (unsigned b = 0; b < q; ++b)
      if (a != 0 || b != 0) gens.push_back(suzuki_s(f, m, a, b));
  for (unsigned l = 2; l < q; ++l) gens.push_back(suzuki_m(f, m, l));
  Matrix4 id{};
  for (int i = 0; i < 4; ++i) id[i * 5] = 1;
  auto key = [](const Matrix4& x) { return x; };
  auto mul = [&f](const Matrix4& a, const Matrix4& b) { return mat_mul(f, a, b); };
  std::function<std::string(const Matrix4&)> label = [&f](const Matrix4& x) {
    return mat_label(f, x);
  };
  auto [g, mats] = closure(id, gens, mul, key, 4096, label);
  std::map<Matrix4, Elem> pos;
  for (Elem i = 0; i < mats.size(); ++i) pos[mats[i]] = i;
  std::vector<Elem> kern, comp;
  for (unsigned a = 0; a < q; ++a)
    for (unsigned b = 0; b < q; ++b) kern.push_back(pos.at(suzuki_s(f, m, a, b)));
  for (unsigned l = 1; l < q; ++l) comp.push_back(pos.at(suzuki_m(f, m, l)));
  SuzukiStabilizer out{g, ElementSet(g, kern), ElementSet(g, comp), std::move(mats), f};
  if (!is_closed_subgroup(*g, out.kernel.members()) ||
      !is_closed_subgroup(*g, out.complement.members()))
    fail(Errc::InternalTheoremViolation, "Suzuki kernel or complement not closed");
  out.kernel = ElementSet::assume_subgroup(g, out.kernel.members());
  out.complement = ElementSet::assume_subgroup(g, out.complement.members());
  return out;
}

GroupPtr special_linear_2_3() {
  using M2 = std::array<unsigned, 4>;
  auto mul = [](const M2& a, const M2& b) {
    return M2{(a[0] * b[0] + a[1] * b[2]) % 3, (a[0] * b[1] + a[1] * b[3]) % 3,
              (a[2] * b[0] + a[3] * b[2]) % 3, (a[2] * b[1] + a[3] * b[3]) % 3};
  };
  auto key = [](const M2& x) { return x; };
  std::function<std::string(const M2&)> label = [](const M2& x) {
    return "[" + std::to_string(x[0]) + "," + std::to_string(x[1]) + ";" + std::to_string(x[2]) +
           "," + std::to_string(x[3]) + "]";
  };
  return closure(M2{1, 0, 0, 1}, {M2{1, 1, 0, 1}, M2{1, 0, 1, 1}}, mul, key, 64, label).first;
}

// ---- catalog ------------------------------------------------------------------

std::size_t known_group_count(std::size_t n) {
  static const std::size_t counts[] = {
      0, 1, 1,  1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1,  14, 1, 5,  1, 5,  2, 2,
      1, 15, 2, 2, 5, 4, 1, 4, 1, 51, 1, 2, 1, 14, 1, 2, 2,  14, 1, 6, 1, 4, 2, 2,
      1, 52, 2, 5, 1, 5, 1, 15, 2, 13, 2, 2, 1, 13, 1, 2, 4, 267};
  if (n >= std::size(counts)) fail(Errc::InvalidArgument, "known counts stop at order 64");
  return counts[n];
}

namespace {

// Abelian types of order n as invariant factor lists m_1 >= m_2 >= ..., m_{i+1} | m_i.
std::vector<std::vector<std::size_t>> abelian_types(std::size_t n) {
  // Partitions of each prime exponent, combined into invariant factors.
  std::vector<std::vector<std::vector<std::size_t>>> perPrime;
  for (std::size_t p : prime_divisors(n)) {
    std::size_t e = 0;
    for (std::size_t r = n; r % p == 0; r /= p) ++e;
    std::vector<std::vector<std::size_t>> parts;
    std::function<void(std::size_t, std::size_t, std::vector<std::size_t>&)> rec =
        [&](std::size_t left, std::size_t maxPart, std::vector<std::size_t>& cur) {
          if (left == 0) {
            std::vector<std::size_t> powers;
            for (std::size_t k : cur) {
              std::size_t v = 1;
              for (std::size_t i = 0; i < k; ++i) v *= p;
              powers.push_back(v);
            }
            parts.push_back(powers);
            return;
          }
          for (std::size_t k = std::min(left, maxPart); k >= 1; --k) {
            cur.push_back(k);
            rec(left - k, k, cur);
            cur.pop_back();
          }
        };
    std::vector<std::size_t> cur;
    rec(e, e, cur);
    perPrime.push_back(parts);
  }
  std::vector<std::vector<std::size_t>> out{{}};
  for (const auto& parts : perPrime) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& acc : out)
      for (const auto& pp : parts) {
        std::vector<std::size_t> merged(std::max(acc.size(), pp.size()), 1);
        for (std::size_t i = 0; i < merged.size(); ++i) {
          if (i < acc.size()) merged[i] *= acc[i];
          if (i < pp.size()) merged[i] *= pp[i];
        }
        next.push_back(merged);
      }
    out = std::move(next);
  }
  if (n == 1) return {{1}};
  return out;
}

std::string abelian_name(const std::vector<std::size_t>& factors) {
  std::string s;
  for (std::size_t m : factors) s += (s.empty() ? "C" : "xC") + std::to_string(m);
  return s;
}

std::vector<std::size_t> units_mod(std::size_t n) {
  std::vector<std::size_t> u;
  for (std::size_t a = 1; a < std::max<std::size_t>(n, 2); ++a)
    if (std::gcd(a, n) == 1) u.push_back(a % n);
  return u;
}

// Automorphisms of a small group by brute force over generator images.
std::vector<Perm> automorphisms(const GroupPtr& q) {
  auto gens = greedy_generators(ElementSet::whole(q));
  std::vector<Perm> out;
  std::vector<Elem> images(gens.size());
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == gens.size()) {
      Perm map(q->order(), static_cast<Elem>(-1));
      map[0] = 0;
      std::vector<Elem> queue{0};
      for (std::size_t i = 0; i < queue.size(); ++i)
        for (std::size_t j = 0; j < gens.size(); ++j) {
          Elem y = q->mul(queue[i], gens[j]);
          Elem img = q->mul(map[queue[i]], images[j]);
          if (map[y] == static_cast<Elem>(-1)) {
            map[y] = img;
            queue.push_back(y);
          } else if (map[y] != img) {
            return;
          }
        }
      if (is_permutation(map)) out.push_back(map);
      return;
    }
    for (Elem c = 0; c < q->order(); ++c) {
      if (q->element_order(c) != q->element_order(gens[k])) continue;
      images[k] = c;
      rec(k + 1);
    }
  };
  rec(0);
  return out;
}

class CatalogBuilder {
 public:
  explicit CatalogBuilder(const CatalogOptions& o) : opt_(o) {}

  void add(const std::string& name, const GroupPtr& g, const std::string& ctor,
           std::vector<long long> params) {
    if (g->order() > opt_.maxOrder) return;
    auto fp = fingerprint(g);
    for (std::size_t i : byOrder_[g->order()])
      if (fps_[i] == fp && find_isomorphism(entries_[i].group, g)) return;
    byOrder_[g->order()].push_back(entries_.size());
    fps_.push_back(std::move(fp));
    entries_.push_back(CatalogEntry{name, g, ctor, std::move(params)});
  }

  std::vector<CatalogEntry> finish() {
    if (opt_.nonAbelianOnly)
      std::erase_if(entries_, [](const CatalogEntry& e) { return e.group->is_abelian(); });
    std::stable_sort(entries_.begin(), entries_.end(), [](const auto& a, const auto& b) {
      if (a.group->order() != b.group->order()) return a.group->order() < b.group->order();
      return a.name < b.name;
    });
    return std::move(entries_);
  }

  const std::vector<CatalogEntry>& entries() const { return entries_; }
  std::size_t max() const { return opt_.maxOrder; }

 private:
  CatalogOptions opt_;
  std::vector<CatalogEntry> entries_;
  std::vector<GroupFingerprint> fps_;
  std::map<std::size_t, std::vector<std::size_t>> byOrder_;
};

// Every action of `g` on C_n, via images of greedy generators in the unit group.
void add_cyclic_extensions(CatalogBuilder& b, const std::string& gname, const GroupPtr& g,
                           std::size_t n) {
  auto cn = cyclic(n);
  auto gens = greedy_generators(ElementSet::whole(g));
  auto units = units_mod(n);
  std::vector<std::size_t> choice(gens.size(), 0);
  while (true) {
    std::vector<Perm> images;
    std::vector<long long> params{static_cast<long long>(n)};
    bool trivial = true;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const std::size_t a = units[choice[i]];
      params.push_back(static_cast<long long>(a));
      if (a != 1 % n) trivial = false;
      Perm p(n);
      for (std::size_t x = 0; x < n; ++x) p[x] = static_cast<Elem>((a * x) % n);
      images.push_back(p);
    }
    if (!trivial || g->is_abelian()) {
      try {
        Action act = action_from_generators(*g, *cn, gens, images);
        std::string name = gname + ":C" + std::to_string(n) + "[";
        for (std::size_t i = 1; i < params.size(); ++i)
          name += (i > 1 ? "," : "") + std::to_string(params[i]);
        name += "]";
        if (trivial) name = gname + "xC" + std::to_string(n);
        b.add(name, semidirect_product(g, cn, act).group, "semidirect_cyclic", params);
      } catch (const Error&) {
      }
    }
    std::size_t i = 0;
    while (i < choice.size() && ++choice[i] == units.size()) choice[i++] = 0;
    if (i == choice.size()) break;
  }
}

}  // namespace

std::vector<CatalogEntry> small_group_catalog(const CatalogOptions& options) {
  if (options.maxOrder > 64) fail(Errc::InvalidArgument, "catalog is limited to order 64");
  CatalogBuilder b(options);
  const std::size_t maxN = options.maxOrder;
  auto L = [](std::size_t v) { return static_cast<long long>(v); };

  // Named families first so that their names win during deduplication.
  for (std::size_t n = 1; n <= maxN; ++n)
    for (const auto& t : abelian_types(n)) {
      std::vector<long long> params;
      for (std::size_t m : t) params.push_back(L(m));
      b.add(abelian_name(t), abelian(t), "abelian", params);
    }
  for (std::size_t n = 6; n <= maxN; n += 2) b.add("D" + std::to_string(n), dihedral(n), "dihedral", {L(n)});
  for (std::size_t n = 8; n <= maxN; n += 4) {
    std::string name = n == 8 ? "Q8" : "Dic" + std::to_string(n);
    b.add(name, dicyclic(n), "dicyclic", {L(n)});
  }
  for (std::size_t n = 3; n <= 4; ++n) {
    b.add("S" + std::to_string(n), symmetric(n), "symmetric", {L(n)});
    b.add("A" + std::to_string(n), alternating(n), "alternating", {L(n)});
  }
  if (maxN >= 60) b.add("A5", alternating(5), "alternating", {5});
  if (maxN >= 24) b.add("SL(2,3)", special_linear_2_3(), "special_linear", {2, 3});
  for (std::size_t q = 3; 2 * q <= maxN; ++q) {
    if (!prime_of_power(q)) continue;
    std::optional<AffineGroup> built;
    try {
      built = affine_group(q);
    } catch (const Error& e) {
      if (e.code() != Errc::NoBuiltinModulus) throw;
      continue;
    }
    const AffineGroup& aff = *built;
    for (std::size_t d = 2; d <= q - 1; ++d) {
      if ((q - 1) % d != 0 || q * d > maxN) continue;
      ElementSet sub = affine_subgroup(aff, d);
      std::vector<Elem> members = sub.members();
      std::vector<std::vector<Elem>> table(members.size(), std::vector<Elem>(members.size()));
      std::map<Elem, Elem> pos;
      for (Elem i = 0; i < members.size(); ++i) pos[members[i]] = i;
      for (Elem i = 0; i < members.size(); ++i)
        for (Elem j = 0; j < members.size(); ++j)
          table[i][j] = pos.at(aff.group->mul(members[i], members[j]));
      std::vector<std::string> labels;
      for (Elem x : members) labels.push_back(aff.group->label(x));
      std::string name = d == q - 1 ? "Aff(1," + std::to_string(q) + ")"
                                    : "AffSub(" + std::to_string(q) + "," + std::to_string(d) + ")";
      b.add(name, build_from_table(table, labels), "affine", {L(q), L(d)});
    }
  }
  for (std::size_t p : {3u, 5u}) {
    if (2 * p * p > maxN) continue;
    auto base = abelian({p, p});
    Perm swap(p * p);
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = 0; j < p; ++j) swap[i * p + j] = static_cast<Elem>(j * p + i);
    auto c2 = cyclic(2);
    Elem gen[] = {1};
    Action act = action_from_generators(*c2, *base, gen, std::vector<Perm>{swap});
    b.add("C" + std::to_string(p) + "wrC2", semidirect_product(c2, base, act).group, "wreath",
          {L(p), 2});
  }
  if (maxN >= 27) {
    // Heisenberg group: C3 acting on C3 x C3 by (x, y) -> (x, x + y).
    auto base = abelian({3, 3});
    Perm shear(9);
    for (std::size_t x = 0; x < 3; ++x)
      for (std::size_t y = 0; y < 3; ++y) shear[x * 3 + y] = static_cast<Elem>(x * 3 + (x + y) % 3);
    auto c3 = cyclic(3);
    Elem gen[] = {1};
    Action act = action_from_generators(*c3, *base, gen, std::vector<Perm>{shear});
    b.add("Heis27", semidirect_product(c3, base, act).group, "heisenberg", {3});
  }

  // Extensions of every group found so far (and of cyclic groups) by cyclic
  // groups, under all actions.
  for (std::size_t n = 2; n <= maxN / 2; ++n) {
    for (std::size_t m = 2; m * n <= maxN; ++m) add_cyclic_extensions(b, "C" + std::to_string(m), cyclic(m), n);
  }
  {
    std::vector<CatalogEntry> snapshot = b.entries();
    for (const auto& e : snapshot) {
      if (e.group->is_abelian()) continue;
      for (std::size_t n = 2; n * e.group->order() <= maxN; ++n)
        add_cyclic_extensions(b, e.name, e.group, n);
    }
  }
  // Direct products of the entries found so far.
  {
    std::vector<CatalogEntry> snapshot = b.entries();
    for (std::size_t i = 0; i < snapshot.size(); ++i) {
      if (snapshot[i].group->is_abelian()) continue;
      for (std::size_t j = 0; j < snapshot.size(); ++j) {
        if (snapshot[j].group->order() < 2) continue;
        if (!snapshot[j].group->is_abelian() && j < i) continue;
        if (snapshot[i].group->order() * snapshot[j].group->order() > maxN) continue;
        b.add(snapshot[i].name + "x" + snapshot[j].name,
              direct_product(snapshot[i].group, snapshot[j].group).group, "direct_product", {});
      }
    }
  }
  // Cyclic groups acting on small non-cyclic groups.
  {
    std::vector<CatalogEntry> snapshot = b.entries();
    for (const auto& e : snapshot) {
      const auto& q = e.group;
      if (q->order() < 4 || q->order() > 16 || 2 * q->order() > maxN) continue;
      if (is_cyclic(ElementSet::whole(q))) continue;
      auto autos = automorphisms(q);
      for (std::size_t m = 2; m * q->order() <= maxN; ++m) {
        auto cm = cyclic(m);
        for (std::size_t i = 0; i < autos.size(); ++i) {
          Perm power = identity_perm(q->order());
          for (std::size_t k = 0; k < m; ++k) power = compose(power, autos[i]);
          if (!is_identity(power) || is_identity(autos[i])) continue;
          Elem gen[] = {1};
          Action act = action_from_generators(*cm, *q, gen, std::vector<Perm>{autos[i]});
          b.add("C" + std::to_string(m) + ":(" + e.name + ")[" + std::to_string(i) + "]",
                semidirect_product(cm, q, act).group, "semidirect_cyclic_on", {L(m), L(i)});
        }
      }
    }
  }
  // Possibly non-split extensions of non-cyclic M by C2: M<x> with x^2 = m
  // and y^x = φ(y), where φ(m) = m and φ^2 is conjugation by m.
  {
    std::vector<CatalogEntry> snapshot = b.entries();
    for (const auto& e : snapshot) {
      const auto& q = e.group;
      const std::size_t k = q->order();
      if (k < 8 || k > 16 || 2 * k > maxN) continue;
      if (is_cyclic(ElementSet::whole(q))) continue;
      auto autos = automorphisms(q);
      for (std::size_t i = 0; i < autos.size(); ++i) {
        const Perm& phi = autos[i];
        Perm phi2 = compose(phi, phi);
        for (Elem m = 0; m < k; ++m) {
          if (phi[m] != m) continue;
          bool inner = true;
          for (Elem y = 0; y < k && inner; ++y) inner = phi2[y] == q->conj(y, m);
          if (!inner) continue;
          // Elements x^i a, with a x = x φ(a).
          std::vector<std::vector<Elem>> table(2 * k, std::vector<Elem>(2 * k));
          for (std::size_t u = 0; u < 2 * k; ++u)
            for (std::size_t v = 0; v < 2 * k; ++v) {
              const std::size_t xi = u / k, xj = v / k;
              Elem a = static_cast<Elem>(u % k), c = static_cast<Elem>(v % k);
              Elem prod = q->mul(xj ? phi[a] : a, c);
              std::size_t xk = xi + xj;
              if (xk == 2) {
                prod = q->mul(m, prod);
                xk = 0;
              }
              table[u][v] = static_cast<Elem>(xk * k + prod);
            }
          b.add(e.name + ".C2[" + std::to_string(i) + "," + std::to_string(m) + "]",
                build_from_table(table), "cyclic_extension", {2, L(i), L(m)});
        }
      }
    }
  }
  return b.finish();
}

std::vector<CatalogEntry> small_group_catalog(std::size_t maxOrder) {
  return small_group_catalog(CatalogOptions{maxOrder, false});
}

}  // namespace loopforge
