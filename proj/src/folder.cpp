#include "loopforge/folder.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "loopforge/group_io.hpp"

namespace loopforge {

std::vector<Elem> canonical_transversal_order(std::vector<Elem> t) {
  std::sort(t.begin(), t.end());
  return t;
}

bool is_right_transversal(const ElementSet& h, std::span<const Elem> t) {
  if (t.size() != index_of(h)) return false;
  auto cosetOf = right_coset_index(h);
  std::vector<char> hit(t.size(), 0);
  for (Elem x : t) {
    if (x >= cosetOf.size()) return false;
    std::size_t c = cosetOf[x];
    if (hit[c]) return false;
    hit[c] = 1;
  }
  return true;
}

bool is_invariant_under(const ElementSet& acting, std::span<const Elem> t) {
  const auto& g = acting.group();
  std::vector<char> in(g.order(), 0);
  for (Elem x : t) in[x] = 1;
  for (Elem u : acting)
    for (Elem x : t)
      if (!in[g.conj(x, u)]) return false;
  return true;
}

namespace {

bool compute_generating(const GroupPtr& g, const std::vector<Elem>& t) {
  return generated_subgroup(g, t).size() == g->order();
}

}  // namespace

LoopFolder validate_folder(const ElementSet& h, std::vector<Elem> t, bool useInvarianceShortcut) {
  const GroupPtr& g = h.parent();
  if (!h.is_subgroup() && !is_closed_subgroup(*g, h.members()))
    fail(Errc::NotSubgroup, "H is not a subgroup");
  ElementSet hs = ElementSet::assume_subgroup(g, h.members());
  for (Elem x : t)
    if (x >= g->order()) fail(Errc::InvalidArgument, "transversal element out of range");
  t = canonical_transversal_order(std::move(t));
  if (std::adjacent_find(t.begin(), t.end()) != t.end())
    fail(Errc::NotTransversal, "transversal lists an element twice");
  if (t.empty() || t[0] != 0) fail(Errc::NotTransversal, "transversal does not contain 1");

  LoopFolder f;
  f.rcc_ = is_invariant_under(ElementSet::whole(g), t);
  if (f.rcc_ && useInvarianceShortcut) {
    if (!is_right_transversal(hs, t))
      fail(Errc::NotTransversal, "T is not a transversal for H");
  } else {
    std::set<std::vector<Elem>> seen;
    for (Elem x = 0; x < g->order(); ++x) {
      ElementSet c = conjugate(hs, x);
      if (!seen.insert(c.members()).second) continue;
      if (!is_right_transversal(c, t))
        fail(Errc::NotTransversal, "T is not a transversal for H^g with g = " + g->label(x) +
                                       " (index " + std::to_string(x) + ")");
    }
  }
  f.faithful_ = core(hs).is_trivial();
  f.generating_ = compute_generating(g, t);
  f.h_ = std::move(hs);
  f.t_ = std::move(t);
  return f;
}

bool LoopFolder::flags_consistent() const {
  return rcc_ == is_invariant_under(ElementSet::whole(group()), t_) &&
         faithful_ == core(h_).is_trivial() && generating_ == compute_generating(group(), t_);
}

bool is_faithful(const LoopFolder& f) { return f.is_faithful(); }
bool is_rcc(const LoopFolder& f) { return f.is_rcc(); }
bool is_generating(const LoopFolder& f) { return f.is_generating(); }

LoopTable loop_from_folder(const LoopFolder& f) {
  const auto& g = *f.group();
  const auto& t = f.transversal();
  auto cosetOf = right_coset_index(f.subgroup());
  std::vector<Elem> posOfCoset(t.size());
  for (Elem i = 0; i < t.size(); ++i) posOfCoset[cosetOf[t[i]]] = i;
  std::vector<std::vector<Elem>> rows(t.size(), std::vector<Elem>(t.size()));
  for (Elem i = 0; i < t.size(); ++i)
    for (Elem j = 0; j < t.size(); ++j) rows[i][j] = posOfCoset[cosetOf[g.mul(t[i], t[j])]];
  std::vector<std::string> labels;
  for (Elem x : t) labels.push_back(g.label(x));
  return LoopTable::from_rows(rows, std::move(labels));
}

LoopFolder envelope(const LoopTable& l, std::size_t maxOrder) {
  auto rm = right_multiplication_group(l, maxOrder);
  return validate_folder(rm.stabilizer, rm.translation);
}

RoundtripResult envelope_roundtrip(const LoopFolder& f) {
  if (!f.is_faithful() || !f.is_generating())
    fail(Errc::PreconditionFailed, "round trip needs a faithful folder with generating transversal");
  const auto& g = *f.group();
  const auto& t = f.transversal();
  LoopTable l = loop_from_folder(f);
  RoundtripResult res;
  std::optional<RightMultiplicationGroup> rm;
  try {
    rm = right_multiplication_group(l, g.order());
  } catch (const Error& e) {
    if (e.code() != Errc::OrderBoundExceeded) throw;
    res.failure = "|RM(L)| exceeds |G|";
    return res;
  }
  const auto& env = *rm->perms.group;
  constexpr Elem kUnset = static_cast<Elem>(-1);
  std::vector<Elem> phi(env.order(), kUnset);
  phi[0] = 0;
  std::vector<Elem> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Elem x = queue[i];
    for (Elem j = 0; j < t.size(); ++j) {
      const Elem y = env.mul(x, rm->translation[j]);
      const Elem img = g.mul(phi[x], t[j]);
      if (phi[y] == kUnset) {
        phi[y] = img;
        queue.push_back(y);
      } else if (phi[y] != img) {
        res.failure = "Phi is not well defined";
        return res;
      }
    }
  }
  if (env.order() != g.order()) {
    res.failure = "|RM(L)| differs from |G|";
    return res;
  }
  std::vector<char> hit(g.order(), 0);
  for (Elem y : phi) {
    if (y == kUnset || hit[y]) {
      res.failure = "Phi is not bijective";
      return res;
    }
    hit[y] = 1;
  }
  std::vector<Elem> stabImage;
  for (Elem x : rm->stabilizer) stabImage.push_back(phi[x]);
  if (ElementSet(f.group(), stabImage).members() != f.subgroup().members()) {
    res.failure = "Phi(Stab(1)) differs from H";
    return res;
  }
  std::vector<Elem> tImage;
  for (Elem x : rm->translation) tImage.push_back(phi[x]);
  if (ElementSet(f.group(), tImage).members() != ElementSet(f.group(), t).members()) {
    res.failure = "Phi(R_L) differs from T";
    return res;
  }
  res.ok = true;
  res.phi = std::move(phi);
  return res;
}

bool envelope_roundtrip_check(const LoopFolder& f) { return envelope_roundtrip(f).ok; }

LoopFolder derived_construction(const ElementSet& h) {
  const GroupPtr& g = h.parent();
  ElementSet d = derived_subgroup(g);
  if (!intersection(h, d).is_trivial())
    fail(Errc::DerivedIntersectsH, "H meets G' nontrivially");
  ElementSet k = ElementSet::assume_subgroup(g, product_set(h, d).members());
  std::vector<Elem> t;
  for (const auto& block : right_cosets(k))
    for (Elem x : d) t.push_back(g->mul(x, block.front()));
  return validate_folder(h, std::move(t));
}

bool is_derived_form(const LoopFolder& f) {
  const auto& g = *f.group();
  ElementSet d = derived_subgroup(f.group());
  ElementSet t(f.group(), f.transversal());
  for (Elem x : t)
    for (Elem y : d)
      if (!t.contains(g.mul(y, x))) return false;
  return true;
}

bool normalizer_factorization_check(const LoopFolder& f) {
  if (!f.is_rcc()) fail(Errc::PreconditionFailed, "folder is not RCC");
  const ElementSet& h = f.subgroup();
  return normalizer(h).members() == product_set(h, centralizer(h)).members();
}

namespace {

ExtendedFolder extend_with(const LoopFolder& f, ProductGroup prod, std::size_t nq) {
  std::vector<Elem> hs, ts;
  for (Elem x : f.subgroup()) hs.push_back(static_cast<Elem>(x * nq));
  for (Elem x : f.transversal())
    for (Elem y = 0; y < nq; ++y) ts.push_back(static_cast<Elem>(x * nq + y));
  auto h = ElementSet::assume_subgroup(prod.group, std::move(hs));
  LoopFolder folder = validate_folder(h, std::move(ts));
  return ExtendedFolder{std::move(prod), std::move(folder)};
}

}  // namespace

ExtendedFolder extend_direct(const LoopFolder& f, const GroupPtr& q) {
  if (!f.is_rcc()) fail(Errc::PreconditionFailed, "folder is not RCC");
  return extend_with(f, direct_product(f.group(), q), q->order());
}

ExtendedFolder extend_semidirect(const LoopFolder& f, const GroupPtr& q, const Action& action) {
  if (!f.is_rcc()) fail(Errc::PreconditionFailed, "folder is not RCC");
  return extend_with(f, semidirect_product(f.group(), q, action), q->order());
}

ExtendedFolder product_folder(const LoopFolder& f1, const LoopFolder& f2) {
  if (!f1.is_rcc() || !f2.is_rcc()) fail(Errc::PreconditionFailed, "folders must be RCC");
  ProductGroup prod = direct_product(f1.group(), f2.group());
  const std::size_t n2 = f2.group()->order();
  std::vector<Elem> hs, ts;
  for (Elem a : f1.subgroup())
    for (Elem b : f2.subgroup()) hs.push_back(static_cast<Elem>(a * n2 + b));
  for (Elem a : f1.transversal())
    for (Elem b : f2.transversal()) ts.push_back(static_cast<Elem>(a * n2 + b));
  auto h = ElementSet::assume_subgroup(prod.group, std::move(hs));
  LoopFolder folder = validate_folder(h, std::move(ts));
  return ExtendedFolder{std::move(prod), std::move(folder)};
}

SemidirectCore semidirect_core(const ElementSet& h, const GroupPtr& q, const Action& action) {
  if (!h.group().is_abelian()) fail(Errc::NotAbelian, "G must be abelian");
  ProductGroup prod = semidirect_product(h.parent(), q, action);
  const auto& p = *prod.group;
  const std::size_t nq = q->order();
  std::vector<Elem> members;
  for (Elem x : h) {
    const Elem hx = static_cast<Elem>(x * nq);
    bool central = true;
    for (Elem y = 0; y < nq && central; ++y) central = p.commutator(hx, y) == 0;
    if (central) members.push_back(hx);
  }
  ElementSet c = ElementSet::assume_subgroup(prod.group, std::move(members));
  return SemidirectCore{std::move(prod), std::move(c)};
}

ExtendedFolder merge_transversals(const ElementSet& h, const std::vector<std::vector<Elem>>& family,
                                  const GroupPtr& q) {
  if (family.empty()) fail(Errc::InvalidArgument, "empty transversal family");
  if (!q->is_abelian()) fail(Errc::NotAbelian, "Q must be abelian");
  if (q->order() < family.size())
    fail(Errc::QTooSmall, "|Q| = " + std::to_string(q->order()) + " < |S| = " +
                              std::to_string(family.size()));
  const GroupPtr& g = h.parent();
  std::vector<Elem> all;
  for (const auto& s : family) {
    LoopFolder f = validate_folder(h, s);
    if (!f.is_rcc()) fail(Errc::PreconditionFailed, "family member is not G-invariant");
    all.insert(all.end(), s.begin(), s.end());
  }
  if (generated_subgroup(g, all).size() != g->order())
    fail(Errc::FamilyDoesNotGenerate, "the family does not generate G");
  ProductGroup prod = direct_product(g, q);
  const std::size_t nq = q->order();
  std::vector<Elem> hs, ts;
  for (Elem x : h) hs.push_back(static_cast<Elem>(x * nq));
  for (Elem j = 0; j < nq; ++j) {
    const auto& s = j < family.size() ? family[j] : family[0];
    for (Elem x : s) ts.push_back(static_cast<Elem>(x * nq + j));
  }
  auto hh = ElementSet::assume_subgroup(prod.group, std::move(hs));
  LoopFolder folder = validate_folder(hh, std::move(ts));
  return ExtendedFolder{std::move(prod), std::move(folder)};
}

FolderFile parse_folder_text(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  FolderFile out;
  bool haveGroup = false, haveSub = false, haveT = false;
  while (std::getline(in, raw)) {
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.resize(hash);
    std::istringstream ls(raw);
    std::string head;
    if (!(ls >> head)) continue;
    std::string rest;
    std::getline(ls, rest);
    if (head == "group") {
      auto b = rest.find_first_not_of(" \t");
      auto e = rest.find_last_not_of(" \t\r");
      if (b == std::string::npos) fail(Errc::ParseError, "empty group path");
      out.groupPath = rest.substr(b, e - b + 1);
      haveGroup = true;
    } else if (head == "subgroup") {
      out.subgroup = parse_index_list(rest);
      haveSub = true;
    } else if (head == "transversal") {
      out.transversal = parse_index_list(rest);
      haveT = true;
    } else {
      fail(Errc::ParseError, "unknown folder directive '" + head + "'");
    }
  }
  if (!haveGroup || !haveSub || !haveT)
    fail(Errc::ParseError, "folder file needs group, subgroup and transversal lines");
  return out;
}

LoopFolder read_folder_file(const std::filesystem::path& path) {
  FolderFile ff = parse_folder_text(read_text_file(path));
  std::filesystem::path gp = ff.groupPath;
  if (gp.is_relative()) gp = path.parent_path() / gp;
  GroupPtr g = read_group_file(gp);
  return validate_folder(ElementSet::subgroup(g, ff.subgroup), ff.transversal);
}

std::string format_folder(const LoopFolder& f, const std::string& groupPath) {
  std::ostringstream out;
  out << "group " << groupPath << "\nsubgroup";
  for (Elem x : f.subgroup()) out << " " << x;
  out << "\ntransversal";
  for (Elem x : f.transversal()) out << " " << x;
  out << "\n";
  return out.str();
}

}  // namespace loopforge
