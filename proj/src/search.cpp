#include "loopforge/search.hpp"

#include <algorithm>

#include "loopforge/folder.hpp"

namespace loopforge {

namespace {

class ClassCover {
 public:
  ClassCover(const ElementSet& h, const ElementSet& acting, const SearchOptions& opt,
             bool materialize)
      : opt_(opt), materialize_(materialize) {
    cosetOf_ = right_coset_index(h);
    cosets_ = index_of(h);
    for (const auto& orbit : conjugation_orbits(acting)) {
      if (orbit.members().front() == 0) continue;
      std::vector<std::size_t> touched;
      bool ok = true;
      for (Elem x : orbit) {
        std::size_t c = cosetOf_[x];
        if (c == 0 || std::find(touched.begin(), touched.end(), c) != touched.end()) {
          ok = false;
          break;
        }
        touched.push_back(c);
      }
      if (ok) candidates_.push_back({orbit.members(), touched});
    }
    std::sort(candidates_.begin(), candidates_.end(), [](const Cand& a, const Cand& b) {
      if (a.cosets.size() != b.cosets.size()) return a.cosets.size() < b.cosets.size();
      return a.elems.front() < b.elems.front();
    });
    byCoset_.assign(cosets_, {});
    for (std::size_t i = 0; i < candidates_.size(); ++i)
      for (std::size_t c : candidates_[i].cosets) byCoset_[c].push_back(i);
    covered_.assign(cosets_, 0);
    covered_[0] = 1;
  }

  TransversalSearch run() {
    chosen_.clear();
    search(cosets_ - 1);
    std::sort(result_.transversals.begin(), result_.transversals.end());
    return std::move(result_);
  }

 private:
  struct Cand {
    std::vector<Elem> elems;
    std::vector<std::size_t> cosets;
  };

  bool fits(const Cand& c) const {
    for (std::size_t k : c.cosets)
      if (covered_[k]) return false;
    return true;
  }

  void set(const Cand& c, char v) {
    for (std::size_t k : c.cosets) covered_[k] = v;
  }

  // Returns true when the search must stop (limit reached or budget spent).
  bool search(std::size_t remaining) {
    if (++result_.nodes > opt_.nodeBudget) {
      result_.complete = false;
      return true;
    }
    if (remaining == 0) {
      ++result_.count;
      if (materialize_) {
        std::vector<Elem> t{0};
        for (std::size_t i : chosen_)
          t.insert(t.end(), candidates_[i].elems.begin(), candidates_[i].elems.end());
        std::sort(t.begin(), t.end());
        result_.transversals.push_back(std::move(t));
      }
      return opt_.limit != 0 && result_.count >= opt_.limit;
    }
    // Uncovered coset with the fewest fitting candidates.
    std::size_t best = cosets_;
    std::size_t bestCount = static_cast<std::size_t>(-1);
    for (std::size_t c = 1; c < cosets_; ++c) {
      if (covered_[c]) continue;
      std::size_t n = 0;
      for (std::size_t i : byCoset_[c])
        if (fits(candidates_[i])) ++n;
      if (n < bestCount) {
        bestCount = n;
        best = c;
        if (n == 0) return false;
      }
    }
    for (std::size_t i : byCoset_[best]) {
      const Cand& cand = candidates_[i];
      if (!fits(cand)) continue;
      set(cand, 1);
      chosen_.push_back(i);
      bool stop = search(remaining - cand.cosets.size());
      chosen_.pop_back();
      set(cand, 0);
      if (stop) return true;
    }
    return false;
  }

  SearchOptions opt_;
  bool materialize_;
  std::vector<std::size_t> cosetOf_;
  std::size_t cosets_ = 0;
  std::vector<Cand> candidates_;
  std::vector<std::vector<std::size_t>> byCoset_;
  std::vector<char> covered_;
  std::vector<std::size_t> chosen_;
  TransversalSearch result_;
};

TransversalSearch run_cover(const ElementSet& h, const SearchOptions& options,
                            const std::optional<ElementSet>& acting, bool materialize) {
  if (!h.is_subgroup() && !is_closed_subgroup(h.group(), h.members()))
    fail(Errc::NotSubgroup, "H is not a subgroup");
  ElementSet hs = ElementSet::assume_subgroup(h.parent(), h.members());
  ElementSet u = acting ? *acting : ElementSet::whole(h.parent());
  return ClassCover(hs, u, options, materialize).run();
}

}  // namespace

TransversalSearch enumerate_invariant_transversals(const ElementSet& h, const SearchOptions& options,
                                                   const std::optional<ElementSet>& acting) {
  return run_cover(h, options, acting, true);
}

TransversalSearch count_invariant_transversals(const ElementSet& h, const SearchOptions& options,
                                               const std::optional<ElementSet>& acting) {
  return run_cover(h, options, acting, false);
}

std::vector<Elem> double_coset_transversal(const ElementSet& h, const ElementSet& u) {
  const auto& g = h.group();
  std::vector<char> done(g.order(), 0);
  std::vector<Elem> reps;
  for (Elem x = 0; x < g.order(); ++x) {
    if (done[x]) continue;
    reps.push_back(x);
    for (Elem a : h) {
      const Elem ax = g.mul(a, x);
      for (Elem b : u) done[g.mul(ax, b)] = 1;
    }
  }
  return reps;
}

namespace {

// g ∈ H C_G(U ∩ H^g)
bool cond_centralizer(const ElementSet& h, const ElementSet& u, Elem g) {
  ElementSet w = intersection(u, conjugate(h, g));
  ElementSet c = centralizer(w);
  return product_set(h, c).contains(g);
}

// ∃h ∈ H with x^h = x^g for all x ∈ U^{g^-1} ∩ H
bool cond_conjugation(const ElementSet& h, const ElementSet& u, Elem g) {
  const auto& gr = h.group();
  ElementSet w = intersection(conjugate(u, gr.inv(g)), h);
  for (Elem a : h) {
    bool ok = true;
    for (Elem x : w)
      if (gr.conj(x, a) != gr.conj(x, g)) {
        ok = false;
        break;
      }
    if (ok) return true;
  }
  return false;
}

}  // namespace

FelschReport felsch_criteria(const ElementSet& h, const ElementSet& u, const SearchOptions& options) {
  if (!u.subset_of(h)) fail(Errc::ChainViolated, "U is not contained in H");
  const auto& g = h.group();
  ElementSet hs = ElementSet::assume_subgroup(h.parent(), h.members());
  ElementSet us = ElementSet::assume_subgroup(u.parent(), u.members());
  FelschReport r;
  SearchOptions one = options;
  one.limit = 1;
  auto found = enumerate_invariant_transversals(hs, one, us);
  r.exists = !found.transversals.empty();
  r.searchComplete = found.complete || r.exists;

  auto reps = double_coset_transversal(hs, us);
  r.condB = r.condD = true;
  for (Elem x = 0; x < g.order(); ++x) {
    if (r.condB && !cond_centralizer(hs, us, x)) r.condB = false;
    if (r.condD && !cond_conjugation(hs, us, x)) r.condD = false;
  }
  r.condC = r.condE = true;
  for (Elem s : reps) {
    if (r.condC && !cond_centralizer(hs, us, s)) r.condC = false;
    if (r.condE && !cond_conjugation(hs, us, s)) r.condE = false;
  }

  // Witness: for each double coset pick the smallest s* ∈ HsU centralizing
  // U ∩ H^{s*}, then take all U-conjugates.
  std::vector<Elem> system;
  bool complete = true;
  for (Elem s : reps) {
    std::vector<Elem> dc;
    for (Elem a : hs)
      for (Elem b : us) dc.push_back(g.mul(g.mul(a, s), b));
    std::sort(dc.begin(), dc.end());
    dc.erase(std::unique(dc.begin(), dc.end()), dc.end());
    std::optional<Elem> star;
    for (Elem x : dc) {
      ElementSet w = intersection(us, conjugate(hs, x));
      bool centralizes = true;
      for (Elem y : w)
        if (g.mul(x, y) != g.mul(y, x)) {
          centralizes = false;
          break;
        }
      if (centralizes) {
        star = x;
        break;
      }
    }
    if (!star) {
      complete = false;
      break;
    }
    for (Elem b : us) system.push_back(g.conj(*star, b));
  }
  if (complete) {
    ElementSet t(h.parent(), system);
    if (is_right_transversal(hs, t.members()) && is_invariant_under(us, t.members()))
      r.witness = t.members();
  }
  return r;
}

bool abelian_h_invariance_criterion(const ElementSet& h) {
  if (!is_abelian(h)) fail(Errc::NotAbelian, "H is not abelian");
  const auto& g = h.group();
  ElementSet hs = ElementSet::assume_subgroup(h.parent(), h.members());
  for (Elem x = 0; x < g.order(); ++x) {
    ElementSet w = intersection(hs, conjugate(hs, x));
    for (Elem y : w)
      if (g.mul(x, y) != g.mul(y, x)) return false;
  }
  return true;
}

}  // namespace loopforge
