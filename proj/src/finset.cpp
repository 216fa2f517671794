#include "finset.hpp"

#include <algorithm>
#include <map>

#include "unionfind.hpp"

namespace aegg {

FinSet::FinSet(std::vector<ElemId> ids) : elems_(std::move(ids)) {
  std::sort(elems_.begin(), elems_.end());
  if (std::adjacent_find(elems_.begin(), elems_.end()) != elems_.end())
    throw Error("FinSet: duplicate element id");
}

FinSet FinSet::range(std::size_t n) {
  std::vector<ElemId> ids(n);
  for (std::size_t i = 0; i < n; ++i) ids[i] = static_cast<ElemId>(i);
  return FinSet(std::move(ids));
}

bool FinSet::contains(ElemId x) const {
  return std::binary_search(elems_.begin(), elems_.end(), x);
}

std::size_t FinSet::index_of(ElemId x) const {
  auto it = std::lower_bound(elems_.begin(), elems_.end(), x);
  if (it == elems_.end() || *it != x)
    throw Error("FinSet: element " + std::to_string(x) + " not present");
  return static_cast<std::size_t>(it - elems_.begin());
}

FinFn::FinFn(FinSet dom, FinSet cod, std::vector<ElemId> images)
    : dom_(std::move(dom)), cod_(std::move(cod)), images_(std::move(images)) {
  if (images_.size() != dom_.size())
    throw Error("FinFn: image table size does not match domain");
  for (ElemId y : images_)
    if (!cod_.contains(y))
      throw Error("FinFn: image " + std::to_string(y) + " outside codomain");
}

FinFn FinFn::identity(FinSet s) {
  std::vector<ElemId> images(s.elems());
  FinSet cod = s;
  return FinFn(std::move(s), std::move(cod), std::move(images));
}

FinFn FinFn::constant(FinSet dom, FinSet cod, ElemId value) {
  std::vector<ElemId> images(dom.size(), value);
  return FinFn(std::move(dom), std::move(cod), std::move(images));
}

FinFn FinFn::from_pairs(FinSet dom, FinSet cod,
                        const std::vector<std::pair<ElemId, ElemId>>& pairs) {
  std::map<ElemId, ElemId> table;
  for (const auto& [x, y] : pairs) {
    auto [it, fresh] = table.emplace(x, y);
    if (!fresh && it->second != y)
      throw Error("FinFn: conflicting images for " + std::to_string(x));
  }
  std::vector<ElemId> images;
  images.reserve(dom.size());
  for (ElemId x : dom) {
    auto it = table.find(x);
    if (it == table.end())
      throw Error("FinFn: no image for " + std::to_string(x));
    images.push_back(it->second);
  }
  if (table.size() != dom.size()) throw Error("FinFn: assignment outside domain");
  return FinFn(std::move(dom), std::move(cod), std::move(images));
}

FinFn FinFn::inclusion(FinSet sub, FinSet super) {
  std::vector<ElemId> images(sub.elems());
  for (ElemId x : images)
    if (!super.contains(x)) throw Error("inclusion: element not in superset");
  return FinFn(std::move(sub), std::move(super), std::move(images));
}

ElemId FinFn::operator()(ElemId x) const { return images_[dom_.index_of(x)]; }

bool FinFn::is_injective() const {
  std::vector<ElemId> seen(images_);
  std::sort(seen.begin(), seen.end());
  return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

bool FinFn::is_surjective() const {
  std::vector<ElemId> seen(images_);
  std::sort(seen.begin(), seen.end());
  seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
  return seen.size() == cod_.size();
}

Word FinFn::map_word(const Word& w) const {
  Word out;
  out.reserve(w.size());
  for (ElemId v : w) out.push_back((*this)(v));
  return out;
}

FinFn compose(const FinFn& g, const FinFn& f) {
  if (f.cod() != g.dom()) throw Error("compose: codomain/domain mismatch");
  std::vector<ElemId> images;
  images.reserve(f.dom().size());
  for (ElemId y : f.images()) images.push_back(g(y));
  return FinFn(f.dom(), g.cod(), std::move(images));
}

SpanResult pullback(const FinFn& f, const FinFn& g) {
  if (f.cod() != g.cod()) throw Error("pullback: codomain mismatch");
  std::vector<ElemId> to_a, to_b;
  for (ElemId a : f.dom())
    for (ElemId b : g.dom())
      if (f(a) == g(b)) {
        to_a.push_back(a);
        to_b.push_back(b);
      }
  FinSet apex = FinSet::range(to_a.size());
  return SpanResult{apex, FinFn(apex, f.dom(), std::move(to_a)),
                    FinFn(apex, g.dom(), std::move(to_b))};
}

SpanResult kernel_pair(const FinFn& f) { return pullback(f, f); }

CospanResult pushout(const FinFn& f, const FinFn& g) {
  if (f.dom() != g.dom()) throw Error("pushout: domain mismatch");
  const std::size_t na = f.cod().size(), nb = g.cod().size();
  UnionFind uf(na + nb);
  for (ElemId c : f.dom())
    uf.unite(f.cod().index_of(f(c)), na + g.cod().index_of(g(c)));

  // Classes ordered by minimal member in the A-then-B numbering.
  std::vector<ElemId> class_of(na + nb);
  std::map<std::size_t, ElemId> rep_to_class;
  for (std::size_t i = 0; i < na + nb; ++i) {
    std::size_t r = uf.find(i);
    auto [it, fresh] = rep_to_class.emplace(r, static_cast<ElemId>(rep_to_class.size()));
    class_of[i] = it->second;
    (void)fresh;
  }
  // rep_to_class is keyed by representative (== minimal member), but insertion
  // order above already follows minimal members since we scan ascending.
  FinSet apex = FinSet::range(rep_to_class.size());
  std::vector<ElemId> la(na), lb(nb);
  for (std::size_t i = 0; i < na; ++i) la[i] = class_of[i];
  for (std::size_t j = 0; j < nb; ++j) lb[j] = class_of[na + j];
  return CospanResult{apex, FinFn(f.cod(), apex, std::move(la)),
                      FinFn(g.cod(), apex, std::move(lb))};
}

FinFn equalizer(const FinFn& f, const FinFn& g) {
  if (f.dom() != g.dom() || f.cod() != g.cod())
    throw Error("equalizer: not a parallel pair");
  std::vector<ElemId> kept;
  for (ElemId x : f.dom())
    if (f(x) == g(x)) kept.push_back(x);
  FinSet sub(kept);
  return FinFn::inclusion(std::move(sub), f.dom());
}

FinFn coequalizer(const FinFn& f, const FinFn& g) {
  if (f.dom() != g.dom() || f.cod() != g.cod())
    throw Error("coequalizer: not a parallel pair");
  const std::size_t n = f.cod().size();
  UnionFind uf(n);
  for (ElemId x : f.dom()) uf.unite(f.cod().index_of(f(x)), f.cod().index_of(g(x)));
  std::vector<ElemId> images(n);
  std::map<std::size_t, ElemId> rep_to_class;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t r = uf.find(i);
    auto [it, _] = rep_to_class.emplace(r, static_cast<ElemId>(rep_to_class.size()));
    images[i] = it->second;
  }
  FinSet q = FinSet::range(rep_to_class.size());
  return FinFn(f.cod(), std::move(q), std::move(images));
}

EpiMonoFactorization image_factorize(const FinFn& f) {
  std::vector<ElemId> image(f.images());
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  FinSet mid = FinSet::range(image.size());
  std::vector<ElemId> epi_images;
  epi_images.reserve(f.dom().size());
  for (ElemId y : f.images()) {
    auto it = std::lower_bound(image.begin(), image.end(), y);
    epi_images.push_back(static_cast<ElemId>(it - image.begin()));
  }
  return EpiMonoFactorization{FinFn(f.dom(), mid, std::move(epi_images)),
                              FinFn(mid, f.cod(), std::move(image))};
}

CoproductResult coproduct(const std::vector<FinSet>& sets) {
  std::size_t total = 0;
  for (const FinSet& s : sets) total += s.size();
  FinSet apex = FinSet::range(total);
  std::vector<FinFn> injections;
  injections.reserve(sets.size());
  std::size_t offset = 0;
  for (const FinSet& s : sets) {
    std::vector<ElemId> images(s.size());
    for (std::size_t i = 0; i < s.size(); ++i)
      images[i] = static_cast<ElemId>(offset + i);
    injections.emplace_back(s, apex, std::move(images));
    offset += s.size();
  }
  return CoproductResult{std::move(apex), std::move(injections)};
}

ProductResult product(const FinSet& a, const FinSet& b) {
  std::vector<ElemId> p1, p2;
  for (ElemId x : a)
    for (ElemId y : b) {
      p1.push_back(x);
      p2.push_back(y);
    }
  FinSet apex = FinSet::range(p1.size());
  return ProductResult{apex, FinFn(apex, a, std::move(p1)),
                       FinFn(apex, b, std::move(p2))};
}

std::size_t StarSet::index_of(const Word& w) const {
  for (std::size_t i = 0; i < words.size(); ++i)
    if (words[i] == w) return i;
  throw Error("StarSet: word not present");
}

StarSet star_set(const FinSet& base, std::size_t max_len) {
  StarSet out;
  std::vector<Word> current{Word{}};
  out.words.push_back(Word{});
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<Word> next;
    for (const Word& w : current)
      for (ElemId v : base) {
        Word ext = w;
        ext.push_back(v);
        next.push_back(ext);
      }
    for (const Word& w : next) out.words.push_back(w);
    current = std::move(next);
  }
  out.carrier = FinSet::range(out.words.size());
  return out;
}

FinFn star_fn(const FinFn& f, const StarSet& dom_star, const StarSet& cod_star) {
  std::vector<ElemId> images;
  images.reserve(dom_star.words.size());
  for (const Word& w : dom_star.words)
    images.push_back(static_cast<ElemId>(cod_star.index_of(f.map_word(w))));
  return FinFn(dom_star.carrier, cod_star.carrier, std::move(images));
}

}  // namespace aegg
