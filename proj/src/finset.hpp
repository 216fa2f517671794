#ifndef AEGG_FINSET_HPP
#define AEGG_FINSET_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace aegg {

class Error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

using ElemId = std::uint32_t;

// A word over some carrier set. Letters are validated where the carrier is
// known (hypergraph construction, star application).
using Word = std::vector<ElemId>;

inline std::size_t length(const Word& w) { return w.size(); }

// Finite set of ids. Iteration order is always the sorted id order, so every
// construction downstream is deterministic.
class FinSet {
public:
  FinSet() = default;
  explicit FinSet(std::vector<ElemId> ids);
  static FinSet range(std::size_t n);

  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  bool contains(ElemId x) const;
  // Position of x in the sorted order; throws if absent.
  std::size_t index_of(ElemId x) const;
  ElemId at(std::size_t i) const { return elems_.at(i); }
  const std::vector<ElemId>& elems() const { return elems_; }

  auto begin() const { return elems_.begin(); }
  auto end() const { return elems_.end(); }

  bool operator==(const FinSet&) const = default;

private:
  std::vector<ElemId> elems_;
};

// Total function between finite sets. Images are stored aligned with the
// sorted domain order.
class FinFn {
public:
  FinFn() = default;
  FinFn(FinSet dom, FinSet cod, std::vector<ElemId> images);

  static FinFn identity(FinSet s);
  static FinFn constant(FinSet dom, FinSet cod, ElemId value);
  static FinFn from_pairs(FinSet dom, FinSet cod,
                          const std::vector<std::pair<ElemId, ElemId>>& pairs);
  // Inclusion of a subset into a superset.
  static FinFn inclusion(FinSet sub, FinSet super);

  ElemId operator()(ElemId x) const;
  const FinSet& dom() const { return dom_; }
  const FinSet& cod() const { return cod_; }
  const std::vector<ElemId>& images() const { return images_; }

  bool is_injective() const;
  bool is_surjective() const;
  // Pointwise application to a word; this is the action of the Kleene-star
  // functor on a single word.
  Word map_word(const Word& w) const;

  bool operator==(const FinFn&) const = default;

private:
  FinSet dom_, cod_;
  std::vector<ElemId> images_;
};

FinFn compose(const FinFn& g, const FinFn& f);

// Span: legs share the apex as domain.
struct SpanResult {
  FinSet apex;
  FinFn left;   // apex -> X
  FinFn right;  // apex -> Y
};

// Cospan: legs share the apex as codomain.
struct CospanResult {
  FinSet apex;
  FinFn left;   // X -> apex
  FinFn right;  // Y -> apex
};

// Pullback of f : A -> C and g : B -> C. Apex elements are the pairs
// (a, b) with f(a) = g(b), renumbered 0..n-1 in lexicographic (a, b) order.
SpanResult pullback(const FinFn& f, const FinFn& g);

// Pullback of f along itself; pairs in lexicographic order.
SpanResult kernel_pair(const FinFn& f);

// Pushout of f : C -> A and g : C -> B, computed as the quotient of the
// disjoint union A + B by the smallest equivalence with f(c) ~ g(c).
// Classes are renumbered 0..n-1 ordered by their minimal member in the
// disjoint union (A first, then B).
CospanResult pushout(const FinFn& f, const FinFn& g);

// Equalizer of a parallel pair, returned as the inclusion {x | f(x)=g(x)}.
FinFn equalizer(const FinFn& f, const FinFn& g);

// Coequalizer of a parallel pair, returned as the canonical surjection of
// cod onto the quotient by the smallest equivalence with f(x) ~ g(x).
FinFn coequalizer(const FinFn& f, const FinFn& g);

struct EpiMonoFactorization {
  FinFn epi;   // dom ->> image, image renumbered 0..k-1
  FinFn mono;  // image >-> cod
};

EpiMonoFactorization image_factorize(const FinFn& f);

struct CoproductResult {
  FinSet apex;
  std::vector<FinFn> injections;
};

CoproductResult coproduct(const std::vector<FinSet>& sets);

struct ProductResult {
  FinSet apex;
  FinFn proj1, proj2;
};

// Pairs in lexicographic order, renumbered 0..|A||B|-1.
ProductResult product(const FinSet& a, const FinSet& b);

// The Kleene star on a bounded word length, materialized as a finite set.
// Words are ordered by length, then lexicographically; ids are the positions
// in that order.
struct StarSet {
  FinSet carrier;
  std::vector<Word> words;

  std::size_t index_of(const Word& w) const;
};

StarSet star_set(const FinSet& base, std::size_t max_len);

// The action of star on f, restricted to words of length <= max_len.
FinFn star_fn(const FinFn& f, const StarSet& dom_star, const StarSet& cod_star);

}  // namespace aegg

#endif
