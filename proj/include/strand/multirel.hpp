#pragma once
// Natural-number matrices between finite ordinals, their boolean quotient,
// the interpretation of one-object bialgebra terms, and the two directions of
// the canonical-form correspondence: syntactic canonicalization by slice
// peeling and semantic extraction from a matrix.

#include <numeric>
#include <stdexcept>
#include <vector>

#include "terms.hpp"
#include "words.hpp"

namespace strand {

struct MultiRel {
  int m = 0, n = 0;               // rows = domain, cols = codomain
  std::vector<long long> e;       // row-major, size m*n
  long long& at(int i, int j) { return e[(std::size_t)i * n + j]; }
  long long at(int i, int j) const { return e[(std::size_t)i * n + j]; }
  bool operator==(const MultiRel&) const = default;
};

inline MultiRel make_rel(int m, int n) {
  return {m, n, std::vector<long long>((std::size_t)m * n, 0)};
}
inline MultiRel id_rel(int n) {
  MultiRel r = make_rel(n, n);
  for (int i = 0; i < n; ++i) r.at(i, i) = 1;
  return r;
}
inline long long cardinality(const MultiRel& r) {
  return std::accumulate(r.e.begin(), r.e.end(), 0LL);
}

inline MultiRel compose(const MultiRel& r1, const MultiRel& r2) {
  if (r1.n != r2.m) throw TypeError("matrix composition dimension mismatch");
  MultiRel r = make_rel(r1.m, r2.n);
  for (int a = 0; a < r1.m; ++a)
    for (int b = 0; b < r1.n; ++b) {
      if (r1.at(a, b) == 0) continue;
      for (int c = 0; c < r2.n; ++c) r.at(a, c) += r1.at(a, b) * r2.at(b, c);
    }
  return r;
}

inline MultiRel tensor(const MultiRel& r1, const MultiRel& r2) {
  MultiRel r = make_rel(r1.m + r2.m, r1.n + r2.n);
  for (int i = 0; i < r1.m; ++i)
    for (int j = 0; j < r1.n; ++j) r.at(i, j) = r1.at(i, j);
  for (int i = 0; i < r2.m; ++i)
    for (int j = 0; j < r2.n; ++j) r.at(r1.m + i, r1.n + j) = r2.at(i, j);
  return r;
}

struct BoolRel {
  int m = 0, n = 0;
  std::vector<bool> e;
  bool operator==(const BoolRel&) const = default;
};

inline BoolRel quotient_to_rel(const MultiRel& r) {
  BoolRel b{r.m, r.n, std::vector<bool>(r.e.size())};
  for (std::size_t i = 0; i < r.e.size(); ++i) b.e[i] = r.e[i] != 0;
  return b;
}

// ---- the one-object bialgebra signature and its interpretation ---------

inline Signature bialgebra_signature() {
  return {{"x"},
          {{"mu", "xx", "x"},
           {"eta", "", "x"},
           {"delta", "x", "xx"},
           {"eps", "x", ""},
           {"gamma", "xx", "xx"}}};
}

inline MultiRel generator_rel(const std::string& name) {
  if (name == "mu") return {2, 1, {1, 1}};
  if (name == "eta") return make_rel(0, 1);
  if (name == "delta") return {1, 2, {1, 1}};
  if (name == "eps") return make_rel(1, 0);
  if (name == "gamma") return {2, 2, {0, 1, 1, 0}};
  throw TypeError("no matrix for generator: " + name);
}

inline MultiRel interp_B(const TermPtr& t) {
  switch (t->k) {
    case Term::K::Id: return id_rel((int)t->w.size());
    case Term::K::Gen: return generator_rel(t->name);
    case Term::K::Ten: return tensor(interp_B(t->a), interp_B(t->b));
    case Term::K::Comp: return compose(interp_B(t->a), interp_B(t->b));
  }
  throw TypeError("corrupt term");
}

// ---- letter semantics and extraction -----------------------------------

inline MultiRel word_to_matrix(const LWord& w) {
  MultiRel r = make_rel(0, 0);
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    switch (it->k) {
      case 'Z': break;
      case 'H': {  // fresh codomain wire in front
        MultiRel r2 = make_rel(r.m, r.n + 1);
        for (int i = 0; i < r.m; ++i)
          for (int j = 0; j < r.n; ++j) r2.at(i, j + 1) = r.at(i, j);
        r = std::move(r2);
        break;
      }
      case 'E': {  // fresh domain wire in front
        MultiRel r2 = make_rel(r.m + 1, r.n);
        for (int i = 0; i < r.m; ++i)
          for (int j = 0; j < r.n; ++j) r2.at(i + 1, j) = r.at(i, j);
        r = std::move(r2);
        break;
      }
      case 'W':
        if (r.m < 1 || it->i < 0 || it->i >= r.n)
          throw TypeError("ill-typed word: " + print_word(w));
        r.at(0, it->i) += 1;
        break;
      default: throw TypeError("letter not valid here: " + print_word(w));
    }
  }
  return r;
}

// Enumerates the coefficients row by row, highest column first, emitting one
// domain letter per row and the codomain letters at the end.
inline LWord matrix_to_canon(const MultiRel& r) {
  LWord w;
  for (int i = 0; i < r.m; ++i) {
    for (int j = r.n - 1; j >= 0; --j)
      for (long long k = 0; k < r.at(i, j); ++k) w.push_back(lW(j));
    w.push_back(lE());
  }
  for (int j = 0; j < r.n; ++j) w.push_back(lH());
  w.push_back(lZ());
  return w;
}

// ---- syntactic canonicalization ----------------------------------------
//
// push(m1, g, w) rewrites (m1 ⊗ g ⊗ _) . [w] to an equivalent word, by the
// case analysis on the head letter. The generator acts on codomain wires
// m1 .. m1+arity-1 of the word's interpretation.

namespace detail {
inline LWord push_slice(int m1, char g, LWord w);

inline LWord cons(Lt l, LWord w) {
  w.insert(w.begin(), l);
  return w;
}

inline LWord push_slice(int m1, char g, LWord w) {
  if (w.empty()) throw TypeError("empty word");
  Lt h = w.front();
  LWord rest(w.begin() + 1, w.end());
  switch (h.k) {
    case 'Z':
      if (g != 'h') throw TypeError("slice does not fit the unit word");
      return {lH(), lZ()};
    case 'H':
      if (m1 > 0) return cons(lH(), push_slice(m1 - 1, g, rest));
      switch (g) {
        case 'm': return rest;                         // unit law absorbs
        case 'h': return cons(lH(), w);                // fresh wire in front
        case 'd': return cons(lH(), cons(lH(), rest)); // copy of the unit
        case 'x': return rest;                         // unit deleted
        case 'g': return push_slice(1, 'h', rest);     // unit hops over
      }
      break;
    case 'E': return cons(lE(), push_slice(m1, g, rest));
    case 'W': {
      int i = h.i;
      switch (g) {
        case 'm':
          if (i < m1) return cons(lW(i), push_slice(m1, g, rest));
          if (i > m1 + 1) return cons(lW(i - 1), push_slice(m1, g, rest));
          return cons(lW(m1), push_slice(m1, g, rest));
        case 'h':
          return cons(lW(i >= m1 ? i + 1 : i), push_slice(m1, g, rest));
        case 'd':
          if (i < m1) return cons(lW(i), push_slice(m1, g, rest));
          if (i > m1) return cons(lW(i + 1), push_slice(m1, g, rest));
          return cons(lW(m1), cons(lW(m1 + 1), push_slice(m1, g, rest)));
        case 'x':
          if (i < m1) return cons(lW(i), push_slice(m1, g, rest));
          if (i > m1) return cons(lW(i - 1), push_slice(m1, g, rest));
          return push_slice(m1, g, rest);  // the linked wire is deleted
        case 'g':
          if (i == m1) return cons(lW(m1 + 1), push_slice(m1, g, rest));
          if (i == m1 + 1) return cons(lW(m1), push_slice(m1, g, rest));
          return cons(lW(i), push_slice(m1, g, rest));
      }
      break;
    }
  }
  throw TypeError("unhandled slice case");
}

inline char gen_code(const std::string& name) {
  if (name == "mu") return 'm';
  if (name == "eta") return 'h';
  if (name == "delta") return 'd';
  if (name == "eps") return 'x';
  if (name == "gamma") return 'g';
  throw TypeError("unknown bialgebra generator: " + name);
}
}  // namespace detail

inline LWord canonicalize_B(const TermPtr& t) {
  Signature sig = bialgebra_signature();
  auto [src, tgt] = typecheck(t, sig);
  // identity word on the source width: the i-th domain wire links to column i
  LWord w;
  for (std::size_t i = 0; i < src.size(); ++i) {
    w.push_back(lW((int)i));
    w.push_back(lE());
  }
  for (std::size_t i = 0; i < src.size(); ++i) w.push_back(lH());
  w.push_back(lZ());
  for (const Slice& s : slices(t, sig)) w = detail::push_slice(s.left, detail::gen_code(s.gen), w);
  return rewrite_to_normal(w, make_system_B());
}

inline LWord canonicalize_R(const TermPtr& t) {
  return rewrite_to_normal(canonicalize_B(t), make_system_R());
}

// ---- expansion of a word back into a term ------------------------------

namespace detail {
// stairs(i): the wire at position 0 walks right to position i (i+1 wires).
inline TermPtr stairs(int i) {
  if (i == 0) return tid("x");
  return ocomp(oten(stairs(i - 1), tid("x")),
               oten(tid(ObjectWord(i - 1, 'x')), tgen("gamma")));
}
}  // namespace detail

inline TermPtr canon_to_term_B(const LWord& w) {
  auto ty = word_type(w, make_system_B());
  if (!ty) throw TypeError("ill-typed word: " + print_word(w));
  if (w.front().k == 'Z') return tid("");
  LWord rest(w.begin() + 1, w.end());
  TermPtr inner = canon_to_term_B(rest);
  auto rty = *word_type(rest, make_system_B());
  int m = (int)rty.dom.size(), n = (int)rty.cod.size();
  switch (w.front().k) {
    case 'H': return oten(tgen("eta"), inner);
    case 'E': return oten(tgen("eps"), inner);
    case 'W': {
      int i = w.front().i;
      TermPtr t = oten(tgen("delta"), tid(ObjectWord(m - 1, 'x')));
      t = ocomp(t, oten(tid("x"), inner));
      t = ocomp(t, oten(detail::stairs(i), tid(ObjectWord(n - i, 'x'))));
      t = ocomp(t, oten(tid(ObjectWord(i, 'x')),
                        oten(tgen("mu"), tid(ObjectWord(n - 1 - i, 'x')))));
      return t;
    }
  }
  throw TypeError("unhandled letter");
}

}  // namespace strand
