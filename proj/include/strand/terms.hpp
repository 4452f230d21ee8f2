#pragma once
// Typed morphism terms over a monoidal signature, a small text DSL for them,
// and the slice decomposition used by the semantic interpreters.

#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace strand {

// An object word is a string with one character per object generator; the
// empty string is the monoidal unit.
using ObjectWord = std::string;

struct Signature {
  struct Gen {
    std::string name;
    ObjectWord src, tgt;
  };
  std::vector<std::string> objects;  // single-character names
  std::vector<Gen> gens;

  const Gen* find(const std::string& name) const {
    for (auto& g : gens)
      if (g.name == name) return &g;
    return nullptr;
  }
  bool single_object() const { return objects.size() == 1; }
  bool valid_word(const ObjectWord& w) const {
    for (char c : w) {
      bool ok = false;
      for (auto& o : objects) ok = ok || (o.size() == 1 && o[0] == c);
      if (!ok) return false;
    }
    return true;
  }
};

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
  enum class K { Id, Gen, Ten, Comp };
  K k;
  ObjectWord w;      // Id
  std::string name;  // Gen
  TermPtr a, b;      // Ten: left, right.  Comp: a first, then b (i.e. b . a)
};

inline TermPtr tid(ObjectWord w) {
  auto t = std::make_shared<Term>();
  t->k = Term::K::Id;
  t->w = std::move(w);
  return t;
}
inline TermPtr tgen(std::string name) {
  auto t = std::make_shared<Term>();
  t->k = Term::K::Gen;
  t->name = std::move(name);
  return t;
}
inline TermPtr tten(TermPtr a, TermPtr b) {
  auto t = std::make_shared<Term>();
  t->k = Term::K::Ten;
  t->a = std::move(a);
  t->b = std::move(b);
  return t;
}
// Diagrammatic order: tcomp(f, g) is "f then g", i.e. g . f.
inline TermPtr tcomp(TermPtr a, TermPtr b) {
  auto t = std::make_shared<Term>();
  t->k = Term::K::Comp;
  t->a = std::move(a);
  t->b = std::move(b);
  return t;
}

// Unit-eliding builders, used by generated terms to avoid id(0) clutter.
inline TermPtr oten(TermPtr a, TermPtr b) {
  if (a->k == Term::K::Id && a->w.empty()) return b;
  if (b->k == Term::K::Id && b->w.empty()) return a;
  return tten(std::move(a), std::move(b));
}
inline TermPtr ocomp(TermPtr a, TermPtr b) {
  if (a->k == Term::K::Id) return b;
  if (b->k == Term::K::Id) return a;
  return tcomp(std::move(a), std::move(b));
}

inline bool term_eq(const TermPtr& x, const TermPtr& y) {
  if (x->k != y->k) return false;
  switch (x->k) {
    case Term::K::Id: return x->w == y->w;
    case Term::K::Gen: return x->name == y->name;
    default: return term_eq(x->a, y->a) && term_eq(x->b, y->b);
  }
}

struct TypeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::pair<ObjectWord, ObjectWord> typecheck(const TermPtr& t,
                                                   const Signature& sig) {
  switch (t->k) {
    case Term::K::Id:
      if (!sig.valid_word(t->w)) throw TypeError("unknown object in id: " + t->w);
      return {t->w, t->w};
    case Term::K::Gen: {
      auto* g = sig.find(t->name);
      if (!g) throw TypeError("unknown generator: " + t->name);
      return {g->src, g->tgt};
    }
    case Term::K::Ten: {
      auto [s1, t1] = typecheck(t->a, sig);
      auto [s2, t2] = typecheck(t->b, sig);
      return {s1 + s2, t1 + t2};
    }
    case Term::K::Comp: {
      auto [s1, t1] = typecheck(t->a, sig);
      auto [s2, t2] = typecheck(t->b, sig);
      if (t1 != s2)
        throw TypeError("composition mismatch: '" + t1 + "' vs '" + s2 + "'");
      return {s1, t2};
    }
  }
  throw TypeError("corrupt term");
}

inline std::size_t term_size(const TermPtr& t) {
  switch (t->k) {
    case Term::K::Id: return 0;
    case Term::K::Gen: return 1;
    default: return term_size(t->a) + term_size(t->b);
  }
}

// One generator with identity whiskers: left ⊗ gen ⊗ right (widths in letters).
struct Slice {
  int left;
  std::string gen;
  int right;
  bool operator==(const Slice&) const = default;
};

namespace detail {
inline void slices_rec(const TermPtr& t, const Signature& sig, int l, int r,
                       std::vector<Slice>& out) {
  switch (t->k) {
    case Term::K::Id: return;
    case Term::K::Gen: out.push_back({l, t->name, r}); return;
    case Term::K::Ten: {
      auto [sa, ta] = typecheck(t->a, sig);
      auto [sb, tb] = typecheck(t->b, sig);
      // Run the left factor first (over the right factor's source), then
      // the right factor (under the left factor's target).
      slices_rec(t->a, sig, l, (int)sb.size() + r, out);
      slices_rec(t->b, sig, l + (int)ta.size(), r, out);
      return;
    }
    case Term::K::Comp:
      slices_rec(t->a, sig, l, r, out);
      slices_rec(t->b, sig, l, r, out);
      return;
  }
}
}  // namespace detail

inline std::vector<Slice> slices(const TermPtr& t, const Signature& sig) {
  std::vector<Slice> out;
  detail::slices_rec(t, sig, 0, 0, out);
  return out;
}

// ---- printing ----------------------------------------------------------

namespace detail {
// prec 0: composition level, 1: tensor level, 2: atom
inline void print_rec(const TermPtr& t, const Signature& sig, int prec,
                      std::ostream& os) {
  switch (t->k) {
    case Term::K::Id:
      if (t->w.empty())
        os << (sig.single_object() ? "id(0)" : "id(I)");
      else if (sig.single_object())
        os << "id(" << t->w.size() << ")";
      else
        os << "id(" << t->w << ")";
      return;
    case Term::K::Gen: os << t->name; return;
    case Term::K::Ten: {
      bool paren = prec > 1;
      if (paren) os << "(";
      print_rec(t->a, sig, 1, os);
      os << " * ";
      print_rec(t->b, sig, 2, os);  // right child re-parenthesized: left-assoc
      if (paren) os << ")";
      return;
    }
    case Term::K::Comp: {
      bool paren = prec > 0;
      if (paren) os << "(";
      print_rec(t->a, sig, 0, os);
      os << " ; ";
      print_rec(t->b, sig, 1, os);
      if (paren) os << ")";
      return;
    }
  }
}
}  // namespace detail

inline std::string print_term(const TermPtr& t, const Signature& sig) {
  std::ostringstream os;
  detail::print_rec(t, sig, 0, os);
  return os.str();
}

// ---- DSL parser --------------------------------------------------------
//
//   expr ::= ten (';' ten)*          composition, diagrammatic order
//   ten  ::= atom ('*' atom)*        tensor
//   atom ::= '(' expr ')' | 'id' '(' arg ')' | NAME
//   arg  ::= NUMBER | object word | 'I' | empty
//   '#' starts a line comment.

namespace detail {
struct Lexer {
  std::string s;
  std::size_t p = 0;
  void skip() {
    while (p < s.size()) {
      if (std::isspace((unsigned char)s[p])) {
        ++p;
      } else if (s[p] == '#') {
        while (p < s.size() && s[p] != '\n') ++p;
      } else {
        break;
      }
    }
  }
  bool eat(char c) {
    skip();
    if (p < s.size() && s[p] == c) {
      ++p;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c))
      throw ParseError("expected '" + std::string(1, c) + "' at position " +
                       std::to_string(p));
  }
  std::optional<std::string> name() {
    skip();
    if (p >= s.size() || !std::isalpha((unsigned char)s[p])) return std::nullopt;
    std::size_t q = p;
    while (q < s.size() && (std::isalnum((unsigned char)s[q]) || s[q] == '_'))
      ++q;
    std::string n = s.substr(p, q - p);
    p = q;
    return n;
  }
};

inline TermPtr parse_expr(Lexer& lx, const Signature& sig);

inline TermPtr parse_atom(Lexer& lx, const Signature& sig) {
  if (lx.eat('(')) {
    auto t = parse_expr(lx, sig);
    lx.expect(')');
    return t;
  }
  auto n = lx.name();
  if (!n) throw ParseError("expected a term at position " + std::to_string(lx.p));
  if (*n == "id") {
    lx.expect('(');
    lx.skip();
    std::string arg;
    while (lx.p < lx.s.size() && lx.s[lx.p] != ')')
      arg.push_back(lx.s[lx.p++]);
    lx.expect(')');
    while (!arg.empty() && std::isspace((unsigned char)arg.back())) arg.pop_back();
    if (arg.empty() || arg == "I" || arg == "0") return tid("");
    if (std::isdigit((unsigned char)arg[0])) {
      if (!sig.single_object())
        throw ParseError("numeric identity width needs a one-object signature");
      std::size_t k = std::stoul(arg);
      return tid(ObjectWord(k, sig.objects[0][0]));
    }
    if (!sig.valid_word(arg)) throw ParseError("unknown object word: " + arg);
    return tid(arg);
  }
  if (!sig.find(*n)) throw ParseError("unknown generator: " + *n);
  return tgen(*n);
}

inline TermPtr parse_ten(Lexer& lx, const Signature& sig) {
  auto t = parse_atom(lx, sig);
  while (lx.eat('*')) t = tten(t, parse_atom(lx, sig));
  return t;
}

inline TermPtr parse_expr(Lexer& lx, const Signature& sig) {
  auto t = parse_ten(lx, sig);
  while (lx.eat(';')) t = tcomp(t, parse_ten(lx, sig));
  return t;
}
}  // namespace detail

inline TermPtr parse_term(const std::string& text, const Signature& sig) {
  detail::Lexer lx{text};
  auto t = detail::parse_expr(lx, sig);
  lx.skip();
  if (lx.p != lx.s.size())
    throw ParseError("trailing input at position " + std::to_string(lx.p));
  return t;
}

}  // namespace strand
