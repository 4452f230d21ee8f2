#pragma once
// Indexed letter words (the canonical-form carriers), the rewriting systems
// that normalize them, their termination measures, and a bounded local
// confluence checker.

#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace strand {

// Letter kinds:
//   'Z' end marker            'H' fresh codomain wire   'E' fresh domain wire
//   'W' domain-head -> codomain-i link
//   'A' domain-head -> domain-i link   (two-polarity systems only)
//   'B' codomain-head -> codomain-i link (two-polarity systems only)
// pol is 'O'/'P' on H/E letters of the two-polarity system, 0 elsewhere.
struct Lt {
  char k;
  char pol = 0;
  int i = -1;
  bool operator==(const Lt&) const = default;
  auto operator<=>(const Lt&) const = default;
};
using LWord = std::vector<Lt>;

inline Lt lZ() { return {'Z', 0, -1}; }
inline Lt lH(char pol = 0) { return {'H', pol, -1}; }
inline Lt lE(char pol = 0) { return {'E', pol, -1}; }
inline Lt lW(int i) { return {'W', 0, i}; }
inline Lt lA(int i) { return {'A', 0, i}; }
inline Lt lB(int i) { return {'B', 0, i}; }

inline std::string print_word(const LWord& w) {
  std::ostringstream os;
  bool first = true;
  for (auto& l : w) {
    if (!first) os << ' ';
    first = false;
    os << l.k;
    if (l.pol) os << l.pol;
    if (l.i >= 0) os << l.i;
  }
  return os.str();
}

inline LWord parse_word(const std::string& s) {
  LWord w;
  std::istringstream is(s);
  std::string tok;
  while (is >> tok) {
    Lt l;
    l.k = tok[0];
    std::size_t p = 1;
    if (p < tok.size() && (tok[p] == 'O' || tok[p] == 'P')) l.pol = tok[p++];
    if (p < tok.size()) l.i = std::stoi(tok.substr(p));
    if (std::string("ZHEWAB").find(l.k) == std::string::npos)
      throw std::runtime_error("bad letter: " + tok);
    w.push_back(l);
  }
  return w;
}

// Lexicographically ordered pair measure. Components grow like 2^length, so
// wide integers are used; test words stay far below the 128-bit ceiling.
struct Measure {
  __int128 a = 0, b = 0;
  bool operator==(const Measure&) const = default;
  bool operator<(const Measure& o) const { return a != o.a ? a < o.a : b < o.b; }
  bool operator>(const Measure& o) const { return o < *this; }
};

struct RewriteSystem {
  std::string name;      // "B", "R" or "G"
  bool two_polarity;     // G letters A/B and polarized E/H
  bool idempotent_w;     // W_i W_i => W_i
  // Letter weight for the termination measure.
  std::function<Measure(const Lt&)> weight;
  // Adjacent-pair rewriting; returns the replacement letters if a rule applies.
  std::function<std::optional<std::vector<Lt>>(const Lt&, const Lt&)> step;
};

inline RewriteSystem make_system_B_or_R(bool idem) {
  RewriteSystem s;
  s.name = idem ? "R" : "B";
  s.two_polarity = false;
  s.idempotent_w = idem;
  s.weight = [](const Lt& l) -> Measure {
    switch (l.k) {
      case 'E': return {1, 0};
      case 'W': return {1, l.i};
      default: return {0, 0};  // Z, H
    }
  };
  s.step = [idem](const Lt& x, const Lt& y) -> std::optional<std::vector<Lt>> {
    if (x.k == 'H' && y.k == 'W') return {{lW(y.i + 1), lH()}};
    if (x.k == 'H' && y.k == 'E') return {{lE(), lH()}};
    if (x.k == 'W' && y.k == 'W') {
      if (x.i < y.i) return {{y, x}};
      if (idem && x.i == y.i) return {{x}};
    }
    return std::nullopt;
  };
  return s;
}

inline RewriteSystem make_system_B() { return make_system_B_or_R(false); }
inline RewriteSystem make_system_R() { return make_system_B_or_R(true); }

inline RewriteSystem make_system_G() {
  RewriteSystem s;
  s.name = "G";
  s.two_polarity = true;
  s.idempotent_w = true;
  s.weight = [](const Lt& l) -> Measure {
    switch (l.k) {
      case 'B': return {1, l.i};
      case 'E': return {2, 0};
      case 'A': return {3, l.i};
      case 'W': return {4, l.i};
      default: return {0, 0};  // Z, H
    }
  };
  s.step = [](const Lt& x, const Lt& y) -> std::optional<std::vector<Lt>> {
    if (x.k == 'H' && y.k == 'W') return {{lW(y.i + 1), x}};
    if (x.k == 'H' && y.k == 'E') return {{y, x}};
    if (x.k == 'H' && y.k == 'A') return {{y, x}};
    if (x.k == 'W' && y.k == 'W') {
      if (x.i < y.i) return {{y, x}};
      if (x.i == y.i) return {{x}};
    }
    if (x.k == 'A' && y.k == 'W') return {{y, x}};
    if (x.k == 'A' && y.k == 'A') {
      if (x.i < y.i) return {{y, x}};
      if (x.i == y.i) return {{x}};
    }
    if (x.k == 'B' && y.k == 'E') return {{y, x}};
    if (x.k == 'B' && y.k == 'W') return {{y, x}};
    if (x.k == 'B' && y.k == 'B') {
      if (x.i < y.i) return {{y, x}};
      if (x.i == y.i) return {{x}};
    }
    if (x.k == 'B' && y.k == 'A') return {{y, x}};
    return std::nullopt;
  };
  return s;
}

inline Measure termination_measure(const RewriteSystem& sys, const LWord& w) {
  Measure m;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    Measure base = sys.weight(*it);
    m = {base.a + 2 * m.a, base.b + 2 * m.b};
  }
  return m;
}

// Leftmost redex first; after a rewrite the scan backs up one position so the
// pass stays effectively innermost-leftmost. Terminates by the measure.
inline LWord rewrite_to_normal(LWord w, const RewriteSystem& sys) {
  std::size_t i = 0;
  while (w.size() >= 2 && i + 1 < w.size()) {
    auto rep = sys.step(w[i], w[i + 1]);
    if (!rep) {
      ++i;
      continue;
    }
    w.erase(w.begin() + i, w.begin() + i + 2);
    w.insert(w.begin() + i, rep->begin(), rep->end());
    if (i > 0) --i;
  }
  return w;
}

inline std::vector<LWord> one_step_reducts(const LWord& w,
                                           const RewriteSystem& sys) {
  std::vector<LWord> out;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    auto rep = sys.step(w[i], w[i + 1]);
    if (!rep) continue;
    LWord v(w.begin(), w.begin() + i);
    v.insert(v.end(), rep->begin(), rep->end());
    v.insert(v.end(), w.begin() + i + 2, w.end());
    out.push_back(std::move(v));
  }
  return out;
}

// ---- typed word enumeration -------------------------------------------
//
// Words are built back to front starting from Z, tracking the (domain,
// codomain) typing. For the one-polarity systems the typing is a pair of
// widths; for the two-polarity system it is a pair of polarity words and the
// link letters additionally require the polarity discipline:
//   W_i : head of domain and i-th codomain move carry the same polarity
//   A_i : domain head is P, domain move i is O
//   B_i : codomain head is O, codomain move i is P
// (the opposite choices would orient a dependency against the play order).

struct WordType {
  std::string dom, cod;  // single-polarity systems use runs of 'x'
};

inline std::optional<WordType> word_type(const LWord& w,
                                         const RewriteSystem& sys) {
  if (w.empty() || w.back().k != 'Z') return std::nullopt;
  WordType t;
  for (std::size_t r = w.size() - 1; r-- > 0;) {
    const Lt& l = w[r];
    char hp = sys.two_polarity ? l.pol : 'x';
    switch (l.k) {
      case 'H':
        if (sys.two_polarity && !l.pol) return std::nullopt;
        t.cod.insert(t.cod.begin(), hp);
        break;
      case 'E':
        if (sys.two_polarity && !l.pol) return std::nullopt;
        t.dom.insert(t.dom.begin(), hp);
        break;
      case 'W':
        if (t.dom.empty() || l.i < 0 || l.i >= (int)t.cod.size())
          return std::nullopt;
        if (t.dom[0] != t.cod[l.i]) return std::nullopt;
        break;
      case 'A':
        if (!sys.two_polarity) return std::nullopt;
        if (l.i < 1 || l.i >= (int)t.dom.size()) return std::nullopt;
        if (t.dom[0] != 'P' || t.dom[l.i] != 'O') return std::nullopt;
        break;
      case 'B':
        if (!sys.two_polarity) return std::nullopt;
        if (l.i < 1 || l.i >= (int)t.cod.size()) return std::nullopt;
        if (t.cod[0] != 'O' || t.cod[l.i] != 'P') return std::nullopt;
        break;
      case 'Z': return std::nullopt;  // interior Z
      default: return std::nullopt;
    }
  }
  return t;
}

// Enumerate every well-typed word with at most max_letters letters before the
// final Z, invoking the callback on each.
inline void enumerate_words(const RewriteSystem& sys, int max_letters,
                            const std::function<void(const LWord&)>& fn) {
  LWord w{lZ()};
  std::string dom, cod;
  std::function<void(int)> go = [&](int budget) {
    fn(w);
    if (budget == 0) return;
    auto prepend = [&](const Lt& l) {
      w.insert(w.begin(), l);
      std::string sd = dom, sc = cod;
      switch (l.k) {
        case 'H': cod.insert(cod.begin(), sys.two_polarity ? l.pol : 'x'); break;
        case 'E': dom.insert(dom.begin(), sys.two_polarity ? l.pol : 'x'); break;
        default: break;
      }
      go(budget - 1);
      dom = sd;
      cod = sc;
      w.erase(w.begin());
    };
    if (sys.two_polarity) {
      for (char p : {'O', 'P'}) {
        prepend(lH(p));
        prepend(lE(p));
      }
    } else {
      prepend(lH());
      prepend(lE());
    }
    if (!dom.empty())
      for (int i = 0; i < (int)cod.size(); ++i)
        if (dom[0] == cod[i]) prepend(lW(i));
    if (sys.two_polarity) {
      if (!dom.empty() && dom[0] == 'P')
        for (int i = 1; i < (int)dom.size(); ++i)
          if (dom[i] == 'O') prepend(lA(i));
      if (!cod.empty() && cod[0] == 'O')
        for (int i = 1; i < (int)cod.size(); ++i)
          if (cod[i] == 'P') prepend(lB(i));
    }
  };
  go(max_letters);
}

struct Peak {
  LWord word;
  LWord left_nf, right_nf;
};

// Exhaustive bounded local-confluence check: for every well-typed word up to
// the bound with at least two one-step reducts, normalize every reduct and
// report any disagreement.
inline std::vector<Peak> check_local_confluence(const RewriteSystem& sys,
                                                int max_letters) {
  std::vector<Peak> bad;
  enumerate_words(sys, max_letters, [&](const LWord& w) {
    auto reds = one_step_reducts(w, sys);
    if (reds.size() < 2) return;
    LWord nf0 = rewrite_to_normal(reds[0], sys);
    for (std::size_t i = 1; i < reds.size(); ++i) {
      LWord nfi = rewrite_to_normal(reds[i], sys);
      if (nfi != nf0) {
        bad.push_back({w, nf0, nfi});
        return;
      }
    }
  });
  return bad;
}

}  // namespace strand
