// Walks one term through every view the library offers: type, slices,
// multirelation, canonical word, and the strategy it denotes.
#include <iostream>

#include "strand/multirel.hpp"
#include "strand/terms.hpp"
#include "strand/theories.hpp"
#include "strand/words_g.hpp"

int main() {
  using namespace strand;

  const Signature& sb = builtin_theory("B").sig;
  auto t = parse_term(
      "((delta * eps) ; (id(1) * delta) ; (mu * eta * id(1))) * id(1)", sb);
  auto [m, n] = typecheck(t, sb);
  std::cout << "term : " << print_term(t, sb) << "\n";
  std::cout << "type : " << m << " -> " << n << "\n";

  MultiRel r = interp_B(t);
  std::cout << "rel  :";
  for (std::size_t i = 0; i < r.m; ++i)
    for (std::size_t j = 0; j < r.n; ++j)
      if (r.at(i, j)) std::cout << " " << i << "->" << j << "x" << r.at(i, j);
  std::cout << "\n";

  std::cout << "word : " << print_word(canonicalize_B(t)) << "\n";

  // the same pipeline for the polarized theory, via a crossing
  const Signature& sg = builtin_theory("G").sig;
  LWord g = rewrite_to_normal(parse_word("W1 EP W0 EO HO HP Z"), make_system_G());
  CyclicStrategy s = canon_to_strategy(g);
  std::cout << "\ncrossing word   : " << print_word(g) << "\n";
  std::cout << "as a strategy   : " << s.pairs.size() << " dependency pairs\n";
  std::cout << "back to a term  : " << print_term(term_of_strategy(s), sg)
            << "\n";
  return 0;
}
