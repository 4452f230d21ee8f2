// Checks a sequent proof and prints the strategy it denotes.
#include <iostream>

#include "strand/logic.hpp"

int main() {
  using namespace strand;

  ProofFile pf = parse_proof_file(
      "(proof (forall x x) (forall y (exists z z))"
      " (forall-r y (forall-l y (exists-r y ax))))");
  std::cout << "proof checks: " << (check_proof(pf) ? "yes" : "no") << "\n";

  CyclicStrategy s = interp_proof(pf);
  std::cout << "lhs game polarities: " << s.A.pol << "\n";
  std::cout << "rhs game polarities: " << s.B.pol << "\n";
  for (auto& [u, v] : s.pairs)
    std::cout << "  " << (v.side ? "cod" : "dom") << v.idx << " waits for "
              << (u.side ? "cod" : "dom") << u.idx << "\n";
  return 0;
}
