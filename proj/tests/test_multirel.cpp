#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "strand/multirel.hpp"
#include "strand/theories.hpp"

using namespace strand;

static const std::string kRunning =
    "((delta * eps) ; (id(1) * delta) ; (mu * eta * id(1))) * id(1)";

TEST_CASE("matrix algebra basics") {
  MultiRel mu = generator_rel("mu"), delta = generator_rel("delta");
  CHECK(tensor(mu, delta) == MultiRel{3, 3, {1, 0, 0, 1, 0, 0, 0, 1, 1}});
  CHECK(compose(mu, delta) == MultiRel{2, 2, {1, 1, 1, 1}});
  CHECK(cardinality(compose(mu, delta)) == 4);
  CHECK(compose(id_rel(2), mu) == mu);
  CHECK_THROWS_AS(compose(mu, mu), TypeError);
}

TEST_CASE("denotation of the running example") {
  EquationalTheory th = builtin_theory("B");
  TermPtr t = parse_term(kRunning, th.sig);
  MultiRel r = interp_B(t);
  CHECK(r == MultiRel{3, 4, {2, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1}});
}

TEST_CASE("canonical words of simple terms") {
  EquationalTheory th = builtin_theory("B");
  auto canon = [&](const std::string& s) {
    return print_word(canonicalize_B(parse_term(s, th.sig)));
  };
  CHECK(canon("id(1)") == "W0 E H Z");
  CHECK(canon("eps") == "E Z");
  CHECK(canon("id(0)") == "Z");
  CHECK(canon("eta") == "H Z");
  CHECK(canon("mu") == "W0 E W0 E H Z");
  CHECK(canon("delta") == "W1 W0 E H H Z");
  CHECK(canon("gamma") == "W1 E W0 E H H Z");
  CHECK(canon("eta ; eps") == "Z");
  CHECK(canon("delta ; mu") == "W0 W0 E H Z");
}

TEST_CASE("canonicalization agrees with extraction on the running example") {
  EquationalTheory th = builtin_theory("B");
  TermPtr t = parse_term(kRunning, th.sig);
  LWord w = canonicalize_B(t);
  CHECK(print_word(w) == "W2 W0 W0 E E W3 E H H H H Z");
  CHECK(w == matrix_to_canon(interp_B(t)));
  CHECK(word_to_matrix(w) == interp_B(t));
}

TEST_CASE("qualitative canonical form collapses multiplicities") {
  EquationalTheory th = builtin_theory("B");
  TermPtr t = parse_term("delta ; mu", th.sig);
  CHECK(print_word(canonicalize_R(t)) == "W0 E H Z");
  CHECK(print_word(canonicalize_B(t)) == "W0 W0 E H Z");
}

// Random slice stacks: the syntactic canonicalization must match the route
// through the matrix semantics.
TEST_CASE("canonicalization matches the semantic route on random terms") {
  EquationalTheory th = builtin_theory("B");
  std::mt19937 rng(20240817);
  for (int iter = 0; iter < 300; ++iter) {
    int width = (int)(rng() % 4);
    TermPtr t = tid(ObjectWord(width, 'x'));
    int steps = (int)(rng() % 6);
    for (int s = 0; s < steps; ++s) {
      auto [src, tgt] = typecheck(t, th.sig);
      int n = (int)tgt.size();
      std::vector<const Signature::Gen*> fits;
      for (auto& g : th.sig.gens)
        if ((int)g.src.size() <= n) fits.push_back(&g);
      const auto* g = fits[rng() % fits.size()];
      int left = (int)(rng() % (n - (int)g->src.size() + 1));
      int right = n - left - (int)g->src.size();
      t = ocomp(t, oten(tid(ObjectWord(left, 'x')),
                        oten(tgen(g->name), tid(ObjectWord(right, 'x')))));
    }
    LWord w = canonicalize_B(t);
    CHECK(w == matrix_to_canon(interp_B(t)));
    CHECK(word_to_matrix(w) == interp_B(t));
    CHECK(rewrite_to_normal(w, make_system_B()) == w);
  }
}

TEST_CASE("extraction is canonical, injective and invertible on small matrices") {
  std::set<std::string> seen;
  RewriteSystem sysB = make_system_B();
  int count = 0;
  for (int m = 0; m <= 2; ++m)
    for (int n = 0; n <= 2; ++n) {
      std::vector<long long> e((std::size_t)m * n, 0);
      for (bool more = true; more;) {
        MultiRel r{m, n, e};
        LWord w = matrix_to_canon(r);
        CHECK(rewrite_to_normal(w, sysB) == w);
        CHECK(word_to_matrix(w) == r);
        CHECK(seen.insert(print_word(w)).second);
        ++count;
        more = false;
        for (std::size_t i = 0; i < e.size(); ++i) {
          if (e[i] < 1) {
            ++e[i];
            more = true;
            break;
          }
          e[i] = 0;
        }
      }
    }
  CHECK(count == 31);  // sum of 2^(m*n) over all shapes with m,n <= 2
}

TEST_CASE("expanding a canonical word back into a term") {
  EquationalTheory th = builtin_theory("B");
  for (const std::string& s :
       {"Z", "H Z", "E Z", "W0 E H Z", "W1 W0 E H H Z", "W2 W0 W0 E E W3 E H H H H Z"}) {
    LWord w = parse_word(s);
    TermPtr t = canon_to_term_B(w);
    typecheck(t, th.sig);
    CHECK(canonicalize_B(t) == w);
    CHECK(word_to_matrix(w) == interp_B(t));
  }
}
