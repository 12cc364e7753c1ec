#include "doctest.h"
#include "retic/corpus.hpp"
#include "retic/io.hpp"
#include "retic/reticulation.hpp"
#include "retic/structure.hpp"

using namespace retic;

namespace {

CommutatorStructure chain4_with(const std::vector<bool>& k, bool strict) {
  CommutatorStructure s;
  s.name = "test-chain4";
  s.labels = {"bot", "a", "b", "top"};
  s.leq.assign(4, std::vector<bool>(4, false));
  for (int x = 0; x < 4; ++x)
    for (int y = x; y < 4; ++y) s.leq[x][y] = true;
  s.bottom = 0;
  s.top = 3;
  complete_lattice_tables(s);
  s.comm_tab = s.meet_tab;
  s.comm_tab[2][2] = 1;  // [b,b] = a
  s.in_k = k;
  s.in_p = k;
  s.strict = strict;
  return s;
}

}  // namespace

TEST_CASE("the perturbed 4-chain validates in lax mode only") {
  std::vector<bool> k{true, false, true, true};
  CHECK_NOTHROW(validate_structure(chain4_with(k, false)));
  try {
    validate_structure(chain4_with(k, true));
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.kind() == errc::join_density);
    CHECK(std::string(e.what()).find("a") != std::string::npos);
  }
}

TEST_CASE("a two-element structure must have full top commutator") {
  CommutatorStructure s;
  s.name = "bad2";
  s.labels = {"bot", "top"};
  s.leq = {{true, true}, {false, true}};
  s.bottom = 0;
  s.top = 1;
  complete_lattice_tables(s);
  s.comm_tab = {{0, 0}, {0, 0}};  // [top,top] = bot
  s.in_k = {true, true};
  s.in_p = s.in_k;
  s.strict = true;
  try {
    validate_structure(s);
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.kind() == errc::commutator_axiom);
  }
}

TEST_CASE("axiom violations are caught with witnesses") {
  std::vector<bool> k{true, true, true, true};
  // commutator exceeding the meet
  CommutatorStructure s = chain4_with(k, true);
  s.comm_tab[1][1] = 2;
  CHECK_THROWS_AS(validate_structure(s), error);

  // asymmetric table
  CommutatorStructure t = chain4_with(k, true);
  t.comm_tab[1][2] = 0;  // but [2][1] stays at meet = 1
  CHECK_THROWS_AS(validate_structure(t), error);

  // K = {bot,a,top} is join-closed in a chain, but b breaks join-density
  CommutatorStructure u = chain4_with({true, true, true, true}, true);
  u.in_k = {true, true, false, true};
  u.in_p = u.in_k;
  try {
    validate_structure(u);
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.kind() == errc::join_density);
  }
}

TEST_CASE("structures of finite algebras are strict with full compact set") {
  FiniteAlgebra z4 = zn_ring(4);
  CongruenceLattice lat = con_lattice(z4);
  CommutatorStructure s = structure_of(z4, lat, commutator_table(z4, lat));
  CHECK(s.size() == 3);
  CHECK(s.strict);
  for (int x = 0; x < s.size(); ++x) CHECK(s.in_k[x]);
  CHECK(s.in_p[s.bottom]);
  CHECK_NOTHROW(validate_structure(s));
}

TEST_CASE("one-element algebra gives the degenerate structure") {
  FiniteAlgebra one;
  one.name = "trivial";
  one.n = 1;
  validate_algebra(one);
  CongruenceLattice lat = con_lattice(one);
  CommutatorStructure s = structure_of(one, lat, commutator_table(one, lat));
  CHECK(s.size() == 1);
  CHECK(s.bottom == s.top);
}

TEST_CASE("one-element algebra flows through the whole pipeline") {
  FiniteAlgebra one;
  one.name = "trivial";
  one.n = 1;
  Analysis an = analyze(one);
  CHECK(an.spec.primes.empty());
  CHECK(an.spec.semiprime);  // empty meet collapses onto the single element
  CHECK(an.retic_ok);
  CHECK(an.l.size() == 1);
  CHECK(an.ideals.primes.empty());
  CHECK(check_fixedpoint(an).ideals_fixed);
  CHECK(is_quasi_commutative(an).quasi_commutative);
  SpectralAlgebraReport r = is_spectral_algebra(an);
  CHECK(r.spectral);
  CHECK(r.verdicts_agree);
}

TEST_CASE("shipped abstract structures") {
  CommutatorStructure c3 = strict_chain3();
  CHECK(c3.strict);
  CHECK(c3.size() == 3);
  CommutatorStructure c4 = lax_chain4();
  CHECK_FALSE(c4.strict);
  CHECK(c4.comm(2, 2) == 1);
  CHECK_FALSE(c4.in_k[1]);
}

TEST_CASE("structure file round trip") {
  for (const CommutatorStructure& orig : {strict_chain3(), lax_chain4()}) {
    CommutatorStructure back = parse_structure(serialize_structure(orig));
    CHECK(back.labels == orig.labels);
    CHECK(back.leq == orig.leq);
    CHECK(back.comm_tab == orig.comm_tab);
    CHECK(back.in_k == orig.in_k);
    CHECK(back.in_p == orig.in_p);
    CHECK(back.strict == orig.strict);
  }
}

TEST_CASE("serialized algebra structures analyze identically") {
  // spectrum and reticulation answers must not depend on whether the
  // structure came straight from the algebra or through a .cms file
  for (const FiniteAlgebra& alg : {zn_ring(4), zn_ring(12), t2_z2()}) {
    Analysis direct = analyze(alg);
    CommutatorStructure reloaded = parse_structure(serialize_structure(direct.s));
    Analysis via_file = analyze(std::move(reloaded));
    CHECK(via_file.spec.primes == direct.spec.primes);
    CHECK(via_file.spec.maximals == direct.spec.maximals);
    CHECK(via_file.spec.minimals == direct.spec.minimals);
    CHECK(via_file.spec.radical == direct.spec.radical);
    CHECK(via_file.spec.semiprime == direct.spec.semiprime);
    CHECK(via_file.l.size() == direct.l.size());
    CHECK(via_file.l.lam == direct.l.lam);
    CHECK(via_file.ideals.primes.size() == direct.ideals.primes.size());
    CHECK(check_fixedpoint(via_file).ideals_fixed ==
          check_fixedpoint(direct).ideals_fixed);
  }
}

TEST_CASE("file parsing reorders elements topologically with name ties") {
  std::string text = R"({
    "kind": "commutator-structure",
    "name": "vee",
    "elements": ["top", "left", "right", "zero"],
    "leq": [["zero","left"], ["zero","right"], ["left","top"], ["right","top"]],
    "commutator": {},
    "compact": ["zero", "left", "right", "top"],
    "mode": "strict"
  })";
  CommutatorStructure s = parse_structure(text);
  CHECK(s.labels == std::vector<std::string>{"zero", "left", "right", "top"});
  CHECK(s.bottom == 0);
  CHECK(s.top == 3);
}

TEST_CASE("parse failures carry the right kinds") {
  auto kind_of = [](const std::string& text) {
    try {
      parse_structure(text);
    } catch (const error& e) {
      return e.kind();
    }
    return errc::invalid_input;
  };
  CHECK(kind_of("{\"kind\": \"nope\"}") == errc::parse);
  CHECK(kind_of(R"({"kind":"commutator-structure","name":"x","elements":["a","b","c"],
    "leq":[["a","b"],["a","c"]], "compact":["a","b","c"], "mode":"strict"})") ==
        errc::lattice_law);  // two tops: no lub for {b,c}
  CHECK(kind_of(R"({"kind":"commutator-structure","name":"x","elements":["a","b"],
    "leq":[["a","b"]], "commutator":{"b,b":"a","a,a":"b"},
    "compact":["a","b"], "mode":"strict"})") != errc::invalid_input);
}

TEST_CASE("iterated structure commutator stabilizes") {
  CommutatorStructure c4 = lax_chain4();
  CHECK(iterated_comm(c4, 2, 1) == 1);              // [b,b] = a
  CHECK(iterated_comm(c4, 2, 2) == 1);              // [a,a] = a, stable
  CHECK(iterated_comm(c4, 3, 5) == 3);              // top stays top
}
