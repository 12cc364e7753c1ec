#include <algorithm>

#include "doctest.h"
#include "retic/corpus.hpp"
#include "retic/io.hpp"
#include "retic/verify.hpp"

using namespace retic;

TEST_CASE("shipped corpus composition and validity") {
  Corpus c = shipped_corpus();
  CHECK(c.algebras.size() == 19);  // 11 rings, 2 matrix rings, 6 lattices
  CHECK(c.structures.size() == 2);
  int rings = 0, lattices = 0;
  for (const auto& a : c.algebras) {
    CHECK_NOTHROW(validate_algebra(a));
    if (a.has_tag("unital-ring")) {
      ++rings;
      CHECK_NOTHROW(ring_ops(a));
    }
    if (a.has_tag("bounded-lattice")) {
      ++lattices;
      CHECK_NOTHROW(check_bounded_lattice_tags(a));
    }
  }
  CHECK(rings == 13);
  CHECK(lattices == 6);
  for (const auto& s : c.structures) CHECK_NOTHROW(validate_structure(s));
}

TEST_CASE("algebra files round-trip bit-exactly") {
  Corpus c = shipped_corpus();
  for (const auto& a : c.algebras) {
    std::string text = serialize_algebra(a);
    FiniteAlgebra back = parse_algebra(text);
    CHECK(back.name == a.name);
    CHECK(back.n == a.n);
    CHECK(back.tags == a.tags);
    REQUIRE(back.ops.size() == a.ops.size());
    for (size_t i = 0; i < a.ops.size(); ++i) {
      CHECK(back.ops[i].name == a.ops[i].name);
      CHECK(back.ops[i].arity == a.ops[i].arity);
      CHECK(back.ops[i].table == a.ops[i].table);
    }
    CHECK(serialize_algebra(back) == text);
  }
}

TEST_CASE("structure files round-trip to identical serialized bytes") {
  Corpus c = shipped_corpus();
  for (const auto& s : c.structures) {
    std::string text = serialize_structure(s);
    CommutatorStructure back = parse_structure(text);
    CHECK(serialize_structure(back) == text);
  }
}

TEST_CASE("algebra parse failures") {
  auto kind_of = [](const std::string& text) {
    try {
      parse_algebra(text);
    } catch (const error& e) {
      return e.kind();
    }
    return errc::invalid_input;
  };
  CHECK(kind_of("{") == errc::parse);
  CHECK(kind_of("{\"kind\":\"algebra\"}") == errc::parse);
  CHECK(kind_of(R"({"kind":"algebra","name":"x","size":2,
    "ops":[{"name":"f","arity":1,"table":[0,2]}]})") == errc::range_violation);
  CHECK(kind_of(R"({"kind":"algebra","name":"x","size":2,
    "ops":[{"name":"f","arity":2,"table":[0,1]}]})") == errc::arity_mismatch);
}

TEST_CASE("partition serialization") {
  Partition p({0, 1, 0, 1});
  CHECK(partition_to_string(p) == "[[0,2],[1,3]]");
  CHECK(partition_to_string(Partition::identity(3)) == "[[0],[1],[2]]");
  CHECK(partition_to_string(Partition::all(2)) == "[[0,1]]");
}

TEST_CASE("fuzzer determinism and validity") {
  auto batch1 = random_lax_structures(30, 6, 7);
  auto batch2 = random_lax_structures(30, 6, 7);
  REQUIRE(batch1.size() == 30);
  for (size_t i = 0; i < batch1.size(); ++i) {
    CHECK_NOTHROW(validate_structure(batch1[i]));
    CHECK(batch1[i].size() <= 6);
    CHECK_FALSE(batch1[i].strict);
    CHECK(serialize_structure(batch1[i]) == serialize_structure(batch2[i]));
  }
  // a different seed gives a different stream
  auto batch3 = random_lax_structures(30, 6, 8);
  bool any_diff = false;
  for (size_t i = 0; i < batch3.size(); ++i)
    if (serialize_structure(batch1[i]).substr(0, 200) !=
        serialize_structure(batch3[i]).substr(0, 200))
      any_diff = true;
  CHECK(any_diff);
}

TEST_CASE("dot exports") {
  Analysis z12 = analyze(zn_ring(12));
  std::vector<std::string> labels;
  for (int c = 0; c < z12.l.size(); ++c) labels.push_back("q" + std::to_string(c));
  std::string dot = dot_lattice(labels, z12.l.leq, "z12-retic");
  // diamond: four nodes, four covering edges
  CHECK(std::count(dot.begin(), dot.end(), '>') == 4);
  CHECK(dot.find("q0") != std::string::npos);

  Analysis c3 = analyze(strict_chain3());
  std::vector<std::string> plabels;
  std::vector<std::vector<bool>> pleq(2, std::vector<bool>(2, false));
  for (size_t i = 0; i < c3.spec.primes.size(); ++i) {
    plabels.push_back(c3.s.labels[c3.spec.primes[i]]);
    for (size_t j = 0; j < c3.spec.primes.size(); ++j)
      pleq[i][j] = c3.s.le(c3.spec.primes[i], c3.spec.primes[j]);
  }
  std::string spec_dot = dot_specialization(plabels, pleq, "chain3-spec");
  CHECK(std::count(spec_dot.begin(), spec_dot.end(), '>') == 1);

  std::string single = dot_lattice({"only"}, {{true}}, "one");
  CHECK(std::count(single.begin(), single.end(), '>') == 0);
}

TEST_CASE("verify reports are deterministic and machine-readable") {
  std::vector<Instance> in1, in2;
  in1.push_back(make_instance(zn_ring(6)));
  in1.push_back(make_instance(lax_chain4()));
  in2.push_back(make_instance(zn_ring(6)));
  in2.push_back(make_instance(lax_chain4()));
  VerifyReport r1 = run_suite(in1, "core");
  VerifyReport r2 = run_suite(in2, "core");
  CHECK(r1.to_json() == r2.to_json());
  CHECK(r1.to_text() == r2.to_text());
  CHECK_FALSE(r1.violations());
}

TEST_CASE("shipped structures verify clean") {
  std::vector<Instance> good;
  good.push_back(make_instance(strict_chain3()));
  VerifyReport rep = run_suite(good, "all");
  CHECK_FALSE(rep.violations());
}

TEST_CASE("a lawless strict structure is flagged with a witness") {
  // all commutators collapse to bottom except [top,top]; this passes every
  // structural axiom yet breaks the covering law [a,top] = a ^ top
  CommutatorStructure s;
  s.name = "flat4";
  s.labels = {"bot", "a", "b", "top"};
  s.leq.assign(4, std::vector<bool>(4, false));
  for (int x = 0; x < 4; ++x)
    for (int y = x; y < 4; ++y) s.leq[x][y] = true;
  s.bottom = 0;
  s.top = 3;
  complete_lattice_tables(s);
  s.comm_tab.assign(4, std::vector<int>(4, 0));
  s.comm_tab[3][3] = 3;
  s.in_k.assign(4, true);
  s.in_p = s.in_k;
  s.strict = true;
  CHECK_NOTHROW(validate_structure(s));

  std::vector<Instance> bad;
  bad.push_back(make_instance(s));
  VerifyReport rep = run_suite(bad, "core");
  CHECK(rep.violations());
  bool witnessed = false;
  for (const auto& r : rep.results)
    if (r.verdict == Verdict::fail) {
      CHECK(r.detail != "");
      if (r.check == "comm.cover-meet") witnessed = true;
    }
  CHECK(witnessed);
}
