#pragma once

#include <string>
#include <vector>

#include "retic/corpus.hpp"
#include "retic/reticulation.hpp"

namespace retic {

enum class Verdict { pass, fail, observed, skipped };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::observed: return "observed";
    case Verdict::skipped: return "skipped";
  }
  return "?";
}

struct CheckResult {
  std::string instance;
  std::string check;
  Verdict verdict = Verdict::pass;
  std::string detail;  // witness on fail, reason on skip, outcome note otherwise
};

struct VerifyReport {
  std::vector<CheckResult> results;

  int count(Verdict v) const {
    int n = 0;
    for (const auto& r : results)
      if (r.verdict == v) ++n;
    return n;
  }
  bool violations() const { return count(Verdict::fail) > 0; }
  std::string to_text() const;
  std::string to_json() const;
};

/// One corpus member under verification. Checks assert on strict instances
/// and only record outcomes on lax ones.
struct Instance {
  std::string name;
  Analysis an;

  bool asserted() const { return an.s.strict; }
};

Instance make_instance(const FiniteAlgebra& a);
Instance make_instance(CommutatorStructure s);

/// Suites: core (commutator/radical/zariski laws), reticulation (the
/// quotient lattice and the spectrum correspondence), boolean, annihilator,
/// minprime, functor (morphism-level, corpus-wide), or all.
VerifyReport run_suite(std::vector<Instance>& instances, const std::string& suite);

/// Morphism-level suite over algebra-backed instances: identities, all
/// canonical projections and the shipped cross morphisms.
void run_functor_suite(std::vector<Instance>& instances, VerifyReport& rep);

}  // namespace retic
