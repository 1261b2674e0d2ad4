#pragma once

/* Named verification suites with machine-readable reports.  Every assertion
   carries the module-qualified invariant it checks plus an instance label, so
   a report doubles as evidence of which structural claims were exercised. */

#include <memory>
#include <string>
#include <vector>

#include "krlab/crystal.hpp"

namespace krlab {

struct Assertion {
  std::string invariant; /* module-qualified name, e.g. "weyl/coset-word" */
  std::string detail;    /* instance label, extended with a reason on failure */
  bool pass = false;
};

struct VerificationReport {
  std::string suite;
  std::vector<Assertion> assertions;
  double wall_seconds = 0;

  std::size_t passed() const;
  std::size_t failed() const;
  bool ok() const { return failed() == 0; }
  std::string str() const;  /* one line per assertion plus a summary line */
  std::string json() const;
};

/* one rectangle of one affine family */
struct KrInstance {
  AffineType type{AffineFamily::a_untwisted, 1};
  int r = 1, s = 1;
  std::string str() const; /* "A2~1 B[1,2]" */
};

/* ordered pair of rectangles of one family */
struct KrPair {
  AffineType type{AffineFamily::a_untwisted, 1};
  int r1 = 1, s1 = 1, r2 = 1, s2 = 1;
  std::string str() const;
};

/* the grids the verification suites quantify over by default */
std::vector<KrInstance> default_instances(); /* untwisted A n<=3 s<=3, twisted n<=3 s<=2 */
std::vector<KrPair> default_pairs();         /* untwisted A n<=2 s<=2, twisted n=2 s=1 */

/* executable crystal model with its generated graph; families without an
   implemented model raise an unsupported error naming the available scope */
struct CrystalModel {
  std::unique_ptr<Crystal> crystal;
  CrystalGraph graph;
  KrInstance instance;
};
CrystalModel build_model(const KrInstance& inst, std::size_t cap = default_node_cap());

VerificationReport verify_wtilde(int max_rank);
VerificationReport verify_sigma(int max_rank);
VerificationReport verify_demazure_suite(const std::vector<KrInstance>& instances);
VerificationReport verify_characters_suite(const std::vector<KrInstance>& instances);
VerificationReport verify_paths_suite(const std::vector<KrInstance>& instances);
VerificationReport verify_rmatrix_suite(const std::vector<KrPair>& pairs);
VerificationReport verify_axioms_suite(const std::vector<KrInstance>& instances);

/* dispatch by suite name with command-line style arguments:
     wtilde | sigma        [--max-rank N]
     demazure | characters | paths | axioms   [TYPE R S]
     rmatrix               [TYPE R1,S1 R2,S2]
   omitted arguments select the default grids; unknown suites raise
   unsupported, malformed arguments raise invalid_argument */
VerificationReport run_suite(const std::string& suite, const std::vector<std::string>& args);

} /* namespace krlab */
