#ifndef SATAKE_VERIFY_HPP
#define SATAKE_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "satake/hecke.hpp"
#include "satake/oracle.hpp"

namespace satake {

struct CriterionResult {
  int index = 0;
  std::string name;
  bool pass = false;
  std::string detail; // counts summary or first counterexample
};

struct AcceptanceOptions {
  std::optional<std::string> datum; // restrict criteria to one catalog datum
  std::optional<i64> q;             // restrict numeric checks to one q
  unsigned seed = 12345;
};

// the eight acceptance criteria, in order
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts = {});

// all antidominant sigma-fixed weights of L1-height <= height
std::vector<Weight> antidominant_fixed_weights(const BasedRootDatum& d, i64 height);
// all dominant weights of L1-height <= height
std::vector<Weight> dominant_weights_up_to(const BasedRootDatum& d, i64 height);

} // namespace satake

#endif
