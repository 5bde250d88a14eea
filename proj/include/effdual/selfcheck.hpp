#pragma once

#include "effdual/semantics.hpp"

// Built-in exhaustive checks of the handling construct and of the
// propagating extension, run by the `laws` subcommand and by the
// acceptance suite.
namespace effdual::selfcheck {

struct CheckResult {
  std::string name;
  bool pass = false;
  long long cases = 0;
  std::string detail;  // summary when passing, first counterexample otherwise
};

// Fixed deterministic pools over a signature. Base functions map a
// carrier into sum{Y, exc} (Y = the last index's carrier): one raise per
// index, one constant-normal per element of Y, and one mixed function.
// Handlers cover every index and include handlers that themselves raise.
std::vector<ElemFunction> base_pool(const FamilySignature& sig);
std::vector<Handler> handler_pool(const FamilySignature& sig);

// Direct case analysis of the handling construct, written without
// recover/extend/handle: the independent reference the implementation is
// compared against.
Value handle_oracle(const FamilySignature& sig, const ElemFunction& f,
                    const HandlerList& handlers, const Value& x);

// handle vs the oracle, pointwise, for every pool function, every
// handler list of length <= 2 over the pool, and every input of X+Exc.
CheckResult handle_oracle_suite(const FamilySignature& sig);

// extend(f) restricted to Exc is the identity embedding, for every pool
// function.
CheckResult extend_identity_suite(const FamilySignature& sig);

// Uniqueness of the propagating extension, brute-forced over all
// candidate functions X+Exc -> Y+Exc at |X| = |Y| = 1 and |Exc| in {1,2}:
// exactly one candidate both extends f and propagates exceptions.
CheckResult extend_uniqueness_suite();

}  // namespace effdual::selfcheck
