#pragma once

#include <functional>

#include "effdual/term.hpp"

namespace effdual {

// st <-> exc, prod <-> sum (componentwise), carriers fixed (their
// spelling flips so duals print in the other reading). Involution.
ObjExpr dualize_obj(const ObjExpr& obj);

// The syntactic dualizer: lookup <-> constructor, update <-> recovery,
// prl/prr <-> inl/inr, pair <-> case, composition reverses, identities
// dualize their object. An involution on this fragment that swaps domain
// and codomain. Raise and Handle are outside the fragment and are
// rejected with a DualityError naming the constructor.
TermPtr dualize(const Term& t);

// The defining equations of lookup/update, one law per index plus one
// per ordered pair of distinct indices:
//   state-lu-same-<i>:     lookup[i] . update[i]  =  prl{val[i], st}
//   state-lu-other-<i>-<j>: lookup[j] . update[i] =  lookup[j] . prr{val[i], st}
std::vector<Law> state_laws(const FamilySignature& sig);

// The defining equations of constructor/recovery, same combinatorics:
//   exc-ct-same-<i>:       recovery[i] . constructor[i]  =  inl{par[i], exc}
//   exc-ct-other-<i>-<j>:  recovery[i] . constructor[j]  =  inr{par[i], exc} . constructor[j]
std::vector<Law> exception_laws(const FamilySignature& sig);

using TermDualizer = std::function<TermPtr(const Term&)>;

struct DualPair {
  std::string state_law;
  TermPtr dual_lhs;
  TermPtr dual_rhs;
  std::string exception_law;
  bool structural_match = false;
};

struct DualReport {
  std::vector<DualPair> pairs;
  bool laws_hold = false;      // every law in both families passes equiv
  std::string first_failure;   // name of the first failing pair or law
  bool all_match = false;      // every pair matches structurally and laws_hold
};

// Dualizes each state law and tests syntactic identity against the
// corresponding exception law; also checks both families semantically.
DualReport check_duality(const FamilySignature& sig);
DualReport check_duality(const FamilySignature& sig, const TermDualizer& dualizer);

}  // namespace effdual
