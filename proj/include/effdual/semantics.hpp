#pragma once

#include <functional>
#include <string_view>

#include "effdual/value.hpp"

namespace effdual {

// l_i : St -> Val_i. Projection reading one component of a state.
Elem lookup(const FamilySignature& sig, std::string_view index, const State& s);

// u_i : Val_i x St -> St. Replaces one component, fixing all others.
// The input state is never mutated.
State update(const FamilySignature& sig, std::string_view index, Elem a, const State& s);

// t_i : Par_i -> Exc. Tags a parameter as an exception; injective, and
// images for distinct indices are disjoint.
ExcVal construct(const FamilySignature& sig, std::string_view index, Elem a);

// c_i : Exc -> Par_i + Exc. Untags exceptions of index i, propagates all
// others unchanged.
Value recover(const FamilySignature& sig, std::string_view index, const ExcVal& e);

// raise_i,Y : Par_i -> Y + Exc. Constructor followed by the inclusion of
// Exc; always lands in the exceptional summand.
Value raise(const FamilySignature& sig, std::string_view index, const ObjExpr& target,
            Elem a);

// Extensional function between two finite objects: a total output table
// indexed by the domain's canonical enumeration. The constructor checks
// totality and that every output belongs to the codomain.
class ElemFunction {
public:
  ElemFunction(FamilySignature sig, ObjExpr domain, ObjExpr codomain,
               std::vector<Value> table);

  static ElemFunction tabulate(const FamilySignature& sig, ObjExpr domain,
                               ObjExpr codomain,
                               const std::function<Value(const Value&)>& body);

  const FamilySignature& sig() const noexcept { return sig_; }
  const ObjExpr& domain() const noexcept { return domain_; }
  const ObjExpr& codomain() const noexcept { return codomain_; }
  const std::vector<Value>& table() const noexcept { return table_; }

  Value apply(const Value& x) const;

  // Extensional equality: same domain and codomain shape, same table.
  friend bool operator==(const ElemFunction& a, const ElemFunction& b);

private:
  FamilySignature sig_;
  ObjExpr domain_;
  ObjExpr codomain_;
  std::vector<Value> table_;
};

// One catch clause: which exception index it is for and the function
// Par_index -> Y + Exc it applies to the recovered parameter.
struct Handler {
  std::string index;
  ElemFunction fn;
};

// Clause order is the loop order; indices may repeat (first match wins).
using HandlerList = std::vector<Handler>;

// The unique extension of f : X -> Y+Exc to X+Exc -> Y+Exc that
// propagates exceptions (is the identity on Exc).
ElemFunction extend(const ElemFunction& f);

// The handling construct, built from the recovery operations:
//
//   on input x in X+Exc:
//     pre-existing exceptions are propagated untouched;
//     otherwise y := f(x); a non-exceptional y is returned at once;
//     an exceptional y is run through the recovery operations c_{i_k} in
//     clause order, and the first clause whose recovery succeeds applies
//     its handler to the recovered parameter (handlers may themselves
//     raise; their result is returned as-is);
//     if no clause matches, the exception is returned unchanged.
ElemFunction handle(const ElemFunction& f, const HandlerList& handlers);

// Outcome of an exhaustive check; the counterexample is the first failure
// in enumeration order, empty when the property holds.
struct PropReport {
  bool pass = true;
  long long cases = 0;
  std::string counterexample;
};

using UpdateFn =
    std::function<State(const FamilySignature&, std::string_view, Elem, const State&)>;
using RecoverFn =
    std::function<Value(const FamilySignature&, std::string_view, const ExcVal&)>;

// For reading location i only the previous update of i matters:
// lookup(i, update(j, b, update(i, a, s))) = a for all a, b, s. The
// update operation can be substituted to demonstrate failure detection.
PropReport prop_prev_update(const FamilySignature& sig, std::string_view i,
                            std::string_view j, const UpdateFn& update_fn = {});

// For an exception built by t_i only the next recovery with index i
// matters: recover(j, t_i(a)) propagates the exception unchanged and
// recover(i, t_i(a)) returns a, for all a.
PropReport prop_next_recovery(const FamilySignature& sig, std::string_view i,
                              std::string_view j, const RecoverFn& recover_fn = {});

// Every function domain -> codomain, in table-lexicographic order.
// Throws when the function space is too large to enumerate.
std::vector<ElemFunction> all_functions(const FamilySignature& sig,
                                        const ObjExpr& domain, const ObjExpr& codomain);

}  // namespace effdual
