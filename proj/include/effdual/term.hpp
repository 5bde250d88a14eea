#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "effdual/semantics.hpp"
#include "effdual/value.hpp"

namespace effdual {

class Term;
using TermPtr = std::shared_ptr<const Term>;

// Typed abstract syntax for composites of the primitive operations.
// Terms are immutable; subtrees may be shared freely.
class Term {
public:
  enum class Kind {
    id,
    compose,  // after . before
    lookup,
    update,
    constructor,
    recovery,
    raise,
    prl,
    prr,
    inl,
    inr,
    pair,
    case_of,
    handle
  };

  struct HandlerClause {
    std::string index;
    TermPtr body;
  };

  static TermPtr id(ObjExpr obj);
  static TermPtr compose(TermPtr after, TermPtr before);
  static TermPtr lookup(std::string index);
  static TermPtr update(std::string index);
  static TermPtr constructor(std::string index);
  static TermPtr recovery(std::string index);
  static TermPtr raise(std::string index, ObjExpr target);
  static TermPtr prl(ObjExpr left, ObjExpr right);
  static TermPtr prr(ObjExpr left, ObjExpr right);
  static TermPtr inl(ObjExpr left, ObjExpr right);
  static TermPtr inr(ObjExpr left, ObjExpr right);
  static TermPtr pair(TermPtr f, TermPtr g);
  static TermPtr case_of(TermPtr f, TermPtr g);
  static TermPtr handle(TermPtr f, std::vector<HandlerClause> handlers);

  Kind kind() const noexcept { return kind_; }

  const std::string& index() const { return index_; }  // indexed primitives
  const ObjExpr& obj() const { return obj_a_; }        // id
  const ObjExpr& target() const { return obj_a_; }     // raise
  const ObjExpr& left_obj() const { return obj_a_; }   // prl/prr/inl/inr
  const ObjExpr& right_obj() const { return obj_b_; }

  const TermPtr& after() const { return t1_; }   // compose
  const TermPtr& before() const { return t2_; }  // compose
  const TermPtr& first() const { return t1_; }   // pair/case_of
  const TermPtr& second() const { return t2_; }  // pair/case_of
  const TermPtr& body() const { return t1_; }    // handle
  const std::vector<HandlerClause>& handlers() const { return handlers_; }

  // Structural equality; carrier spelling is ignored.
  bool equals(const Term& other) const;
  friend bool operator==(const Term& a, const Term& b) { return a.equals(b); }
  friend bool operator!=(const Term& a, const Term& b) { return !a.equals(b); }

private:
  Term() = default;

  Kind kind_ = Kind::id;
  std::string index_;
  ObjExpr obj_a_;
  ObjExpr obj_b_;
  TermPtr t1_;
  TermPtr t2_;
  std::vector<HandlerClause> handlers_;
};

struct TermType {
  ObjExpr domain;
  ObjExpr codomain;
};

// The unique typing of a term, per the arrow signatures of the primitive
// operations. Throws TypeError (with the offending subterm and both
// sides' types) or SignatureError (unknown index).
TermType type_of(const FamilySignature& sig, const Term& t);

// Structural-recursion evaluator. Primitive nodes delegate to the
// element-level operations; `input` must be a valid element of the
// term's domain.
Value eval(const FamilySignature& sig, const Term& t, const Value& input);

// The extensional function a term denotes.
ElemFunction tabulate(const FamilySignature& sig, const Term& t);

struct Counterexample {
  Value input;
  Value lhs;
  Value rhs;
};

struct EquivResult {
  bool equal = false;
  std::optional<Counterexample> counterexample;  // enumeration-least failure
  long long domain_size = 0;
};

// Decides extensional equality of two terms of the same type by
// enumerating the full domain. Throws TypeError when the types differ.
EquivResult equiv(const FamilySignature& sig, const Term& lhs, const Term& rhs);

// Concrete syntax:
//   term  := atom | term "." term           (right-assoc, "after . before")
//   atom  := id{obj} | lookup[ix] | update[ix] | constructor[ix]
//          | recovery[ix] | raise[ix]{obj} | prl{obj, obj} | prr{obj, obj}
//          | inl{obj, obj} | inr{obj, obj} | pair(term, term)
//          | case(term, term) | handle(term (, ix => term)*) | (term)
//   obj   := st | exc | val[ix] | par[ix] | prod{obj, obj} | sum{obj, obj}
TermPtr parse_term(std::string_view src);

// Canonical text; parse_term(print_term(t)) reproduces t structurally.
std::string print_term(const Term& t);

// A pair of terms asserted extensionally equal (equal declared types).
struct Law {
  std::string name;
  TermPtr lhs;
  TermPtr rhs;
};

EquivResult check_law(const FamilySignature& sig, const Law& law);

}  // namespace effdual
