#pragma once

#include <string>
#include <vector>

#include "effdual/signature.hpp"

namespace effdual {

// How a carrier object is rendered: "val[i]" (product reading) or
// "par[i]" (sum reading). Presentation only; never part of equality.
enum class Spelling { val, par };

// Object expression: denotes a finite set under a signature. Structural
// equality ignores carrier spelling.
class ObjExpr {
public:
  enum class Kind { carrier, st, exc, prod, sum };

  ObjExpr() = default;  // st

  static ObjExpr carrier(std::string index, Spelling spelling = Spelling::val);
  static ObjExpr st();
  static ObjExpr exc();
  static ObjExpr prod(ObjExpr left, ObjExpr right);
  static ObjExpr sum(ObjExpr left, ObjExpr right);

  Kind kind() const noexcept { return kind_; }
  const std::string& index() const;  // carrier only
  Spelling spelling() const;         // carrier only
  const ObjExpr& left() const;       // prod/sum
  const ObjExpr& right() const;      // prod/sum

  // Shape test for "sum{Y, exc}" codomains.
  bool is_sum_with_exc() const;

  friend bool operator==(const ObjExpr& a, const ObjExpr& b);
  friend bool operator!=(const ObjExpr& a, const ObjExpr& b) { return !(a == b); }

private:
  Kind kind_ = Kind::st;
  std::string index_;
  Spelling spelling_ = Spelling::val;
  std::vector<ObjExpr> parts_;  // prod/sum: exactly {left, right}
};

std::string print_obj(const ObjExpr& obj);

// Checks that every carrier index mentioned in `obj` exists in `sig`.
void validate_obj(const FamilySignature& sig, const ObjExpr& obj);

// Element of the set denoted by an ObjExpr: a carrier element, a state,
// an exception, a pair, or a left/right injection into a sum.
class Value {
public:
  enum class Kind { elem, state, exc, pair, inl, inr };

  static Value of(Elem a);
  static Value of(State s);
  static Value of(ExcVal e);
  static Value pair(Value first, Value second);
  static Value inl(Value inner);
  static Value inr(Value inner);

  Kind kind() const noexcept { return kind_; }
  Elem elem() const;          // kind elem
  const State& state() const; // kind state
  const ExcVal& exc() const;  // kind exc
  const Value& first() const; // kind pair
  const Value& second() const;
  const Value& inner() const; // kind inl/inr

  friend bool operator==(const Value& a, const Value& b);
  friend bool operator!=(const Value& a, const Value& b) { return !(a == b); }

private:
  Value() = default;
  Kind kind_ = Kind::elem;
  Elem elem_{};
  State state_{};
  ExcVal exc_{};
  std::vector<Value> parts_;
};

// The two sides of a computation over "Y + Exc".
Value normal(Value y);
Value exceptional(ExcVal e);
bool is_exceptional(const Value& v);
const ExcVal& exception_of(const Value& v);
const Value& normal_of(const Value& v);

// Canonical enumeration of the set denoted by `obj`: carriers by ordinal,
// states lexicographic, exceptions grouped by index, products left-major,
// sums left summand first.
long long obj_size(const FamilySignature& sig, const ObjExpr& obj);
Value value_at(const FamilySignature& sig, const ObjExpr& obj, long long k);

// Position of `v` in the enumeration of `obj`; throws TypeError when the
// value does not belong to the object.
long long ordinal_of(const FamilySignature& sig, const ObjExpr& obj, const Value& v);

std::vector<Value> enumerate_values(const FamilySignature& sig, const ObjExpr& obj);

// Ordinal-form rendering: "1", "{i:0,j:2}", "(j,2)", "(a, b)",
// "normal(...)", "exceptional(...)".
std::string print_value(const FamilySignature& sig, const Value& v);

}  // namespace effdual
