#include "effdual/value.hpp"

#include <limits>

namespace effdual {

ObjExpr ObjExpr::carrier(std::string index, Spelling spelling) {
  ObjExpr o;
  o.kind_ = Kind::carrier;
  o.index_ = std::move(index);
  o.spelling_ = spelling;
  return o;
}

ObjExpr ObjExpr::st() {
  ObjExpr o;
  o.kind_ = Kind::st;
  return o;
}

ObjExpr ObjExpr::exc() {
  ObjExpr o;
  o.kind_ = Kind::exc;
  return o;
}

ObjExpr ObjExpr::prod(ObjExpr left, ObjExpr right) {
  ObjExpr o;
  o.kind_ = Kind::prod;
  o.parts_.push_back(std::move(left));
  o.parts_.push_back(std::move(right));
  return o;
}

ObjExpr ObjExpr::sum(ObjExpr left, ObjExpr right) {
  ObjExpr o;
  o.kind_ = Kind::sum;
  o.parts_.push_back(std::move(left));
  o.parts_.push_back(std::move(right));
  return o;
}

const std::string& ObjExpr::index() const {
  if (kind_ != Kind::carrier) throw Error("object has no carrier index");
  return index_;
}

Spelling ObjExpr::spelling() const {
  if (kind_ != Kind::carrier) throw Error("object has no carrier spelling");
  return spelling_;
}

const ObjExpr& ObjExpr::left() const {
  if (parts_.size() != 2) throw Error("object has no components");
  return parts_[0];
}

const ObjExpr& ObjExpr::right() const {
  if (parts_.size() != 2) throw Error("object has no components");
  return parts_[1];
}

bool ObjExpr::is_sum_with_exc() const {
  return kind_ == Kind::sum && parts_[1].kind() == Kind::exc;
}

bool operator==(const ObjExpr& a, const ObjExpr& b) {
  if (a.kind_ != b.kind_) return false;
  switch (a.kind_) {
    case ObjExpr::Kind::carrier:
      return a.index_ == b.index_;  // spelling is presentation only
    case ObjExpr::Kind::st:
    case ObjExpr::Kind::exc:
      return true;
    case ObjExpr::Kind::prod:
    case ObjExpr::Kind::sum:
      return a.parts_[0] == b.parts_[0] && a.parts_[1] == b.parts_[1];
  }
  return false;
}

std::string print_obj(const ObjExpr& obj) {
  switch (obj.kind()) {
    case ObjExpr::Kind::st:
      return "st";
    case ObjExpr::Kind::exc:
      return "exc";
    case ObjExpr::Kind::carrier:
      return (obj.spelling() == Spelling::val ? "val[" : "par[") + obj.index() + "]";
    case ObjExpr::Kind::prod:
      return "prod{" + print_obj(obj.left()) + ", " + print_obj(obj.right()) + "}";
    case ObjExpr::Kind::sum:
      return "sum{" + print_obj(obj.left()) + ", " + print_obj(obj.right()) + "}";
  }
  throw Error("unreachable object kind");
}

void validate_obj(const FamilySignature& sig, const ObjExpr& obj) {
  switch (obj.kind()) {
    case ObjExpr::Kind::carrier:
      sig.position(obj.index());  // throws when unknown
      return;
    case ObjExpr::Kind::st:
    case ObjExpr::Kind::exc:
      return;
    case ObjExpr::Kind::prod:
    case ObjExpr::Kind::sum:
      validate_obj(sig, obj.left());
      validate_obj(sig, obj.right());
      return;
  }
}

Value Value::of(Elem a) {
  Value v;
  v.kind_ = Kind::elem;
  v.elem_ = a;
  return v;
}

Value Value::of(State s) {
  Value v;
  v.kind_ = Kind::state;
  v.state_ = std::move(s);
  return v;
}

Value Value::of(ExcVal e) {
  Value v;
  v.kind_ = Kind::exc;
  v.exc_ = e;
  return v;
}

Value Value::pair(Value first, Value second) {
  Value v;
  v.kind_ = Kind::pair;
  v.parts_.push_back(std::move(first));
  v.parts_.push_back(std::move(second));
  return v;
}

Value Value::inl(Value inner) {
  Value v;
  v.kind_ = Kind::inl;
  v.parts_.push_back(std::move(inner));
  return v;
}

Value Value::inr(Value inner) {
  Value v;
  v.kind_ = Kind::inr;
  v.parts_.push_back(std::move(inner));
  return v;
}

Elem Value::elem() const {
  if (kind_ != Kind::elem) throw Error("expected a carrier element value");
  return elem_;
}

const State& Value::state() const {
  if (kind_ != Kind::state) throw Error("expected a state value");
  return state_;
}

const ExcVal& Value::exc() const {
  if (kind_ != Kind::exc) throw Error("expected an exception value");
  return exc_;
}

const Value& Value::first() const {
  if (kind_ != Kind::pair) throw Error("expected a pair value");
  return parts_[0];
}

const Value& Value::second() const {
  if (kind_ != Kind::pair) throw Error("expected a pair value");
  return parts_[1];
}

const Value& Value::inner() const {
  if (kind_ != Kind::inl && kind_ != Kind::inr) throw Error("expected a sum value");
  return parts_[0];
}

bool operator==(const Value& a, const Value& b) {
  if (a.kind_ != b.kind_) return false;
  switch (a.kind_) {
    case Value::Kind::elem:
      return a.elem_ == b.elem_;
    case Value::Kind::state:
      return a.state_ == b.state_;
    case Value::Kind::exc:
      return a.exc_ == b.exc_;
    case Value::Kind::pair:
      return a.parts_[0] == b.parts_[0] && a.parts_[1] == b.parts_[1];
    case Value::Kind::inl:
    case Value::Kind::inr:
      return a.parts_[0] == b.parts_[0];
  }
  return false;
}

Value normal(Value y) { return Value::inl(std::move(y)); }

Value exceptional(ExcVal e) { return Value::inr(Value::of(e)); }

bool is_exceptional(const Value& v) { return v.kind() == Value::Kind::inr; }

const ExcVal& exception_of(const Value& v) {
  if (!is_exceptional(v)) throw Error("value is not exceptional");
  return v.inner().exc();
}

const Value& normal_of(const Value& v) {
  if (v.kind() != Value::Kind::inl) throw Error("value is not normal");
  return v.inner();
}

long long obj_size(const FamilySignature& sig, const ObjExpr& obj) {
  switch (obj.kind()) {
    case ObjExpr::Kind::carrier:
      return sig.carrier_size(obj.index());
    case ObjExpr::Kind::st:
      return sig.state_count();
    case ObjExpr::Kind::exc:
      return sig.exception_count();
    case ObjExpr::Kind::prod: {
      const long long l = obj_size(sig, obj.left());
      const long long r = obj_size(sig, obj.right());
      if (l != 0 && r > std::numeric_limits<long long>::max() / l) {
        throw Error("object too large to enumerate: " + print_obj(obj));
      }
      return l * r;
    }
    case ObjExpr::Kind::sum:
      return obj_size(sig, obj.left()) + obj_size(sig, obj.right());
  }
  throw Error("unreachable object kind");
}

Value value_at(const FamilySignature& sig, const ObjExpr& obj, long long k) {
  switch (obj.kind()) {
    case ObjExpr::Kind::carrier: {
      Elem a{static_cast<int>(k)};
      sig.check_elem(obj.index(), a);
      return Value::of(a);
    }
    case ObjExpr::Kind::st:
      return Value::of(state_at(sig, k));
    case ObjExpr::Kind::exc:
      return Value::of(exception_at(sig, k));
    case ObjExpr::Kind::prod: {
      const long long rs = obj_size(sig, obj.right());
      return Value::pair(value_at(sig, obj.left(), k / rs),
                         value_at(sig, obj.right(), k % rs));
    }
    case ObjExpr::Kind::sum: {
      const long long ls = obj_size(sig, obj.left());
      if (k < ls) return Value::inl(value_at(sig, obj.left(), k));
      return Value::inr(value_at(sig, obj.right(), k - ls));
    }
  }
  throw Error("unreachable object kind");
}

long long ordinal_of(const FamilySignature& sig, const ObjExpr& obj, const Value& v) {
  const auto mismatch = [&]() -> Error {
    return TypeError("value does not belong to object " + print_obj(obj) + ": " +
                     print_value(sig, v));
  };
  switch (obj.kind()) {
    case ObjExpr::Kind::carrier: {
      if (v.kind() != Value::Kind::elem) throw mismatch();
      sig.check_elem(obj.index(), v.elem());
      return v.elem().ordinal;
    }
    case ObjExpr::Kind::st:
      if (v.kind() != Value::Kind::state) throw mismatch();
      return state_ordinal(sig, v.state());
    case ObjExpr::Kind::exc:
      if (v.kind() != Value::Kind::exc) throw mismatch();
      return exception_ordinal(sig, v.exc());
    case ObjExpr::Kind::prod: {
      if (v.kind() != Value::Kind::pair) throw mismatch();
      const long long rs = obj_size(sig, obj.right());
      return ordinal_of(sig, obj.left(), v.first()) * rs +
             ordinal_of(sig, obj.right(), v.second());
    }
    case ObjExpr::Kind::sum: {
      if (v.kind() == Value::Kind::inl) return ordinal_of(sig, obj.left(), v.inner());
      if (v.kind() == Value::Kind::inr) {
        return obj_size(sig, obj.left()) + ordinal_of(sig, obj.right(), v.inner());
      }
      throw mismatch();
    }
  }
  throw Error("unreachable object kind");
}

std::vector<Value> enumerate_values(const FamilySignature& sig, const ObjExpr& obj) {
  const long long count = obj_size(sig, obj);
  std::vector<Value> out;
  out.reserve(static_cast<std::size_t>(count));
  for (long long k = 0; k < count; ++k) out.push_back(value_at(sig, obj, k));
  return out;
}

std::string print_value(const FamilySignature& sig, const Value& v) {
  switch (v.kind()) {
    case Value::Kind::elem:
      return std::to_string(v.elem().ordinal);
    case Value::Kind::state: {
      std::string out = "{";
      for (std::size_t pos = 0; pos < v.state().size(); ++pos) {
        if (pos > 0) out += ",";
        out += sig.name_at(pos) + ":" + std::to_string(v.state().at(pos).ordinal);
      }
      return out + "}";
    }
    case Value::Kind::exc:
      return "(" + sig.name_at(v.exc().index) + "," +
             std::to_string(v.exc().payload.ordinal) + ")";
    case Value::Kind::pair:
      return "(" + print_value(sig, v.first()) + ", " + print_value(sig, v.second()) +
             ")";
    case Value::Kind::inl:
      return "normal(" + print_value(sig, v.inner()) + ")";
    case Value::Kind::inr:
      return "exceptional(" + print_value(sig, v.inner()) + ")";
  }
  throw Error("unreachable value kind");
}

}  // namespace effdual
