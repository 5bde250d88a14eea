#include "effdual/semantics.hpp"

namespace effdual {

Elem lookup(const FamilySignature& sig, std::string_view index, const State& s) {
  const std::size_t pos = sig.position(index);
  if (s.size() != sig.arity()) {
    throw SignatureError("state does not match signature arity");
  }
  return s.at(pos);
}

State update(const FamilySignature& sig, std::string_view index, Elem a, const State& s) {
  const std::size_t pos = sig.position(index);
  sig.check_elem_at(pos, a);
  if (s.size() != sig.arity()) {
    throw SignatureError("state does not match signature arity");
  }
  return s.with(pos, a);
}

ExcVal construct(const FamilySignature& sig, std::string_view index, Elem a) {
  const std::size_t pos = sig.position(index);
  sig.check_elem_at(pos, a);
  return ExcVal{pos, a};
}

Value recover(const FamilySignature& sig, std::string_view index, const ExcVal& e) {
  const std::size_t pos = sig.position(index);
  if (e.index >= sig.arity()) {
    throw SignatureError("exception index position out of range");
  }
  sig.check_elem_at(e.index, e.payload);
  if (e.index == pos) return Value::inl(Value::of(e.payload));
  return Value::inr(Value::of(e));
}

Value raise(const FamilySignature& sig, std::string_view index, const ObjExpr& target,
            Elem a) {
  validate_obj(sig, target);
  return Value::inr(Value::of(construct(sig, index, a)));
}

ElemFunction::ElemFunction(FamilySignature sig, ObjExpr domain, ObjExpr codomain,
                           std::vector<Value> table)
    : sig_(std::move(sig)),
      domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      table_(std::move(table)) {
  validate_obj(sig_, domain_);
  validate_obj(sig_, codomain_);
  const long long n = obj_size(sig_, domain_);
  if (static_cast<long long>(table_.size()) != n) {
    throw TypeError("function table has " + std::to_string(table_.size()) +
                    " entries, domain " + print_obj(domain_) + " has " +
                    std::to_string(n) + " elements");
  }
  for (const auto& out : table_) {
    ordinal_of(sig_, codomain_, out);  // throws when out of codomain
  }
}

ElemFunction ElemFunction::tabulate(const FamilySignature& sig, ObjExpr domain,
                                    ObjExpr codomain,
                                    const std::function<Value(const Value&)>& body) {
  std::vector<Value> table;
  const long long n = obj_size(sig, domain);
  table.reserve(static_cast<std::size_t>(n));
  for (long long k = 0; k < n; ++k) {
    table.push_back(body(value_at(sig, domain, k)));
  }
  return ElemFunction(sig, std::move(domain), std::move(codomain), std::move(table));
}

Value ElemFunction::apply(const Value& x) const {
  return table_.at(static_cast<std::size_t>(ordinal_of(sig_, domain_, x)));
}

bool operator==(const ElemFunction& a, const ElemFunction& b) {
  return a.domain_ == b.domain_ && a.codomain_ == b.codomain_ && a.table_ == b.table_;
}

namespace {

void require_sum_with_exc(const ObjExpr& codomain, const char* what) {
  if (!codomain.is_sum_with_exc()) {
    throw TypeError(std::string(what) + " must have codomain of shape sum{Y, exc}, got " +
                    print_obj(codomain));
  }
}

}  // namespace

ElemFunction extend(const ElemFunction& f) {
  require_sum_with_exc(f.codomain(), "extend: function");
  const FamilySignature& sig = f.sig();
  const ObjExpr domain = ObjExpr::sum(f.domain(), ObjExpr::exc());
  return ElemFunction::tabulate(sig, domain, f.codomain(), [&](const Value& x) {
    if (x.kind() == Value::Kind::inr) return x;  // identity on Exc
    return f.apply(x.inner());
  });
}

ElemFunction handle(const ElemFunction& f, const HandlerList& handlers) {
  require_sum_with_exc(f.codomain(), "handle: body");
  const FamilySignature& sig = f.sig();
  for (const auto& h : handlers) {
    const ObjExpr expected = ObjExpr::carrier(h.index);
    validate_obj(sig, expected);
    if (h.fn.domain() != expected) {
      throw TypeError("handler for '" + h.index + "' has domain " +
                      print_obj(h.fn.domain()) + ", expected " + print_obj(expected));
    }
    if (h.fn.codomain() != f.codomain()) {
      throw TypeError("handler for '" + h.index + "' has codomain " +
                      print_obj(h.fn.codomain()) + ", expected " +
                      print_obj(f.codomain()));
    }
  }

  const ObjExpr domain = ObjExpr::sum(f.domain(), ObjExpr::exc());
  return ElemFunction::tabulate(sig, domain, f.codomain(), [&](const Value& x) {
    // An exception that existed before the try block is just propagated.
    if (x.kind() == Value::Kind::inr) return x;
    Value y = f.apply(x.inner());
    if (y.kind() == Value::Kind::inl) return y;
    // y is an exception: run the recovery operations in clause order.
    ExcVal e = y.inner().exc();
    for (const auto& h : handlers) {
      const Value r = recover(sig, h.index, e);
      if (r.kind() == Value::Kind::inl) return h.fn.apply(r.inner());
      e = r.inner().exc();  // propagated unchanged, try the next clause
    }
    // No clause matched: the exception leaves the construct unchanged.
    return Value::inr(Value::of(e));
  });
}

PropReport prop_prev_update(const FamilySignature& sig, std::string_view i,
                            std::string_view j, const UpdateFn& update_fn) {
  if (i == j) throw SignatureError("indices must be distinct");
  sig.position(i);
  sig.position(j);
  UpdateFn u = update_fn;
  if (!u) {
    u = [](const FamilySignature& g, std::string_view ix, Elem a, const State& s) {
      return update(g, ix, a, s);
    };
  }

  PropReport report;
  const int ni = sig.carrier_size(i);
  const int nj = sig.carrier_size(j);
  const auto states = enumerate_states(sig);
  for (int a = 0; a < ni; ++a) {
    for (int b = 0; b < nj; ++b) {
      for (const State& s : states) {
        ++report.cases;
        const State after = u(sig, j, Elem{b}, u(sig, i, Elem{a}, s));
        const Elem got = lookup(sig, i, after);
        if (got != Elem{a}) {
          report.pass = false;
          report.counterexample =
              "a=" + std::to_string(a) + " b=" + std::to_string(b) +
              " s=" + print_value(sig, Value::of(s)) + ": lookup(" + std::string(i) +
              ") = " + std::to_string(got.ordinal) + ", expected " + std::to_string(a);
          return report;
        }
      }
    }
  }
  return report;
}

PropReport prop_next_recovery(const FamilySignature& sig, std::string_view i,
                              std::string_view j, const RecoverFn& recover_fn) {
  if (i == j) throw SignatureError("indices must be distinct");
  sig.position(i);
  sig.position(j);
  RecoverFn c = recover_fn;
  if (!c) {
    c = [](const FamilySignature& g, std::string_view ix, const ExcVal& e) {
      return recover(g, ix, e);
    };
  }

  PropReport report;
  const int ni = sig.carrier_size(i);
  for (int a = 0; a < ni; ++a) {
    ++report.cases;
    const ExcVal e = construct(sig, i, Elem{a});
    const Value via_other = c(sig, j, e);
    if (via_other != Value::inr(Value::of(e))) {
      report.pass = false;
      report.counterexample = "a=" + std::to_string(a) + ": recover(" + std::string(j) +
                              ", " + print_value(sig, Value::of(e)) + ") = " +
                              print_value(sig, via_other) + ", expected exceptional(" +
                              print_value(sig, Value::of(e)) + ")";
      return report;
    }
    const Value via_same = c(sig, i, e);
    if (via_same != Value::inl(Value::of(Elem{a}))) {
      report.pass = false;
      report.counterexample = "a=" + std::to_string(a) + ": recover(" + std::string(i) +
                              ", " + print_value(sig, Value::of(e)) + ") = " +
                              print_value(sig, via_same) + ", expected normal(" +
                              std::to_string(a) + ")";
      return report;
    }
  }
  return report;
}

std::vector<ElemFunction> all_functions(const FamilySignature& sig,
                                        const ObjExpr& domain, const ObjExpr& codomain) {
  const long long n = obj_size(sig, domain);
  const long long m = obj_size(sig, codomain);
  long long count = 1;
  for (long long k = 0; k < n; ++k) {
    if (count > 1'000'000 / m) {
      throw Error("function space " + print_obj(domain) + " -> " + print_obj(codomain) +
                  " too large to enumerate");
    }
    count *= m;
  }

  std::vector<Value> outputs = enumerate_values(sig, codomain);
  std::vector<ElemFunction> out;
  out.reserve(static_cast<std::size_t>(count));
  for (long long fn_index = 0; fn_index < count; ++fn_index) {
    std::vector<Value> table;
    table.reserve(static_cast<std::size_t>(n));
    long long rest = fn_index;
    for (long long k = 0; k < n; ++k) {
      table.push_back(outputs.at(static_cast<std::size_t>(rest % m)));
      rest /= m;
    }
    out.emplace_back(sig, domain, codomain, std::move(table));
  }
  return out;
}

}  // namespace effdual
