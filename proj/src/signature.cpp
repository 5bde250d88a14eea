#include "effdual/signature.hpp"

#include <limits>
#include <unordered_set>

namespace effdual {

namespace {

long long checked_mul(long long a, long long b) {
  if (a != 0 && b > std::numeric_limits<long long>::max() / a) {
    throw Error("carrier product too large to enumerate");
  }
  return a * b;
}

}  // namespace

FamilySignature::FamilySignature(std::vector<Entry> entries)
    : entries_(std::move(entries)) {
  std::unordered_set<std::string_view> seen;
  for (const auto& e : entries_) {
    if (e.name.empty()) {
      throw SignatureError("index names must be nonempty");
    }
    if (!seen.insert(e.name).second) {
      throw SignatureError("duplicate index name '" + e.name + "'");
    }
    if (e.size < 1) {
      throw SignatureError("carrier size must be >= 1 (index '" + e.name + "')");
    }
  }
}

bool FamilySignature::contains(std::string_view name) const noexcept {
  for (const auto& e : entries_) {
    if (e.name == name) return true;
  }
  return false;
}

std::size_t FamilySignature::position(std::string_view name) const {
  for (std::size_t pos = 0; pos < entries_.size(); ++pos) {
    if (entries_[pos].name == name) return pos;
  }
  throw SignatureError("unknown index '" + std::string(name) + "'");
}

long long FamilySignature::state_count() const {
  long long count = 1;
  for (const auto& e : entries_) count = checked_mul(count, e.size);
  return count;
}

long long FamilySignature::exception_count() const {
  long long count = 0;
  for (const auto& e : entries_) count += e.size;
  return count;
}

void FamilySignature::check_elem(std::string_view name, Elem a) const {
  check_elem_at(position(name), a);
}

void FamilySignature::check_elem_at(std::size_t pos, Elem a) const {
  const auto& e = entries_.at(pos);
  if (a.ordinal < 0 || a.ordinal >= e.size) {
    throw SignatureError("element " + std::to_string(a.ordinal) +
                         " out of range for carrier '" + e.name + "' (size " +
                         std::to_string(e.size) + ")");
  }
}

State State::with(std::size_t pos, Elem a) const {
  std::vector<Elem> next = components_;
  next.at(pos) = a;
  return State(std::move(next));
}

std::vector<State> enumerate_states(const FamilySignature& sig) {
  const long long count = sig.state_count();
  std::vector<State> out;
  out.reserve(static_cast<std::size_t>(count));
  for (long long k = 0; k < count; ++k) out.push_back(state_at(sig, k));
  return out;
}

std::vector<ExcVal> enumerate_exceptions(const FamilySignature& sig) {
  std::vector<ExcVal> out;
  out.reserve(static_cast<std::size_t>(sig.exception_count()));
  for (std::size_t pos = 0; pos < sig.arity(); ++pos) {
    for (int a = 0; a < sig.size_at(pos); ++a) {
      out.push_back(ExcVal{pos, Elem{a}});
    }
  }
  return out;
}

long long state_ordinal(const FamilySignature& sig, const State& s) {
  if (s.size() != sig.arity()) {
    throw SignatureError("state has " + std::to_string(s.size()) +
                         " components, signature has " + std::to_string(sig.arity()));
  }
  long long k = 0;
  for (std::size_t pos = 0; pos < sig.arity(); ++pos) {
    sig.check_elem_at(pos, s.at(pos));
    k = k * sig.size_at(pos) + s.at(pos).ordinal;
  }
  return k;
}

State state_at(const FamilySignature& sig, long long k) {
  if (k < 0 || k >= sig.state_count()) {
    throw SignatureError("state ordinal " + std::to_string(k) + " out of range");
  }
  std::vector<Elem> components(sig.arity());
  for (std::size_t pos = sig.arity(); pos-- > 0;) {
    const int size = sig.size_at(pos);
    components[pos] = Elem{static_cast<int>(k % size)};
    k /= size;
  }
  return State(std::move(components));
}

long long exception_ordinal(const FamilySignature& sig, const ExcVal& e) {
  if (e.index >= sig.arity()) {
    throw SignatureError("exception index position " + std::to_string(e.index) +
                         " out of range");
  }
  sig.check_elem_at(e.index, e.payload);
  long long offset = 0;
  for (std::size_t pos = 0; pos < e.index; ++pos) offset += sig.size_at(pos);
  return offset + e.payload.ordinal;
}

ExcVal exception_at(const FamilySignature& sig, long long k) {
  if (k < 0 || k >= sig.exception_count()) {
    throw SignatureError("exception ordinal " + std::to_string(k) + " out of range");
  }
  for (std::size_t pos = 0; pos < sig.arity(); ++pos) {
    if (k < sig.size_at(pos)) return ExcVal{pos, Elem{static_cast<int>(k)}};
    k -= sig.size_at(pos);
  }
  throw SignatureError("exception ordinal out of range");  // unreachable
}

}  // namespace effdual
