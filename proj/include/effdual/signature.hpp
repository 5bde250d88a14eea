#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "effdual/error.hpp"

namespace effdual {

// Element of a finite carrier, identified by its ordinal.
struct Elem {
  int ordinal = 0;
  friend auto operator<=>(const Elem&, const Elem&) = default;
};

// Ordered family of named finite carriers. Read product-wise it is the
// state space (one value set per location), read sum-wise it is the
// exception space (one parameter set per exception name). The entry
// order fixes every enumeration order in the library.
class FamilySignature {
public:
  struct Entry {
    std::string name;
    int size = 0;
  };

  FamilySignature() = default;

  // Validates: names nonempty and pairwise distinct, every size >= 1.
  explicit FamilySignature(std::vector<Entry> entries);

  const std::vector<Entry>& entries() const noexcept { return entries_; }
  std::size_t arity() const noexcept { return entries_.size(); }

  bool contains(std::string_view name) const noexcept;
  std::size_t position(std::string_view name) const;  // throws SignatureError
  const std::string& name_at(std::size_t pos) const { return entries_.at(pos).name; }
  int size_at(std::size_t pos) const { return entries_.at(pos).size; }
  int carrier_size(std::string_view name) const { return size_at(position(name)); }

  long long state_count() const;      // product of the carrier sizes
  long long exception_count() const;  // sum of the carrier sizes

  // Range check for an element of the named carrier.
  void check_elem(std::string_view name, Elem a) const;
  void check_elem_at(std::size_t pos, Elem a) const;

private:
  std::vector<Entry> entries_;
};

// Total assignment of one carrier element per index, stored in signature
// entry order. States are immutable and compared extensionally.
class State {
public:
  State() = default;
  explicit State(std::vector<Elem> components) : components_(std::move(components)) {}

  std::size_t size() const noexcept { return components_.size(); }
  Elem at(std::size_t pos) const { return components_.at(pos); }
  const std::vector<Elem>& components() const noexcept { return components_; }

  // Copy with the component at `pos` replaced.
  State with(std::size_t pos, Elem a) const;

  friend bool operator==(const State&, const State&) = default;
};

// Tagged element of the exception space: which carrier it came from and
// the payload inside. Values with distinct indices are never equal.
struct ExcVal {
  std::size_t index = 0;  // position in the signature
  Elem payload;
  friend auto operator<=>(const ExcVal&, const ExcVal&) = default;
};

// Lexicographic enumeration of the product of all carriers: entry order
// first, then ordinal; the first entry is the most significant digit.
std::vector<State> enumerate_states(const FamilySignature& sig);

// Enumeration of the sum of all carriers, grouped by entry order with
// ascending payloads within a group.
std::vector<ExcVal> enumerate_exceptions(const FamilySignature& sig);

// Mixed-radix bridge between the structured values and their positions
// in the enumerations above. All four validate their inputs.
long long state_ordinal(const FamilySignature& sig, const State& s);
State state_at(const FamilySignature& sig, long long k);
long long exception_ordinal(const FamilySignature& sig, const ExcVal& e);
ExcVal exception_at(const FamilySignature& sig, long long k);

}  // namespace effdual
