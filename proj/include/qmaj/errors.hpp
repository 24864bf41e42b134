#pragma once

#include <stdexcept>
#include <string>

namespace qmaj {

/* Thrown when an enumeration request exceeds the configured guard
 * (default 12; see kDefaultEnumerationGuard). */
class GuardError : public std::runtime_error {
 public:
  GuardError(const std::string& what, int requested, int guard)
      : std::runtime_error(what), requested_(requested), guard_(guard) {}

  int requested() const { return requested_; }
  int guard() const { return guard_; }

 private:
  int requested_;
  int guard_;
};

/* Thrown when an operation requiring a standard labeled partition is
 * handed a non-standard one.  `pair_index` is the 1-based position i of
 * the first adjacent pair (i, i+1) violating the predicate. */
class StandardnessError : public std::runtime_error {
 public:
  StandardnessError(const std::string& what, int pair_index)
      : std::runtime_error(what), pair_index_(pair_index) {}

  int pair_index() const { return pair_index_; }

 private:
  int pair_index_;
};

}  // namespace qmaj
