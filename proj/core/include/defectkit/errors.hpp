#pragma once

#include <stdexcept>
#include <string>

namespace defectkit {

// Two words or a word and a morphism built over different alphabets were
// combined.
class AlphabetMismatch : public std::logic_error {
 public:
  explicit AlphabetMismatch(const std::string& what) : std::logic_error(what) {}
};

// An operation was called outside its documented domain.
class PreconditionError : public std::invalid_argument {
 public:
  explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

// A word was queried against a language snapshot that does not contain it,
// or is too long for two-sided extensions at the snapshot's n_max.
class NotInLanguage : public std::out_of_range {
 public:
  explicit NotInLanguage(const std::string& what) : std::out_of_range(what) {}
};

// A finite stream holds too few occurrences to answer a return-word query.
class InsufficientHorizon : public std::runtime_error {
 public:
  explicit InsufficientHorizon(const std::string& what) : std::runtime_error(what) {}
};

// A bounded search or fixpoint iteration ran out of budget.
class SearchBoundExceeded : public std::runtime_error {
 public:
  explicit SearchBoundExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace defectkit
