#pragma once

#include <stdexcept>
#include <string>

namespace gds {

enum class ErrorKind {
  InvalidInput,        // malformed instance or arguments
  PreconditionFailed,  // a mathematical precondition does not hold
  BudgetExhausted,     // enumeration budget, recursion depth or horizon ran out
  Internal             // a post-condition check failed; indicates a bug
};

/// CLI exit status for each error kind.
inline int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return 1;
    case ErrorKind::PreconditionFailed: return 2;
    case ErrorKind::BudgetExhausted: return 3;
    case ErrorKind::Internal: return 4;
  }
  return 4;
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string name, const std::string& what)
      : std::runtime_error(what), kind_(kind), name_(std::move(name)) {}

  ErrorKind kind() const noexcept { return kind_; }
  /// Short error identifier, e.g. "NotInS".
  const std::string& name() const noexcept { return name_; }

 private:
  ErrorKind kind_;
  std::string name_;
};

class InvalidInput : public Error {
 public:
  explicit InvalidInput(const std::string& what, std::string name = "InvalidInput")
      : Error(ErrorKind::InvalidInput, std::move(name), what) {}
};

class PreconditionFailed : public Error {
 public:
  PreconditionFailed(std::string name, const std::string& what)
      : Error(ErrorKind::PreconditionFailed, std::move(name), what) {}
};

class BudgetExhausted : public Error {
 public:
  BudgetExhausted(std::string name, const std::string& what)
      : Error(ErrorKind::BudgetExhausted, std::move(name), what) {}
};

class InternalError : public Error {
 public:
  InternalError(std::string name, const std::string& what)
      : Error(ErrorKind::Internal, std::move(name), what) {}
};

#define GDS_DEFINE_ERROR(Type, Base)                                 \
  class Type : public Base {                                         \
   public:                                                           \
    explicit Type(const std::string& what) : Base(#Type, what) {}    \
  };

// Invalid input. InvalidInput takes (what, name), so these are spelled out.
class EmptyBlock : public InvalidInput {
 public:
  explicit EmptyBlock(const std::string& what) : InvalidInput(what, "EmptyBlock") {}
};
class DuplicateBlock : public InvalidInput {
 public:
  explicit DuplicateBlock(const std::string& what) : InvalidInput(what, "DuplicateBlock") {}
};
class UnknownElement : public InvalidInput {
 public:
  explicit UnknownElement(const std::string& what) : InvalidInput(what, "UnknownElement") {}
};
class GeneratorInconsistent : public InvalidInput {
 public:
  explicit GeneratorInconsistent(const std::string& what)
      : InvalidInput(what, "GeneratorInconsistent") {}
};

GDS_DEFINE_ERROR(NotInS, PreconditionFailed)
GDS_DEFINE_ERROR(NotACover, PreconditionFailed)
GDS_DEFINE_ERROR(NotSimple, PreconditionFailed)
GDS_DEFINE_ERROR(NotSimpleCycle, PreconditionFailed)
GDS_DEFINE_ERROR(CycleNotDecomposable, PreconditionFailed)
GDS_DEFINE_ERROR(ConditionsViolated, PreconditionFailed)
GDS_DEFINE_ERROR(EvenCyclePresent, PreconditionFailed)
GDS_DEFINE_ERROR(InvalidTruncation, PreconditionFailed)

GDS_DEFINE_ERROR(InstanceTooLarge, BudgetExhausted)
GDS_DEFINE_ERROR(DepthExceeded, BudgetExhausted)
GDS_DEFINE_ERROR(HorizonExhausted, BudgetExhausted)

GDS_DEFINE_ERROR(InternalPropertyViolation, InternalError)
GDS_DEFINE_ERROR(UnexpectedMultipleEntryVertex, InternalError)

#undef GDS_DEFINE_ERROR

}  // namespace gds
