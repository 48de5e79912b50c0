#ifndef MFKRON_ERROR_HPP_
#define MFKRON_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <utility>

namespace mfkron {

  //! Base class of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! Text that does not match the partition or skew-shape grammar.
  class ParseError : public Error {
   public:
    ParseError(std::string const& message, std::string token)
        : Error(message + ": '" + token + "'"), _token(std::move(token)) {}

    std::string const& token() const noexcept {
      return _token;
    }

   private:
    std::string _token;
  };

  //! Arguments violating an operation's precondition (degree mismatch,
  //! malformed shapes, unmet hypotheses).
  class DomainError : public Error {
   public:
    using Error::Error;
  };

  //! A configured computation ceiling was exceeded.
  class ResourceError : public Error {
   public:
    using Error::Error;
  };

  //! Raised when an internal identity fails; always indicates a bug.
  class InvariantViolation : public std::logic_error {
   public:
    using std::logic_error::logic_error;
  };

}  // namespace mfkron

#endif  // MFKRON_ERROR_HPP_
