// Exception types thrown by tmreg.

#ifndef TMREG_ERRORS_HPP_
#define TMREG_ERRORS_HPP_

#include <cstddef>    // for size_t
#include <stdexcept>  // for runtime_error, invalid_argument
#include <string>     // for string, to_string

namespace tmreg {

  //! Base class of every error raised by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! Malformed arguments: out-of-range images, mismatched degrees, an
  //! invalid partition, and so on.
  class InvalidArgument : public Error {
   public:
    using Error::Error;
  };

  //! The element does not belong to the monoid a decider was asked about.
  class NotInMonoid : public Error {
   public:
    using Error::Error;
  };

  //! Some block is sent into two or more distinct blocks, so the map is not
  //! in T(X, P). `block()` is the first such block in canonical order.
  class NotPartitionPreserving : public NotInMonoid {
   public:
    explicit NotPartitionPreserving(std::size_t block)
        : NotInMonoid("transformation does not preserve the partition: block "
                      + std::to_string(block)
                      + " has images in two distinct blocks"),
          _block(block) {}

    [[nodiscard]] std::size_t block() const noexcept {
      return _block;
    }

   private:
    std::size_t _block;
  };

  //! An exhaustive enumeration or scan was requested above its size cap.
  class CapExceeded : public Error {
   public:
    CapExceeded(std::size_t n, std::size_t cap)
        : Error("degree " + std::to_string(n) + " exceeds the cap "
                + std::to_string(cap) + " (use a cap override to force it)"),
          _n(n),
          _cap(cap) {}

    [[nodiscard]] std::size_t degree() const noexcept {
      return _n;
    }
    [[nodiscard]] std::size_t cap() const noexcept {
      return _cap;
    }

   private:
    std::size_t _n;
    std::size_t _cap;
  };

  //! Instance files and command-line values that cannot be parsed.
  class ParseError : public Error {
   public:
    using Error::Error;
  };

}  // namespace tmreg

#endif  // TMREG_ERRORS_HPP_
