#ifndef CMCOMM_ERROR_HPP_
#define CMCOMM_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace cmcomm {

  // Root of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Malformed algebra: bad table length, entry out of range, duplicate symbol.
  class AlgebraError : public Error {
   public:
    using Error::Error;
  };

  // Unknown operation symbol or arity mismatch in a term.
  class SignatureError : public Error {
   public:
    using Error::Error;
  };

  // A term references a variable that the environment does not bind.
  class ArityError : public Error {
   public:
    using Error::Error;
  };

  // Partitions over different universes, or elements outside the universe.
  class UniverseError : public Error {
   public:
    using Error::Error;
  };

  class CoordinateError : public Error {
   public:
    using Error::Error;
  };

  class TreeError : public Error {
   public:
    using Error::Error;
  };

  // A documented precondition of an operation does not hold.
  class ContractError : public Error {
   public:
    using Error::Error;
  };

  // Requested object does not fit the configured packing budget.
  class CapacityError : public Error {
   public:
    CapacityError(std::string const& what, double bound)
        : Error(what), _bound(bound) {}

    // The size (element count or bit count, as described by what()) that
    // exceeded the budget.
    double bound() const noexcept {
      return _bound;
    }

   private:
    double _bound;
  };

  // A partition fails to be compatible with some basic operation.
  class NotACongruenceError : public Error {
   public:
    NotACongruenceError(std::string const&        what,
                        std::string               symbol,
                        std::vector<unsigned>     left,
                        std::vector<unsigned>     right)
        : Error(what),
          _symbol(std::move(symbol)),
          _left(std::move(left)),
          _right(std::move(right)) {}

    std::string const& symbol() const noexcept {
      return _symbol;
    }
    // Two argument tuples that are related coordinatewise while their images
    // are not.
    std::vector<unsigned> const& left() const noexcept {
      return _left;
    }
    std::vector<unsigned> const& right() const noexcept {
      return _right;
    }

   private:
    std::string           _symbol;
    std::vector<unsigned> _left;
    std::vector<unsigned> _right;
  };

  class ParseError : public Error {
   public:
    ParseError(std::string const& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"),
          _position(position) {}

    std::size_t position() const noexcept {
      return _position;
    }

   private:
    std::size_t _position;
  };

}  // namespace cmcomm

#endif  // CMCOMM_ERROR_HPP_
