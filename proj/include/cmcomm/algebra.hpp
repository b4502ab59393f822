#ifndef CMCOMM_ALGEBRA_HPP_
#define CMCOMM_ALGEBRA_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cmcomm/partition.hpp"
#include "cmcomm/term.hpp"

namespace cmcomm {

  //! A basic operation given by its full table.
  //!
  //! The entry for the argument tuple (a_0, ..., a_{r-1}) is stored at index
  //! a_0 n^{r-1} + ... + a_{r-1}, i.e. row-major with the first argument most
  //! significant.
  struct OperationTable {
    std::string          symbol;
    std::size_t          arity = 0;
    std::vector<Element> table;

    friend bool operator==(OperationTable const&, OperationTable const&) = default;
  };

  //! A finite algebra with universe {0, ..., n-1}.
  //!
  //! Immutable after construction; the constructor enforces table lengths,
  //! entry ranges and distinct symbols and throws AlgebraError otherwise.
  class FiniteAlgebra {
   public:
    FiniteAlgebra(std::string name, std::size_t size, std::vector<OperationTable> ops);

    std::string const& name() const noexcept {
      return _name;
    }
    std::size_t size() const noexcept {
      return _size;
    }
    std::vector<OperationTable> const& operations() const noexcept {
      return _ops;
    }
    std::size_t number_of_operations() const noexcept {
      return _ops.size();
    }
    OperationTable const& operation(std::size_t i) const {
      return _ops.at(i);
    }

    std::optional<std::size_t> find(std::string const& symbol) const;

    Element apply(std::size_t op, std::span<Element const> args) const;

    Element apply(std::size_t op, Element a, Element b) const {
      return _ops[op].table[a * _size + b];
    }

    // Indices of binary operations that are group multiplications on the
    // universe (associative, with identity and inverses).
    std::vector<std::size_t> const& group_operations() const noexcept {
      return _group_ops;
    }

    friend bool operator==(FiniteAlgebra const& x, FiniteAlgebra const& y) {
      return x._name == y._name && x._size == y._size && x._ops == y._ops;
    }

   private:
    std::string                 _name;
    std::size_t                 _size;
    std::vector<OperationTable> _ops;
    std::vector<std::size_t>    _group_ops;
  };

  //! An m-ary operation on the universe of some algebra, as a full table in
  //! the same row-major convention as OperationTable.
  struct FunctionTable {
    std::size_t          domain_arity = 0;
    std::vector<Element> table;

    Element operator()(std::span<Element const> args, std::size_t n) const;

    friend bool operator==(FunctionTable const&, FunctionTable const&) = default;
    friend auto operator<=>(FunctionTable const&, FunctionTable const&) = default;
  };

  // Value of the term operation induced by t at env.  Throws SignatureError
  // for unknown symbols or arity mismatches and ArityError when a variable is
  // unbound.
  Element eval_term(FiniteAlgebra const& alg, Term const& t, std::span<Element const> env);

  // Tabulates t as an m-ary operation.
  FunctionTable tabulate(FiniteAlgebra const& alg, Term const& t, std::size_t m);

  // Checks every symbol of t against the signature of alg.
  void check_signature(FiniteAlgebra const& alg, Term const& t);

  // Direct power A^m; the element (a_0, ..., a_{m-1}) is encoded as
  // a_0 n^{m-1} + ... + a_{m-1}.  Throws CapacityError if a table of the power
  // would exceed max_table_entries.
  FiniteAlgebra power(FiniteAlgebra const& alg,
                      std::size_t          m,
                      std::size_t          max_table_entries = std::size_t(1) << 24);

  std::vector<Element> decode_tuple(Element code, std::size_t n, std::size_t m);
  Element              encode_tuple(std::span<Element const> tuple, std::size_t n);

  // Least subuniverse containing generators, ascending.
  std::vector<Element> subuniverse_closure(FiniteAlgebra const&     alg,
                                           std::vector<Element> const& generators);

  // Throws NotACongruenceError naming the first violated operation.
  void check_congruence(FiniteAlgebra const& alg, Partition const& p);
  bool is_congruence(FiniteAlgebra const& alg, Partition const& p);

  struct Quotient {
    FiniteAlgebra        algebra;
    std::vector<Element> map;  // element -> block index
  };

  // A / pi with blocks numbered by ascending least element.
  Quotient quotient(FiniteAlgebra const& alg, Partition const& pi);

  struct CloneMember {
    FunctionTable table;
    Term          witness;
  };

  struct TermClone {
    std::vector<CloneMember> members;  // ascending by table
    bool                     complete = false;
  };

  inline constexpr std::size_t default_clone_cap = 1'000'000;

  // The m-ary term operations of alg: the closure of the m projections under
  // the basic operations applied pointwise.  Stops after cap members and
  // reports complete = false in that case.
  TermClone term_operations_closure(FiniteAlgebra const& alg,
                                    std::size_t          m,
                                    std::size_t          cap = default_clone_cap);

}  // namespace cmcomm

#endif  // CMCOMM_ALGEBRA_HPP_
