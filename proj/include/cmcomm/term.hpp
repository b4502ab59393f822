#ifndef CMCOMM_TERM_HPP_
#define CMCOMM_TERM_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace cmcomm {

  //! A formal term: a variable x_i, or an operation symbol applied to
  //! subterms.  Nullary operations are applications with no children.
  class Term {
   public:
    static Term variable(std::size_t index);
    static Term apply(std::string symbol, std::vector<Term> children = {});

    bool is_variable() const noexcept {
      return _symbol.empty();
    }
    std::size_t index() const noexcept {
      return _index;
    }
    std::string const& symbol() const noexcept {
      return _symbol;
    }
    std::vector<Term> const& children() const noexcept {
      return _children;
    }

    std::size_t depth() const;
    // One more than the largest variable index, 0 for ground terms.
    std::size_t number_of_variables() const;

    friend bool operator==(Term const&, Term const&) = default;

   private:
    Term() = default;

    std::size_t       _index = 0;
    std::string       _symbol;
    std::vector<Term> _children;
  };

  // Prefix notation: "(+ x (- y))"; nullary operations are bare symbols.
  // Variable i is printed as names[i] when given, else as "x<i>".
  std::string to_sexpr(Term const& t, std::vector<std::string> const& names = {});

  // Inverse of to_sexpr.  An atom is a variable if it occurs in names (or has
  // the form x<i> when names is empty), otherwise a nullary symbol.  Throws
  // ParseError.
  Term parse_sexpr(std::string_view text, std::vector<std::string> const& names = {});

}  // namespace cmcomm

#endif  // CMCOMM_TERM_HPP_
