#include "cmcomm/term.hpp"

#include <algorithm>
#include <cctype>

#include "cmcomm/error.hpp"

namespace cmcomm {

  Term Term::variable(std::size_t index) {
    Term t;
    t._index = index;
    return t;
  }

  Term Term::apply(std::string symbol, std::vector<Term> children) {
    if (symbol.empty()) {
      throw SignatureError("operation symbol must be non-empty");
    }
    Term t;
    t._symbol   = std::move(symbol);
    t._children = std::move(children);
    return t;
  }

  std::size_t Term::depth() const {
    std::size_t d = 0;
    for (auto const& c : _children) {
      d = std::max(d, c.depth() + 1);
    }
    return is_variable() ? 0 : std::max<std::size_t>(d, 1);
  }

  std::size_t Term::number_of_variables() const {
    if (is_variable()) {
      return _index + 1;
    }
    std::size_t m = 0;
    for (auto const& c : _children) {
      m = std::max(m, c.number_of_variables());
    }
    return m;
  }

  namespace {
    void write(Term const& t, std::vector<std::string> const& names, std::string& out) {
      if (t.is_variable()) {
        out += t.index() < names.size() ? names[t.index()]
                                        : "x" + std::to_string(t.index());
        return;
      }
      if (t.children().empty()) {
        out += t.symbol();
        return;
      }
      out += '(';
      out += t.symbol();
      for (auto const& c : t.children()) {
        out += ' ';
        write(c, names, out);
      }
      out += ')';
    }

    bool is_atom_char(char c) {
      return !std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')';
    }

    class SexprParser {
     public:
      SexprParser(std::string_view text, std::vector<std::string> const& names)
          : _text(text), _names(names) {}

      Term parse() {
        Term t = term();
        skip();
        if (_pos != _text.size()) {
          throw ParseError("trailing input after term", _pos);
        }
        return t;
      }

     private:
      void skip() {
        while (_pos < _text.size() && std::isspace(static_cast<unsigned char>(_text[_pos]))) {
          ++_pos;
        }
      }

      std::string atom() {
        std::size_t start = _pos;
        while (_pos < _text.size() && is_atom_char(_text[_pos])) {
          ++_pos;
        }
        if (start == _pos) {
          throw ParseError("expected symbol", _pos);
        }
        return std::string(_text.substr(start, _pos - start));
      }

      Term leaf(std::string const& name) const {
        if (_names.empty()) {
          if (name.size() > 1 && name[0] == 'x'
              && std::all_of(name.begin() + 1, name.end(), [](char c) {
                   return std::isdigit(static_cast<unsigned char>(c));
                 })) {
            return Term::variable(std::stoul(name.substr(1)));
          }
        } else {
          auto it = std::find(_names.begin(), _names.end(), name);
          if (it != _names.end()) {
            return Term::variable(static_cast<std::size_t>(it - _names.begin()));
          }
        }
        return Term::apply(name);
      }

      Term term() {
        skip();
        if (_pos >= _text.size()) {
          throw ParseError("unexpected end of term", _pos);
        }
        if (_text[_pos] == ')') {
          throw ParseError("unexpected ')'", _pos);
        }
        if (_text[_pos] != '(') {
          return leaf(atom());
        }
        ++_pos;
        skip();
        std::size_t head_pos = _pos;
        std::string head     = atom();
        if (!leaf(head).symbol().size()) {
          throw ParseError("variable in operator position", head_pos);
        }
        std::vector<Term> children;
        while (true) {
          skip();
          if (_pos >= _text.size()) {
            throw ParseError("missing ')'", _pos);
          }
          if (_text[_pos] == ')') {
            ++_pos;
            break;
          }
          children.push_back(term());
        }
        return Term::apply(std::move(head), std::move(children));
      }

      std::string_view                _text;
      std::vector<std::string> const& _names;
      std::size_t                     _pos = 0;
    };
  }  // namespace

  std::string to_sexpr(Term const& t, std::vector<std::string> const& names) {
    std::string out;
    write(t, names, out);
    return out;
  }

  Term parse_sexpr(std::string_view text, std::vector<std::string> const& names) {
    return SexprParser(text, names).parse();
  }

}  // namespace cmcomm
