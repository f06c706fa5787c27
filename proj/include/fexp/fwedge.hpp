#ifndef FEXP_FWEDGE_HPP_
#define FEXP_FWEDGE_HPP_

#include <cctype>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cayley.hpp"
#include "error.hpp"
#include "expansion.hpp"
#include "group.hpp"

namespace fexp {

  // M^∧(G,Y) over closed graphs, paired with F(G,X) and the canonical
  // isomorphism between them: f erases barred edges, f^-1 re-closes.
  class MWedge {
   public:
    explicit MWedge(GeneratedGroup const& gg)
        : _closed(Expansion::wedge(gg)), _free(Expansion::f_expansion(gg)) {}

    Expansion const& closed() const noexcept {
      return _closed;
    }

    Expansion const& free() const noexcept {
      return _free;
    }

    Element identity() const {
      return _closed.identity();
    }

    Element mul(Element const& a, Element const& b) const {
      return _closed.mul(a, b);
    }

    // g^-1 A is closed whenever A is, so no re-closing.
    Element inv(Element const& a) const {
      return _closed.inv(a);
    }

    Element m(Element const& a) const {
      return _closed.m(a);
    }

    Element generator_image(std::string_view name) const {
      return _closed.generator_image(name);
    }

    Element f_map(Element const& a) const {
      std::size_t const ly = _closed.cayley().letter_count();
      std::size_t const lx = _free.cayley().letter_count();
      Subgraph          g{a.graph.vertices, {}};
      a.graph.edges.for_each([&](std::size_t id) {
        std::size_t const letter = id % ly;
        if (letter < lx) {
          g.edges.set((id / ly) * lx + letter);
        }
      });
      return {g, a.point};
    }

    Element f_inverse(Element const& a) const {
      std::size_t const ly = _closed.cayley().letter_count();
      std::size_t const lx = _free.cayley().letter_count();
      Subgraph          g{a.graph.vertices, {}};
      a.graph.edges.for_each([&](std::size_t id) {
        g.edges.set((id / lx) * ly + id % lx);
      });
      return {_closed.closure()(g), a.point};
    }

   private:
    Expansion _closed;
    Expansion _free;
  };

  ////////////////////////////////////////////////////////////////////////
  // Terms in the signature (·, ^-1, m, 1)
  ////////////////////////////////////////////////////////////////////////

  struct Term {
    enum class Kind { one, letter, concat, inverse, m };

    Kind              kind = Kind::one;
    std::string       name;  // letter only
    std::vector<Term> children;

    static Term one() {
      return {};
    }

    static Term letter(std::string name) {
      return {Kind::letter, std::move(name), {}};
    }

    static Term concat(Term a, Term b) {
      return {Kind::concat, {}, {std::move(a), std::move(b)}};
    }

    static Term inverse(Term a) {
      return {Kind::inverse, {}, {std::move(a)}};
    }

    static Term m(Term a) {
      return {Kind::m, {}, {std::move(a)}};
    }

    friend bool operator==(Term const&, Term const&) = default;
  };

  inline std::string to_string(Term const& t) {
    switch (t.kind) {
      case Term::Kind::one: return "1";
      case Term::Kind::letter: return t.name;
      case Term::Kind::concat:
        return to_string(t.children[0]) + " " + to_string(t.children[1]);
      case Term::Kind::inverse: {
        auto const& c = t.children[0];
        bool const  atomic = c.kind != Term::Kind::concat
                            && c.kind != Term::Kind::inverse;
        return atomic ? to_string(c) + "^-1" : "(" + to_string(c) + ")^-1";
      }
      case Term::Kind::m: return "m(" + to_string(t.children[0]) + ")";
    }
    return {};
  }

  // Node count.
  inline std::size_t term_size(Term const& t) {
    std::size_t n = 1;
    for (auto const& c : t.children) {
      n += term_size(c);
    }
    return n;
  }

  namespace detail {

    class TermParser {
     public:
      TermParser(GeneratorSet const& gens, std::string_view text)
          : _gens(&gens), _text(text) {}

      Term parse() {
        Term t = term();
        skip_space();
        if (_pos != _text.size()) {
          throw SyntaxError(_pos, std::string("unexpected '") + _text[_pos]
                                      + "'");
        }
        return t;
      }

     private:
      static bool is_name_char(char c) {
        return !std::isspace(static_cast<unsigned char>(c)) && c != '('
               && c != ')' && c != '^';
      }

      void skip_space() {
        while (_pos < _text.size()
               && std::isspace(static_cast<unsigned char>(_text[_pos]))) {
          ++_pos;
        }
      }

      bool at_factor() {
        skip_space();
        return _pos < _text.size()
               && (_text[_pos] == '(' || is_name_char(_text[_pos]));
      }

      Term term() {
        if (!at_factor()) {
          throw SyntaxError(_pos, _pos == _text.size()
                                      ? "unexpected end of input"
                                      : "expected a factor");
        }
        Term t = factor();
        while (at_factor()) {
          t = Term::concat(std::move(t), factor());
        }
        return t;
      }

      Term factor() {
        Term a = atom();
        skip_space();
        if (_pos < _text.size() && _text[_pos] == '^') {
          if (_text.substr(_pos, 3) != "^-1") {
            throw SyntaxError(_pos, "expected '^-1'");
          }
          _pos += 3;
          a = Term::inverse(std::move(a));
        }
        return a;
      }

      void expect_close() {
        skip_space();
        if (_pos >= _text.size()) {
          throw SyntaxError(_pos, "unexpected end of input, expected ')'");
        }
        if (_text[_pos] != ')') {
          throw SyntaxError(_pos, "expected ')'");
        }
        ++_pos;
      }

      Term atom() {
        skip_space();
        if (_text[_pos] == '(') {
          ++_pos;
          Term t = term();
          expect_close();
          return t;
        }
        std::size_t const start = _pos;
        while (_pos < _text.size() && is_name_char(_text[_pos])) {
          ++_pos;
        }
        std::string_view const name = _text.substr(start, _pos - start);
        if (name == "m" && _pos < _text.size() && _text[_pos] == '(') {
          ++_pos;
          Term t = term();
          expect_close();
          return Term::m(std::move(t));
        }
        if (name == "1") {
          return Term::one();
        }
        auto idx = _gens->find(name);
        if (!idx || _gens->is_barred(*idx)) {
          throw Error(ErrorKind::unknown_letter, std::string(name));
        }
        return Term::letter(std::string(name));
      }

      GeneratorSet const* _gens;
      std::string_view    _text;
      std::size_t         _pos = 0;
    };

  }  // namespace detail

  // term   := factor+
  // factor := atom | atom "^-1"
  // atom   := "1" | letter | "m(" term ")" | "(" term ")"
  // Letters must be X-letters of `gens`.
  inline Term parse_term(GeneratorSet const& gens, std::string_view text) {
    return detail::TermParser(gens, text).parse();
  }

  // Structural evaluation in any model with identity, mul, inv, m and
  // generator_image(name).
  template <typename Model>
  auto eval_term(Term const& t, Model const& model)
      -> decltype(model.identity()) {
    switch (t.kind) {
      case Term::Kind::one: return model.identity();
      case Term::Kind::letter: return model.generator_image(t.name);
      case Term::Kind::concat:
        return model.mul(eval_term(t.children[0], model),
                         eval_term(t.children[1], model));
      case Term::Kind::inverse: return model.inv(eval_term(t.children[0], model));
      case Term::Kind::m: return model.m(eval_term(t.children[0], model));
    }
    throw Error(ErrorKind::invalid_input, "bad term");
  }

  namespace detail {

    inline Term word_term(GeneratorSet const& gens, Word const& w) {
      if (w.empty()) {
        return Term::one();
      }
      Term t;
      for (std::size_t i = 0; i < w.size(); ++i) {
        Term l = Term::letter(gens[w[i].letter].name);
        if (w[i].exponent < 0) {
          l = Term::inverse(std::move(l));
        }
        t = i == 0 ? std::move(l) : Term::concat(std::move(t), std::move(l));
      }
      return t;
    }

    inline Term times(std::optional<Term> acc, Term t) {
      return acc ? Term::concat(std::move(*acc), std::move(t)) : t;
    }

  }  // namespace detail

  // An enriched term over X evaluating to a closed element (Γ, g): the
  // product of m(w_v) m(w_v)^-1 over vertices v != 1, of
  // m(w_a) x x^-1 m(w_a)^-1 over X-edges (a, x), then m(w_g), where w_v is
  // a shortest X-word for v.
  inline Term decompose(MWedge const& model, Element const& a) {
    auto const&        cay = model.closed().cayley();
    auto const&        gens = cay.gens();
    auto const         words = shortest_words(cay.group(), gens);
    auto               mw = [&](elem_t v) {
      return Term::m(detail::word_term(gens, words[v]));
    };
    std::optional<Term> acc;
    for (elem_t v = 1; v < cay.group().order(); ++v) {
      if (a.graph.has_vertex(v)) {
        acc = detail::times(std::move(acc),
                            Term::concat(mw(v), Term::inverse(mw(v))));
      }
    }
    for (std::size_t id : cay.edges_in_order()) {
      if (!a.graph.edges.test(id) || gens.is_barred(cay.edge_letter(id))) {
        continue;
      }
      elem_t const src = cay.edge_src(id);
      Term         x = Term::letter(gens[cay.edge_letter(id)].name);
      Term piece = Term::concat(
          Term::concat(Term::concat(mw(src), x), Term::inverse(x)),
          Term::inverse(mw(src)));
      acc = detail::times(std::move(acc), std::move(piece));
    }
    if (a.point != 0) {
      acc = detail::times(std::move(acc), mw(a.point));
    }
    return acc ? std::move(*acc) : Term::one();
  }

}  // namespace fexp

#endif  // FEXP_FWEDGE_HPP_
