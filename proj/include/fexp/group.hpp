#ifndef FEXP_GROUP_HPP_
#define FEXP_GROUP_HPP_

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "error.hpp"

namespace fexp {

  // Group elements are canonical indices 0..n-1; index 0 is the identity.
  using elem_t = std::uint32_t;

  inline std::string default_element_name(std::size_t i) {
    return "e" + std::to_string(i);
  }

  class FiniteGroup {
   public:
    FiniteGroup() : _n(1), _mul{0}, _inv{0}, _names{"e0"} {}

    // Validates a Cayley table (row-major, index 0 must be the identity) and
    // derives the inverse table. Throws NoIdentity, NoInverse,
    // NotAssociative or InvalidInput, naming the offending elements.
    static FiniteGroup from_table(std::vector<std::vector<elem_t>> const& table,
                                  std::vector<std::string> names = {}) {
      std::size_t const n = table.size();
      if (n == 0) {
        throw Error(ErrorKind::invalid_input, "empty Cayley table");
      }
      if (names.empty()) {
        for (std::size_t i = 0; i < n; ++i) {
          names.push_back(default_element_name(i));
        }
      }
      if (names.size() != n) {
        throw Error(ErrorKind::invalid_input,
                    "expected " + std::to_string(n) + " element names, got "
                        + std::to_string(names.size()));
      }
      FiniteGroup g;
      g._n = n;
      g._names = std::move(names);
      g._mul.assign(n * n, 0);
      for (std::size_t a = 0; a < n; ++a) {
        if (table[a].size() != n) {
          throw Error(ErrorKind::invalid_input,
                      "row " + std::to_string(a) + " has length "
                          + std::to_string(table[a].size()) + ", expected "
                          + std::to_string(n));
        }
        for (std::size_t b = 0; b < n; ++b) {
          if (table[a][b] >= n) {
            throw Error(ErrorKind::invalid_input,
                        "entry (" + std::to_string(a) + "," + std::to_string(b)
                            + ") out of range");
          }
          g._mul[a * n + b] = table[a][b];
        }
      }
      for (std::size_t a = 0; a < n; ++a) {
        if (g.mul(0, a) != a || g.mul(a, 0) != a) {
          throw Error(ErrorKind::no_identity,
                      "index 0 is not a two-sided identity (witness element "
                          + g._names[a] + ")");
        }
      }
      g._inv.assign(n, 0);
      for (std::size_t a = 0; a < n; ++a) {
        std::optional<elem_t> found;
        for (std::size_t b = 0; b < n; ++b) {
          if (g.mul(a, b) == 0 && g.mul(b, a) == 0) {
            found = static_cast<elem_t>(b);
            break;
          }
        }
        if (!found) {
          throw Error(ErrorKind::no_inverse,
                      "element " + g._names[a] + " has no inverse");
        }
        g._inv[a] = *found;
      }
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          for (std::size_t c = 0; c < n; ++c) {
            if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) {
              throw Error(ErrorKind::not_associative,
                          "(" + g._names[a] + "*" + g._names[b] + ")*"
                              + g._names[c] + " != " + g._names[a] + "*("
                              + g._names[b] + "*" + g._names[c] + ")");
            }
          }
        }
      }
      return g;
    }

    std::size_t order() const noexcept {
      return _n;
    }

    elem_t mul(std::size_t a, std::size_t b) const noexcept {
      return _mul[a * _n + b];
    }

    elem_t inv(std::size_t a) const noexcept {
      return _inv[a];
    }

    std::string const& name(std::size_t a) const {
      return _names.at(a);
    }

    std::vector<std::string> const& names() const noexcept {
      return _names;
    }

    std::optional<elem_t> index_of(std::string_view name) const {
      for (std::size_t i = 0; i < _n; ++i) {
        if (_names[i] == name) {
          return static_cast<elem_t>(i);
        }
      }
      return std::nullopt;
    }

    std::vector<std::vector<elem_t>> table() const {
      std::vector<std::vector<elem_t>> t(_n, std::vector<elem_t>(_n));
      for (std::size_t a = 0; a < _n; ++a) {
        for (std::size_t b = 0; b < _n; ++b) {
          t[a][b] = mul(a, b);
        }
      }
      return t;
    }

    // Elements of the subgroup generated by gens, in breadth-first order.
    std::vector<elem_t> generated_by(std::vector<elem_t> const& gens) const {
      std::vector<bool>   seen(_n, false);
      std::vector<elem_t> out{0};
      seen[0] = true;
      for (std::size_t i = 0; i < out.size(); ++i) {
        for (auto s : gens) {
          for (auto t : {s, inv(s)}) {
            elem_t const c = mul(out[i], t);
            if (!seen[c]) {
              seen[c] = true;
              out.push_back(c);
            }
          }
        }
      }
      return out;
    }

    friend bool operator==(FiniteGroup const&, FiniteGroup const&) = default;

   private:
    std::size_t              _n;
    std::vector<elem_t>      _mul;
    std::vector<elem_t>      _inv;
    std::vector<std::string> _names;
  };

  enum class GeneratorKind { plain, extended };
  enum class LetterFlavor { x_letter, barred };

  struct Letter {
    std::string  name;
    elem_t       image;
    LetterFlavor flavor;

    friend bool operator==(Letter const&, Letter const&) = default;
  };

  // An assignment map from letter names to group elements. In the extended
  // kind the X-letters come first, followed by one barred letter "@<name>"
  // per group element, in element order.
  class GeneratorSet {
   public:
    GeneratorSet() = default;

    GeneratorSet(GeneratorKind kind, std::vector<Letter> letters)
        : _kind(kind), _letters(std::move(letters)) {
      for (std::size_t i = 0; i < _letters.size(); ++i) {
        _x_count += _letters[i].flavor == LetterFlavor::x_letter;
        if (!_index.emplace(_letters[i].name, i).second) {
          throw Error(ErrorKind::invalid_input,
                      "duplicate letter " + _letters[i].name);
        }
      }
    }

    GeneratorKind kind() const noexcept {
      return _kind;
    }

    std::size_t size() const noexcept {
      return _letters.size();
    }

    Letter const& operator[](std::size_t i) const {
      return _letters[i];
    }

    std::vector<Letter> const& letters() const noexcept {
      return _letters;
    }

    std::optional<std::size_t> find(std::string_view name) const {
      auto it = _index.find(std::string(name));
      if (it == _index.end()) {
        return std::nullopt;
      }
      return it->second;
    }

    std::size_t at(std::string_view name) const {
      auto i = find(name);
      if (!i) {
        throw Error(ErrorKind::unknown_letter, std::string(name));
      }
      return *i;
    }

    // Number of X-letters (all letters for the plain kind).
    std::size_t x_size() const noexcept {
      return _x_count;
    }

    bool is_barred(std::size_t i) const {
      return _letters[i].flavor == LetterFlavor::barred;
    }

    // Index of the barred letter of group element g (extended kind only).
    std::size_t barred(elem_t g) const {
      return x_size() + g;
    }

    std::vector<elem_t> x_images() const {
      std::vector<elem_t> out;
      for (auto const& l : _letters) {
        if (l.flavor == LetterFlavor::x_letter) {
          out.push_back(l.image);
        }
      }
      return out;
    }

    friend bool operator==(GeneratorSet const& a, GeneratorSet const& b) {
      return a._kind == b._kind && a._letters == b._letters;
    }

   private:
    GeneratorKind                                _kind = GeneratorKind::plain;
    std::vector<Letter>                          _letters;
    std::size_t                                  _x_count = 0;
    std::unordered_map<std::string, std::size_t> _index;
  };

  struct GeneratedGroup {
    FiniteGroup  group;
    GeneratorSet gens;
  };

  inline GeneratorSet
  make_plain_generators(FiniteGroup const&                                 g,
                        std::vector<std::pair<std::string, elem_t>> const& gens) {
    std::vector<Letter> letters;
    for (auto const& [name, image] : gens) {
      if (name.empty() || name[0] == '@') {
        throw Error(ErrorKind::invalid_input,
                    "invalid generator name '" + name + "'");
      }
      if (image >= g.order()) {
        throw Error(ErrorKind::invalid_input,
                    "generator " + name + " maps outside the group");
      }
      letters.push_back({name, image, LetterFlavor::x_letter});
    }
    GeneratorSet out(GeneratorKind::plain, std::move(letters));
    if (g.generated_by(out.x_images()).size() != g.order()) {
      std::vector<bool> hit(g.order(), false);
      for (auto e : g.generated_by(out.x_images())) {
        hit[e] = true;
      }
      std::size_t missing = 0;
      while (hit[missing]) {
        ++missing;
      }
      throw Error(ErrorKind::generators_do_not_generate,
                  "element " + g.name(missing) + " is not generated");
    }
    return out;
  }

  inline GeneratedGroup
  from_cayley_table(std::vector<std::vector<elem_t>> const&            table,
                    std::vector<std::pair<std::string, elem_t>> const& gens,
                    std::vector<std::string> names = {}) {
    auto g = FiniteGroup::from_table(table, std::move(names));
    auto x = make_plain_generators(g, gens);
    return {std::move(g), std::move(x)};
  }

  using Permutation = std::vector<std::size_t>;

  // Closure of the given permutations. Elements are indexed identity first,
  // then breadth-first over right products by the generators in input order.
  // Products act left to right: (p*q)(i) = q(p(i)).
  inline GeneratedGroup from_permutations(
      std::size_t                                             points,
      std::vector<std::pair<std::string, Permutation>> const& gens) {
    for (auto const& [name, p] : gens) {
      std::vector<bool> hit(points, false);
      bool              ok = p.size() == points;
      for (std::size_t i = 0; ok && i < points; ++i) {
        ok = p[i] < points && !hit[p[i]];
        if (ok) {
          hit[p[i]] = true;
        }
      }
      if (!ok) {
        throw Error(ErrorKind::not_a_permutation,
                    "generator " + name + " is not a permutation of 0.."
                        + std::to_string(points == 0 ? 0 : points - 1));
      }
    }
    auto compose = [](Permutation const& p, Permutation const& q) {
      Permutation r(p.size());
      for (std::size_t i = 0; i < p.size(); ++i) {
        r[i] = q[p[i]];
      }
      return r;
    };
    Permutation id(points);
    for (std::size_t i = 0; i < points; ++i) {
      id[i] = i;
    }
    std::vector<Permutation>                elements{id};
    std::map<Permutation, elem_t>           index{{id, 0}};
    for (std::size_t i = 0; i < elements.size(); ++i) {
      for (auto const& [name, p] : gens) {
        auto q = compose(elements[i], p);
        if (index.emplace(q, static_cast<elem_t>(elements.size())).second) {
          elements.push_back(std::move(q));
        }
      }
    }
    std::size_t const                n = elements.size();
    std::vector<std::vector<elem_t>> table(n, std::vector<elem_t>(n));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        table[a][b] = index.at(compose(elements[a], elements[b]));
      }
    }
    std::vector<std::pair<std::string, elem_t>> images;
    for (auto const& [name, p] : gens) {
      images.emplace_back(name, index.at(p));
    }
    return from_cayley_table(table, images);
  }

  // Y = X together with one barred letter per group element.
  inline GeneratorSet extend_generators(FiniteGroup const&  g,
                                        GeneratorSet const& x) {
    if (x.kind() != GeneratorKind::plain) {
      throw Error(ErrorKind::invalid_input,
                  "generator set is already extended");
    }
    std::vector<Letter> letters = x.letters();
    for (std::size_t e = 0; e < g.order(); ++e) {
      letters.push_back(
          {"@" + g.name(e), static_cast<elem_t>(e), LetterFlavor::barred});
    }
    return GeneratorSet(GeneratorKind::extended, std::move(letters));
  }

  ////////////////////////////////////////////////////////////////////////
  // Words
  ////////////////////////////////////////////////////////////////////////

  struct SignedLetter {
    std::size_t letter;
    int         exponent;  // +1 or -1

    SignedLetter inverse() const noexcept {
      return {letter, -exponent};
    }

    friend bool operator==(SignedLetter const&, SignedLetter const&) = default;
    friend auto operator<=>(SignedLetter const&, SignedLetter const&) = default;
  };

  // A word over a GeneratorSet; letters are indices into that set.
  using Word = std::vector<SignedLetter>;

  inline Word word_inverse(Word const& w) {
    Word r;
    r.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      r.push_back(it->inverse());
    }
    return r;
  }

  inline Word concat(Word a, Word const& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  }

  inline elem_t letter_value(FiniteGroup const&  g,
                             GeneratorSet const& gens,
                             SignedLetter        l) {
    elem_t const im = gens[l.letter].image;
    return l.exponent > 0 ? im : g.inv(im);
  }

  inline elem_t eval_word(FiniteGroup const&  g,
                          GeneratorSet const& gens,
                          Word const&         w) {
    elem_t v = 0;
    for (auto const& l : w) {
      if (l.letter >= gens.size()) {
        throw Error(ErrorKind::unknown_letter,
                    "letter index " + std::to_string(l.letter));
      }
      v = g.mul(v, letter_value(g, gens, l));
    }
    return v;
  }

  // Whitespace separated tokens, each a letter name optionally followed by
  // "^-1".
  inline Word parse_word(GeneratorSet const& gens, std::string_view text) {
    Word        w;
    std::size_t i = 0;
    while (i < text.size()) {
      if (std::isspace(static_cast<unsigned char>(text[i]))) {
        ++i;
        continue;
      }
      std::size_t const start = i;
      while (i < text.size()
             && !std::isspace(static_cast<unsigned char>(text[i]))) {
        ++i;
      }
      std::string_view tok = text.substr(start, i - start);
      int              exp = 1;
      if (auto caret = tok.find('^'); caret != std::string_view::npos) {
        if (tok.substr(caret) != "^-1" || caret == 0) {
          throw SyntaxError(start + caret, "expected '^-1'");
        }
        exp = -1;
        tok = tok.substr(0, caret);
      }
      auto idx = gens.find(tok);
      if (!idx) {
        throw Error(ErrorKind::unknown_letter, std::string(tok));
      }
      w.push_back({*idx, exp});
    }
    return w;
  }

  inline std::string format_word(GeneratorSet const& gens, Word const& w) {
    std::string out;
    for (auto const& l : w) {
      if (!out.empty()) {
        out += ' ';
      }
      out += gens[l.letter].name;
      if (l.exponent < 0) {
        out += "^-1";
      }
    }
    return out;
  }

  // A shortest word over the X-letters evaluating to each group element,
  // found by breadth-first search (positive letters before inverses).
  inline std::vector<Word> shortest_words(FiniteGroup const&  g,
                                          GeneratorSet const& gens) {
    std::vector<std::optional<Word>> found(g.order());
    found[0] = Word{};
    std::queue<elem_t> q;
    q.push(0);
    while (!q.empty()) {
      elem_t const v = q.front();
      q.pop();
      for (int exp : {1, -1}) {
        for (std::size_t l = 0; l < gens.size(); ++l) {
          if (gens.is_barred(l)) {
            continue;
          }
          SignedLetter const s{l, exp};
          elem_t const       u = g.mul(v, letter_value(g, gens, s));
          if (!found[u]) {
            found[u] = concat(*found[v], Word{s});
            q.push(u);
          }
        }
      }
    }
    std::vector<Word> out;
    for (std::size_t e = 0; e < g.order(); ++e) {
      if (!found[e]) {
        throw Error(ErrorKind::generators_do_not_generate,
                    "element " + g.name(e) + " is not reached");
      }
      out.push_back(*found[e]);
    }
    return out;
  }

}  // namespace fexp

#endif  // FEXP_GROUP_HPP_
