#ifndef FEXP_ERROR_HPP_
#define FEXP_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace fexp {

  enum class ErrorKind {
    not_associative,
    no_identity,
    no_inverse,
    generators_do_not_generate,
    not_a_permutation,
    unknown_letter,
    syntax_error,
    not_connected,
    vertex_absent,
    too_large,
    wrong_flavor,
    undefined_action,
    not_e_unitary,
    not_f_inverse,
    not_dual_closure,
    not_invariant,
    invalid_monoid,
    nu_not_canonical,
    well_definedness_failure,
    factorization_failure,
    invalid_input
  };

  inline char const* to_string(ErrorKind k) {
    switch (k) {
      case ErrorKind::not_associative: return "NotAssociative";
      case ErrorKind::no_identity: return "NoIdentity";
      case ErrorKind::no_inverse: return "NoInverse";
      case ErrorKind::generators_do_not_generate:
        return "GeneratorsDoNotGenerate";
      case ErrorKind::not_a_permutation: return "NotAPermutation";
      case ErrorKind::unknown_letter: return "UnknownLetter";
      case ErrorKind::syntax_error: return "SyntaxError";
      case ErrorKind::not_connected: return "NotConnected";
      case ErrorKind::vertex_absent: return "VertexAbsent";
      case ErrorKind::too_large: return "TooLarge";
      case ErrorKind::wrong_flavor: return "WrongFlavor";
      case ErrorKind::undefined_action: return "UndefinedAction";
      case ErrorKind::not_e_unitary: return "NotEUnitary";
      case ErrorKind::not_f_inverse: return "NotFInverse";
      case ErrorKind::not_dual_closure: return "NotDualClosure";
      case ErrorKind::not_invariant: return "NotInvariant";
      case ErrorKind::invalid_monoid: return "InvalidMonoid";
      case ErrorKind::nu_not_canonical: return "NuNotCanonical";
      case ErrorKind::well_definedness_failure:
        return "WellDefinednessFailure";
      case ErrorKind::factorization_failure: return "FactorizationFailure";
      case ErrorKind::invalid_input: return "InvalidInput";
    }
    return "Unknown";
  }

  // All library failures are reported through this exception type; the kind
  // is what callers (and the CLI's exit-code mapping) dispatch on.
  class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, std::string const& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what),
          _kind(kind) {}

    ErrorKind kind() const noexcept {
      return _kind;
    }

   private:
    ErrorKind _kind;
  };

  // Parse errors carry the byte offset at which they were detected.
  class SyntaxError : public Error {
   public:
    SyntaxError(std::size_t pos, std::string const& what)
        : Error(ErrorKind::syntax_error,
                what + " at position " + std::to_string(pos)),
          _pos(pos) {}

    std::size_t position() const noexcept {
      return _pos;
    }

   private:
    std::size_t _pos;
  };

}  // namespace fexp

#endif  // FEXP_ERROR_HPP_
