#ifndef FEXP_TESTS_SUPPORT_HPP_
#define FEXP_TESTS_SUPPORT_HPP_

#include <optional>
#include <string>

#include <fexp/error.hpp>

namespace test_support {

  // The kind of fexp::Error thrown by f, or nullopt if nothing is thrown.
  template <typename F>
  std::optional<fexp::ErrorKind> error_kind(F&& f) {
    try {
      f();
    } catch (fexp::Error const& e) {
      return e.kind();
    }
    return std::nullopt;
  }

  inline std::string data_file(std::string const& name) {
    return std::string(FEXP_DATA_DIR) + "/groups/" + name;
  }

}  // namespace test_support

#endif  // FEXP_TESTS_SUPPORT_HPP_
