#ifndef FEXP_REPORT_HPP_
#define FEXP_REPORT_HPP_

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace fexp {

  // One named property checked over some number of cases; keeps the first
  // failing witness.
  struct CheckResult {
    std::string                proposition;
    std::string                check;
    std::string                instance;
    std::size_t                cases = 0;
    std::size_t                failures = 0;
    std::optional<std::string> witness;

    bool passed() const noexcept {
      return failures == 0;
    }
  };

  class Report {
   public:
    // Tallies cases of a single check; committed to the report on
    // destruction.
    class Tally {
     public:
      Tally(Report& r, std::string proposition, std::string check,
            std::string instance)
          : _report(&r),
            _result{std::move(proposition), std::move(check),
                    std::move(instance), 0, 0, std::nullopt} {}

      Tally(Tally const&) = delete;
      Tally& operator=(Tally const&) = delete;

      ~Tally() {
        _report->add(std::move(_result));
      }

      // Records one case; `witness` is only invoked on failure.
      template <typename F>
      bool expect(bool ok, F&& witness) {
        ++_result.cases;
        if (!ok) {
          ++_result.failures;
          if (!_result.witness) {
            _result.witness = witness();
          }
        }
        return ok;
      }

      bool expect(bool ok) {
        return expect(ok, [] { return std::string("(no witness)"); });
      }

      void fail(std::string witness) {
        expect(false, [&] { return witness; });
      }

      bool ok() const noexcept {
        return _result.passed();
      }

     private:
      Report*     _report;
      CheckResult _result;
    };

    Tally tally(std::string proposition, std::string check,
                std::string instance) {
      return Tally(*this, std::move(proposition), std::move(check),
                   std::move(instance));
    }

    void add(CheckResult r) {
      _results.push_back(std::move(r));
    }

    void merge(Report const& other) {
      _results.insert(_results.end(), other._results.begin(),
                      other._results.end());
    }

    bool passed() const noexcept {
      for (auto const& r : _results) {
        if (!r.passed()) {
          return false;
        }
      }
      return true;
    }

    std::vector<CheckResult> const& results() const noexcept {
      return _results;
    }

    std::optional<CheckResult> find(std::string const& check) const {
      for (auto const& r : _results) {
        if (r.check == check) {
          return r;
        }
      }
      return std::nullopt;
    }

    nlohmann::ordered_json to_json() const {
      auto arr = nlohmann::ordered_json::array();
      for (auto const& r : _results) {
        nlohmann::ordered_json j;
        j["proposition"] = r.proposition;
        j["check"] = r.check;
        j["instance"] = r.instance;
        j["status"] = r.passed() ? "pass" : "fail";
        j["cases"] = r.cases;
        if (r.witness) {
          j["witness"] = *r.witness;
        }
        arr.push_back(std::move(j));
      }
      return arr;
    }

    std::string to_text() const {
      std::ostringstream out;
      for (auto const& r : _results) {
        out << (r.passed() ? "PASS " : "FAIL ") << r.proposition << "/"
            << r.check << " [" << r.instance << "] cases=" << r.cases;
        if (r.witness) {
          out << " witness: " << *r.witness;
        }
        out << "\n";
      }
      return out.str();
    }

   private:
    std::vector<CheckResult> _results;
  };

}  // namespace fexp

#endif  // FEXP_REPORT_HPP_
