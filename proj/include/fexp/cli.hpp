#ifndef FEXP_CLI_HPP_
#define FEXP_CLI_HPP_

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <CLI11.hpp>

#include "error.hpp"
#include "expansion.hpp"
#include "fixtures.hpp"
#include "fwedge.hpp"
#include "group.hpp"
#include "io.hpp"
#include "suites.hpp"

namespace fexp::cli {

  enum ExitCode : int {
    ok = 0,
    check_failed = 1,
    syntax = 2,
    semantic = 3,
    too_large = 4
  };

  inline int exit_code(Error const& e) {
    switch (e.kind()) {
      case ErrorKind::syntax_error:
      case ErrorKind::unknown_letter: return syntax;
      case ErrorKind::too_large: return too_large;
      default: return semantic;
    }
  }

  struct Config {
    std::string   group_file;
    std::string   generators = "plain";  // plain | extended
    std::uint64_t cap = default_enumeration_cap;
    std::size_t   samples = 10'000;
    std::uint64_t seed = 0;
    std::string   format = "text";
  };

  // The group itself in the enriched signature, with m the identity map.
  struct GroupModel {
    GeneratedGroup const* gg;

    elem_t identity() const {
      return 0;
    }

    elem_t mul(elem_t a, elem_t b) const {
      return gg->group.mul(a, b);
    }

    elem_t inv(elem_t a) const {
      return gg->group.inv(a);
    }

    elem_t m(elem_t a) const {
      return a;
    }

    elem_t generator_image(std::string_view name) const {
      auto idx = gg->gens.find(name);
      if (!idx) {
        throw Error(ErrorKind::unknown_letter, std::string(name));
      }
      return gg->gens[*idx].image;
    }
  };

  inline fixtures::NamedGroup load_named(std::string const& path) {
    json const j = parse_json_text(read_file(path));
    std::string name = std::filesystem::path(path).stem().string();
    if (j.is_object() && j.contains("name") && j["name"].is_string()) {
      name = j["name"].get<std::string>();
    }
    return {name, group_from_json(j)};
  }

  inline Expansion family(GeneratedGroup const& gg, std::string const& model,
                          std::string const& generators) {
    bool const ext = generators == "extended";
    if (model == "M") {
      return ext ? Expansion::margolis_meakin_extended(gg)
                 : Expansion::margolis_meakin(gg);
    }
    if (model == "F") {
      if (ext) {
        throw Error(ErrorKind::invalid_input,
                    "model F takes the plain generator set");
      }
      return Expansion::f_expansion(gg);
    }
    if (model == "Mwedge") {
      return Expansion::wedge(gg);
    }
    throw Error(ErrorKind::invalid_input, "model " + model + " has no graphs");
  }

  ////////////////////////////////////////////////////////////////////////

  inline int cmd_eval(Config const& cfg, std::optional<std::string> word,
                      std::optional<std::string> term, std::string const& model,
                      std::ostream& out) {
    auto const ng = load_named(cfg.group_file);
    auto const& gg = ng.group;
    if (model == "group") {
      if (word) {
        Word const w = parse_word(gg.gens, *word);
        out << gg.group.name(eval_word(gg.group, gg.gens, w)) << '\n';
      } else {
        Term const t = parse_term(gg.gens, *term);
        out << gg.group.name(eval_term(t, GroupModel{&gg})) << '\n';
      }
      return ok;
    }
    if (term && model == "Mwedge") {
      MWedge const mw(gg);
      out << mw.closed().format(eval_term(parse_term(gg.gens, *term), mw))
          << '\n';
      return ok;
    }
    Expansion const fam = family(gg, model, cfg.generators);
    if (word) {
      out << fam.format(fam.eval_word(parse_word(fam.gens(), *word))) << '\n';
    } else {
      out << fam.format(eval_term(parse_term(gg.gens, *term), fam)) << '\n';
    }
    return ok;
  }

  inline int cmd_enumerate(Config const& cfg, std::string const& model,
                           std::string const& by, std::size_t max_len,
                           bool list, std::ostream& out) {
    auto const      ng = load_named(cfg.group_file);
    Expansion const fam = family(ng.group, model, cfg.generators);
    std::vector<Element> elems;
    if (by == "words") {
      elems = fam.enumerate_by_words(max_len);
    } else {
      elems = fam.enumerate_elements(cfg.cap);
      std::sort(elems.begin(), elems.end());
    }
    out << elems.size() << '\n';
    if (list) {
      for (auto const& e : elems) {
        out << fam.format(e) << '\n';
      }
    }
    return ok;
  }

  inline int cmd_check(Config const& cfg, std::string const& suite,
                       std::ostream& out) {
    auto const   ng = load_named(cfg.group_file);
    SuiteOptions opt;
    opt.samples = cfg.samples;
    opt.seed = cfg.seed;
    opt.cap = cfg.cap;
    Report const report = run_suite(suite, ng, opt);
    if (cfg.format == "json") {
      json j;
      j["group"] = ng.name;
      j["suite"] = suite;
      j["seed"] = cfg.seed;
      j["samples"] = cfg.samples;
      j["status"] = report.passed() ? "pass" : "fail";
      j["results"] = report.to_json();
      out << j.dump(2) << '\n';
    } else {
      out << report.to_text();
      out << (report.passed() ? "PASS" : "FAIL") << ' ' << ng.name << ' '
          << suite << '\n';
    }
    return report.passed() ? ok : check_failed;
  }

  inline int cmd_dot(Config const& cfg, std::optional<std::string> element,
                     std::optional<std::string> word, bool cayley,
                     std::string const& model, std::string const& out_path,
                     std::ostream& out) {
    auto const ng = load_named(cfg.group_file);
    std::string text;
    if (cayley) {
      GeneratorSet const gens
          = cfg.generators == "extended"
                ? extend_generators(ng.group.group, ng.group.gens)
                : ng.group.gens;
      CayleyGraph const cay(ng.group.group, gens);
      text = cay.to_dot(cay.full(), "Cay(" + ng.name + ")");
    } else {
      Expansion const fam = family(ng.group, model, cfg.generators);
      Element const   e = element ? fam.parse(*element)
                                  : fam.eval_word(parse_word(fam.gens(), *word));
      text = fam.cayley().to_dot(e.graph, fam.format(e));
    }
    if (out_path.empty() || out_path == "-") {
      out << text;
      return ok;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
      throw Error(ErrorKind::invalid_input, "cannot write " + out_path);
    }
    f << text;
    return ok;
  }

  ////////////////////////////////////////////////////////////////////////

  // Parses argv and dispatches; errors go to `err` and select the exit code.
  inline int run(std::vector<std::string> args, std::ostream& out,
                 std::ostream& err) {
    CLI::App app{"Expansions of finite groups as inverse monoids"};
    app.require_subcommand(1);
    Config cfg;

    auto common = [&](CLI::App* sub) {
      sub->add_option("group", cfg.group_file, "Group JSON file")
          ->required();
      sub->add_option("--generators", cfg.generators,
                      "Generator set: plain (X) or extended (X and barred G)")
          ->check(CLI::IsMember({"plain", "extended"}));
      sub->add_option("--cap", cfg.cap, "Enumeration cap")
          ->check(CLI::PositiveNumber);
    };

    std::optional<std::string> word, term, element;
    std::string                model = "group";

    auto* eval = app.add_subcommand("eval", "Evaluate a word or enriched term");
    common(eval);
    auto* wopt = eval->add_option("--word", word, "Word over the letters");
    auto* topt = eval->add_option("--term", term, "Term in (., ^-1, m, 1)");
    wopt->excludes(topt);
    eval->add_option("--model", model, "group, M, F or Mwedge")
        ->check(CLI::IsMember({"group", "M", "F", "Mwedge"}));

    std::string by = "graphs";
    std::size_t max_len = 8;
    bool        list = false;
    auto* en = app.add_subcommand("enumerate", "Count (and list) elements");
    common(en);
    en->add_option("--model", model, "M, F or Mwedge")
        ->check(CLI::IsMember({"M", "F", "Mwedge"}));
    en->add_option("--by", by, "graphs or words")
        ->check(CLI::IsMember({"graphs", "words"}));
    en->add_option("--max-len", max_len, "Word length for --by words");
    en->add_flag("--list", list, "Print every element");

    std::string suite = "all";
    auto*       check = app.add_subcommand("check", "Run a verification suite");
    common(check);
    check->add_option("--suite", suite, "Suite name")
        ->check(CLI::IsMember(suite_names()));
    check->add_option("--samples", cfg.samples, "Samples for sampled checks")
        ->check(CLI::PositiveNumber);
    check->add_option("--seed", cfg.seed, "Random seed");
    check->add_option("--format", cfg.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    bool        cayley = false;
    std::string out_path;
    auto*       dot = app.add_subcommand("dot", "Render a subgraph as DOT");
    common(dot);
    auto* eopt = dot->add_option("--element", element, "Element text form");
    auto* dwopt = dot->add_option("--word", word, "Word to evaluate");
    auto* copt = dot->add_flag("--cayley", cayley, "The whole Cayley graph");
    eopt->excludes(dwopt)->excludes(copt);
    dwopt->excludes(copt);
    dot->add_option("--model", model, "M, F or Mwedge")
        ->check(CLI::IsMember({"M", "F", "Mwedge"}));
    dot->add_option("--out", out_path, "Output file (default stdout)");

    try {
      std::reverse(args.begin(), args.end());
      app.parse(args);
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return ok;
    } catch (CLI::CallForAllHelp const&) {
      out << app.help("", CLI::AppFormatMode::All);
      return ok;
    } catch (CLI::ParseError const& e) {
      err << e.what() << '\n';
      return syntax;
    }

    try {
      if (eval->parsed()) {
        if (!word && !term) {
          err << "eval needs --word or --term\n";
          return syntax;
        }
        return cmd_eval(cfg, word, term, model, out);
      }
      if (en->parsed()) {
        return cmd_enumerate(cfg, model == "group" ? "M" : model, by, max_len,
                             list, out);
      }
      if (check->parsed()) {
        return cmd_check(cfg, suite, out);
      }
      if (!element && !word && !cayley) {
        err << "dot needs --element, --word or --cayley\n";
        return syntax;
      }
      return cmd_dot(cfg, element, word, cayley, model == "group" ? "M" : model,
                     out_path, out);
    } catch (Error const& e) {
      err << e.what() << '\n';
      return exit_code(e);
    }
  }

  inline int run(int argc, char const* const* argv, std::ostream& out,
                 std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) {
      args.emplace_back(argv[i]);
    }
    return run(std::move(args), out, err);
  }

}  // namespace fexp::cli

#endif  // FEXP_CLI_HPP_
