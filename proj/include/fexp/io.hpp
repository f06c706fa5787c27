#ifndef FEXP_IO_HPP_
#define FEXP_IO_HPP_

#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "error.hpp"
#include "group.hpp"
#include "monoid.hpp"

namespace fexp {

  using json = nlohmann::ordered_json;

  namespace detail {

    template <typename T>
    T json_get(json const& j, char const* key) {
      if (!j.is_object() || !j.contains(key)) {
        throw Error(ErrorKind::invalid_input,
                    std::string("missing field '") + key + "'");
      }
      try {
        return j.at(key).get<T>();
      } catch (nlohmann::json::exception const& e) {
        throw Error(ErrorKind::invalid_input,
                    std::string("field '") + key + "': " + e.what());
      }
    }

  }  // namespace detail

  // Either {"name", "elements", "table", "generators": {name: index}} or
  // {"points", "generators": {name: [image, ...]}}. Generator order is the
  // order of the keys in the file.
  inline GeneratedGroup group_from_json(json const& j) {
    if (!j.is_object()) {
      throw Error(ErrorKind::invalid_input, "group file is not an object");
    }
    if (j.contains("points")) {
      auto const points = detail::json_get<std::size_t>(j, "points");
      auto const gens = detail::json_get<json>(j, "generators");
      std::vector<std::pair<std::string, Permutation>> perms;
      for (auto const& [name, p] : gens.items()) {
        try {
          perms.emplace_back(name, p.get<Permutation>());
        } catch (nlohmann::json::exception const& e) {
          throw Error(ErrorKind::invalid_input,
                      "generator " + name + ": " + e.what());
        }
      }
      return from_permutations(points, perms);
    }
    auto const table = detail::json_get<std::vector<std::vector<elem_t>>>(j, "table");
    std::vector<std::string> names;
    if (j.contains("elements")) {
      names = detail::json_get<std::vector<std::string>>(j, "elements");
    }
    std::vector<std::pair<std::string, elem_t>> gens;
    json const gen_obj = detail::json_get<json>(j, "generators");
    for (auto const& [name, v] : gen_obj.items()) {
      if (!v.is_number_unsigned()) {
        throw Error(ErrorKind::invalid_input,
                    "generator " + name + " is not an element index");
      }
      gens.emplace_back(name, v.get<elem_t>());
    }
    return from_cayley_table(table, gens, std::move(names));
  }

  inline json group_to_json(GeneratedGroup const& gg, std::string const& name) {
    json j;
    j["name"] = name;
    j["elements"] = gg.group.names();
    j["table"] = gg.group.table();
    json gens = json::object();
    for (auto const& l : gg.gens.letters()) {
      gens[l.name] = l.image;
    }
    j["generators"] = std::move(gens);
    return j;
  }

  inline json parse_json_text(std::string const& text) {
    try {
      return json::parse(text);
    } catch (nlohmann::json::parse_error const& e) {
      throw Error(ErrorKind::invalid_input, e.what());
    }
  }

  inline std::string read_file(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw Error(ErrorKind::invalid_input, "cannot open " + path);
    }
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }

  inline GeneratedGroup load_group(std::string const& path) {
    return group_from_json(parse_json_text(read_file(path)));
  }

  // {"order", "table", "inv", "identity", "generators": {name: index}},
  // with optional "elements" names.
  inline FiniteInverseMonoid monoid_from_json(json const& j) {
    auto const order = detail::json_get<std::size_t>(j, "order");
    auto table = detail::json_get<std::vector<std::vector<std::size_t>>>(j, "table");
    auto inv = detail::json_get<std::vector<std::size_t>>(j, "inv");
    auto const id = detail::json_get<std::size_t>(j, "identity");
    if (table.size() != order) {
      throw Error(ErrorKind::invalid_monoid, "table size != order");
    }
    FiniteInverseMonoid::gen_map_type gens;
    json const gen_obj = detail::json_get<json>(j, "generators");
    for (auto const& [name, v] : gen_obj.items()) {
      if (!v.is_number_unsigned()) {
        throw Error(ErrorKind::invalid_monoid,
                    "generator " + name + " is not an element index");
      }
      gens.emplace_back(name, v.get<std::size_t>());
    }
    std::vector<std::string> names;
    if (j.contains("elements")) {
      names = detail::json_get<std::vector<std::string>>(j, "elements");
    }
    return FiniteInverseMonoid(std::move(table), std::move(inv), id,
                               std::move(gens), std::move(names));
  }

  inline json monoid_to_json(FiniteInverseMonoid const& s) {
    json j;
    j["order"] = s.order();
    j["table"] = s.table();
    j["inv"] = s.inverses();
    j["identity"] = s.identity();
    json gens = json::object();
    for (auto const& [name, v] : s.gens()) {
      gens[name] = v;
    }
    j["generators"] = std::move(gens);
    j["elements"] = s.names();
    return j;
  }

  inline FiniteInverseMonoid load_monoid(std::string const& path) {
    return monoid_from_json(parse_json_text(read_file(path)));
  }

}  // namespace fexp

#endif  // FEXP_IO_HPP_
