// Instance files and JSON rendering of reports.
//
// An instance file is a JSON object
//
//   {"n": 4, "partition": [[0, 1], [2, 3]], "map": [0, 0, 0, 1]}
//
// with 0-indexed points. "partition" may be omitted, meaning singleton
// blocks. Every key must be present with the right type; unknown keys are
// rejected so typos do not silently change the instance.

#ifndef TMREG_IO_HPP_
#define TMREG_IO_HPP_

#include <cstddef>   // for size_t
#include <fstream>   // for ifstream
#include <optional>  // for optional
#include <sstream>   // for stringstream
#include <string>    // for string
#include <vector>    // for vector

#include "json.hpp"

#include "decomposition.hpp"
#include "errors.hpp"
#include "kernel.hpp"
#include "membership.hpp"
#include "oracle.hpp"
#include "regularity.hpp"
#include "set_partition.hpp"
#include "transformation.hpp"

namespace tmreg {

  using json = nlohmann::ordered_json;

  struct Instance {
    Transformation map;
    SetPartition   partition;
    bool           partition_given = false;
  };

  namespace detail {
    inline std::vector<point_type> points_from_json(json const& j,
                                                    char const* what) {
      if (!j.is_array()) {
        throw ParseError(std::string(what) + " must be a list of integers");
      }
      std::vector<point_type> out;
      for (auto const& v : j) {
        if (!v.is_number_integer() || v.get<long long>() < 0
            || v.get<long long>() > 0xFFFFFFFFLL) {
          throw ParseError(std::string(what)
                           + " must contain nonnegative integers");
        }
        out.push_back(static_cast<point_type>(v.get<long long>()));
      }
      return out;
    }
  }  // namespace detail

  [[nodiscard]] inline SetPartition partition_from_json(json const& j) {
    if (!j.is_array()) {
      throw ParseError("partition must be a list of blocks");
    }
    std::vector<std::vector<point_type>> blocks;
    for (auto const& b : j) {
      blocks.push_back(detail::points_from_json(b, "partition block"));
    }
    try {
      return SetPartition(std::move(blocks));
    } catch (InvalidArgument const& e) {
      throw ParseError(e.what());
    }
  }

  //! Parses a partition written as JSON, e.g. "[[0,1],[2,3]]".
  [[nodiscard]] inline SetPartition parse_partition(std::string const& text) {
    json j;
    try {
      j = json::parse(text);
    } catch (json::parse_error const& e) {
      throw ParseError(std::string("partition is not valid JSON: ") + e.what());
    }
    return partition_from_json(j);
  }

  [[nodiscard]] inline Instance parse_instance(std::string const& text) {
    json doc;
    try {
      doc = json::parse(text);
    } catch (json::parse_error const& e) {
      throw ParseError(std::string("instance is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) {
      throw ParseError("instance must be a JSON object");
    }
    for (auto const& [key, value] : doc.items()) {
      if (key != "n" && key != "partition" && key != "map") {
        throw ParseError("unknown instance key '" + key + "'");
      }
    }
    if (!doc.contains("n") || !doc["n"].is_number_integer()
        || doc["n"].get<long long>() < 1) {
      throw ParseError("instance needs a positive integer 'n'");
    }
    auto const n = static_cast<std::size_t>(doc["n"].get<long long>());
    if (!doc.contains("map")) {
      throw ParseError("instance needs a 'map'");
    }
    auto images = detail::points_from_json(doc["map"], "map");
    if (images.size() != n) {
      throw ParseError("map has " + std::to_string(images.size())
                       + " entries but n = " + std::to_string(n));
    }
    std::optional<Transformation> f;
    try {
      f.emplace(std::move(images));
    } catch (InvalidArgument const& e) {
      throw ParseError(e.what());
    }
    bool const given = doc.contains("partition");
    auto       p = given ? partition_from_json(doc["partition"]) : SetPartition::discrete(n);
    if (p.degree() != n) {
      throw ParseError("partition covers " + std::to_string(p.degree())
                       + " points but n = " + std::to_string(n));
    }
    return {std::move(*f), std::move(p), given};
  }

  [[nodiscard]] inline Instance load_instance(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw ParseError("cannot open instance file '" + path + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_instance(buffer.str());
  }

  [[nodiscard]] inline json to_json(Transformation const& f) {
    json out = json::array();
    for (auto y : f.images()) {
      out.push_back(y);
    }
    return out;
  }

  [[nodiscard]] inline json to_json(SetPartition const& p) {
    json out = json::array();
    for (auto const& b : p.blocks()) {
      out.push_back(b);
    }
    return out;
  }

  [[nodiscard]] inline json to_json(KernelData const& k) {
    json classes = json::array();
    for (auto const& c : k.classes) {
      classes.push_back({{"image", c.image}, {"members", c.members}});
    }
    return {{"classes", classes},
            {"cross_section", k.cross_section},
            {"image", k.image},
            {"collapse", k.collapse},
            {"defect", k.defect}};
  }

  [[nodiscard]] inline json to_json(BlockDecomposition const& d) {
    json maps = json::array();
    for (std::size_t i = 0; i < d.block_maps.size(); ++i) {
      auto const& fi = d.block_maps[i];
      auto const  s  = block_map_stats(d, i);
      json        pairs = json::array();
      for (auto const& [x, y] : fi.pairs) {
        pairs.push_back({x, y});
      }
      maps.push_back({{"source", fi.source},
                      {"target", fi.target},
                      {"pairs", pairs},
                      {"collapse", s.collapse},
                      {"defect", s.defect},
                      {"injective", s.injective},
                      {"surjective", s.surjective}});
    }
    return {{"character", to_json(d.character)}, {"block_maps", maps}};
  }

  [[nodiscard]] inline json to_json(std::optional<bool> const& b) {
    return b ? json(*b) : json(nullptr);
  }

  [[nodiscard]] inline json to_json(Certificate const& c) {
    json choices = json::array();
    for (auto const& ch : c.choices) {
      json filler = json::array();
      for (auto const& [a, b] : ch.filler) {
        filler.push_back({a, b});
      }
      choices.push_back({{"image_block", ch.image_block},
                         {"source_block", ch.source_block},
                         {"cross_section", ch.cross_section},
                         {"filler", filler}});
    }
    json leftovers = json::array();
    for (auto const& l : c.leftovers) {
      leftovers.push_back(
          {{"image_block", l.image_block}, {"source_block", l.source_block}});
    }
    return {{"choices", choices}, {"leftovers", leftovers}};
  }

  [[nodiscard]] inline json to_json(RegularityReport const& r) {
    return {{"monoid", to_string(r.monoid.tag())},
            {"regular", to_json(r.regular)},
            {"unit_regular", to_json(r.unit_regular)},
            {"witness", r.witness ? to_json(*r.witness) : json(nullptr)},
            {"certificate", to_json(r.certificate)},
            {"failed_condition",
             r.failed_condition ? json(to_string(*r.failed_condition))
                                : json(nullptr)}};
  }

  [[nodiscard]] inline json to_json(OracleResult const& o) {
    json units = json::array();
    for (auto const& u : o.unit_inner_inverses) {
      units.push_back(to_json(u));
    }
    return {{"scope",
             o.scope == OracleScope::WholeMonoid ? "whole-monoid" : "unit-group"},
            {"regular", o.regular},
            {"unit_regular", o.unit_regular},
            {"inner_inverses_found", o.inner_inverses_found},
            {"unit_inner_inverses", units},
            {"first_witness",
             o.first_witness ? to_json(*o.first_witness) : json(nullptr)}};
  }

}  // namespace tmreg

#endif  // TMREG_IO_HPP_
