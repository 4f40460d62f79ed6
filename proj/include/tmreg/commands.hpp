// The subcommands of the tmreg tool, written against streams so they can be
// driven from tests as well as from main().

#ifndef TMREG_COMMANDS_HPP_
#define TMREG_COMMANDS_HPP_

#include <cstddef>   // for size_t
#include <optional>  // for optional
#include <ostream>   // for ostream
#include <string>    // for string
#include <vector>    // for vector

#include "decomposition.hpp"
#include "errors.hpp"
#include "io.hpp"
#include "kernel.hpp"
#include "membership.hpp"
#include "oracle.hpp"
#include "regularity.hpp"
#include "set_partition.hpp"
#include "sweep.hpp"
#include "transformation.hpp"

namespace tmreg {

  namespace exit_code {
    inline constexpr int ok            = 0;
    inline constexpr int parse_error   = 1;
    inline constexpr int not_in_monoid = 2;
    inline constexpr int mismatch      = 3;
    inline constexpr int cap_exceeded  = 4;
  }  // namespace exit_code

  struct AnalyzeOptions {
    std::string                instance_path;
    std::string                monoid = "full";
    bool                       oracle = false;
    bool                       json   = false;
    std::optional<std::size_t> cap;
  };

  struct VerifyOptions {
    std::size_t                n = 1;
    std::string                monoid;
    std::optional<std::string> partition;
    bool                       all_partitions = false;
    bool                       oracle         = false;
    bool                       json           = false;
    std::optional<std::size_t> cap;
  };

  struct CountUnitsOptions {
    std::string                instance_path;
    bool                       oracle = false;
    bool                       json   = false;
    std::optional<std::size_t> cap;
  };

  struct EnumerateOptions {
    std::size_t                n = 1;
    std::string                monoid;
    std::optional<std::string> partition;
    bool                       json = false;
    std::optional<std::size_t> cap;
  };

  namespace detail {

    inline MonoidId monoid_for(MonoidTag tag, SetPartition const& p) {
      return is_partition_relative(tag) ? MonoidId(tag, p) : MonoidId(tag);
    }

    inline std::string yes_no(bool b) {
      return b ? "yes" : "no";
    }

    inline std::string yes_no(std::optional<bool> const& b) {
      return b ? yes_no(*b) : "undecided";
    }

    inline std::string point_set(std::vector<point_type> const& xs) {
      std::string out = "{";
      for (std::size_t k = 0; k < xs.size(); ++k) {
        out += (k == 0 ? "" : ",") + std::to_string(xs[k]);
      }
      return out + "}";
    }

    inline void print_report(std::ostream&            out,
                             std::string const&       title,
                             RegularityReport const&  r) {
      out << title << " (" << to_string(r.monoid.tag()) << ")\n";
      out << "  regular: " << yes_no(r.regular) << "\n";
      out << "  unit-regular: " << yes_no(r.unit_regular) << "\n";
      if (r.witness) {
        out << "  witness: " << *r.witness << "\n";
      }
      for (auto const& c : r.certificate.choices) {
        out << "  block " << c.image_block << " <- block " << c.source_block
            << ": cross-section " << point_set(c.cross_section) << ", filler {";
        for (std::size_t k = 0; k < c.filler.size(); ++k) {
          out << (k == 0 ? "" : ",") << c.filler[k].first << "->"
              << c.filler[k].second;
        }
        out << "}\n";
      }
      for (auto const& l : r.certificate.leftovers) {
        out << "  leftover block " << l.image_block << " <- block "
            << l.source_block << "\n";
      }
      if (r.failed_condition) {
        out << "  failed condition: " << to_string(*r.failed_condition) << "\n";
      }
    }

    inline std::vector<MonoidTag> partition_tags() {
      return {MonoidTag::TXP,
              MonoidTag::SigmaXP,
              MonoidTag::GammaXP,
              MonoidTag::TEStar,
              MonoidTag::OmegaXP,
              MonoidTag::SXP};
    }

    template <typename Body>
    int guarded(std::ostream& err, Body&& body) {
      try {
        return body();
      } catch (ParseError const& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::parse_error;
      } catch (NotInMonoid const& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::not_in_monoid;
      } catch (CapExceeded const& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::cap_exceeded;
      } catch (InvalidArgument const& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::parse_error;
      }
    }
  }  // namespace detail

  //! Prints kernel data, memberships, the character and block maps, and the
  //! decisions for the chosen monoid.
  inline int cmd_analyze(AnalyzeOptions const& opts,
                         std::ostream&         out,
                         std::ostream&         err) {
    return detail::guarded(err, [&]() -> int {
      auto const inst = load_instance(opts.instance_path);
      auto const tag  = monoid_tag_from_string(opts.monoid);
      auto const& f   = inst.map;
      auto const& p   = inst.partition;
      auto const  m   = detail::monoid_for(tag, p);
      if (!is_member(f, m)) {
        throw NotInMonoid(to_string(f) + " is not a member of " + opts.monoid);
      }

      auto const k     = kernel_data(f);
      auto const units = count_unit_inner_inverses(f);
      std::optional<BlockDecomposition> d;
      std::optional<std::size_t>        offending;
      try {
        d = decompose(f, p);
      } catch (NotPartitionPreserving const& e) {
        offending = e.block();
      }
      auto const dr = decide_regular(f, m);
      auto const du = decide_unit_regular(f, m);
      std::optional<OracleResult> o;
      if (opts.oracle) {
        o = dr ? oracle_regular(f, m, opts.cap) : oracle_unit_regular(f, m, opts.cap);
      }

      if (opts.json) {
        json membership = json::object();
        for (auto t : detail::partition_tags()) {
          MonoidId const mt(t, p);
          json           entry = {{"definition", is_member(f, mt)}};
          entry["character"]   = d ? json(is_member_by_character(f, mt)) : json(nullptr);
          membership[to_string(t)] = entry;
        }
        json doc = {{"n", f.degree()},
                    {"partition", to_json(p)},
                    {"element", to_json(f)},
                    {"kernel", to_json(k)},
                    {"semi_balanced", k.collapse == k.defect},
                    {"unit_inner_inverse_count", units},
                    {"membership", membership},
                    {"decomposition", d ? to_json(*d) : json(nullptr)},
                    {"not_partition_preserving_block",
                     offending ? json(*offending) : json(nullptr)},
                    {"monoid", opts.monoid},
                    {"regular_report", dr ? to_json(*dr) : json(nullptr)},
                    {"unit_regular_report", to_json(du)},
                    {"oracle", o ? to_json(*o) : json(nullptr)}};
        out << doc.dump(2) << "\n";
        return exit_code::ok;
      }

      out << "element: " << f << "\n";
      out << "partition: " << p << "\n";
      out << "kernel classes:";
      for (auto const& c : k.classes) {
        out << " " << c.image << ":" << detail::point_set(c.members);
      }
      out << "\n";
      out << "cross-section: " << detail::point_set(k.cross_section) << "\n";
      out << "image: " << detail::point_set(k.image) << "\n";
      out << "collapse: " << k.collapse << "\n";
      out << "defect: " << k.defect << "\n";
      out << "semi-balanced: " << detail::yes_no(k.collapse == k.defect) << "\n";
      out << "unit inner inverses |U(f)|: " << units << "\n";
      out << "membership (definition / character):\n";
      for (auto t : detail::partition_tags()) {
        MonoidId const mt(t, p);
        out << "  " << to_string(t) << ": " << detail::yes_no(is_member(f, mt))
            << " / "
            << (d ? detail::yes_no(is_member_by_character(f, mt)) : "n/a")
            << "\n";
      }
      if (d) {
        out << "character: " << d->character << "\n";
        for (std::size_t i = 0; i < d->block_maps.size(); ++i) {
          auto const& fi = d->block_maps[i];
          auto const  s  = block_map_stats(*d, i);
          out << "  f_" << i << ": X_" << fi.source << " -> X_" << fi.target
              << " {";
          for (std::size_t t = 0; t < fi.pairs.size(); ++t) {
            out << (t == 0 ? "" : ",") << fi.pairs[t].first << "->"
                << fi.pairs[t].second;
          }
          out << "} collapse " << s.collapse << ", defect " << s.defect
              << ", injective " << detail::yes_no(s.injective)
              << ", surjective " << detail::yes_no(s.surjective) << "\n";
        }
      } else {
        out << "character: none (block " << *offending
            << " is split across blocks)\n";
      }
      if (dr) {
        detail::print_report(out, "regularity", *dr);
      }
      detail::print_report(out, "unit-regularity", du);
      if (o) {
        out << "oracle ("
            << (o->scope == OracleScope::WholeMonoid ? "whole monoid" : "unit group")
            << "): regular " << detail::yes_no(o->regular) << ", unit-regular "
            << detail::yes_no(o->unit_regular) << ", unit inner inverses "
            << o->unit_inner_inverses.size() << "\n";
      }
      return exit_code::ok;
    });
  }

  //! Sweeps a monoid, optionally against the oracle. Exit code 3 on any
  //! mismatch or invalid witness.
  inline int cmd_verify(VerifyOptions const& opts, std::ostream& out, std::ostream& err) {
    return detail::guarded(err, [&]() -> int {
      SweepOptions s;
      s.monoid = monoid_tag_from_string(opts.monoid);
      s.n      = opts.n;
      s.oracle = opts.oracle;
      s.cap    = opts.cap;
      if (is_partition_relative(s.monoid)) {
        if (opts.partition && opts.all_partitions) {
          throw ParseError("--partition and --all-partitions are exclusive");
        }
        if (opts.partition) {
          s.partition = parse_partition(*opts.partition);
        } else if (!opts.all_partitions) {
          throw ParseError("monoid " + opts.monoid
                           + " needs --partition or --all-partitions");
        }
      }
      auto const report = run_sweep(s);
      if (opts.json) {
        out << to_json(report).dump(2) << "\n";
      } else {
        out << "monoid: " << opts.monoid << "\n";
        out << "n: " << report.n << "\n";
        out << "partitions checked: " << report.partitions_checked << "\n";
        out << "elements checked: " << report.elements_checked << "\n";
        out << "oracle: " << detail::yes_no(report.oracle) << "\n";
        out << "mismatches: " << report.mismatches.size() << "\n";
        for (auto const& m : report.mismatches) {
          out << "  " << (m.partition ? to_string(*m.partition) : "-") << " "
              << m.element << " regular " << detail::yes_no(m.decider_regular)
              << "/" << detail::yes_no(m.oracle_regular) << " unit-regular "
              << detail::yes_no(m.decider_unit_regular) << "/"
              << detail::yes_no(m.oracle_unit_regular) << " witness "
              << (m.witness_valid ? "ok" : "INVALID") << "\n";
        }
      }
      err << "wall time: " << report.wall_time_seconds << " s\n";
      return report.agreed() ? exit_code::ok : exit_code::mismatch;
    });
  }

  //! Prints |U(f)| from the counting formula, and with --oracle also the
  //! brute-force count over S(X). Exit code 3 if they differ.
  inline int cmd_count_units(CountUnitsOptions const& opts,
                             std::ostream&            out,
                             std::ostream&            err) {
    return detail::guarded(err, [&]() -> int {
      auto const inst = load_instance(opts.instance_path);
      if (inst.partition.number_of_blocks() != inst.map.degree()) {
        throw ParseError("count-units needs a discrete or absent partition");
      }
      auto const formula = count_unit_inner_inverses(inst.map);
      std::optional<std::uint64_t> brute;
      if (opts.oracle) {
        brute = oracle_unit_regular(inst.map, MonoidId(MonoidTag::FullT), opts.cap)
                    .unit_inner_inverses.size();
      }
      bool const agree = !brute || *brute == formula;
      if (opts.json) {
        json doc = {{"element", to_json(inst.map)},
                    {"formula", formula},
                    {"oracle", brute ? json(*brute) : json(nullptr)},
                    {"agree", agree}};
        out << doc.dump(2) << "\n";
      } else if (brute) {
        out << formula << " / " << *brute << "\n";
      } else {
        out << formula << "\n";
      }
      return agree ? exit_code::ok : exit_code::mismatch;
    });
  }

  //! Lists the members of a monoid, one image list per line.
  inline int cmd_enumerate(EnumerateOptions const& opts,
                           std::ostream&           out,
                           std::ostream&           err) {
    return detail::guarded(err, [&]() -> int {
      auto const tag = monoid_tag_from_string(opts.monoid);
      std::optional<SetPartition> p;
      if (is_partition_relative(tag)) {
        if (!opts.partition) {
          throw ParseError("monoid " + opts.monoid + " needs --partition");
        }
        p = parse_partition(*opts.partition);
      }
      auto const m = p ? MonoidId(tag, *p) : MonoidId(tag);
      if (opts.json) {
        json elements = json::array();
        for_each_member(
            m, opts.n, [&](Transformation const& f) { elements.push_back(to_json(f)); },
            opts.cap);
        json doc = {{"monoid", opts.monoid},
                    {"n", opts.n},
                    {"partition", p ? to_json(*p) : json(nullptr)},
                    {"count", elements.size()},
                    {"elements", elements}};
        out << doc.dump(2) << "\n";
      } else {
        for_each_member(
            m, opts.n, [&](Transformation const& f) { out << f << "\n"; }, opts.cap);
      }
      return exit_code::ok;
    });
  }

}  // namespace tmreg

#endif  // TMREG_COMMANDS_HPP_
