// Exhaustive comparison of the deciders against the brute-force oracle.

#ifndef TMREG_SWEEP_HPP_
#define TMREG_SWEEP_HPP_

#include <algorithm>  // for sort
#include <chrono>     // for steady_clock
#include <cstddef>    // for size_t
#include <cstdint>    // for uint64_t
#include <optional>   // for optional
#include <tuple>      // for tie
#include <vector>     // for vector

#include "io.hpp"
#include "membership.hpp"
#include "oracle.hpp"
#include "regularity.hpp"
#include "set_partition.hpp"
#include "transformation.hpp"

namespace tmreg {

  //! One element on which a decider and the oracle disagree, or whose
  //! witness fails to check out.
  struct Mismatch {
    std::optional<SetPartition> partition;
    Transformation              element;
    std::optional<bool>         decider_regular;
    std::optional<bool>         oracle_regular;
    std::optional<bool>         decider_unit_regular;
    std::optional<bool>         oracle_unit_regular;
    bool                        witness_valid = true;
  };

  struct SweepReport {
    MonoidTag                   monoid;
    std::size_t                 n = 0;
    bool                        all_partitions = false;
    std::optional<SetPartition> partition;  // the single partition swept
    bool                        oracle = false;
    std::uint64_t               partitions_checked = 0;
    std::uint64_t               elements_checked   = 0;
    std::vector<Mismatch>       mismatches;
    double                      wall_time_seconds = 0;

    [[nodiscard]] bool agreed() const noexcept {
      return mismatches.empty();
    }
  };

  struct SweepOptions {
    MonoidTag                  monoid = MonoidTag::FullT;
    std::size_t                n      = 1;
    //! Empty means every partition of n (ignored for FullT and SymmetricS).
    std::optional<SetPartition> partition;
    bool                       oracle = true;
    std::optional<std::size_t> cap;
  };

  namespace detail {
    inline void sweep_monoid(MonoidId const& m, SweepOptions const& opts, SweepReport& out) {
      for_each_member(
          m,
          opts.n,
          [&](Transformation const& f) {
            ++out.elements_checked;
            auto const dr = decide_regular(f, m);
            auto const du = decide_unit_regular(f, m);
            Mismatch   mm{m.partition(), f, {}, {}, du.unit_regular, {}, true};
            if (dr) {
              mm.decider_regular = dr->regular;
            } else if (du.regular) {
              mm.decider_regular = du.regular;
            }
            mm.witness_valid
                = witness_is_valid(du) && (!dr || witness_is_valid(*dr));
            bool bad = !mm.witness_valid;
            if (opts.oracle) {
              if (dr) {
                auto const o           = oracle_regular(f, m, opts.cap);
                mm.oracle_regular      = o.regular;
                mm.oracle_unit_regular = o.unit_regular;
              } else {
                auto const o           = oracle_unit_regular(f, m, opts.cap);
                mm.oracle_unit_regular = o.unit_regular;
                // a unit witness settles regularity
                if (o.unit_regular) {
                  mm.oracle_regular = true;
                }
              }
              if (dr && mm.decider_regular != mm.oracle_regular) {
                bad = true;
              }
              if (mm.decider_unit_regular != mm.oracle_unit_regular) {
                bad = true;
              }
            }
            if (bad) {
              out.mismatches.push_back(std::move(mm));
            }
          },
          opts.cap);
    }
  }  // namespace detail

  //! Runs every decider on every member of the monoid and, with `oracle`,
  //! compares each defined decision with brute force. Mismatches are sorted
  //! by partition and then element.
  [[nodiscard]] inline SweepReport run_sweep(SweepOptions const& opts) {
    auto const  start = std::chrono::steady_clock::now();
    SweepReport out;
    out.monoid    = opts.monoid;
    out.n         = opts.n;
    out.oracle    = opts.oracle;
    out.partition = opts.partition;
    if (!is_partition_relative(opts.monoid)) {
      out.partition.reset();
      ++out.partitions_checked;
      detail::sweep_monoid(MonoidId(opts.monoid), opts, out);
    } else if (opts.partition) {
      if (opts.partition->degree() != opts.n) {
        throw InvalidArgument("partition degree does not match n");
      }
      ++out.partitions_checked;
      detail::sweep_monoid(MonoidId(opts.monoid, *opts.partition), opts, out);
    } else {
      out.all_partitions = true;
      for (auto const& p : all_set_partitions(opts.n)) {
        ++out.partitions_checked;
        detail::sweep_monoid(MonoidId(opts.monoid, p), opts, out);
      }
    }
    std::sort(out.mismatches.begin(),
              out.mismatches.end(),
              [](Mismatch const& a, Mismatch const& b) {
                std::vector<std::size_t> const none;
                auto const& ka = a.partition ? a.partition->rgs() : none;
                auto const& kb = b.partition ? b.partition->rgs() : none;
                return std::tie(ka, a.element) < std::tie(kb, b.element);
              });
    out.wall_time_seconds = std::chrono::duration<double>(
                                std::chrono::steady_clock::now() - start)
                                .count();
    return out;
  }

  //! The machine-readable form of a sweep. Wall time is left out so that the
  //! same sweep always serializes to the same bytes.
  [[nodiscard]] inline json to_json(SweepReport const& r) {
    json mismatches = json::array();
    for (auto const& m : r.mismatches) {
      mismatches.push_back(
          {{"partition", m.partition ? to_json(*m.partition) : json(nullptr)},
           {"element", to_json(m.element)},
           {"decider_regular", to_json(m.decider_regular)},
           {"oracle_regular", to_json(m.oracle_regular)},
           {"decider_unit_regular", to_json(m.decider_unit_regular)},
           {"oracle_unit_regular", to_json(m.oracle_unit_regular)},
           {"witness_valid", m.witness_valid}});
    }
    json partition = nullptr;
    if (r.all_partitions) {
      partition = "all";
    } else if (r.partition) {
      partition = to_json(*r.partition);
    }
    return {{"monoid", to_string(r.monoid)},
            {"n", r.n},
            {"partition", partition},
            {"oracle", r.oracle},
            {"partitions_checked", r.partitions_checked},
            {"elements_checked", r.elements_checked},
            {"mismatch_count", r.mismatches.size()},
            {"mismatches", mismatches}};
  }

}  // namespace tmreg

#endif  // TMREG_SWEEP_HPP_
