// Brute-force ground truth for regularity questions.
//
// Nothing here consults the characterizations in regularity.hpp: the oracle
// enumerates candidate inner inverses and checks fgf = f point by point.

#ifndef TMREG_ORACLE_HPP_
#define TMREG_ORACLE_HPP_

#include <cstddef>   // for size_t
#include <cstdint>   // for uint64_t
#include <optional>  // for optional
#include <vector>    // for vector

#include "errors.hpp"
#include "membership.hpp"
#include "transformation.hpp"

namespace tmreg {

  //! Default degree caps for oracle scans.
  inline constexpr std::size_t default_monoid_scan_cap = 5;
  inline constexpr std::size_t default_unit_scan_cap   = 7;

  enum class OracleScope {
    WholeMonoid,  // every element of the monoid was tried
    UnitGroup     // only the group of units was tried
  };

  struct OracleResult {
    OracleScope scope = OracleScope::WholeMonoid;
    //! With UnitGroup scope this is only ever established by a unit witness,
    //! so false there means "no unit inner inverse", not "not regular".
    bool                          regular      = false;
    bool                          unit_regular = false;
    std::uint64_t                 inner_inverses_found = 0;
    std::vector<Transformation>   unit_inner_inverses;
    std::optional<Transformation> first_witness;
  };

  namespace detail {
    inline bool is_inner_inverse(Transformation const& f,
                                 Transformation const& g) {
      for (std::size_t x = 0; x < f.degree(); ++x) {
        if (f[g[f[x]]] != f[x]) {
          return false;
        }
      }
      return true;
    }

    inline void require_member(Transformation const& f, MonoidId const& m) {
      if (!is_member(f, m)) {
        throw NotInMonoid(to_string(f) + " is not a member of "
                          + to_string(m.tag()));
      }
    }
  }  // namespace detail

  //! Scans every g in m for fgf = f. Units of m found along the way are
  //! recorded as well, so `unit_regular` is exact here too.
  [[nodiscard]] inline OracleResult
  oracle_regular(Transformation const&      f,
                 MonoidId const&            m,
                 std::optional<std::size_t> cap = {}) {
    detail::require_member(f, m);
    auto const limit = cap.value_or(is_permutation_monoid(m.tag())
                                        ? default_unit_scan_cap
                                        : default_monoid_scan_cap);
    if (f.degree() > limit) {
      throw CapExceeded(f.degree(), limit);
    }
    auto const   units = m.unit_group();
    OracleResult out;
    out.scope = OracleScope::WholeMonoid;
    for_each_member(
        m,
        f.degree(),
        [&](Transformation const& g) {
          if (!detail::is_inner_inverse(f, g)) {
            return;
          }
          ++out.inner_inverses_found;
          if (!out.first_witness) {
            out.first_witness = g;
          }
          if (is_member(g, units)) {
            out.unit_inner_inverses.push_back(g);
          }
        },
        limit);
    out.regular      = out.inner_inverses_found > 0;
    out.unit_regular = !out.unit_inner_inverses.empty();
    return out;
  }

  //! Scans the group of units of m (S(X) for T(X) and S(X), S(X, P) for every
  //! partition-relative monoid) for u with fuf = f.
  [[nodiscard]] inline OracleResult
  oracle_unit_regular(Transformation const&      f,
                      MonoidId const&            m,
                      std::optional<std::size_t> cap = {}) {
    detail::require_member(f, m);
    auto const limit = cap.value_or(default_unit_scan_cap);
    if (f.degree() > limit) {
      throw CapExceeded(f.degree(), limit);
    }
    OracleResult out;
    out.scope = OracleScope::UnitGroup;
    for_each_member(
        m.unit_group(),
        f.degree(),
        [&](Transformation const& u) {
          if (detail::is_inner_inverse(f, u)) {
            out.unit_inner_inverses.push_back(u);
          }
        },
        limit);
    out.inner_inverses_found = out.unit_inner_inverses.size();
    out.unit_regular         = !out.unit_inner_inverses.empty();
    out.regular              = out.unit_regular;
    if (out.unit_regular) {
      out.first_witness = out.unit_inner_inverses.front();
    }
    return out;
  }

  //! If fgf = f, checks that im(fg) meets every kernel class of f exactly
  //! once; vacuously true otherwise.
  [[nodiscard]] inline bool verify_cross_section_lemma(Transformation const& f,
                                                       Transformation const& g) {
    if (f.degree() != g.degree()) {
      throw InvalidArgument("degrees differ");
    }
    if (!detail::is_inner_inverse(f, g)) {
      return true;
    }
    auto const n = f.degree();
    // hits[y] = |im(fg) intersect y f^{-1}|
    std::vector<std::size_t> hits(n, 0);
    std::vector<bool>        in_fg(n, false);
    for (std::size_t x = 0; x < n; ++x) {
      in_fg[g[f[x]]] = true;
    }
    std::vector<bool> in_f(n, false);
    for (std::size_t z = 0; z < n; ++z) {
      in_f[f[z]] = true;
      if (in_fg[z]) {
        ++hits[f[z]];
      }
    }
    for (std::size_t y = 0; y < n; ++y) {
      if (in_f[y] && hits[y] != 1) {
        return false;
      }
    }
    return true;
  }

}  // namespace tmreg

#endif  // TMREG_ORACLE_HPP_
