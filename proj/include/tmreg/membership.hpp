// Membership deciders and enumerators for the monoids studied here.
//
// For a partition P of X with induced equivalence E:
//
//   T(X, P)   maps sending every block into a block
//   Sigma     members of T(X, P) whose image meets every block
//   Gamma     members of T(X, P) sending every block onto a block
//   T_E*(X)   maps that preserve and reflect E
//   Omega     members of T(X, P) that are injective on every block
//   S(X, P)   the group of units of T(X, P)
//
// For finite X the injective and the surjective self-maps of X both coincide
// with S(X), so SymmetricS also stands for those two monoids.

#ifndef TMREG_MEMBERSHIP_HPP_
#define TMREG_MEMBERSHIP_HPP_

#include <cstddef>   // for size_t
#include <cstdint>   // for uint64_t
#include <optional>  // for optional
#include <string>    // for string
#include <utility>   // for move
#include <vector>    // for vector

#include "decomposition.hpp"
#include "errors.hpp"
#include "set_partition.hpp"
#include "transformation.hpp"

namespace tmreg {

  enum class MonoidTag {
    FullT,
    TXP,
    SigmaXP,
    GammaXP,
    TEStar,
    OmegaXP,
    SXP,
    SymmetricS
  };

  [[nodiscard]] constexpr bool is_partition_relative(MonoidTag t) noexcept {
    return t != MonoidTag::FullT && t != MonoidTag::SymmetricS;
  }

  //! Command-line spelling of a tag.
  [[nodiscard]] inline std::string to_string(MonoidTag t) {
    switch (t) {
      case MonoidTag::FullT:
        return "full";
      case MonoidTag::TXP:
        return "txp";
      case MonoidTag::SigmaXP:
        return "sigma";
      case MonoidTag::GammaXP:
        return "gamma-xp";
      case MonoidTag::TEStar:
        return "te-star";
      case MonoidTag::OmegaXP:
        return "omega-xp";
      case MonoidTag::SXP:
        return "sxp";
      case MonoidTag::SymmetricS:
        return "symmetric";
    }
    return "?";
  }

  [[nodiscard]] inline MonoidTag monoid_tag_from_string(std::string const& s) {
    for (auto t : {MonoidTag::FullT,
                   MonoidTag::TXP,
                   MonoidTag::SigmaXP,
                   MonoidTag::GammaXP,
                   MonoidTag::TEStar,
                   MonoidTag::OmegaXP,
                   MonoidTag::SXP,
                   MonoidTag::SymmetricS}) {
      if (to_string(t) == s) {
        return t;
      }
    }
    throw ParseError("unknown monoid '" + s + "'");
  }

  //! A monoid tag, with its partition when the tag is partition-relative.
  class MonoidId {
   public:
    explicit MonoidId(MonoidTag tag) : _tag(tag) {
      if (is_partition_relative(tag)) {
        throw InvalidArgument("monoid " + to_string(tag)
                              + " needs a partition");
      }
    }

    MonoidId(MonoidTag tag, SetPartition p) : _tag(tag), _partition(std::move(p)) {
      if (!is_partition_relative(tag)) {
        throw InvalidArgument("monoid " + to_string(tag)
                              + " does not take a partition");
      }
    }

    [[nodiscard]] MonoidTag tag() const noexcept {
      return _tag;
    }

    [[nodiscard]] std::optional<SetPartition> const& partition() const noexcept {
      return _partition;
    }

    //! The partition; throws for FullT and SymmetricS.
    [[nodiscard]] SetPartition const& blocks() const {
      if (!_partition) {
        throw InvalidArgument("monoid " + to_string(_tag)
                              + " has no partition");
      }
      return *_partition;
    }

    //! The group of units: S(X) or S(X, P).
    [[nodiscard]] MonoidId unit_group() const {
      return _partition ? MonoidId(MonoidTag::SXP, *_partition)
                        : MonoidId(MonoidTag::SymmetricS);
    }

   private:
    MonoidTag                   _tag;
    std::optional<SetPartition> _partition;
  };

  namespace detail {
    inline void check_degree(Transformation const& f, SetPartition const& p) {
      if (f.degree() != p.degree()) {
        throw InvalidArgument("transformation of degree "
                              + std::to_string(f.degree())
                              + " used with a partition of degree "
                              + std::to_string(p.degree()));
      }
    }

    // (x, y) in E  =>  (xf, yf) in E
    inline bool preserves(Transformation const& f, SetPartition const& p) {
      auto const n = f.degree();
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = x + 1; y < n; ++y) {
          if (p.same_block(x, y) && !p.same_block(f[x], f[y])) {
            return false;
          }
        }
      }
      return true;
    }
  }  // namespace detail

  //! Decides membership straight from the set-builder definitions, without
  //! going through the character.
  [[nodiscard]] inline bool is_member(Transformation const& f,
                                      MonoidId const&       m) {
    auto const n = f.degree();
    switch (m.tag()) {
      case MonoidTag::FullT:
        return true;
      case MonoidTag::SymmetricS:
        return f.is_permutation();
      default:
        break;
    }
    auto const& p = m.blocks();
    detail::check_degree(f, p);
    if (!detail::preserves(f, p)) {
      return false;
    }
    switch (m.tag()) {
      case MonoidTag::TXP:
        return true;
      case MonoidTag::SigmaXP: {
        // Xf meets every block
        std::vector<bool> hit(p.number_of_blocks(), false);
        for (std::size_t x = 0; x < n; ++x) {
          hit[p.block_of(f[x])] = true;
        }
        return std::find(hit.begin(), hit.end(), false) == hit.end();
      }
      case MonoidTag::GammaXP: {
        // X_i f = X_j for the block X_j containing X_i f
        for (std::size_t i = 0; i < p.number_of_blocks(); ++i) {
          auto const block = p.block(i);
          auto const j     = p.block_of(f[block.front()]);
          for (auto y : p.block(j)) {
            if (std::none_of(block.begin(), block.end(), [&](auto x) {
                  return f[x] == y;
                })) {
              return false;
            }
          }
        }
        return true;
      }
      case MonoidTag::TEStar: {
        // (x, y) in E <=> (xf, yf) in E
        for (std::size_t x = 0; x < n; ++x) {
          for (std::size_t y = x + 1; y < n; ++y) {
            if (p.same_block(x, y) != p.same_block(f[x], f[y])) {
              return false;
            }
          }
        }
        return true;
      }
      case MonoidTag::OmegaXP: {
        // x != y and (x, y) in E  =>  xf != yf
        for (std::size_t x = 0; x < n; ++x) {
          for (std::size_t y = x + 1; y < n; ++y) {
            if (p.same_block(x, y) && f[x] == f[y]) {
              return false;
            }
          }
        }
        return true;
      }
      case MonoidTag::SXP: {
        // f is a unit of T(X, P): a permutation whose inverse also preserves P
        return f.is_permutation() && detail::preserves(f.inverse(), p);
      }
      default:
        return false;
    }
  }

  //! Decides membership from chi^(f) and B(f, I):
  //!
  //!   Sigma    chi^(f) surjective
  //!   T_E*     chi^(f) injective
  //!   S(X, P)  chi^(f) bijective and every f_i bijective
  //!   Gamma    every f_i surjective
  //!   Omega    every f_i injective
  //!
  //! Throws NotPartitionPreserving when f is not in T(X, P).
  [[nodiscard]] inline bool is_member_by_character(Transformation const& f,
                                                   MonoidId const&       m) {
    switch (m.tag()) {
      case MonoidTag::FullT:
        return true;
      case MonoidTag::SymmetricS:
        return f.is_permutation();
      default:
        break;
    }
    auto const d   = decompose(f, m.blocks());
    auto const chi = d.character;
    auto const all_blocks = [&](auto pred) {
      for (std::size_t i = 0; i < d.block_maps.size(); ++i) {
        if (!pred(block_map_stats(d, i))) {
          return false;
        }
      }
      return true;
    };
    switch (m.tag()) {
      case MonoidTag::TXP:
        return true;
      case MonoidTag::SigmaXP:
        return chi.rank() == chi.degree();
      case MonoidTag::TEStar:
        return chi.is_permutation();
      case MonoidTag::SXP:
        return chi.is_permutation() && all_blocks([](auto const& s) {
                 return s.injective && s.surjective;
               });
      case MonoidTag::GammaXP:
        return all_blocks([](auto const& s) { return s.surjective; });
      case MonoidTag::OmegaXP:
        return all_blocks([](auto const& s) { return s.injective; });
      default:
        return false;
    }
  }

  //! Default enumeration caps.
  inline constexpr std::size_t default_enumeration_cap = 7;
  inline constexpr std::size_t default_permutation_enumeration_cap = 8;

  [[nodiscard]] constexpr bool is_permutation_monoid(MonoidTag t) noexcept {
    return t == MonoidTag::SXP || t == MonoidTag::SymmetricS;
  }

  //! A restartable stream over the members of a monoid of degree n, in
  //! lexicographic order of image lists.
  //!
  //! Partition-relative monoids are generated block by block: once the first
  //! (least) element of a block has an image, the rest of the block may only
  //! map into that image's block. Injectivity is also enforced during the
  //! search where the monoid demands it (globally for permutation monoids,
  //! blockwise for Omega). Anything remaining is filtered through is_member.
  class Enumerator {
   public:
    Enumerator(MonoidId m, std::size_t n, std::optional<std::size_t> cap = {})
        : _monoid(std::move(m)), _n(n) {
      auto const limit = cap.value_or(is_permutation_monoid(_monoid.tag())
                                          ? default_permutation_enumeration_cap
                                          : default_enumeration_cap);
      if (n > limit) {
        throw CapExceeded(n, limit);
      }
      if (n == 0) {
        throw InvalidArgument("degree must be at least 1");
      }
      if (auto const& p = _monoid.partition(); p && p->degree() != n) {
        throw InvalidArgument("partition degree does not match n");
      }
      reset();
    }

    void reset() {
      _current.assign(_n, -1);
      _used.assign(_n, 0);
      auto const m = _monoid.partition() ? _monoid.blocks().number_of_blocks() : 1;
      _target.assign(m, 0);
      _assigned_in_block.assign(m, 0);
      _used_in_block.assign(m * _n, 0);
      _pos     = 0;
      _started = false;
      _done    = false;
    }

    //! Writes the next member into `out`; false once exhausted.
    bool next(std::optional<Transformation>& out) {
      if (_done) {
        return false;
      }
      if (!_started) {
        _started = true;
      } else {
        _pos = _n - 1;
        unassign(_pos);
      }
      while (true) {
        auto v = _current[_pos] + 1;
        while (v < static_cast<long>(_n) && !admissible(_pos, v)) {
          ++v;
        }
        if (v == static_cast<long>(_n)) {
          _current[_pos] = -1;
          if (_pos == 0) {
            _done = true;
            return false;
          }
          --_pos;
          unassign(_pos);
          continue;
        }
        _current[_pos] = v;
        assign(_pos, v);
        if (_pos + 1 < _n) {
          ++_pos;
          continue;
        }
        std::vector<point_type> images(_current.begin(), _current.end());
        Transformation          f(std::move(images));
        if (needs_filter() && !is_member(f, _monoid)) {
          unassign(_pos);
          continue;
        }
        out = std::move(f);
        return true;
      }
    }

    [[nodiscard]] MonoidId const& monoid() const noexcept {
      return _monoid;
    }

   private:
    [[nodiscard]] bool partitioned() const noexcept {
      return is_partition_relative(_monoid.tag());
    }

    [[nodiscard]] bool needs_filter() const noexcept {
      switch (_monoid.tag()) {
        case MonoidTag::FullT:
        case MonoidTag::TXP:
        case MonoidTag::OmegaXP:
        case MonoidTag::SymmetricS:
          return false;
        default:
          return true;
      }
    }

    [[nodiscard]] std::size_t block_of(std::size_t x) const {
      return partitioned() ? _monoid.blocks().block_of(x) : 0;
    }

    [[nodiscard]] bool admissible(std::size_t x, long v) const {
      auto const b = block_of(x);
      if (partitioned() && _assigned_in_block[b] > 0
          && _monoid.blocks().block_of(v) != _target[b]) {
        return false;
      }
      if (is_permutation_monoid(_monoid.tag()) && _used[v] > 0) {
        return false;
      }
      if (_monoid.tag() == MonoidTag::OmegaXP && _used_in_block[b * _n + v] > 0) {
        return false;
      }
      return true;
    }

    void assign(std::size_t x, long v) {
      auto const b = block_of(x);
      if (partitioned()) {
        if (_assigned_in_block[b]++ == 0) {
          _target[b] = _monoid.blocks().block_of(v);
        }
      }
      ++_used[v];
      ++_used_in_block[b * _n + v];
    }

    void unassign(std::size_t x) {
      auto const v = _current[x];
      auto const b = block_of(x);
      if (partitioned()) {
        --_assigned_in_block[b];
      }
      --_used[v];
      --_used_in_block[b * _n + v];
    }

    MonoidId                 _monoid;
    std::size_t              _n;
    std::vector<long>        _current;
    std::vector<std::size_t> _used;
    std::vector<std::size_t> _target;
    std::vector<std::size_t> _assigned_in_block;
    std::vector<std::size_t> _used_in_block;
    std::size_t              _pos     = 0;
    bool                     _started = false;
    bool                     _done    = false;
  };

  //! Calls `visit(f)` for every member, in enumeration order.
  template <typename Visitor>
  void for_each_member(MonoidId const&            m,
                       std::size_t                n,
                       Visitor&&                  visit,
                       std::optional<std::size_t> cap = {}) {
    Enumerator                    e(m, n, cap);
    std::optional<Transformation> f;
    while (e.next(f)) {
      visit(*f);
    }
  }

  [[nodiscard]] inline std::vector<Transformation>
  enumerate(MonoidId const& m, std::size_t n, std::optional<std::size_t> cap = {}) {
    std::vector<Transformation> out;
    for_each_member(m, n, [&](Transformation const& f) { out.push_back(f); }, cap);
    return out;
  }

  [[nodiscard]] inline std::uint64_t count(MonoidId const&            m,
                                           std::size_t                n,
                                           std::optional<std::size_t> cap = {}) {
    std::uint64_t total = 0;
    for_each_member(m, n, [&](Transformation const&) { ++total; }, cap);
    return total;
  }

}  // namespace tmreg

#endif  // TMREG_MEMBERSHIP_HPP_
