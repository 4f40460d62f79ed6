// Deciders for regularity and unit-regularity based on the character and
// block-map characterizations, together with explicit witnesses.
//
// Every decider takes the raw pair (f, P), decomposes f internally and
// returns a RegularityReport. A positive answer always comes with a witness g
// satisfying fgf = f inside the monoid asked about; for unit-regularity g is a
// unit of that monoid. Ties are broken the same way everywhere: the least
// admissible block, least elements as kernel cross-sections, and
// order-preserving bijections wherever a bijection is otherwise arbitrary.
//
// All characterizations here are for finite X.

#ifndef TMREG_REGULARITY_HPP_
#define TMREG_REGULARITY_HPP_

#include <algorithm>  // for binary_search, set_intersection
#include <cstddef>    // for size_t
#include <cstdint>    // for uint64_t
#include <limits>     // for numeric_limits
#include <optional>   // for optional
#include <stdexcept>  // for logic_error, overflow_error
#include <string>     // for string
#include <utility>    // for pair
#include <vector>     // for vector

#include "decomposition.hpp"
#include "detail/matching.hpp"
#include "errors.hpp"
#include "kernel.hpp"
#include "membership.hpp"
#include "oracle.hpp"
#include "set_partition.hpp"
#include "transformation.hpp"

namespace tmreg {

  //! Which condition of a characterization failed first.
  enum class Condition {
    NotSemiBalanced,
    CharacterNotUnitRegular,
    NoAdmissibleSource,
    LeftoverSizeMismatch,
    CharacterNotInjective,
    CharacterNotSurjective,
    BlockSizeMismatch,
    CollapseDefectMismatch,
    NoInjectiveBlockMap,
    NoSurjectiveBlockMap
  };

  struct FailedCondition {
    Condition condition;
    //! The offending block index, when the condition is about one block.
    std::optional<std::size_t> block;

    friend bool operator==(FailedCondition const&, FailedCondition const&)
        = default;
  };

  [[nodiscard]] inline std::string to_string(Condition c) {
    switch (c) {
      case Condition::NotSemiBalanced:
        return "not-semi-balanced";
      case Condition::CharacterNotUnitRegular:
        return "character-not-unit-regular";
      case Condition::NoAdmissibleSource:
        return "no-admissible-source-block";
      case Condition::LeftoverSizeMismatch:
        return "leftover-size-mismatch";
      case Condition::CharacterNotInjective:
        return "character-not-injective";
      case Condition::CharacterNotSurjective:
        return "character-not-surjective";
      case Condition::BlockSizeMismatch:
        return "block-size-mismatch";
      case Condition::CollapseDefectMismatch:
        return "collapse-defect-mismatch";
      case Condition::NoInjectiveBlockMap:
        return "no-injective-block-map";
      case Condition::NoSurjectiveBlockMap:
        return "no-surjective-block-map";
    }
    return "?";
  }

  [[nodiscard]] inline std::string to_string(FailedCondition const& fc) {
    auto out = to_string(fc.condition);
    if (fc.block) {
      out += "(" + std::to_string(*fc.block) + ")";
    }
    return out;
  }

  //! How the witness treats one block X_j that meets Xf: it is sent
  //! bijectively (or, for plain regularity, injectively) onto the chosen
  //! block X_i. Points of X_j in Xf go to their representative in
  //! `cross_section`; the remaining points follow `filler`.
  struct BlockChoice {
    std::size_t                                    image_block;   // j
    std::size_t                                    source_block;  // i
    std::vector<point_type>                        cross_section;
    std::vector<std::pair<point_type, point_type>> filler;

    friend bool operator==(BlockChoice const&, BlockChoice const&) = default;
  };

  //! A block X_j disjoint from Xf, sent onto X_i by an order-preserving
  //! bijection.
  struct LeftoverPairing {
    std::size_t image_block;   // j
    std::size_t source_block;  // i

    friend bool operator==(LeftoverPairing const&, LeftoverPairing const&)
        = default;
  };

  struct Certificate {
    std::vector<BlockChoice>     choices;
    std::vector<LeftoverPairing> leftovers;

    friend bool operator==(Certificate const&, Certificate const&) = default;
  };

  //! Outcome of one decider.
  //!
  //! `regular` and `unit_regular` are empty when that question is outside the
  //! reach of the decider (for example regularity in T(X, P), which has no
  //! characterization here). `unit_regular == true` implies
  //! `regular == true`.
  struct RegularityReport {
    MonoidId                       monoid;
    Transformation                 element;
    std::optional<bool>            regular;
    std::optional<bool>            unit_regular;
    std::optional<Transformation>  witness;
    Certificate                    certificate;
    std::optional<FailedCondition> failed_condition;
  };

  namespace detail {

    inline std::vector<point_type> sorted_difference(std::span<point_type const> a,
                                                     std::vector<point_type> const& b) {
      std::vector<point_type> out;
      for (auto x : a) {
        if (!std::binary_search(b.begin(), b.end(), x)) {
          out.push_back(x);
        }
      }
      return out;
    }

    // X_j intersect Xf, ascending
    inline std::vector<point_type> block_image_part(SetPartition const& p,
                                                    std::size_t         j,
                                                    std::vector<point_type> const& image) {
      std::vector<point_type> out;
      for (auto y : p.block(j)) {
        if (std::binary_search(image.begin(), image.end(), y)) {
          out.push_back(y);
        }
      }
      return out;
    }

    // Least preimage of y in the block map, if any.
    inline std::optional<point_type> least_preimage(BlockMap const& fi,
                                                    point_type      y) {
      for (auto const& [x, fx] : fi.pairs) {
        if (fx == y) {
          return x;
        }
      }
      return std::nullopt;
    }

    // Conditions (i)-(iii) on a candidate block i for the image block j.
    inline bool txp_admissible(BlockDecomposition const&      d,
                               std::vector<point_type> const& image,
                               std::size_t                    i,
                               std::size_t                    j) {
      auto const& p = d.partition;
      if (d.character[i] != j || p.block_size(i) != p.block_size(j)) {
        return false;
      }
      if (d.block_maps[i].image() != block_image_part(p, j, image)) {
        return false;
      }
      auto const s = block_map_stats(d, i);
      return s.collapse == s.defect;
    }

    struct UnitWitnessAttempt {
      std::optional<Transformation>  witness;
      Certificate                    certificate;
      std::optional<FailedCondition> failure;
    };

    // Builds a unit g of T(X, P) with fgf = f. For every j in I chi^(f) the
    // least block i with admissible(i, j) is chosen; X_j is sent onto X_i
    // taking each image point to its least preimage in X_i and the rest of
    // X_j onto the rest of X_i in order. Blocks outside I chi^(f) are then
    // paired with the unchosen blocks of equal size by a perfect matching.
    template <typename Admissible>
    UnitWitnessAttempt build_unit_witness(Transformation const&     f,
                                          BlockDecomposition const& d,
                                          Admissible&&              admissible) {
      auto const&    p     = d.partition;
      auto const     m     = p.number_of_blocks();
      auto const     image = f.image_set();
      auto const     hit   = d.character.image_set();  // I chi^(f)
      UnitWitnessAttempt out;

      std::vector<bool>        chosen(m, false);
      std::vector<std::size_t> source_of(m, m);
      for (auto j : hit) {
        for (std::size_t i = 0; i < m; ++i) {
          if (!chosen[i] && admissible(i, static_cast<std::size_t>(j))) {
            chosen[i]    = true;
            source_of[j] = i;
            break;
          }
        }
        if (source_of[j] == m) {
          out.failure = FailedCondition{Condition::NoAdmissibleSource, j};
          return out;
        }
      }

      std::vector<std::size_t> left;   // j outside I chi^(f)
      std::vector<std::size_t> right;  // unchosen i
      for (std::size_t k = 0; k < m; ++k) {
        if (!std::binary_search(hit.begin(), hit.end(), k)) {
          left.push_back(k);
        }
        if (!chosen[k]) {
          right.push_back(k);
        }
      }
      std::vector<std::vector<std::size_t>> adjacent(left.size());
      for (std::size_t l = 0; l < left.size(); ++l) {
        for (std::size_t r = 0; r < right.size(); ++r) {
          if (p.block_size(left[l]) == p.block_size(right[r])) {
            adjacent[l].push_back(r);
          }
        }
      }
      BipartiteMatching matching(right.size(), std::move(adjacent));
      if (left.size() != right.size() || !matching.is_left_perfect()) {
        out.failure = FailedCondition{Condition::LeftoverSizeMismatch, std::nullopt};
        return out;
      }

      std::vector<point_type> g(f.degree());
      for (auto j : hit) {
        auto const  i  = source_of[j];
        auto const& fi = d.block_maps[i];
        BlockChoice choice{j, i, {}, {}};
        auto const  image_part = block_image_part(p, j, image);
        for (auto y : image_part) {
          auto x = least_preimage(fi, y);
          if (!x) {
            throw std::logic_error("chosen block misses an image point");
          }
          g[y] = *x;
          choice.cross_section.push_back(*x);
        }
        std::sort(choice.cross_section.begin(), choice.cross_section.end());
        auto const rest_j = sorted_difference(p.block(j), image_part);
        auto const rest_i = sorted_difference(p.block(i), choice.cross_section);
        if (rest_j.size() != rest_i.size()) {
          throw std::logic_error("filler bijection has mismatched sides");
        }
        for (std::size_t k = 0; k < rest_j.size(); ++k) {
          g[rest_j[k]] = rest_i[k];
          choice.filler.emplace_back(rest_j[k], rest_i[k]);
        }
        out.certificate.choices.push_back(std::move(choice));
      }
      for (std::size_t l = 0; l < left.size(); ++l) {
        auto const j  = left[l];
        auto const i  = right[*matching.partners()[l]];
        auto const bj = p.block(j);
        auto const bi = p.block(i);
        for (std::size_t k = 0; k < bj.size(); ++k) {
          g[bj[k]] = bi[k];
        }
        out.certificate.leftovers.push_back({j, i});
      }
      out.witness = Transformation(std::move(g));
      return out;
    }

    inline void require_member(Transformation const& f,
                               MonoidTag             tag,
                               SetPartition const&   p) {
      detail::require_member(f, MonoidId(tag, p));
    }

  }  // namespace detail

  //! Unit-regularity in T(X): f is unit-regular exactly when c(f) = d(f).
  //!
  //! The witness sends each y in Xf to the least element of y f^{-1} and
  //! X \ Xf onto X \ T_f in order, which makes it a permutation.
  [[nodiscard]] inline RegularityReport ureg_in_full_t(Transformation const& f) {
    RegularityReport r{MonoidId(MonoidTag::FullT), f, true, false, {}, {}, {}};
    auto const       k = kernel_data(f);
    if (k.collapse != k.defect) {
      r.failed_condition = FailedCondition{Condition::NotSemiBalanced, std::nullopt};
      return r;
    }
    std::vector<point_type> g(f.degree());
    BlockChoice             choice{0, 0, k.cross_section, {}};
    for (auto const& c : k.classes) {
      g[c.image] = c.members.front();
    }
    std::vector<point_type> all(f.degree());
    for (std::size_t x = 0; x < all.size(); ++x) {
      all[x] = static_cast<point_type>(x);
    }
    auto const outside_image         = detail::sorted_difference(all, k.image);
    auto const outside_cross_section = detail::sorted_difference(all, k.cross_section);
    for (std::size_t t = 0; t < outside_image.size(); ++t) {
      g[outside_image[t]] = outside_cross_section[t];
      choice.filler.emplace_back(outside_image[t], outside_cross_section[t]);
    }
    r.unit_regular = true;
    r.witness      = Transformation(std::move(g));
    r.certificate.choices.push_back(std::move(choice));
    return r;
  }

  //! |U(f)| = d(f)! * prod over y in Xf of |y f^{-1}|, the number of
  //! permutations g with fgf = f.
  [[nodiscard]] inline std::uint64_t
  count_unit_inner_inverses(Transformation const& f) {
    auto const    k     = kernel_data(f);
    std::uint64_t total = 1;
    auto const    times = [&total](std::uint64_t v) {
      if (v != 0 && total > std::numeric_limits<std::uint64_t>::max() / v) {
        throw std::overflow_error("|U(f)| does not fit in 64 bits");
      }
      total *= v;
    };
    for (std::size_t v = 2; v <= k.defect; ++v) {
      times(v);
    }
    for (auto const& c : k.classes) {
      times(c.members.size());
    }
    return total;
  }

  //! Unit-regularity in T(X, P). f is unit-regular exactly when
  //!   (1) chi^(f) is unit-regular in T(I), and
  //!   (2) every j in I chi^(f) has a block i with |X_i| = |X_j|,
  //!       X_i f = X_j intersect Xf and c(f_i) = d(f_i).
  //! The witness construction also needs the blocks outside I chi^(f) to be
  //! paired with equal-sized unchosen blocks; that pairing is found by a
  //! bipartite matching and reported as LeftoverSizeMismatch if it fails.
  //!
  //! Throws NotPartitionPreserving when f is not in T(X, P).
  [[nodiscard]] inline RegularityReport ureg_in_txp(Transformation const& f,
                                                    SetPartition const&   p) {
    auto const       d = decompose(f, p);
    RegularityReport r{MonoidId(MonoidTag::TXP, p), f, std::nullopt, false, {}, {}, {}};
    if (!ureg_in_full_t(d.character).unit_regular.value_or(false)) {
      r.failed_condition
          = FailedCondition{Condition::CharacterNotUnitRegular, std::nullopt};
      return r;
    }
    auto const image   = f.image_set();
    auto       attempt = detail::build_unit_witness(
        f, d, [&](std::size_t i, std::size_t j) {
          return detail::txp_admissible(d, image, i, j);
        });
    r.certificate = std::move(attempt.certificate);
    if (attempt.failure) {
      r.failed_condition = attempt.failure;
      return r;
    }
    r.regular      = true;
    r.unit_regular = true;
    r.witness      = std::move(attempt.witness);
    return r;
  }

  //! Regularity in Sigma(X, P). For finite X the character of any member is
  //! a surjection of the finite set I, hence a permutation, so every member
  //! is regular. The witness takes each x in X_i intersect Xf to its least
  //! preimage and every other point of X_i to the least element of
  //! X_{i chi^{-1}}.
  //!
  //! Throws NotInMonoid when f is not in Sigma(X, P).
  [[nodiscard]] inline RegularityReport reg_in_sigma(Transformation const& f,
                                                     SetPartition const&   p) {
    detail::require_member(f, MonoidTag::SigmaXP, p);
    auto const d     = decompose(f, p);
    auto const h     = d.character.inverse();
    auto const image = f.image_set();
    RegularityReport r{MonoidId(MonoidTag::SigmaXP, p), f, true, std::nullopt, {}, {}, {}};
    std::vector<point_type> g(f.degree());
    for (std::size_t j = 0; j < p.number_of_blocks(); ++j) {
      auto const  i  = static_cast<std::size_t>(h[j]);
      auto const& fi = d.block_maps[i];
      BlockChoice choice{j, i, {}, {}};
      for (auto x : p.block(j)) {
        if (std::binary_search(image.begin(), image.end(), x)) {
          g[x] = *detail::least_preimage(fi, x);
          choice.cross_section.push_back(g[x]);
        } else {
          g[x] = p.block(i).front();
          choice.filler.emplace_back(x, g[x]);
        }
      }
      std::sort(choice.cross_section.begin(), choice.cross_section.end());
      r.certificate.choices.push_back(std::move(choice));
    }
    r.witness = Transformation(std::move(g));
    return r;
  }

  //! Unit-regularity in Sigma(X, P): chi^(f) injective, and for every i,
  //! |X_i| = |X_{i chi}| and c(f_i) = d(f_i). The witness is the T(X, P) one.
  //!
  //! Throws NotInMonoid when f is not in Sigma(X, P).
  [[nodiscard]] inline RegularityReport ureg_in_sigma(Transformation const& f,
                                                      SetPartition const&   p) {
    detail::require_member(f, MonoidTag::SigmaXP, p);
    auto const       d = decompose(f, p);
    RegularityReport r{MonoidId(MonoidTag::SigmaXP, p), f, true, false, {}, {}, {}};
    // a negative answer still carries the regular witness
    auto const fail = [&](FailedCondition c) {
      auto reg           = reg_in_sigma(f, p);
      r.witness          = std::move(reg.witness);
      r.certificate      = std::move(reg.certificate);
      r.failed_condition = c;
      return r;
    };
    if (!d.character.is_permutation()) {
      return fail({Condition::CharacterNotInjective, std::nullopt});
    }
    for (std::size_t i = 0; i < p.number_of_blocks(); ++i) {
      if (p.block_size(i) != p.block_size(d.character[i])) {
        return fail({Condition::BlockSizeMismatch, i});
      }
      auto const s = block_map_stats(d, i);
      if (s.collapse != s.defect) {
        return fail({Condition::CollapseDefectMismatch, i});
      }
    }
    auto txp = ureg_in_txp(f, p);
    if (!txp.unit_regular.value_or(false)) {
      throw std::logic_error("Sigma(X, P) conditions hold but no T(X, P) unit "
                             "witness was constructed");
    }
    r.unit_regular = true;
    r.witness      = std::move(txp.witness);
    r.certificate  = std::move(txp.certificate);
    return r;
  }

  //! Unit-regularity in Gamma(X, P): chi^(f) unit-regular in T(I), and every
  //! j in I chi^(f) receives an injective (hence bijective) block map.
  //!
  //! Throws NotInMonoid when f is not in Gamma(X, P).
  [[nodiscard]] inline RegularityReport ureg_in_gamma_xp(Transformation const& f,
                                                         SetPartition const&   p) {
    detail::require_member(f, MonoidTag::GammaXP, p);
    auto const       d = decompose(f, p);
    RegularityReport r{MonoidId(MonoidTag::GammaXP, p), f, std::nullopt, false, {}, {}, {}};
    if (!ureg_in_full_t(d.character).unit_regular.value_or(false)) {
      r.failed_condition
          = FailedCondition{Condition::CharacterNotUnitRegular, std::nullopt};
      return r;
    }
    auto const injective = [&](std::size_t i, std::size_t j) {
      return d.character[i] == j && block_map_stats(d, i).injective;
    };
    for (auto j : d.character.image_set()) {
      bool found = false;
      for (std::size_t i = 0; i < p.number_of_blocks() && !found; ++i) {
        found = injective(i, j);
      }
      if (!found) {
        r.failed_condition = FailedCondition{Condition::NoInjectiveBlockMap, j};
        return r;
      }
    }
    auto attempt = detail::build_unit_witness(f, d, injective);
    if (attempt.failure) {
      throw std::logic_error("Gamma(X, P) conditions hold but no unit witness "
                             "was constructed");
    }
    r.regular      = true;
    r.unit_regular = true;
    r.witness      = std::move(attempt.witness);
    r.certificate  = std::move(attempt.certificate);
    return r;
  }

  //! Unit-regularity in T_E*(X): chi^(f) surjective, and for every i,
  //! |X_i| = |X_{i chi}| and c(f_i) = d(f_i).
  //!
  //! Throws NotInMonoid when f is not in T_E*(X).
  [[nodiscard]] inline RegularityReport ureg_in_te_star(Transformation const& f,
                                                        SetPartition const&   p) {
    detail::require_member(f, MonoidTag::TEStar, p);
    auto const       d = decompose(f, p);
    RegularityReport r{MonoidId(MonoidTag::TEStar, p), f, std::nullopt, false, {}, {}, {}};
    if (d.character.rank() != d.character.degree()) {
      r.failed_condition = FailedCondition{Condition::CharacterNotSurjective, std::nullopt};
      return r;
    }
    for (std::size_t i = 0; i < p.number_of_blocks(); ++i) {
      if (p.block_size(i) != p.block_size(d.character[i])) {
        r.failed_condition = FailedCondition{Condition::BlockSizeMismatch, i};
        return r;
      }
      auto const s = block_map_stats(d, i);
      if (s.collapse != s.defect) {
        r.failed_condition = FailedCondition{Condition::CollapseDefectMismatch, i};
        return r;
      }
    }
    auto txp = ureg_in_txp(f, p);
    if (!txp.unit_regular.value_or(false)) {
      throw std::logic_error("T_E*(X) conditions hold but no T(X, P) unit "
                             "witness was constructed");
    }
    r.regular      = true;
    r.unit_regular = true;
    r.witness      = std::move(txp.witness);
    r.certificate  = std::move(txp.certificate);
    return r;
  }

  namespace detail {
    // Least i with i chi = j and f_i surjective, for each j in I chi^(f).
    inline std::optional<FailedCondition>
    surjective_sources(BlockDecomposition const& d, std::vector<std::size_t>& source_of) {
      auto const m = d.partition.number_of_blocks();
      source_of.assign(m, m);
      for (auto j : d.character.image_set()) {
        for (std::size_t i = 0; i < m; ++i) {
          if (d.character[i] == j && block_map_stats(d, i).surjective) {
            source_of[j] = i;
            break;
          }
        }
        if (source_of[j] == m) {
          return FailedCondition{Condition::NoSurjectiveBlockMap, j};
        }
      }
      return std::nullopt;
    }
  }  // namespace detail

  //! Regularity in Omega(X, P): every j in I chi^(f) receives a surjective
  //! (hence bijective) block map f_i. The witness inverts that f_i on X_j and
  //! fixes every other point.
  //!
  //! Throws NotInMonoid when f is not in Omega(X, P).
  [[nodiscard]] inline RegularityReport reg_in_omega_xp(Transformation const& f,
                                                        SetPartition const&   p) {
    detail::require_member(f, MonoidTag::OmegaXP, p);
    auto const               d = decompose(f, p);
    RegularityReport         r{MonoidId(MonoidTag::OmegaXP, p), f, false, std::nullopt, {}, {}, {}};
    std::vector<std::size_t> source_of;
    if (auto failure = detail::surjective_sources(d, source_of)) {
      r.failed_condition = failure;
      return r;
    }
    auto const              m = p.number_of_blocks();
    std::vector<point_type> g(f.images().begin(), f.images().end());
    for (std::size_t x = 0; x < g.size(); ++x) {
      g[x] = static_cast<point_type>(x);
    }
    for (std::size_t j = 0; j < m; ++j) {
      if (source_of[j] == m) {
        r.certificate.leftovers.push_back({j, j});
        continue;
      }
      auto const& fi = d.block_maps[source_of[j]];
      BlockChoice choice{j, source_of[j], {}, {}};
      for (auto const& [x, y] : fi.pairs) {
        g[y] = x;
        choice.cross_section.push_back(x);
      }
      r.certificate.choices.push_back(std::move(choice));
    }
    r.regular = true;
    r.witness = Transformation(std::move(g));
    return r;
  }

  //! Unit-regularity in Omega(X, P): chi^(f) unit-regular in T(I), and every
  //! j in I chi^(f) receives a surjective block map. The witness is the
  //! T(X, P) one built from those bijective block maps.
  //!
  //! Throws NotInMonoid when f is not in Omega(X, P).
  [[nodiscard]] inline RegularityReport ureg_in_omega_xp(Transformation const& f,
                                                         SetPartition const&   p) {
    detail::require_member(f, MonoidTag::OmegaXP, p);
    auto const               d = decompose(f, p);
    RegularityReport         r{MonoidId(MonoidTag::OmegaXP, p), f, std::nullopt, false, {}, {}, {}};
    std::vector<std::size_t> source_of;
    auto const               failure = detail::surjective_sources(d, source_of);
    r.regular                        = !failure.has_value();
    if (!ureg_in_full_t(d.character).unit_regular.value_or(false)) {
      r.failed_condition
          = FailedCondition{Condition::CharacterNotUnitRegular, std::nullopt};
      return r;
    }
    if (failure) {
      r.failed_condition = failure;
      return r;
    }
    auto attempt = detail::build_unit_witness(
        f, d, [&](std::size_t i, std::size_t j) {
          return d.character[i] == j && block_map_stats(d, i).surjective;
        });
    if (attempt.failure) {
      throw std::logic_error("Omega(X, P) conditions hold but no unit witness "
                             "was constructed");
    }
    r.unit_regular = true;
    r.witness      = std::move(attempt.witness);
    r.certificate  = std::move(attempt.certificate);
    return r;
  }

  //! Test hook for the implication "f unit-regular in T(X, P) => chi^(f)
  //! unit-regular in T(I)". The left side is decided by the oracle, the right
  //! side by ureg_in_full_t on the character; returns whether the
  //! implication holds for this f.
  [[nodiscard]] inline bool
  ureg_char_necessity_check(Transformation const&      f,
                            SetPartition const&        p,
                            std::optional<std::size_t> cap = {}) {
    auto const d    = decompose(f, p);
    bool const lhs  = oracle_unit_regular(f, MonoidId(MonoidTag::TXP, p), cap).unit_regular;
    bool const rhs  = ureg_in_full_t(d.character).unit_regular.value_or(false);
    return !lhs || rhs;
  }

  //! The regularity decider for m, when one exists (T(X), Sigma(X, P) and
  //! Omega(X, P)).
  [[nodiscard]] inline std::optional<RegularityReport>
  decide_regular(Transformation const& f, MonoidId const& m) {
    switch (m.tag()) {
      case MonoidTag::FullT:
        return ureg_in_full_t(f);
      case MonoidTag::SigmaXP:
        return reg_in_sigma(f, m.blocks());
      case MonoidTag::OmegaXP:
        return reg_in_omega_xp(f, m.blocks());
      default:
        return std::nullopt;
    }
  }

  //! The unit-regularity decider for m. In the two groups every element is a
  //! unit and its inverse is the witness.
  [[nodiscard]] inline RegularityReport decide_unit_regular(Transformation const& f,
                                                            MonoidId const& m) {
    switch (m.tag()) {
      case MonoidTag::FullT:
        return ureg_in_full_t(f);
      case MonoidTag::TXP:
        return ureg_in_txp(f, m.blocks());
      case MonoidTag::SigmaXP:
        return ureg_in_sigma(f, m.blocks());
      case MonoidTag::GammaXP:
        return ureg_in_gamma_xp(f, m.blocks());
      case MonoidTag::TEStar:
        return ureg_in_te_star(f, m.blocks());
      case MonoidTag::OmegaXP:
        return ureg_in_omega_xp(f, m.blocks());
      case MonoidTag::SXP:
      case MonoidTag::SymmetricS:
        detail::require_member(f, m);
        return RegularityReport{m, f, true, true, f.inverse(), {}, {}};
    }
    throw InvalidArgument("unknown monoid");
  }

  //! Checks a report's witness: fgf = f, g in the monoid, and g a unit of the
  //! monoid whenever the report claims unit-regularity. Reports without a
  //! witness are valid exactly when they make no positive claim.
  [[nodiscard]] inline bool witness_is_valid(RegularityReport const& r) {
    bool const claims = r.regular.value_or(false) || r.unit_regular.value_or(false);
    if (!r.witness) {
      return !claims;
    }
    auto const& f = r.element;
    auto const& g = *r.witness;
    if (g.degree() != f.degree() || compose(compose(f, g), f) != f) {
      return false;
    }
    if (!is_member(g, r.monoid)) {
      return false;
    }
    if (r.unit_regular.value_or(false)) {
      return is_member(g, r.monoid.unit_group());
    }
    return true;
  }

}  // namespace tmreg

#endif  // TMREG_REGULARITY_HPP_
