// Maximum bipartite matching by augmenting paths (Kuhn). The instances here
// have at most a handful of vertices per side.

#ifndef TMREG_DETAIL_MATCHING_HPP_
#define TMREG_DETAIL_MATCHING_HPP_

#include <cstddef>   // for size_t
#include <optional>  // for optional
#include <utility>   // for move
#include <vector>    // for vector

namespace tmreg::detail {

  //! `adjacent[l]` lists the right vertices joined to left vertex `l`, in
  //! preference order. Returns, for each left vertex, its partner, or nullopt
  //! if it is unmatched in the maximum matching found. Left vertices are
  //! processed in index order, so the result is deterministic.
  class BipartiteMatching {
   public:
    BipartiteMatching(std::size_t                           right_count,
                      std::vector<std::vector<std::size_t>> adjacent)
        : _adjacent(std::move(adjacent)),
          _left_partner(_adjacent.size()),
          _right_partner(right_count) {
      for (std::size_t l = 0; l < _adjacent.size(); ++l) {
        std::vector<bool> visited(right_count, false);
        augment(l, visited);
      }
    }

    [[nodiscard]] std::vector<std::optional<std::size_t>> const&
    partners() const noexcept {
      return _left_partner;
    }

    [[nodiscard]] bool is_left_perfect() const {
      for (auto const& p : _left_partner) {
        if (!p) {
          return false;
        }
      }
      return true;
    }

   private:
    bool augment(std::size_t l, std::vector<bool>& visited) {
      for (auto r : _adjacent[l]) {
        if (visited[r]) {
          continue;
        }
        visited[r] = true;
        if (!_right_partner[r] || augment(*_right_partner[r], visited)) {
          _right_partner[r] = l;
          _left_partner[l]  = r;
          return true;
        }
      }
      return false;
    }

    std::vector<std::vector<std::size_t>>   _adjacent;
    std::vector<std::optional<std::size_t>> _left_partner;
    std::vector<std::optional<std::size_t>> _right_partner;
  };

}  // namespace tmreg::detail

#endif  // TMREG_DETAIL_MATCHING_HPP_
