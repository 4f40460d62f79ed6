// Set partitions of {0, ..., n - 1} in canonical form, and their
// enumeration by restricted-growth strings.

#ifndef TMREG_SET_PARTITION_HPP_
#define TMREG_SET_PARTITION_HPP_

#include <algorithm>  // for sort, max
#include <cstddef>    // for size_t
#include <ostream>    // for ostream
#include <span>       // for span
#include <string>     // for string, to_string
#include <utility>    // for move
#include <vector>     // for vector

#include "errors.hpp"
#include "transformation.hpp"

namespace tmreg {

  //! A partition P = {X_i | i in I} of {0, ..., n - 1}.
  //!
  //! The constructor accepts blocks in any order and stores them canonically:
  //! each block ascending, blocks ordered by their least element. Block
  //! indices I = {0, ..., m - 1} always refer to this canonical order.
  class SetPartition {
   public:
    explicit SetPartition(std::vector<std::vector<point_type>> blocks)
        : _blocks(std::move(blocks)) {
      if (_blocks.empty()) {
        throw InvalidArgument("a partition needs at least one block");
      }
      std::size_t n = 0;
      for (auto& b : _blocks) {
        if (b.empty()) {
          throw InvalidArgument("partition blocks must be nonempty");
        }
        std::sort(b.begin(), b.end());
        n += b.size();
      }
      std::sort(_blocks.begin(), _blocks.end(), [](auto const& a, auto const& b) {
        return a.front() < b.front();
      });
      _block_of.assign(n, n);
      for (std::size_t i = 0; i < _blocks.size(); ++i) {
        for (auto x : _blocks[i]) {
          if (x >= n) {
            throw InvalidArgument("partition element " + std::to_string(x)
                                  + " is out of range for degree "
                                  + std::to_string(n));
          }
          if (_block_of[x] != n) {
            throw InvalidArgument("partition element " + std::to_string(x)
                                  + " occurs in more than one block");
          }
          _block_of[x] = i;
        }
      }
    }

    //! Singleton blocks, E = Delta(X).
    static SetPartition discrete(std::size_t n) {
      std::vector<std::vector<point_type>> blocks(n);
      for (std::size_t x = 0; x < n; ++x) {
        blocks[x] = {static_cast<point_type>(x)};
      }
      return SetPartition(std::move(blocks));
    }

    //! One block, E = X x X.
    static SetPartition single_block(std::size_t n) {
      std::vector<point_type> block(n);
      for (std::size_t x = 0; x < n; ++x) {
        block[x] = static_cast<point_type>(x);
      }
      return SetPartition({std::move(block)});
    }

    //! From a restricted-growth string: x lies in block rgs[x].
    static SetPartition from_rgs(std::span<std::size_t const> rgs) {
      std::size_t m = 0;
      for (auto b : rgs) {
        m = std::max(m, b + 1);
      }
      std::vector<std::vector<point_type>> blocks(m);
      for (std::size_t x = 0; x < rgs.size(); ++x) {
        blocks[rgs[x]].push_back(static_cast<point_type>(x));
      }
      return SetPartition(std::move(blocks));
    }

    [[nodiscard]] std::size_t degree() const noexcept {
      return _block_of.size();
    }

    [[nodiscard]] std::size_t number_of_blocks() const noexcept {
      return _blocks.size();
    }

    [[nodiscard]] std::span<point_type const> block(std::size_t i) const {
      return _blocks[i];
    }

    [[nodiscard]] std::size_t block_size(std::size_t i) const {
      return _blocks[i].size();
    }

    [[nodiscard]] std::size_t block_of(std::size_t x) const {
      return _block_of[x];
    }

    [[nodiscard]] std::vector<std::vector<point_type>> const&
    blocks() const noexcept {
      return _blocks;
    }

    [[nodiscard]] bool same_block(std::size_t x, std::size_t y) const {
      return _block_of[x] == _block_of[y];
    }

    //! The restricted-growth string of the partition (equal to block_of in
    //! canonical form).
    [[nodiscard]] std::vector<std::size_t> const& rgs() const noexcept {
      return _block_of;
    }

    friend bool operator==(SetPartition const& p, SetPartition const& q) {
      return p._blocks == q._blocks;
    }

   private:
    std::vector<std::vector<point_type>> _blocks;
    std::vector<std::size_t>             _block_of;
  };

  //! "{{0,1},{2,3}}"
  inline std::string to_string(SetPartition const& p) {
    std::string out = "{";
    for (std::size_t i = 0; i < p.number_of_blocks(); ++i) {
      if (i != 0) {
        out += ',';
      }
      out += '{';
      auto b = p.block(i);
      for (std::size_t k = 0; k < b.size(); ++k) {
        if (k != 0) {
          out += ',';
        }
        out += std::to_string(b[k]);
      }
      out += '}';
    }
    return out + "}";
  }

  inline std::ostream& operator<<(std::ostream& os, SetPartition const& p) {
    return os << to_string(p);
  }

  //! Every partition of {0, ..., n - 1}, in lexicographic order of their
  //! restricted-growth strings (Bell(n) of them).
  inline std::vector<SetPartition> all_set_partitions(std::size_t n) {
    if (n == 0) {
      throw InvalidArgument("partitions of the empty set are not supported");
    }
    std::vector<SetPartition> out;
    std::vector<std::size_t>  a(n, 0);
    // prefix_max[k] = max(a[0..k])
    std::vector<std::size_t> prefix_max(n, 0);
    while (true) {
      out.push_back(SetPartition::from_rgs(a));
      // rightmost position that can be incremented
      std::size_t k = n - 1;
      while (k > 0 && a[k] > prefix_max[k - 1]) {
        --k;
      }
      if (k == 0) {
        break;
      }
      ++a[k];
      prefix_max[k] = std::max(prefix_max[k - 1], a[k]);
      for (std::size_t j = k + 1; j < n; ++j) {
        a[j]          = 0;
        prefix_max[j] = prefix_max[k];
      }
    }
    return out;
  }

}  // namespace tmreg

#endif  // TMREG_SET_PARTITION_HPP_
