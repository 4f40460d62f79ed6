// The character of a partition-preserving map and its family of induced
// block maps.

#ifndef TMREG_DECOMPOSITION_HPP_
#define TMREG_DECOMPOSITION_HPP_

#include <algorithm>  // for sort, unique, binary_search
#include <cstddef>    // for size_t
#include <string>     // for to_string
#include <utility>    // for pair
#include <vector>     // for vector

#include "errors.hpp"
#include "set_partition.hpp"
#include "transformation.hpp"

namespace tmreg {

  //! The map f_i : X_i -> X_j induced by f, where j = i chi^(f).
  struct BlockMap {
    std::size_t source;  // i
    std::size_t target;  // j
    //! (x, xf) for every x in X_i, ascending in x.
    std::vector<std::pair<point_type, point_type>> pairs;

    //! X_i f, ascending.
    [[nodiscard]] std::vector<point_type> image() const {
      std::vector<point_type> out;
      out.reserve(pairs.size());
      for (auto const& [x, y] : pairs) {
        out.push_back(y);
      }
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      return out;
    }
  };

  //! chi^(f) together with the unique family B(f, I).
  struct BlockDecomposition {
    SetPartition          partition;
    Transformation        character;   // on the m block indices
    std::vector<BlockMap> block_maps;  // block_maps[i].source == i
  };

  //! Throws NotPartitionPreserving naming the first block (canonical order)
  //! whose image meets two blocks.
  [[nodiscard]] inline BlockDecomposition decompose(Transformation const& f,
                                                    SetPartition const&   p) {
    if (f.degree() != p.degree()) {
      throw InvalidArgument("transformation of degree "
                            + std::to_string(f.degree())
                            + " used with a partition of degree "
                            + std::to_string(p.degree()));
    }
    auto const              m = p.number_of_blocks();
    std::vector<point_type> chi(m);
    std::vector<BlockMap>   maps;
    maps.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
      auto const block  = p.block(i);
      auto const target = p.block_of(f[block.front()]);
      BlockMap   fi{i, target, {}};
      fi.pairs.reserve(block.size());
      for (auto x : block) {
        if (p.block_of(f[x]) != target) {
          throw NotPartitionPreserving(i);
        }
        fi.pairs.emplace_back(x, f[x]);
      }
      chi[i] = static_cast<point_type>(target);
      maps.push_back(std::move(fi));
    }
    return {p, Transformation(std::move(chi)), std::move(maps)};
  }

  //! Rebuilds f from its block maps.
  [[nodiscard]] inline Transformation reassemble(BlockDecomposition const& d) {
    std::vector<point_type> images(d.partition.degree());
    for (auto const& fi : d.block_maps) {
      for (auto const& [x, y] : fi.pairs) {
        images[x] = y;
      }
    }
    return Transformation(std::move(images));
  }

  struct BlockMapStats {
    std::size_t collapse;
    std::size_t defect;  // measured against the codomain block
    bool        injective;
    bool        surjective;

    friend bool operator==(BlockMapStats const&, BlockMapStats const&)
        = default;
  };

  //! Collapse and defect of f_i : X_i -> X_{i chi}, with injectivity and
  //! surjectivity decided directly rather than from the counts.
  [[nodiscard]] inline BlockMapStats block_map_stats(BlockDecomposition const& d,
                                                     std::size_t i) {
    if (i >= d.block_maps.size()) {
      throw InvalidArgument("block index " + std::to_string(i)
                            + " out of range");
    }
    auto const& fi       = d.block_maps[i];
    auto const  codomain = d.partition.block(fi.target);
    auto const  image    = fi.image();

    // cross-section of ker(f_i): first x (ascending) for each image point
    std::vector<point_type> seen;
    std::size_t             collapse = 0;
    for (auto const& [x, y] : fi.pairs) {
      if (std::find(seen.begin(), seen.end(), y) != seen.end()) {
        ++collapse;
      } else {
        seen.push_back(y);
      }
    }
    std::size_t defect = 0;
    for (auto y : codomain) {
      if (!std::binary_search(image.begin(), image.end(), y)) {
        ++defect;
      }
    }

    bool injective = true;
    for (std::size_t a = 0; a < fi.pairs.size() && injective; ++a) {
      for (std::size_t b = a + 1; b < fi.pairs.size(); ++b) {
        if (fi.pairs[a].second == fi.pairs[b].second) {
          injective = false;
          break;
        }
      }
    }
    bool surjective = std::all_of(codomain.begin(), codomain.end(), [&](auto y) {
      return std::any_of(fi.pairs.begin(), fi.pairs.end(), [y](auto const& pr) {
        return pr.second == y;
      });
    });
    return {collapse, defect, injective, surjective};
  }

}  // namespace tmreg

#endif  // TMREG_DECOMPOSITION_HPP_
