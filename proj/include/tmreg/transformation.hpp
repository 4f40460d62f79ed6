// Transformations of {0, ..., n - 1}, acting on the right.

#ifndef TMREG_TRANSFORMATION_HPP_
#define TMREG_TRANSFORMATION_HPP_

#include <algorithm>    // for all_of, sort, unique
#include <compare>      // for strong_ordering
#include <cstddef>      // for size_t
#include <cstdint>      // for uint32_t
#include <initializer_list>
#include <numeric>      // for iota
#include <ostream>      // for ostream
#include <span>         // for span
#include <string>       // for string, to_string
#include <utility>      // for move
#include <vector>       // for vector

#include "errors.hpp"

namespace tmreg {

  using point_type = std::uint32_t;

  //! A total self-map of {0, ..., n - 1}. Position `x` of the image list
  //! holds `xf`. Maps are written on the right, so `f * g` first applies `f`
  //! and then `g`.
  //!
  //! Instances are immutable values; every constructor validates its input.
  class Transformation {
   public:
    explicit Transformation(std::vector<point_type> images)
        : _images(std::move(images)) {
      if (_images.empty()) {
        throw InvalidArgument("a transformation needs degree at least 1");
      }
      auto const n = _images.size();
      for (std::size_t x = 0; x < n; ++x) {
        if (_images[x] >= n) {
          throw InvalidArgument("image " + std::to_string(_images[x])
                                + " of point " + std::to_string(x)
                                + " is out of range for degree "
                                + std::to_string(n));
        }
      }
    }

    Transformation(std::initializer_list<point_type> images)
        : Transformation(std::vector<point_type>(images)) {}

    static Transformation identity(std::size_t n) {
      std::vector<point_type> images(n);
      std::iota(images.begin(), images.end(), point_type(0));
      return Transformation(std::move(images));
    }

    static Transformation constant(std::size_t n, point_type value) {
      return Transformation(std::vector<point_type>(n, value));
    }

    [[nodiscard]] std::size_t degree() const noexcept {
      return _images.size();
    }

    [[nodiscard]] point_type operator[](std::size_t x) const {
      return _images[x];
    }

    [[nodiscard]] std::span<point_type const> images() const noexcept {
      return _images;
    }

    //! The set Xf, ascending.
    [[nodiscard]] std::vector<point_type> image_set() const {
      std::vector<point_type> out(_images);
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      return out;
    }

    [[nodiscard]] std::size_t rank() const {
      return image_set().size();
    }

    [[nodiscard]] bool is_permutation() const {
      std::vector<bool> seen(degree(), false);
      for (auto y : _images) {
        if (seen[y]) {
          return false;
        }
        seen[y] = true;
      }
      return true;
    }

    [[nodiscard]] bool is_identity() const noexcept {
      for (std::size_t x = 0; x < _images.size(); ++x) {
        if (_images[x] != x) {
          return false;
        }
      }
      return true;
    }

    //! Inverse of a permutation; throws if this is not one.
    [[nodiscard]] Transformation inverse() const {
      if (!is_permutation()) {
        throw InvalidArgument("only permutations have an inverse");
      }
      std::vector<point_type> out(degree());
      for (std::size_t x = 0; x < degree(); ++x) {
        out[_images[x]] = static_cast<point_type>(x);
      }
      return Transformation(std::move(out));
    }

    friend bool operator==(Transformation const&, Transformation const&)
        = default;

    //! Lexicographic on image lists; shorter lists first.
    friend std::strong_ordering operator<=>(Transformation const& f,
                                            Transformation const& g) {
      if (auto c = f.degree() <=> g.degree(); c != 0) {
        return c;
      }
      return f._images <=> g._images;
    }

   private:
    std::vector<point_type> _images;
  };

  //! x(fg) = (xf)g.
  [[nodiscard]] inline Transformation compose(Transformation const& f,
                                              Transformation const& g) {
    if (f.degree() != g.degree()) {
      throw InvalidArgument("cannot compose transformations of degrees "
                            + std::to_string(f.degree()) + " and "
                            + std::to_string(g.degree()));
    }
    std::vector<point_type> out(f.degree());
    for (std::size_t x = 0; x < f.degree(); ++x) {
      out[x] = g[f[x]];
    }
    return Transformation(std::move(out));
  }

  [[nodiscard]] inline Transformation operator*(Transformation const& f,
                                                Transformation const& g) {
    return compose(f, g);
  }

  [[nodiscard]] inline Transformation power(Transformation const& f,
                                            std::size_t k) {
    auto out = Transformation::identity(f.degree());
    for (std::size_t i = 0; i < k; ++i) {
      out = compose(out, f);
    }
    return out;
  }

  //! "(0,0,1)"
  inline std::string to_string(Transformation const& f) {
    std::string out = "(";
    for (std::size_t x = 0; x < f.degree(); ++x) {
      if (x != 0) {
        out += ',';
      }
      out += std::to_string(f[x]);
    }
    return out + ")";
  }

  inline std::ostream& operator<<(std::ostream& os, Transformation const& f) {
    return os << to_string(f);
  }

}  // namespace tmreg

#endif  // TMREG_TRANSFORMATION_HPP_
