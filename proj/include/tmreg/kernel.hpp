// Kernel classes, canonical cross-sections, collapse and defect.

#ifndef TMREG_KERNEL_HPP_
#define TMREG_KERNEL_HPP_

#include <cstddef>  // for size_t
#include <vector>   // for vector

#include "transformation.hpp"

namespace tmreg {

  //! The class y f^{-1} of ker(f), keyed by its image point y.
  struct KernelClass {
    point_type              image;
    std::vector<point_type> members;  // ascending

    friend bool operator==(KernelClass const&, KernelClass const&) = default;
  };

  //! Everything about ker(f) the characterizations consume.
  //!
  //! `classes` is pi(f) ordered by image point, `cross_section` is the
  //! canonical T_f (least element of every class, ascending). `collapse` is
  //! |X \ T_f| and `defect` is |X \ Xf|; both are counted from their
  //! definitions even though they always agree for finite X.
  struct KernelData {
    std::vector<KernelClass> classes;
    std::vector<point_type>  cross_section;
    std::vector<point_type>  image;
    std::size_t              collapse = 0;
    std::size_t              defect   = 0;
  };

  [[nodiscard]] inline KernelData kernel_data(Transformation const& f) {
    auto const n = f.degree();
    // slot[y] is the index in classes of y f^{-1}, or n if y is not an image
    std::vector<std::size_t> slot(n, n);
    KernelData               out;
    out.image = f.image_set();
    out.classes.reserve(out.image.size());
    for (auto y : out.image) {
      slot[y] = out.classes.size();
      out.classes.push_back({y, {}});
    }
    for (std::size_t x = 0; x < n; ++x) {
      out.classes[slot[f[x]]].members.push_back(static_cast<point_type>(x));
    }
    std::vector<bool> in_cross_section(n, false);
    for (auto const& c : out.classes) {
      in_cross_section[c.members.front()] = true;
    }
    std::vector<bool> in_image(n, false);
    for (auto y : out.image) {
      in_image[y] = true;
    }
    for (std::size_t x = 0; x < n; ++x) {
      if (in_cross_section[x]) {
        out.cross_section.push_back(static_cast<point_type>(x));
      } else {
        ++out.collapse;
      }
      if (!in_image[x]) {
        ++out.defect;
      }
    }
    return out;
  }

  //! c(f) = d(f). Always true for finite X; kept as its own predicate so the
  //! T(X) characterization reads as stated.
  [[nodiscard]] inline bool is_semi_balanced(Transformation const& f) {
    auto const k = kernel_data(f);
    return k.collapse == k.defect;
  }

}  // namespace tmreg

#endif  // TMREG_KERNEL_HPP_
