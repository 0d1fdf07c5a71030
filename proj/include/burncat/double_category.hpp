#ifndef BURNCAT_DOUBLE_CATEGORY_HPP_
#define BURNCAT_DOUBLE_CATEGORY_HPP_

#include <array>
#include <string>
#include <vector>

#include "burncat/catset.hpp"

namespace burncat {

  //! Raw tables of a double category.  Horizontal morphisms and squares are
  //! (x, g) and (f, g) pairs of the translation construction, but any
  //! tables can be stored here and checked with verify_double_axioms.
  //!
  //! The horizontal morphism (x, g) goes from x.g to x, and (x, g) after
  //! (x.g, h) is (x, gh).  The square (f, g) goes horizontally from f.g to f.
  struct DoubleCategory {
    std::size_t                       num_objects = 0;
    std::vector<std::array<Index, 2>> h;
    std::vector<Index>                h_src, h_tgt, h_ident;
    std::vector<std::array<Index, 3>> h_comp;

    std::size_t                       num_vertical = 0;
    std::vector<std::array<Index, 2>> squares;
    std::vector<Index>                sq_src, sq_tgt, sq_ident;
    std::vector<std::array<Index, 3>> sq_comp;

    // vertical structure: source, target and identity on both levels
    std::vector<Index> s0, t0, i0;  // vertical -> object, object -> vertical
    std::vector<Index> s1, t1, i1;  // square -> h, h -> square
    // vertical composition on vertical morphisms and on squares
    std::vector<std::array<Index, 3>> m0, m1;
  };

  template <typename A>
  DoubleCategory translation_double(CatSet<A> const& x);

  //! (src f, (src f).g, tgt f, (tgt f).g) for the square (f, g).
  std::array<Index, 4> square_vertices(DoubleCategory const& d, Index square);

  //! One line per violated law; empty when d is a double category.
  std::vector<std::string> verify_double_axioms(DoubleCategory const& d);

}  // namespace burncat

#endif  // BURNCAT_DOUBLE_CATEGORY_HPP_
