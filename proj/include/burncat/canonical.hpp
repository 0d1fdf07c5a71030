#ifndef BURNCAT_CANONICAL_HPP_
#define BURNCAT_CANONICAL_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "burncat/catset.hpp"
#include "burncat/monoidal.hpp"

namespace burncat {

  namespace canon {

    //! A vertex- and edge-colored directed graph.
    struct Graph {
      std::size_t                                n = 0;
      std::vector<std::uint32_t>                 color;
      std::vector<std::array<std::uint32_t, 3>>  edges;  // (from, to, color)
    };

    //! Canonical position of every vertex.  Two graphs are isomorphic iff
    //! relabelling each by its canonical labeling gives identical graphs.
    //! Uses individualization-refinement with pruning by the automorphisms
    //! found at equal leaves.
    std::vector<Index> canonical_labeling(Graph const& g);

  }  // namespace canon

  //! Blocks of the equivalence on objects generated by x ~ x.g and
  //! src(f) ~ tgt(f); labels are numbered by least object.
  template <typename A>
  std::vector<Index> block_labels(CatSet<A> const& x);

  //! Serialized canonical representative; equal iff isomorphic.
  struct CanonicalClass {
    std::string bytes;
    std::string hex() const;
    friend bool operator==(CanonicalClass const&, CanonicalClass const&) = default;
    friend auto operator<=>(CanonicalClass const&, CanonicalClass const&) = default;
  };

  CanonicalClass from_hex(std::string const& hex);

  //! Canonical form with the relabelling that produces it: the canonical
  //! representative is relabel(x, object_perm, arrow_perm).
  struct Canonized {
    CanonicalClass     key;
    std::vector<Index> object_perm;
    std::vector<Index> arrow_perm;
  };

  template <typename A>
  Canonized canonize(CatSet<A> const& x);

  template <typename A>
  CanonicalClass canonical_form(CatSet<A> const& x) {
    return canonize(x).key;
  }

  //! Serializes the tables of \p x as they are (no relabelling).
  template <typename A>
  std::string encode(CatSet<A> const& x);

  //! Rebuilds an instance from encode() output; throws ParseError on
  //! malformed input and SchemaError if the acting structure does not fit.
  template <typename A>
  CatSet<A> decode(A const& acting, std::string const& bytes);

  template <typename A>
  std::optional<Isomorphism<A>> catset_isomorphic(CatSet<A> const& x, CatSet<A> const& y);

}  // namespace burncat

#endif  // BURNCAT_CANONICAL_HPP_
