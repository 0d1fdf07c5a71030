#ifndef BURNCAT_GROUPOID_EXT_HPP_
#define BURNCAT_GROUPOID_EXT_HPP_

#include <string>
#include <vector>

#include "burncat/burnside.hpp"
#include "burncat/groupoid.hpp"

namespace burncat {

  //! The elements lying over the objects of \p sub, acted on by its arrows.
  //! Elements keep their relative order.
  GroupoidSet    restrict(GroupoidSet const& x, Subgroupoid const& sub);
  CatGroupoidSet restrict(CatGroupoidSet const& x, Subgroupoid const& sub);

  //! Data for passing between a transitive groupoid and the isotropy group
  //! at \p base.  star[x] is an arrow base -> x: the identity at the base,
  //! otherwise the least such arrow.  The choice is not canonical; another
  //! star gives isomorphic but different tables.
  struct TransitiveReduction {
    Groupoid           groupoid;
    Index              base = 0;
    IsotropyGroup      isotropy;
    std::vector<Index> star;
    std::vector<Index> element_of;  // loop at base -> group element, else kNone
  };

  //! Throws NotTransitive unless every object is reached from \p base.
  TransitiveReduction transitive_reduction(Groupoid const& g, Index base);

  //! The fibre over the base as a set acted on by the isotropy group.
  GSet    reduce(TransitiveReduction const& r, GroupoidSet const& x);
  CatGSet reduce(TransitiveReduction const& r, CatGroupoidSet const& x);

  //! Z x (objects): (u, x) has index u * |objects| + x and lies over x;
  //! (u, x).g = (u.k, src g) with k = star[x]^-1 g star[src g].
  GroupoidSet    expand(TransitiveReduction const& r, GSet const& z);
  CatGroupoidSet expand(TransitiveReduction const& r, CatGSet const& z);

  //! reduce(expand(z)) -> z
  Isomorphism<Group> reduce_expand(TransitiveReduction const& r, CatGSet const& z);
  //! expand(reduce(x)) -> x, (u, x) |-> u . star[x]^-1
  Isomorphism<Groupoid> expand_reduce(TransitiveReduction const& r, CatGroupoidSet const& x);

  //! A connected component as a subgroupoid, with its reduction at the
  //! least object.
  struct ComponentReduction {
    Subgroupoid         component;
    TransitiveReduction reduction;
  };

  std::vector<ComponentReduction> component_reductions(Groupoid const& g);

  //! Restrict to each component, then reduce to its isotropy group.
  std::vector<CatGSet> decompose(std::vector<ComponentReduction> const& parts,
                                 CatGroupoidSet const&                  x);
  std::vector<RigElement<Group>> decompose_rig(std::vector<ComponentReduction> const& parts,
                                               RigElement<Groupoid> const&           u,
                                               Budget const& budget = Budget::from_env());
  std::vector<ClassicalElement<Group>>
  decompose_classical(std::vector<ComponentReduction> const& parts,
                      ClassicalElement<Groupoid> const&      c);

  struct DecompositionReport {
    struct Component {
      std::vector<Index> objects;
      std::size_t        isotropy_order = 0;
      std::size_t        classes        = 0;  // enumerated isotropy classes used
    };
    std::vector<Component>   components;
    std::size_t              groupoid_classes = 0;
    std::size_t              tuples           = 0;
    bool                     injective        = true;
    bool                     surjective       = true;
    std::size_t              sums_checked     = 0;
    std::size_t              products_checked = 0;
    std::size_t              squares_checked  = 0;
    std::vector<std::string> failures;

    bool ok() const {
      return injective && surjective && failures.empty();
    }
  };

  //! Compares the classes over g having a member with at most \p bound
  //! arrows against tuples of isotropy-group classes (a component with k
  //! objects multiplies arrow counts by k): the decomposition must be a
  //! bijection, preserve sums and products of enumerated classes, and
  //! commute with the inclusion of classical classes.
  DecompositionReport decompose_ring(Groupoid const& g, std::size_t bound,
                                     Budget const& budget = Budget::from_env());

}  // namespace burncat

#endif  // BURNCAT_GROUPOID_EXT_HPP_
