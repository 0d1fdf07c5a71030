#ifndef BURNCAT_EQUIVALENCE_HPP_
#define BURNCAT_EQUIVALENCE_HPP_

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "burncat/budget.hpp"
#include "burncat/canonical.hpp"
#include "burncat/catset.hpp"
#include "burncat/monoidal.hpp"

namespace burncat {

  //! forward: X -> Y, backward: Y -> X,
  //! alpha: backward . forward => Id_X, beta: forward . backward => Id_Y,
  //! with alpha and beta invertible.
  template <typename A>
  struct WeakEquivWitness {
    InternalFunctor<A>  forward;
    InternalFunctor<A>  backward;
    InternalNatTrans<A> alpha;
    InternalNatTrans<A> beta;
  };

  //! The raw tables of a witness, as stored in witness files.
  struct WitnessTables {
    std::vector<Index> forward0, forward1, backward0, backward1, alpha, beta;
  };

  template <typename A>
  WitnessTables tables(WeakEquivWitness<A> const& w);

  struct CheckResult {
    bool        ok = false;
    std::string reason;
  };

  //! Rebuilds both functors and both transformations from the raw tables
  //! with full validation and checks that alpha and beta are invertible.
  template <typename A>
  CheckResult check_witness(CatSet<A> const& x, CatSet<A> const& y, WitnessTables const& w);

  template <typename A>
  CheckResult check_witness(CatSet<A> const& x, CatSet<A> const& y, WeakEquivWitness<A> const& w) {
    return check_witness(x, y, tables(w));
  }

  template <typename A>
  WeakEquivWitness<A> witness_from_isomorphism(Isomorphism<A> const& iso);
  template <typename A>
  WeakEquivWitness<A> reverse(WeakEquivWitness<A> const& w);
  //! X ~ Y and Y ~ Z give X ~ Z.
  template <typename A>
  WeakEquivWitness<A> compose(WeakEquivWitness<A> const& xy, WeakEquivWitness<A> const& yz);
  template <typename A>
  WeakEquivWitness<A> union_witness(WeakEquivWitness<A> const& a, WeakEquivWitness<A> const& b);
  template <typename A>
  WeakEquivWitness<A> product_witness(WeakEquivWitness<A> const& a, WeakEquivWitness<A> const& b);

  //! Components of "isomorphic" on objects, numbered by least object.
  template <typename A>
  std::vector<Index> iso_class_labels(CatSet<A> const& x);

  template <typename A>
  struct Skeleton {
    FullSub<A>         part;
    InternalFunctor<A> embedding;
  };

  //! No set of objects closed under the action meets every isomorphism
  //! class exactly once: the class \p iso_class has no object fixed by
  //! every element that maps the class to itself.  \p orbit is the orbit
  //! of its least object.
  struct NoEquivariantSkeleton {
    std::vector<Index> orbit;
    std::vector<Index> iso_class;
  };

  template <typename A>
  using SkeletonResult = std::variant<Skeleton<A>, NoEquivariantSkeleton>;

  //! The full subcategory on an action-closed set of objects with exactly
  //! one object per isomorphism class; among the valid sets the one least
  //! in canonical order is taken.
  template <typename A>
  SkeletonResult<A> skeleton(CatSet<A> const& x);

  //! X ~ S through an equivariant retraction onto the skeleton.  It can be
  //! absent even when the skeleton exists: an object x with a nontrivial
  //! stabilizer may have no stabilizer-fixed isomorphism onto its
  //! representative.
  template <typename A>
  std::optional<WeakEquivWitness<A>> skeleton_retraction(CatSet<A> const& x,
                                                         Skeleton<A> const& s);

  enum class Strategy { Auto, Skeleton, Search };

  enum class Route { Invariants, Skeleton, SkeletonObstruction, Search, NotApplicable };

  char const* to_string(Route r) noexcept;

  template <typename A>
  struct WeqDecision {
    std::optional<WeakEquivWitness<A>> witness;
    Route                              route = Route::NotApplicable;
  };

  //! Decides X ~ Y.  Auto tries cheap invariants, then skeletons (when both
  //! sides retract equivariantly onto them), then the exhaustive search.
  //! Skeleton alone reports NotApplicable when it cannot decide.  Every
  //! positive answer is re-checked with check_witness before it is
  //! returned.  Throws BudgetExceeded if the search would exceed \p budget.
  template <typename A>
  WeqDecision<A> decide_weak_equivalence(CatSet<A> const& x,
                                         CatSet<A> const& y,
                                         Budget const&    budget   = Budget::from_env(),
                                         Strategy         strategy = Strategy::Auto);

  template <typename A>
  std::optional<WeakEquivWitness<A>> weak_equivalent(CatSet<A> const& x,
                                                     CatSet<A> const& y,
                                                     Budget const& budget = Budget::from_env()) {
    return decide_weak_equivalence(x, y, budget).witness;
  }

  //! Objects a, b are vertices of a common square (f, g): each lies in
  //! {src f, (src f).g, tgt f, (tgt f).g}.
  template <typename A>
  bool sqre_related(CatSet<A> const& x, Index a, Index b);

  template <typename A>
  struct Block {
    Index      representative;
    FullSub<A> part;
  };

  //! Blocks of the transitive closure of sqre_related, ordered by least
  //! object; each is a full subcategory and x is their disjoint union.
  template <typename A>
  std::vector<Block<A>> sqre_orbit_partition(CatSet<A> const& x);

  //! Union of the connected components (of the underlying category) whose
  //! skeleton is discrete, and the union of the rest.
  template <typename A>
  struct DiscreteSplit {
    FullSub<A> discrete;
    FullSub<A> nondiscrete;
  };

  template <typename A>
  DiscreteSplit<A> split_discrete(CatSet<A> const& x);

}  // namespace burncat

#endif  // BURNCAT_EQUIVALENCE_HPP_
