#ifndef BURNCAT_BURNSIDE_HPP_
#define BURNCAT_BURNSIDE_HPP_

#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "burncat/budget.hpp"
#include "burncat/canonical.hpp"
#include "burncat/equivalence.hpp"

namespace burncat {

  //! One indecomposable block class with its multiplicity.  When the block
  //! retracts onto a skeleton, the representative is that skeleton and the
  //! key is its canonical form, so equal keys mean equivalent blocks.
  //! Otherwise the representative is the block itself and classes with
  //! different keys may still be equivalent; the rig operations merge them
  //! with the equivalence engine.
  template <typename A>
  struct RigClass {
    CanonicalClass key;
    CatSet<A>      representative;
    std::size_t    multiplicity = 1;
    bool           skeletal     = false;
  };

  //! An element of the categorified Burnside rig: a multiset of block
  //! classes, sorted by key.
  template <typename A>
  struct RigElement {
    A                        acting;
    std::vector<RigClass<A>> classes;

    std::size_t size() const;  // number of blocks, with multiplicity
  };

  template <typename A>
  RigElement<A> rig_zero(A const& acting);
  template <typename A>
  RigElement<A> rig_one(A const& acting);
  template <typename A>
  RigElement<A> rig_class(CatSet<A> const& x, Budget const& budget = Budget::from_env());
  template <typename A>
  RigElement<A> rig_add(RigElement<A> const& u, RigElement<A> const& v,
                        Budget const& budget = Budget::from_env());
  template <typename A>
  RigElement<A> rig_mul(RigElement<A> const& u, RigElement<A> const& v,
                        Budget const& budget = Budget::from_env());
  template <typename A>
  RigElement<A> rig_scale(RigElement<A> const& u, std::size_t n);
  template <typename A>
  bool rig_equal(RigElement<A> const& u, RigElement<A> const& v,
                 Budget const& budget = Budget::from_env());
  //! The disjoint union of the representatives, with multiplicity.
  template <typename A>
  CatSet<A> realize(RigElement<A> const& u);

  //! pos - neg in the Grothendieck ring.  Rig elements are multisets, so
  //! the rig is cancellative and equality is plain cross-addition.
  template <typename A>
  struct RingElement {
    RigElement<A> pos;
    RigElement<A> neg;
  };

  template <typename A>
  RingElement<A> ring_make(RigElement<A> pos, RigElement<A> neg);
  template <typename A>
  RingElement<A> ring_add(RingElement<A> const& r, RingElement<A> const& s,
                          Budget const& budget = Budget::from_env());
  template <typename A>
  RingElement<A> ring_neg(RingElement<A> const& r);
  template <typename A>
  RingElement<A> ring_mul(RingElement<A> const& r, RingElement<A> const& s,
                          Budget const& budget = Budget::from_env());
  template <typename A>
  bool ring_equal(RingElement<A> const& r, RingElement<A> const& s,
                  Budget const& budget = Budget::from_env());

  //! A finite action set up to isomorphism: orbit counts per transitive type.
  template <typename A>
  struct ClassicalElement {
    A                                     acting;
    std::map<TransitiveType, std::size_t> counts;
  };

  template <typename A>
  ClassicalElement<A> classical_class(ActionSet<A> const& x);
  //! Disjoint union of coset sets, one per orbit.
  template <typename A>
  ActionSet<A> realize(ClassicalElement<A> const& c);
  template <typename A>
  ClassicalElement<A> classical_add(ClassicalElement<A> const& a, ClassicalElement<A> const& b);
  template <typename A>
  ClassicalElement<A> classical_mul(ClassicalElement<A> const& a, ClassicalElement<A> const& b);
  template <typename A>
  bool classical_equal(ClassicalElement<A> const& a, ClassicalElement<A> const& b);

  //! The class of the discrete categorified set on realize(c).
  template <typename A>
  RigElement<A> iota_rig(ClassicalElement<A> const& c, Budget const& budget = Budget::from_env());
  template <typename A>
  RingElement<A> iota_ring(ClassicalElement<A> const& pos, ClassicalElement<A> const& neg,
                           Budget const& budget = Budget::from_env());
  //! c with iota_rig(c) == u, if there is one.  Absent as soon as some
  //! block has a non-identity arrow in its skeleton or no equivariant
  //! retraction onto a skeleton at all.
  template <typename A>
  std::optional<ClassicalElement<A>> iota_preimage(RigElement<A> const& u);

  //! Restriction of the action along phi: x.h := x.phi(h).
  GSet    induce(GroupHom const& phi, GSet const& x);
  CatGSet induce(GroupHom const& phi, CatGSet const& x);
  RigElement<Group> induce_rig(GroupHom const& phi, RigElement<Group> const& u,
                               Budget const& budget = Budget::from_env());
  ClassicalElement<Group> induce_classical(GroupHom const& phi, ClassicalElement<Group> const& c);

  //! Indecomposable instances (a single block) with at most \p max_arrows
  //! arrows, one per isomorphism class, ordered by size then key.  Throws
  //! BudgetExceeded above budget.max_enumeration_arrows.
  template <typename A>
  std::vector<CatSet<A>> enumerate_blocks(A const& acting, std::size_t max_arrows,
                                          Budget const& budget = Budget::from_env());
  //! All instances with at most \p max_arrows arrows up to isomorphism,
  //! the empty one first.
  template <typename A>
  std::vector<CatSet<A>> enumerate_instances(A const& acting, std::size_t max_arrows,
                                             Budget const& budget = Budget::from_env());

  template <typename A>
  struct EnumeratedClass {
    RigElement<A> element;
    CatSet<A>     representative;  // fewest arrows in the class
  };

  //! Weak-equivalence classes having a member with at most \p max_arrows
  //! arrows, the empty class first.
  template <typename A>
  std::vector<EnumeratedClass<A>> enumerate_classes(A const& acting, std::size_t max_arrows,
                                                    Budget const& budget = Budget::from_env());

  //! A random valid instance with at most \p max_arrows arrows, or none if
  //! the drawn shape admitted no composition within the search limit.
  template <typename A>
  std::optional<CatSet<A>> random_catset(A const& acting, std::size_t max_arrows,
                                         std::mt19937_64& rng);

  struct CancellationReport {
    std::size_t              instances = 0;
    std::size_t              triples   = 0;
    std::vector<std::string> counterexamples;
  };

  //! Checks X + E ~ Y + E implies X ~ Y over all instances with at most
  //! \p bound arrows, deciding each with the equivalence engine directly.
  template <typename A>
  CancellationReport test_cancellation(A const& acting, std::size_t bound,
                                       Budget const& budget = Budget::from_env());

}  // namespace burncat

#endif  // BURNCAT_BURNSIDE_HPP_
