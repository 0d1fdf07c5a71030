#ifndef BURNCAT_GROUP_HPP_
#define BURNCAT_GROUP_HPP_

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "burncat/error.hpp"

namespace burncat {

  //! A finite group given by its Cayley table.
  //!
  //! Elements are 0, ..., order() - 1.  Instances are immutable and cheap to
  //! copy; copies share the table.  Besides the group operations the class
  //! exposes the one-object groupoid interface (num_objects, source, target,
  //! unit, compose) so that actions of groups and of groupoids can be
  //! handled by the same code.
  class Group {
   public:
    //! Validates \p cayley: square, entries in range, two-sided identity,
    //! associativity and inverses, in that order.
    static Group from_table(std::vector<std::vector<Index>> const& cayley);

    static Group trivial();
    static Group cyclic(std::size_t n);
    static Group symmetric(std::size_t n);
    static Group direct_product(Group const& a, Group const& b);

    std::size_t order() const noexcept {
      return _d->order;
    }
    Index identity() const noexcept {
      return _d->identity;
    }
    Index mul(Index g, Index h) const noexcept {
      return _d->mul[g * _d->order + h];
    }
    Index inv(Index g) const noexcept {
      return _d->inv[g];
    }
    std::vector<std::vector<Index>> table() const;

    std::size_t num_objects() const noexcept {
      return 1;
    }
    std::size_t num_elements() const noexcept {
      return order();
    }
    Index source(Index) const noexcept {
      return 0;
    }
    Index target(Index) const noexcept {
      return 0;
    }
    Index unit(Index) const noexcept {
      return identity();
    }
    Index compose(Index g, Index h) const noexcept {
      return mul(g, h);
    }
    Index inverse(Index g) const noexcept {
      return inv(g);
    }

    friend bool operator==(Group const& a, Group const& b) noexcept;

   private:
    struct Data {
      std::size_t        order;
      Index              identity;
      std::vector<Index> mul;
      std::vector<Index> inv;
    };
    explicit Group(std::shared_ptr<Data const> d) : _d(std::move(d)) {}
    std::shared_ptr<Data const> _d;
  };

  //! A homomorphism of finite groups, validated on construction.
  class GroupHom {
   public:
    static GroupHom make(Group source, Group target, std::vector<Index> map);

    Group const& source() const noexcept {
      return _source;
    }
    Group const& target() const noexcept {
      return _target;
    }
    Index operator()(Index h) const noexcept {
      return _map[h];
    }
    std::vector<Index> const& map() const noexcept {
      return _map;
    }

   private:
    GroupHom(Group s, Group t, std::vector<Index> m)
        : _source(std::move(s)), _target(std::move(t)), _map(std::move(m)) {}
    Group              _source;
    Group              _target;
    std::vector<Index> _map;
  };

  //! Sorted element list of the subgroup generated by \p gens.
  std::vector<Index> generated_subgroup(Group const&             g,
                                        std::vector<Index> const& gens);

  //! Every subgroup of \p g as a sorted element list, ordered by size and
  //! then lexicographically.
  std::vector<std::vector<Index>> all_subgroups(Group const& g);

  //! x^{-1} H x, sorted.
  std::vector<Index> conjugate_subgroup(Group const&             g,
                                        std::vector<Index> const& h,
                                        Index                     x);

  //! Lexicographically least conjugate of \p h; equal iff conjugate.
  std::vector<Index> conjugacy_key(Group const& g, std::vector<Index> const& h);

  std::string describe(Group const& g);

}  // namespace burncat

#endif  // BURNCAT_GROUP_HPP_
