#ifndef BURNCAT_BUDGET_HPP_
#define BURNCAT_BUDGET_HPP_

#include <cstddef>
#include <cstdint>

namespace burncat {

  //! Limits for the exhaustive searches.
  //!
  //! Equivalence search runs only when both sides have at most
  //! max_search_arrows arrows; class enumeration only up to
  //! max_enumeration_arrows.  Past either limit the call throws
  //! BudgetExceeded instead of guessing.
  struct Budget {
    std::size_t   max_search_arrows      = 8;
    std::size_t   max_enumeration_arrows = 4;
    std::uint64_t max_nodes              = 50'000'000;

    //! Defaults, with BURNCAT_BUDGET (an arrow count) raising or lowering
    //! both arrow limits when set.
    static Budget from_env();
  };

}  // namespace burncat

#endif  // BURNCAT_BUDGET_HPP_
