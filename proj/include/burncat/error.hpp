#ifndef BURNCAT_ERROR_HPP_
#define BURNCAT_ERROR_HPP_

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace burncat {

  using Index = std::uint32_t;

  //! Marks an undefined table entry (partial action, non-composable pair).
  inline constexpr Index kNone = std::numeric_limits<Index>::max();

  enum class Errc {
    NotSquare,
    OutOfRange,
    NotAssociative,
    NoIdentity,
    NoInverse,
    NotHomomorphism,
    IdentityNotFixed,
    ActionNotAssociative,
    GroupMismatch,
    NotEquivariant,
    CategoryAxiomViolated,
    CompDomainMismatch,
    NotComposable,
    NotFunctorial,
    EndpointMismatch,
    NaturalityViolated,
    BudgetExceeded,
    StructureMapViolated,
    ActionAxiomViolated,
    NotSubgroupoid,
    NotTransitive,
    ParseError,
    SchemaError
  };

  char const* to_string(Errc code) noexcept;

  class Error : public std::runtime_error {
   public:
    Error(Errc code, std::string const& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what),
          _code(code) {}

    Errc code() const noexcept {
      return _code;
    }

   private:
    Errc _code;
  };

  [[noreturn]] inline void fail(Errc code, std::string const& what) {
    throw Error(code, what);
  }

}  // namespace burncat

#endif  // BURNCAT_ERROR_HPP_
