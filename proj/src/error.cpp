#include "burncat/error.hpp"

namespace burncat {

  char const* to_string(Errc code) noexcept {
    switch (code) {
      case Errc::NotSquare: return "NotSquare";
      case Errc::OutOfRange: return "OutOfRange";
      case Errc::NotAssociative: return "NotAssociative";
      case Errc::NoIdentity: return "NoIdentity";
      case Errc::NoInverse: return "NoInverse";
      case Errc::NotHomomorphism: return "NotHomomorphism";
      case Errc::IdentityNotFixed: return "IdentityNotFixed";
      case Errc::ActionNotAssociative: return "ActionNotAssociative";
      case Errc::GroupMismatch: return "GroupMismatch";
      case Errc::NotEquivariant: return "NotEquivariant";
      case Errc::CategoryAxiomViolated: return "CategoryAxiomViolated";
      case Errc::CompDomainMismatch: return "CompDomainMismatch";
      case Errc::NotComposable: return "NotComposable";
      case Errc::NotFunctorial: return "NotFunctorial";
      case Errc::EndpointMismatch: return "EndpointMismatch";
      case Errc::NaturalityViolated: return "NaturalityViolated";
      case Errc::BudgetExceeded: return "BudgetExceeded";
      case Errc::StructureMapViolated: return "StructureMapViolated";
      case Errc::ActionAxiomViolated: return "ActionAxiomViolated";
      case Errc::NotSubgroupoid: return "NotSubgroupoid";
      case Errc::NotTransitive: return "NotTransitive";
      case Errc::ParseError: return "ParseError";
      case Errc::SchemaError: return "SchemaError";
    }
    return "Unknown";
  }

}  // namespace burncat
