#include "burncat/budget.hpp"

#include <cstdlib>
#include <string>

#include "burncat/error.hpp"

namespace burncat {

  Budget Budget::from_env() {
    Budget      b;
    char const* env = std::getenv("BURNCAT_BUDGET");
    if (env == nullptr || *env == '\0') {
      return b;
    }
    char*              end = nullptr;
    unsigned long long v   = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0') {
      fail(Errc::ParseError, std::string("BURNCAT_BUDGET is not a number: ") + env);
    }
    b.max_search_arrows      = v;
    b.max_enumeration_arrows = v;
    return b;
  }

}  // namespace burncat
