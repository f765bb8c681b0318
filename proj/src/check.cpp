#include "lexhit/check.hpp"

namespace lexhit::detail {

void bound_failed(const char* expr, const std::string& message) {
  throw BoundViolation(message + " (failed: " + expr + ")");
}

}  // namespace lexhit::detail
