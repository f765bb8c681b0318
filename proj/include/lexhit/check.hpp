#pragma once

#include <stdexcept>
#include <string>

namespace lexhit {

// Thrown when an instrumented combinatorial bound is violated. These bounds
// are guaranteed by the algorithms, so a violation is a bug, not bad input.
class BoundViolation : public std::logic_error {
 public:
  explicit BoundViolation(const std::string& what) : std::logic_error(what) {}
};

namespace detail {
[[noreturn]] void bound_failed(const char* expr, const std::string& message);
}  // namespace detail

}  // namespace lexhit

// Always-on assertion for instrumented bounds; not compiled out in release.
#define LEXHIT_CHECK(expr, message) \
  ((expr) ? static_cast<void>(0) : ::lexhit::detail::bound_failed(#expr, (message)))
