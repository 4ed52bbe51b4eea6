#include "bracelab/limits.hpp"

#include <cstdlib>
#include <string>

namespace bracelab {

Limits Limits::from_environment() {
  Limits limits;
  if (char const* raw = std::getenv("BRACELAB_MAX_ORDER"); raw != nullptr && *raw != '\0') {
    try {
      std::size_t consumed = 0;
      unsigned long long value = std::stoull(raw, &consumed);
      if (consumed == std::string(raw).size() && value > 0) {
        limits.max_order = static_cast<std::size_t>(value);
      }
    } catch (std::exception const&) {
      // Malformed values leave the default in place.
    }
  }
  return limits;
}

}  // namespace bracelab
