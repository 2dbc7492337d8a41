#include "cutrank/guards.hpp"

#include <cstdlib>
#include <string>

namespace cutrank {

namespace {

void apply_env(const char* name, std::uint64_t* slot) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (end != nullptr && *end == '\0' && v > 0) *slot = v;
}

}  // namespace

Guards default_guards() {
  Guards g;
  apply_env("CUTRANK_GUARD_FAMILY", &g.max_family);
  apply_env("CUTRANK_GUARD_NODES", &g.max_nodes);
  return g;
}

}  // namespace cutrank
