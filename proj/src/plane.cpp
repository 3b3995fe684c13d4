#include "pierce/plane.hpp"

namespace pierce {

std::string role_name(Role r) {
  switch (r) {
    case Role::P: return "P";
    case Role::B: return "B";
    case Role::G: return "G";
    case Role::R: return "R";
  }
  return "?";
}

Role parse_role(std::string_view name) {
  if (name == "P") return Role::P;
  if (name == "B") return Role::B;
  if (name == "G") return Role::G;
  if (name == "R") return Role::R;
  throw UsageError("unknown role '" + std::string(name) + "'");
}

}  // namespace pierce
