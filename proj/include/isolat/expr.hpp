#pragma once

#include <string>

#include "isolat/group.hpp"

namespace isolat {

// Group expressions:
//   expr := term (('x' | '×') term)*
//   term := Zn | Dn | Qn | SDn | Sn | An | Mn | ZM(m,n,r) | Heis(p) | G(n,k) | '(' expr ')'
// Dn, Qn and SDn take the group order; Mn is the modular group of order
// n = p^a (a >= 3). A product of Z terms becomes an Abelian spec.
// Throws SyntaxError (with position) or InvalidSpec.
GroupSpec parse_group_expr(const std::string& text);

}  // namespace isolat
