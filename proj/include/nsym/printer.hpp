#pragma once

#include "nsym/expr.hpp"
#include "nsym/space.hpp"

#include <string>

namespace nsym {

/// Plain-text form in the input grammar; parsing it back yields a
/// canonically identical expression.
std::string print_expr(const Expr& e, const Space& sp);

std::string print_pilin(const PiLin& s);

}  // namespace nsym
