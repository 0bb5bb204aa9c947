#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "biprod/instances.hpp"

namespace biprod::cli {

// A parsed show expression such as t(1,1), e'(2,3) or star(1,1,2,2). For
// product instances an object is written as a tuple: c((1,0),(2,-1)).
struct Expression {
  std::string name;
  std::vector<Obj> args;
};

Result<Expression> parse_expression(std::string_view text);

// Builds the named map on `instance` and renders its payload, plus its 2x2
// components when the map goes from a coproduct to a product.
Result<std::string> show(const Instance& instance, std::string_view expression);

}  // namespace biprod::cli
