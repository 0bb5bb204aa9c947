#include "biprod/instances.hpp"

#include <string>

namespace biprod {

std::optional<Mor> Instance::native_sum(const Mor&, const Mor&) const { return std::nullopt; }

namespace {

Result<InstancePtr> make_base(std::string_view selector, std::size_t bound) {
  if (selector == "finrel") return finrel(bound);
  if (selector == "mat-nat") return mat_semiring(SemiringKind::Naturals, bound);
  if (selector == "mat-bool") return mat_semiring(SemiringKind::Booleans, bound);
  if (selector == "mat-rat") return mat_semiring(SemiringKind::Rationals, bound);
  if (selector == "z-chain") {
    const auto b = static_cast<std::int64_t>(bound);
    return z_chain(-b, b);
  }
  return Error{ErrorKind::UnknownInstance, "unknown instance '" + std::string(selector) + "'"};
}

}  // namespace

Result<InstancePtr> make_instance(std::string_view selector, std::size_t bound) {
  constexpr std::string_view prefix = "product:";
  if (selector.substr(0, prefix.size()) != prefix) return make_base(selector, bound);
  const std::string_view rest = selector.substr(prefix.size());
  const auto plus = rest.find('+');
  if (plus == std::string_view::npos)
    return Error{ErrorKind::UnknownInstance,
                 "product selector must look like product:<a>+<b>, got '" + std::string(selector) + "'"};
  auto left = make_base(rest.substr(0, plus), bound);
  if (!left) return left.error();
  auto right = make_base(rest.substr(plus + 1), bound);
  if (!right) return right.error();
  return product_instance(*left, *right);
}

}  // namespace biprod
