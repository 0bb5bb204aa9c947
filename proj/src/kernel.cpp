#include "biprod/kernel.hpp"

#include <sstream>
#include <stdexcept>

namespace biprod {

Obj Obj::slice(std::size_t first, std::size_t count) const {
  if (first + count > parts_.size()) throw std::out_of_range("Obj::slice");
  return Obj(std::vector<std::int64_t>(parts_.begin() + first, parts_.begin() + first + count));
}

Obj concat(const Obj& left, const Obj& right) {
  std::vector<std::int64_t> parts = left.parts_;
  parts.insert(parts.end(), right.parts_.begin(), right.parts_.end());
  return Obj(std::move(parts));
}

Mor::Mor(Obj dom, Obj cod, Payload payload)
    : dom_(std::move(dom)), cod_(std::move(cod)), parts_{std::move(payload)} {}

Mor::Mor(Obj dom, Obj cod, std::vector<Payload> parts)
    : dom_(std::move(dom)), cod_(std::move(cod)), parts_(std::move(parts)) {}

Mor Mor::slice(std::size_t first, std::size_t count) const {
  if (first + count > parts_.size()) throw std::out_of_range("Mor::slice");
  return Mor(dom_.slice(first, count), cod_.slice(first, count),
             std::vector<Payload>(parts_.begin() + first, parts_.begin() + first + count));
}

Mor concat(const Mor& left, const Mor& right) {
  std::vector<Payload> parts = left.parts_;
  parts.insert(parts.end(), right.parts_.begin(), right.parts_.end());
  return Mor(concat(left.dom_, right.dom_), concat(left.cod_, right.cod_), std::move(parts));
}

std::string describe(const Obj& a) {
  if (a.arity() == 1) return std::to_string(a.value());
  std::string out = "(";
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (i) out += ", ";
    out += std::to_string(a.parts()[i]);
  }
  return out + ")";
}

std::string describe(const Payload& p) {
  return std::visit(
      [](const auto& v) -> std::string {
        if constexpr (std::is_same_v<std::decay_t<decltype(v)>, Arrow>) {
          return "<=";
        } else {
          return v.to_string();
        }
      },
      p);
}

std::string describe(const Mor& f) {
  std::string body;
  if (f.parts().size() == 1) {
    body = describe(f.payload());
  } else {
    body = "(";
    for (std::size_t i = 0; i < f.parts().size(); ++i) {
      if (i) body += ", ";
      body += describe(f.parts()[i]);
    }
    body += ")";
  }
  return describe(f.dom()) + " -> " + describe(f.cod()) + " " + body;
}

namespace {

std::string payload_difference(const Payload& a, const Payload& b) {
  if (a.index() != b.index()) return "payload kinds differ";
  return std::visit(
      [&](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Arrow>) {
          return {};
        } else {
          const T& y = std::get<T>(b);
          if (x.rows() != y.rows() || x.cols() != y.cols()) return "payload shapes differ";
          for (std::size_t i = 0; i < x.rows(); ++i)
            for (std::size_t j = 0; j < x.cols(); ++j)
              if (!(x.get(i, j) == y.get(i, j))) {
                std::ostringstream os;
                os << "entry (" << i << ", " << j << "): "
                   << T::semiring::to_string(x.get(i, j)) << " vs "
                   << T::semiring::to_string(y.get(i, j));
                return os.str();
              }
          return {};
        }
      },
      a);
}

}  // namespace

std::string locate_difference(const Mor& f, const Mor& g) {
  if (f.dom() != g.dom()) return "domains differ: " + describe(f.dom()) + " vs " + describe(g.dom());
  if (f.cod() != g.cod())
    return "codomains differ: " + describe(f.cod()) + " vs " + describe(g.cod());
  if (f.parts().size() != g.parts().size()) return "component counts differ";
  for (std::size_t k = 0; k < f.parts().size(); ++k) {
    std::string d = payload_difference(f.parts()[k], g.parts()[k]);
    if (d.empty()) continue;
    if (f.parts().size() > 1) d = "component " + std::to_string(k) + ": " + d;
    return d;
  }
  return {};
}

bool CheckResult::passed() const {
  for (const auto& eq : details)
    if (!eq.holds) return false;
  return true;
}

const Equation* CheckResult::first_failure() const {
  for (const auto& eq : details)
    if (!eq.holds) return &eq;
  return nullptr;
}

std::string CheckResult::summary() const {
  if (const Equation* bad = first_failure())
    return name + ": failed at " + bad->label + " (" + bad->difference + ")";
  return name + ": " + std::to_string(details.size()) + " equations hold";
}

void CheckResult::expect_equal(std::string label, const Mor& lhs, const Mor& rhs) {
  std::string diff = locate_difference(lhs, rhs);
  const bool holds = diff.empty();
  details.push_back(Equation{std::move(label), lhs, rhs, holds, std::move(diff)});
}

void CheckResult::append(const CheckResult& other) {
  for (const auto& eq : other.details) {
    Equation copy = eq;
    copy.label = other.name + ": " + eq.label;
    details.push_back(std::move(copy));
  }
}

Result<Mor> Category::compose(const Mor& g, const Mor& f) const {
  if (f.cod() != g.dom()) {
    return Error{ErrorKind::DomainMismatch, "cannot compose: codomain " + describe(f.cod()) +
                                                " does not match domain " + describe(g.dom())};
  }
  return compose_unchecked(g, f);
}

Result<Mor> Category::compose_chain(std::initializer_list<Mor> maps) const {
  if (maps.size() == 0) throw std::invalid_argument("compose_chain needs at least one map");
  auto it = std::rbegin(maps);
  Mor acc = *it;
  for (++it; it != std::rend(maps); ++it) {
    auto next = compose(*it, acc);
    if (!next) return next.error();
    acc = std::move(next).value();
  }
  return acc;
}

std::optional<std::vector<Mor>> Category::enumerate_hom(const Obj&, const Obj&,
                                                        std::size_t) const {
  return std::nullopt;
}

InversePair InversePair::inverse() const {
  CheckResult swapped{certificate_.name + " (inverse)", certificate_.details};
  return InversePair(bwd_, fwd_, std::move(swapped));
}

Result<CheckResult> check_inverse_pair(const Category& cat, const Mor& f, const Mor& g) {
  if (f.dom() != g.cod() || f.cod() != g.dom()) {
    return Error{ErrorKind::DomainMismatch,
                 "inverse pair types do not match: f: " + describe(f.dom()) + " -> " +
                     describe(f.cod()) + ", g: " + describe(g.dom()) + " -> " + describe(g.cod())};
  }
  CheckResult out{"inverse pair", {}};
  out.expect_equal("g o f = id", cat.compose(g, f).value(), cat.identity(f.dom()));
  out.expect_equal("f o g = id", cat.compose(f, g).value(), cat.identity(f.cod()));
  return out;
}

Result<InversePair> certify_inverse_pair(const Category& cat, const Mor& fwd, const Mor& bwd,
                                         std::string label) {
  auto check = check_inverse_pair(cat, fwd, bwd);
  if (!check) {
    return Error{check.error().kind, label + ": " + check.error().message};
  }
  CheckResult certificate = std::move(check).value();
  certificate.name = std::move(label);
  if (!certificate.passed()) {
    return Error{ErrorKind::WitnessInvalid, certificate.summary()};
  }
  return InversePair(fwd, bwd, std::move(certificate));
}

}  // namespace biprod
