#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "biprod/matrix.hpp"
#include "biprod/result.hpp"

namespace biprod {

// Instance-scoped object handle. Base instances use a single coordinate (a
// dimension, a set size, a chain element); product instances concatenate the
// coordinates of their components.
class Obj {
 public:
  Obj() = default;
  explicit Obj(std::int64_t value) : parts_{value} {}
  explicit Obj(std::vector<std::int64_t> parts) : parts_(std::move(parts)) {}

  std::size_t arity() const noexcept { return parts_.size(); }
  std::span<const std::int64_t> parts() const noexcept { return parts_; }
  std::int64_t value() const { return parts_.at(0); }

  Obj slice(std::size_t first, std::size_t count) const;
  friend Obj concat(const Obj& left, const Obj& right);

  friend bool operator==(const Obj&, const Obj&) = default;
  friend auto operator<=>(const Obj&, const Obj&) = default;

 private:
  std::vector<std::int64_t> parts_;
};

// The unique morphism of a thin category; dom/cod carry all the information.
struct Arrow {
  friend bool operator==(Arrow, Arrow) = default;
};

using BoolMatrix = Matrix<BooleanSemiring>;
using NatMatrix = Matrix<NaturalSemiring>;
using RatMatrix = Matrix<RationalField>;

using Payload = std::variant<Arrow, BoolMatrix, NatMatrix, RatMatrix>;

class Mor {
 public:
  Mor(Obj dom, Obj cod, Payload payload);
  Mor(Obj dom, Obj cod, std::vector<Payload> parts);

  const Obj& dom() const noexcept { return dom_; }
  const Obj& cod() const noexcept { return cod_; }
  std::span<const Payload> parts() const noexcept { return parts_; }
  const Payload& payload() const { return parts_.at(0); }

  template <class T>
  const T& as() const {
    return std::get<T>(payload());
  }

  Mor slice(std::size_t first, std::size_t count) const;
  friend Mor concat(const Mor& left, const Mor& right);

  friend bool operator==(const Mor&, const Mor&) = default;

 private:
  Obj dom_;
  Obj cod_;
  std::vector<Payload> parts_;
};

std::string describe(const Obj& a);
std::string describe(const Payload& p);
std::string describe(const Mor& f);

// Empty when f and g are equal; otherwise names the first disagreement
// (typing, or the first differing matrix entry).
std::string locate_difference(const Mor& f, const Mor& g);

struct Equation {
  std::string label;
  Mor lhs;
  Mor rhs;
  bool holds;
  std::string difference;
};

struct CheckResult {
  std::string name;
  std::vector<Equation> details;

  bool passed() const;
  const Equation* first_failure() const;
  std::string summary() const;
  void expect_equal(std::string label, const Mor& lhs, const Mor& rhs);
  void append(const CheckResult& other);
};

// Minimal category contract. compose(g, f) means "f, then g".
class Category {
 public:
  virtual ~Category() = default;

  virtual std::string name() const = 0;
  virtual std::size_t arity() const { return 1; }

  Result<Mor> compose(const Mor& g, const Mor& f) const;
  // compose_chain({h, g, f}) == h o g o f.
  Result<Mor> compose_chain(std::initializer_list<Mor> maps) const;
  Mor identity(const Obj& a) const { return make_identity(a); }
  bool equal(const Mor& f, const Mor& g) const { return f == g; }

  // Every morphism a -> b when the homset is finite with at most `limit`
  // elements; nullopt otherwise.
  virtual std::optional<std::vector<Mor>> enumerate_hom(const Obj& a, const Obj& b,
                                                        std::size_t limit) const;

 protected:
  virtual Mor compose_unchecked(const Mor& g, const Mor& f) const = 0;
  virtual Mor make_identity(const Obj& a) const = 0;
};

class InversePair {
 public:
  const Mor& fwd() const noexcept { return fwd_; }
  const Mor& bwd() const noexcept { return bwd_; }
  const CheckResult& certificate() const noexcept { return certificate_; }
  InversePair inverse() const;

  friend Result<InversePair> certify_inverse_pair(const Category& cat, const Mor& fwd,
                                                  const Mor& bwd, std::string label);

 private:
  InversePair(Mor fwd, Mor bwd, CheckResult certificate)
      : fwd_(std::move(fwd)), bwd_(std::move(bwd)), certificate_(std::move(certificate)) {}

  Mor fwd_;
  Mor bwd_;
  CheckResult certificate_;
};

// Checks g o f = id and f o g = id. DomainMismatch if the types do not line up.
Result<CheckResult> check_inverse_pair(const Category& cat, const Mor& f, const Mor& g);

// As check_inverse_pair, but yields a certified InversePair or WitnessInvalid
// naming the failing composite.
Result<InversePair> certify_inverse_pair(const Category& cat, const Mor& fwd, const Mor& bwd,
                                         std::string label = "inverse pair");

}  // namespace biprod
