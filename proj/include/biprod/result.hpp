#pragma once

#include <exception>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <variant>

namespace biprod {

enum class ErrorKind {
  DomainMismatch,
  InternalAgreementFailure,
  WitnessInvalid,
  NoNullaryStructure,
  CanonicalMismatch,
  UnknownInstance,
  InvalidBounds,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

struct Error {
  ErrorKind kind;
  std::string message;

  std::string describe() const;
};

// Thrown by Result::value() on an error; construction code relies on it to
// unwind to the nearest capture() boundary.
class BadResultAccess : public std::exception {
 public:
  explicit BadResultAccess(Error error);
  const Error& error() const noexcept { return error_; }
  const char* what() const noexcept override { return what_.c_str(); }

 private:
  Error error_;
  std::string what_;
};

[[noreturn]] void raise(ErrorKind kind, std::string message);

template <class T>
class [[nodiscard]] Result {
 public:
  Result(T value) : state_(std::in_place_index<0>, std::move(value)) {}
  Result(Error error) : state_(std::in_place_index<1>, std::move(error)) {}

  bool ok() const noexcept { return state_.index() == 0; }
  explicit operator bool() const noexcept { return ok(); }

  const T& value() const& {
    if (!ok()) throw BadResultAccess(std::get<1>(state_));
    return std::get<0>(state_);
  }
  T&& value() && {
    if (!ok()) throw BadResultAccess(std::get<1>(state_));
    return std::get<0>(std::move(state_));
  }
  const T& operator*() const& { return value(); }
  const T* operator->() const { return &value(); }

  const Error& error() const { return std::get<1>(state_); }

 private:
  std::variant<T, Error> state_;
};

// Runs `body`, turning a BadResultAccess escaping from it into an error value.
template <class F>
auto capture(F&& body) -> Result<std::invoke_result_t<F>> {
  try {
    return std::forward<F>(body)();
  } catch (const BadResultAccess& e) {
    return e.error();
  }
}

}  // namespace biprod
