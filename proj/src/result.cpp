#include "biprod/result.hpp"

namespace biprod {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DomainMismatch: return "DomainMismatch";
    case ErrorKind::InternalAgreementFailure: return "InternalAgreementFailure";
    case ErrorKind::WitnessInvalid: return "WitnessInvalid";
    case ErrorKind::NoNullaryStructure: return "NoNullaryStructure";
    case ErrorKind::CanonicalMismatch: return "CanonicalMismatch";
    case ErrorKind::UnknownInstance: return "UnknownInstance";
    case ErrorKind::InvalidBounds: return "InvalidBounds";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "UnknownError";
}

std::string Error::describe() const {
  std::string out(to_string(kind));
  if (!message.empty()) out += ": " + message;
  return out;
}

BadResultAccess::BadResultAccess(Error error)
    : error_(std::move(error)), what_(error_.describe()) {}

void raise(ErrorKind kind, std::string message) {
  throw BadResultAccess(Error{kind, std::move(message)});
}

}  // namespace biprod
