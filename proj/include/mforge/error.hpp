#pragma once

#include <stdexcept>
#include <string>

namespace mforge {

enum class ErrorKind { contract, too_large, parse, unknown_name, precondition };

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::contract: return "contract";
    case ErrorKind::too_large: return "too large";
    case ErrorKind::parse: return "parse";
    case ErrorKind::unknown_name: return "unknown name";
    case ErrorKind::precondition: return "precondition";
  }
  return "error";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace mforge
