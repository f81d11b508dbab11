#pragma once

#include <stdexcept>
#include <string>

namespace pvc {

enum class ErrorKind { usage, domain, resource };

// Single exception type for the core; the C API maps `kind` onto status codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void throw_usage(const std::string& what) { throw Error(ErrorKind::usage, what); }
[[noreturn]] inline void throw_domain(const std::string& what) { throw Error(ErrorKind::domain, what); }
[[noreturn]] inline void throw_resource(const std::string& what) { throw Error(ErrorKind::resource, what); }

}  // namespace pvc
