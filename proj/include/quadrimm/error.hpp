#pragma once

#include <stdexcept>
#include <string>

namespace quadrimm {

enum class ErrorKind {
  Structural,    // malformed permutations, bad dart ids
  Precondition,  // operation called on input outside its domain
  Budget,        // requested run exceeds the configured budget
  Parse,         // text format errors
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace quadrimm
