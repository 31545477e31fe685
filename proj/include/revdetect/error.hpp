#pragma once

#include <stdexcept>
#include <string>

namespace revdetect {

// Exit-code contract of the command-line tool.
enum class ErrorKind {
  usage = 1,     // bad flags, bad config, invalid parameter values
  data = 2,      // unreadable or malformed input files, corrupt bundles
  internal = 3,  // broken invariant inside the library
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  int exit_code() const noexcept { return static_cast<int>(kind_); }

 private:
  ErrorKind kind_;
};

class UsageError : public Error {
 public:
  explicit UsageError(const std::string& what) : Error(ErrorKind::usage, what) {}
};

class DataError : public Error {
 public:
  explicit DataError(const std::string& what) : Error(ErrorKind::data, what) {}
};

// Raised when a persisted bundle cannot be read back (bad magic, version,
// truncation, checksum).
class FormatError : public DataError {
 public:
  explicit FormatError(const std::string& what) : DataError(what) {}
};

}  // namespace revdetect
