#pragma once

#include <stdexcept>
#include <string>

namespace ctcsim {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller violated an operation's precondition (bad N, incomplete
/// received assignment, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class UnknownCorpusProgram : public Error {
 public:
  explicit UnknownCorpusProgram(const std::string& id)
      : Error("unknown corpus program '" + id + "'"), id_(id) {}
  const std::string& id() const noexcept { return id_; }

 private:
  std::string id_;
};

}  // namespace ctcsim
