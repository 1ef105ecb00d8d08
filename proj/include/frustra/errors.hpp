#ifndef FRUSTRA_ERRORS_HPP
#define FRUSTRA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace frustra {

enum class Errc {
  EmptyGraph,
  LabelCollision,
  Disconnected,
  TreeMismatch,
  EdgeInTree,
  GraphMismatch,
  EmptyAccumulator,
  ZeroDegree,
  TooManyTrees,
  TooLarge,
  IoError,
  ParseError,
  ConfigError,
};

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) { throw Error(code, what); }

} // namespace frustra

#endif
