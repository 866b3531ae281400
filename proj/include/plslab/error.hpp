#pragma once

#include <stdexcept>
#include <string>

namespace plslab {

// Library-level failure (bad instance, infeasible start, violated pre).
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an exhaustive neighborhood scan would exceed its cap.  Callers
// must treat this as "unknown", never as a silent pass.
struct NeighborhoodTooLarge : Error {
  explicit NeighborhoodTooLarge(const std::string& what) : Error(what) {}
};

// Text-format parse failure with a 1-based line number.
struct ParseError : Error {
  ParseError(int line_no, const std::string& what)
      : Error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
  int line;
};

inline void require(bool ok, const std::string& what) {
  if (!ok) throw Error(what);
}

}  // namespace plslab
