#ifndef MVSEP_ERROR_HPP_
#define MVSEP_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mvsep {

/// Precondition violation on algebraic data: an element outside its algebra,
/// a non-Boolean element where a Boolean one is required, and so on.
class AlgebraError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed textual input. `position` is a 0-based character offset into
/// the parsed string, or npos when the error is not tied to one.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position = npos)
      : std::invalid_argument(what), position_(position) {}

  std::size_t position() const { return position_; }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::size_t position_;
};

/// Invalid topology or map between finite spaces.
class TopologyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace mvsep

#endif  // MVSEP_ERROR_HPP_
