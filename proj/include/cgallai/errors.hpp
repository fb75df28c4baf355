#pragma once

#include <stdexcept>
#include <string>

namespace cgallai {

// Malformed input: bad vertex ids, unparsable files, unknown pattern elements.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A documented precondition (or an internally asserted invariant) failed.
class ContractError : public std::logic_error {
 public:
  explicit ContractError(const std::string& what) : std::logic_error(what) {}
};

// Parameters whose derived constants do not fit in 64 bits.
class ParameterRangeError : public std::range_error {
 public:
  explicit ParameterRangeError(const std::string& what) : std::range_error(what) {}
};

inline void require(bool cond, const std::string& what) {
  if (!cond) throw ContractError(what);
}

}  // namespace cgallai
