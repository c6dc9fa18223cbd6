#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace sparsek {

// Exact signed integer; the public counting API only ever returns values >= 0.
using Count = boost::multiprecision::cpp_int;

using Vertex = std::uint32_t;
using Var = std::uint32_t;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configured size cap was exceeded (node cap, search-state cap, oracle cap).
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

// Arguments outside an operation's parameter domain.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// An internal consistency check failed. Only an implementation bug can raise this.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

Count binomial(std::uint64_t n, std::uint64_t k);

// Saturating binomial for size estimates and caps.
std::uint64_t binomial_u64(std::uint64_t n, std::uint64_t k);

std::string to_string(const Count& c);

}  // namespace sparsek
