#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace nsg {

enum class Errc {
  invalid_input,      // malformed values (negative gaps, zero cap, ...)
  empty_input,        // empty generator list
  gcd_not_one,        // generators with gcd > 1 generate no numerical semigroup
  not_a_semigroup,    // gap set whose complement is not closed under addition
  full_semigroup,     // operation undefined for the full semigroup N
  capacity_exceeded,  // membership table would exceed the capacity cap
  cap_exceeded,       // enumeration stopped at the node cap
  not_a_gap,          // argument must be a gap of the semigroup
  not_bpf_element,    // argument must lie in bpf(S)
  hypothesis_violated,        // family parameters outside the valid range
  internal_verification_failed, // a result failed its own consistency check
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

// Enumeration hit its node cap. Carries how many distinct semigroups had
// been discovered when the walk stopped (== the cap).
class CapExceeded : public Error {
public:
  CapExceeded(std::uint64_t partial_count, const std::string& what)
      : Error(Errc::cap_exceeded, what), partial_count_(partial_count) {}
  std::uint64_t partial_count() const noexcept { return partial_count_; }

private:
  std::uint64_t partial_count_;
};

} // namespace nsg
