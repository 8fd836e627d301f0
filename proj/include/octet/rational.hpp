#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace octet {

using Int = mpz_class;
using Rat = mpq_class;

inline int sgn(const Int& v) { return mpz_sgn(v.get_mpz_t()); }
inline int sgn(const Rat& v) { return mpq_sgn(v.get_mpq_t()); }

// "p" or "p/q", canonical (reduced, q > 0).
std::string rat_to_string(const Rat& v);
Rat rat_from_string(const std::string& s);

// Smallest-denominator rational in the open interval (lo, hi).
Rat simplest_rational_between(const Rat& lo, const Rat& hi);

// Truncated continued-fraction approximations of v, simplest first.
std::vector<Rat> cf_convergents(const Rat& v);

// Typed errors. `kind` is a stable machine-readable tag; `what()` carries the
// witness data in readable form.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& msg)
      : std::runtime_error(kind + ": " + msg), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

}  // namespace octet
