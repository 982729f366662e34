#pragma once

#include <string>
#include <vector>

namespace a1scroll {

/// Lens space L(p, q): p an odd prime, 1 <= q < p.
class LensSpace {
 public:
  /// q is reduced mod p. Throws ArgumentError if p is not an odd prime or p | q.
  LensSpace(long p, long q);

  long p() const { return p_; }
  long q() const { return q_; }
  std::string to_string() const { return "L(" + std::to_string(p_) + "," + std::to_string(q_) + ")"; }
  friend bool operator==(const LensSpace&, const LensSpace&) = default;

 private:
  long p_, q_;
};

bool is_prime(long n);

/// Whether x is a square mod the prime p. Euler's criterion for x != 0 mod p;
/// 0 is always a square. Throws ArgumentError if p is not prime.
bool is_square_mod(long p, long x);

/// Homotopy equivalent iff the orders agree and q q' is a square mod p.
bool homotopy_equivalent(const LensSpace& l1, const LensSpace& l2);

/// Homotopy classes of {L(p, q) : 1 <= q < p}, each sorted; the class of
/// q = 1 comes first. Throws ArgumentError unless p is an odd prime.
std::vector<std::vector<long>> equivalence_classes(long p);

}  // namespace a1scroll
