#include "a1scroll/lens.hpp"

#include "a1scroll/errors.hpp"

namespace a1scroll {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

LensSpace::LensSpace(long p, long q) : p_(p), q_(0) {
  if (p == 2 || !is_prime(p)) throw ArgumentError("lens space order must be an odd prime, got " + std::to_string(p));
  q_ = ((q % p) + p) % p;
  if (q_ == 0) throw ArgumentError("lens space parameter q must be coprime to p");
}

namespace {

long pow_mod(long base, long e, long m) {
  __int128 result = 1, b = ((base % m) + m) % m;
  while (e > 0) {
    if (e & 1) result = result * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return static_cast<long>(result);
}

}  // namespace

bool is_square_mod(long p, long x) {
  if (!is_prime(p)) throw ArgumentError("is_square_mod: modulus " + std::to_string(p) + " is not prime");
  const long r = ((x % p) + p) % p;
  if (r == 0 || p == 2) return true;
  return pow_mod(r, (p - 1) / 2, p) == 1;
}

bool homotopy_equivalent(const LensSpace& l1, const LensSpace& l2) {
  if (l1.p() != l2.p()) return false;
  return is_square_mod(l1.p(), l1.q() * l2.q());
}

std::vector<std::vector<long>> equivalence_classes(long p) {
  if (p == 2 || !is_prime(p)) throw ArgumentError("equivalence_classes: p must be an odd prime");
  std::vector<std::vector<long>> classes(2);
  for (long q = 1; q < p; ++q) classes[is_square_mod(p, q) ? 0 : 1].push_back(q);
  return classes;
}

}  // namespace a1scroll
