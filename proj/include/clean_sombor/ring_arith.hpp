#pragma once

#include <cstdint>
#include <vector>

namespace clean_sombor {

using Residue = std::uint64_t;

struct PrimePower {
  std::uint64_t prime = 0;
  unsigned exponent = 0;

  std::uint64_t value() const;
  bool operator==(const PrimePower&) const = default;
};

/// The ring Z_n together with the factorization of n.
///
/// `two_exponent` is the power of 2 dividing n, `odd_prime_count` the number
/// of distinct odd primes and `prime_count` the number of distinct primes.
struct ResidueRing {
  std::uint64_t n = 0;
  std::vector<PrimePower> factors;
  unsigned two_exponent = 0;
  unsigned odd_prime_count = 0;
  unsigned prime_count = 0;
};

/// Units of Z_n split by whether they are their own inverse.
struct UnitClassification {
  std::vector<Residue> units;
  std::vector<Residue> self_inverse;
  std::vector<Residue> non_self_inverse;
  std::uint64_t phi = 0;
  std::uint64_t r = 0;
};

/// n at or below this is enumerated by scanning [0, n).
inline constexpr std::uint64_t kScanThreshold = 1'000'000;

/// Trial-division factorization. Throws std::invalid_argument for n < 2.
ResidueRing factorize(std::uint64_t n);

std::uint64_t euler_phi(const ResidueRing& ring);

// (a * b) mod n without overflow.
inline Residue mul_mod(Residue a, Residue b, std::uint64_t n) {
  return static_cast<Residue>((static_cast<unsigned __int128>(a) * b) % n);
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);

/// All idempotents of Z_n in ascending order (2^k of them).
std::vector<Residue> idempotents(const ResidueRing& ring);
std::vector<Residue> idempotents_by_scan(const ResidueRing& ring);
std::vector<Residue> idempotents_by_crt(const ResidueRing& ring);

/// Number of self-inverse units predicted by the 2-adic case split:
/// 2^s for m <= 1, 2^(s+1) for m = 2, 2^(s+2) for m >= 3.
std::uint64_t predicted_self_inverse_count(const ResidueRing& ring);

/// Enumerates units by scanning. Throws std::logic_error if the enumerated
/// self-inverse count disagrees with predicted_self_inverse_count().
UnitClassification classify_units(const ResidueRing& ring);

/// Counts solutions of u^2 = 1 without enumerating all of Z_n: scans each
/// prime-power component (or uses the known root count when the component
/// is above kScanThreshold) and multiplies. For n <= kScanThreshold this is
/// the size of classify_units(ring).self_inverse.
std::uint64_t self_inverse_count(const ResidueRing& ring);

/// Inverse of u modulo n. Throws std::invalid_argument if gcd(u, n) != 1.
Residue mod_inverse(Residue u, const ResidueRing& ring);

bool is_self_inverse(Residue u, const ResidueRing& ring);

}  // namespace clean_sombor
