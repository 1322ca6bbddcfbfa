#include "clean_sombor/ring_arith.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace clean_sombor {

std::uint64_t PrimePower::value() const {
  std::uint64_t v = 1;
  for (unsigned i = 0; i < exponent; ++i) v *= prime;
  return v;
}

ResidueRing factorize(std::uint64_t n) {
  if (n < 2) {
    throw std::invalid_argument("factorize: n must be at least 2, got " + std::to_string(n));
  }
  ResidueRing ring;
  ring.n = n;
  std::uint64_t rest = n;
  for (std::uint64_t p = 2; p <= rest / p; p += (p == 2 ? 1 : 2)) {
    if (rest % p != 0) continue;
    PrimePower pp{p, 0};
    while (rest % p == 0) {
      rest /= p;
      ++pp.exponent;
    }
    ring.factors.push_back(pp);
  }
  if (rest > 1) ring.factors.push_back({rest, 1});

  for (const auto& f : ring.factors) {
    if (f.prime == 2) {
      ring.two_exponent = f.exponent;
    } else {
      ++ring.odd_prime_count;
    }
  }
  ring.prime_count = static_cast<unsigned>(ring.factors.size());
  return ring;
}

std::uint64_t euler_phi(const ResidueRing& ring) {
  std::uint64_t phi = 1;
  for (const auto& f : ring.factors) {
    phi *= f.value() / f.prime * (f.prime - 1);
  }
  return phi;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

std::vector<Residue> idempotents_by_scan(const ResidueRing& ring) {
  std::vector<Residue> out;
  for (Residue e = 0; e < ring.n; ++e) {
    if (mul_mod(e, e, ring.n) == e) out.push_back(e);
  }
  return out;
}

std::vector<Residue> idempotents_by_crt(const ResidueRing& ring) {
  // basis[i] is 1 mod the i-th prime power and 0 mod all the others.
  std::vector<Residue> basis;
  basis.reserve(ring.factors.size());
  for (const auto& f : ring.factors) {
    const std::uint64_t q = f.value();
    const std::uint64_t cofactor = ring.n / q;
    ResidueRing component;
    component.n = q;
    basis.push_back(mul_mod(cofactor, mod_inverse(cofactor % q, component), ring.n));
  }

  const std::size_t count = std::size_t{1} << basis.size();
  std::vector<Residue> out;
  out.reserve(count);
  for (std::size_t mask = 0; mask < count; ++mask) {
    Residue e = 0;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (mask & (std::size_t{1} << i)) e = (e + basis[i]) % ring.n;
    }
    out.push_back(e);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Residue> idempotents(const ResidueRing& ring) {
  return ring.n <= kScanThreshold ? idempotents_by_scan(ring) : idempotents_by_crt(ring);
}

std::uint64_t predicted_self_inverse_count(const ResidueRing& ring) {
  unsigned exponent = ring.odd_prime_count;
  if (ring.two_exponent == 2) {
    exponent += 1;
  } else if (ring.two_exponent >= 3) {
    exponent += 2;
  }
  return std::uint64_t{1} << exponent;
}

bool is_self_inverse(Residue u, const ResidueRing& ring) {
  return mul_mod(u, u, ring.n) == 1 % ring.n;
}

UnitClassification classify_units(const ResidueRing& ring) {
  UnitClassification out;
  for (Residue u = 1; u < ring.n; ++u) {
    if (gcd(u, ring.n) != 1) continue;
    out.units.push_back(u);
    if (is_self_inverse(u, ring)) {
      out.self_inverse.push_back(u);
    } else {
      out.non_self_inverse.push_back(u);
    }
  }
  out.phi = out.units.size();
  out.r = out.self_inverse.size();

  const std::uint64_t predicted = predicted_self_inverse_count(ring);
  if (out.r != predicted) {
    throw std::logic_error("classify_units: n=" + std::to_string(ring.n) + " enumerated " +
                           std::to_string(out.r) + " self-inverse units, expected " +
                           std::to_string(predicted));
  }
  return out;
}

std::uint64_t self_inverse_count(const ResidueRing& ring) {
  std::uint64_t count = 1;
  for (const auto& f : ring.factors) {
    const std::uint64_t q = f.value();
    std::uint64_t roots = 0;
    if (q <= kScanThreshold) {
      for (Residue x = 1; x < q; ++x) {
        if (mul_mod(x, x, q) == 1) ++roots;
      }
    } else if (f.prime != 2) {
      roots = 2;
    } else {
      roots = 4;  // 2^a with a >= 3
    }
    count *= roots;
  }
  return count;
}

Residue mod_inverse(Residue u, const ResidueRing& ring) {
  const std::uint64_t n = ring.n;
  // Extended Euclid on signed 128-bit to keep intermediate coefficients exact.
  __int128 old_r = static_cast<__int128>(u % n), r = static_cast<__int128>(n);
  __int128 old_s = 1, s = 0;
  while (r != 0) {
    const __int128 q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * s;
    std::swap(old_s, s);
  }
  if (old_r != 1) {
    throw std::invalid_argument("mod_inverse: " + std::to_string(u) + " is not a unit modulo " +
                                std::to_string(n));
  }
  __int128 v = old_s % static_cast<__int128>(n);
  if (v < 0) v += n;
  return static_cast<Residue>(v);
}

}  // namespace clean_sombor
