#include "clean_sombor/closed_form.hpp"

#include <stdexcept>
#include <string>

namespace clean_sombor {

namespace {

// c * sqrt(x); x is not examined when c is zero.
RadicalSum scaled_sqrt(const BigInt& c, const BigInt& x) {
  if (c == 0) return {};
  return sqrt_int(x) * Rational(c);
}

BigInt pow2(unsigned e) { return BigInt(1) << e; }

void require_unit_split(std::uint64_t phi, std::uint64_t r, const char* who) {
  if (r == 0 || r > phi || (phi - r) % 2 != 0) {
    throw std::invalid_argument(std::string(who) + ": need 0 < r <= phi with phi - r even (phi=" +
                                std::to_string(phi) + ", r=" + std::to_string(r) + ")");
  }
}

}  // namespace

std::string_view to_string(FormulaTag tag) {
  switch (tag) {
    case FormulaTag::odd_prime_power: return "odd_prime_power";
    case FormulaTag::power_of_two: return "power_of_two";
    case FormulaTag::two_prime_case: return "two_prime_case";
    case FormulaTag::general_k: return "general_k";
  }
  return "unknown";
}

bool tag_applies(const FormulaCase& c, FormulaTag tag) {
  switch (tag) {
    case FormulaTag::odd_prime_power: return c.k == 1 && c.two_exponent == 0;
    case FormulaTag::power_of_two: return c.k == 1 && c.two_exponent > 0;
    case FormulaTag::two_prime_case: return c.k == 2;
    case FormulaTag::general_k: return c.k >= 2;
  }
  return false;
}

FormulaCase formula_case(const ResidueRing& ring) {
  if (ring.n < 3) {
    throw std::invalid_argument("closed form needs n >= 3, got " + std::to_string(ring.n));
  }
  FormulaCase c;
  c.n = ring.n;
  c.phi = euler_phi(ring);
  c.k = ring.prime_count;
  c.two_exponent = ring.two_exponent;
  if (ring.n <= kScanThreshold) {
    c.r = classify_units(ring).r;
  } else {
    c.r = self_inverse_count(ring);
    if (c.r != predicted_self_inverse_count(ring)) {
      throw std::logic_error("self-inverse count disagrees with the 2-adic prediction for n=" +
                             std::to_string(ring.n));
    }
  }
  if (c.k == 1) {
    c.tag = c.two_exponent == 0 ? FormulaTag::odd_prime_power : FormulaTag::power_of_two;
  } else {
    c.tag = c.k == 2 ? FormulaTag::two_prime_case : FormulaTag::general_k;
  }
  return c;
}

RadicalSum formula_odd_prime_power(std::uint64_t phi) {
  if (phi < 2 || phi % 2 != 0) {
    throw std::invalid_argument("formula_odd_prime_power: phi must be even and >= 2");
  }
  return sqrt_int(2) * Rational(BigInt(phi - 2), BigInt(2));
}

RadicalSum formula_power_of_two(std::uint64_t phi, unsigned alpha) {
  if (alpha == 0 || alpha > 64 || BigInt(phi) != pow2(alpha - 1)) {
    throw std::invalid_argument("formula_power_of_two: phi must equal 2^(alpha-1)");
  }
  if (alpha <= 2) return {};
  return sqrt_int(2) * Rational(BigInt(phi) - 4, BigInt(2));
}

RadicalSum formula_two_primes(std::uint64_t phi_in, std::uint64_t r_in) {
  require_unit_split(phi_in, r_in, "formula_two_primes");
  const BigInt phi(phi_in), r(r_in);
  const BigInt free = phi - r;
  const RadicalSum root2 = sqrt_int(2);

  RadicalSum total = root2 * Rational(3 * free, BigInt(2));
  total += scaled_sqrt(2 * r, 4 + (1 + phi) * (1 + phi));
  total += scaled_sqrt(2 * free, 9 + (2 + phi) * (2 + phi));
  total += root2 * Rational(free * (2 + phi) * (free + 1));
  total += root2 * Rational(r * r * (1 + phi));
  total += scaled_sqrt(2 * r * free, 2 * phi * phi + 6 * phi + 5);
  return total;
}

BigInt pair_class_coefficient_literal(unsigned k) {
  if (k < 1) throw std::invalid_argument("pair_class_coefficient_literal: k must be >= 1");
  return pow2(2 * k - 1) - 6 * pow2(k - 1) + 4;
}

BigInt pair_class_coefficient_derived(unsigned k) {
  if (k < 1) throw std::invalid_argument("pair_class_coefficient_derived: k must be >= 1");
  const BigInt m = pow2(k) - 2;
  return m * (m - 1) / 2 - (pow2(k - 1) - 1);
}

RadicalSum formula_general_k(std::uint64_t phi_in, std::uint64_t r_in, unsigned k) {
  if (k < 2) throw std::invalid_argument("formula_general_k: k must be >= 2");
  require_unit_split(phi_in, r_in, "formula_general_k");
  const BigInt phi(phi_in), r(r_in);
  const BigInt free = phi - r;
  const BigInt top = pow2(k);
  const BigInt half = pow2(k - 1) - 1;
  const BigInt low_deg = top - 3 + phi;   // self-inverse vertex outside the unit class
  const BigInt high_deg = top - 2 + phi;  // non-self-inverse vertex outside the unit class
  const RadicalSum root2 = sqrt_int(2);

  RadicalSum total = root2 * Rational(free * (top - 1), BigInt(2));
  total += scaled_sqrt((top - 2) * r, (top - 2) * (top - 2) + low_deg * low_deg);
  total += scaled_sqrt((top - 2) * free, (top - 1) * (top - 1) + high_deg * high_deg);
  total += root2 * Rational(r * r * half * low_deg);
  total += scaled_sqrt(2 * r * free * half, low_deg * low_deg + high_deg * high_deg);
  total += root2 * Rational(free * free * half * high_deg);
  total += root2 * Rational(pair_class_coefficient_literal(k) * (r * low_deg + free * high_deg));
  return total;
}

RadicalSum formula_value(const FormulaCase& c, FormulaTag tag) {
  if (!tag_applies(c, tag)) {
    throw std::invalid_argument("formula " + std::string(to_string(tag)) +
                                " does not apply to n=" + std::to_string(c.n));
  }
  switch (tag) {
    case FormulaTag::odd_prime_power: return formula_odd_prime_power(c.phi);
    case FormulaTag::power_of_two: return formula_power_of_two(c.phi, c.two_exponent);
    case FormulaTag::two_prime_case: return formula_two_primes(c.phi, c.r);
    case FormulaTag::general_k: return formula_general_k(c.phi, c.r, c.k);
  }
  throw std::logic_error("formula_value: unhandled tag");
}

FormulaEvaluation evaluate(const ResidueRing& ring) {
  FormulaEvaluation out;
  out.formula_case = formula_case(ring);
  const FormulaCase& c = out.formula_case;
  out.value = formula_value(c, c.tag);
  if (c.k >= 2) {
    out.general_value =
        c.tag == FormulaTag::general_k ? out.value : formula_value(c, FormulaTag::general_k);
    out.pair_coefficient_consistent =
        pair_class_coefficient_literal(c.k) == pair_class_coefficient_derived(c.k);
  }
  return out;
}

}  // namespace clean_sombor
