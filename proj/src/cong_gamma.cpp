#include <clover/cong_gamma.hpp>

#include <clover/real_gamma.hpp>

#include <cmath>
#include <stdexcept>
#include <string>

namespace clover {
namespace {

constexpr unsigned long kPublicCostCap = 1000000;    // modulus*count for the public entry point
constexpr unsigned long kInternalCostCap = 10000000; // looser guard for internal callers

void require_cost(unsigned long modulus, unsigned long count, unsigned long cap, const char* who) {
  if (modulus == 0) throw std::domain_error(std::string(who) + ": modulus must be >= 1");
  if (count != 0 && modulus > cap / count)
    throw std::domain_error(std::string(who) + ": modulus*count exceeds the cost cap of " +
                            std::to_string(cap));
}

}  // namespace

namespace detail {

mpz_class cong_gamma_product(unsigned long modulus, unsigned long count, unsigned long residue) {
  require_cost(modulus, count, kInternalCostCap, "cong_gamma_product");
  mpz_class acc = 1;
  for (unsigned long j = 0; j < count; ++j) {
    const unsigned long factor = modulus * j + residue;
    if (factor == 0) continue;  // the G_m(1, 0) = 1 base case
    acc *= factor;
  }
  return acc;
}

}  // namespace detail

mpz_class cong_gamma(unsigned long modulus, unsigned long count, unsigned long residue) {
  require_cost(modulus, count, kPublicCostCap, "cong_gamma");
  if (residue >= modulus)
    throw std::domain_error("cong_gamma: residue must satisfy 0 <= residue < modulus (got " +
                            std::to_string(residue) + " with modulus " + std::to_string(modulus) + ")");
  return detail::cong_gamma_product(modulus, count, residue);
}

double cong_gamma_closed_form(unsigned long modulus, unsigned long count, unsigned long residue) {
  require_cost(modulus, count, kPublicCostCap, "cong_gamma_closed_form");
  if (residue == 0)
    throw std::domain_error("cong_gamma_closed_form: residue 0 sits on the Gamma pole; use cong_gamma");
  const long double m = static_cast<long double>(modulus);
  const long double frac = static_cast<long double>(residue) / m;
  const long double lg = detail::lgamma_core(static_cast<long double>(count) + frac) -
                         detail::lgamma_core(frac) +
                         static_cast<long double>(count) * logl(m);
  return static_cast<double>(expl(lg));
}

}  // namespace clover
