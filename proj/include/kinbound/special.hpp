#ifndef KINBOUND_SPECIAL_HPP
#define KINBOUND_SPECIAL_HPP

namespace kinbound::special {

// Principal branch of the Lambert W function, the solution w >= -1 of
// w e^w = z. Defined for z >= -1/e; throws DomainError below that.
// Residual |w e^w - z| <= 1e-12 (1 + |z|).
double lambert_w0(double z);

// Airy function Ai(x) on |x| <= 13.5, the range needed for its first ten
// negative zeros. Throws DomainError outside.
double airy_ai(double x);

// Derivative Ai'(x) on the same range.
double airy_ai_prime(double x);

struct AiryZero {
  int n;         // zero index, 0-based
  double alpha;  // n-th negative zero of Ai
};

// n-th negative zero of Ai (alpha_0 ~ -2.338...), n <= 9.
AiryZero airy_zero(int n);

}  // namespace kinbound::special

#endif
