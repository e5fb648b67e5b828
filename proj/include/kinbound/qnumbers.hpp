#ifndef KINBOUND_QNUMBERS_HPP
#define KINBOUND_QNUMBERS_HPP

#include <optional>

#include "kinbound/oracle.hpp"

namespace kinbound::qnumbers {

enum class Provenance { exact_coulomb, exact_harmonic, airy_linear, numeric };

const char* provenance_name(Provenance p);

// Global quantum number Q of the power-law Hamiltonian p^2/2 + sgn(lambda) r^lambda.
// Q encodes the whole (n, l) dependence of that spectrum, and the stationary
// point of the auxiliary energy surface satisfies r0 p0 = Q.
struct QuantumState {
  int n = 0;
  int l = 0;
  double Q = 0.0;
  Provenance provenance = Provenance::numeric;
};

// Closed forms where one exists: lambda = -1 gives Q = n + l + 1, lambda = 2
// gives Q = 2n + l + 3/2, and lambda = 1 with l = 0 follows from the Airy
// zeros as Q = 2 (-alpha_n / 3)^(3/2) for n <= 9. Other families return
// nullopt and require q_numeric.
std::optional<QuantumState> q_exact(double lambda, int n, int l);

// Q recovered by inverting the power-law eigenvalue formula at nu = 1,
// rho = 1 against a grid eigenvalue of p^2/2 + sgn(lambda) r^lambda:
//   Q = [2 lambda eps / ((lambda+2) |lambda|^(2/(lambda+2)))]^((lambda+2)/(2 lambda)).
QuantumState q_numeric(double lambda, int n, int l,
                       const oracle::OracleConfig& cfg = {});

}  // namespace kinbound::qnumbers

#endif
