#include "kinbound/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>

#include "kinbound/errors.hpp"

namespace kinbound::oracle {

namespace {

using Fn = std::function<double(double)>;

void check_config(const OracleConfig& cfg) {
  if (cfg.size != 0 && cfg.size < 16)
    throw ConfigError("oracle: explicit size must be at least 16");
  if (cfg.cutoff < 0.0) throw ConfigError("oracle: cutoff must be positive");
  if (cfg.states < 1) throw ConfigError("oracle: at least one state per l is required");
  if (!(cfg.tolerance > 0.0)) throw ConfigError("oracle: tolerance must be positive");
}

// Potential values are clamped into [-1e15, 1e15]; overflow past the grid's
// physical region then acts as a hard wall instead of poisoning the matrix.
constexpr double kWall = 1e15;

double clamped(const Fn& f, double x) {
  double v;
  try {
    v = f(x);
  } catch (const DomainError&) {
    return kWall;
  }
  if (!std::isfinite(v)) return v > 0 ? kWall : -kWall;
  return std::clamp(v, -kWall, kWall);
}

// ---------------------------------------------------------------------------
// Radial grid kernel: -kappa u'' + [kappa l(l+1)/x^2 + U(x)] u = mu u on
// (0, xmax) with Dirichlet ends, three-point differences at x_i = i h.

struct Tridiag {
  std::vector<double> d;  // diagonal
  double e = 0.0;         // constant off-diagonal
};

Tridiag build_radial(double kappa, const Fn& U, double xmax, int n, int l) {
  const double h = xmax / n;
  const double ll = static_cast<double>(l) * (l + 1);
  Tridiag A;
  A.d.resize(n - 1);
  A.e = -kappa / (h * h);
  for (int i = 1; i < n; ++i) {
    const double x = i * h;
    A.d[i - 1] = kappa * (2.0 / (h * h) + ll / (x * x)) + clamped(U, x);
  }
  return A;
}

// Eigenvalues of A strictly below x, by the Sturm sequence.
int sturm_count(const Tridiag& A, double x) {
  const double e2 = A.e * A.e;
  const double pivmin = std::max(e2, 1.0) * 1e-292;
  int count = 0;
  double q = 1.0;
  for (std::size_t i = 0; i < A.d.size(); ++i) {
    q = (i == 0) ? A.d[0] - x : A.d[i] - x - e2 / q;
    if (std::fabs(q) < pivmin) q = -pivmin;
    if (q < 0.0) ++count;
  }
  return count;
}

// Lowest k eigenvalues by bisection, iterated to relative width 1e-14.
// The matrix norm can reach 1e15 here, so an absolute tolerance would be
// useless; the width test must scale with the bracket.
std::vector<double> lowest_eigs(const Tridiag& A, int k) {
  double lo = A.d[0], hi = A.d[0];
  for (double v : A.d) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  lo -= 2.0 * std::fabs(A.e);
  hi += 2.0 * std::fabs(A.e);
  std::vector<double> out;
  out.reserve(k);
  for (int j = 0; j < k; ++j) {
    double a = lo, b = hi;
    for (int it = 0; it < 220; ++it) {
      if (b - a <= 1e-14 * std::max({std::fabs(a), std::fabs(b), 1e-3})) break;
      const double mid = 0.5 * (a + b);
      if (sturm_count(A, mid) <= j)
        a = mid;
      else
        b = mid;
    }
    out.push_back(0.5 * (a + b));
  }
  return out;
}

// Solve (A - s) x = rhs by elimination with partial pivoting (one extra
// superdiagonal of fill-in). Near-singular pivots are exactly the working
// regime of inverse iteration, so tiny pivots are nudged, not rejected.
std::vector<double> shifted_solve(const Tridiag& A, double s,
                                  std::vector<double> rhs) {
  const int n = static_cast<int>(A.d.size());
  std::vector<double> d(n), u1(n, 0.0), u2(n, 0.0);
  for (int i = 0; i < n; ++i) d[i] = A.d[i] - s;
  for (int i = 0; i + 1 < n; ++i) u1[i] = A.e;
  for (int i = 0; i + 1 < n; ++i) {
    double sub = A.e;                              // row i+1, column i
    double dn = d[i + 1];                          // row i+1, column i+1
    double sn = (i + 2 < n) ? A.e : 0.0;           // row i+1, column i+2
    if (std::fabs(sub) > std::fabs(d[i])) {
      std::swap(d[i], sub);
      std::swap(u1[i], dn);
      std::swap(u2[i], sn);
      std::swap(rhs[i], rhs[i + 1]);
    }
    double piv = d[i];
    if (std::fabs(piv) < 1e-290) piv = d[i] = (piv < 0 ? -1e-290 : 1e-290);
    const double m = sub / piv;
    d[i + 1] = dn - m * u1[i];
    u1[i + 1] = sn - m * u2[i];
    u2[i + 1] = 0.0;
    rhs[i + 1] -= m * rhs[i];
  }
  for (int i = n - 1; i >= 0; --i) {
    double v = rhs[i];
    if (i + 1 < n) v -= u1[i] * rhs[i + 1];
    if (i + 2 < n) v -= u2[i] * rhs[i + 2];
    double piv = d[i];
    if (std::fabs(piv) < 1e-290) piv = (piv < 0 ? -1e-290 : 1e-290);
    rhs[i] = v / piv;
  }
  return rhs;
}

void normalize(std::vector<double>& x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  s = 1.0 / std::sqrt(s);
  for (double& v : x) v *= s;
}

// Unit eigenvector for the eigenvalue nearest mu. Three inverse-iteration
// passes from a pseudo-random start; mu from bisection is many orders
// closer to its own eigenvalue than to the neighbors, so this locks on.
std::vector<double> eigenvector(const Tridiag& A, double mu) {
  const int n = static_cast<int>(A.d.size());
  std::vector<double> x(n);
  std::uint64_t st = 0x9e3779b97f4a7c15ull;
  for (int i = 0; i < n; ++i) {
    st ^= st << 13;
    st ^= st >> 7;
    st ^= st << 17;
    x[i] = static_cast<double>(st >> 11) / 9007199254740992.0 - 0.5;
  }
  normalize(x);
  const double shift = mu + 1e-13 * std::max(std::fabs(mu), 1.0);
  for (int pass = 0; pass < 3; ++pass) {
    x = shifted_solve(A, shift, std::move(x));
    normalize(x);
  }
  return x;
}

double rayleigh(const Tridiag& A, const std::vector<double>& x) {
  const int n = static_cast<int>(x.size());
  double s = 0.0;
  for (int i = 0; i < n; ++i) {
    double ax = A.d[i] * x[i];
    if (i > 0) ax += A.e * x[i - 1];
    if (i + 1 < n) ax += A.e * x[i + 1];
    s += x[i] * ax;
  }
  return s;
}

// ---------------------------------------------------------------------------
// Domain sizing. Grow (then trim) xmax until the WKB tail integral from the
// outer turning point of the highest requested state to the wall exceeds 40,
// which puts the Dirichlet truncation error near e^{-80}.

double tail_integral(double kappa, const Fn& U, double xmax, int l, int states) {
  const int n = 1600;
  const Tridiag A = build_radial(kappa, U, xmax, n, l);
  const double mu_top = lowest_eigs(A, states).back();
  const double h = xmax / n;
  const double ll = static_cast<double>(l) * (l + 1);
  double tail = 0.0;
  for (int i = n - 1; i >= 1; --i) {
    const double x = i * h;
    const double weff = kappa * ll / (x * x) + clamped(U, x);
    if (weff < mu_top) break;  // outer turning point reached
    tail += h * std::sqrt((weff - mu_top) / kappa);
    if (tail > 400.0) break;
  }
  return tail;
}

double size_domain(double kappa, const Fn& U, int l, int states, double xmax0) {
  double xmax = xmax0;
  for (int round = 0; round < 40; ++round) {
    if (tail_integral(kappa, U, xmax, l, states) >= 40.0) {
      // Trim back overshoot so the grid resolution is spent where u lives.
      while (xmax > 1e-6 && tail_integral(kappa, U, 0.65 * xmax, l, states) >= 45.0)
        xmax *= 0.65;
      return xmax;
    }
    xmax *= 2.0;
  }
  throw ConvergenceError("radial grid: no domain extent confines the requested states");
}

// ---------------------------------------------------------------------------
// Refinement drivers. The estimate is the largest change of a requested
// eigenvalue under the last size doubling, scaled by max(1, |eigenvalue|).

struct GridRun {
  std::vector<double> eigs;
  double estimate = 0.0;
  int n = 0;
};

double spectral_change(const std::vector<double>& prev,
                       const std::vector<double>& cur) {
  double est = 0.0;
  for (std::size_t j = 0; j < cur.size(); ++j)
    est = std::max(est,
                   std::fabs(cur[j] - prev[j]) / std::max(1.0, std::fabs(cur[j])));
  return est;
}

GridRun radial_fixed(double kappa, const Fn& U, double xmax, int l, int states,
                     int n) {
  const auto prev = lowest_eigs(build_radial(kappa, U, xmax, n / 2, l), states);
  auto cur = lowest_eigs(build_radial(kappa, U, xmax, n, l), states);
  const double est = spectral_change(prev, cur);
  return {std::move(cur), est, n};
}

GridRun radial_refined(double kappa, const Fn& U, double xmax, int l,
                       int states, int n0, int nmax, double tol) {
  auto prev = lowest_eigs(build_radial(kappa, U, xmax, n0, l), states);
  for (int n = 2 * n0; n <= nmax; n *= 2) {
    auto cur = lowest_eigs(build_radial(kappa, U, xmax, n, l), states);
    const double est = spectral_change(prev, cur);
    if (est <= tol) return {std::move(cur), est, n};
    prev = std::move(cur);
  }
  throw ConvergenceError(
      "radial grid: eigenvalues still moving at the maximum grid size");
}

GridRun run_radial(double kappa, const Fn& U, double xmax, int l, int states,
                   const OracleConfig& cfg, int n_default) {
  if (cfg.size > 0) return radial_fixed(kappa, U, xmax, l, states, cfg.size);
  return radial_refined(kappa, U, xmax, l, states, n_default, 1 << 18,
                        cfg.tolerance);
}

// ---------------------------------------------------------------------------
// Oscillator basis. Orthonormal reduced radial functions
//   g_n(s) = sqrt(2/Gamma(l+3/2)) s^{l+1} e^{-s^2/2} Lhat_n(s^2),
// where Lhat_n are orthonormal generalized Laguerre polynomials with
// alpha = l + 1/2. The basis is self-reciprocal under the radial Fourier
// transform up to a (-1)^n phase and the scale swap b -> 1/b, so
//   u_n(r) = g_n(r/b)/sqrt(b),   u~_n(p) = (-1)^n g_n(p b) sqrt(b).

struct Quad {
  std::vector<double> s, w;
};

// 16-point Gauss-Legendre abscissas and weights on [-1, 1].
constexpr double kGx[8] = {0.09501250983763744, 0.28160355077925891,
                           0.45801677765722739, 0.61787624440264375,
                           0.75540440835500303, 0.86563120238783174,
                           0.94457502307323258, 0.98940093499164993};
constexpr double kGw[8] = {0.18945061045506850, 0.18260341504492359,
                           0.16915651939500254, 0.14959598881657673,
                           0.12462897125553387, 0.09515851168249278,
                           0.06225352393864789, 0.02715245941175409};

Quad build_quad(double s_cut) {
  const int panels = static_cast<int>(std::ceil(2.0 * s_cut));
  Quad q;
  q.s.reserve(16 * panels);
  q.w.reserve(16 * panels);
  for (int p = 0; p < panels; ++p) {
    const double a = s_cut * p / panels, b = s_cut * (p + 1) / panels;
    const double c = 0.5 * (a + b), hw = 0.5 * (b - a);
    for (int j = 0; j < 8; ++j) {
      q.s.push_back(c - hw * kGx[j]);
      q.w.push_back(hw * kGw[j]);
      q.s.push_back(c + hw * kGx[j]);
      q.w.push_back(hw * kGw[j]);
    }
  }
  return q;
}

// g_n values at every quadrature node. The normalization and Gaussian are
// folded into n = 0 before the recurrence, which keeps every intermediate
// bounded by e^{~100} even at t near t_cut.
std::vector<std::vector<double>> basis_table(const Quad& q, int dim, int l) {
  const double alpha = l + 0.5;
  const int m = static_cast<int>(q.s.size());
  std::vector<std::vector<double>> G(dim, std::vector<double>(m));
  const double norm = std::sqrt(2.0 / std::tgamma(l + 1.5));
  for (int j = 0; j < m; ++j) {
    const double s = q.s[j], t = s * s;
    G[0][j] = norm * std::pow(s, l + 1) * std::exp(-0.5 * t);
    double pm = 0.0;
    for (int n = 0; n + 1 < dim; ++n) {
      const double pn = G[n][j];
      G[n + 1][j] = ((2.0 * n + 1.0 + alpha - t) * pn -
                     std::sqrt(n * (n + alpha)) * pm) /
                    std::sqrt((n + 1.0) * (n + 1.0 + alpha));
      pm = pn;
    }
  }
  return G;
}

// Dense symmetric matrix of a multiplication operator given its node values.
std::vector<double> assemble(const std::vector<std::vector<double>>& G,
                             const Quad& q, const std::vector<double>& fvals,
                             bool momentum_phases) {
  const int dim = static_cast<int>(G.size());
  const int m = static_cast<int>(q.s.size());
  std::vector<double> M(static_cast<std::size_t>(dim) * dim, 0.0);
  for (int a = 0; a < dim; ++a)
    for (int b = a; b < dim; ++b) {
      double sum = 0.0;
      for (int j = 0; j < m; ++j) sum += q.w[j] * G[a][j] * G[b][j] * fvals[j];
      if (momentum_phases && ((a + b) & 1)) sum = -sum;
      M[static_cast<std::size_t>(a) * dim + b] = sum;
      M[static_cast<std::size_t>(b) * dim + a] = sum;
    }
  return M;
}

// Cyclic Jacobi eigensolver for a dense symmetric matrix, eigenvalues
// ascending; rotation product accumulated into vecs when requested.
void jacobi_eig(std::vector<double>& A, int n, std::vector<double>& eigs,
                std::vector<double>* vecs) {
  if (vecs) {
    vecs->assign(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) (*vecs)[static_cast<std::size_t>(i) * n + i] = 1.0;
  }
  auto at = [&](int r, int c) -> double& {
    return A[static_cast<std::size_t>(r) * n + c];
  };
  double fro = 0.0;
  for (double v : A) fro += v * v;
  fro = std::sqrt(fro);
  for (int sweep = 0; sweep < 60; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += at(p, q) * at(p, q);
    if (std::sqrt(2.0 * off) <= 1e-15 * std::max(fro, 1e-300)) break;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
        const double app = at(p, p), aqq = at(q, q);
        at(p, p) = c * c * app - 2.0 * s * c * apq + s * s * aqq;
        at(q, q) = s * s * app + 2.0 * s * c * apq + c * c * aqq;
        at(p, q) = at(q, p) = 0.0;
        for (int k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double akp = at(k, p), akq = at(k, q);
          at(k, p) = at(p, k) = c * akp - s * akq;
          at(k, q) = at(q, k) = s * akp + c * akq;
        }
        if (vecs) {
          for (int k = 0; k < n; ++k) {
            double& vkp = (*vecs)[static_cast<std::size_t>(k) * n + p];
            double& vkq = (*vecs)[static_cast<std::size_t>(k) * n + q];
            const double a = vkp, b = vkq;
            vkp = c * a - s * b;
            vkq = s * a + c * b;
          }
        }
      }
  }
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(),
            [&](int a, int b) { return at(a, a) < at(b, b); });
  eigs.resize(n);
  std::vector<double> sorted_vecs;
  if (vecs) sorted_vecs.assign(static_cast<std::size_t>(n) * n, 0.0);
  for (int j = 0; j < n; ++j) {
    eigs[j] = at(idx[j], idx[j]);
    if (vecs)
      for (int k = 0; k < n; ++k)
        sorted_vecs[static_cast<std::size_t>(k) * n + j] =
            (*vecs)[static_cast<std::size_t>(k) * n + idx[j]];
  }
  if (vecs) *vecs = std::move(sorted_vecs);
}

struct BasisRun {
  std::vector<double> eigs;
  std::vector<double> vecs;  // columns are states, empty unless requested
  Quad quad;
  std::vector<std::vector<double>> G;
  double b = 0.0;
  int dim = 0;
};

BasisRun basis_solve(const models::KineticModel& T,
                     const models::PotentialModel& V, int l, int dim, double b,
                     bool want_vecs) {
  const double s_cut = std::sqrt(4.0 * dim + 2.0 * l + 60.0);
  if (s_cut / b > T.p_hi)
    throw ConvergenceError(
        "oscillator basis: momentum quadrature exceeds the kinetic term's "
        "working domain at scale b=" + std::to_string(b));
  if (b * s_cut > V.r_hi)
    throw ConvergenceError(
        "oscillator basis: position quadrature exceeds the potential's "
        "working domain at scale b=" + std::to_string(b));
  Quad quad = build_quad(s_cut);
  auto G = basis_table(quad, dim, l);
  const int m = static_cast<int>(quad.s.size());
  std::vector<double> tv(m), vv(m);
  for (int j = 0; j < m; ++j) {
    double a, c;
    try {
      a = T.T(quad.s[j] / b);
      c = V.V(b * quad.s[j]);
    } catch (const DomainError&) {
      throw ConvergenceError(
          "oscillator basis: model evaluation failed inside the quadrature "
          "range at scale b=" + std::to_string(b));
    }
    if (!std::isfinite(a) || !std::isfinite(c))
      throw ConvergenceError(
          "oscillator basis: model overflows inside the quadrature range at "
          "scale b=" + std::to_string(b));
    tv[j] = a;
    vv[j] = c;
  }
  // Containment: the broadest diagonal integrand must be decaying by the
  // last quadrature panel and carry only a negligible share there, else the
  // integrand (typically a kinetic term outgrowing the Gaussian decay of
  // the basis) is not captured by any cutoff.
  double total = 0.0, last = 0.0, prev = 0.0;
  for (int j = 0; j < m; ++j) {
    const double c = quad.w[j] * G[dim - 1][j] * G[dim - 1][j] *
                     (std::fabs(tv[j]) + std::fabs(vv[j]));
    total += c;
    if (j >= m - 16)
      last += c;
    else if (j >= m - 32)
      prev += c;
  }
  if (!(last < prev) || !(last <= 1e-4 * total))
    throw ConvergenceError(
        "oscillator basis: integrand not contained, the kinetic term grows "
        "too fast for scale b=" + std::to_string(b));
  auto H = assemble(G, quad, tv, true);
  const auto Vm = assemble(G, quad, vv, false);
  for (std::size_t i = 0; i < H.size(); ++i) H[i] += Vm[i];
  BasisRun run;
  run.b = b;
  run.dim = dim;
  jacobi_eig(H, dim, run.eigs, want_vecs ? &run.vecs : nullptr);
  if (want_vecs) {
    run.quad = std::move(quad);
    run.G = std::move(G);
  }
  return run;
}

// Variationally best scale: 16 log-spaced b, keep the lowest ground state.
double scan_scale(const models::KineticModel& T, const models::PotentialModel& V,
                  int l, int dim) {
  const int scan_dim = std::min(dim, 28);
  double best_b = 0.0, best_e = std::numeric_limits<double>::infinity();
  std::string last_error = "no scale admissible";
  for (int i = 0; i < 16; ++i) {
    const double b = 0.1 * std::pow(100.0, i / 15.0);
    try {
      const auto run = basis_solve(T, V, l, scan_dim, b, false);
      if (run.eigs[0] < best_e) {
        best_e = run.eigs[0];
        best_b = b;
      }
    } catch (const ConvergenceError& e) {
      last_error = e.what();
    }
  }
  if (best_b == 0.0)
    throw ConvergenceError("oscillator basis: every scale failed (" +
                           last_error + ")");
  return best_b;
}

// ---------------------------------------------------------------------------
// Route detection for the virial check.

bool constant_ratio(const Fn& num, double lo, double hi, double* value) {
  double cmin = std::numeric_limits<double>::infinity(), cmax = -cmin;
  const double span = std::log(hi / lo);
  double sum = 0.0;
  for (int i = 0; i < 25; ++i) {
    const double x = lo * std::exp(span * (i + 0.5) / 25.0);
    const double c = num(x);
    if (!std::isfinite(c) || !(c > 0.0)) return false;
    cmin = std::min(cmin, c);
    cmax = std::max(cmax, c);
    sum += c;
  }
  if (cmax - cmin > 1e-10 * cmax) return false;
  *value = sum / 25.0;
  return true;
}

// T = p^2/(2m) exactly, detected through T'(p)/p being constant.
bool quadratic_kinetic(const models::KineticModel& T, double* mass) {
  const double lo = std::max(T.p_lo * 8.0, 1e-6);
  const double hi = std::min(T.p_hi / 8.0, 1e3);
  double c;
  if (lo >= hi || !constant_ratio([&](double p) { return T.dT(p) / p; }, lo, hi, &c))
    return false;
  *mass = 1.0 / c;
  return true;
}

// V = c r^2 exactly, detected through V'(r)/r being constant.
bool harmonic_potential(const models::PotentialModel& V, double* coef) {
  const double lo = std::max(V.r_lo * 8.0, 1e-6);
  const double hi = std::min(V.r_hi / 8.0, 1e3);
  double c;
  if (lo >= hi || !constant_ratio([&](double r) { return V.dV(r) / r; }, lo, hi, &c))
    return false;
  *coef = 0.5 * c;
  return true;
}

// ---------------------------------------------------------------------------
// Grid-state observables with Richardson extrapolation. For the eigenpair of
// -kappa u'' + [kappa l(l+1)/x^2 + U] u = mu u, accumulate sum x_i^2 f(x_i)
// for each requested weight plus the kinetic integral (mu - <U>)/kappa.

struct StateObs {
  double mu = 0.0;
  std::vector<double> weights;  // <f_j(x)> for each supplied weight function
  double kinetic = 0.0;         // <p^2> in the scaled problem
};

StateObs grid_observables(double kappa, const Fn& U, double xmax, int n, int l,
                          int state, const std::vector<Fn>& weights) {
  const Tridiag A = build_radial(kappa, U, xmax, n, l);
  const double mu = lowest_eigs(A, state + 1).back();
  const auto x = eigenvector(A, mu);
  StateObs obs;
  obs.mu = rayleigh(A, x);
  const double h = xmax / n;
  double mean_u = 0.0;
  obs.weights.assign(weights.size(), 0.0);
  for (int i = 0; i < static_cast<int>(x.size()); ++i) {
    const double r = (i + 1) * h;
    const double w2 = x[i] * x[i];
    mean_u += w2 * clamped(U, r);
    for (std::size_t j = 0; j < weights.size(); ++j)
      obs.weights[j] += w2 * weights[j](r);
  }
  obs.kinetic = (obs.mu - mean_u) / kappa;
  return obs;
}

// Doubling driver: Richardson-extrapolate every observable across grid
// pairs until consecutive extrapolants agree to tol.
StateObs converged_observables(double kappa, const Fn& U, double xmax, int l,
                               int state, const std::vector<Fn>& weights,
                               double tol) {
  auto rich = [](const StateObs& a, const StateObs& b) {
    StateObs r;
    r.mu = (4.0 * b.mu - a.mu) / 3.0;
    r.kinetic = (4.0 * b.kinetic - a.kinetic) / 3.0;
    r.weights.resize(a.weights.size());
    for (std::size_t j = 0; j < a.weights.size(); ++j)
      r.weights[j] = (4.0 * b.weights[j] - a.weights[j]) / 3.0;
    return r;
  };
  const StateObs v1 = grid_observables(kappa, U, xmax, 2000, l, state, weights);
  StateObs v2 = grid_observables(kappa, U, xmax, 4000, l, state, weights);
  StateObs prev = rich(v1, v2);
  int n2 = 4000;  // grid size behind v2
  while (true) {
    n2 *= 2;
    if (n2 > (1 << 18))
      throw ConvergenceError(
          "radial grid: expectation values still moving at the maximum size");
    StateObs v3 = grid_observables(kappa, U, xmax, n2, l, state, weights);
    StateObs cur = rich(v2, v3);
    double change = std::fabs(cur.kinetic - prev.kinetic) /
                    std::max(1.0, std::fabs(cur.kinetic));
    change = std::max(change, std::fabs(cur.mu - prev.mu) /
                                  std::max(1.0, std::fabs(cur.mu)));
    for (std::size_t j = 0; j < cur.weights.size(); ++j)
      change = std::max(change, std::fabs(cur.weights[j] - prev.weights[j]) /
                                    std::max(1.0, std::fabs(cur.weights[j])));
    if (change <= tol) return cur;
    v2 = std::move(v3);
    prev = std::move(cur);
  }
}

}  // namespace

OracleSpectrum solve_momentum_grid(const models::KineticModel& T,
                                   std::optional<double> growth_rate, int l,
                                   const OracleConfig& cfg) {
  check_config(cfg);
  if (l < 0) throw ConfigError("oracle: l must be non-negative");
  double qmax = cfg.cutoff;
  if (qmax == 0.0) {
    qmax = 40.0;
    if (growth_rate && *growth_rate > 0.0)
      qmax = std::min(std::sqrt(std::log(1e12) / *growth_rate), 40.0);
  }
  const Fn U = [&T](double q) { return T.T(q); };
  // Fail fast when the kinetic wall cannot confine the requested states:
  // the WKB decay between the outer turning point and the cutoff must be
  // deep enough that the Dirichlet end is invisible.
  if (tail_integral(1.0, U, qmax, l, cfg.states) < 40.0)
    throw ConvergenceError(
        "momentum grid: cutoff too small, the kinetic wall does not confine "
        "the requested states");
  GridRun run = run_radial(1.0, U, qmax, l, cfg.states, cfg, 4000);
  return {l, std::move(run.eigs), run.estimate, "momentum-grid"};
}

OracleSpectrum solve_power_law(const models::AuxiliaryPowerLaw& aux, double c,
                               int l, const OracleConfig& cfg) {
  check_config(cfg);
  if (l < 0) throw ConfigError("oracle: l must be non-negative");
  if (!(c > 0.0)) throw ConfigError("oracle: power-law coefficient must be positive");
  const Fn U = [&aux, c](double r) { return c * aux.P(r); };
  const double kappa = 0.5;
  const double xmax =
      cfg.cutoff > 0.0 ? cfg.cutoff : size_domain(kappa, U, l, cfg.states, 16.0);
  GridRun run = run_radial(kappa, U, xmax, l, cfg.states, cfg, 4000);
  return {l, std::move(run.eigs), run.estimate, "position-grid"};
}

OracleSpectrum solve_oscillator_basis(const models::KineticModel& T,
                                      const models::PotentialModel& V, int l,
                                      const OracleConfig& cfg) {
  check_config(cfg);
  if (l < 0) throw ConfigError("oracle: l must be non-negative");
  const int dim0 = cfg.size > 0 ? cfg.size : 80;
  if (cfg.states > dim0 / 2)
    throw ConfigError("oracle: basis too small for the requested state count");
  const int dim_cap = cfg.size > 0 ? dim0 : 320;
  int dim = dim0;
  while (true) {
    const double b = cfg.cutoff > 0.0 ? cfg.cutoff : scan_scale(T, V, l, dim);
    const auto half = basis_solve(T, V, l, dim / 2, b, false);
    const auto full = basis_solve(T, V, l, dim, b, false);
    std::vector<double> prev(half.eigs.begin(), half.eigs.begin() + cfg.states);
    std::vector<double> cur(full.eigs.begin(), full.eigs.begin() + cfg.states);
    const double est = spectral_change(prev, cur);
    if (cfg.size > 0 || est <= cfg.tolerance)
      return {l, std::move(cur), est, "oscillator-basis"};
    if (2 * dim > dim_cap)
      throw ConvergenceError(
          "oscillator basis: eigenvalues still moving at the maximum dimension");
    dim *= 2;
  }
}

double expectation(Observable what, double nu, double rho,
                   const models::AuxiliaryPowerLaw& aux, int n, int l,
                   const OracleConfig& cfg) {
  check_config(cfg);
  if (!(nu > 0.0) || !(rho > 0.0))
    throw ConfigError("oracle: expectation requires nu > 0 and rho > 0");
  if (n < 0 || l < 0) throw ConfigError("oracle: state labels must be non-negative");
  const double kappa = 1.0 / (2.0 * nu);
  const Fn U = [&aux, rho](double r) { return rho * aux.P(r); };
  const double xmax =
      cfg.cutoff > 0.0 ? cfg.cutoff : size_domain(kappa, U, l, n + 1, 16.0);
  const double lambda = aux.lambda();
  const std::vector<Fn> weights = {
      [lambda](double r) { return std::pow(r, lambda); }};
  const StateObs obs =
      converged_observables(kappa, U, xmax, l, n, weights, cfg.tolerance);
  return what == Observable::p_squared ? obs.kinetic : obs.weights[0];
}

double virial_residual(const models::KineticModel& T,
                       const models::PotentialModel& V, int n, int l,
                       const OracleConfig& cfg) {
  check_config(cfg);
  if (n < 0 || l < 0) throw ConfigError("oracle: state labels must be non-negative");
  double mass = 0.0, coef = 0.0;
  if (quadratic_kinetic(T, &mass)) {
    // Position grid: <p T'(p)> = <p^2>/m and <r V'(r)> integrate directly.
    const double kappa = 1.0 / (2.0 * mass);
    const Fn U = [&V](double r) { return V.V(r); };
    const double xmax =
        cfg.cutoff > 0.0 ? cfg.cutoff : size_domain(kappa, U, l, n + 1, 16.0);
    const std::vector<Fn> weights = {[&V](double r) { return r * V.dV(r); }};
    const StateObs obs =
        converged_observables(kappa, U, xmax, l, n, weights, cfg.tolerance);
    return std::fabs(obs.kinetic / mass - obs.weights[0]);
  }
  if (harmonic_potential(V, &coef)) {
    // Momentum grid: r^2 acts as the Laplacian, T as multiplication;
    // <r V'(r)> = 2<V> = 2(E - <T>).
    const Fn U = [&T](double q) { return T.T(q); };
    const double xmax =
        cfg.cutoff > 0.0 ? cfg.cutoff : size_domain(coef, U, l, n + 1, 16.0);
    const std::vector<Fn> weights = {[&T](double q) { return q * T.dT(q); },
                                     [&T](double q) { return T.T(q); }};
    const StateObs obs =
        converged_observables(coef, U, xmax, l, n, weights, cfg.tolerance);
    return std::fabs(obs.weights[0] - 2.0 * (obs.mu - obs.weights[1]));
  }
  // Oscillator basis: both expectations by quadrature on the same state.
  const int dim = cfg.size > 0 ? cfg.size : 80;
  if (n >= dim / 2)
    throw ConfigError("oracle: basis too small for the requested state");
  const double b = cfg.cutoff > 0.0 ? cfg.cutoff : scan_scale(T, V, l, dim);
  const auto run = basis_solve(T, V, l, dim, b, true);
  const int m = static_cast<int>(run.quad.s.size());
  std::vector<double> tp(m), vp(m);
  for (int j = 0; j < m; ++j) {
    const double p = run.quad.s[j] / b, r = b * run.quad.s[j];
    tp[j] = p * T.dT(p);
    vp[j] = r * V.dV(r);
  }
  const auto Tm = assemble(run.G, run.quad, tp, true);
  const auto Vm = assemble(run.G, run.quad, vp, false);
  double pt = 0.0, rv = 0.0;
  for (int a = 0; a < dim; ++a)
    for (int bq = 0; bq < dim; ++bq) {
      const double cc = run.vecs[static_cast<std::size_t>(a) * dim + n] *
                        run.vecs[static_cast<std::size_t>(bq) * dim + n];
      pt += cc * Tm[static_cast<std::size_t>(a) * dim + bq];
      rv += cc * Vm[static_cast<std::size_t>(bq) * dim + a];
    }
  return std::fabs(pt - rv);
}

}  // namespace kinbound::oracle
