#pragma once

// (J,p)-Schatten norms, the Ji-trace, and the trace/duality identities.
//
// In finite dimension every operator is compact, so membership in S_p(J)
// reduces to [T, J] = 0. The norm itself is the l^p norm of the singular
// values and is defined for any T.

#include <limits>
#include <vector>

#include "qslab/bound.hpp"
#include "qslab/j_structure.hpp"
#include "qslab/random.hpp"

namespace qslab {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

struct SchattenContext {
  ComplexStructure structure;
  double p;  // in (0, +inf]

  /// Throws DomainError unless p > 0.
  SchattenContext(ComplexStructure s, double p);
};

/// (sum |v_k|^p)^{1/p}, max |v_k| for p = inf. Throws DomainError for p <= 0.
double lp_norm(std::span<const double> v, double p);

/// Conjugate exponent: 1 -> inf, inf -> 1. Requires p >= 1.
double conjugate_exponent(double p);

double schatten_norm(const QMatrix& t, double p);
double schatten_norm(const CMatrix& m, double p);

/// A value of C_i kept together with its unit.
struct TraceValue {
  Complex value;
  UnitImaginary unit;

  Quaternion quaternion() const { return unit.embed(value); }
};

/// sum <e_n, T e_n> over the plus basis; throws NonCommuting unless [T, J] = 0.
TraceValue ji_trace(const QMatrix& t, const ComplexStructure& s, double tol = kPredicateTolerance);

/// sum <e_n, T e_n> for an arbitrary orthonormal system.
Quaternion basis_trace(const QMatrix& t, const std::vector<QVector>& basis);

struct BasisSweep {
  std::vector<Quaternion> values;  // canonical basis first, then random bases
  double max_deviation = 0.0;      // max |values[k] - values[0]|
};
BasisSweep trace_basis_sweep(const QMatrix& t, Rng& rng, int num_bases);

struct UnitChange {
  Quaternion trace_i;
  Quaternion trace_j;
  Quaternion phi_trace_i;  // phi(z0 + i z1) = z0 + j z1
  double error = 0.0;      // |trace_j - phi_trace_i|
};
/// Both structures must share the same J.
UnitChange trace_unit_change(const QMatrix& t, const ComplexStructure& si, const ComplexStructure& sj);

struct HoelderResult {
  TraceValue trace_ts;
  TraceValue trace_st;
  Bound bound;                 // |Tr(TS)| <= ||T||_p ||S||_q
  double commutator_ts = 0.0;  // ||[TS, J]||
  double commutator_st = 0.0;
};
/// Throws DomainError unless p >= 1 and 1/p + 1/q = 1.
HoelderResult hoelder_check(const QMatrix& t, const QMatrix& s, double p, double q, const ComplexStructure& cs,
                            double tol = 1e-10);

struct DualResult {
  double norm_p = 0.0;
  double sup_estimate = 0.0;      // max |Tr(S T)| over random S with ||S||_q = 1
  double optimizer_value = 0.0;   // |Tr(S* T)| for the constructed S*
  QMatrix optimizer;
};
/// Requires 1 <= p < inf and [T, J] = 0.
DualResult dual_norm(const QMatrix& t, double p, const ComplexStructure& cs, Rng& rng, int num_probes);

struct IdealResult {
  double commutator_ts = 0.0;
  double commutator_st = 0.0;
  Bound ts;  // ||TS||_p <= ||T||_p ||S||
  Bound st;  // ||ST||_p <= ||S|| ||T||_p
};
IdealResult ideal_check(const QMatrix& t, const QMatrix& s, double p, const ComplexStructure& cs, double tol = 1e-8);

/// Random orthonormal family of k vectors in H+ (complex-orthonormal
/// combinations of the plus basis).
std::vector<QVector> random_plus_family(const ComplexStructure& s, Rng& rng, std::size_t k);

/// Instantiates the characterization theorems for T in B_J at exponent p:
/// the norm chain, the diagonal, bilinear, double-sum and column-norm
/// criteria (each where its p-range applies), and the power inequalities for |T| on random
/// unit vectors. Every entry should hold.
std::vector<Bound> characterization_suite(const QMatrix& t, double p, const ComplexStructure& cs, Rng& rng,
                                          int num_sets = 10, double tol = 1e-9);

/// <x, T^p x> versus <x, T x>^p for positive T and unit x, oriented so the
/// returned bound holds: lhs <= rhs for both p >= 1 and 0 < p <= 1.
Bound power_inequality(const QMatrix& t, std::span<const Quaternion> x, double p, double tol = 1e-9);

}  // namespace qslab
