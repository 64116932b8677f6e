#pragma once

/*
  Vacancy numbers, cocharge, rigged configurations, and the graded
  multiplicity M(B,lambda;q).

  The bilinear form entering the sums is the type's own normalized
  invariant form restricted to the classical diagram, except for the
  A_{2n}^{(2)} family which works in an auxiliary system (twice the
  standard Gram matrix of B_n, with the configuration constraint mapped
  over by doubling the last fundamental coordinate). The arrow-reversed
  dagger family carries no direct data of this kind at all; its M is
  defined through the ambient realization and computed by
  m_polynomial_via_virtual, which m_polynomial dispatches to.
*/

#include <optional>
#include <vector>

#include "kr/kleber.hpp"
#include "kr/qpoly.hpp"

namespace kr {

/// Form entry (alpha~_a | alpha~_b). Throws UnsupportedType for the
/// dagger family.
mpq_class fermi_form_entry(AffineType t, int a, int b);

/// Row totals |nu^{(a)}| forced by B and lambda, in the coordinates of the
/// auxiliary root system; nullopt when they are not nonnegative integers
/// (then no configuration exists).
std::optional<std::vector<long>> config_rhs(AffineType t, const TensorSpec& B,
                                            const Weight& lambda);

/// Vacancy number p_i^{(a)}; the defining sum is rational term by term but
/// always integral (checked).
long vacancy(AffineType t, const TensorSpec& B, const Configuration& nu, int a, long i);

/// True iff every vacancy number of nu is nonnegative. Checks all rows up
/// to the saturation index beyond which p_i^{(a)} is constant in i.
bool is_admissible(AffineType t, const TensorSpec& B, const Configuration& nu);

mpq_class cocharge(AffineType t, const Configuration& nu);

struct RiggedConfiguration {
  Configuration nu;
  // riggings[a-1][i] = weakly decreasing parts of the partition attached to
  // the rows of length i in nu^{(a)}; at most m_i^{(a)} parts, each at most
  // p_i^{(a)}. Zero parts are not stored.
  std::vector<std::map<long, std::vector<long>>> riggings;

  bool operator==(const RiggedConfiguration& o) const {
    return nu == o.nu && riggings == o.riggings;
  }
  bool operator<(const RiggedConfiguration& o) const {
    return nu != o.nu ? nu < o.nu : riggings < o.riggings;
  }
};

/// cc(nu) plus the rigging sizes weighted by t_a^dual.
mpq_class cocharge(AffineType t, const RiggedConfiguration& rc);

/// All rigged configurations over the admissible configurations of weight
/// lambda. Sorted output. Uses the tree for simply-laced types and the
/// ambient realization otherwise (unsupported for the dagger family, whose
/// rigged objects live on the ambient side only).
std::vector<RiggedConfiguration> enumerate_rigged(AffineType t, const TensorSpec& B,
                                                  const Weight& lambda);

/// One configuration's contribution q^{cc(nu)} prod [p+m, m]_{q^{t_a^dual}}.
QPolynomial config_term(AffineType t, const TensorSpec& B, const Configuration& nu);

/// Graded multiplicity M(B,lambda;q).
QPolynomial m_polynomial(AffineType t, const TensorSpec& B, const Weight& lambda);

}  // namespace kr
