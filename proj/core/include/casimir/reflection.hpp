#pragma once

#include "casimir/material.hpp"
#include "casimir/system.hpp"

namespace casimir {

enum class Polarization { Parallel, Perpendicular };

enum class CoefficientKind { DielectricLifshitz, LeontovichImpedance };

/// Selects which reflection-coefficient pair enters the Lifshitz sum:
/// the dielectric (Fresnel) form or the Leontovich-impedance form.
struct CoefficientFamily {
  CoefficientKind selector;
  MaterialModel material;

  const char* label() const {
    return selector == CoefficientKind::DielectricLifshitz ? "dielectric"
                                                           : "impedance";
  }
};

inline CoefficientFamily dielectric_family(MaterialModel m) {
  return {CoefficientKind::DielectricLifshitz, std::move(m)};
}
inline CoefficientFamily impedance_family(MaterialModel m) {
  return {CoefficientKind::LeontovichImpedance, std::move(m)};
}

/// Impedance combinations at a Matsubara point:
///   eta_l = Z_l xi_l / (c q_l),  kappa_l = Z_l c q_l / xi_l,  Z_l = Z(i xi_l).
/// eta * kappa = Z^2. Requires l >= 1 so that xi_l > 0.
struct ImpedancePoint {
  double eta;
  double kappa;
  double z;
};

ImpedancePoint impedance_point(const MaterialModel& m, int l, double k_perp,
                               const PlateSystem& sys);

/// Squared Fresnel coefficient with k_l = sqrt(k_perp^2 + eps_l xi_l^2/c^2):
///   r_par = (eps_l q_l - k_l)/(eps_l q_l + k_l),  r_perp = (q_l - k_l)/(q_l + k_l).
/// The l = 0 values are the model-specific symbolic limits (see r2 source for
/// the table); (l, k_perp) = (0, 0) is rejected.
double r2_dielectric(Polarization pol, int l, double k_perp,
                     const PlateSystem& sys, const MaterialModel& m);

/// Squared impedance coefficient:
///   r_par = (c q_l - Z_l xi_l)/(c q_l + Z_l xi_l),
///   r_perp = (xi_l - Z_l c q_l)/(xi_l + Z_l c q_l).
/// At l = 0 both expressions are 0/0; they are resolved by the continuous
/// limit kappa_0 = c q_0 * lim_{xi->0} Z(i xi)/xi, which gives r_par^2 = 1
/// always, and r_perp^2 = 1 for ideal/Drude/tabulated models (kappa_0 = 0 or
/// infinite) while the plasma model keeps the finite-kappa_0 value.
double r2_impedance(Polarization pol, int l, double k_perp,
                    const PlateSystem& sys, const MaterialModel& m);

/// Imaginary-axis mode function, x = eta (parallel) or kappa (perpendicular):
///   Delta(y, x) = 1/4 [ (1+x)^2 - e^{-y} (1-x)^2 ],  y = 2 a q_l.
double delta_par(double y, double eta);
double delta_perp(double y, double kappa);

/// a -> infinity limit, 1/4 (1+x^2)(1 + 2x/(1+x^2)); algebraically (1+x)^2/4.
double delta_infinity(double x);

/// Renormalized mode function 1 - r^2 e^{-y} with r^2 from the impedance
/// family; equals delta/delta_infinity identically.
double delta_renormalized(Polarization pol, int l, double k_perp,
                          const PlateSystem& sys, const MaterialModel& m);

/// Hot-path evaluator with the per-index material response frozen, producing
/// both squared coefficients as functions of y alone. Valid for y >= zeta.
class ReflectionEvaluator {
 public:
  struct RSquared {
    double par;
    double perp;
  };

  static ReflectionEvaluator for_index(const CoefficientFamily& fam,
                                       const PlateSystem& sys, int l);
  /// Continuum (T = 0) version at fixed zeta = 2 a xi / c > 0.
  static ReflectionEvaluator for_continuum(const CoefficientFamily& fam,
                                           double separation, double zeta);

  RSquared operator()(double y) const;
  double zeta() const { return zeta_; }

 private:
  enum class Mode {
    BothUnit,            // r_par^2 = r_perp^2 = 1
    Dielectric,          // finite eps, zeta > 0
    Impedance,           // finite Z, zeta > 0
    DielectricDrudeL0,   // (1, 0)
    DielectricPlasmaL0,  // (1, plasma TE limit)
    DielectricConstL0,   // (const, 0) -- finite eps(0)
    ImpedancePlasmaL0,   // (1, finite-kappa_0 TE limit)
  };

  Mode mode_ = Mode::BothUnit;
  double zeta_ = 0.0;
  double eps_ = 0.0;       // Dielectric
  double impedance_ = 0.0; // Impedance
  double w_ = 0.0;         // 2 a omega_p / c for the plasma l = 0 limits
  double r2_par_const_ = 1.0;
};

}  // namespace casimir
