#include "casimir/reflection.hpp"

#include <cmath>
#include <stdexcept>

#include "casimir/constants.hpp"

namespace casimir {

namespace {

void check_point(int l, double k_perp) {
  if (l < 0) throw std::invalid_argument("reflection: l must be >= 0");
  if (k_perp < 0.0) throw std::invalid_argument("reflection: k_perp must be >= 0");
  if (l == 0 && k_perp == 0.0)
    throw std::domain_error("reflection: (l, k_perp) = (0, 0) is outside the domain");
}

}  // namespace

ImpedancePoint impedance_point(const MaterialModel& m, int l, double k_perp,
                               const PlateSystem& sys) {
  if (l < 1) throw std::invalid_argument("impedance_point: requires l >= 1");
  const double xi = matsubara_frequency(l, sys.temperature);
  const double cq = std::hypot(constants::c * k_perp, xi);
  const double z = impedance_imag(m, xi);
  return {z * xi / cq, z * cq / xi, z};
}

ReflectionEvaluator ReflectionEvaluator::for_index(const CoefficientFamily& fam,
                                                   const PlateSystem& sys, int l) {
  ReflectionEvaluator ev;
  const double a = sys.separation;
  const double xi = matsubara_frequency(l, sys.temperature);
  ev.zeta_ = 2.0 * a * xi / constants::c;
  const MaterialModel& m = fam.material;

  if (m.kind() == MaterialKind::IdealMetal) {
    ev.mode_ = Mode::BothUnit;  // both families: r^2 = 1 everywhere
    return ev;
  }

  if (fam.selector == CoefficientKind::DielectricLifshitz) {
    if (l >= 1) {
      ev.mode_ = Mode::Dielectric;
      ev.eps_ = eps_imag(m, xi);
      return ev;
    }
    switch (m.kind()) {
      case MaterialKind::Drude:
        // eps ~ 1/xi: eps_l xi_l^2 -> 0, so k_0 = q_0 and the TE coefficient
        // vanishes while eps q dominates the TM one.
        ev.mode_ = Mode::DielectricDrudeL0;
        return ev;
      case MaterialKind::Plasma:
        // eps ~ 1/xi^2 keeps eps_l xi_l^2 = omega_p^2 finite.
        ev.mode_ = Mode::DielectricPlasmaL0;
        ev.w_ = 2.0 * a * m.omega_p() / constants::c;
        return ev;
      case MaterialKind::Tabulated: {
        ev.mode_ = Mode::DielectricConstL0;
        const double e0 = m.table_eps_low();
        const double r = (e0 - 1.0) / (e0 + 1.0);
        ev.r2_par_const_ = r * r;
        return ev;
      }
      default:
        break;
    }
    throw std::logic_error("reflection: unhandled dielectric l = 0 case");
  }

  // Leontovich impedance family
  if (l >= 1) {
    ev.mode_ = Mode::Impedance;
    ev.impedance_ = impedance_imag(m, xi);
    return ev;
  }
  // l = 0: both impedance ratios are 0/0. r_par -> 1 always (eta_0 = 0). The TE
  // value is fixed by kappa_0 = c q_0 lim Z(i xi)/xi: infinite for Drude
  // (Z ~ sqrt(xi)) and tabulated (Z(0) > 0), zero for the ideal metal, and
  // finite c k_perp/omega_p for the plasma model, which keeps the continuum
  // limit and with it S(T -> 0) = 0.
  switch (m.kind()) {
    case MaterialKind::Drude:
    case MaterialKind::Tabulated:
      ev.mode_ = Mode::BothUnit;
      return ev;
    case MaterialKind::Plasma:
      ev.mode_ = Mode::ImpedancePlasmaL0;
      ev.w_ = 2.0 * a * m.omega_p() / constants::c;
      return ev;
    default:
      break;
  }
  throw std::logic_error("reflection: unhandled impedance l = 0 case");
}

ReflectionEvaluator ReflectionEvaluator::for_continuum(const CoefficientFamily& fam,
                                                       double separation, double zeta) {
  if (!(zeta > 0.0))
    throw std::invalid_argument("for_continuum: zeta must be > 0");
  ReflectionEvaluator ev;
  ev.zeta_ = zeta;
  const MaterialModel& m = fam.material;
  if (m.kind() == MaterialKind::IdealMetal) {
    ev.mode_ = Mode::BothUnit;
    return ev;
  }
  const double xi = constants::c * zeta / (2.0 * separation);
  if (fam.selector == CoefficientKind::DielectricLifshitz) {
    ev.mode_ = Mode::Dielectric;
    ev.eps_ = eps_imag(m, xi);
  } else {
    ev.mode_ = Mode::Impedance;
    ev.impedance_ = impedance_imag(m, xi);
  }
  return ev;
}

ReflectionEvaluator::RSquared ReflectionEvaluator::operator()(double y) const {
  switch (mode_) {
    case Mode::BothUnit:
      return {1.0, 1.0};
    case Mode::Dielectric: {
      const double kt = std::sqrt(y * y + (eps_ - 1.0) * zeta_ * zeta_);
      const double rp = (eps_ * y - kt) / (eps_ * y + kt);
      const double rt = (y - kt) / (y + kt);
      return {rp * rp, rt * rt};
    }
    case Mode::Impedance: {
      const double rp = (y - impedance_ * zeta_) / (y + impedance_ * zeta_);
      const double rt = (zeta_ - impedance_ * y) / (zeta_ + impedance_ * y);
      return {rp * rp, rt * rt};
    }
    case Mode::DielectricDrudeL0:
      return {1.0, 0.0};
    case Mode::DielectricPlasmaL0: {
      const double yt = std::hypot(y, w_);
      const double rt = (yt - y) / (yt + y);
      return {1.0, rt * rt};
    }
    case Mode::DielectricConstL0:
      return {r2_par_const_, 0.0};
    case Mode::ImpedancePlasmaL0: {
      const double rt = (w_ - y) / (w_ + y);
      return {1.0, rt * rt};
    }
  }
  return {0.0, 0.0};
}

double r2_dielectric(Polarization pol, int l, double k_perp,
                     const PlateSystem& sys, const MaterialModel& m) {
  check_point(l, k_perp);
  const auto ev = ReflectionEvaluator::for_index(dielectric_family(m), sys, l);
  const auto p = to_dimensionless(sys, l, k_perp);
  const auto r2 = ev(p.y);
  return pol == Polarization::Parallel ? r2.par : r2.perp;
}

double r2_impedance(Polarization pol, int l, double k_perp,
                    const PlateSystem& sys, const MaterialModel& m) {
  check_point(l, k_perp);
  const auto ev = ReflectionEvaluator::for_index(impedance_family(m), sys, l);
  const auto p = to_dimensionless(sys, l, k_perp);
  const auto r2 = ev(p.y);
  return pol == Polarization::Parallel ? r2.par : r2.perp;
}

double delta_par(double y, double eta) {
  if (!(y > 0.0)) throw std::invalid_argument("delta_par: y must be > 0");
  const double plus = 1.0 + eta;
  const double minus = 1.0 - eta;
  return 0.25 * (plus * plus - std::exp(-y) * minus * minus);
}

double delta_perp(double y, double kappa) { return delta_par(y, kappa); }

double delta_infinity(double x) {
  return 0.25 * (1.0 + x * x) * (1.0 + 2.0 * x / (1.0 + x * x));
}

double delta_renormalized(Polarization pol, int l, double k_perp,
                          const PlateSystem& sys, const MaterialModel& m) {
  const double r2 = r2_impedance(pol, l, k_perp, sys, m);
  const auto p = to_dimensionless(sys, l, k_perp);
  return 1.0 - r2 * std::exp(-p.y);
}

}  // namespace casimir
