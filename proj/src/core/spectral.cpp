#include "core/spectral.hpp"

#include <cmath>

namespace tc::spectral {
namespace {

// Series switch point for the removable singularities, in x = tau^2 * lambda.
// Six terms leave a truncation error below 1e-18 at |x| = 1e-3.
constexpr double kSeriesCut = 1e-3;

double sinc_series(double x, double tau) {
  // sin(tau sqrt(l))/sqrt(l) = tau * sum_k (-x)^k / (2k+1)!
  return tau * (1.0 + x * (-1.0 / 6.0 + x * (1.0 / 120.0 + x * (-1.0 / 5040.0 +
               x * (1.0 / 362880.0 - x / 39916800.0)))));
}

double cosm1_series(double x, double tau) {
  // (cos(tau sqrt(l)) - 1)/l = tau^2 * sum_k (-1)^{k+1} x^k / (2k+2)!
  return tau * tau * (-0.5 + x * (1.0 / 24.0 + x * (-1.0 / 720.0 + x * (1.0 / 40320.0 +
                     x * (-1.0 / 3628800.0 + x / 479001600.0)))));
}

struct RealKernels {
  using value = double;
  static value cs(double l, double tau) { return cos_sqrt(l, tau); }
  static value sn(double l, double tau) { return sinc_sqrt(l, tau); }
  static value cm(double l, double tau) { return cosm1_over(l, tau); }
  static value one() { return 1.0; }
};

struct ComplexKernels {
  using value = cplx;
  static value cs(double l, double tau) { return cos_sqrt_c(l, tau); }
  static value sn(double l, double tau) { return sinc_sqrt_c(l, tau); }
  static value cm(double l, double tau) { return cosm1_over_c(l, tau); }
  static value one() { return cplx(1.0, 0.0); }
};

template <class K>
typename K::value eval_impl(Family f, int n, double tau) {
  using S32 = SpinThreeHalf;
  using S2 = SpinTwo;
  switch (f) {
    case Family::One:
      return K::one();

    case Family::HalfCos:
      return K::cs(double(n), tau);
    case Family::HalfSinc:
      return K::sn(double(n), tau);

    case Family::OneF:
      return 0.5 * (K::cs(2.0 * (2.0 * n + 1.0), tau) - K::one());
    case Family::OneH:
      return std::sqrt(2.0) * K::sn(2.0 * (2.0 * n + 1.0), tau);
    case Family::OneDiagTop:
      return K::one() + (2.0 * n + 2.0) / (2.0 * n + 3.0) *
                            eval_impl<K>(Family::OneF, n + 1, tau);
    case Family::OneDiagMid:
      return K::one() + 2.0 * eval_impl<K>(Family::OneF, n, tau);
    case Family::OneDiagBot:
      return K::one() + (2.0 * n) / (2.0 * n - 1.0) *
                            eval_impl<K>(Family::OneF, n - 1, tau);
    case Family::OneCornerTop:
      return 2.0 / (2.0 * n + 3.0) * eval_impl<K>(Family::OneF, n + 1, tau);
    case Family::OneCornerBot:
      return 2.0 / (2.0 * n - 1.0) * eval_impl<K>(Family::OneF, n - 1, tau);

    case Family::ThreeHalfF2: {
      const double lp = S32::lambda_plus(n), lm = S32::lambda_minus(n);
      return (S32::v_plus(n) * K::cs(lp, tau) - S32::v_minus(n) * K::cs(lm, tau)) /
             (2.0 * std::sqrt(S32::d(n)));
    }
    case Family::ThreeHalfF1: {
      const double lp = S32::lambda_plus(n), lm = S32::lambda_minus(n);
      return (S32::w_plus(n) * K::cs(lp, tau) - S32::w_minus(n) * K::cs(lm, tau)) /
             (2.0 * std::sqrt(S32::d(n)));
    }
    case Family::ThreeHalfF0: {
      const double lp = S32::lambda_plus(n), lm = S32::lambda_minus(n);
      return (S32::v_plus(n) * K::cs(lm, tau) - S32::v_minus(n) * K::cs(lp, tau)) /
             (2.0 * std::sqrt(S32::d(n)));
    }
    case Family::ThreeHalfFm1: {
      const double lp = S32::lambda_plus(n), lm = S32::lambda_minus(n);
      return (S32::w_plus(n) * K::cs(lm, tau) - S32::w_minus(n) * K::cs(lp, tau)) /
             (2.0 * std::sqrt(S32::d(n)));
    }
    case Family::ThreeHalfH1: {
      const double lp = S32::lambda_plus(n), lm = S32::lambda_minus(n);
      return (K::cs(lp, tau) - K::cs(lm, tau)) / (2.0 * std::sqrt(S32::d(n)));
    }
    case Family::ThreeHalfCapF1: {
      const double lp = S32::lambda_plus(n), lm = S32::lambda_minus(n);
      return (S32::w_plus(n) * K::sn(lp, tau) - S32::w_minus(n) * K::sn(lm, tau)) /
             (2.0 * std::sqrt(S32::d(n)));
    }
    case Family::ThreeHalfCapF0: {
      const double lp = S32::lambda_plus(n), lm = S32::lambda_minus(n);
      return (S32::v_plus(n) * K::sn(lm, tau) - S32::v_minus(n) * K::sn(lp, tau)) /
             (2.0 * std::sqrt(S32::d(n)));
    }
    case Family::ThreeHalfCapH1: {
      // sqrt(l) sin(tau sqrt(l)) = l * sinc_sqrt(l), entire in l.
      const double lp = S32::lambda_plus(n), lm = S32::lambda_minus(n);
      return (lp * K::sn(lp, tau) - lm * K::sn(lm, tau)) / (2.0 * std::sqrt(S32::d(n)));
    }
    case Family::ThreeHalfCapH0: {
      const double lp = S32::lambda_plus(n), lm = S32::lambda_minus(n);
      return (K::sn(lp, tau) - K::sn(lm, tau)) / (2.0 * std::sqrt(S32::d(n)));
    }

    case Family::TwoF2: {
      const double lp = S2::lambda_plus(n), lm = S2::lambda_minus(n);
      return K::one() + 4.0 * (n - 1.0) *
                            (S2::u_plus(n) * K::cm(lp, tau) - S2::u_minus(n) * K::cm(lm, tau)) /
                            std::sqrt(S2::d(n));
    }
    case Family::TwoF1: {
      const double lp = S2::lambda_plus(n), lm = S2::lambda_minus(n);
      return (S2::u_plus(n) * K::cs(lp, tau) - S2::u_minus(n) * K::cs(lm, tau)) /
             std::sqrt(S2::d(n));
    }
    case Family::TwoF0: {
      // Projection weights v+w+/(lambda+ sqrt(d)) and -v-w-/(lambda- sqrt(d)).
      // See ERRATA.md for the prefactor of this entry.
      const double lp = S2::lambda_plus(n), lm = S2::lambda_minus(n);
      return K::one() + (S2::v_plus(n) * S2::w_plus(n) * K::cm(lp, tau) -
                         S2::v_minus(n) * S2::w_minus(n) * K::cm(lm, tau)) /
                            std::sqrt(S2::d(n));
    }
    case Family::TwoFm1: {
      const double lp = S2::lambda_plus(n), lm = S2::lambda_minus(n);
      return (S2::u_plus(n) * K::cs(lm, tau) - S2::u_minus(n) * K::cs(lp, tau)) /
             std::sqrt(S2::d(n));
    }
    case Family::TwoFm2: {
      const double lp = S2::lambda_plus(n), lm = S2::lambda_minus(n);
      return K::one() + 4.0 * (n + 2.0) *
                            (S2::u_plus(n) * K::cm(lm, tau) - S2::u_minus(n) * K::cm(lp, tau)) /
                            std::sqrt(S2::d(n));
    }
    case Family::TwoH1: {
      const double lp = S2::lambda_plus(n), lm = S2::lambda_minus(n);
      return 2.0 * (S2::v_plus(n) * K::cm(lp, tau) - S2::v_minus(n) * K::cm(lm, tau)) /
             std::sqrt(S2::d(n));
    }
    case Family::TwoH0: {
      const double lp = S2::lambda_plus(n), lm = S2::lambda_minus(n);
      return (K::cs(lp, tau) - K::cs(lm, tau)) / std::sqrt(S2::d(n));
    }
    case Family::TwoHm1: {
      const double lp = S2::lambda_plus(n), lm = S2::lambda_minus(n);
      return 2.0 * (S2::w_plus(n) * K::cm(lp, tau) - S2::w_minus(n) * K::cm(lm, tau)) /
             std::sqrt(S2::d(n));
    }
    case Family::TwoK0: {
      const double lp = S2::lambda_plus(n), lm = S2::lambda_minus(n);
      return 4.0 * (K::cm(lp, tau) - K::cm(lm, tau)) / std::sqrt(S2::d(n));
    }
    case Family::TwoCapF1: {
      const double lp = S2::lambda_plus(n), lm = S2::lambda_minus(n);
      return (S2::u_plus(n) * K::sn(lp, tau) - S2::u_minus(n) * K::sn(lm, tau)) /
             std::sqrt(S2::d(n));
    }
    case Family::TwoCapFm1: {
      // Crossed pairing: u+ rides the lambda- branch. See ERRATA.md.
      const double lp = S2::lambda_plus(n), lm = S2::lambda_minus(n);
      return (S2::u_plus(n) * K::sn(lm, tau) - S2::u_minus(n) * K::sn(lp, tau)) /
             std::sqrt(S2::d(n));
    }
    case Family::TwoCapH1: {
      const double lp = S2::lambda_plus(n), lm = S2::lambda_minus(n);
      return 2.0 * (S2::v_plus(n) * K::sn(lp, tau) - S2::v_minus(n) * K::sn(lm, tau)) /
             std::sqrt(S2::d(n));
    }
    case Family::TwoCapH0: {
      const double lp = S2::lambda_plus(n), lm = S2::lambda_minus(n);
      return (K::sn(lp, tau) - K::sn(lm, tau)) / std::sqrt(S2::d(n));
    }
    case Family::TwoCapHm1: {
      const double lp = S2::lambda_plus(n), lm = S2::lambda_minus(n);
      return 2.0 * (S2::w_plus(n) * K::sn(lp, tau) - S2::w_minus(n) * K::sn(lm, tau)) /
             std::sqrt(S2::d(n));
    }
  }
  throw std::logic_error("family_eval: unknown family");
}

}  // namespace

double cos_sqrt(double lambda, double tau) {
  return lambda >= 0.0 ? std::cos(tau * std::sqrt(lambda))
                       : std::cosh(tau * std::sqrt(-lambda));
}

double sinc_sqrt(double lambda, double tau) {
  const double x = tau * tau * lambda;
  if (std::abs(x) <= kSeriesCut) return sinc_series(x, tau);
  if (lambda > 0.0) {
    const double s = std::sqrt(lambda);
    return std::sin(tau * s) / s;
  }
  const double s = std::sqrt(-lambda);
  return std::sinh(tau * s) / s;
}

double cosm1_over(double lambda, double tau) {
  const double x = tau * tau * lambda;
  if (std::abs(x) <= kSeriesCut) return cosm1_series(x, tau);
  return (cos_sqrt(lambda, tau) - 1.0) / lambda;
}

cplx cos_sqrt_c(double lambda, double tau) {
  return std::cos(tau * std::sqrt(cplx(lambda, 0.0)));
}

cplx sinc_sqrt_c(double lambda, double tau) {
  const double x = tau * tau * lambda;
  if (std::abs(x) <= kSeriesCut) return cplx(sinc_series(x, tau), 0.0);
  const cplx z = tau * std::sqrt(cplx(lambda, 0.0));
  return tau * std::sin(z) / z;
}

cplx cosm1_over_c(double lambda, double tau) {
  const double x = tau * tau * lambda;
  if (std::abs(x) <= kSeriesCut) return cplx(cosm1_series(x, tau), 0.0);
  return (cos_sqrt_c(lambda, tau) - 1.0) / lambda;
}

double family_eval(Family f, int n, double tau) {
  return eval_impl<RealKernels>(f, n, tau);
}

cplx family_eval_complex(Family f, int n, double tau) {
  return eval_impl<ComplexKernels>(f, n, tau);
}

std::string_view family_name(Family f) {
  switch (f) {
    case Family::One: return "one";
    case Family::HalfCos: return "spin12.cos";
    case Family::HalfSinc: return "spin12.sinc";
    case Family::OneF: return "spin1.f";
    case Family::OneH: return "spin1.h";
    case Family::OneDiagTop: return "spin1.diag_top";
    case Family::OneDiagMid: return "spin1.diag_mid";
    case Family::OneDiagBot: return "spin1.diag_bot";
    case Family::OneCornerTop: return "spin1.corner_top";
    case Family::OneCornerBot: return "spin1.corner_bot";
    case Family::ThreeHalfF2: return "spin32.f2";
    case Family::ThreeHalfF1: return "spin32.f1";
    case Family::ThreeHalfF0: return "spin32.f0";
    case Family::ThreeHalfFm1: return "spin32.fm1";
    case Family::ThreeHalfH1: return "spin32.h1";
    case Family::ThreeHalfCapF1: return "spin32.F1";
    case Family::ThreeHalfCapF0: return "spin32.F0";
    case Family::ThreeHalfCapH1: return "spin32.H1";
    case Family::ThreeHalfCapH0: return "spin32.H0";
    case Family::TwoF2: return "spin2.f2";
    case Family::TwoF1: return "spin2.f1";
    case Family::TwoF0: return "spin2.f0";
    case Family::TwoFm1: return "spin2.fm1";
    case Family::TwoFm2: return "spin2.fm2";
    case Family::TwoH1: return "spin2.h1";
    case Family::TwoH0: return "spin2.h0";
    case Family::TwoHm1: return "spin2.hm1";
    case Family::TwoK0: return "spin2.k0";
    case Family::TwoCapF1: return "spin2.F1";
    case Family::TwoCapFm1: return "spin2.Fm1";
    case Family::TwoCapH1: return "spin2.H1";
    case Family::TwoCapH0: return "spin2.H0";
    case Family::TwoCapHm1: return "spin2.Hm1";
  }
  return "unknown";
}

namespace {
// (c_plus lambda_+^q - c_minus lambda_-^q) / (2 sqrt(d)), with integer powers
// taken by iterated multiplication.
double weighted_power(double c_plus, double c_minus, int q, int n) {
  const double lp = SpinThreeHalf::lambda_plus(n);
  const double lm = SpinThreeHalf::lambda_minus(n);
  double pp = 1.0, pm = 1.0;
  for (int i = 0; i < q; ++i) {
    pp *= lp;
    pm *= lm;
  }
  return (c_plus * pp - c_minus * pm) / (2.0 * std::sqrt(SpinThreeHalf::d(n)));
}
}  // namespace

double PowerCoefficients::alpha(int q, int n) {
  return weighted_power(SpinThreeHalf::v_plus(n), SpinThreeHalf::v_minus(n), q, n);
}
double PowerCoefficients::beta(int q, int n) {
  return weighted_power(SpinThreeHalf::w_plus(n), SpinThreeHalf::w_minus(n), q, n);
}
double PowerCoefficients::gamma(int q, int n) {
  // weights swap branches relative to alpha
  const double lp = SpinThreeHalf::lambda_plus(n);
  const double lm = SpinThreeHalf::lambda_minus(n);
  double pp = 1.0, pm = 1.0;
  for (int i = 0; i < q; ++i) {
    pp *= lp;
    pm *= lm;
  }
  return (SpinThreeHalf::v_plus(n) * pm - SpinThreeHalf::v_minus(n) * pp) /
         (2.0 * std::sqrt(SpinThreeHalf::d(n)));
}
double PowerCoefficients::delta(int q, int n) {
  const double lp = SpinThreeHalf::lambda_plus(n);
  const double lm = SpinThreeHalf::lambda_minus(n);
  double pp = 1.0, pm = 1.0;
  for (int i = 0; i < q; ++i) {
    pp *= lp;
    pm *= lm;
  }
  return (SpinThreeHalf::w_plus(n) * pm - SpinThreeHalf::w_minus(n) * pp) /
         (2.0 * std::sqrt(SpinThreeHalf::d(n)));
}
double PowerCoefficients::xi(int q, int n) {
  return weighted_power(1.0, 1.0, q, n);
}

}  // namespace tc::spectral
