// Numeric evaluation: a real path (RealOnly mode, strict real-domain checks)
// and a complex path (principal branches).  Poles are reported as DomainError
// when the argument is within 1e-14 of the exact pole location.
#include <cmath>
#include <complex>

#include "transcend/expr.hpp"

namespace transcend {

namespace {

constexpr double kPoleTol = 1e-14;
const double kPi = std::acos(-1.0);

using Cplx = std::complex<double>;

double dist_to_multiple(double x, double period, double offset = 0.0) {
  return std::fabs(std::remainder(x - offset, period));
}

[[noreturn]] void pole(const char* fn) {
  throw DomainError(std::string(fn) + " evaluated at a pole");
}

// --- real path -------------------------------------------------------------

double real_func(Func f, double u) {
  switch (f) {
    case Func::Exp:
      return std::exp(u);
    case Func::Ln:
      if (u <= 0.0 || std::fabs(u) < kPoleTol) {
        throw DomainError("ln requires a positive real argument");
      }
      return std::log(u);
    case Func::Sin:
      return std::sin(u);
    case Func::Cos:
      return std::cos(u);
    case Func::Tan:
      if (dist_to_multiple(u, kPi, kPi / 2) < kPoleTol) pole("tan");
      return std::tan(u);
    case Func::Sec:
      if (dist_to_multiple(u, kPi, kPi / 2) < kPoleTol) pole("sec");
      return 1.0 / std::cos(u);
    case Func::Csc:
      if (dist_to_multiple(u, kPi) < kPoleTol) pole("csc");
      return 1.0 / std::sin(u);
    case Func::Cot:
      if (dist_to_multiple(u, kPi) < kPoleTol) pole("cot");
      return std::cos(u) / std::sin(u);
    case Func::Sinh:
      return std::sinh(u);
    case Func::Cosh:
      return std::cosh(u);
    case Func::Tanh:
      return std::tanh(u);
    case Func::Coth:
      if (std::fabs(u) < kPoleTol) pole("coth");
      return std::cosh(u) / std::sinh(u);
    case Func::Asin:
      if (u < -1.0 || u > 1.0) {
        throw DomainError("asin requires an argument in [-1, 1]");
      }
      return std::asin(u);
    case Func::Acos:
      if (u < -1.0 || u > 1.0) {
        throw DomainError("acos requires an argument in [-1, 1]");
      }
      return std::acos(u);
    case Func::Atan:
      return std::atan(u);
    case Func::Acot:
      // principal value in (0, pi): pi/2 at 0, atan(1/u) shifted for u < 0
      if (u == 0.0) return kPi / 2;
      return u > 0.0 ? std::atan(1.0 / u) : std::atan(1.0 / u) + kPi;
    case Func::Asec:
      if (u > -1.0 && u < 1.0) {
        throw DomainError("asec requires |argument| >= 1");
      }
      return std::acos(1.0 / u);
    case Func::Acsc:
      if (u > -1.0 && u < 1.0) {
        throw DomainError("acsc requires |argument| >= 1");
      }
      return std::asin(1.0 / u);
  }
  return 0.0;  // unreachable
}

double eval_real_node(const Expr& e, double x,
                      const std::optional<double>& tau) {
  switch (e.kind()) {
    case Expr::Kind::RationalConst:
      return e.rational_value().to_double();
    case Expr::Kind::NamedConst:
      switch (e.named_tag()) {
        case Named::E: return std::exp(1.0);
        case Named::Pi: return kPi;
        case Named::I:
          throw DomainError("imaginary unit in real-only evaluation");
      }
      return 0.0;
    case Expr::Kind::FormalTau:
      if (!tau) throw MissingTau();
      return *tau;
    case Expr::Kind::Var:
      return x;
    case Expr::Kind::Binary: {
      double a = eval_real_node(e.left(), x, tau);
      double b = eval_real_node(e.right(), x, tau);
      switch (e.bin_op()) {
        case BinOp::Add: return a + b;
        case BinOp::Sub: return a - b;
        case BinOp::Mul: return a * b;
        case BinOp::Div:
          if (b == 0.0) throw DomainError("division by zero in evaluation");
          return a / b;
      }
      return 0.0;  // unreachable
    }
    case Expr::Kind::IntPow: {
      double base = eval_real_node(e.base(), x, tau);
      long long n = e.exponent();
      if (n < 0 && base == 0.0) {
        throw DomainError("0 raised to a negative power in evaluation");
      }
      bool invert = n < 0;
      unsigned long long k =
          invert ? static_cast<unsigned long long>(-(n + 1)) + 1
                 : static_cast<unsigned long long>(n);
      double acc = 1.0, b = base;
      while (k > 0) {
        if (k & 1) acc *= b;
        b *= b;
        k >>= 1;
      }
      return invert ? 1.0 / acc : acc;
    }
    case Expr::Kind::Apply:
      return real_func(e.func(), eval_real_node(e.arg(), x, tau));
  }
  return 0.0;  // unreachable
}

// --- complex path ----------------------------------------------------------

bool near(Cplx z, Cplx w) { return std::abs(z - w) < kPoleTol; }

// poles of tan/sec: pi/2 + k*pi on the real axis
bool near_real_grid(Cplx z, double offset) {
  return std::fabs(z.imag()) < kPoleTol &&
         dist_to_multiple(z.real(), kPi, offset) < kPoleTol;
}

// poles of tanh/coth analogues on the imaginary axis
bool near_imag_grid(Cplx z, double offset) {
  return std::fabs(z.real()) < kPoleTol &&
         dist_to_multiple(z.imag(), kPi, offset) < kPoleTol;
}

Cplx cplx_func(Func f, Cplx u) {
  switch (f) {
    case Func::Exp:
      return std::exp(u);
    case Func::Ln:
      if (std::abs(u) < kPoleTol) pole("ln");
      return std::log(u);
    case Func::Sin:
      return std::sin(u);
    case Func::Cos:
      return std::cos(u);
    case Func::Tan:
      if (near_real_grid(u, kPi / 2)) pole("tan");
      return std::tan(u);
    case Func::Sec:
      if (near_real_grid(u, kPi / 2)) pole("sec");
      return 1.0 / std::cos(u);
    case Func::Csc:
      if (near_real_grid(u, 0.0)) pole("csc");
      return 1.0 / std::sin(u);
    case Func::Cot:
      if (near_real_grid(u, 0.0)) pole("cot");
      return std::cos(u) / std::sin(u);
    case Func::Sinh:
      return std::sinh(u);
    case Func::Cosh:
      return std::cosh(u);
    case Func::Tanh:
      if (near_imag_grid(u, kPi / 2)) pole("tanh");
      return std::tanh(u);
    case Func::Coth:
      if (near_imag_grid(u, 0.0)) pole("coth");
      return std::cosh(u) / std::sinh(u);
    case Func::Asin:
      return std::asin(u);
    case Func::Acos:
      return std::acos(u);
    case Func::Atan:
      if (near(u, Cplx(0, 1)) || near(u, Cplx(0, -1))) pole("atan");
      return std::atan(u);
    case Func::Acot:
      if (std::abs(u) < kPoleTol) return Cplx(kPi / 2, 0.0);
      if (near(u, Cplx(0, 1)) || near(u, Cplx(0, -1))) pole("acot");
      {
        Cplx v = std::atan(1.0 / u);
        // keep the real principal range (0, pi) on the real axis
        if (u.imag() == 0.0 && u.real() < 0.0) v += kPi;
        return v;
      }
    case Func::Asec:
      if (std::abs(u) < kPoleTol) pole("asec");
      return std::acos(1.0 / u);
    case Func::Acsc:
      if (std::abs(u) < kPoleTol) pole("acsc");
      return std::asin(1.0 / u);
  }
  return {};  // unreachable
}

Cplx eval_cplx_node(const Expr& e, Cplx z, const std::optional<double>& tau) {
  switch (e.kind()) {
    case Expr::Kind::RationalConst:
      return {e.rational_value().to_double(), 0.0};
    case Expr::Kind::NamedConst:
      switch (e.named_tag()) {
        case Named::E: return {std::exp(1.0), 0.0};
        case Named::Pi: return {kPi, 0.0};
        case Named::I: return {0.0, 1.0};
      }
      return {};
    case Expr::Kind::FormalTau:
      if (!tau) throw MissingTau();
      return {*tau, 0.0};
    case Expr::Kind::Var:
      return z;
    case Expr::Kind::Binary: {
      Cplx a = eval_cplx_node(e.left(), z, tau);
      Cplx b = eval_cplx_node(e.right(), z, tau);
      switch (e.bin_op()) {
        case BinOp::Add: return a + b;
        case BinOp::Sub: return a - b;
        case BinOp::Mul: return a * b;
        case BinOp::Div:
          if (b == 0.0) throw DomainError("division by zero in evaluation");
          return a / b;
      }
      return {};  // unreachable
    }
    case Expr::Kind::IntPow: {
      Cplx base = eval_cplx_node(e.base(), z, tau);
      long long n = e.exponent();
      if (n < 0 && base == 0.0) {
        throw DomainError("0 raised to a negative power in evaluation");
      }
      bool invert = n < 0;
      unsigned long long k =
          invert ? static_cast<unsigned long long>(-(n + 1)) + 1
                 : static_cast<unsigned long long>(n);
      Cplx acc = 1.0, b = base;
      while (k > 0) {
        if (k & 1) acc *= b;
        b *= b;
        k >>= 1;
      }
      return invert ? 1.0 / acc : acc;
    }
    case Expr::Kind::Apply:
      return cplx_func(e.func(), eval_cplx_node(e.arg(), z, tau));
  }
  return {};  // unreachable
}

}  // namespace

std::complex<double> eval(const Expr& e, std::complex<double> z,
                          std::optional<double> tau_value, EvalMode mode) {
  if (mode == EvalMode::RealOnly) {
    if (z.imag() != 0.0) {
      throw DomainError("real-only evaluation at a non-real point");
    }
    return {eval_real_node(e, z.real(), tau_value), 0.0};
  }
  return eval_cplx_node(e, z, tau_value);
}

double eval_real(const Expr& e, double x, std::optional<double> tau_value) {
  return eval_real_node(e, x, tau_value);
}

}  // namespace transcend
