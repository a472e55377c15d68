#pragma once

// Scalars, first-order spectral-parameter jets and 2x2 complex matrices.
//
// Frame code is written once against a scalar type `S` which is either a plain
// `cplx` or a `Jet` (value plus d/dlambda). Everything here is a pure function
// over values.

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <type_traits>
#include <utility>

#include "bubbleton/error.hpp"

namespace bubbleton {

using cplx = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr cplx kI{0.0, 1.0};

/// Default tolerance for structural preconditions (su2 membership, singularity).
inline constexpr double kStructuralTol = 1e-10;

// ---------------------------------------------------------------------------
// Jet
// ---------------------------------------------------------------------------

/// A complex value together with its first derivative with respect to the
/// spectral parameter. Only holomorphic operations are provided, so conj()
/// is deliberately absent.
struct Jet {
  cplx val{};
  cplx der{};

  constexpr Jet() = default;
  constexpr Jet(cplx v, cplx d) : val(v), der(d) {}
  // Constants promote with zero derivative.
  constexpr Jet(cplx v) : val(v), der(0.0) {}  // NOLINT(google-explicit-constructor)
  constexpr Jet(double v) : val(v), der(0.0) {}  // NOLINT(google-explicit-constructor)

  /// The independent variable at `at`.
  static constexpr Jet variable(cplx at) { return {at, 1.0}; }

  Jet& operator+=(const Jet& o) { val += o.val; der += o.der; return *this; }
  Jet& operator-=(const Jet& o) { val -= o.val; der -= o.der; return *this; }
  Jet& operator*=(const Jet& o) {
    der = der * o.val + val * o.der;
    val *= o.val;
    return *this;
  }
  Jet& operator/=(const Jet& o) {
    der = (der * o.val - val * o.der) / (o.val * o.val);
    val /= o.val;
    return *this;
  }
};

inline Jet operator-(const Jet& a) { return {-a.val, -a.der}; }
inline Jet operator+(Jet a, const Jet& b) { return a += b; }
inline Jet operator-(Jet a, const Jet& b) { return a -= b; }
inline Jet operator*(Jet a, const Jet& b) { return a *= b; }
inline Jet operator/(Jet a, const Jet& b) { return a /= b; }

inline Jet sin(const Jet& a) { return {std::sin(a.val), a.der * std::cos(a.val)}; }
inline Jet cos(const Jet& a) { return {std::cos(a.val), -a.der * std::sin(a.val)}; }
inline Jet exp(const Jet& a) {
  const cplx e = std::exp(a.val);
  return {e, a.der * e};
}

template <class S>
inline constexpr bool is_jet_v = std::is_same_v<S, Jet>;

inline cplx value_of(const cplx& a) { return a; }
inline cplx value_of(const Jet& a) { return a.val; }
inline cplx derivative_of(const cplx&) { return 0.0; }
inline cplx derivative_of(const Jet& a) { return a.der; }

// ---------------------------------------------------------------------------
// Principal square root
// ---------------------------------------------------------------------------

/// Principal branch, cut along the negative real axis, with sqrt(-1) = i
/// regardless of the sign of a zero imaginary part.
inline cplx principal_sqrt(cplx a) {
  if (a == cplx(0.0, 0.0)) throw Error(Errc::zero_argument, "principal_sqrt(0)");
  if (a.imag() == 0.0) {
    if (a.real() < 0.0) return {0.0, std::sqrt(-a.real())};
    return {std::sqrt(a.real()), 0.0};
  }
  return std::sqrt(a);
}

inline Jet principal_sqrt(const Jet& a) {
  const cplx s = principal_sqrt(a.val);
  return {s, a.der / (2.0 * s)};
}

// ---------------------------------------------------------------------------
// Mat2
// ---------------------------------------------------------------------------

template <class S>
struct Mat2 {
  S a{}, b{}, c{}, d{};  // [[a, b], [c, d]]

  static Mat2 identity() { return {S(1.0), S(0.0), S(0.0), S(1.0)}; }
  static Mat2 zero() { return {S(0.0), S(0.0), S(0.0), S(0.0)}; }
  static Mat2 diag(const S& p, const S& q) { return {p, S(0.0), S(0.0), q}; }

  S det() const { return a * d - b * c; }
  S trace() const { return a + d; }

  /// General inverse; throws on a zero determinant value.
  Mat2 inverse() const {
    const S dt = det();
    if (value_of(dt) == cplx(0.0, 0.0)) throw Error(Errc::singular_input, "Mat2::inverse");
    const S inv = S(1.0) / dt;
    return {d * inv, -b * inv, -c * inv, a * inv};
  }

  Mat2& operator+=(const Mat2& o) { a += o.a; b += o.b; c += o.c; d += o.d; return *this; }
  Mat2& operator-=(const Mat2& o) { a -= o.a; b -= o.b; c -= o.c; d -= o.d; return *this; }
};

template <class S>
Mat2<S> operator*(const Mat2<S>& x, const Mat2<S>& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
          x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}
template <class S>
Mat2<S> operator+(Mat2<S> x, const Mat2<S>& y) { return x += y; }
template <class S>
Mat2<S> operator-(Mat2<S> x, const Mat2<S>& y) { return x -= y; }
template <class S>
Mat2<S> operator*(const S& s, const Mat2<S>& m) { return {s * m.a, s * m.b, s * m.c, s * m.d}; }

inline Mat2<cplx> operator*(double s, const Mat2<cplx>& m) { return cplx(s) * m; }
inline Mat2<Jet> operator*(const cplx& s, const Mat2<Jet>& m) { return Jet(s) * m; }

/// Lift a constant matrix into the jet algebra (zero derivative).
inline Mat2<Jet> lift(const Mat2<cplx>& m) { return {Jet(m.a), Jet(m.b), Jet(m.c), Jet(m.d)}; }
inline const Mat2<cplx>& lift_value(const Mat2<cplx>& m) { return m; }

inline Mat2<cplx> value_part(const Mat2<Jet>& m) { return {m.a.val, m.b.val, m.c.val, m.d.val}; }
inline Mat2<cplx> derivative_part(const Mat2<Jet>& m) { return {m.a.der, m.b.der, m.c.der, m.d.der}; }
inline const Mat2<cplx>& value_part(const Mat2<cplx>& m) { return m; }

inline Mat2<cplx> conj_transpose(const Mat2<cplx>& m) {
  return {std::conj(m.a), std::conj(m.c), std::conj(m.b), std::conj(m.d)};
}

/// Frobenius norm.
inline double norm(const Mat2<cplx>& m) {
  return std::sqrt(std::norm(m.a) + std::norm(m.b) + std::norm(m.c) + std::norm(m.d));
}

inline double distance(const Mat2<cplx>& x, const Mat2<cplx>& y) { return norm(x - y); }

/// ||m m^* - 1||
inline double unitarity_defect(const Mat2<cplx>& m) {
  return distance(m * conj_transpose(m), Mat2<cplx>::identity());
}

// ---------------------------------------------------------------------------
// CP^1 lines
// ---------------------------------------------------------------------------

/// A complex line in C^2, stored as a unit representative.
class LineCP1 {
 public:
  LineCP1(cplx a, cplx b) {
    const double n = std::hypot(std::abs(a), std::abs(b));
    if (!(n > 0.0) || !std::isfinite(n)) throw Error(Errc::invalid_argument, "LineCP1 needs a nonzero finite vector");
    v_ = {a / n, b / n};
  }

  static LineCP1 e1() { return {1.0, 0.0}; }

  cplx first() const { return v_[0]; }
  cplx second() const { return v_[1]; }

  /// Lines are equal iff their representatives are proportional.
  bool same_line(const LineCP1& o, double tol = kStructuralTol) const {
    return std::abs(v_[0] * o.v_[1] - v_[1] * o.v_[0]) <= tol;
  }

  /// Image of the line under a nonsingular matrix.
  friend LineCP1 operator*(const Mat2<cplx>& m, const LineCP1& l) {
    return {m.a * l.v_[0] + m.b * l.v_[1], m.c * l.v_[0] + m.d * l.v_[1]};
  }

 private:
  std::array<cplx, 2> v_;
};

/// pi_L = v v^* / |v|^2; idempotent, hermitian, trace one.
inline Mat2<cplx> hermitian_projection(const LineCP1& l) {
  const cplx a = l.first();
  const cplx b = l.second();
  return {std::norm(a), a * std::conj(b), std::conj(a) * b, std::norm(b)};
}

// ---------------------------------------------------------------------------
// R^3 = su2
// ---------------------------------------------------------------------------

struct Vec3 {
  double x1 = 0.0, x2 = 0.0, x3 = 0.0;

  friend Vec3 operator+(const Vec3& p, const Vec3& q) { return {p.x1 + q.x1, p.x2 + q.x2, p.x3 + q.x3}; }
  friend Vec3 operator-(const Vec3& p, const Vec3& q) { return {p.x1 - q.x1, p.x2 - q.x2, p.x3 - q.x3}; }
  friend Vec3 operator*(double s, const Vec3& p) { return {s * p.x1, s * p.x2, s * p.x3}; }
  friend bool operator==(const Vec3&, const Vec3&) = default;
};

inline double dot(const Vec3& p, const Vec3& q) { return p.x1 * q.x1 + p.x2 * q.x2 + p.x3 * q.x3; }
inline Vec3 cross(const Vec3& p, const Vec3& q) {
  return {p.x2 * q.x3 - p.x3 * q.x2, p.x3 * q.x1 - p.x1 * q.x3, p.x1 * q.x2 - p.x2 * q.x1};
}
inline double norm(const Vec3& p) { return std::sqrt(dot(p, p)); }

/// (x1, x2, x3) -> [[i x3, x1 + i x2], [-x1 + i x2, -i x3]]
inline Mat2<cplx> r3_to_spinor(const Vec3& p) {
  return {cplx(0.0, p.x3), cplx(p.x1, p.x2), cplx(-p.x1, p.x2), cplx(0.0, -p.x3)};
}

/// Inverse of r3_to_spinor. The tolerance is relative to max(1, |m|) so large
/// immersion values are not rejected for rounding.
Vec3 spinor_to_r3(const Mat2<cplx>& m, double tol = kStructuralTol);

// ---------------------------------------------------------------------------
// Gram-Schmidt
// ---------------------------------------------------------------------------

struct QR {
  Mat2<cplx> q;
  Mat2<cplx> r;
};

/// Column Gram-Schmidt m = Q R with Q unitary and R upper triangular with a
/// positive real diagonal. For det m = 1 this puts Q in SU2 and R in SL2.
QR gram_schmidt_qr(const Mat2<cplx>& m, double tol = kStructuralTol);

}  // namespace bubbleton
