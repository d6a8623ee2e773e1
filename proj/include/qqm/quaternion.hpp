#pragma once

#include <cmath>
#include <complex>
#include <ostream>

namespace qqm {

/// Real quaternion q = w + x*i + y*j + z*k.
///
/// The imaginary units multiply as
///   i*i = j*j = k*k = -1,
///   i*j = -j*i = k,   j*k = -k*j = i,   k*i = -i*k = j.
///
/// Products of the unit elements are exact in floating point (only 0 and +-1
/// are ever produced), so algebra-table identities can be asserted bit-exact.
template <typename Scalar = double>
struct Quaternion {
  Scalar w{}, x{}, y{}, z{};

  constexpr Quaternion() = default;
  constexpr Quaternion(Scalar w_, Scalar x_, Scalar y_, Scalar z_)
      : w(w_), x(x_), y(y_), z(z_) {}

  static constexpr Quaternion one() { return {1, 0, 0, 0}; }
  static constexpr Quaternion i() { return {0, 1, 0, 0}; }
  static constexpr Quaternion j() { return {0, 0, 1, 0}; }
  static constexpr Quaternion k() { return {0, 0, 0, 1}; }

  constexpr Quaternion conjugate() const { return {w, -x, -y, -z}; }
  constexpr Scalar squaredNorm() const { return w * w + x * x + y * y + z * z; }
  Scalar norm() const { return std::sqrt(squaredNorm()); }
  /// Norm of the i,j,k part.
  Scalar vectorNorm() const { return std::sqrt(x * x + y * y + z * z); }

  Quaternion normalized() const {
    const Scalar n = norm();
    return {w / n, x / n, y / n, z / n};
  }

  Quaternion inverse() const {
    const Scalar n2 = squaredNorm();
    return {w / n2, -x / n2, -y / n2, -z / n2};
  }

  constexpr bool operator==(const Quaternion&) const = default;

  friend constexpr Quaternion operator+(const Quaternion& a, const Quaternion& b) {
    return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
  }
  friend constexpr Quaternion operator-(const Quaternion& a, const Quaternion& b) {
    return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
  }
  friend constexpr Quaternion operator-(const Quaternion& a) {
    return {-a.w, -a.x, -a.y, -a.z};
  }
  friend constexpr Quaternion operator*(Scalar s, const Quaternion& a) {
    return {s * a.w, s * a.x, s * a.y, s * a.z};
  }
  friend constexpr Quaternion operator*(const Quaternion& a, Scalar s) { return s * a; }

  friend constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
  }

  friend std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
    return os << "(" << q.w << " + " << q.x << "i + " << q.y << "j + " << q.z << "k)";
  }
};

using Quaterniond = Quaternion<double>;

/// Quaternion exponential. The scalar part factors out; the vector part maps
/// through cos|v| + (v/|v|) sin|v|.
template <typename Scalar>
Quaternion<Scalar> exp(const Quaternion<Scalar>& q) {
  const Scalar theta = q.vectorNorm();
  const Scalar ew = std::exp(q.w);
  if (theta == Scalar(0)) return {ew, 0, 0, 0};
  const Scalar s = ew * std::sin(theta) / theta;
  return {ew * std::cos(theta), s * q.x, s * q.y, s * q.z};
}

/// Symplectic (complex-pair) form of a quaternion: q = alpha + j*beta with
/// alpha, beta in the subalgebra spanned by 1 and i. For a complex number c,
/// j*c = conj(c)*j; every sign rule below follows from that.
template <typename Scalar = double>
struct SymplecticPair {
  std::complex<Scalar> alpha{}, beta{};

  constexpr bool operator==(const SymplecticPair&) const = default;

  /// (a + j b)(c + j d) = (a c - conj(b) d) + j (b c + conj(a) d)
  friend SymplecticPair operator*(const SymplecticPair& p, const SymplecticPair& q) {
    return {p.alpha * q.alpha - std::conj(p.beta) * q.beta,
            p.beta * q.alpha + std::conj(p.alpha) * q.beta};
  }
};

using SymplecticPaird = SymplecticPair<double>;

template <typename Scalar>
constexpr SymplecticPair<Scalar> to_symplectic(const Quaternion<Scalar>& q) {
  return {{q.w, q.x}, {q.y, -q.z}};
}

template <typename Scalar>
constexpr Quaternion<Scalar> from_symplectic(const SymplecticPair<Scalar>& s) {
  return {s.alpha.real(), s.alpha.imag(), s.beta.real(), -s.beta.imag()};
}

}  // namespace qqm
