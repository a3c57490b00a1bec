#pragma once

#include <array>
#include <complex>
#include <cstddef>

namespace rqpd {

using Complex = std::complex<double>;

// Absolute tolerance for equality and unitarity checks.
inline constexpr double kTolerance = 1e-12;

inline constexpr Complex kI{0.0, 1.0};

// Basis order for every two-qubit object is (CC, CD, DC, DD).
enum class Basis : std::size_t { CC = 0, CD = 1, DC = 2, DD = 3 };

struct Mat2 {
  std::array<Complex, 4> e{};  // row-major

  Complex& operator()(std::size_t r, std::size_t c) { return e[2 * r + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return e[2 * r + c]; }

  static Mat2 identity();
  bool is_finite() const;
};

struct Mat4 {
  std::array<Complex, 16> e{};  // row-major

  Complex& operator()(std::size_t r, std::size_t c) { return e[4 * r + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return e[4 * r + c]; }

  static Mat4 identity();
  bool is_finite() const;
};

struct State4 {
  std::array<Complex, 4> amp{};

  Complex& operator[](std::size_t i) { return amp[i]; }
  const Complex& operator[](std::size_t i) const { return amp[i]; }
  Complex& operator[](Basis b) { return amp[static_cast<std::size_t>(b)]; }
  const Complex& operator[](Basis b) const { return amp[static_cast<std::size_t>(b)]; }

  static State4 basis(Basis b);
  double norm() const;
  bool is_finite() const;
};

Mat2 operator*(const Mat2& a, const Mat2& b);
Mat4 operator*(const Mat4& a, const Mat4& b);
Mat4 operator+(const Mat4& a, const Mat4& b);
Mat4 operator*(Complex k, const Mat4& m);
State4 operator+(const State4& a, const State4& b);
State4 operator*(Complex k, const State4& v);

// Kronecker product a ⊗ b in the fixed basis order.
Mat4 tensor2(const Mat2& a, const Mat2& b);

State4 apply(const Mat4& m, const State4& v);

Mat4 adjoint(const Mat4& m);
Mat2 adjoint2(const Mat2& m);
Mat2 transpose2(const Mat2& m);

// max |(m†m − I)_ij|; zero for an exactly unitary matrix.
double unitarity_defect(const Mat4& m);
double unitarity_defect(const Mat2& m);

// Largest entrywise modulus of a − b.
double max_abs_diff(const Mat4& a, const Mat4& b);
double max_abs_diff(const Mat2& a, const Mat2& b);
double max_abs_diff(const State4& a, const State4& b);

}  // namespace rqpd
