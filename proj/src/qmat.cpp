#include "rqpd/qmat.hpp"

#include <algorithm>
#include <cmath>

namespace rqpd {

namespace {

bool finite(const Complex& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

template <std::size_t N>
bool all_finite(const std::array<Complex, N>& xs) {
  return std::all_of(xs.begin(), xs.end(), finite);
}

template <std::size_t N>
double max_diff(const std::array<Complex, N>& a, const std::array<Complex, N>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < N; ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

}  // namespace

Mat2 Mat2::identity() {
  Mat2 m;
  m(0, 0) = m(1, 1) = 1.0;
  return m;
}

bool Mat2::is_finite() const { return all_finite(e); }

Mat4 Mat4::identity() {
  Mat4 m;
  for (std::size_t i = 0; i < 4; ++i) m(i, i) = 1.0;
  return m;
}

bool Mat4::is_finite() const { return all_finite(e); }

State4 State4::basis(Basis b) {
  State4 v;
  v[b] = 1.0;
  return v;
}

double State4::norm() const {
  double sum = 0.0;
  for (const auto& a : amp) sum += std::norm(a);
  return std::sqrt(sum);
}

bool State4::is_finite() const { return all_finite(amp); }

Mat2 operator*(const Mat2& a, const Mat2& b) {
  Mat2 out;
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) out(r, c) = a(r, 0) * b(0, c) + a(r, 1) * b(1, c);
  return out;
}

Mat4 operator*(const Mat4& a, const Mat4& b) {
  Mat4 out;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) {
      Complex acc = 0.0;
      for (std::size_t k = 0; k < 4; ++k) acc += a(r, k) * b(k, c);
      out(r, c) = acc;
    }
  return out;
}

Mat4 operator+(const Mat4& a, const Mat4& b) {
  Mat4 out;
  for (std::size_t i = 0; i < 16; ++i) out.e[i] = a.e[i] + b.e[i];
  return out;
}

Mat4 operator*(Complex k, const Mat4& m) {
  Mat4 out;
  for (std::size_t i = 0; i < 16; ++i) out.e[i] = k * m.e[i];
  return out;
}

State4 operator+(const State4& a, const State4& b) {
  State4 out;
  for (std::size_t i = 0; i < 4; ++i) out[i] = a[i] + b[i];
  return out;
}

State4 operator*(Complex k, const State4& v) {
  State4 out;
  for (std::size_t i = 0; i < 4; ++i) out[i] = k * v[i];
  return out;
}

Mat4 tensor2(const Mat2& a, const Mat2& b) {
  Mat4 out;
  for (std::size_t ar = 0; ar < 2; ++ar)
    for (std::size_t ac = 0; ac < 2; ++ac)
      for (std::size_t br = 0; br < 2; ++br)
        for (std::size_t bc = 0; bc < 2; ++bc) out(2 * ar + br, 2 * ac + bc) = a(ar, ac) * b(br, bc);
  return out;
}

State4 apply(const Mat4& m, const State4& v) {
  State4 out;
  for (std::size_t r = 0; r < 4; ++r) {
    Complex acc = 0.0;
    for (std::size_t c = 0; c < 4; ++c) acc += m(r, c) * v[c];
    out[r] = acc;
  }
  return out;
}

Mat4 adjoint(const Mat4& m) {
  Mat4 out;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) out(r, c) = std::conj(m(c, r));
  return out;
}

Mat2 adjoint2(const Mat2& m) {
  Mat2 out;
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) out(r, c) = std::conj(m(c, r));
  return out;
}

Mat2 transpose2(const Mat2& m) {
  Mat2 out;
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) out(r, c) = m(c, r);
  return out;
}

double unitarity_defect(const Mat4& m) { return max_abs_diff(adjoint(m) * m, Mat4::identity()); }

double unitarity_defect(const Mat2& m) { return max_abs_diff(adjoint2(m) * m, Mat2::identity()); }

double max_abs_diff(const Mat4& a, const Mat4& b) { return max_diff(a.e, b.e); }
double max_abs_diff(const Mat2& a, const Mat2& b) { return max_diff(a.e, b.e); }
double max_abs_diff(const State4& a, const State4& b) { return max_diff(a.amp, b.amp); }

}  // namespace rqpd
