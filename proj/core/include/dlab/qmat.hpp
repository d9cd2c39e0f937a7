// Copyright 2026 The duality_lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DLAB_QMAT_HPP
#define DLAB_QMAT_HPP

#include <array>
#include <complex>
#include <cstddef>

namespace dlab {

using Complex = std::complex<double>;

/// Absolute tolerances used by the predicates and checked preconditions.
inline constexpr double kCheckTol = 1e-10;
inline constexpr double kIdentityTol = 1e-12;

/// A complex 2-vector in the path basis {|psi1>, |psi2>}.
using Vec2 = std::array<Complex, 2>;

Complex inner(const Vec2 &a, const Vec2 &b);  // <a|b>
double norm(const Vec2 &v);

/// Dense square complex matrix, row-major. Public constructors reject
/// non-finite entries with DomainError; arithmetic results are not rechecked.
template <std::size_t N>
class ComplexMat {
   public:
    static constexpr std::size_t dim = N;

    constexpr ComplexMat() = default;
    explicit ComplexMat(const std::array<Complex, N * N> &entries);

    static ComplexMat identity();
    static ComplexMat zero() { return ComplexMat(); }

    Complex &operator()(std::size_t r, std::size_t c) { return m_[r * N + c]; }
    const Complex &operator()(std::size_t r, std::size_t c) const { return m_[r * N + c]; }
    const std::array<Complex, N * N> &entries() const { return m_; }

    ComplexMat adjoint() const;
    Complex trace() const;

    ComplexMat &operator+=(const ComplexMat &o);
    ComplexMat &operator-=(const ComplexMat &o);
    ComplexMat &operator*=(Complex s);

    friend ComplexMat operator+(ComplexMat a, const ComplexMat &b) { return a += b; }
    friend ComplexMat operator-(ComplexMat a, const ComplexMat &b) { return a -= b; }
    friend ComplexMat operator*(ComplexMat a, Complex s) { return a *= s; }
    friend ComplexMat operator*(Complex s, ComplexMat a) { return a *= s; }
    friend ComplexMat operator*(const ComplexMat &a, const ComplexMat &b) {
        ComplexMat out;
        for (std::size_t i = 0; i < N; ++i) {
            for (std::size_t k = 0; k < N; ++k) {
                const Complex aik = a(i, k);
                for (std::size_t j = 0; j < N; ++j) {
                    out(i, j) += aik * b(k, j);
                }
            }
        }
        return out;
    }

   private:
    std::array<Complex, N * N> m_{};
};

using ComplexMat2 = ComplexMat<2>;
using ComplexMat4 = ComplexMat<4>;

ComplexMat2 mat2(Complex a00, Complex a01, Complex a10, Complex a11);
ComplexMat2 outer(const Vec2 &a, const Vec2 &b);  // |a><b|
Vec2 operator*(const ComplexMat2 &a, const Vec2 &v);

/// Largest entrywise modulus of a - b.
template <std::size_t N>
double max_abs_diff(const ComplexMat<N> &a, const ComplexMat<N> &b);

template <std::size_t N>
bool is_hermitian(const ComplexMat<N> &a, double tol = kCheckTol);
bool is_unitary(const ComplexMat2 &a, double tol = kIdentityTol);

/// Eigenvalues in descending order with orthonormal eigenvectors.
struct EigenPair2 {
    std::array<double, 2> values{};
    std::array<Vec2, 2> vectors{};
};

/// Closed-form eigendecomposition of a 2x2 Hermitian matrix.
///
/// When the two eigenvalues are within `degeneracy_tol` of each other the
/// spectrum carries no basis information and `preferred` is returned as the
/// eigenbasis. `preferred` must be orthonormal; it defaults to the path basis.
/// Throws NonHermitianInput if `a` is not Hermitian within `herm_tol`.
EigenPair2 herm_eigen(const ComplexMat2 &a, const std::array<Vec2, 2> &preferred,
                      double degeneracy_tol = kIdentityTol, double herm_tol = kCheckTol);
EigenPair2 herm_eigen(const ComplexMat2 &a);

/// Eigenvalues only (descending).
std::array<double, 2> herm_eigenvalues(const ComplexMat2 &a, double herm_tol = kCheckTol);

/// Tr sqrt(X^dagger X) for Hermitian X, i.e. the sum of absolute eigenvalues.
double trace_norm(const ComplexMat2 &a, double herm_tol = kCheckTol);

/// Tensor product with the quanton factor first: (a (x) b)(2i+k, 2j+l) = a_ij b_kl.
ComplexMat4 kron(const ComplexMat2 &a, const ComplexMat2 &b);

/// Traces out the second (detector) factor of a quanton (x) detector operator.
ComplexMat2 partial_trace_detector(const ComplexMat4 &rho);

}  // namespace dlab

#endif
