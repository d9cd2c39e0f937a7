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

#include "dlab/qmat.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dlab/errors.hpp"

namespace dlab {

Complex inner(const Vec2 &a, const Vec2 &b) {
    return std::conj(a[0]) * b[0] + std::conj(a[1]) * b[1];
}

double norm(const Vec2 &v) {
    return std::sqrt(std::norm(v[0]) + std::norm(v[1]));
}

template <std::size_t N>
ComplexMat<N>::ComplexMat(const std::array<Complex, N * N> &entries) : m_(entries) {
    for (const auto &z : m_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw DomainError("matrix entry is not finite");
        }
    }
}

template <std::size_t N>
ComplexMat<N> ComplexMat<N>::identity() {
    ComplexMat out;
    for (std::size_t i = 0; i < N; ++i) {
        out(i, i) = 1.0;
    }
    return out;
}

template <std::size_t N>
ComplexMat<N> ComplexMat<N>::adjoint() const {
    ComplexMat out;
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = 0; j < N; ++j) {
            out(i, j) = std::conj((*this)(j, i));
        }
    }
    return out;
}

template <std::size_t N>
Complex ComplexMat<N>::trace() const {
    Complex t = 0;
    for (std::size_t i = 0; i < N; ++i) {
        t += (*this)(i, i);
    }
    return t;
}

template <std::size_t N>
ComplexMat<N> &ComplexMat<N>::operator+=(const ComplexMat &o) {
    for (std::size_t k = 0; k < N * N; ++k) {
        m_[k] += o.m_[k];
    }
    return *this;
}

template <std::size_t N>
ComplexMat<N> &ComplexMat<N>::operator-=(const ComplexMat &o) {
    for (std::size_t k = 0; k < N * N; ++k) {
        m_[k] -= o.m_[k];
    }
    return *this;
}

template <std::size_t N>
ComplexMat<N> &ComplexMat<N>::operator*=(Complex s) {
    for (auto &z : m_) {
        z *= s;
    }
    return *this;
}

template <std::size_t N>
double max_abs_diff(const ComplexMat<N> &a, const ComplexMat<N> &b) {
    double worst = 0;
    for (std::size_t k = 0; k < N * N; ++k) {
        worst = std::max(worst, std::abs(a.entries()[k] - b.entries()[k]));
    }
    return worst;
}

template <std::size_t N>
bool is_hermitian(const ComplexMat<N> &a, double tol) {
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = i; j < N; ++j) {
            if (std::abs(a(i, j) - std::conj(a(j, i))) > tol) {
                return false;
            }
        }
    }
    return true;
}

template class ComplexMat<2>;
template class ComplexMat<4>;
template double max_abs_diff(const ComplexMat<2> &, const ComplexMat<2> &);
template double max_abs_diff(const ComplexMat<4> &, const ComplexMat<4> &);
template bool is_hermitian(const ComplexMat<2> &, double);
template bool is_hermitian(const ComplexMat<4> &, double);

ComplexMat2 mat2(Complex a00, Complex a01, Complex a10, Complex a11) {
    return ComplexMat2({a00, a01, a10, a11});
}

ComplexMat2 outer(const Vec2 &a, const Vec2 &b) {
    ComplexMat2 out;
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            out(i, j) = a[i] * std::conj(b[j]);
        }
    }
    return out;
}

Vec2 operator*(const ComplexMat2 &a, const Vec2 &v) {
    return {a(0, 0) * v[0] + a(0, 1) * v[1], a(1, 0) * v[0] + a(1, 1) * v[1]};
}

bool is_unitary(const ComplexMat2 &a, double tol) {
    return max_abs_diff(a.adjoint() * a, ComplexMat2::identity()) <= tol;
}

namespace {

void require_hermitian(const ComplexMat2 &a, double tol) {
    if (!is_hermitian(a, tol)) {
        throw NonHermitianInput("matrix is not Hermitian within " + std::to_string(tol));
    }
}

// Half the eigenvalue gap of [[a, b], [b*, d]].
double half_gap(double a, double d, Complex b) {
    return std::hypot(0.5 * (a - d), std::abs(b));
}

}  // namespace

std::array<double, 2> herm_eigenvalues(const ComplexMat2 &a, double herm_tol) {
    require_hermitian(a, herm_tol);
    const double a00 = a(0, 0).real();
    const double a11 = a(1, 1).real();
    const Complex b = 0.5 * (a(0, 1) + std::conj(a(1, 0)));
    const double mid = 0.5 * (a00 + a11);
    const double r = half_gap(a00, a11, b);
    return {mid + r, mid - r};
}

EigenPair2 herm_eigen(const ComplexMat2 &a, const std::array<Vec2, 2> &preferred,
                      double degeneracy_tol, double herm_tol) {
    require_hermitian(a, herm_tol);
    const double a00 = a(0, 0).real();
    const double a11 = a(1, 1).real();
    const Complex b = 0.5 * (a(0, 1) + std::conj(a(1, 0)));
    const double mid = 0.5 * (a00 + a11);
    const double r = half_gap(a00, a11, b);

    EigenPair2 out;
    out.values = {mid + r, mid - r};
    if (2 * r <= degeneracy_tol) {
        out.vectors = preferred;
        return out;
    }

    // (A - l1) v = 0 has the two candidate solutions (b, l1 - a00) and
    // (l1 - a11, b*); take whichever is better conditioned.
    const double l1 = out.values[0];
    Vec2 u{b, Complex(l1 - a00)};
    Vec2 w{Complex(l1 - a11), std::conj(b)};
    Vec2 v = norm(u) >= norm(w) ? u : w;
    const double n = norm(v);
    v = {v[0] / n, v[1] / n};
    out.vectors[0] = v;
    out.vectors[1] = {-std::conj(v[1]), std::conj(v[0])};
    return out;
}

EigenPair2 herm_eigen(const ComplexMat2 &a) {
    return herm_eigen(a, {Vec2{1.0, 0.0}, Vec2{0.0, 1.0}});
}

double trace_norm(const ComplexMat2 &a, double herm_tol) {
    const auto ev = herm_eigenvalues(a, herm_tol);
    return std::abs(ev[0]) + std::abs(ev[1]);
}

ComplexMat4 kron(const ComplexMat2 &a, const ComplexMat2 &b) {
    ComplexMat4 out;
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            for (std::size_t k = 0; k < 2; ++k) {
                for (std::size_t l = 0; l < 2; ++l) {
                    out(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
                }
            }
        }
    }
    return out;
}

ComplexMat2 partial_trace_detector(const ComplexMat4 &rho) {
    ComplexMat2 out;
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            out(i, j) = rho(2 * i, 2 * j) + rho(2 * i + 1, 2 * j + 1);
        }
    }
    return out;
}

}  // namespace dlab
