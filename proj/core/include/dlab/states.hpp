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

#ifndef DLAB_STATES_HPP
#define DLAB_STATES_HPP

#include "dlab/qmat.hpp"

namespace dlab {

/// Path amplitudes of the initial pure quanton: sqrt(p1)|psi1> + sqrt(1-p1)|psi2>.
struct QuantonSpec {
    double p1 = 0.5;

    double p2() const { return 1.0 - p1; }
    bool symmetric() const { return p1 == 0.5; }
};

/// Bloch angles of the pure pre-noise detector state
/// cos(theta/2)|psi1> + e^{i phi} sin(theta/2)|psi2>, theta in [0, pi], phi in [0, 2 pi].
struct DetectorSpec {
    double theta = 0.0;
    double phi = 0.0;
};

/// A unit-norm ket in the path basis. The global phase is kept as given.
class Ket2 {
   public:
    /// Throws NormError if |amps| differs from 1 by more than `tol`.
    explicit Ket2(const Vec2 &amps, double tol = kIdentityTol);

    const Vec2 &amps() const { return amps_; }
    const Complex &operator[](std::size_t i) const { return amps_[i]; }

   private:
    Vec2 amps_;
};

void validate(const QuantonSpec &q);
void validate(const DetectorSpec &d);

Ket2 quanton_ket(const QuantonSpec &q);
Ket2 detector_ket(const DetectorSpec &d);

/// -e^{-i phi} sin(theta/2)|psi1> + cos(theta/2)|psi2>, orthogonal to detector_ket(d).
Ket2 detector_perp_ket(const DetectorSpec &d);

/// |k><k|; throws NormError if the amplitudes drift from unit norm by more than 1e-10.
ComplexMat2 density(const Ket2 &k);
ComplexMat2 density(const Vec2 &amps);

}  // namespace dlab

#endif
