#pragma once

#include "qbcap/matrix.hpp"

namespace qbcap {

// Two-qubit X-structured state
//   rho = 1/4 (I.I + a3 Z.I + b3 I.Z + c1 X.X + c2 Y.Y + c3 Z.Z)
struct BlochTwoQubit {
    double a3 = 0.0;
    double b3 = 0.0;
    double c1 = 0.0;
    double c2 = 0.0;
    double c3 = 0.0;

    linalg::ComplexMatrix to_matrix() const {
        // Basis |00>, |01>, |10>, |11>; only the X pattern is populated.
        linalg::ComplexMatrix m(4);
        m(0, 0) = 0.25 * (1.0 + a3 + b3 + c3);
        m(1, 1) = 0.25 * (1.0 + a3 - b3 - c3);
        m(2, 2) = 0.25 * (1.0 - a3 + b3 - c3);
        m(3, 3) = 0.25 * (1.0 - a3 - b3 + c3);
        m(0, 3) = m(3, 0) = 0.25 * (c1 - c2);
        m(1, 2) = m(2, 1) = 0.25 * (c1 + c2);
        return m;
    }

    // Projects any 4x4 operator onto the five coefficients via tr(rho P).
    // Components outside the X pattern are discarded.
    static BlochTwoQubit from_matrix(const linalg::ComplexMatrix& rho) {
        using namespace linalg;
        auto expect = [&](const ComplexMatrix& p) { return (rho * p).trace().real(); };
        const auto i2 = pauli::identity();
        return BlochTwoQubit{
            .a3 = expect(tensor(pauli::z(), i2)),
            .b3 = expect(tensor(i2, pauli::z())),
            .c1 = expect(tensor(pauli::x(), pauli::x())),
            .c2 = expect(tensor(pauli::y(), pauli::y())),
            .c3 = expect(tensor(pauli::z(), pauli::z())),
        };
    }

    friend bool operator==(const BlochTwoQubit&, const BlochTwoQubit&) = default;
};

} // namespace qbcap
