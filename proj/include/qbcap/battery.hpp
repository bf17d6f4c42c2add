#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "qbcap/errors.hpp"
#include "qbcap/jacobi.hpp"

namespace qbcap::battery {

using linalg::EigenSpectrum;

// Hamiltonian eigenenergies in ascending order.
class HamiltonianSpec {
public:
    explicit HamiltonianSpec(std::vector<double> energies) : energies_(std::move(energies)) {
        if (!std::is_sorted(energies_.begin(), energies_.end())) {
            throw OrderingError("Hamiltonian energies must be ascending");
        }
    }

    // H = Z.Z has spectrum {-1, -1, 1, 1}.
    static HamiltonianSpec zz() { return HamiltonianSpec({-1.0, -1.0, 1.0, 1.0}); }

    std::span<const double> energies() const noexcept { return energies_; }
    std::size_t size() const noexcept { return energies_.size(); }

private:
    std::vector<double> energies_;
};

// C = sum_i e_i (l_i - l_{d-1-i}) for ascending spectra l and energies e.
inline double capacity(std::span<const double> spectrum, std::span<const double> energies) {
    if (spectrum.size() != energies.size()) {
        throw DomainError("capacity: spectrum has " + std::to_string(spectrum.size()) +
                          " values but the Hamiltonian has " + std::to_string(energies.size()));
    }
    if (!std::is_sorted(spectrum.begin(), spectrum.end())) {
        throw OrderingError("capacity: spectrum must be ascending");
    }
    if (!std::is_sorted(energies.begin(), energies.end())) {
        throw OrderingError("capacity: energies must be ascending");
    }
    const std::size_t d = spectrum.size();
    double c = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
        c += energies[i] * (spectrum[i] - spectrum[d - 1 - i]);
    }
    return c;
}

inline double capacity(const EigenSpectrum& spectrum, const HamiltonianSpec& h) {
    return capacity(spectrum.values(), h.energies());
}

// Z.Z specialization: 2 (l3 + l2 - l1 - l0).
inline double capacity_zz(std::span<const double> spectrum) {
    if (spectrum.size() != 4) {
        throw DomainError("capacity_zz needs exactly four eigenvalues");
    }
    if (!std::is_sorted(spectrum.begin(), spectrum.end())) {
        throw OrderingError("capacity_zz: spectrum must be ascending");
    }
    return 2.0 * (spectrum[3] + spectrum[2] - spectrum[1] - spectrum[0]);
}

inline double capacity_zz(const EigenSpectrum& spectrum) { return capacity_zz(spectrum.values()); }

} // namespace qbcap::battery
