#ifndef POLYTUNNEL_UNITS_HPP
#define POLYTUNNEL_UNITS_HPP

// Unit system: energies in eV, lengths in nm, times in fs.
// Masses then carry eV fs^2 / nm^2 and hbar carries eV fs, so that
// hbar^2/(2m) comes out in eV nm^2 and every tunneling time in fs.

namespace polytunnel {

// Compile-time dimension bookkeeping over the (energy, length, time) basis.
// Only used in static_asserts; runtime quantities stay plain doubles.
struct Dim {
    int energy;
    int length;
    int time;

    friend constexpr Dim operator*(Dim a, Dim b) {
        return {a.energy + b.energy, a.length + b.length, a.time + b.time};
    }
    friend constexpr Dim operator/(Dim a, Dim b) {
        return {a.energy - b.energy, a.length - b.length, a.time - b.time};
    }
    friend constexpr bool operator==(Dim a, Dim b) = default;
};

namespace dim {
inline constexpr Dim energy{1, 0, 0};
inline constexpr Dim length{0, 1, 0};
inline constexpr Dim time{0, 0, 1};
inline constexpr Dim action = energy * time;                    // eV fs
inline constexpr Dim mass = energy * time * time / (length * length);  // eV fs^2/nm^2
}  // namespace dim

// The tunneling-time prefactor 2 m N mu0^2 / hbar must be a time.
static_assert(dim::mass * dim::length * dim::length / dim::action == dim::time);
// hbar^2 / (2 m) must be energy * length^2.
static_assert(dim::action * dim::action / dim::mass == dim::energy * dim::length * dim::length);

namespace constants {
// CODATA: hbar = 0.6582119569 eV fs (exact in the 2019 SI),
// m_e c^2 = 510998.95 eV, c = 299.792458 nm/fs.
inline constexpr double hbar_ev_fs = 0.6582119569;
inline constexpr double electron_mass_ev_fs2_nm2 =
    510998.95 / (299.792458 * 299.792458);
}  // namespace constants

/// Physical constants bundle consumed by every computation.
struct UnitSystem {
    double hbar = constants::hbar_ev_fs;                    // eV fs
    double mass_electron = constants::electron_mass_ev_fs2_nm2;  // eV fs^2/nm^2

    // hbar^2/(2 m_e), eV nm^2
    constexpr double hbar2_over_2m() const {
        return hbar * hbar / (2.0 * mass_electron);
    }
    constexpr bool valid() const { return hbar > 0.0 && mass_electron > 0.0; }
};

inline constexpr UnitSystem default_units{};

}  // namespace polytunnel

#endif
