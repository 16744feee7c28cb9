#pragma once

#include <cmath>
#include <numbers>

namespace wavespin {

// Fundamental constants, SI units, CODATA 2018. Primary values are hard-coded
// (no runtime lookup) so that every derived number in this library is
// reproducible bit for bit; c, h and e are exact by definition since the 2019
// SI revision. ħ and the Compton wavelengths are carried at full double
// precision from those literals rather than at the tabulated truncation,
// which keeps the algebraic identities between them below 1e-15 relative.
struct PhysicalConstants {
    double c        = 299792458.0;        // speed of light [m/s], exact
    double h_planck = 6.62607015e-34;     // Planck constant [J s], exact
    double m_e      = 9.1093837015e-31;   // electron mass [kg]
    double e_charge = 1.602176634e-19;    // elementary charge [C], exact

    double hbar = h_planck / (2.0 * std::numbers::pi); // 1.054571817...e-34 [J s]

    // Bohr magneton e ħ/(2 m_e). Carried at full precision so that energies
    // expressed "in units of mu_B*B" convert exactly; agrees with the
    // tabulated 9.2740100783e-24 J/T to 7e-12 relative.
    double mu_B = e_charge * hbar / (2.0 * m_e);

    // Compton wavelengths. lambda_C = h/(m_e c) is the one that appears in the
    // closed form for the geometric factor eta; lambda_c_reduced = ħ/(m_e c).
    double lambda_C         = h_planck / (m_e * c);               // 2.42631023868e-12 [m]
    double lambda_c_reduced = lambda_C / (2.0 * std::numbers::pi); // 3.86159267961e-13 [m]

    double rest_energy() const { return m_e * c * c; } // [J]

    // Self-consistency of the loaded table. mu_B must equal e ħ/(2 m_e) to
    // 1e-9 relative and lambda_C must equal 2π·lambda_c_reduced to 1e-12.
    bool consistent() const {
        const double mu = e_charge * hbar / (2.0 * m_e);
        if (std::abs(mu_B / mu - 1.0) > 1e-9) return false;
        if (std::abs(lambda_C / (2.0 * std::numbers::pi * lambda_c_reduced) - 1.0) > 1e-12)
            return false;
        return true;
    }
};

inline const PhysicalConstants& codata2018() {
    static const PhysicalConstants k{};
    return k;
}

inline constexpr const char* kConstantsVintage = "CODATA 2018";

} // namespace wavespin
