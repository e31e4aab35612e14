#pragma once

#include "levyspde/rng.hpp"

#include <functional>
#include <vector>

namespace levyspde {

/// Jump measure nu of the driving noise.  Two variants:
///  - discrete: finite list of atoms (z_k, w_k), total mass = sum of weights;
///  - truncated density: rho(z) on {eps <= |z| <= M}, mass by quadrature.
/// The simulator needs nu(R_0) < infinity, so infinite-activity measures are
/// only representable through the truncated-density variant with an explicit
/// small-jump cutoff.
class LevyMeasure {
public:
    struct Atom {
        double z;  // jump size, != 0
        double w;  // weight, > 0
    };

    static LevyMeasure from_atoms(std::vector<Atom> atoms);

    /// rho is the density on [eps, M] union [-M, -eps]; pass the full signed
    /// density (evaluated at negative z too).
    static LevyMeasure from_density(std::function<double(double)> rho,
                                    double eps, double big_m);

    /// m_p = int |z|^p nu(dz).  Throws Overflow if non-finite.
    double moment(double p) const;

    double total_mass() const { return total_mass_; }
    double mean() const { return mean_; }
    bool is_discrete() const { return density_ == nullptr; }
    const std::vector<Atom>& atoms() const { return atoms_; }

    // density-variant accessors (zero / trivial for the discrete case)
    double density_at(double z) const { return density_ ? density_(z) : 0.0; }
    double support_min() const { return eps_; }
    double support_max() const { return big_m_; }

    /// Draw from the normalized law nu / nu(R_0).
    double sample_jump(RandomStream& rng) const;

private:
    LevyMeasure() = default;

    std::vector<Atom> atoms_;
    std::vector<double> cum_;  // cumulative weights for inversion sampling

    std::function<double(double)> density_;
    double eps_ = 0.0, big_m_ = 0.0;
    // inverse-CDF table for the density variant
    std::vector<double> inv_cdf_z_;

    double total_mass_ = 0.0;
    double mean_ = 0.0;
};

/// Two-point symmetric measure (1/2) delta_{-z} + (1/2) delta_{z}; the
/// default noise for moment tests (all m_p = z^p, centered).
LevyMeasure symmetric_two_point(double z = 1.0);

} // namespace levyspde
