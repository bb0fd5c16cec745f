#pragma once

#include <optional>
#include <string>
#include <vector>

namespace ghostsim {

/// Bench geometry: reference arm runs source -> D_r over z, test arm runs
/// source -> object over z1 and object -> D_t over z2. All lengths in meters.
struct OpticalLayout {
    double wavelength_m = 0.0;
    double z_m = 0.0;
    double z1_m = 0.0;
    double z2_m = 0.0;
    bool z2_derived = false; // z2 was taken as z - z1 rather than given independently

    double wavenumber() const;

    static OpticalLayout with_derived_z2(double wavelength_m, double z_m, double z1_m);
    static OpticalLayout with_explicit_z2(double wavelength_m, double z_m, double z1_m,
                                          double z2_m);

    bool operator==(const OpticalLayout&) const = default;
};

/// Gaussian-envelope, delta-correlated incoherent source. The diagonal of its
/// pair correlation is g0 * exp(-x^2 / (2 a^2)).
struct SourceModel {
    double g0 = 1.0;
    double a_m = 0.0;

    bool operator==(const SourceModel&) const = default;
};

/// Multi-slit amplitude mask, symmetric about x' = 0 with uniform
/// center-to-center pitch.
struct TransmissionMask {
    int slit_count = 1;
    double slit_width_m = 0.0;
    double slit_pitch_m = 0.0;
    double amplitude = 1.0;

    /// Center of slit k, k in [0, slit_count). Centers come in exact +/- pairs.
    double slit_center(int k) const;
    /// Half extent of the open support: (n-1)*d/2 + w/2.
    double support_half_extent() const;
    /// amplitude if x' lies within w/2 of some slit center (edges open), else 0.
    double transmission(double x_m) const;

    bool operator==(const TransmissionMask&) const = default;
};

/// Uniform symmetric 1D grid. Even point counts span [-H, H) half-open, odd
/// counts span [-H, H] inclusive; zero is a grid point and mirror points are
/// exact negations either way.
struct Grid1D {
    double half_extent_m = 0.0;
    int count = 0;

    double step() const;
    double position(int i) const;
    std::vector<double> positions() const;

    bool operator==(const Grid1D&) const = default;
};

struct Scene {
    OpticalLayout layout;
    SourceModel source;
    TransmissionMask mask;
    Grid1D source_grid;   // x, quadrature grid
    Grid1D object_grid;   // x', quadrature grid
    Grid1D detector_grid; // u2, output grid
    double test_detector_position_m = 0.0; // u1

    bool operator==(const Scene&) const = default;
};

/// Physical inputs of a scene; grids are derived from these by make_scene.
struct SceneParams {
    double wavelength_m = 532e-9;
    double z_m = 175e-3;
    double z1_m = 75e-3;
    std::optional<double> z2_m; // empty: use z - z1
    double a_m = 1e-3;
    double g0 = 1.0;
    int slit_count = 2;
    double slit_width_m = 0.075e-3;
    double slit_pitch_m = 0.15e-3;
    double amplitude = 1.0;
    double u1_m = 0.0;
    double detector_half_span_m = 1.5e-3;
    int detector_points = 601;

    bool operator==(const SceneParams&) const = default;
};

SceneParams paper_default_params();

/// Build a scene with quadrature grids sized automatically from the chirp
/// sampling criterion. resolution_scale > 1 refines every grid by that factor.
Scene make_scene(const SceneParams& params, double resolution_scale = 1.0);

Scene paper_default_scene();

/// One broken invariant; validate_scene returns these as data, not failures.
struct Violation {
    std::string invariant;
    std::string detail;
};

std::vector<Violation> validate_scene(const Scene& scene);

} // namespace ghostsim
