#pragma once

#include <array>
#include <complex>
#include <functional>
#include <string>
#include <vector>

namespace mgfront {

using Fn = std::function<double(double)>;

// ---------------------------------------------------------------------------
// scalar root finding / optimisation
// ---------------------------------------------------------------------------

/// Bisection on a sign-changing bracket. xtol is relative to max(1,|x|).
double bisect(const Fn& f, double a, double b, double xtol = 1e-13);

/// All real roots of f on [a,b]. f' may have at most a few zeros; the interval
/// is split into monotone pieces at the critical points found by a dense scan
/// of df, then each piece is bisected. Robust for characteristic functions
/// (at most four real zeros, chi'''' of one sign).
std::vector<double> roots_on_interval(const Fn& f, const Fn& df, double a, double b,
                                      int scan_points = 4096, double xtol = 1e-13);

/// Golden-section minimisation on [a,b]; returns argmin.
double golden_min(const Fn& f, double a, double b, double xtol = 1e-12);

struct Newton2dResult {
    double x = 0, y = 0;
    double residual = 0;
    bool converged = false;
    int iterations = 0;
};

/// Damped Newton for F(x,y)=0 with analytic Jacobian [Fx Fy; Gx Gy].
/// Step halving (max 60) when the residual norm does not decrease.
Newton2dResult newton2d(const std::function<std::array<double, 2>(double, double)>& F,
                        const std::function<std::array<double, 4>(double, double)>& J,
                        double x0, double y0, double ftol = 1e-14, int max_iter = 120);

// ---------------------------------------------------------------------------
// quadrature
// ---------------------------------------------------------------------------

/// Adaptive quadrature of f over [a,b] to the given absolute tolerance.
double integrate(const Fn& f, double a, double b, double abs_tol = 1e-11);

/// Same, with interior break points (kinks) the integrand is split at.
double integrate_split(const Fn& f, double a, double b, const std::vector<double>& breaks,
                       double abs_tol = 1e-11);

/// Spherical Bessel j_n(x), n <= 24, x >= 0.
double sph_bessel_j(int n, double x);

/// Filon-type quadrature for F(t) = \int_0^umax f(u) e^{iut} du with smooth,
/// non-oscillatory complex f. Panels carry Legendre expansions of f built
/// once; evaluation for any t uses exact oscillatory moments
/// \int P_n(x) e^{i w x} dx = 2 i^n j_n(w), so the cost per t is O(panels).
class OscillatoryTransform {
  public:
    static constexpr int kDeg = 12;  // Legendre degree per panel

    OscillatoryTransform(const std::function<std::complex<double>(double)>& f, double umax,
                         double abs_tol);

    /// \int_0^umax f(u) e^{iut} du  (t of either sign)
    std::complex<double> operator()(double t) const;

    std::size_t panel_count() const { return panels_.size(); }
    double abs_error_bound() const { return err_bound_; }

  private:
    struct Panel {
        double mid, half;
        std::array<std::complex<double>, kDeg + 1> coeff;
    };
    void build(const std::function<std::complex<double>(double)>& f, double a, double b,
               double tol_density, int depth);
    static Panel make_panel(const std::function<std::complex<double>(double)>& f, double a,
                            double b);
    std::vector<Panel> panels_;
    double err_bound_ = 0;
};

// ---------------------------------------------------------------------------
// misc
// ---------------------------------------------------------------------------

/// 17-significant-digit decimal formatting used by every CSV/report writer.
std::string fmt17(double x);

/// FNV-1a 64-bit hash of a string (config fingerprints in reports).
std::uint64_t fnv1a64(const std::string& s);

}  // namespace mgfront
