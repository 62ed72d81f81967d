#pragma once

/// Free-space Green function g(x) of simple random walk on Z^d, d >= 3.
///
/// Evaluation integrates the Fourier representation exactly in the angular
/// variables, leaving g(x) = int_0^inf prod_j e^{-t/d} I_{x_j}(t/d) dt, which is
/// computed by panel Gauss-Legendre quadrature plus an asymptotic tail sum.
/// Values are tabulated on {|x|_inf <= radius} (48-fold cubic symmetry reduces
/// the work); beyond the table the far-field c0 |x|^{2-d} is returned flagged.

#include <memory>
#include <string>
#include <vector>

#include "gffdisc/lattice.hpp"

namespace gffdisc::potential {

using lattice::Point;

/// c0 = (d/2) Gamma(d/2 - 1) pi^{-d/2} of the asymptotic g(x) ~ c0 |x|^{2-d}.
double far_field_constant(int d);

/// Single displacement evaluation to near machine precision. d >= 3.
double lattice_green_value(const Point& x, int d);

class GreenTable {
  public:
    GreenTable(int d, int radius, double tol = 1e-12);

    int dim() const { return d_; }
    int radius() const { return radius_; }
    double tol() const { return tol_; }
    double c0() const { return c0_; }

    /// g(x,0). Sets *extrapolated when |x|_inf exceeds the table radius and the
    /// far-field asymptotic was used instead.
    double at(const Point& x, bool* extrapolated = nullptr) const;
    double at(const Point& x, const Point& y, bool* extrapolated = nullptr) const {
        return at(x - y, extrapolated);
    }
    double origin() const { return at(Point::zero(d_)); }

    /// Plain-text cache, one displacement and value per line (documented in the
    /// README). Keyed by (d, radius, tol); load returns nullptr on key mismatch.
    void save(const std::string& path) const;
    static std::shared_ptr<GreenTable> load(const std::string& path, int d, int radius,
                                            double tol = 1e-12);
    /// Loads the cache if present, else builds and writes it. Empty path skips IO.
    static std::shared_ptr<GreenTable> cached(int d, int radius, const std::string& path = "",
                                              double tol = 1e-12);

  private:
    int d_, radius_;
    double tol_, c0_;
    lattice::Window cube_;           // displacement cube [-radius, radius]^d
    std::vector<double> vals_;
    void build();
    GreenTable(int d, int radius, double tol, bool defer);
};

using GreenPtr = std::shared_ptr<GreenTable>;

}  // namespace gffdisc::potential
