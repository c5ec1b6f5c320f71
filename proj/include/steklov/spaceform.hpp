// SPDX-License-Identifier: Apache-2.0
#pragma once

// Comparison geometry of the simply connected space form M_K of constant
// curvature K: the warping function s_K, the boundary density
// Theta(r) = (s_K'(r) - H s_K(r))^(n-1), and geodesic balls.

namespace steklov::spaceform {

struct SkValue {
    double s;
    double s_prime;
};

/// s_K(r) and s_K'(r): sin(sqrt(K) r)/sqrt(K), r, or sinh(sqrt(-K) r)/sqrt(-K).
SkValue sk_eval(double K, double r);

/// Curvature data (n, K, H): Ricci >= (n-1)K, boundary mean curvature >= H.
class ThetaProfile {
public:
    /// Throws ValidationError if n < 2 or K, H are not finite.
    ThetaProfile(int n, double K, double H);

    int n() const { return n_; }
    double K() const { return K_; }
    double H() const { return H_; }

private:
    int n_;
    double K_;
    double H_;
};

/// Theta(r). Negative past the first zero when n is even.
double theta_eval(const ThetaProfile& p, double r);

/// First positive zero of s_K' - H s_K, or +infinity.
double theta_first_zero(const ThetaProfile& p);

/// Integral of Theta over [0, R]. Throws PreconditionError if R exceeds
/// theta_first_zero(p) (beyond a relative slack of 1e-10).
double theta_integral(const ThetaProfile& p, double R);

/// Largest value of Theta on [0, L], L <= first zero.
double theta_max(const ThetaProfile& p, double L);

/// Area of the unit d-sphere in R^(d+1): 2 pi^((d+1)/2) / Gamma((d+1)/2).
double unit_sphere_area(int d);

struct SpaceFormBall {
    int n;
    double K;
    double radius;
    double volume;
    double boundary_area;
    double mean_curvature;

    double isoperimetric_ratio() const { return boundary_area / volume; }
};

/// Geodesic ball of radius R in the n-dimensional space form M_K.
/// Throws DomainError when K > 0 and R >= pi/sqrt(K), or R <= 0.
SpaceFormBall ball_geometry(int n, double K, double R);

/// Profile whose Theta vanishes exactly at the ball's radius.
ThetaProfile ball_profile(int n, double K, double R);

}  // namespace steklov::spaceform
