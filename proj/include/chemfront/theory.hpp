#ifndef CHEMFRONT_THEORY_HPP
#define CHEMFRONT_THEORY_HPP

/**
 * @file theory.hpp
 * @brief Model parameters and the closed-form constants of the
 *        chemotaxis-growth system
 *
 *          u_t = u_xx - chi*(u*v_x)_x + u*(a - b*u)
 *          0   = v_xx - lambda*v + mu*u
 *
 * on the line. Everything here is a pure function of the five coefficients;
 * nothing is cached, so the predicates can never go stale.
 */

#include <cmath>
#include <stdexcept>
#include <string>

namespace chemfront {

/// (x)+ = max{x, 0}, exact zero at x = 0.
inline double pos_part(double x) { return x > 0.0 ? x : 0.0; }

/// Coefficients of the system. chi may be zero (pure logistic diffusion);
/// the remaining four must be strictly positive.
struct ModelParams {
    double chi;     ///< chemotactic sensitivity
    double a;       ///< intrinsic growth rate
    double b;       ///< logistic damping
    double lambda;  ///< chemical degradation rate
    double mu;      ///< chemical production rate

    void validate() const {
        if (!(chi >= 0.0) || !std::isfinite(chi))
            throw std::invalid_argument("ModelParams: chi must be >= 0 and finite");
        if (!(a > 0.0) || !(b > 0.0) || !(lambda > 0.0) || !(mu > 0.0))
            throw std::invalid_argument("ModelParams: a, b, lambda, mu must be > 0");
    }

    double carrying_capacity() const { return a / b; }

    /// a/(b - chi*mu); the uniform ceiling sup_t ||u(t)||_inf relaxes to
    /// once chi*mu < b. Throws if that inequality fails.
    double linf_ceiling() const {
        if (!(chi * mu < b))
            throw std::invalid_argument(
                "linf_ceiling requires chi*mu < b (global existence)");
        return a / (b - chi * mu);
    }
};

/// True iff chi*mu < b (strict), the condition under which every
/// nonnegative bounded initial state has a global classical solution.
inline bool global_existence(const ModelParams& p) {
    p.validate();
    return p.chi * p.mu < p.b;
}

/// The standing smallness assumption on the chemotaxis strength:
///   (1 + (1/2) * (sqrt(a)-sqrt(lambda))+ / (sqrt(a)+sqrt(lambda))) * chi*mu <= b.
/// When lambda >= a the prefactor collapses to 1 and this is just chi*mu <= b.
inline bool hypothesis_H(const ModelParams& p) {
    p.validate();
    const double sa = std::sqrt(p.a);
    const double sl = std::sqrt(p.lambda);
    const double factor = 1.0 + 0.5 * pos_part(sa - sl) / (sa + sl);
    return factor * p.chi * p.mu <= p.b;
}

/// Decay-rate admissibility:
///   (kappa - sqrt(lambda))+ / (kappa + sqrt(lambda)) <= 2*(b - chi*mu) / (chi*mu).
/// For chi = 0 every kappa > 0 is admissible.
inline bool kappa_admissible(const ModelParams& p, double kappa) {
    p.validate();
    if (!(kappa > 0.0))
        throw std::invalid_argument("kappa_admissible: kappa must be > 0");
    const double cm = p.chi * p.mu;
    if (cm == 0.0) return true;
    const double sl = std::sqrt(p.lambda);
    return pos_part(kappa - sl) / (kappa + sl) <= 2.0 * (p.b - cm) / cm;
}

/// Largest admissible decay rate in (0, sqrt(a)].
///
/// The constraint's left side is nondecreasing in kappa, so either sqrt(a)
/// itself is admissible or the boundary solves
///   (kappa - sqrt(lambda)) / (kappa + sqrt(lambda)) = 2*(b - chi*mu)/(chi*mu)
/// in closed form. Undefined (refused) when chi*mu >= b.
inline double a_star(const ModelParams& p) {
    p.validate();
    if (!(p.chi * p.mu < p.b))
        throw std::invalid_argument("a_star requires chi*mu < b (global existence)");
    const double sa = std::sqrt(p.a);
    if (kappa_admissible(p, sa)) return sa;
    const double r = 2.0 * (p.b - p.chi * p.mu) / (p.chi * p.mu);  // here r < 1
    return std::sqrt(p.lambda) * (1.0 + r) / (1.0 - r);
}

/// c_kappa = (kappa^2 + a) / kappa. Minimized over kappa > 0 at
/// kappa = sqrt(a) with value 2*sqrt(a).
inline double c_kappa(const ModelParams& p, double kappa) {
    p.validate();
    if (!(kappa > 0.0))
        throw std::invalid_argument("c_kappa: kappa must be > 0");
    return (kappa * kappa + p.a) / kappa;
}

/// The wave/spreading speed constants.
struct SpeedConstants {
    double c0_star;      ///< 2*sqrt(a), the chemotaxis-free spreading speed
    double a_star;       ///< largest admissible decay rate in (0, sqrt(a)]
    double c_star;       ///< (a + a_star^2) / a_star; upper spreading bound
    double c_star_star;  ///< (a + min{a,lambda}) / min{sqrt(a),sqrt(lambda)}
};

inline SpeedConstants speed_constants(const ModelParams& p) {
    SpeedConstants c{};
    c.c0_star = 2.0 * std::sqrt(p.a);
    c.a_star = a_star(p);
    c.c_star = (p.a + c.a_star * c.a_star) / c.a_star;
    const double m = std::min(p.a, p.lambda);
    c.c_star_star = (p.a + m) / std::sqrt(m);
    return c;
}

/// Smaller root of kappa^2 - c*kappa + a = 0, i.e. the tail decay rate a
/// wave of speed c >= 2*sqrt(a) selects.
inline double kappa_of_speed(const ModelParams& p, double c) {
    p.validate();
    const double disc = c * c - 4.0 * p.a;
    if (disc < 0.0)
        throw std::invalid_argument("kappa_of_speed: needs c >= 2*sqrt(a)");
    return (c - std::sqrt(disc)) / 2.0;
}

}  // namespace chemfront

#endif  // CHEMFRONT_THEORY_HPP
