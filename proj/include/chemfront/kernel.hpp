#ifndef CHEMFRONT_KERNEL_HPP
#define CHEMFRONT_KERNEL_HPP

/**
 * @file kernel.hpp
 * @brief The screened-Poisson solve on the line,
 *
 *            0 = v_xx - lambda*v + mu*u,
 *
 * through its exponential kernel
 *
 *            v(x) = Psi(x;u) = mu/(2*sqrt(lambda)) * Int e^{-sqrt(lambda)|x-y|} u(y) dy,
 *            v'(x)           = (mu/2) * (I+ - I-),
 *
 * where I-+ are the one-sided exponentially weighted integrals. The input is
 * interpreted as its piecewise-linear interpolant, each cell integrated in
 * closed form, so psi_fast is two O(N) recursive sweeps and psi_direct is the
 * O(N^2) reference summation of the same cell integrals. Domain truncation is
 * handled by closed-form tail integrals per TailPolicy.
 */

#include <cmath>
#include <stdexcept>

#include "chemfront/grid.hpp"
#include "chemfront/theory.hpp"

namespace chemfront {

struct PsiPair {
    ScalarField psi;    ///< v = Psi(.;u)
    ScalarField psi_x;  ///< v_x
};

namespace detail {

/// Exact integral of the linear interpolant against e^{-s*tau} over one cell:
///   Int_0^h e^{-s*tau} * (near + (far - near)*tau/h) dtau = beta*near + alpha*far.
struct CellWeights {
    double decay;  ///< e^{-s h}
    double alpha;  ///< weight of the far node
    double beta;   ///< weight of the near node
    CellWeights(double s, double h) {
        decay = std::exp(-s * h);
        const double em = -std::expm1(-s * h);  // 1 - e^{-sh}, cancellation-safe
        alpha = (em - s * h * decay) / (s * s * h);
        beta = em / s - alpha;
    }
};

inline bool tail_left_constant(TailPolicy t) {
    return t == TailPolicy::ConstantLeftZeroRight || t == TailPolicy::ConstantBoth;
}
inline bool tail_right_constant(TailPolicy t) { return t == TailPolicy::ConstantBoth; }

}  // namespace detail

/// O(N) evaluation of (Psi, Psi_x) by two recursive sweeps.
inline PsiPair psi_fast(const ScalarField& u, const ModelParams& p, TailPolicy tail) {
    p.validate();
    const Grid& g = u.grid;
    const int n = g.n_cells;
    const double s = std::sqrt(p.lambda);
    const detail::CellWeights w(s, g.spacing);

    std::vector<double> ileft(n + 1), iright(n + 1);
    ileft[0] = detail::tail_left_constant(tail) ? u[0] / s : 0.0;
    for (int i = 1; i <= n; ++i)
        ileft[i] = w.decay * ileft[i - 1] + w.alpha * u[i - 1] + w.beta * u[i];
    iright[n] = detail::tail_right_constant(tail) ? u[n] / s : 0.0;
    for (int i = n - 1; i >= 0; --i)
        iright[i] = w.decay * iright[i + 1] + w.alpha * u[i + 1] + w.beta * u[i];

    PsiPair out{ScalarField(g), ScalarField(g)};
    const double half_mu = 0.5 * p.mu;
    for (int i = 0; i <= n; ++i) {
        out.psi[i] = half_mu / s * (ileft[i] + iright[i]);
        out.psi_x[i] = half_mu * (iright[i] - ileft[i]);
    }
    return out;
}

/// O(N^2) reference evaluation of Psi: per node, every cell integral is
/// evaluated from its antiderivative with explicit endpoint exponentials.
/// Same quadrature as psi_fast, independent summation path.
inline ScalarField psi_direct(const ScalarField& u, const ModelParams& p, TailPolicy tail) {
    p.validate();
    const Grid& g = u.grid;
    const int n = g.n_cells;
    const double s = std::sqrt(p.lambda);
    const double h = g.spacing;

    ScalarField psi(g);
    for (int i = 0; i <= n; ++i) {
        const double x = g.x(i);
        double acc = 0.0;
        // cells on or left of x
        for (int j = 0; j < i; ++j) {
            const double xl = g.x(j), xr = g.x(j + 1);
            const double m = (u[j + 1] - u[j]) / h;
            acc += std::exp(-s * (x - xr)) * (u[j + 1] / s - m / (s * s)) -
                   std::exp(-s * (x - xl)) * (u[j] / s - m / (s * s));
        }
        // cells on or right of x
        for (int j = i; j < n; ++j) {
            const double xl = g.x(j), xr = g.x(j + 1);
            const double m = (u[j + 1] - u[j]) / h;
            acc += std::exp(-s * (xl - x)) * (u[j] / s + m / (s * s)) -
                   std::exp(-s * (xr - x)) * (u[j + 1] / s + m / (s * s));
        }
        if (detail::tail_left_constant(tail))
            acc += u[0] / s * std::exp(-s * (x + g.half_length));
        if (detail::tail_right_constant(tail))
            acc += u[n] / s * std::exp(-s * (g.half_length - x));
        psi[i] = 0.5 * p.mu / s * acc;
    }
    return psi;
}

/// Max-norm second-difference residual of 0 = psi'' - lambda*psi + mu*u over
/// the interior nodes; O(h^2) for smooth u.
inline double elliptic_residual(const ScalarField& u, const ScalarField& psi,
                                const ModelParams& p) {
    u.require_same_grid(psi, "elliptic_residual");
    const double h = u.grid.spacing;
    double worst = 0.0;
    for (int i = 1; i < u.grid.n_nodes() - 1; ++i) {
        const double d2 = (psi[i - 1] - 2.0 * psi[i] + psi[i + 1]) / (h * h);
        worst = std::max(worst, std::abs(d2 - p.lambda * psi[i] + p.mu * u[i]));
    }
    return worst;
}

/// Width of the strip near each end of the domain where truncation error
/// concentrates; inequality monitors skip it.
inline double boundary_buffer(const ModelParams& p) { return 10.0 / std::sqrt(p.lambda); }

/// Smallest node index at least `margin` inside the left boundary.
inline int first_interior_node(const Grid& g, double margin) {
    const int i = static_cast<int>(std::ceil(margin / g.spacing));
    return std::min(i, g.n_nodes() - 1);
}
/// Largest node index at least `margin` inside the right boundary.
inline int last_interior_node(const Grid& g, double margin) {
    const int i = g.n_cells - static_cast<int>(std::ceil(margin / g.spacing));
    return std::max(i, 0);
}

}  // namespace chemfront

#endif  // CHEMFRONT_KERNEL_HPP
