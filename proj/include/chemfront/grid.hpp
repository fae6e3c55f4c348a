#ifndef CHEMFRONT_GRID_HPP
#define CHEMFRONT_GRID_HPP

/**
 * @file grid.hpp
 * @brief Uniform 1D grid on [-L, L], node-sampled scalar fields, and the
 *        tail policy describing how a field extends beyond the domain.
 */

#include <cmath>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

namespace chemfront {

struct Grid {
    double half_length = 0.0;  ///< domain is [-half_length, half_length]
    int n_cells = 0;           ///< number of cells; n_cells+1 nodes
    double spacing = 0.0;      ///< 2*half_length / n_cells

    static Grid make(double half_length, int n_cells) {
        if (!(half_length > 0.0))
            throw std::invalid_argument("Grid: half_length must be > 0");
        if (n_cells < 2)
            throw std::invalid_argument("Grid: need at least 2 cells");
        Grid g;
        g.half_length = half_length;
        g.n_cells = n_cells;
        g.spacing = 2.0 * half_length / n_cells;
        return g;
    }

    /// Nearest integer cell count for a requested spacing.
    static Grid with_spacing(double half_length, double spacing) {
        if (!(spacing > 0.0))
            throw std::invalid_argument("Grid: spacing must be > 0");
        const int n = static_cast<int>(std::lround(2.0 * half_length / spacing));
        return make(half_length, n);
    }

    int n_nodes() const { return n_cells + 1; }
    double x(int i) const { return -half_length + spacing * i; }

    friend bool operator==(const Grid& a, const Grid& b) {
        return a.half_length == b.half_length && a.n_cells == b.n_cells;
    }
};

/// Assumed extension of a field beyond [-L, L] when whole-line integrals
/// are evaluated. Zero suits compactly supported data; ConstantLeftZeroRight
/// suits front-like data (positive plateau on the left, empty on the right).
enum class TailPolicy { Zero, ConstantLeftZeroRight, ConstantBoth };

/// A function sampled at the grid nodes.
struct ScalarField {
    Grid grid;
    std::vector<double> values;

    ScalarField() = default;
    explicit ScalarField(const Grid& g) : grid(g), values(g.n_nodes(), 0.0) {}

    template <class F>
    static ScalarField sampled(const Grid& g, F&& f) {
        ScalarField s(g);
        for (int i = 0; i < g.n_nodes(); ++i) s.values[i] = f(g.x(i));
        return s;
    }

    int size() const { return static_cast<int>(values.size()); }
    double& operator[](int i) { return values[i]; }
    double operator[](int i) const { return values[i]; }

    double min_value() const {
        double m = values[0];
        for (double v : values) m = std::min(m, v);
        return m;
    }
    double max_value() const {
        double m = values[0];
        for (double v : values) m = std::max(m, v);
        return m;
    }

    void require_same_grid(const ScalarField& other, const char* what) const {
        if (!(grid == other.grid))
            throw std::invalid_argument(std::string(what) + ": grid mismatch");
    }
};

/// sup |a - b| on the common grid.
inline double sup_diff(const ScalarField& a, const ScalarField& b) {
    a.require_same_grid(b, "sup_diff");
    double m = 0.0;
    for (int i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

}  // namespace chemfront

#endif  // CHEMFRONT_GRID_HPP
