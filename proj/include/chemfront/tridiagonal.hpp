#ifndef CHEMFRONT_TRIDIAGONAL_HPP
#define CHEMFRONT_TRIDIAGONAL_HPP

/// Thomas solve with the elimination factored once and reused every step.

#include <stdexcept>
#include <vector>

namespace chemfront {

class TridiagonalSolver {
public:
    TridiagonalSolver() = default;

    /// Rows are (lower[i], diag[i], upper[i]); lower[0] and upper[n-1] unused.
    TridiagonalSolver(std::vector<double> lower, std::vector<double> diag,
                      std::vector<double> upper)
        : lower_(std::move(lower)), diag_(std::move(diag)), upper_(std::move(upper)) {
        const std::size_t n = diag_.size();
        if (lower_.size() != n || upper_.size() != n)
            throw std::invalid_argument("TridiagonalSolver: band size mismatch");
        pivot_.resize(n);
        mult_.resize(n);
        pivot_[0] = diag_[0];
        for (std::size_t i = 1; i < n; ++i) {
            if (pivot_[i - 1] == 0.0)
                throw std::runtime_error("TridiagonalSolver: zero pivot");
            mult_[i] = lower_[i] / pivot_[i - 1];
            pivot_[i] = diag_[i] - mult_[i] * upper_[i - 1];
        }
        scratch_.resize(n);
    }

    std::size_t size() const { return diag_.size(); }

    /// Solves in place: rhs becomes the solution.
    void solve(std::vector<double>& rhs) {
        const std::size_t n = diag_.size();
        if (rhs.size() != n)
            throw std::invalid_argument("TridiagonalSolver: rhs size mismatch");
        scratch_[0] = rhs[0];
        for (std::size_t i = 1; i < n; ++i)
            scratch_[i] = rhs[i] - mult_[i] * scratch_[i - 1];
        rhs[n - 1] = scratch_[n - 1] / pivot_[n - 1];
        for (std::size_t i = n - 1; i-- > 0;)
            rhs[i] = (scratch_[i] - upper_[i] * rhs[i + 1]) / pivot_[i];
    }

private:
    std::vector<double> lower_, diag_, upper_;
    std::vector<double> pivot_, mult_;
    std::vector<double> scratch_;
};

}  // namespace chemfront

#endif  // CHEMFRONT_TRIDIAGONAL_HPP
