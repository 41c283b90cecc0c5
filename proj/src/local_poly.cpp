#include "charn/local_poly.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <sstream>

#include "charn/error.hpp"
#include "charn/multi_index.hpp"
#include "charn/special.hpp"

namespace charn {

namespace {

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

std::string describe_point(std::span<const double> x0) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < x0.size(); ++i) os << (i ? ", " : "") << x0[i];
    os << ")";
    return os.str();
}

}  // namespace

double local_poly_fit_excluding(const Columns& x, std::span<const double> y,
                                std::span<const double> x0, int p,
                                const Bandwidth& h, const Kernel& k,
                                long exclude) {
    const std::size_t d = x.size();
    const std::size_t n = n_rows(x);
    if (d == 0 || n == 0) throw DomainError("local_poly_fit: empty design");
    if (x0.size() != d || h.per_coordinate.size() != d) {
        throw DomainError("local_poly_fit: dimension mismatch");
    }

    const std::vector<MultiIndex> basis = multi_index_set(static_cast<int>(d), p);
    const int m = static_cast<int>(basis.size());
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(m, m);
    Eigen::VectorXd b = Eigen::VectorXd::Zero(m);
    std::vector<double> psi(static_cast<std::size_t>(m));
    std::vector<double> t(d);

    for (std::size_t row = 0; row < n; ++row) {
        if (static_cast<long>(row) == exclude) continue;
        double w = 1.0;
        for (std::size_t c = 0; c < d; ++c) {
            const double hc = h.per_coordinate[c];
            t[c] = (x[c][row] - x0[c]) / hc;
            w *= k(t[c]) / hc;
        }
        if (w <= 0.0) continue;
        for (int j = 0; j < m; ++j) {
            double v = 1.0;
            for (std::size_t c = 0; c < d; ++c) {
                const int e = basis[j].entries[c];
                for (int q = 0; q < e; ++q) v *= t[c];
                if (e > 1) v /= factorial(e);
            }
            psi[j] = v;
        }
        for (int j = 0; j < m; ++j) {
            b(j) += w * psi[j] * y[row];
            for (int l = j; l < m; ++l) A(j, l) += w * psi[j] * psi[l];
        }
    }
    for (int j = 0; j < m; ++j)
        for (int l = 0; l < j; ++l) A(j, l) = A(l, j);

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(A);
    const double lmax = es.eigenvalues().maxCoeff();
    const double lmin = es.eigenvalues().minCoeff();
    if (!(lmax > 0.0) || lmin < 1e-10 * lmax) {
        throw SingularDesign("local polynomial design singular at x0 = " +
                             describe_point(x0));
    }
    const Eigen::VectorXd beta =
        es.eigenvectors() *
        (es.eigenvectors().transpose() * b).cwiseQuotient(es.eigenvalues());
    return beta(0);
}

double local_poly_fit(const Columns& x, std::span<const double> y,
                      std::span<const double> x0, int p, const Bandwidth& h,
                      const Kernel& k) {
    return local_poly_fit_excluding(x, y, x0, p, h, k, -1);
}

SmootherFit::SmootherFit(Columns x, std::vector<double> y, int p,
                         Bandwidth h_mean, Bandwidth h_second_moment,
                         const Kernel& k, double floor)
    : x_(std::move(x)),
      y_(std::move(y)),
      p_(p),
      h_mean_(std::move(h_mean)),
      h_s_(std::move(h_second_moment)),
      k_(k),
      floor_(floor) {
    if (floor_ <= 0.0) throw DomainError("SmootherFit: floor must be positive");
    const long need = 2 * multi_index_count(static_cast<int>(x_.size()), p_);
    if (static_cast<long>(y_.size()) <= need) {
        throw DomainError("SmootherFit: sample too small for the basis");
    }
    y_squared_.resize(y_.size());
    for (std::size_t i = 0; i < y_.size(); ++i) y_squared_[i] = y_[i] * y_[i];
}

SmootherFit::Eval SmootherFit::at(std::span<const double> x0) const {
    const double m = local_poly_fit(x_, y_, x0, p_, h_mean_, k_);
    const double s = local_poly_fit(x_, y_squared_, x0, p_, h_s_, k_);
    double var = s - m * m;
    bool clamped = false;
    if (var < floor_) {
        var = floor_;
        clamped = true;
        floor_hits_.fetch_add(1, std::memory_order_relaxed);
    }
    return Eval{m, var, clamped};
}

double SmootherFit::mean_at(std::span<const double> x0) const {
    return local_poly_fit(x_, y_, x0, p_, h_mean_, k_);
}

std::vector<SmootherFit::Eval> SmootherFit::at_many(const Columns& points,
                                                    Exec exec) const {
    const std::size_t n = n_rows(points);
    const std::size_t d = points.size();
    std::vector<Eval> out(n);
    std::vector<std::exception_ptr> errors(n);
    parallel_for(n, exec, [&](std::size_t i) {
        std::vector<double> pt(d);
        for (std::size_t c = 0; c < d; ++c) pt[c] = points[c][i];
        try {
            out[i] = at(pt);
        } catch (...) {
            errors[i] = std::current_exception();
        }
    });
    for (std::size_t i = 0; i < n; ++i) {
        if (errors[i]) std::rethrow_exception(errors[i]);
    }
    return out;
}

double default_variance_floor(std::span<const double> y) {
    const double v = sample_variance(y);
    return v > 0.0 ? 1e-6 * v : 1e-12;
}

}  // namespace charn
