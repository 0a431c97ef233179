#include "adaptkit/excitation.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "adaptkit/linalg.hpp"

namespace adaptkit {

namespace {

std::vector<Eigen::VectorXd> direction_candidates(const Eigen::MatrixXd& total_gram,
                                                  int n, const PeOptions& opts) {
    std::vector<Eigen::VectorXd> dirs;
    if (n == 1) {
        dirs.push_back(Eigen::VectorXd::Ones(1));
        return dirs;
    }
    for (int i = 0; i < n; ++i) dirs.push_back(Eigen::VectorXd::Unit(n, i));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(total_gram);
    for (int i = 0; i < n; ++i) dirs.push_back(es.eigenvectors().col(i));

    std::mt19937_64 rng(opts.direction_seed);
    auto u01 = [&rng]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    for (int k = 0; k < opts.direction_samples; ++k) {
        Eigen::VectorXd v(n);
        double norm2 = 0.0;
        do {
            for (int i = 0; i < n; ++i) v(i) = 2.0 * u01() - 1.0;
            norm2 = v.squaredNorm();
        } while (norm2 < 1e-12);
        dirs.push_back(v / std::sqrt(norm2));
    }
    return dirs;
}

}  // namespace

PeReport pe_level(const Eigen::MatrixXd& samples, double T, const PeOptions& opts) {
    const auto N = samples.rows();
    const int n = static_cast<int>(samples.cols());
    if (N < 2 || n < 1) throw std::invalid_argument("pe_level: empty record");
    if (T <= 0.0) throw std::invalid_argument("pe_level: window must be positive");

    const double dt = opts.discrete ? 1.0 : opts.dt;
    const auto wlen = static_cast<Eigen::Index>(std::llround(T / dt));
    if (wlen < 1) throw std::invalid_argument("pe_level: window shorter than one sample");
    const Eigen::Index last_needed = opts.discrete ? wlen : wlen + 1;
    if (2 * wlen > (opts.discrete ? N : N - 1) || last_needed > N) {
        throw std::invalid_argument("pe_level: record must span at least two windows");
    }

    // Prefix sums of the outer products and of the raw regressor.
    std::vector<Eigen::MatrixXd> gram_prefix(static_cast<std::size_t>(N) + 1,
                                             Eigen::MatrixXd::Zero(n, n));
    std::vector<Eigen::VectorXd> vec_prefix(static_cast<std::size_t>(N) + 1,
                                            Eigen::VectorXd::Zero(n));
    for (Eigen::Index i = 1; i <= N; ++i) {
        const Eigen::VectorXd phi = samples.row(i - 1).transpose();
        if (opts.discrete) {
            gram_prefix[i] = gram_prefix[i - 1] + phi * phi.transpose();
            vec_prefix[i] = vec_prefix[i - 1] + phi;
        } else if (i >= 2) {
            const Eigen::VectorXd prev = samples.row(i - 2).transpose();
            gram_prefix[i] = gram_prefix[i - 1] +
                             0.5 * dt * (phi * phi.transpose() + prev * prev.transpose());
            vec_prefix[i] = vec_prefix[i - 1] + 0.5 * dt * (phi + prev);
        }
    }
    // In continuous mode gram_prefix[i] integrates up to sample i-1.
    auto window_gram = [&](Eigen::Index start) -> Eigen::MatrixXd {
        if (opts.discrete) return gram_prefix[start + wlen] - gram_prefix[start];
        return gram_prefix[start + wlen + 1] - gram_prefix[start + 1];
    };
    auto window_vec = [&](Eigen::Index start, Eigen::Index len) -> Eigen::VectorXd {
        if (opts.discrete) return vec_prefix[start + len] - vec_prefix[start];
        return vec_prefix[start + len + 1] - vec_prefix[start + 1];
    };

    const auto stride = std::max<Eigen::Index>(
        1, static_cast<Eigen::Index>(std::llround(opts.stride_fraction * wlen)));
    const Eigen::Index max_start = (opts.discrete ? N : N - 1) - wlen;

    PeReport report;
    report.T = T;
    double alpha = 1e300;
    for (Eigen::Index s = 0;; s += stride) {
        if (s > max_start) s = max_start;
        alpha = std::min(alpha, min_eigenvalue_sym(window_gram(s)));
        if (s == max_start) break;
    }
    report.alpha = std::max(0.0, alpha);

    // Directional level over sub-windows of length delta0.
    const double delta0 = opts.delta0.value_or(T);
    auto dlen = static_cast<Eigen::Index>(std::llround(delta0 / dt));
    dlen = std::max<Eigen::Index>(1, std::min(dlen, wlen));
    const auto sub_stride = std::max<Eigen::Index>(
        1, static_cast<Eigen::Index>(std::llround(0.1 * dlen)));

    const Eigen::MatrixXd total = window_gram(0);
    const auto dirs = direction_candidates(total, n, opts);
    std::vector<double> dir_min(dirs.size(), 1e300);
    for (Eigen::Index s = 0;; s += stride) {
        if (s > max_start) s = max_start;
        std::vector<double> dir_max(dirs.size(), 0.0);
        for (Eigen::Index t2 = s;; t2 += sub_stride) {
            if (t2 > s + wlen - dlen) t2 = s + wlen - dlen;
            const Eigen::VectorXd v = window_vec(t2, dlen) / T;
            for (std::size_t di = 0; di < dirs.size(); ++di) {
                dir_max[di] = std::max(dir_max[di], std::abs(dirs[di].dot(v)));
            }
            if (t2 == s + wlen - dlen) break;
        }
        for (std::size_t di = 0; di < dirs.size(); ++di) {
            dir_min[di] = std::min(dir_min[di], dir_max[di]);
        }
        if (s == max_start) break;
    }
    double eps0 = 1e300;
    for (double v : dir_min) eps0 = std::min(eps0, v);
    report.epsilon0 = eps0;
    return report;
}

double robustness_margin(const Eigen::MatrixXd& P, const Eigen::MatrixXd& Q, double vmax) {
    if (!is_symmetric(P) || !is_positive_definite(P) || !is_symmetric(Q) ||
        !is_positive_definite(Q)) {
        throw std::invalid_argument("robustness_margin: P and Q must be symmetric PD");
    }
    if (vmax < 0.0) throw std::invalid_argument("robustness_margin: vmax must be >= 0");
    return 2.0 * max_eigenvalue_sym(P) / min_eigenvalue_sym(Q) * vmax;
}

}  // namespace adaptkit
