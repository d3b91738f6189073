#include "uefg/dense_eig.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace uefg {

namespace {

double off_norm(const std::vector<double>& a, long n) {
    double s = 0.0;
    for (long i = 0; i < n; ++i)
        for (long j = i + 1; j < n; ++j) s += a[i * n + j] * a[i * n + j];
    return std::sqrt(2.0 * s);
}

}  // namespace

std::vector<double> jacobi_eigenvalues(std::vector<double>& a, long n,
                                       double off_tol) {
    if (n < 1) throw std::invalid_argument("jacobi_eigenvalues: empty matrix");
    if (static_cast<long>(a.size()) != n * n)
        throw std::invalid_argument("jacobi_eigenvalues: size mismatch");
    const int max_sweeps = 60;
    // elements this small cannot keep the off-norm above off_tol
    const double tiny = off_tol / (10.0 * n);
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        if (off_norm(a, n) < off_tol) break;
        for (long p = 0; p < n - 1; ++p) {
            for (long q = p + 1; q < n; ++q) {
                const double apq = a[p * n + q];
                if (std::fabs(apq) <= tiny) continue;
                const double app = a[p * n + p];
                const double aqq = a[q * n + q];
                const double theta = (aqq - app) / (2.0 * apq);
                double t;
                if (std::fabs(theta) > 1e100) {
                    t = 1.0 / (2.0 * theta);
                } else {
                    t = 1.0 / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                    if (theta < 0.0) t = -t;
                }
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                double* rp = &a[p * n];
                double* rq = &a[q * n];
                for (long i = 0; i < n; ++i) {
                    const double aip = rp[i];
                    const double aiq = rq[i];
                    rp[i] = c * aip - s * aiq;
                    rq[i] = s * aip + c * aiq;
                }
                for (long i = 0; i < n; ++i) {
                    a[i * n + p] = rp[i];
                    a[i * n + q] = rq[i];
                }
                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
            }
        }
    }
    std::vector<double> ev(n);
    for (long i = 0; i < n; ++i) ev[i] = a[i * n + i];
    std::sort(ev.begin(), ev.end());
    return ev;
}

}  // namespace uefg
