#include "dirspace/quadrature.hpp"

#include <algorithm>
#include <queue>
#include <vector>
#include <cmath>
#include <cstring>
#include <map>
#include <mutex>

namespace dirspace {

namespace {

QuadratureRule make_gauss_legendre(int n) {
    QuadratureRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        // Newton from the Chebyshev-like initial guess.
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (x * p0 - p1) / (x * x - 1.0);
            double dx = p0 / pp;
            x -= dx;
            if (std::fabs(dx) < 1e-15) break;
        }
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        rule.weights[i] = 2.0 / ((1.0 - x * x) * pp * pp);
        rule.weights[n - 1 - i] = rule.weights[i];
    }
    return rule;
}

// Symmetric tridiagonal QL with implicit shifts; d = diagonal (overwritten by
// eigenvalues), e = off-diagonal, z = a row vector rotated along (used to
// recover Gauss weights from first eigenvector components).
void tridiag_ql(std::vector<double>& d, std::vector<double>& e, std::vector<double>& z) {
    const int n = (int)d.size();
    e.push_back(0.0);
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
                if (std::fabs(e[m]) <= 1e-15 * dd) break;
            }
            if (m != l) {
                if (iter++ == 60) throw NumericalError("tridiag_ql: too many iterations");
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + (g >= 0 ? r : -r));
                double s = 1.0, c = 1.0, p = 0.0;
                bool underflow = false;
                for (int i = m - 1; i >= l; --i) {
                    double f = s * e[i];
                    double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        underflow = true;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                    f = z[i + 1];
                    z[i + 1] = s * z[i] + c * f;
                    z[i] = c * z[i] - s * f;
                }
                if (underflow) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
}

QuadratureRule make_gauss_laguerre(double alpha, int n) {
    // Jacobi matrix of the generalized Laguerre polynomials.
    std::vector<double> d(n), e(n - 1), z(n, 0.0);
    for (int i = 0; i < n; ++i) d[i] = 2.0 * i + 1.0 + alpha;
    for (int i = 1; i < n; ++i) e[i - 1] = std::sqrt(i * (i + alpha));
    z[0] = 1.0;
    tridiag_ql(d, e, z);

    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return d[a] < d[b]; });

    QuadratureRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const double mu0 = std::exp(std::lgamma(alpha + 1.0));
    for (int i = 0; i < n; ++i) {
        rule.nodes[i] = d[idx[i]];
        rule.weights[i] = mu0 * z[idx[i]] * z[idx[i]];
    }
    return rule;
}

std::mutex g_gl_mutex;
std::map<int, QuadratureRule> g_gl_cache;

std::mutex g_lag_mutex;
std::map<std::pair<long long, int>, QuadratureRule> g_lag_cache;

} // namespace

const QuadratureRule& gauss_legendre(int order) {
    std::lock_guard<std::mutex> lock(g_gl_mutex);
    auto it = g_gl_cache.find(order);
    if (it == g_gl_cache.end())
        it = g_gl_cache.emplace(order, make_gauss_legendre(order)).first;
    return it->second;
}

double integrate_gl(const std::function<double(double)>& f, double a, double b, int order) {
    const QuadratureRule& rule = gauss_legendre(order);
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
    return sum * half;
}

namespace {

struct Panel {
    double a, b, value, error;
    int depth;

    bool operator<(const Panel& o) const { return error < o.error; }
};

Panel make_panel(const std::function<double(double)>& f, double a, double b, int depth) {
    const double v15 = integrate_gl(f, a, b, 15);
    const double v7 = integrate_gl(f, a, b, 7);
    return {a, b, v15, std::fabs(v15 - v7), depth};
}

} // namespace

// Globally adaptive: always split the panel with the largest error estimate,
// stop when the total estimate meets the tolerance. Splitting the worst panel
// keeps the work linear in depth for integrable endpoint singularities.
IntegralResult adaptive_integrate(const std::function<double(double)>& f, double a,
                                  double b, double tol_rel, double tol_abs, int max_depth) {
    if (a == b) return {0.0, 0.0};

    std::priority_queue<Panel> queue;
    queue.push(make_panel(f, a, b, 0));
    double total_value = queue.top().value;
    double total_error = queue.top().error;
    const auto tol = [&] {
        return std::max(tol_abs, tol_rel * std::max(std::fabs(total_value), 1e-308));
    };

    long splits = 0;
    while (total_error > tol()) {
        if (++splits > 20000)
            throw QuadratureError("adaptive_integrate: panel limit reached");
        Panel worst = queue.top();
        if (worst.depth >= max_depth || worst.b - worst.a <= 1e-15 * std::fabs(worst.b)) {
            // cannot resolve further; give up only if this panel alone keeps
            // the total above the tolerance
            if (worst.error > tol())
                throw QuadratureError("adaptive_integrate: refinement limit reached");
            break;
        }
        queue.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        Panel left = make_panel(f, worst.a, mid, worst.depth + 1);
        Panel right = make_panel(f, mid, worst.b, worst.depth + 1);
        total_value += left.value + right.value - worst.value;
        total_error += left.error + right.error - worst.error;
        queue.push(left);
        queue.push(right);
    }
    // recompute the sums in panel order for a stable result
    std::vector<Panel> panels;
    while (!queue.empty()) {
        panels.push_back(queue.top());
        queue.pop();
    }
    std::sort(panels.begin(), panels.end(),
              [](const Panel& x, const Panel& y) { return x.a < y.a; });
    IntegralResult out;
    for (const Panel& p : panels) {
        out.value += p.value;
        out.error_estimate += p.error;
    }
    return out;
}

const QuadratureRule& gauss_laguerre(double alpha, int order) {
    // key alpha by its bit pattern; alphas come from config values, not sweeps
    long long key;
    static_assert(sizeof(double) == sizeof(long long));
    std::memcpy(&key, &alpha, sizeof(key));
    std::lock_guard<std::mutex> lock(g_lag_mutex);
    auto it = g_lag_cache.find({key, order});
    if (it == g_lag_cache.end())
        it = g_lag_cache.emplace(std::make_pair(key, order), make_gauss_laguerre(alpha, order)).first;
    return it->second;
}

} // namespace dirspace
