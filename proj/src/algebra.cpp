#include "diracsq/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace dsq {

namespace {

Complex det3(Complex a, Complex b, Complex c, Complex d, Complex e, Complex f,
             Complex g, Complex h, Complex i) {
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g);
}

}  // namespace

Complex det4(const CMatrix4& m) {
    Complex det{0.0, 0.0};
    for (int j = 0; j < 4; ++j) {
        // 3x3 minor deleting row 0, column j
        int cols[3], c = 0;
        for (int k = 0; k < 4; ++k)
            if (k != j) cols[c++] = k;
        const Complex minor =
            det3(m(1, cols[0]), m(1, cols[1]), m(1, cols[2]),
                 m(2, cols[0]), m(2, cols[1]), m(2, cols[2]),
                 m(3, cols[0]), m(3, cols[1]), m(3, cols[2]));
        const double sign = (j % 2 == 0) ? 1.0 : -1.0;
        det += sign * m(0, j) * minor;
    }
    return det;
}

int numerical_rank(const CMatrix4& m, double tau) {
    CMatrix4 a = m;
    const double scale = a.cwiseAbs().maxCoeff();
    if (scale == 0.0) return 0;
    const double thresh = tau * scale;

    bool row_used[4] = {false, false, false, false};
    bool col_used[4] = {false, false, false, false};
    int rank = 0;
    for (int step = 0; step < 4; ++step) {
        // complete pivoting: largest remaining entry
        int pr = -1, pc = -1;
        double best = 0.0;
        for (int r = 0; r < 4; ++r) {
            if (row_used[r]) continue;
            for (int cidx = 0; cidx < 4; ++cidx) {
                if (col_used[cidx]) continue;
                const double v = std::abs(a(r, cidx));
                if (v > best) {
                    best = v;
                    pr = r;
                    pc = cidx;
                }
            }
        }
        if (pr < 0 || best <= thresh) break;
        ++rank;
        row_used[pr] = true;
        col_used[pc] = true;
        for (int r = 0; r < 4; ++r) {
            if (row_used[r]) continue;
            const Complex factor = a(r, pc) / a(pr, pc);
            for (int cidx = 0; cidx < 4; ++cidx) {
                if (col_used[cidx]) continue;
                a(r, cidx) -= factor * a(pr, cidx);
            }
            a(r, pc) = Complex{0.0, 0.0};
        }
    }
    return rank;
}

int CPolynomial::degree(double eps) const {
    const double cutoff = eps * max_coeff();
    for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i)
        if (std::abs(coeffs[i]) > cutoff) return i;
    return 0;
}

Complex CPolynomial::eval(Complex z) const {
    Complex acc{0.0, 0.0};
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = acc * z + *it;
    return acc;
}

CPolynomial CPolynomial::derivative() const {
    CPolynomial d;
    for (std::size_t i = 1; i < coeffs.size(); ++i)
        d.coeffs.push_back(static_cast<double>(i) * coeffs[i]);
    if (d.coeffs.empty()) d.coeffs.push_back(Complex{0.0, 0.0});
    return d;
}

double CPolynomial::max_coeff() const {
    double m = 0.0;
    for (const auto& c : coeffs) m = std::max(m, std::abs(c));
    return m;
}

CPolynomial CPolynomial::trimmed(double eps) const {
    CPolynomial t = *this;
    t.coeffs.resize(static_cast<std::size_t>(degree(eps)) + 1);
    return t;
}

std::vector<Complex> poly_roots(const CPolynomial& p) {
    const CPolynomial q = p.trimmed(1e-14);
    const int n = static_cast<int>(q.coeffs.size()) - 1;
    if (n < 1) throw std::runtime_error("poly_roots: degree must be >= 1");
    if (n == 1) return {-q.coeffs[0] / q.coeffs[1]};

    // Cauchy bound for the moduli of the roots
    const Complex lead = q.coeffs.back();
    double r = 0.0;
    for (int i = 0; i < n; ++i) r = std::max(r, std::abs(q.coeffs[i] / lead));
    r = 1.0 + r;

    // Deterministic start: r * omega^j with a fixed angular offset that keeps
    // the iteration out of invariant real subspaces.
    std::vector<Complex> z(n);
    for (int j = 0; j < n; ++j) {
        const double theta = 2.0 * std::numbers::pi * j / n + 0.4;
        z[j] = r * std::exp(I * theta);
    }

    const int max_iter = 400;
    bool converged = false;
    for (int it = 0; it < max_iter && !converged; ++it) {
        double max_step = 0.0;
        for (int j = 0; j < n; ++j) {
            Complex denom = lead;
            for (int k = 0; k < n; ++k)
                if (k != j) denom *= (z[j] - z[k]);
            if (denom == Complex{0.0, 0.0}) {
                z[j] += Complex{1e-8, 1e-8};
                max_step = 1.0;
                continue;
            }
            const Complex step = q.eval(z[j]) / denom;
            z[j] -= step;
            max_step = std::max(max_step, std::abs(step));
        }
        converged = max_step < 1e-14 * std::max(1.0, r);
    }

    // Newton polish
    const CPolynomial dq = q.derivative();
    for (auto& root : z) {
        for (int it = 0; it < 5; ++it) {
            const Complex d = dq.eval(root);
            if (std::abs(d) < 1e-300) break;
            root -= q.eval(root) / d;
        }
    }

    const double bound = tol::root_residual * q.max_coeff();
    double worst = 0.0;
    for (const auto& root : z) worst = std::max(worst, std::abs(q.eval(root)));
    if (worst > bound) {
        std::ostringstream os;
        os << "poly_roots: non-convergence, worst residual " << worst
           << " exceeds bound " << bound;
        throw std::runtime_error(os.str());
    }
    return z;
}

std::vector<Complex> unit_circle_filter(const std::vector<Complex>& roots,
                                        double tol) {
    std::vector<Complex> out;
    for (const auto& root : roots) {
        const double mod = std::abs(root);
        if (std::abs(mod - 1.0) <= tol) out.push_back(root / mod);
    }
    return out;
}

const std::array<Complex, 5> kInterpNodes = {
    Complex{0.0, 0.0}, Complex{1.0, 0.0}, Complex{-1.0, 0.0},
    Complex{0.0, 1.0}, Complex{0.0, -1.0}};

CPolynomial interpolate_det_poly(const std::function<Complex(Complex)>& eval) {
    // Lagrange interpolation through the 5 fixed nodes, accumulated in
    // coefficient form.
    std::array<Complex, 5> values;
    for (int i = 0; i < 5; ++i) values[i] = eval(kInterpNodes[i]);

    CPolynomial result;
    result.coeffs.assign(5, Complex{0.0, 0.0});
    for (int i = 0; i < 5; ++i) {
        // basis polynomial prod_{j != i} (K - x_j) / (x_i - x_j)
        std::array<Complex, 5> basis{};
        basis[0] = Complex{1.0, 0.0};
        int deg = 0;
        Complex denom{1.0, 0.0};
        for (int j = 0; j < 5; ++j) {
            if (j == i) continue;
            denom *= (kInterpNodes[i] - kInterpNodes[j]);
            for (int d = deg; d >= 0; --d) {
                basis[d + 1] += basis[d];
                basis[d] *= -kInterpNodes[j];
            }
            ++deg;
        }
        const Complex w = values[i] / denom;
        for (int d = 0; d < 5; ++d) result.coeffs[d] += w * basis[d];
    }
    return result;
}

}  // namespace dsq
