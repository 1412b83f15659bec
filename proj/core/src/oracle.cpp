#include "charvar/oracle.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

#include "charvar/quad.hpp"
#include "charvar/special_matrices.hpp"

namespace charvar {

using Complex = std::complex<double>;

TangleDiagram TangleDiagram::from_cf(const ContinuedFraction& cf) {
    std::size_t s = cf.size();
    if (s == 0) throw DomainViolationError("diagram: empty continued fraction");
    TangleDiagram d;
    for (std::size_t j = 1; j <= s; ++j) d.blocks.push_back({(j % 2) == (s % 2), cf.ks[j - 1]});
    return d;
}

std::size_t TangleDiagram::crossing_count() const {
    std::size_t n = 0;
    for (const auto& b : blocks) n += static_cast<std::size_t>(b.crossings < 0 ? -b.crossings : b.crossings);
    return n;
}

namespace {

using QComplex = QuadComplex;

using LMat = Matrix2<QComplex>;

template <typename M>
M mat_inv(const M& m) {
    auto det = m.det();
    M adj = m.adjugate();
    return {adj.a / det, adj.b / det, adj.c / det, adj.d / det};
}
CMat cmat_inv(const CMat& m) { return mat_inv(m); }

LMat widen(const CMat& m) { return {QComplex(m.a), QComplex(m.b), QComplex(m.c), QComplex(m.d)}; }
CMat narrow(const LMat& m) { return {m.a.to_double(), m.b.to_double(), m.c.to_double(), m.d.to_double()}; }

long double lnorm_inf(const LMat& m) {
    return std::max(std::max(m.a.mag(), m.b.mag()), std::max(m.c.mag(), m.d.mag()));
}

struct PairState {
    LMat first, second;
};

// One elementary crossing. The strand running NW->SE passes over in a
// positive crossing; the mirrored rules keep the boundary product equal to
// the identity for either sign.
PairState step(bool horizontal, bool positive, const PairState& in) {
    const LMat& p = in.first;
    const LMat& q = in.second;
    if (horizontal) {
        if (positive) return {p * q * mat_inv(p), p};
        return {q, mat_inv(q) * p * q};
    }
    if (positive) return {mat_inv(p) * q * p, p};
    return {q, q * p * mat_inv(q)};
}

PairState run_block(const TwistBlock& block, PairState state) {
    long n = block.crossings;
    bool positive = n >= 0;
    for (long i = 0; i < (n >= 0 ? n : -n); ++i) state = step(block.horizontal, positive, state);
    return state;
}

struct BoundaryLd {
    LMat nw, ne, se, sw;
};

BoundaryLd propagate_ld(const TangleDiagram& diagram, const LMat& x, const LMat& y, double tol) {
    std::size_t s = diagram.blocks.size();
    if (s == 0) throw DomainViolationError("propagate: empty diagram");
    bool h_first = diagram.blocks.front().horizontal;

    PairState pair{mat_inv(x), h_first ? y : mat_inv(y)};
    LMat ne, se, sw;
    for (std::size_t j = 0; j < s; ++j) {
        if (j == 0) {
            // The far side of the first block is the reversed second input.
            if (h_first)
                sw = mat_inv(pair.second);
            else
                ne = mat_inv(pair.second);
        }
        PairState out = run_block(diagram.blocks[j], pair);
        if (diagram.blocks[j].horizontal) {
            ne = out.first;
            se = out.second;
        } else {
            sw = out.first;
            se = out.second;
        }
        if (j + 1 < s) {
            bool next_horizontal = diagram.blocks[j + 1].horizontal;
            pair = next_horizontal ? PairState{ne, se} : PairState{sw, se};
        }
    }

    BoundaryLd q{x, ne, se, sw};
    LMat prod = q.nw * q.ne * q.se * q.sw;
    // The product cancels down to the identity from intermediates as large as
    // the entry-norm product, so the deviation is measured relative to it.
    long double scale = std::max<long double>(
        1.0, lnorm_inf(q.nw) * lnorm_inf(q.ne) * lnorm_inf(q.se) * lnorm_inf(q.sw));
    QComplex one{1, 0};
    LMat dev_m = prod - LMat{one, QComplex(), QComplex(), one};
    long double dev = lnorm_inf(dev_m) / scale;
    if (dev > tol)
        throw ConventionMismatchError("propagate: boundary quadruple deviates from the identity by " +
                                      std::to_string(static_cast<double>(dev)) + " (relative)");
    return q;
}

} // namespace

GeneratingPair sample_generating_pair(Complex t, Complex r) {
    Complex kappa = (t + std::sqrt(t * t - 4.0)) / 2.0;
    if (std::abs(kappa) < 1e-12) kappa = (t - std::sqrt(t * t - 4.0)) / 2.0;
    GeneratingPair out;
    out.x = {kappa, 1.0, 0.0, 1.0 / kappa};
    Complex corner = r - kappa * kappa - 1.0 / (kappa * kappa);
    out.y = {kappa, 0.0, corner, 1.0 / kappa};
    out.parabolic = std::abs(t - 2.0) < 1e-9 || std::abs(t + 2.0) < 1e-9;
    out.commuting_eligible = std::abs(corner) < 1e-9;
    return out;
}

BoundaryQuadruple propagate(const TangleDiagram& diagram, const CMat& x, const CMat& y, double tol) {
    BoundaryLd q = propagate_ld(diagram, widen(x), widen(y), tol);
    return {narrow(q.nw), narrow(q.ne), narrow(q.se), narrow(q.sw)};
}

TraceSample boundary_traces(const BoundaryQuadruple& q) {
    return {(q.nw * q.ne).trace() - 2.0, (q.nw * q.sw).trace() - 2.0, (q.nw * q.se).trace() - 2.0};
}

TraceSample oracle_traces(const TangleDiagram& diagram, const CMat& x, const CMat& y, double tol) {
    BoundaryLd q = propagate_ld(diagram, widen(x), widen(y), tol);
    QComplex two{2, 0};
    return {((q.nw * q.ne).trace() - two).to_double(), ((q.nw * q.sw).trace() - two).to_double(),
            ((q.nw * q.se).trace() - two).to_double()};
}

SamplePoint sample_point(std::mt19937_64& rng) {
    // Moderate moduli keep the twist-power growth of the propagated matrices
    // within extended-precision range for the largest swept tangles.
    std::uniform_real_distribution<double> radius(0.88, 1.14);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * 3.14159265358979323846);
    std::uniform_real_distribution<double> re(0.5, 3.5);
    std::uniform_real_distribution<double> im(-1.5, 1.5);
    constexpr double kExclusion = 1e-3;
    const Complex roots[4] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    for (int attempt = 0; attempt < 10000; ++attempt) {
        Complex kappa = std::polar(radius(rng), angle(rng));
        bool bad = false;
        for (const auto& w : roots) bad |= std::abs(kappa - w) < kExclusion;
        if (bad) continue;
        Complex t = kappa + 1.0 / kappa;
        Complex r(re(rng), im(rng));
        if (std::abs(r - 2.0) < kExclusion) continue;
        if (std::abs(r - (t * t - 2.0)) < kExclusion) continue;
        return {kappa, t, r};
    }
    throw DomainViolationError("sample_point: rejection sampling failed");
}

void VerifyReport::add(std::string label, double value) {
    residuals.emplace_back(std::move(label), value);
    max_residual = std::max(max_residual, value);
}

// ---------------------------------------------------------------------------
// verify_rep_montesinos

namespace {

Complex require(const PointAssignment& point, const std::string& name) {
    auto it = point.find(name);
    if (it == point.end()) throw MissingVariableError("point is missing variable " + name);
    return it->second;
}

TraceSample numeric_traces(const RationalTangle& tangle, Complex t, Complex r) {
    GeneratingPair pair = sample_generating_pair(t, r);
    return boundary_traces(propagate(TangleDiagram::from_cf(tangle.cf), pair.x, pair.y, 1e-6));
}

// Numeric theta data: propagate the canonical reducible seed x = d(kappa),
// y = u^+_kappa(1) and read the triangular boundary entries.
struct NumericTheta {
    Complex ne, sw;
    double off_triangular; // lower-left magnitude of x_ne (should vanish)
};

NumericTheta numeric_theta(const RationalTangle& tangle, Complex kappa) {
    CMat x = cmat_d(kappa);
    CMat y = cmat_u(+1, kappa, 1.0);
    BoundaryQuadruple q = propagate(TangleDiagram::from_cf(tangle.cf), x, y, 1e-6);
    CMat sw_inv = q.sw.adjugate(); // det = 1
    return {q.ne.b, sw_inv.b, std::abs(q.ne.c)};
}

VerifyReport verify_x2(const MontesinosKnot& knot, const PointAssignment& point) {
    std::size_t m = knot.strand_count();
    Complex t = require(point, "t");
    Complex lambda = require(point, "lambda");
    Complex tau = lambda + 1.0 / lambda;

    if (std::abs(lambda - 1.0) < 1e-8 || std::abs(lambda + 1.0) < 1e-8)
        throw ReconstructionFailureError("X2 point has lambda at +-1");
    if (std::abs(tau - (t * t - 2.0)) < 1e-8)
        throw ReconstructionFailureError("X2 point has tau = t^2 - 2");

    VerifyReport report;
    report.component = "X2";

    std::vector<TraceSample> traces;
    for (std::size_t i = 0; i < m; ++i) {
        Complex ri = require(point, r_name(i + 1));
        traces.push_back(numeric_traces(knot.tangles[i], t, ri));
    }

    auto scale = [](Complex ref) { return std::max(1.0, std::abs(ref)); };
    for (std::size_t i = 0; i < m; ++i)
        report.add("z_" + std::to_string(i + 1) + " + 2 = tau",
                   std::abs(traces[i].z + 2.0 - tau) / scale(tau));

    // mu-ratios and their cyclic closure.
    Complex c = tau + 2.0 - t * t;
    std::vector<Complex> mu(m + 1);
    mu[0] = 1.0;
    for (std::size_t i = 0; i < m; ++i) {
        Complex num = (1.0 + 1.0 / lambda) * traces[i].zdot + (1.0 + lambda) * traces[i].zgrave + 2.0 * c;
        Complex den = (1.0 - lambda) * c;
        if (std::abs(den) < 1e-12 || std::abs(num) < 1e-12)
            throw ReconstructionFailureError("X2 point has a degenerate mu-ratio");
        mu[i + 1] = mu[i] / (num / den);
    }
    report.add("mu closure around the knot", std::abs(mu[m] - mu[0]));

    std::vector<CMat> nw(m), ne_(m);
    for (std::size_t i = 0; i < m; ++i) {
        nw[i] = cmat_h(t, lambda, mu[i]);
        ne_[i] = cmat_h(t, lambda, -mu[i] / lambda);
    }
    CMat g = cmat_d(lambda);
    for (std::size_t i = 0; i < m; ++i) {
        report.add("g-equality at tangle " + std::to_string(i + 1), distance(nw[i] * ne_[i], g));
        report.add("det x_nw_" + std::to_string(i + 1), std::abs(nw[i].det() - 1.0));
        std::size_t n = (i + 1) % m;
        Complex zdot_w = (nw[i] * cmat_inv(nw[n])).trace() - 2.0;
        Complex zgrave_w = (nw[i] * cmat_inv(ne_[n])).trace() - 2.0;
        report.add("wiring zdot_" + std::to_string(i + 1),
                   std::abs(zdot_w - traces[i].zdot) / scale(traces[i].zdot));
        report.add("wiring zgrave_" + std::to_string(i + 1),
                   std::abs(zgrave_w - traces[i].zgrave) / scale(traces[i].zgrave));
    }
    return report;
}

VerifyReport verify_xprime(const MontesinosKnot& knot, const PointAssignment& point,
                           const SignVector& eps) {
    std::size_t m = knot.strand_count();
    if (eps.eps.size() != m) throw InvalidSignVectorError("sign vector length mismatch");
    Complex kappa = require(point, "kappa");
    if (std::abs(kappa * kappa * kappa * kappa - 1.0) < 1e-8)
        throw ReconstructionFailureError("X' point has kappa^4 = 1");
    Complex t = kappa + 1.0 / kappa;

    auto at = [&](std::size_t i) { return eps.eps[i % m]; };
    std::size_t normalized_xi = m;
    for (std::size_t i = 0; i < m; ++i)
        if (at(i) != 0) {
            normalized_xi = i;
            break;
        }
    auto xi = [&](std::size_t i) -> Complex {
        i %= m;
        if (i == normalized_xi) return 1.0;
        Complex v = require(point, xi_name(i + 1));
        if (std::abs(v) < 1e-12) throw ReconstructionFailureError("X' point has xi = 0");
        return v;
    };

    VerifyReport report;
    report.component = "XPrime";

    auto kpow = [&](int sign) { return sign >= 0 ? kappa : 1.0 / kappa; };
    auto scale = [](Complex ref) { return std::max(1.0, std::abs(ref)); };

    // Boundary matrices and the common product d(kappa^2).
    std::vector<CMat> nw(m), ne_(m);
    for (std::size_t i = 0; i < m; ++i) {
        if (at(i) == 0) {
            nw[i] = cmat_d(kappa);
            ne_[i] = cmat_d(kappa);
        } else {
            Complex x = xi(i);
            Complex k2e = std::pow(kpow(at(i)), 2);
            nw[i] = cmat_u(at(i), kappa, x);
            ne_[i] = cmat_u(at(i), kappa, -x / k2e);
        }
    }
    CMat g = cmat_d(kappa * kappa);
    for (std::size_t i = 0; i < m; ++i)
        report.add("g-equality at tangle " + std::to_string(i + 1), distance(nw[i] * ne_[i], g));

    auto theta = [&](std::size_t i, int sign) { return numeric_theta(knot.tangles[i], kpow(sign)); };
    auto matching = [&](std::size_t i, int sign) {
        NumericTheta th = theta(i, sign);
        Complex k2 = std::pow(kpow(sign), 2);
        return th.ne - (1.0 + 1.0 / k2) * th.sw;
    };

    std::vector<Complex> f(m, 1.0); // xi transport factors, for the closure check
    bool all_nonzero = true;
    for (std::size_t i = 0; i < m; ++i) {
        int ei = at(i), en = at(i + 1);
        std::string tag = "tangle " + std::to_string(i + 1);
        if (ei == 0) all_nonzero = false;
        if (ei == 0 && en == 0) continue;
        if (ei == 0 && en != 0) {
            report.add(tag + ": theta_ne vanishes", std::abs(theta(i, en).ne));
            continue;
        }
        if (ei != 0 && en == 0) {
            report.add(tag + ": theta matching", std::abs(matching(i, ei)));
            continue;
        }
        if (ei * en == 1) {
            NumericTheta th = theta(i, ei);
            Complex k2 = std::pow(kpow(ei), 2);
            Complex match = th.ne - (1.0 + 1.0 / k2) * th.sw;
            if (std::abs(th.ne) < 1e-12)
                throw ReconstructionFailureError("X' point hits theta_ne = 0 in a same-sign case");
            report.add(tag + ": xi transport", std::abs(xi(i + 1) * th.ne - xi(i) * match) /
                                                   scale(xi(i) * match));
            f[i] = 1.0 - (1.0 + 1.0 / k2) * th.sw / th.ne;
            continue;
        }
        // Opposite signs: irreducible restriction with its own r_i.
        Complex ri = require(point, r_name(i + 1));
        if (std::abs(ri - 2.0) < 1e-8 || std::abs(ri - (t * t - 2.0)) < 1e-8)
            throw ReconstructionFailureError("X' point has degenerate r at tangle " + std::to_string(i + 1));
        TraceSample tr = numeric_traces(knot.tangles[i], t, ri);
        Complex k2e = std::pow(kpow(ei), 2);
        report.add(tag + ": z = t^2 - 4", std::abs(tr.z - (t * t - 4.0)) / scale(t * t - 4.0));
        report.add(tag + ": zdot = -xi_i xi_{i+1}",
                   std::abs(tr.zdot + xi(i) * xi(i + 1)) / scale(tr.zdot));
        report.add(tag + ": zgrave = kappa^(2 eps) xi_i xi_{i+1}",
                   std::abs(tr.zgrave - k2e * xi(i) * xi(i + 1)) / scale(tr.zgrave));
        f[i] = -1.0 / tr.zdot;
    }

    if (all_nonzero) {
        Complex prod = 1.0;
        for (std::size_t i = 0; i < m; ++i) prod *= at(i) > 0 ? f[i] : 1.0 / f[i];
        report.add("cyclic closure of xi transport", std::abs(prod - 1.0));
    }
    return report;
}

VerifyReport verify_x1(const MontesinosKnot& knot, const PointAssignment& point) {
    std::size_t m = knot.strand_count();
    Complex t = require(point, "t");
    Complex s = t / 2.0;

    auto tb2 = [&](std::size_t i, std::size_t j) {
        if (i > j) std::swap(i, j);
        return require(point, tb_name(i, j));
    };
    auto c2 = [&](std::size_t i, std::size_t j) -> Complex {
        if (i == j) return t * t - 2.0;
        return tb2(i, j) + t * t / 2.0;
    };
    auto c3 = [&](std::size_t i, std::size_t j, std::size_t k) {
        Complex tbar = require(point, tb_name(i, j, k));
        return tbar + s * (c2(i, j) + c2(i, k) + c2(j, k)) - 3.0 * s * s * t + 2.0 * s * s * s;
    };

    VerifyReport report;
    report.component = "X1";

    // x_1 and x_2 realize (t, c_{12}); later matrices come from the linear
    // trace conditions against e, x1, x2, x1 x2.
    Complex kappa = (t + std::sqrt(t * t - 4.0)) / 2.0;
    if (std::abs(kappa) < 1e-12) throw ReconstructionFailureError("X1 point has degenerate t");
    std::vector<CMat> xs(m);
    xs[0] = {kappa, 1.0, 0.0, 1.0 / kappa};
    xs[1] = {kappa, 0.0, c2(1, 2) - kappa * kappa - 1.0 / (kappa * kappa), 1.0 / kappa};
    CMat x12 = xs[0] * xs[1];
    for (std::size_t j = 3; j <= m; ++j) {
        Eigen::Matrix4cd a;
        Eigen::Vector4cd rhs;
        auto fill_row = [&](int row, const CMat& w, Complex value) {
            // tr(w * X) with X = [[p, q], [r, s]] laid out as (p, q, r, s).
            a(row, 0) = w.a;
            a(row, 1) = w.c;
            a(row, 2) = w.b;
            a(row, 3) = w.d;
            rhs(row) = value;
        };
        fill_row(0, cmat_identity(), t);
        fill_row(1, xs[0], c2(1, j));
        fill_row(2, xs[1], c2(2, j));
        fill_row(3, x12, c3(1, 2, j));
        Eigen::ColPivHouseholderQR<Eigen::Matrix4cd> qr(a);
        if (qr.rank() < 4)
            throw ReconstructionFailureError("X1 point: trace basis is singular (x1, x2 too special)");
        Eigen::Vector4cd sol = qr.solve(rhs);
        xs[j - 1] = {sol(0), sol(1), sol(2), sol(3)};
    }

    auto scale = [](Complex ref) { return std::max(1.0, std::abs(ref)); };
    for (std::size_t j = 1; j <= m; ++j) {
        report.add("det x_" + std::to_string(j), std::abs(xs[j - 1].det() - 1.0));
        report.add("tr x_" + std::to_string(j), std::abs(xs[j - 1].trace() - t) / scale(t));
    }
    for (std::size_t i = 1; i <= m; ++i)
        for (std::size_t j = i + 1; j <= m; ++j)
            report.add("pair trace (" + std::to_string(i) + "," + std::to_string(j) + ")",
                       std::abs((xs[i - 1] * xs[j - 1]).trace() - c2(i, j)) / scale(c2(i, j)));
    for (std::size_t i = 1; i <= m; ++i)
        for (std::size_t j = i + 1; j <= m; ++j)
            for (std::size_t k = j + 1; k <= m; ++k)
                report.add("triple trace (" + std::to_string(i) + "," + std::to_string(j) + "," +
                               std::to_string(k) + ")",
                           std::abs((xs[i - 1] * xs[j - 1] * xs[k - 1]).trace() - c3(i, j, k)) /
                               scale(c3(i, j, k)));

    for (std::size_t i = 0; i < m; ++i) {
        Complex ri = require(point, r_name(i + 1));
        TraceSample tr = numeric_traces(knot.tangles[i], t, ri);
        report.add("z_" + std::to_string(i + 1) + " = 0", std::abs(tr.z));
        std::size_t n = (i + 1) % m;
        Complex linked = (xs[i] * cmat_inv(xs[n])).trace() - 2.0;
        report.add("linkage zdot_" + std::to_string(i + 1),
                   std::abs(linked - tr.zdot) / scale(tr.zdot));
    }
    return report;
}

} // namespace

VerifyReport verify_rep_montesinos(const MontesinosKnot& knot, const PointAssignment& point,
                                   const std::optional<SignVector>& epsilon) {
    if (point.count("lambda")) return verify_x2(knot, point);
    if (point.count("kappa")) {
        if (!epsilon)
            throw ReconstructionFailureError("X' verification needs the sign vector that produced the point");
        return verify_xprime(knot, point, *epsilon);
    }
    if (point.count("t")) return verify_x1(knot, point);
    throw ReconstructionFailureError("point does not match any component (no lambda, kappa or t)");
}

// ---------------------------------------------------------------------------
// Newton refinement

NewtonResult newton_refine(const VarietySystem& system, const PointAssignment& start,
                           const PointAssignment& frozen, const NewtonOptions& opts) {
    const VarTablePtr& tbl = system.table;
    std::vector<std::string> vars;
    for (std::size_t i = 0; i < tbl->size(); ++i) {
        const std::string& name = tbl->name(i);
        if (!frozen.count(name)) vars.push_back(name);
    }
    std::size_t n = vars.size();
    std::size_t rows = system.equations.size();
    if (rows < n)
        throw SingularJacobianError("newton_refine: underdetermined system (freeze more variables)");

    std::vector<std::vector<Polynomial>> jac(rows, std::vector<Polynomial>());
    for (std::size_t e = 0; e < rows; ++e)
        for (const auto& v : vars) jac[e].push_back(system.equations[e].poly.derivative(v));

    PointAssignment assign = frozen;
    for (const auto& v : vars) {
        auto it = start.find(v);
        if (it == start.end())
            throw MissingVariableError("newton_refine: start point is missing " + v);
        assign[v] = it->second;
    }

    auto residual_vec = [&](const PointAssignment& a, Eigen::VectorXcd& f) -> double {
        f.resize(static_cast<Eigen::Index>(rows));
        double worst = 0.0;
        for (std::size_t e = 0; e < rows; ++e) {
            Complex v = system.equations[e].poly.eval(a);
            f(static_cast<Eigen::Index>(e)) = v;
            worst = std::max(worst, std::abs(v));
        }
        return worst;
    };

    Eigen::VectorXcd f;
    double res = residual_vec(assign, f);
    for (int iter = 0; iter < opts.max_iterations; ++iter) {
        if (res < opts.tol) return {assign, res, iter};

        Eigen::MatrixXcd j(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(n));
        for (std::size_t e = 0; e < rows; ++e)
            for (std::size_t v = 0; v < n; ++v)
                j(static_cast<Eigen::Index>(e), static_cast<Eigen::Index>(v)) = jac[e][v].eval(assign);
        Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(j);
        if (qr.rank() < static_cast<Eigen::Index>(n))
            throw SingularJacobianError("newton_refine: Jacobian is rank-deficient");
        Eigen::VectorXcd delta = qr.solve(-f);

        double alpha = 1.0;
        bool improved = false;
        for (int halving = 0; halving <= opts.max_halvings; ++halving, alpha *= 0.5) {
            PointAssignment trial = assign;
            for (std::size_t v = 0; v < n; ++v)
                trial[vars[v]] += alpha * delta(static_cast<Eigen::Index>(v));
            Eigen::VectorXcd ftrial;
            double rtrial;
            try {
                rtrial = residual_vec(trial, ftrial);
            } catch (const Error&) {
                continue; // stepped onto a Laurent zero; shorten the step
            }
            if (rtrial < res) {
                assign = std::move(trial);
                f = std::move(ftrial);
                res = rtrial;
                improved = true;
                break;
            }
        }
        if (!improved)
            throw NoConvergenceError("newton_refine: no damping step improves the residual (residual " +
                                     std::to_string(res) + ")");
    }
    if (res < opts.tol) return {assign, res, opts.max_iterations};
    throw NoConvergenceError("newton_refine: iteration cap reached at residual " + std::to_string(res));
}

} // namespace charvar
