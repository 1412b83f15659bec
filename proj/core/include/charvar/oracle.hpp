#pragma once

#include <complex>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "charvar/matrix2.hpp"
#include "charvar/tangle.hpp"
#include "charvar/variety.hpp"

namespace charvar {

/// One twist region: a run of |crossings| equal crossings, horizontal
/// (side-by-side strands) or vertical (stacked strands).
struct TwistBlock {
    bool horizontal;
    long crossings;
};

/// Block decomposition of [[k_1],...,[k_s]]: blocks alternate orientation and
/// the last block is always horizontal, so block j is horizontal exactly when
/// j and s have the same parity.
struct TangleDiagram {
    std::vector<TwistBlock> blocks;

    static TangleDiagram from_cf(const ContinuedFraction& cf);
    std::size_t crossing_count() const;
};

/// The four outward-directed boundary values of a tangle representation.
/// Their product nw * ne * se * sw is the identity.
struct BoundaryQuadruple {
    CMat nw, ne, se, sw;
};

struct GeneratingPair {
    CMat x, y;
    bool parabolic = false;          // t = +-2
    bool commuting_eligible = false; // r = kappa^2 + kappa^-2
};

/// x upper-triangular with diagonal (kappa, 1/kappa) and corner 1, y
/// lower-triangular with corner r - kappa^2 - 1/kappa^2; forces
/// tr x = tr y = t and tr(xy) = r.
GeneratingPair sample_generating_pair(std::complex<double> t, std::complex<double> r);

/// Crossing-by-crossing propagation from the generating pair; the independent
/// numeric counterpart of the symbolic engines. Runs internally in extended
/// precision (twist powers inflate matrix norms quickly). Throws
/// ConventionMismatchError when the boundary identity fails beyond tol,
/// measured relative to the boundary norms.
BoundaryQuadruple propagate(const TangleDiagram& diagram, const CMat& x, const CMat& y,
                            double tol = 1e-8);

struct TraceSample {
    std::complex<double> z, zdot, zgrave;
};
TraceSample boundary_traces(const BoundaryQuadruple& q);

/// propagate + boundary_traces with the traces also formed in extended
/// precision, for tight tolerance comparisons against the symbolic engines.
TraceSample oracle_traces(const TangleDiagram& diagram, const CMat& x, const CMat& y,
                          double tol = 1e-8);

/// Seeded draw of (kappa, t, r) staying at distance > 1e-3 from the
/// degenerate loci kappa^4 = 1, r = 2 and r = t^2 - 2.
struct SamplePoint {
    std::complex<double> kappa, t, r;
};
SamplePoint sample_point(std::mt19937_64& rng);

using PointAssignment = std::map<std::string, std::complex<double>>;

struct VerifyReport {
    std::string component;
    double max_residual = 0.0;
    std::vector<std::pair<std::string, double>> residuals;

    bool ok(double tol) const { return max_residual <= tol; }
    void add(std::string label, double value);
};

/// Reconstructs boundary matrices from a candidate variety point (h-matrix
/// forms for X2, triangular forms for X', trace-coordinate lift for X1) and
/// reports the worst violation of the boundary, trace and wiring conditions.
/// The component is inferred from the point's variables; X' needs the sign
/// vector that produced the point.
VerifyReport verify_rep_montesinos(const MontesinosKnot& knot, const PointAssignment& point,
                                   const std::optional<SignVector>& epsilon = std::nullopt);

struct NewtonOptions {
    int max_iterations = 100;
    double tol = 1e-10;
    int max_halvings = 25;
};

struct NewtonResult {
    PointAssignment point; // includes the frozen values
    double residual = 0.0;
    int iterations = 0;
};

/// Damped Newton iteration on the system's equations. Variables present in
/// `frozen` are held fixed; `start` must cover the remaining ones. The system
/// must be square or overdetermined after freezing. Best-effort local
/// refinement only; results are not certified.
NewtonResult newton_refine(const VarietySystem& system, const PointAssignment& start,
                           const PointAssignment& frozen = {}, const NewtonOptions& opts = {});

} // namespace charvar
