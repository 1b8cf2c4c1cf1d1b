#ifndef TSMLAB_INJECTIVITY_HPP
#define TSMLAB_INJECTIVITY_HPP

#include "tsmlab/common.hpp"
#include "tsmlab/cyclotomic.hpp"
#include "tsmlab/exact_linalg.hpp"
#include "tsmlab/hb_series.hpp"

#include <Eigen/Dense>
#include <json.hpp>

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace tsmlab {

enum class UnknownKind { Rad, Hol, Anti };

struct Unknown {
    UnknownKind kind = UnknownKind::Rad;
    unsigned index = 0; // p for Hol, q for Anti, 0 for Rad

    std::string label() const;
    /// Odd unknowns belong to the odd series U_k; Rad and even ones to V_k.
    bool is_odd() const { return index % 2 == 1; }
    friend bool operator==(const Unknown& a, const Unknown& b) {
        return a.kind == b.kind && a.index == b.index;
    }
};

/// [Rad, Hol(1..k), Anti(1..q_max)], the column order of every system.
std::vector<Unknown> series_unknowns(unsigned k, unsigned q_max);

/// Lines t e^{i theta_l}. Coxeter systems use theta_l = pi l / N and admit
/// exact arithmetic; custom angles are float only.
struct LineSystem {
    unsigned N = 1;
    std::vector<double> angles;
    bool coxeter = true;

    static LineSystem coxeter_system(unsigned N);
    static LineSystem custom(std::vector<double> angles);
};

using CycloPoly = std::vector<Cyclotomic>; // entry d multiplies x^d

/// The term restricted to z = x zeta^l with the Gaussian cancelled:
/// Hol(p): zeta^{pl} x^p L_{k-p}^p(x^2/2), Anti(q): zeta^{-ql} x^q L_k^q(x^2/2),
/// Rad: L_k(x^2/2).
CycloPoly restrict_term_to_line(const Unknown& u, unsigned k, unsigned l,
                                const std::shared_ptr<const CyclotomicField>& field);

/// Exact real coefficients of the restriction on the line l = 0.
std::vector<Rational> restrict_term_real(const Unknown& u, unsigned k);

struct RowLabel {
    unsigned line = 0;
    unsigned degree = 0;
};

struct AssembleOptions {
    std::optional<unsigned> max_degree; // rows above this degree are withheld
};

struct CoefficientSystem {
    unsigned k = 0;
    unsigned q_max = 0;
    LineSystem lines;
    std::shared_ptr<const CyclotomicField> field;
    std::vector<Unknown> unknowns;
    std::vector<RowLabel> row_labels;
    ExactMatrix<Cyclotomic> rows;

    Cyclotomic zero() const { return Cyclotomic(field, Rational(0)); }
    Cyclotomic one() const { return Cyclotomic(field, Rational(1)); }
};

/// One homogeneous equation per (line, degree) with a nonzero entry, degrees
/// 0..q_max+2k, ordered by line then degree.
CoefficientSystem assemble_system(unsigned k, unsigned q_max, unsigned N,
                                  const AssembleOptions& opts = {});

struct FloatSystem {
    unsigned k = 0;
    unsigned q_max = 0;
    LineSystem lines;
    std::vector<Unknown> unknowns;
    std::vector<RowLabel> row_labels;
    Eigen::MatrixXcd matrix;
};

FloatSystem assemble_float_system(unsigned k, unsigned q_max, const LineSystem& lines,
                                  const AssembleOptions& opts = {});
FloatSystem to_float(const CoefficientSystem& sys);

enum class SolveMode { Exact, Float };

SolveMode parse_solve_mode(const std::string& text);
const char* to_string(SolveMode mode);

struct NullSpaceResult {
    SolveMode mode = SolveMode::Exact;
    std::size_t dim = 0;
    std::size_t rank = 0;
    ExactMatrix<Cyclotomic> exact_basis;
    std::vector<std::vector<Complex>> float_basis;
    double sigma_max = 0.0;
    double threshold = 0.0;
};

/// Exact: Bareiss elimination over Q(zeta_2N). Float: SVD after scaling rows
/// and columns to the L2 norms of the corresponding functions, rank threshold
/// sigma_max * 1e-10.
NullSpaceResult null_space(const CoefficientSystem& sys, SolveMode mode);
NullSpaceResult null_space(const FloatSystem& sys);

HBLSeries series_from_vector(unsigned k, unsigned q_max, const std::vector<Unknown>& unknowns,
                             const std::vector<Complex>& values);

/// max |Q(x e^{i theta_l})| over 20 points per line in [-3, 3].
double line_residual(const HBLSeries& s, const LineSystem& lines);

// -- proof mechanics ------------------------------------------------------------

struct CascadeStep {
    unsigned degree = 0;
    Unknown unknown;
};

struct CascadeResult {
    std::vector<CascadeStep> steps;
    bool complete = false; // every unknown forced to zero
};

/// Single line: sweep the equations from the highest degree down, then up,
/// forcing an unknown to zero whenever it is the only live one in an equation.
CascadeResult cascade_elimination(unsigned k, unsigned q_max);

struct DecouplingReport {
    bool block_diagonal = false;
    std::size_t odd_rows = 0;
    std::size_t even_rows = 0;
    std::size_t odd_rank = 0;
    std::size_t even_rank = 0;
    std::size_t total_rank = 0;
};

/// Two perpendicular lines: rows (0, d) and (1, d) replaced by their sum and
/// difference; checks that no row mixes U and V unknowns.
DecouplingReport plus_minus_decoupling(const CoefficientSystem& sys);

struct ParityReport {
    bool cube_root_identity = false; // 1 + zeta^2 + zeta^4 == 0
    bool annihilates = false;        // odd columns with 3 not dividing the index vanish
    bool keeps_multiples = false;    // odd multiples of 3 survive
    std::vector<std::string> annihilated;
    std::vector<std::string> kept;
};

/// Three lines: odd-degree rows combined with weights (1, -1, 1), the same as
/// summing U over the lines omega^l x with omega = zeta^2.
ParityReport n3_parity_annihilation(unsigned k, unsigned q_max);

struct OddEven {
    HBLSeries odd;  // U_k
    HBLSeries even; // V_k, including the radial term
};

OddEven decompose_odd_even(const HBLSeries& s);

struct IndexSets {
    std::vector<unsigned> E, F, G, H; // F and H truncated at `upto`
};

IndexSets index_sets(unsigned k, unsigned upto);

// -- theorems and the conjecture ---------------------------------------------------

struct NamedDeterminant {
    std::string name;
    Rational value;
};

struct ExactMatrixReport {
    std::string name;
    std::string variant; // "printed", "derived" or "system"
    unsigned k = 0;
    ExactMatrix<Rational> entries;
    Rational det;
};

ExactMatrixReport make_matrix_report(std::string name, std::string variant, unsigned k,
                                     ExactMatrix<Rational> entries);

struct TheoremReport {
    std::string case_name;
    unsigned k = 0;
    unsigned q_max = 0;
    unsigned N = 1;
    SolveMode mode = SolveMode::Exact;
    std::size_t unknowns = 0;
    std::size_t equations = 0;
    std::size_t rank = 0;
    std::size_t null_dim = 0;
    std::optional<std::size_t> expected;
    std::vector<NamedDeterminant> determinants;
    nlohmann::ordered_json details = nlohmann::ordered_json::object();

    bool verified() const;
    nlohmann::ordered_json to_json() const;
};

struct TheoremOptions {
    SolveMode mode = SolveMode::Exact;
    unsigned lines = 0;          // only for "coxeter"; 0 selects 3
    std::vector<double> angles;  // only for "angles"
};

/// Cases: th2_k0, th2_k1, th1, lemma9, lemma10, th4, plus the exploratory
/// "coxeter" (N lines) and "angles" (arbitrary lines, float only).
TheoremReport verify_theorem(const std::string& case_name, unsigned k, unsigned q_max,
                             const TheoremOptions& opts = {});

/// The withheld-row probe at k = 1: rows above the largest odd q <= q_max plus
/// one are dropped, leaving the formal family.
unsigned th2_k1_probe_max_degree(unsigned q_max);

/// The 2x2 matrix at k = 4 on two perpendicular lines, as printed and from the
/// defining sum.
std::vector<ExactMatrixReport> lemma10_matrices();

enum class KClass { A0, A1, A2 };

struct KPartition {
    KClass set = KClass::A0;
    unsigned t = 0;
    unsigned r = 0;
    unsigned j = 0;
    unsigned m = 0;
    std::vector<unsigned> k_minus_r;
};

KPartition coxeter_k_partition(unsigned k);
const char* to_string(KClass c);

/// Exact matrices of the N = 3 argument at k, each with its determinant.
std::vector<ExactMatrixReport> conjecture_matrices(unsigned N, unsigned k);

nlohmann::ordered_json matrix_report_to_json(const ExactMatrixReport& m);

} // namespace tsmlab

#endif
