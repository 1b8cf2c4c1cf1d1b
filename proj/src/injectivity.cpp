#include "tsmlab/injectivity.hpp"

#include "tsmlab/laguerre.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace tsmlab {

namespace {

constexpr double kRankRelativeThreshold = 1e-10;

std::shared_ptr<const CyclotomicField> make_field(unsigned N) {
    return std::make_shared<const CyclotomicField>(N);
}

// phase exponent of zeta on line l
long phase_exponent(const Unknown& u, unsigned l) {
    switch (u.kind) {
    case UnknownKind::Hol:
        return static_cast<long>(u.index) * l;
    case UnknownKind::Anti:
        return -static_cast<long>(u.index) * l;
    default:
        return 0;
    }
}

double phase_angle_factor(const Unknown& u) {
    switch (u.kind) {
    case UnknownKind::Hol:
        return static_cast<double>(u.index);
    case UnknownKind::Anti:
        return -static_cast<double>(u.index);
    default:
        return 0.0;
    }
}

double column_norm(const Unknown& u, unsigned k) {
    switch (u.kind) {
    case UnknownKind::Hol:
        return std::sqrt(hol_term_l2_norm(k, u.index));
    case UnknownKind::Anti:
        return std::sqrt(term_l2_norm(k, u.index));
    default:
        return std::sqrt(term_l2_norm(k, 0));
    }
}

// sqrt of int x^{2d} e^{-x^2/2} dx = sqrt(2 pi) (2d-1)!!
double row_norm(unsigned d) {
    double log_df = 0.0;
    for (unsigned i = 1; i < 2 * d; i += 2)
        log_df += std::log(static_cast<double>(i));
    return std::exp(0.5 * (0.5 * std::log(2.0 * kPi) + log_df));
}

std::size_t cyclotomic_rank(const ExactMatrix<Cyclotomic>& m, const Cyclotomic& one) {
    if (m.empty())
        return 0;
    return bareiss_echelon(m, one).rank();
}

std::vector<Complex> to_complex_vector(const std::vector<Cyclotomic>& v) {
    std::vector<Complex> out;
    out.reserve(v.size());
    for (const auto& x : v)
        out.push_back(x.to_complex());
    return out;
}

std::size_t column_of(const std::vector<Unknown>& unknowns, UnknownKind kind, unsigned index) {
    for (std::size_t j = 0; j < unknowns.size(); ++j)
        if (unknowns[j].kind == kind && unknowns[j].index == index)
            return j;
    return unknowns.size();
}

nlohmann::ordered_json exact_matrix_to_json(const ExactMatrix<Rational>& m) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : m) {
        nlohmann::ordered_json r = nlohmann::ordered_json::array();
        for (const auto& x : row)
            r.push_back(to_string(x));
        rows.push_back(std::move(r));
    }
    return rows;
}

} // namespace

std::string Unknown::label() const {
    switch (kind) {
    case UnknownKind::Hol:
        return "hol(" + std::to_string(index) + ")";
    case UnknownKind::Anti:
        return "anti(" + std::to_string(index) + ")";
    default:
        return "rad";
    }
}

std::vector<Unknown> series_unknowns(unsigned k, unsigned q_max) {
    std::vector<Unknown> out;
    out.push_back({UnknownKind::Rad, 0});
    for (unsigned p = 1; p <= k; ++p)
        out.push_back({UnknownKind::Hol, p});
    for (unsigned q = 1; q <= q_max; ++q)
        out.push_back({UnknownKind::Anti, q});
    return out;
}

LineSystem LineSystem::coxeter_system(unsigned N) {
    if (N == 0)
        fail(ErrorCode::InvalidArgument, "line system: N must be positive");
    LineSystem s;
    s.N = N;
    s.coxeter = true;
    for (unsigned l = 0; l < N; ++l)
        s.angles.push_back(kPi * l / N);
    return s;
}

LineSystem LineSystem::custom(std::vector<double> angles) {
    if (angles.empty())
        fail(ErrorCode::InvalidArgument, "line system: at least one angle is required");
    for (std::size_t i = 0; i < angles.size(); ++i) {
        if (!(angles[i] >= 0.0 && angles[i] < kPi))
            fail(ErrorCode::InvalidArgument, "line system: angles must lie in [0, pi)");
        if (i > 0 && !(angles[i] > angles[i - 1]))
            fail(ErrorCode::InvalidArgument, "line system: angles must be strictly increasing");
    }
    LineSystem s;
    s.N = static_cast<unsigned>(angles.size());
    s.angles = std::move(angles);
    s.coxeter = false;
    return s;
}

std::vector<Rational> restrict_term_real(const Unknown& u, unsigned k) {
    unsigned degree = k, order = 0, start = 0;
    if (u.kind == UnknownKind::Hol) {
        if (u.index > k)
            fail(ErrorCode::InvalidArgument, "restrict_term: holomorphic index exceeds k");
        degree = k - u.index;
        order = u.index;
        start = u.index;
    } else if (u.kind == UnknownKind::Anti) {
        order = u.index;
        start = u.index;
    }
    const auto c = laguerre_coefficients(degree, Rational(order)).coefficients();
    std::vector<Rational> out(start + 2 * degree + 1, Rational(0));
    Rational pow2 = 1;
    for (unsigned i = 0; i <= degree; ++i) {
        out[start + 2 * i] = c[i] / pow2;
        pow2 *= 2;
    }
    return out;
}

CycloPoly restrict_term_to_line(const Unknown& u, unsigned k, unsigned l,
                                const std::shared_ptr<const CyclotomicField>& field) {
    const auto real = restrict_term_real(u, k);
    const Cyclotomic phase = Cyclotomic::zeta_power(field, phase_exponent(u, l));
    CycloPoly out;
    out.reserve(real.size());
    for (const auto& c : real)
        out.push_back(sgn(c) == 0 ? Cyclotomic(field, Rational(0)) : phase * Cyclotomic(field, c));
    return out;
}

CoefficientSystem assemble_system(unsigned k, unsigned q_max, unsigned N, const AssembleOptions& opts) {
    if (q_max < k)
        fail(ErrorCode::InvalidArgument, "assemble_system: q_max must be at least k");
    CoefficientSystem sys;
    sys.k = k;
    sys.q_max = q_max;
    sys.lines = LineSystem::coxeter_system(N);
    sys.field = make_field(N);
    sys.unknowns = series_unknowns(k, q_max);
    unsigned top = q_max + 2 * k;
    if (opts.max_degree)
        top = std::min(top, *opts.max_degree);

    std::vector<std::vector<Rational>> real;
    for (const auto& u : sys.unknowns)
        real.push_back(restrict_term_real(u, k));

    const Cyclotomic zero = sys.zero();
    for (unsigned l = 0; l < N; ++l) {
        std::vector<Cyclotomic> phases;
        for (const auto& u : sys.unknowns)
            phases.push_back(Cyclotomic::zeta_power(sys.field, phase_exponent(u, l)));
        for (unsigned d = 0; d <= top; ++d) {
            std::vector<Cyclotomic> row(sys.unknowns.size(), zero);
            bool nonzero = false;
            for (std::size_t j = 0; j < sys.unknowns.size(); ++j) {
                if (d < real[j].size() && sgn(real[j][d]) != 0) {
                    row[j] = phases[j] * Cyclotomic(sys.field, real[j][d]);
                    nonzero = true;
                }
            }
            if (nonzero) {
                sys.rows.push_back(std::move(row));
                sys.row_labels.push_back({l, d});
            }
        }
    }
    return sys;
}

FloatSystem assemble_float_system(unsigned k, unsigned q_max, const LineSystem& lines,
                                  const AssembleOptions& opts) {
    if (q_max < k)
        fail(ErrorCode::InvalidArgument, "assemble_system: q_max must be at least k");
    FloatSystem sys;
    sys.k = k;
    sys.q_max = q_max;
    sys.lines = lines;
    sys.unknowns = series_unknowns(k, q_max);
    unsigned top = q_max + 2 * k;
    if (opts.max_degree)
        top = std::min(top, *opts.max_degree);

    std::vector<std::vector<double>> real;
    for (const auto& u : sys.unknowns) {
        std::vector<double> r;
        for (const auto& c : restrict_term_real(u, k))
            r.push_back(c.get_d());
        real.push_back(std::move(r));
    }
    std::vector<std::vector<Complex>> rows;
    for (unsigned l = 0; l < lines.angles.size(); ++l) {
        for (unsigned d = 0; d <= top; ++d) {
            std::vector<Complex> row(sys.unknowns.size());
            bool nonzero = false;
            for (std::size_t j = 0; j < sys.unknowns.size(); ++j) {
                if (d < real[j].size() && real[j][d] != 0.0) {
                    row[j] = real[j][d] * std::polar(1.0, phase_angle_factor(sys.unknowns[j]) * lines.angles[l]);
                    nonzero = true;
                }
            }
            if (nonzero) {
                rows.push_back(std::move(row));
                sys.row_labels.push_back({l, d});
            }
        }
    }
    sys.matrix.resize(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(sys.unknowns.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < sys.unknowns.size(); ++j)
            sys.matrix(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
    return sys;
}

FloatSystem to_float(const CoefficientSystem& sys) {
    FloatSystem out;
    out.k = sys.k;
    out.q_max = sys.q_max;
    out.lines = sys.lines;
    out.unknowns = sys.unknowns;
    out.row_labels = sys.row_labels;
    out.matrix.resize(static_cast<Eigen::Index>(sys.rows.size()), static_cast<Eigen::Index>(sys.unknowns.size()));
    for (std::size_t i = 0; i < sys.rows.size(); ++i)
        for (std::size_t j = 0; j < sys.unknowns.size(); ++j)
            out.matrix(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = sys.rows[i][j].to_complex();
    return out;
}

SolveMode parse_solve_mode(const std::string& text) {
    if (text == "exact")
        return SolveMode::Exact;
    if (text == "float")
        return SolveMode::Float;
    fail(ErrorCode::InvalidArgument, "mode must be 'exact' or 'float'");
}

const char* to_string(SolveMode mode) { return mode == SolveMode::Exact ? "exact" : "float"; }

NullSpaceResult null_space(const FloatSystem& sys) {
    NullSpaceResult out;
    out.mode = SolveMode::Float;
    const auto rows = sys.matrix.rows();
    const auto cols = sys.matrix.cols();
    if (static_cast<std::size_t>(rows) != sys.row_labels.size() ||
        static_cast<std::size_t>(cols) != sys.unknowns.size())
        fail(ErrorCode::InvalidArgument, "null_space: matrix shape does not match the labels");
    std::vector<double> col_scale(static_cast<std::size_t>(cols));
    for (Eigen::Index j = 0; j < cols; ++j)
        col_scale[static_cast<std::size_t>(j)] = column_norm(sys.unknowns[static_cast<std::size_t>(j)], sys.k);
    Eigen::MatrixXcd a(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        const double rs = row_norm(sys.row_labels[static_cast<std::size_t>(i)].degree);
        for (Eigen::Index j = 0; j < cols; ++j)
            a(i, j) = sys.matrix(i, j) * rs / col_scale[static_cast<std::size_t>(j)];
    }
    std::size_t rank = 0;
    Eigen::MatrixXcd v;
    if (rows > 0 && cols > 0) {
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a, Eigen::ComputeFullV);
        const auto& s = svd.singularValues();
        out.sigma_max = s.size() ? s(0) : 0.0;
        out.threshold = out.sigma_max * kRankRelativeThreshold;
        for (Eigen::Index i = 0; i < s.size(); ++i)
            if (s(i) > out.threshold)
                ++rank;
        v = svd.matrixV();
    } else {
        v = Eigen::MatrixXcd::Identity(cols, cols);
    }
    out.rank = rank;
    out.dim = static_cast<std::size_t>(cols) - rank;
    for (Eigen::Index c = static_cast<Eigen::Index>(rank); c < cols; ++c) {
        std::vector<Complex> vec(static_cast<std::size_t>(cols));
        double largest = 0.0;
        for (Eigen::Index j = 0; j < cols; ++j) {
            vec[static_cast<std::size_t>(j)] = v(j, c) / col_scale[static_cast<std::size_t>(j)];
            largest = std::max(largest, std::abs(vec[static_cast<std::size_t>(j)]));
        }
        if (largest > 0.0)
            for (auto& x : vec)
                x /= largest;
        out.float_basis.push_back(std::move(vec));
    }
    return out;
}

NullSpaceResult null_space(const CoefficientSystem& sys, SolveMode mode) {
    if (mode == SolveMode::Float)
        return null_space(to_float(sys));
    NullSpaceResult out;
    out.mode = SolveMode::Exact;
    const Cyclotomic one = sys.one();
    const auto cols = sys.unknowns.size();
    if (sys.rows.empty()) {
        EchelonForm<Cyclotomic> empty;
        out.exact_basis = null_space_basis(empty, cols, one);
    } else {
        const auto e = bareiss_echelon(sys.rows, one);
        out.rank = e.rank();
        out.exact_basis = null_space_basis(e, cols, one);
    }
    out.dim = out.exact_basis.size();
    for (const auto& b : out.exact_basis)
        out.float_basis.push_back(to_complex_vector(b));
    return out;
}

HBLSeries series_from_vector(unsigned k, unsigned q_max, const std::vector<Unknown>& unknowns,
                             const std::vector<Complex>& values) {
    if (values.size() != unknowns.size())
        fail(ErrorCode::InvalidArgument, "series_from_vector: size mismatch");
    HBLSeries s;
    s.k = k;
    s.q_max = q_max;
    for (std::size_t j = 0; j < unknowns.size(); ++j) {
        const auto& u = unknowns[j];
        if (u.kind == UnknownKind::Rad)
            s.c_rad = values[j];
        else if (u.kind == UnknownKind::Hol)
            s.c_hol[u.index] = values[j];
        else
            s.c_anti[u.index] = values[j];
    }
    return s;
}

double line_residual(const HBLSeries& s, const LineSystem& lines) {
    double worst = 0.0;
    for (double theta : lines.angles) {
        const Complex dir = std::polar(1.0, theta);
        for (int i = 0; i < 20; ++i) {
            const double x = -3.0 + 6.0 * i / 19.0;
            worst = std::max(worst, std::abs(s(x * dir)));
        }
    }
    return worst;
}

CascadeResult cascade_elimination(unsigned k, unsigned q_max) {
    const auto sys = assemble_system(k, q_max, 1);
    const std::size_t cols = sys.unknowns.size();
    std::vector<bool> dead(cols, false);
    CascadeResult out;

    auto sweep = [&](bool descending) {
        bool progress = false;
        const std::size_t n = sys.rows.size();
        for (std::size_t s = 0; s < n; ++s) {
            const std::size_t i = descending ? n - 1 - s : s;
            std::size_t live = cols, count = 0;
            for (std::size_t j = 0; j < cols; ++j) {
                if (!dead[j] && !sys.rows[i][j].is_zero()) {
                    live = j;
                    ++count;
                }
            }
            if (count == 1) {
                dead[live] = true;
                out.steps.push_back({sys.row_labels[i].degree, sys.unknowns[live]});
                progress = true;
            }
        }
        return progress;
    };
    while (sweep(true) || sweep(false)) {
    }
    out.complete = std::all_of(dead.begin(), dead.end(), [](bool b) { return b; });
    return out;
}

DecouplingReport plus_minus_decoupling(const CoefficientSystem& sys) {
    if (sys.lines.N != 2)
        fail(ErrorCode::InvalidArgument, "plus_minus_decoupling: needs the two-line system");
    const std::size_t cols = sys.unknowns.size();
    const Cyclotomic zero = sys.zero();
    std::map<std::pair<unsigned, unsigned>, std::size_t> where;
    unsigned top = 0;
    for (std::size_t i = 0; i < sys.row_labels.size(); ++i) {
        where[{sys.row_labels[i].line, sys.row_labels[i].degree}] = i;
        top = std::max(top, sys.row_labels[i].degree);
    }
    auto row_or_zero = [&](unsigned l, unsigned d) {
        auto it = where.find({l, d});
        return it == where.end() ? std::vector<Cyclotomic>(cols, zero) : sys.rows[it->second];
    };

    DecouplingReport out;
    out.block_diagonal = true;
    ExactMatrix<Cyclotomic> combined, odd_block, even_block;
    for (unsigned d = 0; d <= top; ++d) {
        const auto a = row_or_zero(0, d);
        const auto b = row_or_zero(1, d);
        for (int sign : {1, -1}) {
            std::vector<Cyclotomic> row(cols, zero);
            bool has_odd = false, has_even = false;
            for (std::size_t j = 0; j < cols; ++j) {
                row[j] = sign > 0 ? a[j] + b[j] : a[j] - b[j];
                if (!row[j].is_zero())
                    (sys.unknowns[j].is_odd() ? has_odd : has_even) = true;
            }
            if (!has_odd && !has_even)
                continue;
            if (has_odd && has_even)
                out.block_diagonal = false;
            std::vector<Cyclotomic> restricted;
            for (std::size_t j = 0; j < cols; ++j)
                if (sys.unknowns[j].is_odd() == has_odd)
                    restricted.push_back(row[j]);
            if (has_odd) {
                ++out.odd_rows;
                odd_block.push_back(std::move(restricted));
            } else {
                ++out.even_rows;
                even_block.push_back(std::move(restricted));
            }
            combined.push_back(std::move(row));
        }
    }
    const Cyclotomic one = sys.one();
    out.total_rank = cyclotomic_rank(combined, one);
    if (out.block_diagonal) {
        out.odd_rank = cyclotomic_rank(odd_block, one);
        out.even_rank = cyclotomic_rank(even_block, one);
    }
    return out;
}

ParityReport n3_parity_annihilation(unsigned k, unsigned q_max) {
    const auto sys = assemble_system(k, q_max, 3);
    const auto& field = sys.field;
    ParityReport out;
    out.cube_root_identity = (Cyclotomic(field, Rational(1)) + Cyclotomic::zeta_power(field, 2) +
                              Cyclotomic::zeta_power(field, 4))
                                 .is_zero();
    const std::size_t cols = sys.unknowns.size();
    const Cyclotomic zero = sys.zero();
    std::map<std::pair<unsigned, unsigned>, std::size_t> where;
    unsigned top = 0;
    for (std::size_t i = 0; i < sys.row_labels.size(); ++i) {
        where[{sys.row_labels[i].line, sys.row_labels[i].degree}] = i;
        top = std::max(top, sys.row_labels[i].degree);
    }
    std::vector<bool> survives(cols, false);
    const int weights[3] = {1, -1, 1};
    for (unsigned d = 1; d <= top; d += 2) {
        for (std::size_t j = 0; j < cols; ++j) {
            Cyclotomic acc = zero;
            for (unsigned l = 0; l < 3; ++l) {
                auto it = where.find({l, d});
                if (it == where.end())
                    continue;
                if (weights[l] > 0)
                    acc += sys.rows[it->second][j];
                else
                    acc -= sys.rows[it->second][j];
            }
            if (!acc.is_zero())
                survives[j] = true;
        }
    }
    out.annihilates = true;
    out.keeps_multiples = true;
    for (std::size_t j = 0; j < cols; ++j) {
        const auto& u = sys.unknowns[j];
        if (!u.is_odd())
            continue;
        if (u.index % 3 == 0) {
            out.kept.push_back(u.label());
            out.keeps_multiples = out.keeps_multiples && survives[j];
        } else {
            out.annihilated.push_back(u.label());
            out.annihilates = out.annihilates && !survives[j];
        }
    }
    return out;
}

OddEven decompose_odd_even(const HBLSeries& s) {
    OddEven out;
    out.odd.k = out.even.k = s.k;
    out.odd.q_max = out.even.q_max = s.q_max;
    out.even.c_rad = s.c_rad;
    for (const auto& [p, c] : s.c_hol)
        (p % 2 ? out.odd : out.even).c_hol[p] = c;
    for (const auto& [q, c] : s.c_anti)
        (q % 2 ? out.odd : out.even).c_anti[q] = c;
    return out;
}

IndexSets index_sets(unsigned k, unsigned upto) {
    IndexSets s;
    for (unsigned i = 1; i <= std::max(k, upto); ++i) {
        const bool even = i % 2 == 0;
        if (i <= k)
            (even ? s.E : s.G).push_back(i);
        else
            (even ? s.F : s.H).push_back(i);
    }
    return s;
}

ExactMatrixReport make_matrix_report(std::string name, std::string variant, unsigned k,
                                     ExactMatrix<Rational> entries) {
    ExactMatrixReport r;
    r.name = std::move(name);
    r.variant = std::move(variant);
    r.k = k;
    r.det = exact_determinant(entries, Rational(1));
    r.entries = std::move(entries);
    return r;
}

nlohmann::ordered_json matrix_report_to_json(const ExactMatrixReport& m) {
    nlohmann::ordered_json j;
    j["name"] = m.name;
    j["variant"] = m.variant;
    j["k"] = m.k;
    j["matrix"] = exact_matrix_to_json(m.entries);
    j["determinant"] = to_string(m.det);
    j["nonsingular"] = sgn(m.det) != 0;
    return j;
}

std::vector<ExactMatrixReport> lemma10_matrices() {
    std::vector<ExactMatrixReport> out;
    out.push_back(make_matrix_report("lemma10_2x2", "printed", 4,
                                     {{Rational(6), Rational(6)}, {Rational(-4), Rational(-20)}}));
    out.push_back(make_matrix_report(
        "lemma10_2x2", "derived", 4,
        {{value_at_zero(2, 2), value_at_zero(4, 2)},
         {derivative_at_zero(2, Rational(2)), derivative_at_zero(4, Rational(2))}}));
    return out;
}

unsigned th2_k1_probe_max_degree(unsigned q_max) {
    const unsigned q_odd = q_max % 2 ? q_max : q_max - 1;
    return q_odd + 1;
}

const char* to_string(KClass c) {
    switch (c) {
    case KClass::A1:
        return "A1";
    case KClass::A2:
        return "A2";
    default:
        return "A0";
    }
}

KPartition coxeter_k_partition(unsigned k) {
    if (k == 0)
        fail(ErrorCode::InvalidArgument, "coxeter_k_partition: k must be positive");
    KPartition out;
    if (k <= 4) {
        out.set = KClass::A0;
        return out;
    }
    const unsigned rem = k % 6;
    if (rem == 5 || rem == 0) {
        out.set = KClass::A1;
        out.t = (k + 1) / 6;
        out.r = 6 * out.t - 1;
        out.j = 2 * k - 1;
        out.m = k - 2;
        out.k_minus_r = {0, 1};
    } else {
        out.set = KClass::A2;
        out.t = (k - 1) / 6;
        out.r = 6 * out.t + 1;
        out.j = 2 * k + 1;
        out.m = k - 1;
        out.k_minus_r = {0, 1, 2, 3};
    }
    return out;
}

namespace {

Rational F(long k, long n) { return value_at_zero(k, n); }

// (-1)^s F_{deg-s}^{order+s}: the s-th derivative at zero of L_deg^order.
Rational derivative_pattern(const Unknown& u, unsigned k, unsigned row_degree) {
    long deg = k, order = 0, start = 0;
    if (u.kind == UnknownKind::Hol) {
        deg = static_cast<long>(k) - u.index;
        order = u.index;
        start = u.index;
    } else if (u.kind == UnknownKind::Anti) {
        order = u.index;
        start = u.index;
    }
    const long diff = static_cast<long>(row_degree) - start;
    if (diff < 0 || diff % 2 != 0 || deg < 0)
        return 0;
    const long s = diff / 2;
    if (s > deg)
        return 0;
    Rational v = F(deg - s, order + s);
    return s % 2 ? Rational(-v) : v;
}

Rational system_entry(const Unknown& u, unsigned k, unsigned row_degree) {
    const auto real = restrict_term_real(u, k);
    return row_degree < real.size() ? real[row_degree] : Rational(0);
}

} // namespace

std::vector<ExactMatrixReport> conjecture_matrices(unsigned N, unsigned k) {
    if (N != 3)
        fail(ErrorCode::Unsupported, "conjecture matrices are implemented for N = 3 only");
    std::vector<ExactMatrixReport> out;
    if (k == 0)
        return out;
    const long K = k;

    out.push_back(make_matrix_report(
        "odd_2x2", "printed", k,
        {{Rational(K), Rational(K + 1)}, {Rational(-K * (K - 1)) / 2, Rational(-K) / 2}}));
    out.push_back(make_matrix_report(
        "odd_2x2", "derived", k,
        {{F(K - 1, 1), F(K, 1)},
         {derivative_at_zero(k - 1, Rational(1)), derivative_at_zero(k, Rational(1))}}));

    if (k <= 3) {
        out.push_back(make_matrix_report("even_3x3", "printed", k,
                                         {{F(K - 2, 2), F(K, 2), Rational(0)},
                                          {F(0, 2), -F(K - 1, 3), F(K, 4)},
                                          {Rational(0), F(K - 2, 4), -F(K - 1, 5)}}));
        // Hol(2) only exists for k >= 2; without it the system is the 2x2 on anti(2), anti(4).
        std::vector<Unknown> cols;
        if (k >= 2)
            cols.push_back({UnknownKind::Hol, 2});
        cols.push_back({UnknownKind::Anti, 2});
        cols.push_back({UnknownKind::Anti, 4});
        ExactMatrix<Rational> m;
        for (unsigned i = 0; i < cols.size(); ++i) {
            std::vector<Rational> row;
            for (const auto& c : cols)
                row.push_back(derivative_pattern(c, k, 2 + 2 * i));
            m.push_back(std::move(row));
        }
        out.push_back(make_matrix_report("even_3x3", "derived", k, std::move(m)));
    }

    const auto part = coxeter_k_partition(k);
    if (part.set == KClass::A1) {
        std::vector<Unknown> cols;
        for (unsigned idx = 5; idx <= part.j; idx += 2) {
            if (idx % 3 == 0)
                continue;
            if (idx <= k)
                cols.push_back({UnknownKind::Hol, idx});
            cols.push_back({UnknownKind::Anti, idx});
        }
        if (cols.size() != part.m)
            fail(ErrorCode::Internal, "banded matrix is not square");
        ExactMatrix<Rational> pattern, system;
        for (unsigned i = 0; i < part.m; ++i) {
            const unsigned d = 5 + 2 * i;
            std::vector<Rational> prow, srow;
            for (const auto& c : cols) {
                prow.push_back(derivative_pattern(c, k, d));
                srow.push_back(system_entry(c, k, d));
            }
            pattern.push_back(std::move(prow));
            system.push_back(std::move(srow));
        }
        out.push_back(make_matrix_report("banded", "printed", k, std::move(pattern)));
        out.push_back(make_matrix_report("banded", "system", k, std::move(system)));
    }
    return out;
}

bool TheoremReport::verified() const {
    if (expected && null_dim != *expected)
        return false;
    if (details.contains("withheld_probe")) {
        const auto& p = details["withheld_probe"];
        if (p["null_dim"] != 1 || !p["matches_family"].get<bool>())
            return false;
    }
    if (details.contains("decoupling") && !details["decoupling"]["block_diagonal"].get<bool>())
        return false;
    if (details.contains("cascade") && !details["cascade"]["complete"].get<bool>())
        return false;
    for (const auto& d : determinants)
        if (sgn(d.value) == 0)
            return false;
    return true;
}

nlohmann::ordered_json TheoremReport::to_json() const {
    nlohmann::ordered_json j;
    j["case"] = case_name;
    j["k"] = k;
    j["q_max"] = q_max;
    j["N"] = N;
    j["null_dim"] = null_dim;
    j["expected"] = expected ? nlohmann::ordered_json(*expected) : nlohmann::ordered_json(nullptr);
    nlohmann::ordered_json dets = nlohmann::ordered_json::array();
    for (const auto& d : determinants)
        dets.push_back({{"name", d.name}, {"value", to_string(d.value)}});
    j["determinants"] = std::move(dets);
    j["mode"] = to_string(mode);
    j["unknowns"] = unknowns;
    j["equations"] = equations;
    j["rank"] = rank;
    j["verified"] = verified();
    j["details"] = details;
    return j;
}

namespace {

nlohmann::ordered_json decoupling_json(const DecouplingReport& d) {
    return {{"block_diagonal", d.block_diagonal}, {"odd_rows", d.odd_rows},
            {"even_rows", d.even_rows},           {"odd_rank", d.odd_rank},
            {"even_rank", d.even_rank},           {"total_rank", d.total_rank}};
}

// Null vector normalised at anti(1) against c_hol[1] = -2, c_anti[2m+1] = 1/(4^m (m+1)!).
bool matches_family(const std::vector<Unknown>& unknowns, const NullSpaceResult& ns) {
    if (ns.dim != 1)
        return false;
    const std::size_t a1 = column_of(unknowns, UnknownKind::Anti, 1);
    if (ns.mode == SolveMode::Exact) {
        const auto& b = ns.exact_basis[0];
        if (b[a1].is_zero())
            return false;
        const Cyclotomic scale = b[a1].inverse();
        for (std::size_t j = 0; j < unknowns.size(); ++j) {
            const auto& u = unknowns[j];
            Rational want = 0;
            if (u.kind == UnknownKind::Hol && u.index == 1)
                want = -2;
            else if (u.kind == UnknownKind::Anti && u.index % 2 == 1) {
                const unsigned m = (u.index - 1) / 2;
                Rational den = factorial(m + 1);
                for (unsigned i = 0; i < m; ++i)
                    den *= 4;
                want = Rational(1) / den;
            }
            if (!(b[j] * scale == Cyclotomic(b[j].field(), want)))
                return false;
        }
        return true;
    }
    const auto& b = ns.float_basis[0];
    if (std::abs(b[a1]) == 0.0)
        return false;
    const auto family = recursion_family_Q1(1.0, unknowns.back().index);
    for (std::size_t j = 0; j < unknowns.size(); ++j) {
        const auto& u = unknowns[j];
        Complex want{};
        if (u.kind == UnknownKind::Hol)
            want = family.hol(u.index);
        else if (u.kind == UnknownKind::Anti)
            want = family.anti(u.index);
        if (std::abs(b[j] / b[a1] - want) > 1e-8 * std::max(1.0, std::abs(want)))
            return false;
    }
    return true;
}

} // namespace

TheoremReport verify_theorem(const std::string& case_name, unsigned k, unsigned q_max,
                             const TheoremOptions& opts) {
    TheoremReport rep;
    rep.case_name = case_name;
    rep.k = k;
    rep.q_max = q_max;
    rep.mode = opts.mode;
    if (q_max < k)
        fail(ErrorCode::InvalidArgument, "q_max must be at least k");

    if (case_name == "th2_k0" || case_name == "th2_k1" || case_name == "th1") {
        rep.N = 1;
        if (case_name == "th2_k0" && k != 0)
            fail(ErrorCode::InvalidArgument, "th2_k0 is stated for k = 0");
        if (case_name == "th2_k1" && k != 1)
            fail(ErrorCode::InvalidArgument, "th2_k1 is stated for k = 1");
        rep.expected = 0;
    } else if (case_name == "lemma9" || case_name == "lemma10" || case_name == "th4") {
        rep.N = 2;
        if (case_name == "lemma9" && k > 3)
            fail(ErrorCode::InvalidArgument, "lemma9 covers k <= 3");
        if (case_name == "lemma10" && k < 4)
            fail(ErrorCode::InvalidArgument, "lemma10 covers k >= 4");
        rep.expected = 0;
    } else if (case_name == "coxeter") {
        rep.N = opts.lines ? opts.lines : 3;
    } else if (case_name == "angles") {
        if (opts.angles.empty())
            fail(ErrorCode::InvalidArgument, "case 'angles' needs at least one angle");
        rep.N = static_cast<unsigned>(opts.angles.size());
        rep.mode = SolveMode::Float;
    } else {
        fail(ErrorCode::InvalidArgument, "unknown case '" + case_name + "'");
    }

    NullSpaceResult ns;
    std::vector<Unknown> unknowns;
    LineSystem lines;
    std::optional<CoefficientSystem> exact_sys;
    if (case_name == "angles") {
        const auto fs = assemble_float_system(k, q_max, LineSystem::custom(opts.angles));
        ns = null_space(fs);
        unknowns = fs.unknowns;
        lines = fs.lines;
        rep.equations = static_cast<std::size_t>(fs.matrix.rows());
    } else if (rep.mode == SolveMode::Float && rep.N > CyclotomicField::kMaxExactN) {
        const auto fs = assemble_float_system(k, q_max, LineSystem::coxeter_system(rep.N));
        ns = null_space(fs);
        unknowns = fs.unknowns;
        lines = fs.lines;
        rep.equations = static_cast<std::size_t>(fs.matrix.rows());
    } else {
        exact_sys = assemble_system(k, q_max, rep.N);
        ns = null_space(*exact_sys, rep.mode);
        unknowns = exact_sys->unknowns;
        lines = exact_sys->lines;
        rep.equations = exact_sys->rows.size();
    }
    rep.unknowns = unknowns.size();
    rep.rank = ns.rank;
    rep.null_dim = ns.dim;
    if (ns.mode == SolveMode::Float) {
        rep.details["sigma_max"] = ns.sigma_max;
        rep.details["rank_threshold"] = ns.threshold;
    }
    if (ns.dim > 0) {
        const auto witness = series_from_vector(k, q_max, unknowns, ns.float_basis[0]);
        rep.details["witness"] = witness.to_json();
        rep.details["witness_line_residual"] = line_residual(witness, lines);
    }

    if (case_name == "th1") {
        const auto c = cascade_elimination(k, q_max);
        nlohmann::ordered_json order = nlohmann::ordered_json::array();
        for (const auto& s : c.steps)
            order.push_back(s.unknown.label() + "@x^" + std::to_string(s.degree));
        rep.details["cascade"] = {{"complete", c.complete}, {"order", order}};
    }
    if (case_name == "th2_k1") {
        AssembleOptions probe_opts;
        probe_opts.max_degree = th2_k1_probe_max_degree(q_max);
        const auto probe = assemble_system(k, q_max, 1, probe_opts);
        const auto pns = null_space(probe, rep.mode);
        nlohmann::ordered_json p;
        p["max_degree"] = *probe_opts.max_degree;
        p["withheld_rows"] = exact_sys->rows.size() - probe.rows.size();
        p["null_dim"] = pns.dim;
        p["matches_family"] = matches_family(probe.unknowns, pns);
        if (pns.dim > 0) {
            const auto fam = series_from_vector(k, q_max, probe.unknowns, pns.float_basis[0]);
            p["basis"] = fam.to_json();
        }
        rep.details["withheld_probe"] = std::move(p);
    }
    if (rep.N == 2 && exact_sys)
        rep.details["decoupling"] = decoupling_json(plus_minus_decoupling(*exact_sys));
    if (case_name == "lemma10" && k == 4) {
        for (const auto& m : lemma10_matrices())
            rep.determinants.push_back({m.name + "_" + m.variant, m.det});
    }
    if (case_name == "coxeter" && rep.N == 3 && k >= 1) {
        const auto parity = n3_parity_annihilation(k, q_max);
        rep.details["parity"] = {{"cube_root_identity", parity.cube_root_identity},
                                 {"annihilates", parity.annihilates},
                                 {"keeps_multiples_of_3", parity.keeps_multiples}};
        const auto part = coxeter_k_partition(k);
        rep.details["partition"] = to_string(part.set);
        for (const auto& m : conjecture_matrices(3, k))
            rep.determinants.push_back({m.name + "_" + m.variant, m.det});
    }
    return rep;
}

} // namespace tsmlab
