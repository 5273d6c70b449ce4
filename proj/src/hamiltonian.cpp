#include "nadosc/hamiltonian.hpp"

#include <cmath>
#include <stdexcept>

#include "nadosc/nonabelian_fields.hpp"

namespace nadosc {

void OscParams::validate() const {
    if (dimension != 1 && dimension != 2)
        throw std::invalid_argument("OscParams: dimension must be 1 or 2");
    if (!(mass > 0.0)) throw std::invalid_argument("OscParams: mass must be > 0");
    if (!(omega > 0.0))
        throw std::invalid_argument("OscParams: omega must be > 0");
    if (truncation < 1)
        throw std::invalid_argument("OscParams: truncation must be >= 1");
    if (!(guard_fraction > 0.0) || guard_fraction > 1.0)
        throw std::invalid_argument("OscParams: guard_fraction must be in (0,1]");
    if (extra_sign != 1.0 && extra_sign != -1.0)
        throw std::invalid_argument("OscParams: extra_sign must be +1 or -1");
    if (!(tolerance > 0.0))
        throw std::invalid_argument("OscParams: tolerance must be > 0");
    if (hilbert_dim() > kMaxHilbertDim)
        throw std::invalid_argument(
            "OscParams: truncation exceeds the dense size cap N^d*8 <= 8192");
}

std::size_t OscParams::fock_dim() const {
    return dimension == 1 ? truncation : truncation * truncation;
}

FockOperators fock_ops(std::size_t n, int d, double m, double omega) {
    if (n < 1) throw std::invalid_argument("fock_ops: truncation must be >= 1");
    if (d != 1 && d != 2)
        throw std::invalid_argument("fock_ops: dimension must be 1 or 2");
    if (!(m > 0.0) || !(omega > 0.0))
        throw std::invalid_argument("fock_ops: mass and omega must be > 0");
    const std::size_t fock_dim = (d == 1) ? n : n * n;
    if (fock_dim * 8 > kMaxHilbertDim)
        throw std::invalid_argument(
            "fock_ops: truncation exceeds the dense size cap N^d*8 <= 8192");

    // Single-axis ladder operators on n states.
    ComplexMatrix lower(n, n);  // a
    for (std::size_t k = 1; k < n; ++k)
        lower(k - 1, k) = std::sqrt(static_cast<double>(k));
    const ComplexMatrix raise = lower.dagger();

    const double xs = 1.0 / std::sqrt(2.0 * m * omega);
    const double ps = std::sqrt(m * omega / 2.0);
    const ComplexMatrix x1 = xs * (lower + raise);
    const ComplexMatrix p1 = Complex(0.0, ps) * (raise - lower);

    FockOperators f;
    f.n_per_axis = n;
    f.dimension = d;
    f.mass = m;
    f.omega = omega;
    f.fock_dim = fock_dim;
    if (d == 1) {
        f.x = {x1};
        f.p = {p1};
    } else {
        const ComplexMatrix id = ComplexMatrix::identity(n);
        f.x = {kron(x1, id), kron(id, x1)};
        f.p = {kron(p1, id), kron(id, p1)};
    }
    return f;
}

std::vector<ComplexMatrix> nonminimal_momentum(const FockOperators& f,
                                               const GammaSet& g,
                                               const ChargeSet& c,
                                               const OscParams& p) {
    p.validate();
    if (f.dimension != p.dimension || f.n_per_axis != p.truncation)
        throw std::invalid_argument(
            "nonminimal_momentum: Fock operators inconsistent with parameters");
    const ComplexMatrix i8 = ComplexMatrix::identity(8);
    const ComplexMatrix i2 = ComplexMatrix::identity(2);
    const ComplexMatrix id_fock = ComplexMatrix::identity(f.fock_dim);
    const ComplexMatrix beta_color = kron(g.beta, i2);
    const double mw = p.mass * p.omega;

    std::vector<ComplexMatrix> pi;
    pi.reserve(static_cast<std::size_t>(p.dimension));
    for (int i = 1; i <= p.dimension; ++i) {
        ComplexMatrix out = kron(f.p[i - 1], i8);
        out += Complex(0.0, -mw) * kron(f.x[i - 1], beta_color);
        if (p.eta != 0.0) {
            const ComplexMatrix ci = color_coupling(c, p.phi, i);
            if (max_abs(ci) != 0.0)
                out += Complex(0.0, p.extra_sign * mw * p.eta) *
                       kron(id_fock, kron(g.beta, ci));
        }
        pi.push_back(std::move(out));
    }
    return pi;
}

namespace {

// (I_k kron m) h, exploiting the block-diagonal left factor.
ComplexMatrix kron_right_times(std::size_t k, const ComplexMatrix& m,
                               const ComplexMatrix& h) {
    const std::size_t s = m.rows();
    if (h.rows() != s * k)
        throw std::invalid_argument("kron_right_times: shape mismatch");
    ComplexMatrix out(h.rows(), h.cols());
    for (std::size_t b = 0; b < k; ++b)
        for (std::size_t r = 0; r < s; ++r)
            for (std::size_t q = 0; q < s; ++q) {
                const Complex w = m(r, q);
                if (w == Complex(0.0, 0.0)) continue;
                const Complex* src = &h(b * s + q, 0);
                Complex* dst = &out(b * s + r, 0);
                for (std::size_t col = 0; col < h.cols(); ++col)
                    dst[col] += w * src[col];
            }
    return out;
}

}  // namespace

HamiltonianMatrix build_hamiltonian(const std::vector<ComplexMatrix>& pi,
                                    const GammaSet& g, const OscParams& p) {
    p.validate();
    if (pi.size() != static_cast<std::size_t>(p.dimension))
        throw std::invalid_argument(
            "build_hamiltonian: one momentum matrix per axis required");
    const std::size_t dim = p.hilbert_dim();
    for (const ComplexMatrix& m : pi)
        if (m.rows() != dim || m.cols() != dim)
            throw std::invalid_argument("build_hamiltonian: dimension mismatch");
    const std::size_t fdim = p.fock_dim();
    const ComplexMatrix i2 = ComplexMatrix::identity(2);

    ComplexMatrix h = ComplexMatrix::zero(dim, dim);
    for (int i = 1; i <= p.dimension; ++i)
        h += kron_right_times(fdim, kron(g.alpha[i - 1], i2), pi[i - 1]);
    h += p.mass * kron(ComplexMatrix::identity(fdim), kron(g.beta, i2));

    HamiltonianMatrix out;
    out.hermiticity_residual = hermiticity_residual(h);
    const double scale = std::max(1.0, max_abs(h));
    if (out.hermiticity_residual > 1e-12 * scale)
        throw std::runtime_error(
            "build_hamiltonian: assembled matrix violates the Hermiticity "
            "invariant");
    out.matrix = std::move(h);
    out.params = p;
    return out;
}

HamiltonianMatrix assemble_hamiltonian(const OscParams& p, double kappa_q) {
    p.validate();
    const GammaSet g = build_dirac_set();
    const ChargeSet c = build_charges(kappa_q);
    const FockOperators f = fock_ops(p.truncation, p.dimension, p.mass, p.omega);
    HamiltonianMatrix h = build_hamiltonian(nonminimal_momentum(f, g, c, p), g, p);
    h.kappa_q = kappa_q;
    return h;
}

namespace {

// Positional matching within each sign branch; the coarse and fine spectra
// have different lengths, so branches are aligned at zero.
void mark_converged(SpectrumResult& res, const std::vector<double>& fine) {
    const std::vector<double>& coarse = res.eigenvalues;
    res.converged.assign(coarse.size(), false);

    std::vector<std::size_t> cpos, cneg;
    for (std::size_t i = 0; i < coarse.size(); ++i)
        (coarse[i] < 0.0 ? cneg : cpos).push_back(i);
    std::vector<double> fpos, fneg;
    for (double v : fine) (v < 0.0 ? fneg : fpos).push_back(v);

    // Positive branch ascending from zero.
    for (std::size_t k = 0; k < cpos.size() && k < fpos.size(); ++k) {
        const double a = coarse[cpos[k]];
        const double b = fpos[k];
        if (std::abs(a - b) <= 1e-8 * std::max(1.0, std::abs(a)))
            res.converged[cpos[k]] = true;
    }
    // Negative branch descending from zero; both lists are ascending, so
    // walk them from the back.
    for (std::size_t k = 0; k < cneg.size() && k < fneg.size(); ++k) {
        const double a = coarse[cneg[cneg.size() - 1 - k]];
        const double b = fneg[fneg.size() - 1 - k];
        if (std::abs(a - b) <= 1e-8 * std::max(1.0, std::abs(a)))
            res.converged[cneg[cneg.size() - 1 - k]] = true;
    }
    res.converged_count = 0;
    for (bool f2 : res.converged)
        if (f2) ++res.converged_count;
}

}  // namespace

SpectrumResult spectrum(const HamiltonianMatrix& h, bool check_convergence) {
    const double scale = std::max(1.0, max_abs(h.matrix));
    EigenResult eig = herm_eigen(h.matrix, h.params.tolerance * scale);

    SpectrumResult res;
    res.eigenvalues = std::move(eig.eigenvalues);
    res.hermiticity_residual = h.hermiticity_residual;
    res.solver_residual = eig.residual;
    res.params = h.params;
    res.kappa_q = h.kappa_q;

    if (check_convergence) {
        OscParams fine_params = h.params;
        fine_params.truncation = 2 * h.params.truncation;
        const HamiltonianMatrix fine = assemble_hamiltonian(fine_params, h.kappa_q);
        const double fine_scale = std::max(1.0, max_abs(fine.matrix));
        EigenResult fine_eig =
            herm_eigen(fine.matrix, fine_params.tolerance * fine_scale);
        mark_converged(res, fine_eig.eigenvalues);
    }
    return res;
}

double lambda_from_moment(double m, double omega, double kappa,
                          double e_charge) {
    if (kappa * e_charge == 0.0)
        throw std::invalid_argument("lambda_from_moment: kappa*e must be nonzero");
    return 2.0 * m * m * omega / (kappa * e_charge);
}

double lambda_from_field(double m, double omega, double e_charge, double b) {
    if (e_charge * b == 0.0)
        throw std::invalid_argument("lambda_from_field: e*B must be nonzero");
    return 2.0 * m * omega / (e_charge * b);
}

double field_from_orbit(double m, double omega, double q_charge) {
    if (q_charge == 0.0)
        throw std::invalid_argument("field_from_orbit: q must be nonzero");
    return m * omega / q_charge;
}

std::size_t guard_band_count(std::size_t n, double guard_fraction) {
    if (!(guard_fraction > 0.0) || guard_fraction > 1.0)
        throw std::invalid_argument("guard_band_count: fraction must be in (0,1]");
    const double bound = guard_fraction * static_cast<double>(n);
    auto count = static_cast<std::size_t>(std::ceil(bound - 1e-12));
    if (count < 1) count = 1;
    return std::min(count, n);
}

namespace {

GuardMask expand_fock_mask(const std::vector<char>& fock_keep) {
    GuardMask mask;
    mask.keep.resize(fock_keep.size() * 8);
    for (std::size_t i = 0; i < fock_keep.size(); ++i)
        for (std::size_t s = 0; s < 8; ++s) mask.keep[i * 8 + s] = fock_keep[i];
    for (char k : mask.keep) mask.kept_count += (k != 0);
    return mask;
}

}  // namespace

GuardMask make_guard_mask(const FockOperators& f, double guard_fraction) {
    const std::size_t band = guard_band_count(f.n_per_axis, guard_fraction);
    std::vector<char> fock_keep(f.fock_dim, 0);
    if (f.dimension == 1) {
        for (std::size_t n = 0; n < band; ++n) fock_keep[n] = 1;
    } else {
        for (std::size_t n1 = 0; n1 < band; ++n1)
            for (std::size_t n2 = 0; n2 < band; ++n2)
                fock_keep[n1 * f.n_per_axis + n2] = 1;
    }
    return expand_fock_mask(fock_keep);
}

GuardMask make_shell_guard_mask(const FockOperators& f, double guard_fraction) {
    if (f.dimension != 2)
        throw std::invalid_argument("make_shell_guard_mask: requires d = 2");
    const std::size_t band = guard_band_count(f.n_per_axis, guard_fraction);
    std::vector<char> fock_keep(f.fock_dim, 0);
    for (std::size_t n1 = 0; n1 < f.n_per_axis; ++n1)
        for (std::size_t n2 = 0; n2 < f.n_per_axis; ++n2)
            if (n1 + n2 < band) fock_keep[n1 * f.n_per_axis + n2] = 1;
    return expand_fock_mask(fock_keep);
}

double guard_max_abs(const ComplexMatrix& m, const GuardMask& mask) {
    if (m.rows() != mask.keep.size() || m.cols() != mask.keep.size())
        throw std::invalid_argument("guard_max_abs: mask dimension mismatch");
    double worst = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (!mask.keep[i]) continue;
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (mask.keep[j]) worst = std::max(worst, std::abs(m(i, j)));
    }
    return worst;
}

ComplexMatrix guard_compress(const ComplexMatrix& m, const GuardMask& mask) {
    if (m.rows() != mask.keep.size() || m.cols() != mask.keep.size())
        throw std::invalid_argument("guard_compress: mask dimension mismatch");
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < mask.keep.size(); ++i)
        if (mask.keep[i]) idx.push_back(i);
    ComplexMatrix out(idx.size(), idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < idx.size(); ++j)
            out(i, j) = m(idx[i], idx[j]);
    return out;
}

}  // namespace nadosc
