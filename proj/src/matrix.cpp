#include "lq/matrix.hpp"

#include <cmath>
#include <numbers>

#include "lq/support.hpp"

namespace lq {

namespace {
constexpr double kPi = std::numbers::pi;

Matrix from_rows(std::initializer_list<std::initializer_list<cplx>> rows) {
    Matrix m(static_cast<int>(rows.size()));
    int r = 0;
    for (const auto &row : rows) {
        int c = 0;
        for (const auto &v : row) m.at(r, c++) = v;
        ++r;
    }
    return m;
}
}  // namespace

Matrix Matrix::identity(int dim) {
    Matrix m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = 1.0;
    return m;
}

Matrix Matrix::operator*(const Matrix &rhs) const {
    if (dim_ != rhs.dim_) throw internal_error("matrix dim mismatch in product");
    Matrix out(dim_);
    for (int r = 0; r < dim_; ++r)
        for (int k = 0; k < dim_; ++k) {
            cplx v = at(r, k);
            if (v == cplx{}) continue;
            for (int c = 0; c < dim_; ++c) out.at(r, c) += v * rhs.at(k, c);
        }
    return out;
}

Matrix Matrix::adjoint() const {
    Matrix out(dim_);
    for (int r = 0; r < dim_; ++r)
        for (int c = 0; c < dim_; ++c) out.at(c, r) = std::conj(at(r, c));
    return out;
}

Matrix Matrix::scaled(cplx c) const {
    Matrix out(dim_);
    for (int r = 0; r < dim_; ++r)
        for (int k = 0; k < dim_; ++k) out.at(r, k) = at(r, k) * c;
    return out;
}

Matrix Matrix::power(int k) const {
    Matrix base = k < 0 ? adjoint() : *this;
    int n = k < 0 ? -k : k;
    Matrix out = identity(dim_);
    for (int i = 0; i < n; ++i) out = base * out;
    return out;
}

double Matrix::max_abs_diff(const Matrix &rhs) const {
    if (dim_ != rhs.dim_) throw internal_error("matrix dim mismatch in diff");
    double d = 0;
    for (size_t i = 0; i < a_.size(); ++i) d = std::max(d, std::abs(a_[i] - rhs.a_[i]));
    return d;
}

Matrix kron(const Matrix &a, const Matrix &b) {
    Matrix out(a.dim() * b.dim());
    for (int ra = 0; ra < a.dim(); ++ra)
        for (int ca = 0; ca < a.dim(); ++ca) {
            cplx v = a.at(ra, ca);
            if (v == cplx{}) continue;
            for (int rb = 0; rb < b.dim(); ++rb)
                for (int cb = 0; cb < b.dim(); ++cb)
                    out.at(ra * b.dim() + rb, ca * b.dim() + cb) = v * b.at(rb, cb);
        }
    return out;
}

Matrix controlled(const Matrix &m) {
    if (!is_unitary(m)) throw internal_error("controlled() on non-unitary matrix");
    Matrix out(2 * m.dim());
    for (int i = 0; i < m.dim(); ++i) out.at(i, i) = 1.0;
    for (int r = 0; r < m.dim(); ++r)
        for (int c = 0; c < m.dim(); ++c) out.at(m.dim() + r, m.dim() + c) = m.at(r, c);
    return out;
}

bool is_unitary(const Matrix &m, double tol) {
    return (m * m.adjoint()).max_abs_diff(Matrix::identity(m.dim())) <= tol;
}

double dev_exact(const Matrix &a, const Matrix &b) { return a.max_abs_diff(b); }

double dev_upto_phase(const Matrix &a, const Matrix &b) {
    // Scalar from b's largest-magnitude entry to avoid near-zero division.
    int br = 0, bc = 0;
    double best = -1;
    for (int r = 0; r < b.dim(); ++r)
        for (int c = 0; c < b.dim(); ++c)
            if (std::abs(b.at(r, c)) > best) { best = std::abs(b.at(r, c)); br = r; bc = c; }
    if (best <= 0) return a.max_abs_diff(b);
    cplx phase = a.at(br, bc) / b.at(br, bc);
    if (std::abs(std::abs(phase) - 1.0) > 1e-6) return 1e9;
    return a.max_abs_diff(b.scaled(phase));
}

bool eq_exact(const Matrix &a, const Matrix &b, double tol) {
    return a.dim() == b.dim() && dev_exact(a, b) <= tol;
}

bool eq_upto_phase(const Matrix &a, const Matrix &b, double tol) {
    return a.dim() == b.dim() && dev_upto_phase(a, b) <= tol;
}

Matrix gate_matrix(GateKind k, const std::vector<double> &params, bool inverted) {
    using std::polar;
    const cplx i1(0, 1);
    const double s2 = 1.0 / std::sqrt(2.0);
    auto P = [&](double a) { return from_rows({{1, 0}, {0, polar(1.0, a)}}); };
    auto Rzm = [&](double a) {
        return from_rows({{polar(1.0, -a / 2), 0}, {0, polar(1.0, a / 2)}});
    };
    auto Hm = from_rows({{s2, s2}, {s2, -s2}});
    auto Um = [&](double th, double ph, double lm) {
        Matrix m = P(ph + kPi / 2) * Hm * P(th) * Hm * P(lm - kPi / 2);
        return m.scaled(polar(1.0, th / 2));
    };
    if (static_cast<int>(params.size()) != n_params(k))
        throw internal_error("gate_matrix: wrong parameter count");

    Matrix m;
    switch (k) {
        case GateKind::X: m = from_rows({{0, 1}, {1, 0}}); break;
        case GateKind::Y: m = from_rows({{0, -i1}, {i1, 0}}); break;
        case GateKind::Z: m = from_rows({{1, 0}, {0, -1}}); break;
        case GateKind::H: m = Hm; break;
        case GateKind::S: m = from_rows({{1, 0}, {0, i1}}); break;
        case GateKind::Sdg: m = from_rows({{1, 0}, {0, -i1}}); break;
        case GateKind::T: m = P(kPi / 4); break;
        case GateKind::Tdg: m = P(-kPi / 4); break;
        case GateKind::SX:
            m = from_rows({{0.5 * cplx(1, 1), 0.5 * cplx(1, -1)},
                           {0.5 * cplx(1, -1), 0.5 * cplx(1, 1)}});
            break;
        case GateKind::IX: m = from_rows({{0, i1}, {i1, 0}}); break;
        case GateKind::Omega: m = Matrix::identity(2).scaled(polar(1.0, kPi / 4)); break;
        case GateKind::E:
            m = (Hm * from_rows({{1, 0}, {0, i1}}).power(3)).scaled(polar(1.0, 3 * kPi / 4));
            break;
        case GateKind::W:
            m = from_rows({{1, 0, 0, 0}, {0, s2, s2, 0}, {0, s2, -s2, 0}, {0, 0, 0, 1}});
            break;
        case GateKind::Swap:
            m = from_rows({{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}});
            break;
        case GateKind::Rx: {
            double a = params[0];
            cplx c = std::cos(a / 2), s = -i1 * std::sin(a / 2);
            m = from_rows({{c, s}, {s, c}});
            break;
        }
        case GateKind::Ry: {
            double a = params[0];
            double c = std::cos(a / 2), s = std::sin(a / 2);
            m = from_rows({{c, -s}, {s, c}});
            break;
        }
        case GateKind::Rz: m = Rzm(params[0]); break;
        case GateKind::P: m = P(params[0]); break;
        case GateKind::ExpZ: m = Rzm(2 * params[0]); break;
        case GateKind::RGate: m = P(2 * kPi / std::pow(2.0, params[0])); break;
        case GateKind::U: m = Um(params[0], params[1], params[2]); break;
        case GateKind::U1: m = P(params[0]); break;
        case GateKind::U2:
            m = Um(kPi / 2, params[0], params[1]).scaled(polar(1.0, -(params[0] + params[1]) / 2));
            break;
        case GateKind::U3:
            m = Um(params[0], params[1], params[2])
                    .scaled(polar(1.0, -(params[1] + params[2]) / 2));
            break;
        case GateKind::CU:
            m = controlled(Um(params[0], params[1], params[2]).scaled(polar(1.0, params[3])));
            break;
        case GateKind::GPhase: {
            m = Matrix(1);
            m.at(0, 0) = polar(1.0, params[0]);
            break;
        }
    }
    return inverted ? m.adjoint() : m;
}

Matrix embed(const Matrix &g, const std::vector<int> &wires, int n,
             const std::vector<std::pair<int, bool>> &controls) {
    if (n > kMaxOracleWires) throw internal_error("embed: too many wires for oracle");
    int k = static_cast<int>(wires.size());
    if (g.dim() != (1 << k)) throw internal_error("embed: gate dim vs wire count");
    int dim = 1 << n;
    Matrix M(dim);
    for (int col = 0; col < dim; ++col) {
        auto bit = [&](int w) { return (col >> (n - 1 - w)) & 1; };
        bool ok = true;
        for (auto [w, pol] : controls)
            if (bit(w) != (pol ? 1 : 0)) { ok = false; break; }
        if (!ok) {
            M.at(col, col) += 1.0;
            continue;
        }
        int sub = 0;
        for (int w : wires) sub = (sub << 1) | bit(w);
        for (int sub2 = 0; sub2 < g.dim(); ++sub2) {
            cplx amp = g.at(sub2, sub);
            if (amp == cplx{}) continue;
            int row = col;
            for (int i = 0; i < k; ++i) {
                int w = wires[i];
                int b = (sub2 >> (k - 1 - i)) & 1;
                int mask = 1 << (n - 1 - w);
                row = (row & ~mask) | (b ? mask : 0);
            }
            M.at(row, col) += amp;
        }
    }
    return M;
}

Matrix gphase_embed(double angle, const std::vector<std::pair<int, bool>> &controls, int n) {
    int dim = 1 << n;
    Matrix M(dim);
    for (int col = 0; col < dim; ++col) {
        bool ok = true;
        for (auto [w, pol] : controls)
            if (((col >> (n - 1 - w)) & 1) != (pol ? 1 : 0)) { ok = false; break; }
        M.at(col, col) = ok ? std::polar(1.0, angle) : cplx(1.0);
    }
    return M;
}

bool ancilla_identity_check(const Matrix &full, const Matrix &target,
                            const std::vector<int> &anc, double tol, bool upto_phase) {
    int k = static_cast<int>(anc.size());
    int dim_n = target.dim();
    int dim_k = 1 << k;
    if (full.dim() != dim_n * dim_k) throw internal_error("ancilla check: dim mismatch");
    int anc_index = 0;
    for (int b : anc) anc_index = (anc_index << 1) | b;
    cplx phase(1.0);
    bool have_phase = false;
    for (int b = 0; b < dim_n; ++b) {
        int colin = b * dim_k + anc_index;
        if (upto_phase && !have_phase) {
            // Phase from the largest expected entry of the first column.
            int best_r = 0;
            double best = -1;
            for (int r = 0; r < dim_n; ++r)
                if (std::abs(target.at(r, b)) > best) { best = std::abs(target.at(r, b)); best_r = r; }
            cplx expect = target.at(best_r, b);
            if (std::abs(expect) > 1e-6) {
                phase = full.at(best_r * dim_k + anc_index, colin) / expect;
                if (std::abs(std::abs(phase) - 1.0) > 1e-6) return false;
                have_phase = true;
            }
        }
        for (int row = 0; row < full.dim(); ++row) {
            cplx expect{};
            if (row % dim_k == anc_index) expect = phase * target.at(row / dim_k, b);
            if (std::abs(full.at(row, colin) - expect) > tol) return false;
        }
    }
    return true;
}

}  // namespace lq
