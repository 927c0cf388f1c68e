#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "lq/gates.hpp"

namespace lq {

using cplx = std::complex<double>;

// Dense complex square matrix; dimensions are powers of two, capped at
// 2^7 = 128 (the largest identity in the catalog needs 7 wires).
class Matrix {
  public:
    Matrix() = default;
    explicit Matrix(int dim) : dim_(dim), a_(static_cast<size_t>(dim) * dim) {}

    static Matrix identity(int dim);

    int dim() const { return dim_; }
    cplx &at(int r, int c) { return a_[static_cast<size_t>(r) * dim_ + c]; }
    const cplx &at(int r, int c) const { return a_[static_cast<size_t>(r) * dim_ + c]; }

    Matrix operator*(const Matrix &rhs) const;
    Matrix adjoint() const;
    Matrix scaled(cplx c) const;
    Matrix power(int k) const;  // negative k uses the adjoint

    double max_abs_diff(const Matrix &rhs) const;

  private:
    int dim_ = 0;
    std::vector<cplx> a_;
};

constexpr int kMaxOracleWires = 7;

Matrix kron(const Matrix &a, const Matrix &b);
Matrix controlled(const Matrix &m);  // [I 0; 0 m]

bool is_unitary(const Matrix &m, double tol = 1e-10);
bool eq_exact(const Matrix &a, const Matrix &b, double tol);
// True iff a == c*b for some |c|=1; c is taken from b's largest-magnitude entry.
bool eq_upto_phase(const Matrix &a, const Matrix &b, double tol);
double dev_exact(const Matrix &a, const Matrix &b);
double dev_upto_phase(const Matrix &a, const Matrix &b);

// Base semantics of a gate kind (dim 2, or 4 for two-target kinds).
Matrix gate_matrix(GateKind k, const std::vector<double> &params, bool inverted = false);

// Embed `g` acting on `wires` (most-significant wire first across the
// register of n wires; wire 0 is the most significant bit) with the given
// (wire, polarity) controls.
Matrix embed(const Matrix &g, const std::vector<int> &wires, int n,
             const std::vector<std::pair<int, bool>> &controls = {});
Matrix gphase_embed(double angle, const std::vector<std::pair<int, bool>> &controls, int n);

// full acts on n+k wires with the k ancillas *last*; checks that for every
// basis input with ancillas at `anc`, full acts as target and returns the
// ancillas to `anc` (exactly, or up to one common global phase).
bool ancilla_identity_check(const Matrix &full, const Matrix &target,
                            const std::vector<int> &anc, double tol,
                            bool upto_phase = false);

}  // namespace lq
