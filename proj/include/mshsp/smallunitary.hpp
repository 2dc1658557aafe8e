// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace mshsp::dihedral {

using cplx = std::complex<double>;

/// Small dense complex matrix for local operators; dim in {1, 2, 4, 8}.
class SmallUnitary {
  public:
    explicit SmallUnitary(size_t dim) : dim_(dim), a_(dim * dim, cplx{0, 0}) {
        if (dim != 1 && dim != 2 && dim != 4 && dim != 8) {
            throw std::invalid_argument("SmallUnitary: dim must be 1, 2, 4 or 8");
        }
    }

    static SmallUnitary identity(size_t dim) {
        SmallUnitary u(dim);
        for (size_t i = 0; i < dim; i++) {
            u.at(i, i) = 1;
        }
        return u;
    }

    size_t dim() const { return dim_; }

    cplx& at(size_t r, size_t c) { return a_[r * dim_ + c]; }
    const cplx& at(size_t r, size_t c) const { return a_[r * dim_ + c]; }

    SmallUnitary operator*(const SmallUnitary& other) const {
        if (dim_ != other.dim_) {
            throw std::invalid_argument("SmallUnitary: dim mismatch in product");
        }
        SmallUnitary r(dim_);
        for (size_t i = 0; i < dim_; i++) {
            for (size_t k = 0; k < dim_; k++) {
                cplx aik = at(i, k);
                if (aik == cplx{0, 0}) {
                    continue;
                }
                for (size_t j = 0; j < dim_; j++) {
                    r.at(i, j) += aik * other.at(k, j);
                }
            }
        }
        return r;
    }

    SmallUnitary adjoint() const {
        SmallUnitary r(dim_);
        for (size_t i = 0; i < dim_; i++) {
            for (size_t j = 0; j < dim_; j++) {
                r.at(i, j) = std::conj(at(j, i));
            }
        }
        return r;
    }

    /// Kronecker product where `low` indexes the least-significant part:
    /// result(i_lo + d_lo*i_hi, j_lo + d_lo*j_hi) = low(i_lo,j_lo)*high(i_hi,j_hi).
    static SmallUnitary kron(const SmallUnitary& low, const SmallUnitary& high) {
        SmallUnitary r(low.dim_ * high.dim_);
        for (size_t ih = 0; ih < high.dim_; ih++) {
            for (size_t jh = 0; jh < high.dim_; jh++) {
                for (size_t il = 0; il < low.dim_; il++) {
                    for (size_t jl = 0; jl < low.dim_; jl++) {
                        r.at(il + low.dim_ * ih, jl + low.dim_ * jh) =
                            low.at(il, jl) * high.at(ih, jh);
                    }
                }
            }
        }
        return r;
    }

    bool is_unitary(double tol = 1e-12) const {
        SmallUnitary p = *this * adjoint();
        for (size_t i = 0; i < dim_; i++) {
            for (size_t j = 0; j < dim_; j++) {
                cplx want = (i == j) ? cplx{1, 0} : cplx{0, 0};
                if (std::abs(p.at(i, j) - want) > tol) {
                    return false;
                }
            }
        }
        return true;
    }

    bool approx_equal(const SmallUnitary& other, double tol = 1e-12) const {
        if (dim_ != other.dim_) {
            return false;
        }
        for (size_t i = 0; i < a_.size(); i++) {
            if (std::abs(a_[i] - other.a_[i]) > tol) {
                return false;
            }
        }
        return true;
    }

  private:
    size_t dim_;
    std::vector<cplx> a_;
};

inline SmallUnitary pauli_x() {
    SmallUnitary u(2);
    u.at(0, 1) = 1;
    u.at(1, 0) = 1;
    return u;
}

inline SmallUnitary pauli_y() {
    SmallUnitary u(2);
    u.at(0, 1) = cplx{0, -1};
    u.at(1, 0) = cplx{0, 1};
    return u;
}

inline SmallUnitary pauli_z() {
    SmallUnitary u(2);
    u.at(0, 0) = 1;
    u.at(1, 1) = -1;
    return u;
}

inline SmallUnitary hadamard() {
    const double s = 1.0 / std::numbers::sqrt2;
    SmallUnitary u(2);
    u.at(0, 0) = s;
    u.at(0, 1) = s;
    u.at(1, 0) = s;
    u.at(1, 1) = -s;
    return u;
}

/// e^{i pi k Z / 4}; the building block of the doubled representation.
inline SmallUnitary phase_quarter(int k) {
    SmallUnitary u(2);
    double a = std::numbers::pi * k / 4.0;
    u.at(0, 0) = std::polar(1.0, a);
    u.at(1, 1) = std::polar(1.0, -a);
    return u;
}

/// S = diag(1, i). Conjugation by S† maps D^1(1,v,1) to D^1(1,v,0).
inline SmallUnitary gate_s() {
    SmallUnitary u(2);
    u.at(0, 0) = 1;
    u.at(1, 1) = cplx{0, 1};
    return u;
}

/// T = e^{i pi Z / 8}. Conjugation by T lowers the rotation power by one
/// next to a reflection: T X e^{i pi k Z/4} T† = X e^{i pi (k-1) Z/4}.
inline SmallUnitary gate_t() {
    SmallUnitary u(2);
    double a = std::numbers::pi / 8.0;
    u.at(0, 0) = std::polar(1.0, a);
    u.at(1, 1) = std::polar(1.0, -a);
    return u;
}

}  // namespace mshsp::dihedral
