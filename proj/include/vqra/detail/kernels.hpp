// Copyright 2026 The vqra Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Strided gate kernels shared by the statevector and density-matrix paths.
// All kernels act on `data[idx * stride]` for idx in [0, 2^k) and use the
// qubit-0-is-MSB index convention: qubit q owns bit (k-1-q).

#include <complex>
#include <cstdint>

namespace vqra::detail {

using cdouble = std::complex<double>;

inline std::uint64_t qubit_mask(int k, int qubit) {
  return std::uint64_t(1) << (k - 1 - qubit);
}

/// exp(-i theta X / 2) with cos/sin of the half angle precomputed.
/// `conjugated` applies the entrywise complex conjugate of the matrix.
inline void apply_rx(cdouble* data, std::ptrdiff_t stride, int k, int qubit,
                     double cos_half, double sin_half, bool conjugated = false) {
  const std::uint64_t dim = std::uint64_t(1) << k;
  const std::uint64_t mask = qubit_mask(k, qubit);
  const double s = conjugated ? -sin_half : sin_half;
  for (std::uint64_t base = 0; base < dim; base += 2 * mask) {
    for (std::uint64_t off = 0; off < mask; ++off) {
      cdouble& a0 = data[static_cast<std::ptrdiff_t>(base + off) * stride];
      cdouble& a1 = data[static_cast<std::ptrdiff_t>(base + off + mask) * stride];
      const cdouble t0 = a0;
      const cdouble t1 = a1;
      // [c, -i s; -i s, c]
      a0 = cdouble(cos_half * t0.real() + s * t1.imag(),
                   cos_half * t0.imag() - s * t1.real());
      a1 = cdouble(s * t0.imag() + cos_half * t1.real(),
                   -s * t0.real() + cos_half * t1.imag());
    }
  }
}

/// exp(-i theta Y / 2); real matrix [c, -s; s, c], self-conjugate.
inline void apply_ry(cdouble* data, std::ptrdiff_t stride, int k, int qubit,
                     double cos_half, double sin_half) {
  const std::uint64_t dim = std::uint64_t(1) << k;
  const std::uint64_t mask = qubit_mask(k, qubit);
  for (std::uint64_t base = 0; base < dim; base += 2 * mask) {
    for (std::uint64_t off = 0; off < mask; ++off) {
      cdouble& a0 = data[static_cast<std::ptrdiff_t>(base + off) * stride];
      cdouble& a1 = data[static_cast<std::ptrdiff_t>(base + off + mask) * stride];
      const cdouble t0 = a0;
      const cdouble t1 = a1;
      a0 = cos_half * t0 - sin_half * t1;
      a1 = sin_half * t0 + cos_half * t1;
    }
  }
}

/// CNOT; real permutation matrix, self-conjugate.
inline void apply_cnot(cdouble* data, std::ptrdiff_t stride, int k, int control,
                       int target) {
  const std::uint64_t dim = std::uint64_t(1) << k;
  const std::uint64_t cmask = qubit_mask(k, control);
  const std::uint64_t tmask = qubit_mask(k, target);
  for (std::uint64_t i = 0; i < dim; ++i) {
    if ((i & cmask) != 0 && (i & tmask) == 0) {
      std::swap(data[static_cast<std::ptrdiff_t>(i) * stride],
                data[static_cast<std::ptrdiff_t>(i | tmask) * stride]);
    }
  }
}

/// exp(-i xi X(x)X(y)) = cos(xi) I - i sin(xi) X(x)X(y); note the full angle.
inline void apply_xx(cdouble* data, std::ptrdiff_t stride, int k, int qa, int qb,
                     double cos_full, double sin_full, bool conjugated = false) {
  const std::uint64_t dim = std::uint64_t(1) << k;
  const std::uint64_t flip = qubit_mask(k, qa) | qubit_mask(k, qb);
  const double s = conjugated ? -sin_full : sin_full;
  for (std::uint64_t i = 0; i < dim; ++i) {
    const std::uint64_t j = i ^ flip;
    if (j < i) continue;  // each unordered pair once
    cdouble& ai = data[static_cast<std::ptrdiff_t>(i) * stride];
    cdouble& aj = data[static_cast<std::ptrdiff_t>(j) * stride];
    const cdouble ti = ai;
    const cdouble tj = aj;
    ai = cdouble(cos_full * ti.real() + s * tj.imag(),
                 cos_full * ti.imag() - s * tj.real());
    aj = cdouble(cos_full * tj.real() + s * ti.imag(),
                 cos_full * tj.imag() - s * ti.real());
  }
}

/// Hadamard; real symmetric, self-conjugate. Internal to the literal
/// swap-test circuit (not a public GateOp).
inline void apply_h(cdouble* data, std::ptrdiff_t stride, int k, int qubit) {
  constexpr double kInvSqrt2 = 0.7071067811865475244;
  const std::uint64_t dim = std::uint64_t(1) << k;
  const std::uint64_t mask = qubit_mask(k, qubit);
  for (std::uint64_t base = 0; base < dim; base += 2 * mask) {
    for (std::uint64_t off = 0; off < mask; ++off) {
      cdouble& a0 = data[static_cast<std::ptrdiff_t>(base + off) * stride];
      cdouble& a1 = data[static_cast<std::ptrdiff_t>(base + off + mask) * stride];
      const cdouble t0 = a0;
      const cdouble t1 = a1;
      a0 = kInvSqrt2 * (t0 + t1);
      a1 = kInvSqrt2 * (t0 - t1);
    }
  }
}

/// Controlled SWAP of qubits (x, y) on control `ctrl`; real permutation.
inline void apply_cswap(cdouble* data, std::ptrdiff_t stride, int k, int ctrl,
                        int qx, int qy) {
  const std::uint64_t dim = std::uint64_t(1) << k;
  const std::uint64_t cmask = qubit_mask(k, ctrl);
  const std::uint64_t xmask = qubit_mask(k, qx);
  const std::uint64_t ymask = qubit_mask(k, qy);
  for (std::uint64_t i = 0; i < dim; ++i) {
    if ((i & cmask) != 0 && (i & xmask) != 0 && (i & ymask) == 0) {
      std::swap(data[static_cast<std::ptrdiff_t>(i) * stride],
                data[static_cast<std::ptrdiff_t>((i ^ xmask) | ymask) * stride]);
    }
  }
}

/// General 2x2 matrix action on one qubit (used for Kraus operators).
inline void apply_2x2(cdouble* data, std::ptrdiff_t stride, int k, int qubit,
                      cdouble m00, cdouble m01, cdouble m10, cdouble m11) {
  const std::uint64_t dim = std::uint64_t(1) << k;
  const std::uint64_t mask = qubit_mask(k, qubit);
  for (std::uint64_t base = 0; base < dim; base += 2 * mask) {
    for (std::uint64_t off = 0; off < mask; ++off) {
      cdouble& a0 = data[static_cast<std::ptrdiff_t>(base + off) * stride];
      cdouble& a1 = data[static_cast<std::ptrdiff_t>(base + off + mask) * stride];
      const cdouble t0 = a0;
      const cdouble t1 = a1;
      a0 = m00 * t0 + m01 * t1;
      a1 = m10 * t0 + m11 * t1;
    }
  }
}

}  // namespace vqra::detail
