// dense_kernels.hpp — low-level dense complex kernels.
//
// Every kernel comes in two flavours: the default one, whose inner loops are
// OpenMP-parallel (each output element is written by exactly one thread, so
// results are bitwise independent of the thread count), and a *_serial
// reference used by the tests and the benchmark.

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace pen::kernels {

using cplx = std::complex<double>;

// out = a * b, all n x n row-major.
void matmul(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> out, std::size_t n);
void matmul_serial(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> out, std::size_t n);

// out = a (na x na) Kronecker b (nb x nb); row-major over the left factor.
void kron(std::span<const cplx> a, std::size_t na, std::span<const cplx> b, std::size_t nb,
          std::span<cplx> out);
void kron_serial(std::span<const cplx> a, std::size_t na, std::span<const cplx> b, std::size_t nb,
                 std::span<cplx> out);

// Transpose the registers flagged in `mask` (one entry per register in `dims`).
void partial_transpose(std::span<const cplx> in, std::span<cplx> out,
                       const std::vector<std::size_t>& dims, const std::vector<std::uint8_t>& mask);
void partial_transpose_serial(std::span<const cplx> in, std::span<cplx> out,
                              const std::vector<std::size_t>& dims,
                              const std::vector<std::uint8_t>& mask);

// Trace out the registers flagged in `mask`; `out` is sized for the kept registers.
void partial_trace(std::span<const cplx> in, std::span<cplx> out,
                   const std::vector<std::size_t>& dims, const std::vector<std::uint8_t>& mask);
void partial_trace_serial(std::span<const cplx> in, std::span<cplx> out,
                          const std::vector<std::size_t>& dims,
                          const std::vector<std::uint8_t>& mask);

} // namespace pen::kernels
