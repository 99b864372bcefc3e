#include "pen/dense_kernels.hpp"

namespace pen::kernels {

namespace {

// Mixed-radix helpers. Register 0 is the most significant digit, matching the
// Kronecker convention (row-major over the left factor).
std::vector<std::size_t> strides_of(const std::vector<std::size_t>& dims) {
    std::vector<std::size_t> s(dims.size(), 1);
    for (std::size_t r = dims.size(); r-- > 1;) s[r - 1] = s[r] * dims[r];
    return s;
}

std::size_t total_dim(const std::vector<std::size_t>& dims) {
    std::size_t n = 1;
    for (auto d : dims) n *= d;
    return n;
}

} // namespace

void matmul_serial(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> out,
                   std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        cplx* row = out.data() + i * n;
        for (std::size_t j = 0; j < n; ++j) row[j] = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            const cplx aik = a[i * n + k];
            if (aik == cplx{}) continue;
            const cplx* brow = b.data() + k * n;
            for (std::size_t j = 0; j < n; ++j) row[j] += aik * brow[j];
        }
    }
}

void matmul(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> out, std::size_t n) {
#pragma omp parallel for schedule(static) if (n >= 64)
    for (std::size_t i = 0; i < n; ++i) {
        cplx* row = out.data() + i * n;
        for (std::size_t j = 0; j < n; ++j) row[j] = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            const cplx aik = a[i * n + k];
            if (aik == cplx{}) continue;
            const cplx* brow = b.data() + k * n;
            for (std::size_t j = 0; j < n; ++j) row[j] += aik * brow[j];
        }
    }
}

void kron_serial(std::span<const cplx> a, std::size_t na, std::span<const cplx> b, std::size_t nb,
                 std::span<cplx> out) {
    const std::size_t n = na * nb;
    for (std::size_t ia = 0; ia < na; ++ia)
        for (std::size_t ib = 0; ib < nb; ++ib) {
            cplx* row = out.data() + (ia * nb + ib) * n;
            const cplx* arow = a.data() + ia * na;
            const cplx* brow = b.data() + ib * nb;
            for (std::size_t ja = 0; ja < na; ++ja)
                for (std::size_t jb = 0; jb < nb; ++jb) row[ja * nb + jb] = arow[ja] * brow[jb];
        }
}

void kron(std::span<const cplx> a, std::size_t na, std::span<const cplx> b, std::size_t nb,
          std::span<cplx> out) {
    const std::size_t n = na * nb;
#pragma omp parallel for schedule(static) collapse(2) if (n >= 64)
    for (std::size_t ia = 0; ia < na; ++ia)
        for (std::size_t ib = 0; ib < nb; ++ib) {
            cplx* row = out.data() + (ia * nb + ib) * n;
            const cplx* arow = a.data() + ia * na;
            const cplx* brow = b.data() + ib * nb;
            for (std::size_t ja = 0; ja < na; ++ja)
                for (std::size_t jb = 0; jb < nb; ++jb) row[ja * nb + jb] = arow[ja] * brow[jb];
        }
}

namespace {

inline std::size_t swap_digits(std::size_t i, std::size_t j, const std::vector<std::size_t>& dims,
                               const std::vector<std::size_t>& strides,
                               const std::vector<std::uint8_t>& mask, bool row) {
    // Rebuild the row (or column) index with the masked digits taken from the
    // other index.
    std::size_t v = 0;
    for (std::size_t r = 0; r < dims.size(); ++r) {
        const std::size_t di = (i / strides[r]) % dims[r];
        const std::size_t dj = (j / strides[r]) % dims[r];
        const std::size_t keep = row ? (mask[r] ? dj : di) : (mask[r] ? di : dj);
        v += keep * strides[r];
    }
    return v;
}

} // namespace

void partial_transpose_serial(std::span<const cplx> in, std::span<cplx> out,
                              const std::vector<std::size_t>& dims,
                              const std::vector<std::uint8_t>& mask) {
    const auto strides = strides_of(dims);
    const std::size_t n = total_dim(dims);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t ii = swap_digits(i, j, dims, strides, mask, true);
            const std::size_t jj = swap_digits(i, j, dims, strides, mask, false);
            out[ii * n + jj] = in[i * n + j];
        }
}

void partial_transpose(std::span<const cplx> in, std::span<cplx> out,
                       const std::vector<std::size_t>& dims,
                       const std::vector<std::uint8_t>& mask) {
    const auto strides = strides_of(dims);
    const std::size_t n = total_dim(dims);
#pragma omp parallel for schedule(static) if (n >= 64)
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t ii = swap_digits(i, j, dims, strides, mask, true);
            const std::size_t jj = swap_digits(i, j, dims, strides, mask, false);
            out[ii * n + jj] = in[i * n + j];
        }
}

namespace {

struct TraceGeometry {
    std::size_t n_in = 1;     // input dimension
    std::size_t n_keep = 1;   // output dimension
    std::size_t n_drop = 1;   // dimension of the traced factor
    std::vector<std::size_t> keep_stride;  // input stride per kept register
    std::vector<std::size_t> keep_dim;
    std::vector<std::size_t> drop_stride;  // input stride per traced register
    std::vector<std::size_t> drop_dim;
};

TraceGeometry trace_geometry(const std::vector<std::size_t>& dims,
                             const std::vector<std::uint8_t>& mask) {
    TraceGeometry g;
    const auto strides = strides_of(dims);
    g.n_in = total_dim(dims);
    for (std::size_t r = 0; r < dims.size(); ++r) {
        if (mask[r]) {
            g.drop_stride.push_back(strides[r]);
            g.drop_dim.push_back(dims[r]);
            g.n_drop *= dims[r];
        } else {
            g.keep_stride.push_back(strides[r]);
            g.keep_dim.push_back(dims[r]);
            g.n_keep *= dims[r];
        }
    }
    return g;
}

inline std::size_t expand(std::size_t packed, const std::vector<std::size_t>& dim,
                          const std::vector<std::size_t>& stride) {
    std::size_t v = 0;
    for (std::size_t r = dim.size(); r-- > 0;) {
        v += (packed % dim[r]) * stride[r];
        packed /= dim[r];
    }
    return v;
}

inline void partial_trace_row(const TraceGeometry& g, std::span<const cplx> in, std::span<cplx> out,
                              std::size_t a) {
    const std::size_t ia = expand(a, g.keep_dim, g.keep_stride);
    for (std::size_t b = 0; b < g.n_keep; ++b) {
        const std::size_t jb = expand(b, g.keep_dim, g.keep_stride);
        cplx acc = 0.0;
        for (std::size_t t = 0; t < g.n_drop; ++t) {
            const std::size_t it = expand(t, g.drop_dim, g.drop_stride);
            acc += in[(ia + it) * g.n_in + (jb + it)];
        }
        out[a * g.n_keep + b] = acc;
    }
}

} // namespace

void partial_trace_serial(std::span<const cplx> in, std::span<cplx> out,
                          const std::vector<std::size_t>& dims,
                          const std::vector<std::uint8_t>& mask) {
    const TraceGeometry g = trace_geometry(dims, mask);
    for (std::size_t a = 0; a < g.n_keep; ++a) partial_trace_row(g, in, out, a);
}

void partial_trace(std::span<const cplx> in, std::span<cplx> out,
                   const std::vector<std::size_t>& dims, const std::vector<std::uint8_t>& mask) {
    const TraceGeometry g = trace_geometry(dims, mask);
#pragma omp parallel for schedule(static) if (g.n_keep >= 64)
    for (std::size_t a = 0; a < g.n_keep; ++a) partial_trace_row(g, in, out, a);
}

} // namespace pen::kernels
