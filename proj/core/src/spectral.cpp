#include "collatzdb/spectral.hpp"

#include "collatzdb/errors.hpp"

namespace collatzdb {

CountMatrix::CountMatrix(std::size_t dimension)
    : dim_(dimension), entries_(dimension * dimension, BigInt{0}) {}

CountMatrix CountMatrix::identity(std::size_t dimension) {
    CountMatrix m(dimension);
    for (std::size_t i = 0; i < dimension; ++i) m(i, i) = 1;
    return m;
}

std::vector<BigInt> CountMatrix::row_sums() const {
    std::vector<BigInt> out(dim_, BigInt{0});
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) out[i] += (*this)(i, j);
    }
    return out;
}

std::vector<BigInt> CountMatrix::column_sums() const {
    std::vector<BigInt> out(dim_, BigInt{0});
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) out[j] += (*this)(i, j);
    }
    return out;
}

bool CountMatrix::all_entries_equal() const {
    for (const BigInt& e : entries_) {
        if (e != entries_.front()) return false;
    }
    return true;
}

CountMatrix operator*(const CountMatrix& a, const CountMatrix& b) {
    if (a.dim_ != b.dim_) throw InvalidInput("matrix dimensions differ");
    const std::size_t n = a.dim_;
    // nonzero columns of each row of b; adjacency powers start out very sparse
    std::vector<std::vector<std::size_t>> support(n);
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t j = 0; j < n; ++j) {
            if (!b(k, j).is_zero()) support[k].push_back(j);
        }
    }
    CountMatrix c(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const BigInt& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j : support[k]) c(i, j) += aik * b(k, j);
        }
    }
    return c;
}

CountMatrix adjacency_matrix(const LabeledDigraph& g, const Limits& limits) {
    if (g.vertex_count() > limits.max_matrix_dimension) {
        throw ResourceLimitExceeded("adjacency matrix of dimension " +
                                    std::to_string(g.vertex_count()) + " exceeds the limit of " +
                                    std::to_string(limits.max_matrix_dimension));
    }
    CountMatrix m(static_cast<std::size_t>(g.vertex_count()));
    for (const auto& [s, t] : g.arc_set()) m(s, t) += 1;
    return m;
}

CountMatrix matrix_power(const CountMatrix& m, std::uint64_t exponent) {
    CountMatrix result = CountMatrix::identity(m.dimension());
    CountMatrix base = m;
    while (exponent > 0) {
        if (exponent & 1U) result = result * base;
        exponent >>= 1U;
        if (exponent > 0) base = base * base;
    }
    return result;
}

UniformPowerReport check_uniform_power(const BranchMap& f, unsigned k, std::uint64_t max_exponent,
                                       const Limits& limits) {
    if (k < 1) throw InvalidInput("check_uniform_power needs k >= 1");
    if (max_exponent < k) {
        throw InvalidInput("check_uniform_power needs max_exponent >= k");
    }
    const std::uint64_t m = require_power_within(f.base(), k, limits.max_matrix_dimension,
                                                 "adjacency matrix");
    const CountMatrix a = adjacency_matrix(build_modular_graph(f, m, limits), limits);

    UniformPowerReport report;
    CountMatrix power = matrix_power(a, k);
    BigInt expected = 1;
    for (std::uint64_t l = k; l <= max_exponent; ++l) {
        for (std::size_t i = 0; i < power.dimension() && report.uniform; ++i) {
            for (std::size_t j = 0; j < power.dimension(); ++j) {
                if (power(i, j) != expected) {
                    report.uniform = false;
                    report.first_violation = UniformPowerViolation{l, i, j, power(i, j), expected};
                    break;
                }
            }
        }
        if (!report.uniform || l == max_exponent) break;
        power = power * a;
        expected *= f.base();
    }
    return report;
}

}  // namespace collatzdb
