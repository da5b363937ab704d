#include "rhomax/linalg.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

namespace rhomax {

IntMat::IntMat(std::initializer_list<std::initializer_list<long>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    a_.resize(rows_ * cols_);
    std::size_t i = 0;
    for (const auto& row : init) {
        if (row.size() != cols_) throw Error("shape", "ragged matrix literal");
        std::size_t j = 0;
        for (long v : row) a_[i * cols_ + j++] = v;
        ++i;
    }
}

std::size_t bareiss_rank(IntMat m) {
    const std::size_t nr = m.rows(), nc = m.cols();
    Int prev = 1;
    std::size_t rank = 0;
    std::size_t r = 0, c = 0;
    while (r < nr && c < nc) {
        // full pivoting: any nonzero entry in the trailing block
        std::size_t pi = nr, pj = nc;
        for (std::size_t i = r; i < nr && pi == nr; ++i)
            for (std::size_t j = c; j < nc; ++j)
                if (m.at(i, j) != 0) { pi = i; pj = j; break; }
        if (pi == nr) break;
        if (pi != r)
            for (std::size_t j = 0; j < nc; ++j) std::swap(m.at(pi, j), m.at(r, j));
        if (pj != c)
            for (std::size_t i = 0; i < nr; ++i) std::swap(m.at(i, pj), m.at(i, c));
        const Int piv = m.at(r, c);
        for (std::size_t i = r + 1; i < nr; ++i) {
            for (std::size_t j = c + 1; j < nc; ++j) {
                Int t = m.at(i, j) * piv - m.at(i, c) * m.at(r, j);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                m.at(i, j) = std::move(t);
            }
            m.at(i, c) = 0;
        }
        prev = piv;
        ++rank;
        ++r;
        ++c;
    }
    return rank;
}

namespace {

void strip_row_gcd(IntMat& m, std::size_t i, std::size_t from_col) {
    Int g = 0;
    for (std::size_t j = from_col; j < m.cols(); ++j) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), m.at(i, j).get_mpz_t());
        if (g == 1) return;
    }
    if (g <= 1) return;
    for (std::size_t j = from_col; j < m.cols(); ++j)
        if (m.at(i, j) != 0) mpz_divexact(m.at(i, j).get_mpz_t(), m.at(i, j).get_mpz_t(), g.get_mpz_t());
}

}  // namespace

std::size_t stripped_rank(IntMat m) {
    const std::size_t nr = m.rows(), nc = m.cols();
    for (std::size_t i = 0; i < nr; ++i) strip_row_gcd(m, i, 0);
    std::size_t rank = 0, c = 0;
    std::vector<bool> used(nr, false);
    while (c < nc && rank < nr) {
        // pivot: unused row with nonzero entry in column c of minimal size
        std::size_t best = nr;
        for (std::size_t i = 0; i < nr; ++i) {
            if (used[i] || m.at(i, c) == 0) continue;
            if (best == nr ||
                mpz_sizeinbase(m.at(i, c).get_mpz_t(), 2) < mpz_sizeinbase(m.at(best, c).get_mpz_t(), 2))
                best = i;
        }
        if (best == nr) { ++c; continue; }
        used[best] = true;
        ++rank;
        const Int piv = m.at(best, c);
        for (std::size_t i = 0; i < nr; ++i) {
            if (used[i] || m.at(i, c) == 0) continue;
            const Int f = m.at(i, c);
            Int g;
            mpz_gcd(g.get_mpz_t(), piv.get_mpz_t(), f.get_mpz_t());
            const Int a = piv / g, b = f / g;
            for (std::size_t j = c; j < nc; ++j)
                m.at(i, j) = m.at(i, j) * a - m.at(best, j) * b;
            strip_row_gcd(m, i, c + 1);
        }
        ++c;
    }
    return rank;
}

namespace {

inline std::uint32_t mod_p(const Int& v, std::uint32_t p) {
    long r = mpz_fdiv_ui(v.get_mpz_t(), p);
    return static_cast<std::uint32_t>(r);
}

std::size_t dense_rank_mod_p(std::vector<std::vector<std::uint32_t>>& a, std::uint32_t p) {
    const std::size_t nr = a.size();
    const std::size_t nc = nr ? a[0].size() : 0;
    std::size_t rank = 0, r = 0;
    for (std::size_t c = 0; c < nc && r < nr; ++c) {
        std::size_t piv = nr;
        for (std::size_t i = r; i < nr; ++i)
            if (a[i][c] != 0) { piv = i; break; }
        if (piv == nr) continue;
        std::swap(a[piv], a[r]);
        const std::uint64_t inv = [&] {
            // Fermat inverse
            std::uint64_t b = a[r][c], e = p - 2, acc = 1;
            while (e) {
                if (e & 1) acc = acc * b % p;
                b = b * b % p;
                e >>= 1;
            }
            return acc;
        }();
        for (std::size_t i = r + 1; i < nr; ++i) {
            if (a[i][c] == 0) continue;
            const std::uint64_t f = a[i][c] * inv % p;
            for (std::size_t j = c; j < nc; ++j) {
                std::uint64_t t = a[i][j] + (p - static_cast<std::uint32_t>(f * a[r][j] % p));
                a[i][j] = static_cast<std::uint32_t>(t % p);
            }
        }
        ++rank;
        ++r;
    }
    return rank;
}

}  // namespace

std::size_t rank_mod_p(const IntMat& m, std::uint32_t p) {
    std::vector<std::vector<std::uint32_t>> a(m.rows(), std::vector<std::uint32_t>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = mod_p(m.at(i, j), p);
    return dense_rank_mod_p(a, p);
}

std::size_t sparse_rank_mod_p(const SparseRows& m, std::uint32_t p) {
    std::vector<std::vector<std::uint32_t>> a(m.rows.size(), std::vector<std::uint32_t>(m.cols, 0));
    for (std::size_t i = 0; i < m.rows.size(); ++i)
        for (const auto& [j, v] : m.rows[i]) a[i][j] = mod_p(v, p);
    return dense_rank_mod_p(a, p);
}

std::size_t sparse_rank_exact(const SparseRows& m) {
    IntMat d(m.rows.size(), m.cols);
    for (std::size_t i = 0; i < m.rows.size(); ++i)
        for (const auto& [j, v] : m.rows[i]) d.at(i, j) = v;
    return stripped_rank(std::move(d));
}

}  // namespace rhomax
