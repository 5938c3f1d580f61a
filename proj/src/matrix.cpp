#include "abrec/matrix.hpp"

#include "abrec/errors.hpp"

#include <algorithm>

namespace abrec {

IntMatrix IntMatrix::identity(size_t n)
{
    IntMatrix m(n, n);
    for (size_t i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::diagonal(const std::vector<Int>& d)
{
    IntMatrix m(d.size(), d.size());
    for (size_t i = 0; i < d.size(); ++i)
        m.at(i, i) = d[i];
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const
{
    if (cols_ != other.rows_)
        throw error("matrix product shape mismatch");
    IntMatrix out(rows_, other.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            const Int& a = at(i, k);
            if (a == 0)
                continue;
            for (size_t j = 0; j < other.cols_; ++j)
                out.at(i, j) += a * other.at(k, j);
        }
    return out;
}

bool IntMatrix::operator==(const IntMatrix& other) const
{
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

void IntMatrix::swap_rows(size_t i, size_t j)
{
    if (i == j)
        return;
    for (size_t c = 0; c < cols_; ++c)
        std::swap(at(i, c), at(j, c));
}

void IntMatrix::swap_cols(size_t i, size_t j)
{
    if (i == j)
        return;
    for (size_t r = 0; r < rows_; ++r)
        std::swap(at(r, i), at(r, j));
}

void IntMatrix::add_row_multiple(size_t dst, size_t src, const Int& factor)
{
    for (size_t c = 0; c < cols_; ++c)
        at(dst, c) += factor * at(src, c);
}

void IntMatrix::add_col_multiple(size_t dst, size_t src, const Int& factor)
{
    for (size_t r = 0; r < rows_; ++r)
        at(r, dst) += factor * at(r, src);
}

void IntMatrix::negate_row(size_t i)
{
    for (size_t c = 0; c < cols_; ++c)
        at(i, c) = -at(i, c);
}

void IntMatrix::negate_col(size_t j)
{
    for (size_t r = 0; r < rows_; ++r)
        at(r, j) = -at(r, j);
}

std::vector<Int> IntMatrix::column(size_t j) const
{
    std::vector<Int> out(rows_);
    for (size_t i = 0; i < rows_; ++i)
        out[i] = at(i, j);
    return out;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& x) const
{
    if (x.size() != cols_)
        throw error("matrix apply shape mismatch");
    std::vector<Int> out(rows_, Int(0));
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            out[i] += at(i, j) * x[j];
    return out;
}

std::vector<Int> SmithForm::diagonal() const
{
    size_t n = std::min(d.rows(), d.cols());
    std::vector<Int> out(n);
    for (size_t i = 0; i < n; ++i)
        out[i] = d.at(i, i);
    return out;
}

namespace {

// Locate the entry of smallest nonzero absolute value in d[s:, s:].
bool find_pivot(const IntMatrix& d, size_t s, size_t& pi, size_t& pj)
{
    bool found = false;
    Int best;
    for (size_t i = s; i < d.rows(); ++i)
        for (size_t j = s; j < d.cols(); ++j) {
            if (d.at(i, j) == 0)
                continue;
            Int a = abs(d.at(i, j));
            if (!found || a < best) {
                best = a;
                pi = i;
                pj = j;
                found = true;
            }
        }
    return found;
}

bool row_col_clear(const IntMatrix& d, size_t s)
{
    for (size_t i = s + 1; i < d.rows(); ++i)
        if (d.at(i, s) != 0)
            return false;
    for (size_t j = s + 1; j < d.cols(); ++j)
        if (d.at(s, j) != 0)
            return false;
    return true;
}

bool pivot_divides_block(const IntMatrix& d, size_t s, size_t& bi, size_t& bj)
{
    for (size_t i = s + 1; i < d.rows(); ++i)
        for (size_t j = s + 1; j < d.cols(); ++j)
            if (d.at(i, j) % d.at(s, s) != 0) {
                bi = i;
                bj = j;
                return false;
            }
    return true;
}

} // namespace

SmithForm smith_normal_form(const IntMatrix& m)
{
    SmithForm f;
    f.d = m;
    f.u = IntMatrix::identity(m.rows());
    f.v = IntMatrix::identity(m.cols());
    IntMatrix& d = f.d;

    size_t n = std::min(m.rows(), m.cols());
    for (size_t s = 0; s < n; ++s) {
        // The pivot's absolute value strictly decreases on every re-entry,
        // so this loop terminates.
        while (true) {
            size_t pi = s, pj = s;
            if (!find_pivot(d, s, pi, pj))
                break; // remaining block is zero
            d.swap_rows(s, pi);
            f.u.swap_rows(s, pi);
            d.swap_cols(s, pj);
            f.v.swap_cols(s, pj);

            for (size_t i = s + 1; i < d.rows(); ++i) {
                if (d.at(i, s) == 0)
                    continue;
                Int q = d.at(i, s) / d.at(s, s);
                d.add_row_multiple(i, s, -q);
                f.u.add_row_multiple(i, s, -q);
            }
            for (size_t j = s + 1; j < d.cols(); ++j) {
                if (d.at(s, j) == 0)
                    continue;
                Int q = d.at(s, j) / d.at(s, s);
                d.add_col_multiple(j, s, -q);
                f.v.add_col_multiple(j, s, -q);
            }
            if (!row_col_clear(d, s))
                continue; // remainders left behind, re-pivot on the minimum

            // Fold in any entry the pivot fails to divide, so that the final
            // diagonal satisfies d_s | d_{s+1}.
            size_t bi = s, bj = s;
            if (!pivot_divides_block(d, s, bi, bj)) {
                d.add_row_multiple(s, bi, Int(1));
                f.u.add_row_multiple(s, bi, Int(1));
                continue;
            }
            break;
        }
        if (d.at(s, s) < 0) {
            d.negate_row(s);
            f.u.negate_row(s);
        }
    }
    return f;
}

IntMatrix hermite_column_basis(const IntMatrix& m)
{
    const size_t k = m.rows();
    IntMatrix w = m;

    // Column-reduce to lower triangular form, one row at a time.
    for (size_t i = 0; i < k; ++i) {
        // Euclid on columns i.. until row i has a single nonzero at column i.
        while (true) {
            size_t best = w.cols();
            for (size_t j = i; j < w.cols(); ++j) {
                if (w.at(i, j) == 0)
                    continue;
                if (best == w.cols() || abs(w.at(i, j)) < abs(w.at(i, best)))
                    best = j;
            }
            if (best == w.cols())
                throw error("hermite_column_basis: lattice not of full rank");
            w.swap_cols(i, best);
            bool clear = true;
            for (size_t j = i + 1; j < w.cols(); ++j) {
                if (w.at(i, j) == 0)
                    continue;
                Int q = w.at(i, j) / w.at(i, i);
                w.add_col_multiple(j, i, -q);
                if (w.at(i, j) != 0)
                    clear = false;
            }
            if (clear)
                break;
        }
        if (w.at(i, i) < 0)
            w.negate_col(i);
    }

    // Reduce entries left of each pivot into [0, pivot).
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < i; ++j) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), w.at(i, j).get_mpz_t(), w.at(i, i).get_mpz_t());
            if (q != 0)
                w.add_col_multiple(j, i, -q);
        }

    IntMatrix out(k, k);
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j <= i; ++j)
            out.at(i, j) = w.at(i, j);
    return out;
}

Int determinant(const IntMatrix& m)
{
    if (m.rows() != m.cols())
        throw error("determinant: matrix not square");
    size_t n = m.rows();
    if (n == 0)
        return 1;
    // Fraction-free Gaussian elimination (Bareiss).
    IntMatrix a = m;
    Int sign = 1, prev = 1;
    for (size_t s = 0; s + 1 < n; ++s) {
        if (a.at(s, s) == 0) {
            size_t pivot = n;
            for (size_t i = s + 1; i < n; ++i)
                if (a.at(i, s) != 0) {
                    pivot = i;
                    break;
                }
            if (pivot == n)
                return 0;
            a.swap_rows(s, pivot);
            sign = -sign;
        }
        for (size_t i = s + 1; i < n; ++i)
            for (size_t j = s + 1; j < n; ++j) {
                Int num = a.at(i, j) * a.at(s, s) - a.at(i, s) * a.at(s, j);
                a.at(i, j) = num / prev; // exact by Bareiss
            }
        prev = a.at(s, s);
    }
    return sign * a.at(n - 1, n - 1);
}

IntMatrix inverse_unimodular(const IntMatrix& u)
{
    if (u.rows() != u.cols())
        throw error("inverse_unimodular: matrix not square");
    size_t n = u.rows();
    Int det = determinant(u);
    if (det != 1 && det != -1)
        throw error("inverse_unimodular: determinant not a unit");
    // Adjugate via cofactors; n stays tiny throughout this project.
    IntMatrix inv(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            IntMatrix minor(n - 1, n - 1);
            for (size_t r = 0, rr = 0; r < n; ++r) {
                if (r == j)
                    continue;
                for (size_t c = 0, cc = 0; c < n; ++c) {
                    if (c == i)
                        continue;
                    minor.at(rr, cc) = u.at(r, c);
                    ++cc;
                }
                ++rr;
            }
            Int cof = determinant(minor);
            if ((i + j) % 2 == 1)
                cof = -cof;
            inv.at(i, j) = cof * det; // det = 1/det here
        }
    return inv;
}

IntMatrix integer_kernel(const IntMatrix& m)
{
    SmithForm f = smith_normal_form(m);
    size_t r = m.rows(), c = m.cols();
    size_t rank = 0;
    for (size_t i = 0; i < std::min(r, c); ++i)
        if (f.d.at(i, i) != 0)
            ++rank;
    IntMatrix out(c, c - rank);
    for (size_t j = rank; j < c; ++j)
        for (size_t i = 0; i < c; ++i)
            out.at(i, j - rank) = f.v.at(i, j);
    return out;
}

} // namespace abrec
