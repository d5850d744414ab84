#include "lefschetz/exact_linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace lefschetz {

namespace {

void swapRows(IntegerMatrix& m, Eigen::Index a, Eigen::Index b)
{
    if (a != b)
        m.row(a).swap(m.row(b));
}

void swapCols(IntegerMatrix& m, Eigen::Index a, Eigen::Index b)
{
    if (a != b)
        m.col(a).swap(m.col(b));
}

// Returns (g, s, t) with g = s*a + t*b = gcd(a, b) >= 0.
struct ExtendedGcd
{
    Integer g, s, t;
};

ExtendedGcd extendedGcd(const Integer& a, const Integer& b)
{
    Integer old_r = a, r = b;
    Integer old_s = 1, s = 0;
    Integer old_t = 0, t = 1;
    while (r != 0)
    {
        Integer q = old_r / r;
        Integer tmp = old_r - q * r; old_r = r; r = tmp;
        tmp = old_s - q * s; old_s = s; s = tmp;
        tmp = old_t - q * t; old_t = t; t = tmp;
    }
    if (old_r < 0)
    {
        old_r = -old_r; old_s = -old_s; old_t = -old_t;
    }
    return {old_r, old_s, old_t};
}

// Bareiss forward elimination in place; returns the rank. If `sign` is
// non-null it tracks the parity of row swaps.
Eigen::Index bareissEliminate(IntegerMatrix& m, int* sign = nullptr)
{
    const Eigen::Index rows = m.rows();
    const Eigen::Index cols = m.cols();
    Integer prev = 1;
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < cols && r < rows; ++c)
    {
        Eigen::Index p = r;
        while (p < rows && m(p, c) == 0)
            ++p;
        if (p == rows)
            continue;
        if (p != r)
        {
            swapRows(m, p, r);
            if (sign)
                *sign = -*sign;
        }
        const Integer pivot = m(r, c);
        for (Eigen::Index i = r + 1; i < rows; ++i)
        {
            const Integer factor = m(i, c);
            for (Eigen::Index j = c + 1; j < cols; ++j)
            {
                Integer v = pivot * m(i, j);
                v -= factor * m(r, j);
                m(i, j) = v / prev;
            }
            m(i, c) = 0;
        }
        prev = pivot;
        ++r;
    }
    return r;
}

Integer lcmOfDenominators(const RationalMatrix& m, Eigen::Index row)
{
    Integer l = 1;
    for (Eigen::Index j = 0; j < m.cols(); ++j)
    {
        const Integer& d = boost::multiprecision::denominator(m(row, j));
        if (d != 1)
            l = boost::multiprecision::lcm(l, d);
    }
    return l;
}

}   // namespace

Eigen::Index rank(const IntegerMatrix& m)
{
    IntegerMatrix work = m;
    return bareissEliminate(work);
}

Eigen::Index rank(const RationalMatrix& m)
{
    IntegerMatrix scaled(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
    {
        const Integer l = lcmOfDenominators(m, i);
        for (Eigen::Index j = 0; j < m.cols(); ++j)
        {
            const Rational& q = m(i, j);
            scaled(i, j) = boost::multiprecision::numerator(q) * (l / boost::multiprecision::denominator(q));
        }
    }
    return bareissEliminate(scaled);
}

Eigen::Index rankByRationalElimination(RationalMatrix m)
{
    const Eigen::Index rows = m.rows();
    const Eigen::Index cols = m.cols();
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < cols && r < rows; ++c)
    {
        Eigen::Index p = r;
        while (p < rows && m(p, c) == 0)
            ++p;
        if (p == rows)
            continue;
        if (p != r)
            m.row(p).swap(m.row(r));
        for (Eigen::Index i = r + 1; i < rows; ++i)
        {
            if (m(i, c) == 0)
                continue;
            const Rational factor = m(i, c) / m(r, c);
            for (Eigen::Index j = c; j < cols; ++j)
                m(i, j) -= factor * m(r, j);
        }
        ++r;
    }
    return r;
}

RationalMatrix reducedRowEchelon(RationalMatrix m, std::vector<Eigen::Index>* pivots)
{
    const Eigen::Index rows = m.rows();
    const Eigen::Index cols = m.cols();
    if (pivots)
        pivots->clear();
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < cols && r < rows; ++c)
    {
        Eigen::Index p = r;
        while (p < rows && m(p, c) == 0)
            ++p;
        if (p == rows)
            continue;
        if (p != r)
            m.row(p).swap(m.row(r));
        const Rational inv = 1 / m(r, c);
        for (Eigen::Index j = c; j < cols; ++j)
            m(r, j) *= inv;
        for (Eigen::Index i = 0; i < rows; ++i)
        {
            if (i == r || m(i, c) == 0)
                continue;
            const Rational factor = m(i, c);
            for (Eigen::Index j = c; j < cols; ++j)
                m(i, j) -= factor * m(r, j);
        }
        if (pivots)
            pivots->push_back(c);
        ++r;
    }
    return m;
}

RationalMatrix kernelBasis(const RationalMatrix& m)
{
    std::vector<Eigen::Index> pivots;
    const RationalMatrix rref = reducedRowEchelon(m, &pivots);
    const Eigen::Index cols = m.cols();
    std::vector<bool> isPivot(cols, false);
    for (Eigen::Index p : pivots)
        isPivot[p] = true;

    RationalMatrix basis = RationalMatrix::Zero(cols, cols - static_cast<Eigen::Index>(pivots.size()));
    Eigen::Index out = 0;
    for (Eigen::Index free = 0; free < cols; ++free)
    {
        if (isPivot[free])
            continue;
        basis(free, out) = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            basis(pivots[r], out) = -rref(static_cast<Eigen::Index>(r), free);
        ++out;
    }
    return basis;
}

IntegerMatrix integerKernel(const IntegerMatrix& a)
{
    const Eigen::Index rows = a.rows();
    const Eigen::Index n = a.cols();
    IntegerMatrix work = a;
    IntegerMatrix transform = IntegerMatrix::Identity(n, n);

    auto columnOp = [&](Eigen::Index target, Eigen::Index source, const Integer& q) {
        // col_target -= q * col_source
        for (Eigen::Index i = 0; i < rows; ++i)
            work(i, target) -= q * work(i, source);
        for (Eigen::Index i = 0; i < n; ++i)
            transform(i, target) -= q * transform(i, source);
    };

    Eigen::Index r = 0;
    for (Eigen::Index i = 0; i < rows && r < n; ++i)
    {
        // Euclid across columns r..n-1 of row i until only column r is nonzero.
        while (true)
        {
            Eigen::Index best = -1;
            for (Eigen::Index j = r; j < n; ++j)
            {
                if (work(i, j) == 0)
                    continue;
                if (best < 0 || abs(work(i, j)) < abs(work(i, best)))
                    best = j;
            }
            if (best < 0)
                break;
            swapCols(work, r, best);
            swapCols(transform, r, best);
            bool reduced = true;
            for (Eigen::Index j = r + 1; j < n; ++j)
            {
                if (work(i, j) == 0)
                    continue;
                const Integer q = work(i, j) / work(i, r);
                columnOp(j, r, q);
                if (work(i, j) != 0)
                    reduced = false;
            }
            if (reduced)
            {
                ++r;
                break;
            }
        }
    }

    IntegerMatrix kernel = transform.rightCols(n - r);
    for (Eigen::Index c = 0; c < kernel.cols(); ++c)
    {
        for (Eigen::Index i = 0; i < n; ++i)
        {
            if (kernel(i, c) == 0)
                continue;
            if (kernel(i, c) < 0)
                kernel.col(c) = -kernel.col(c);
            break;
        }
    }
    return kernel;
}

std::vector<Integer> smithInvariantFactors(IntegerMatrix m)
{
    const Eigen::Index rows = m.rows();
    const Eigen::Index cols = m.cols();
    std::vector<Integer> factors;
    for (Eigen::Index t = 0; t < std::min(rows, cols); ++t)
    {
        while (true)
        {
            Eigen::Index pi = -1, pj = -1;
            for (Eigen::Index i = t; i < rows; ++i)
                for (Eigen::Index j = t; j < cols; ++j)
                    if (m(i, j) != 0 && (pi < 0 || abs(m(i, j)) < abs(m(pi, pj))))
                    {
                        pi = i;
                        pj = j;
                    }
            if (pi < 0)
                return factors;
            swapRows(m, t, pi);
            swapCols(m, t, pj);

            bool clean = true;
            for (Eigen::Index i = t + 1; i < rows; ++i)
            {
                if (m(i, t) == 0)
                    continue;
                const Integer q = m(i, t) / m(t, t);
                for (Eigen::Index j = t; j < cols; ++j)
                    m(i, j) -= q * m(t, j);
                if (m(i, t) != 0)
                    clean = false;
            }
            for (Eigen::Index j = t + 1; j < cols; ++j)
            {
                if (m(t, j) == 0)
                    continue;
                const Integer q = m(t, j) / m(t, t);
                for (Eigen::Index i = t; i < rows; ++i)
                    m(i, j) -= q * m(i, t);
                if (m(t, j) != 0)
                    clean = false;
            }
            if (!clean)
                continue;

            // The pivot must divide the rest of the block.
            Eigen::Index bad = -1;
            for (Eigen::Index i = t + 1; i < rows && bad < 0; ++i)
                for (Eigen::Index j = t + 1; j < cols; ++j)
                    if (m(i, j) % m(t, t) != 0)
                    {
                        bad = i;
                        break;
                    }
            if (bad < 0)
                break;
            m.row(t) += m.row(bad);
        }
        factors.push_back(abs(m(t, t)));
    }
    return factors;
}

bool isSaturated(const IntegerMatrix& basis)
{
    const std::vector<Integer> factors = smithInvariantFactors(basis);
    if (static_cast<Eigen::Index>(factors.size()) != basis.cols())
        return false;
    return std::all_of(factors.begin(), factors.end(), [](const Integer& f) { return f == 1; });
}

Integer determinant(IntegerMatrix m)
{
    if (m.rows() != m.cols())
        throw std::invalid_argument("determinant of a non-square matrix");
    if (m.rows() == 0)
        return 1;
    int sign = 1;
    if (bareissEliminate(m, &sign) < m.rows())
        return 0;
    return sign * m(m.rows() - 1, m.cols() - 1);
}

Integer content(const DenseVector<Integer>& v)
{
    Integer g = 0;
    for (Eigen::Index i = 0; i < v.size(); ++i)
        g = boost::multiprecision::gcd(g, abs(v(i)));
    return g;
}

namespace {

// Calls f(columns) for every increasing d-subset of {0..n-1}; stops early
// when f returns false.
template <typename F>
void forEachColumnSubset(Eigen::Index n, Eigen::Index d, F&& f)
{
    if (d > n)
        return;
    std::vector<Eigen::Index> idx(d);
    for (Eigen::Index i = 0; i < d; ++i)
        idx[i] = i;
    while (true)
    {
        if (!f(idx))
            return;
        Eigen::Index i = d - 1;
        while (i >= 0 && idx[i] == n - d + i)
            --i;
        if (i < 0)
            return;
        ++idx[i];
        for (Eigen::Index j = i + 1; j < d; ++j)
            idx[j] = idx[j - 1] + 1;
    }
}

}   // namespace

Integer maximalMinorGcd(const IntegerMatrix& a)
{
    Integer g = 0;
    forEachColumnSubset(a.cols(), a.rows(), [&](const std::vector<Eigen::Index>& cols) {
        IntegerMatrix minor(a.rows(), a.rows());
        for (std::size_t j = 0; j < cols.size(); ++j)
            minor.col(j) = a.col(cols[j]);
        g = boost::multiprecision::gcd(g, abs(determinant(minor)));
        return g != 1;
    });
    return g;
}

bool isUnimodular(const IntegerMatrix& a)
{
    bool ok = true;
    forEachColumnSubset(a.cols(), a.rows(), [&](const std::vector<Eigen::Index>& cols) {
        IntegerMatrix minor(a.rows(), a.rows());
        for (std::size_t j = 0; j < cols.size(); ++j)
            minor.col(j) = a.col(cols[j]);
        ok = abs(determinant(minor)) <= 1;
        return ok;
    });
    return ok;
}

IntegerMatrix toInteger(const RationalMatrix& m)
{
    IntegerMatrix out(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
        {
            if (boost::multiprecision::denominator(m(i, j)) != 1)
                throw std::invalid_argument("matrix entry " + toString(m(i, j)) + " is not an integer");
            out(i, j) = boost::multiprecision::numerator(m(i, j));
        }
    return out;
}

RationalMatrix toRational(const IntegerMatrix& m)
{
    RationalMatrix out(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            out(i, j) = Rational(m(i, j));
    return out;
}

std::string toString(const Rational& q)
{
    if (boost::multiprecision::denominator(q) == 1)
        return boost::multiprecision::numerator(q).str();
    return q.str();
}

Rational parseRational(const std::string& text)
{
    auto isInteger = [](const std::string& s, bool allowSign) {
        std::size_t start = 0;
        if (allowSign && !s.empty() && (s[0] == '-' || s[0] == '+'))
            start = 1;
        if (start == s.size())
            return false;
        return std::all_of(s.begin() + start, s.end(), [](char c) { return c >= '0' && c <= '9'; });
    };
    const auto slash = text.find('/');
    const std::string num = text.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!isInteger(num, true) || !isInteger(den, false))
        throw std::invalid_argument("not a rational number: '" + text + "'");
    Integer p(num[0] == '+' ? num.substr(1) : num);
    Integer q(den);
    if (q == 0)
        throw std::invalid_argument("zero denominator in '" + text + "'");
    return Rational(p, q);
}

}   // namespace lefschetz
