#include "chowring/linalg.hpp"

#include <algorithm>
#include <utility>

namespace chowring {

namespace {

Int abs_int(const Int& v)
{
    return v < 0 ? Int(-v) : v;
}

// Pivot with minimal nonzero absolute value in the trailing submatrix,
// starting at (t, t). Returns {-1, -1} when the submatrix is zero.
std::pair<int, int> min_pivot(const IntMatrix& a, int t)
{
    int pr = -1, pc = -1;
    Int best = 0;
    for (int r = t; r < a.rows(); ++r)
        for (int c = t; c < a.cols(); ++c) {
            const Int& v = a.at(r, c);
            if (v == 0)
                continue;
            Int mag = abs_int(v);
            if (pr < 0 || mag < best) {
                best = mag;
                pr = r;
                pc = c;
                if (best == 1)
                    return {pr, pc};
            }
        }
    return {pr, pc};
}

void swap_rows(IntMatrix& a, int r1, int r2)
{
    if (r1 == r2)
        return;
    for (int c = 0; c < a.cols(); ++c)
        std::swap(a.at(r1, c), a.at(r2, c));
}

void swap_cols(IntMatrix& a, int c1, int c2)
{
    if (c1 == c2)
        return;
    for (int r = 0; r < a.rows(); ++r)
        std::swap(a.at(r, c1), a.at(r, c2));
}

// Sort the diagonal entries into a divisibility chain d1 | d2 | ... by
// repeated gcd/lcm exchanges; this is the standard final pass once the
// matrix is diagonal.
std::vector<Int> divisibility_chain(std::vector<Int> d)
{
    for (auto& v : d)
        v = abs_int(v);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < d.size(); ++i)
            for (std::size_t j = i + 1; j < d.size(); ++j) {
                if (d[j] % d[i] == 0)
                    continue;
                Int g = boost::multiprecision::gcd(d[i], d[j]);
                Int l = d[i] / g * d[j];
                d[i] = g;
                d[j] = l;
                changed = true;
            }
    }
    return d;
}

} // namespace

SmithResult smith_normal_form(const IntMatrix& m)
{
    IntMatrix a = m;
    const int bound = std::min(a.rows(), a.cols());
    std::vector<Int> diag;

    for (int t = 0; t < bound; ++t) {
        auto [pr, pc] = min_pivot(a, t);
        if (pr < 0)
            break;
        swap_rows(a, t, pr);
        swap_cols(a, t, pc);

        // Euclidean descent: reduce column t and row t by the pivot until
        // both are clear. Each pass either zeroes them or strictly shrinks
        // the minimal magnitude, so this terminates.
        for (;;) {
            const Int pivot = a.at(t, t);
            bool dirty = false;

#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (a.rows() - t > 64)
#endif
            for (int r = t + 1; r < a.rows(); ++r) {
                const Int& v = a.at(r, t);
                if (v == 0)
                    continue;
                Int q = v / pivot;
                if (q != 0)
                    for (int c = t; c < a.cols(); ++c)
                        a.at(r, c) -= q * a.at(t, c);
            }
            for (int r = t + 1; r < a.rows(); ++r)
                if (a.at(r, t) != 0) {
                    dirty = true;
                    break;
                }

            if (!dirty) {
                for (int c = t + 1; c < a.cols(); ++c) {
                    const Int& v = a.at(t, c);
                    if (v == 0)
                        continue;
                    Int q = v / pivot;
                    if (q != 0)
                        for (int r = t; r < a.rows(); ++r)
                            a.at(r, c) -= q * a.at(r, t);
                    if (a.at(t, c) != 0)
                        dirty = true;
                }
            }
            if (!dirty)
                break;

            // Leftover entries are remainders, strictly smaller than the
            // pivot; bring the smallest one to (t, t) and go again.
            auto [nr, nc] = min_pivot(a, t);
            swap_rows(a, t, nr);
            swap_cols(a, t, nc);
        }
        diag.push_back(a.at(t, t));
    }

    SmithResult result;
    result.factors = divisibility_chain(std::move(diag));
    result.rank = static_cast<int>(result.factors.size());
    return result;
}

int f2_rank(F2Matrix m)
{
    const int words = m.words();
    int rank = 0;
    for (int c = 0; c < m.cols() && rank < m.rows(); ++c) {
        int pivot = -1;
        for (int r = rank; r < m.rows(); ++r)
            if (m.get(r, c)) {
                pivot = r;
                break;
            }
        if (pivot < 0)
            continue;
        if (pivot != rank)
            for (int w = 0; w < words; ++w)
                std::swap(m.row(rank)[w], m.row(pivot)[w]);

        const std::uint64_t* prow = m.row(rank);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (m.rows() - rank > 256)
#endif
        for (int r = rank + 1; r < m.rows(); ++r) {
            if (!m.get(r, c))
                continue;
            std::uint64_t* row = m.row(r);
            for (int w = 0; w < words; ++w)
                row[w] ^= prow[w];
        }
        ++rank;
    }
    return rank;
}

bool kernel_is_zero(const IntMatrix& m, Modulus modulus)
{
    if (m.cols() == 0)
        return true;
    if (modulus == Modulus::Two) {
        F2Matrix f2(m.rows(), m.cols());
        for (int r = 0; r < m.rows(); ++r)
            for (int c = 0; c < m.cols(); ++c)
                if (m.at(r, c) % 2 != 0)
                    f2.flip(r, c);
        return f2_rank(std::move(f2)) == m.cols();
    }
    return smith_normal_form(m).rank == m.cols();
}

} // namespace chowring
