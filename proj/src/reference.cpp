#include "chowring/reference.hpp"

#include <algorithm>
#include <numeric>

namespace chowring::reference {

namespace {

Int abs_int(const Int& v)
{
    return v < 0 ? Int(-v) : v;
}

} // namespace

// Textbook Smith normal form: pivot on the smallest nonzero entry, kill its
// row and column with elementary operations, recurse on the trailing block,
// then fix divisibility on the diagonal. Straight serial loops throughout.
SmithResult smith_normal_form(const IntMatrix& input)
{
    IntMatrix a = input;
    std::vector<Int> diag;
    int t = 0;
    const int bound = std::min(a.rows(), a.cols());

    while (t < bound) {
        int pr = -1, pc = -1;
        Int best = 0;
        for (int r = t; r < a.rows(); ++r)
            for (int c = t; c < a.cols(); ++c)
                if (a.at(r, c) != 0 && (pr < 0 || abs_int(a.at(r, c)) < best)) {
                    best = abs_int(a.at(r, c));
                    pr = r;
                    pc = c;
                }
        if (pr < 0)
            break;
        for (int c = 0; c < a.cols(); ++c)
            std::swap(a.at(t, c), a.at(pr, c));
        for (int r = 0; r < a.rows(); ++r)
            std::swap(a.at(r, t), a.at(r, pc));

        bool clean = true;
        for (int r = t + 1; r < a.rows(); ++r) {
            Int q = a.at(r, t) / a.at(t, t);
            if (q != 0)
                for (int c = t; c < a.cols(); ++c)
                    a.at(r, c) -= q * a.at(t, c);
            if (a.at(r, t) != 0)
                clean = false;
        }
        for (int c = t + 1; c < a.cols(); ++c) {
            Int q = a.at(t, c) / a.at(t, t);
            if (q != 0)
                for (int r = t; r < a.rows(); ++r)
                    a.at(r, c) -= q * a.at(r, t);
            if (a.at(t, c) != 0)
                clean = false;
        }
        if (!clean)
            continue; // remainders became the new smallest entries
        diag.push_back(abs_int(a.at(t, t)));
        ++t;
    }

    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i + 1 < diag.size(); ++i)
            for (std::size_t j = i + 1; j < diag.size(); ++j)
                if (diag[j] % diag[i] != 0) {
                    Int g = boost::multiprecision::gcd(diag[i], diag[j]);
                    Int l = diag[i] / g * diag[j];
                    diag[i] = g;
                    diag[j] = l;
                    changed = true;
                }
    }

    SmithResult out;
    out.factors = std::move(diag);
    out.rank = static_cast<int>(out.factors.size());
    return out;
}

namespace {

// gcd of all k x k minors, 0 when every minor vanishes.
Int minor_gcd(const IntMatrix& m, int k,
              std::vector<int>& rows, std::vector<int>& cols)
{
    // determinant by Laplace expansion over the selected rows/cols
    std::function<Int(std::vector<int>, std::vector<int>)> det =
        [&](std::vector<int> rs, std::vector<int> cs) -> Int {
        if (rs.size() == 1)
            return m.at(rs[0], cs[0]);
        Int acc = 0;
        for (std::size_t i = 0; i < rs.size(); ++i) {
            std::vector<int> sub(rs.begin(), rs.end());
            sub.erase(sub.begin() + i);
            Int cofactor = det(sub, std::vector<int>(cs.begin() + 1, cs.end()));
            Int signed_term = m.at(rs[i], cs[0]) * cofactor;
            if (i % 2 == 1)
                signed_term = -signed_term;
            acc += signed_term;
        }
        return acc;
    };

    Int g = 0;
    std::vector<bool> rmask(m.rows(), false);
    std::fill(rmask.begin(), rmask.begin() + k, true);
    std::vector<int> rsel, csel;
    // iterate over all row subsets, then all column subsets
    do {
        rsel.clear();
        for (int r = 0; r < m.rows(); ++r)
            if (rmask[m.rows() - 1 - r])
                rsel.push_back(r);
        std::vector<bool> cmask(m.cols(), false);
        std::fill(cmask.begin(), cmask.begin() + k, true);
        do {
            csel.clear();
            for (int c = 0; c < m.cols(); ++c)
                if (cmask[m.cols() - 1 - c])
                    csel.push_back(c);
            Int d = det(rsel, csel);
            if (d != 0)
                g = g == 0 ? abs_int(d) : boost::multiprecision::gcd(g, abs_int(d));
        } while (std::prev_permutation(cmask.begin(), cmask.end()));
    } while (std::prev_permutation(rmask.begin(), rmask.end()));
    (void)rows;
    (void)cols;
    return g;
}

} // namespace

SmithResult smith_by_minor_gcd(const IntMatrix& m)
{
    if (m.rows() > 5 || m.cols() > 5)
        throw RangeError("minor-gcd oracle is only for tiny matrices");
    SmithResult out;
    Int prev = 1;
    std::vector<int> unused_r, unused_c;
    for (int k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
        Int g = minor_gcd(m, k, unused_r, unused_c);
        if (g == 0)
            break;
        out.factors.push_back(g / prev);
        prev = g;
    }
    out.rank = static_cast<int>(out.factors.size());
    return out;
}

int f2_rank(const F2Matrix& input)
{
    // byte-per-entry elimination, no packing tricks
    std::vector<std::vector<unsigned char>> a(input.rows(),
                                              std::vector<unsigned char>(input.cols(), 0));
    for (int r = 0; r < input.rows(); ++r)
        for (int c = 0; c < input.cols(); ++c)
            a[r][c] = input.get(r, c) ? 1 : 0;

    int rank = 0;
    for (int c = 0; c < input.cols() && rank < input.rows(); ++c) {
        int pivot = -1;
        for (int r = rank; r < input.rows(); ++r)
            if (a[r][c]) {
                pivot = r;
                break;
            }
        if (pivot < 0)
            continue;
        std::swap(a[rank], a[pivot]);
        for (int r = rank + 1; r < input.rows(); ++r)
            if (a[r][c])
                for (int k = c; k < input.cols(); ++k)
                    a[r][k] ^= a[rank][k];
        ++rank;
    }
    return rank;
}

VerificationReport faithfulness_check(const Presentation& pres, int max_degree)
{
    return chowring::faithfulness_check(pres, max_degree, /*parallel=*/false);
}

} // namespace chowring::reference
