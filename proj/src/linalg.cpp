#include "vocal/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace vocal {

Scalar dot(const ScalarVec& a, const ScalarVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
    Scalar s(0);
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

int rowReduce(ScalarMat& m) {
    if (m.empty()) return 0;
    size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && m[piv][c].isZero()) ++piv;
        if (piv == rows) continue;
        std::swap(m[r], m[piv]);
        Scalar inv = m[r][c].inverse();
        for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].isZero()) continue;
            Scalar f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return static_cast<int>(r);
}

int rankOf(ScalarMat m) { return rowReduce(m); }

std::vector<ScalarVec> kernelBasis(const ScalarMat& mat) {
    if (mat.empty()) return {};
    ScalarMat m = mat;
    size_t cols = m[0].size();
    int rank = rowReduce(m);
    std::vector<int> pivotOfCol(cols, -1);
    for (int r = 0; r < rank; ++r) {
        size_t c = 0;
        while (c < cols && m[r][c].isZero()) ++c;
        if (c < cols) pivotOfCol[c] = r;
    }
    std::vector<ScalarVec> basis;
    for (size_t f = 0; f < cols; ++f) {
        if (pivotOfCol[f] >= 0) continue;
        ScalarVec v(cols, Scalar(0));
        v[f] = Scalar(1);
        for (size_t c = 0; c < cols; ++c)
            if (pivotOfCol[c] >= 0) v[c] = -m[pivotOfCol[c]][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<ScalarVec> fieldKernelBasis(const ActionMatrix& a) {
    std::vector<ScalarVec> raw = kernelBasis(a.rows);
    // Gram-Schmidt without normalization keeps every entry in Q(sqrt 6); the
    // pairing is positive definite under the real embedding.
    std::vector<ScalarVec> ortho;
    for (ScalarVec v : raw) {
        for (const ScalarVec& u : ortho) {
            Scalar f = dot(v, u) / dot(u, u);
            for (size_t i = 0; i < v.size(); ++i) v[i] -= f * u[i];
        }
        bool zero = std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.isZero(); });
        if (!zero) ortho.push_back(std::move(v));
    }
    return ortho;
}

namespace {

struct Gcd {
    Int g, p, q;  // g = p*a + q*b
};

Gcd gcdExt(Int a, Int b) {
    Int p0 = 1, q0 = 0, p1 = 0, q1 = 1;
    while (b != 0) {
        Int quot = a / b;  // truncated division is fine for the invariants here
        Int r = a - quot * b;
        Int p2 = p0 - quot * p1, q2 = q0 - quot * q1;
        a = b;
        b = r;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
    }
    if (a < 0) {
        a = -a;
        p0 = -p0;
        q0 = -q0;
    }
    return {a, p0, q0};
}

Int floorDiv(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

// Unimodular elimination of column `col` among rows r..end, pivot left at r.
void pivotColumn(IntMat& m, size_t r, size_t col) {
    for (size_t i = r + 1; i < m.size(); ++i) {
        if (m[i][col] == 0) continue;
        if (m[r][col] == 0) {
            std::swap(m[r], m[i]);
            continue;
        }
        Gcd e = gcdExt(m[r][col], m[i][col]);
        Int u = m[r][col] / e.g, v = m[i][col] / e.g;
        for (size_t j = 0; j < m[r].size(); ++j) {
            Int top = e.p * m[r][j] + e.q * m[i][j];
            Int bot = -v * m[r][j] + u * m[i][j];
            m[r][j] = top;
            m[i][j] = bot;
        }
    }
}

}  // namespace

IntMat hermiteNormalForm(IntMat rows) {
    if (rows.empty()) return rows;
    size_t n = rows[0].size();
    size_t r = 0;
    std::vector<size_t> pivotCols;
    for (size_t c = 0; c < n && r < rows.size(); ++c) {
        size_t piv = r;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        pivotColumn(rows, r, c);
        if (rows[r][c] < 0)
            for (Int& x : rows[r]) x = -x;
        for (size_t i = 0; i < r; ++i) {
            Int q = floorDiv(rows[i][c], rows[r][c]);
            if (q == 0) continue;
            for (size_t j = 0; j < n; ++j) rows[i][j] -= q * rows[r][j];
        }
        pivotCols.push_back(c);
        ++r;
    }
    rows.resize(r);
    return rows;
}

IntMat integerKernel(const IntMat& m) {
    if (m.empty()) return {};
    size_t rows = m.size(), n = m[0].size();
    // Augmented transpose [M^T | I]: unimodular row ops preserve the identity
    // part as the combination applied to the standard basis of Z^n.
    IntMat a(n, IntVec(rows + n, 0));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < rows; ++j) a[i][j] = m[j][i];
        a[i][rows + i] = 1;
    }
    size_t r = 0;
    for (size_t c = 0; c < rows && r < n; ++c) {
        size_t piv = r;
        while (piv < n && a[piv][c] == 0) ++piv;
        if (piv == n) continue;
        std::swap(a[r], a[piv]);
        pivotColumn(a, r, c);
        ++r;
    }
    IntMat kernel;
    for (size_t i = r; i < n; ++i)
        kernel.emplace_back(a[i].begin() + rows, a[i].end());
    return kernel;
}

LatticeBasis integerKernelBasis(const ActionMatrix& a) {
    IntMat constraints;
    for (const ScalarVec& row : a.rows) {
        // One rational constraint row per field component of the action row.
        for (int comp = 0; comp < 2; ++comp) {
            std::vector<Rat> vals;
            vals.reserve(row.size());
            bool nonzero = false;
            for (const Scalar& s : row) {
                Rat v = comp == 0 ? s.rat() : s.irr();
                if (v != 0) nonzero = true;
                vals.push_back(std::move(v));
            }
            if (!nonzero) continue;
            Int lcm = 1;
            for (const Rat& v : vals) lcm = boost::multiprecision::lcm(lcm, Int(denominator(v)));
            IntVec irow;
            irow.reserve(vals.size());
            for (const Rat& v : vals) irow.push_back(Int(numerator(v)) * (lcm / Int(denominator(v))));
            constraints.push_back(std::move(irow));
        }
    }
    LatticeBasis out;
    if (constraints.empty()) {
        // No constraints: the kernel is all of Z^n.
        int n = a.cols();
        out.vectors.assign(n, IntVec(n, 0));
        for (int i = 0; i < n; ++i) out.vectors[i][i] = 1;
        return out;
    }
    out.vectors = hermiteNormalForm(integerKernel(constraints));
    return out;
}

std::optional<ScalarVec> solveAffine(ScalarMat a, ScalarVec rhs) {
    if (a.size() != rhs.size()) throw std::invalid_argument("solveAffine: size mismatch");
    if (a.empty()) return ScalarVec{};
    size_t cols = a[0].size();
    for (size_t i = 0; i < a.size(); ++i) a[i].push_back(rhs[i]);
    int rank = rowReduce(a);
    ScalarVec x(cols, Scalar(0));
    for (int r = 0; r < rank; ++r) {
        size_t c = 0;
        while (c <= cols && a[r][c].isZero()) ++c;
        if (c == cols) return std::nullopt;  // 0 = nonzero
        if (c > cols) continue;
        x[c] = a[r][cols];
    }
    return x;
}

}  // namespace vocal
