#include "toric/lattice.hpp"

#include <algorithm>
#include <cstdlib>

#include "toric/errors.hpp"

namespace toric {

namespace {

// Shared row-HNF worker. Mirrors every row operation into *u when given.
// Returns the rank; on exit the first `rank` rows of m are the canonical
// Hermite form and the remaining rows are zero.
int hermite_in_place(IntMatrix& m, IntMatrix* u) {
    const int rows = m.rows(), cols = m.cols();

    auto swap_rows = [&](int a, int b) {
        if (a == b) return;
        for (int j = 0; j < cols; ++j) std::swap(m.at(a, j), m.at(b, j));
        if (u)
            for (int j = 0; j < u->cols(); ++j) std::swap(u->at(a, j), u->at(b, j));
    };
    auto negate_row = [&](int a) {
        for (int j = 0; j < cols; ++j) m.at(a, j) = chk::neg(m.at(a, j));
        if (u)
            for (int j = 0; j < u->cols(); ++j) u->at(a, j) = chk::neg(u->at(a, j));
    };
    // row a -= q * row b
    auto submul_row = [&](int a, i64 q, int b) {
        if (q == 0) return;
        for (int j = 0; j < cols; ++j) m.at(a, j) = chk::sub(m.at(a, j), chk::mul(q, m.at(b, j)));
        if (u)
            for (int j = 0; j < u->cols(); ++j) u->at(a, j) = chk::sub(u->at(a, j), chk::mul(q, u->at(b, j)));
    };

    int r = 0;
    for (int col = 0; col < cols && r < rows; ++col) {
        // Euclidean reduction within the column until one nonzero entry is left.
        for (;;) {
            int best = -1;
            for (int i = r; i < rows; ++i) {
                i64 v = m.at(i, col);
                if (v == 0) continue;
                if (best < 0 || std::llabs(v) < std::llabs(m.at(best, col))) best = i;
            }
            if (best < 0) break; // column has no pivot
            swap_rows(best, r);
            if (m.at(r, col) < 0) negate_row(r);
            bool clean = true;
            for (int i = r + 1; i < rows; ++i) {
                if (m.at(i, col) == 0) continue;
                submul_row(i, chk::floor_div(m.at(i, col), m.at(r, col)), r);
                if (m.at(i, col) != 0) clean = false;
            }
            if (clean) break;
        }
        if (m.at(r, col) == 0) continue;
        // Reduce the entries above the new pivot into [0, pivot).
        for (int i = 0; i < r; ++i)
            submul_row(i, chk::floor_div(m.at(i, col), m.at(r, col)), r);
        ++r;
    }
    return r;
}

IntMatrix top_rows(const IntMatrix& m, int r) {
    IntMatrix out(r, m.cols());
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < m.cols(); ++j) out.at(i, j) = m.at(i, j);
    return out;
}

} // namespace

LatticeModule canonicalize(const IntMatrix& rows, int ambient) {
    if (rows.rows() > 0 && rows.cols() != ambient)
        throw DimensionError("generators have " + std::to_string(rows.cols()) +
                             " coordinates, ambient rank is " + std::to_string(ambient));
    IntMatrix work = rows.rows() > 0 ? rows : IntMatrix(0, ambient);
    int r = hermite_in_place(work, nullptr);
    return LatticeModule{ambient, top_rows(work, r)};
}

LatticeModule canonicalize(const std::vector<IntVec>& rows, int ambient) {
    return canonicalize(IntMatrix::from_rows(rows, ambient), ambient);
}

HermiteTransform hermite_with_transform(const IntMatrix& input) {
    HermiteTransform out;
    IntMatrix work = input;
    out.u = IntMatrix::identity(input.rows());
    out.rank = hermite_in_place(work, &out.u);
    out.h = top_rows(work, out.rank);
    return out;
}

IntMatrix kernel_columns(const IntMatrix& m) {
    HermiteTransform ht = hermite_with_transform(m.transpose());
    IntMatrix raw(ht.u.rows() - ht.rank, ht.u.cols());
    for (int i = ht.rank; i < ht.u.rows(); ++i)
        for (int j = 0; j < ht.u.cols(); ++j) raw.at(i - ht.rank, j) = ht.u.at(i, j);
    // The kernel of an integer matrix is saturated; canonicalize for determinism.
    return canonicalize(raw, m.cols()).basis;
}

LatticeModule saturate(const LatticeModule& n) {
    // Double annihilator: sat(N) = { v : K v = 0 } where K spans { x : B x = 0 }.
    IntMatrix k = kernel_columns(n.basis.rows() > 0 ? n.basis : IntMatrix(0, n.ambient));
    IntMatrix sat = kernel_columns(k);
    return LatticeModule{n.ambient, sat};
}

std::optional<IntVec> solve_in_basis(const IntMatrix& hnf_basis, const IntVec& v) {
    IntVec rem = v;
    IntVec coeff(hnf_basis.rows(), 0);
    for (int i = 0; i < hnf_basis.rows(); ++i) {
        int piv = -1;
        for (int j = 0; j < hnf_basis.cols(); ++j)
            if (hnf_basis.at(i, j) != 0) { piv = j; break; }
        if (piv < 0) continue;
        i64 p = hnf_basis.at(i, piv);
        if (rem[piv] % p != 0) return std::nullopt;
        i64 c = rem[piv] / p;
        coeff[i] = c;
        for (int j = 0; j < hnf_basis.cols(); ++j)
            rem[j] = chk::sub(rem[j], chk::mul(c, hnf_basis.at(i, j)));
    }
    for (i64 x : rem)
        if (x != 0) return std::nullopt;
    return coeff;
}

bool module_contains(const LatticeModule& n, const IntVec& v) {
    if (static_cast<int>(v.size()) != n.ambient)
        throw DimensionError("vector length does not match ambient rank");
    return solve_in_basis(n.basis, v).has_value();
}

bool module_stable_under(const LatticeModule& n, const IntMatrix& g) {
    if (g.rows() != n.ambient || g.cols() != n.ambient)
        throw DimensionError("operator shape does not match ambient rank");
    std::vector<IntVec> image;
    image.reserve(n.rank());
    for (int i = 0; i < n.rank(); ++i) image.push_back(g.apply(n.basis.row(i)));
    return canonicalize(image, n.ambient).basis == n.basis;
}

IntVec QuotientStructure::smith_coords(const IntVec& m) const {
    if (static_cast<int>(m.size()) != ambient)
        throw DimensionError("vector length does not match ambient rank");
    IntVec y(ambient, 0);
    for (int j = 0; j < ambient; ++j) {
        chk::Wide acc;
        for (int i = 0; i < ambient; ++i) acc.add_product(m[i], v.at(i, j));
        y[j] = acc.value("smith coordinates");
    }
    return y;
}

IntVec QuotientStructure::lift_torsion(const IntVec& t) const {
    if (t.size() != torsion_cols.size())
        throw DimensionError("torsion tuple length does not match factor count");
    IntVec m(ambient, 0);
    for (size_t j = 0; j < t.size(); ++j)
        for (int c = 0; c < ambient; ++c)
            m[c] = chk::add(m[c], chk::mul(t[j], vinv.at(torsion_cols[j], c)));
    return m;
}

QuotientStructure smith_quotient(const LatticeModule& n) {
    const int r = n.rank(), cols = n.ambient;
    IntMatrix w = n.basis.rows() > 0 ? n.basis : IntMatrix(0, cols);
    IntMatrix v = IntMatrix::identity(cols);
    IntMatrix vinv = IntMatrix::identity(cols);

    auto swap_cols = [&](int a, int b) {
        if (a == b) return;
        for (int i = 0; i < w.rows(); ++i) std::swap(w.at(i, a), w.at(i, b));
        for (int i = 0; i < cols; ++i) std::swap(v.at(i, a), v.at(i, b));
        for (int j = 0; j < cols; ++j) std::swap(vinv.at(a, j), vinv.at(b, j));
    };
    auto negate_col = [&](int a) {
        for (int i = 0; i < w.rows(); ++i) w.at(i, a) = chk::neg(w.at(i, a));
        for (int i = 0; i < cols; ++i) v.at(i, a) = chk::neg(v.at(i, a));
        for (int j = 0; j < cols; ++j) vinv.at(a, j) = chk::neg(vinv.at(a, j));
    };
    // col a -= q * col b  (and the inverse operation on vinv rows)
    auto submul_col = [&](int a, i64 q, int b) {
        if (q == 0) return;
        for (int i = 0; i < w.rows(); ++i) w.at(i, a) = chk::sub(w.at(i, a), chk::mul(q, w.at(i, b)));
        for (int i = 0; i < cols; ++i) v.at(i, a) = chk::sub(v.at(i, a), chk::mul(q, v.at(i, b)));
        for (int j = 0; j < cols; ++j) vinv.at(b, j) = chk::add(vinv.at(b, j), chk::mul(q, vinv.at(a, j)));
    };
    auto swap_rows = [&](int a, int b) {
        if (a == b) return;
        for (int j = 0; j < cols; ++j) std::swap(w.at(a, j), w.at(b, j));
    };
    auto submul_row = [&](int a, i64 q, int b) {
        if (q == 0) return;
        for (int j = 0; j < cols; ++j) w.at(a, j) = chk::sub(w.at(a, j), chk::mul(q, w.at(b, j)));
    };
    auto add_row = [&](int a, int b) {
        for (int j = 0; j < cols; ++j) w.at(a, j) = chk::add(w.at(a, j), w.at(b, j));
    };

    int k = 0;
    while (k < r) {
        // Find a nonzero entry of minimal magnitude in the trailing block.
        int pi = -1, pj = -1;
        for (int i = k; i < r; ++i)
            for (int j = k; j < cols; ++j) {
                i64 val = w.at(i, j);
                if (val == 0) continue;
                if (pi < 0 || std::llabs(val) < std::llabs(w.at(pi, pj))) { pi = i; pj = j; }
            }
        if (pi < 0) break; // remaining block is zero
        swap_rows(pi, k);
        swap_cols(pj, k);
        if (w.at(k, k) < 0) negate_col(k);

        bool again = false;
        for (int i = k + 1; i < r; ++i)
            if (w.at(i, k) != 0) {
                submul_row(i, chk::floor_div(w.at(i, k), w.at(k, k)), k);
                if (w.at(i, k) != 0) again = true;
            }
        for (int j = k + 1; j < cols; ++j)
            if (w.at(k, j) != 0) {
                submul_col(j, chk::floor_div(w.at(k, j), w.at(k, k)), k);
                if (w.at(k, j) != 0) again = true;
            }
        if (again) continue;

        // Divisibility: fold in any entry the pivot does not divide yet.
        bool fixed = false;
        for (int i = k + 1; i < r && !fixed; ++i)
            for (int j = k + 1; j < cols && !fixed; ++j)
                if (w.at(i, j) % w.at(k, k) != 0) {
                    add_row(k, i);
                    fixed = true;
                }
        if (fixed) continue;
        ++k;
    }

    if (k < r)
        throw IntegrityError("basis rows were not independent in smith_quotient");

    QuotientStructure q;
    q.ambient = cols;
    q.nrank = r;
    q.free_rank = cols - r;
    q.v = std::move(v);
    q.vinv = std::move(vinv);
    for (int i = 0; i < r; ++i) {
        i64 d = w.at(i, i);
        if (d >= 2) {
            q.invariant_factors.push_back(d);
            q.torsion_cols.push_back(i);
            q.torsion_order = chk::mul(q.torsion_order, d);
        }
    }
    return q;
}

i64 restrict_trace(const IntMatrix& g, const LatticeModule& n) {
    if (!module_stable_under(n, g))
        throw NotStableError("operator does not stabilize the module in restrict_trace");
    i64 tr = 0;
    for (int i = 0; i < n.rank(); ++i) {
        auto x = solve_in_basis(n.basis, g.apply(n.basis.row(i)));
        if (!x)
            throw IntegrityError("stable module image left the module in restrict_trace");
        tr = chk::add(tr, (*x)[i]);
    }
    return tr;
}

IntMatrix free_quotient_action(const IntMatrix& g, const QuotientStructure& q) {
    const int f = q.free_rank;
    IntMatrix m(f, f);
    for (int a = 0; a < f; ++a) {
        IntVec y = q.smith_coords(g.apply(q.vinv.row(q.nrank + a)));
        for (int b = 0; b < f; ++b) m.at(a, b) = y[q.nrank + b];
    }
    return m;
}

std::vector<i64> exterior_traces(const std::vector<i64>& power_sums, int n) {
    if (static_cast<int>(power_sums.size()) < n)
        throw DimensionError("need power sums p_1..p_" + std::to_string(n));
    std::vector<i64> e(n + 1, 0);
    e[0] = 1;
    for (int k = 1; k <= n; ++k) {
        chk::Wide acc;
        for (int i = 1; i <= k; ++i) {
            i64 term = chk::mul(e[k - i], power_sums[i - 1]);
            acc.add(i % 2 == 1 ? term : chk::neg(term));
        }
        e[k] = acc.exact_div(k, "Newton-Girard recurrence");
    }
    return e;
}

i64 torsion_fixed_count(const IntMatrix& g, const QuotientStructure& q, const LatticeModule& n,
                        i64 enumeration_threshold) {
    if (!module_stable_under(n, g))
        throw NotStableError("operator does not stabilize the module in torsion_fixed_count");
    const int s = static_cast<int>(q.invariant_factors.size());
    if (s == 0) return 1;

    // Matrix of g on the torsion part: generator j maps to row j (mod d_k in
    // column k). Free Smith coordinates of a torsion image must vanish.
    IntMatrix a(s, s);
    for (int j = 0; j < s; ++j) {
        IntVec y = q.smith_coords(g.apply(q.vinv.row(q.torsion_cols[j])));
        for (int b = 0; b < q.free_rank; ++b)
            if (y[q.nrank + b] != 0)
                throw IntegrityError("torsion generator image has a free component");
        for (int k = 0; k < s; ++k) {
            i64 d = q.invariant_factors[k];
            i64 val = y[q.torsion_cols[k]] % d;
            if (val < 0) val += d;
            a.at(j, k) = val;
        }
    }

    if (q.torsion_order <= enumeration_threshold) {
        IntVec t(s, 0);
        i64 count = 0;
        for (;;) {
            bool fixed = true;
            for (int k = 0; k < s && fixed; ++k) {
                chk::Wide acc;
                for (int j = 0; j < s; ++j) acc.add_product(t[j], a.at(j, k));
                i64 d = q.invariant_factors[k];
                i64 img = acc.value("torsion action") % d;
                if (img != t[k] % d) fixed = false;
            }
            if (fixed) ++count;
            int pos = 0;
            while (pos < s && ++t[pos] == q.invariant_factors[pos]) t[pos++] = 0;
            if (pos == s) break;
        }
        return count;
    }

    // Large torsion: solutions of t (A - 1) = 0 in (+) Z/d_k form
    // L / D Z^s with L = { t : t (A - 1) in D Z^s }, so the count is
    // det(D) / [Z^s : L]. L is the projection of ker[ (A-1)^T | D ].
    IntMatrix j2(s, 2 * s);
    for (int i = 0; i < s; ++i)
        for (int k = 0; k < s; ++k) {
            j2.at(k, i) = chk::sub(a.at(i, k), i == k ? 1 : 0); // (A - 1)^T
            j2.at(k, s + i) = (k == i) ? q.invariant_factors[k] : 0;
        }
    IntMatrix ker = kernel_columns(j2);
    IntMatrix lbasis(ker.rows(), s);
    for (int i = 0; i < ker.rows(); ++i)
        for (int c = 0; c < s; ++c) lbasis.at(i, c) = ker.at(i, c);
    LatticeModule l = canonicalize(lbasis, s);
    if (l.rank() != s)
        throw IntegrityError("congruence solution lattice is not full rank");
    i64 index = 1;
    for (int i = 0; i < s; ++i) {
        int piv = 0;
        while (l.basis.at(i, piv) == 0) ++piv;
        index = chk::mul(index, l.basis.at(i, piv));
    }
    return chk::exact_div(q.torsion_order, index, "torsion fixed count");
}

} // namespace toric
