#include "toric/characters.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include "json.hpp"
#include "toric/errors.hpp"

namespace toric {
namespace {

// ---------- partitions and the border-strip recursion ----------

void partitions_rec(int remaining, int cap, std::vector<int>& cur,
                    std::vector<std::vector<int>>& out) {
    if (remaining == 0) {
        out.push_back(cur);
        return;
    }
    for (int part = std::min(cap, remaining); part >= 1; --part) {
        cur.push_back(part);
        partitions_rec(remaining - part, part, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> partitions_of(int m) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    partitions_rec(m, m, cur, out);
    return out;
}

std::string partition_string(const std::vector<int>& p) {
    std::string s = "[";
    for (size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
    return s + "]";
}

i64 factorial(i64 m) {
    i64 r = 1;
    for (i64 i = 2; i <= m; ++i) r = chk::mul(r, i);
    return r;
}

i64 centralizer_order(const std::vector<int>& rho) {
    std::map<int, int> mult;
    for (int part : rho) ++mult[part];
    i64 z = 1;
    for (auto [j, c] : mult) {
        for (int i = 0; i < c; ++i) z = chk::mul(z, j);
        z = chk::mul(z, factorial(c));
    }
    return z;
}

// Character value by peeling border strips, one part of rho at a time, on
// first-column hook lengths.
i64 mn_value(const std::vector<int>& lambda, const std::vector<std::vector<int>>& rho_parts,
             size_t pos, std::map<std::string, i64>& memo) {
    if (pos == rho_parts.size()) return lambda.empty() ? 1 : 0;
    if (lambda.empty()) return 0;

    std::string key = partition_string(lambda) + "|" + std::to_string(pos);
    auto hit = memo.find(key);
    if (hit != memo.end()) return hit->second;

    const int r = rho_parts[pos][0];
    const int rows = static_cast<int>(lambda.size());
    std::vector<int> betas(rows);
    for (int i = 0; i < rows; ++i) betas[i] = lambda[i] + (rows - 1 - i);

    i64 total = 0;
    for (int i = 0; i < rows; ++i) {
        int target = betas[i] - r;
        if (target < 0) continue;
        if (std::find(betas.begin(), betas.end(), target) != betas.end()) continue;
        int height = 0;
        for (int b : betas)
            if (target < b && b < betas[i]) ++height;

        std::vector<int> nb = betas;
        nb[i] = target;
        std::sort(nb.rbegin(), nb.rend());
        std::vector<int> nl;
        for (int j = 0; j < rows; ++j) {
            int part = nb[j] - (rows - 1 - j);
            if (part > 0) nl.push_back(part);
        }
        i64 sub = mn_value(nl, rho_parts, pos + 1, memo);
        total += (height % 2 ? -sub : sub);
    }
    memo[key] = total;
    return total;
}

i64 mn_top(const std::vector<int>& lambda, const std::vector<int>& rho) {
    std::vector<std::vector<int>> parts;
    for (int r : rho) parts.push_back({r});
    std::map<std::string, i64> memo;
    return mn_value(lambda, parts, 0, memo);
}

// ---------- cycle types out of trace data ----------

int mobius_int(int n) {
    int result = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        result = -result;
    }
    if (n > 1) result = -result;
    return result;
}

std::vector<int> cycle_type_from(const IntMatrix& g, int m) {
    // The reflection action on m letters has fix(sigma^k) = tr(g^k) + 1.
    std::vector<i64> fix(m + 1, 0);
    IntMatrix pw = IntMatrix::identity(g.rows());
    for (int k = 1; k <= m; ++k) {
        pw = pw.mul(g);
        fix[k] = pw.trace() + 1;
    }
    std::vector<int> rho;
    int total = 0;
    for (int j = m; j >= 1; --j) {
        i64 s = 0;
        for (int d = 1; d <= j; ++d)
            if (j % d == 0) s += mobius_int(j / d) * fix[d];
        if (s < 0 || s % j)
            throw IntegrityError("fixed point counts do not describe a permutation");
        for (i64 c = 0; c < s / j; ++c) {
            rho.push_back(j);
            total += j;
        }
    }
    if (total != m) throw IntegrityError("cycle type does not cover all letters");
    return rho;
}

// ---------- arithmetic mod p and small matrix routines ----------

i64 mod_pow(i64 b, i64 e, i64 p) {
    b %= p;
    i64 r = 1;
    while (e > 0) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

i64 mod_inv(i64 a, i64 p) { return mod_pow(((a % p) + p) % p, p - 2, p); }

bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

using ModMat = std::vector<std::vector<i64>>;

// Reduce to row echelon form with unit pivots and zeros above them; drops
// zero rows and returns the pivot columns.
std::vector<int> rref(ModMat& m, i64 p) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    const int c = static_cast<int>(m[0].size());
    int row = 0;
    for (int col = 0; col < c && row < static_cast<int>(m.size()); ++col) {
        int sel = -1;
        for (int i = row; i < static_cast<int>(m.size()); ++i)
            if (m[i][col]) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        std::swap(m[row], m[sel]);
        i64 inv = mod_inv(m[row][col], p);
        for (int j = 0; j < c; ++j) m[row][j] = m[row][j] * inv % p;
        for (int i = 0; i < static_cast<int>(m.size()); ++i) {
            if (i == row || m[i][col] == 0) continue;
            i64 f = m[i][col];
            for (int j = 0; j < c; ++j) m[i][j] = ((m[i][j] - f * m[row][j]) % p + p) % p;
        }
        pivots.push_back(col);
        ++row;
    }
    m.resize(pivots.size());
    return pivots;
}

// Basis rows of {x : m x = 0} over F_p.
ModMat null_space(ModMat m, i64 p) {
    for (auto& row : m)
        for (i64& v : row) v = ((v % p) + p) % p;
    const int c = m.empty() ? 0 : static_cast<int>(m[0].size());
    std::vector<int> pivots = rref(m, p);
    std::vector<int> pivot_at(c, -1);
    for (size_t i = 0; i < pivots.size(); ++i) pivot_at[pivots[i]] = static_cast<int>(i);
    ModMat basis;
    for (int col = 0; col < c; ++col) {
        if (pivot_at[col] >= 0) continue;
        std::vector<i64> v(c, 0);
        v[col] = 1;
        for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = (p - m[i][col]) % p;
        basis.push_back(std::move(v));
    }
    return basis;
}

// ---------- the modular class-algebra machinery ----------

struct ClassAlgebra {
    int k = 0;
    std::vector<i64> a; // a[(i*k + j)*k + l] = #{(x,y) in C_i x C_j : xy = z_l}
    std::vector<int> inverse_class;
    i64 exponent = 1;
};

ClassAlgebra class_algebra(const WeylGroup& w, const ConjugacyClasses& cc) {
    ClassAlgebra alg;
    const int k = cc.count();
    alg.k = k;
    alg.a.assign(static_cast<size_t>(k) * k * k, 0);
    alg.inverse_class.resize(k);

    for (int c = 0; c < k; ++c) {
        i64 ord = element_order(cc.representatives[c]);
        alg.exponent = std::lcm(alg.exponent, ord);
        alg.inverse_class[c] = cc.class_of(w, cc.representatives[c].pow(ord - 1));
    }

    for (i64 idx = 0; idx < w.size(); ++idx) {
        IntMatrix x = w.element(idx);
        int i = cc.class_index[idx];
        IntMatrix xi = x.pow(element_order(x) - 1);
        for (int l = 0; l < k; ++l) {
            i64 yidx = w.index_of(xi.mul(cc.representatives[l]));
            if (yidx < 0) throw IntegrityError("class product left the enumerated group");
            int j = cc.class_index[yidx];
            ++alg.a[(static_cast<size_t>(i) * k + j) * k + l];
        }
    }
    return alg;
}

i64 pick_prime(i64 order, i64 exponent, int skip) {
    i64 bound = 2 * static_cast<i64>(std::sqrt(static_cast<double>(order))) + 1;
    int found = 0;
    for (i64 p = exponent + 1;; p += exponent) {
        if (p <= bound || !is_prime(p)) continue;
        if (found++ == skip) return p;
    }
}

// One attempt at the table modulo p; empty result means "try another prime".
std::vector<std::vector<i64>> lift_characters(const ClassAlgebra& alg, const ConjugacyClasses& cc,
                                              i64 order, i64 p) {
    const int k = alg.k;
    auto a_of = [&](int i, int j, int l) {
        return alg.a[(static_cast<size_t>(i) * k + j) * k + l] % p;
    };

    // Split F_p^k into common eigenlines of the class-sum actions.
    std::vector<ModMat> spaces;
    {
        ModMat full(k, std::vector<i64>(k, 0));
        for (int i = 0; i < k; ++i) full[i][i] = 1;
        spaces.push_back(std::move(full));
    }
    for (int ci = 1; ci < k; ++ci) {
        bool all_lines = true;
        for (const auto& s : spaces) all_lines = all_lines && s.size() == 1;
        if (all_lines) break;

        std::vector<ModMat> next;
        for (auto& basis : spaces) {
            const int m = static_cast<int>(basis.size());
            if (m == 1) {
                next.push_back(std::move(basis));
                continue;
            }
            std::vector<int> pivots;
            {
                ModMat copy = basis;
                pivots = rref(copy, p);
                basis = std::move(copy);
            }
            // Action of the ci-th class sum in subspace coordinates. With the
            // basis in reduced form, coordinates can be read off the pivots.
            ModMat img(m, std::vector<i64>(k, 0));
            for (int r = 0; r < m; ++r)
                for (int j = 0; j < k; ++j) {
                    i64 acc = 0;
                    for (int l = 0; l < k; ++l) acc = (acc + a_of(ci, j, l) * basis[r][l]) % p;
                    img[r][j] = acc;
                }
            ModMat t(m, std::vector<i64>(m));
            for (int r = 0; r < m; ++r)
                for (int s = 0; s < m; ++s) t[r][s] = img[r][pivots[s]];

            int used = 0;
            for (i64 lam = 0; lam < p && used < m; ++lam) {
                ModMat shifted(m, std::vector<i64>(m));
                for (int r = 0; r < m; ++r)
                    for (int s = 0; s < m; ++s)
                        shifted[s][r] = ((t[r][s] - (r == s ? lam : 0)) % p + p) % p;
                ModMat ker = null_space(shifted, p);
                if (ker.empty()) continue;
                used += static_cast<int>(ker.size());
                ModMat nb;
                for (const auto& coef : ker) {
                    std::vector<i64> v(k, 0);
                    for (int r = 0; r < m; ++r) {
                        if (!coef[r]) continue;
                        for (int j = 0; j < k; ++j) v[j] = (v[j] + coef[r] * basis[r][j]) % p;
                    }
                    nb.push_back(std::move(v));
                }
                rref(nb, p);
                next.push_back(std::move(nb));
            }
            if (used != m) return {}; // eigenvalue escaped F_p somehow
        }
        spaces = std::move(next);
    }

    std::vector<std::vector<i64>> rows;
    i64 sq_bound = static_cast<i64>(std::sqrt(static_cast<double>(order))) + 1;
    for (auto& space : spaces) {
        if (space.size() != 1 || space[0][0] == 0) return {};
        std::vector<i64> u = space[0];
        i64 scale = mod_inv(u[0], p);
        for (i64& v : u) v = v * scale % p;

        i64 s = 0;
        for (int j = 0; j < k; ++j)
            s = (s + u[j] * u[alg.inverse_class[j]] % p * mod_inv(cc.sizes[j] % p, p)) % p;
        if (s == 0) return {};
        i64 d2 = order % p * mod_inv(s, p) % p;
        i64 d = 0;
        for (i64 cand = 1; cand <= sq_bound; ++cand)
            if (cand * cand % p == d2) {
                d = cand;
                break;
            }
        if (d == 0) return {};

        std::vector<i64> chi(k);
        for (int j = 0; j < k; ++j) {
            i64 v = d % p * u[j] % p * mod_inv(cc.sizes[j] % p, p) % p;
            chi[j] = v > p / 2 ? v - p : v;
        }
        rows.push_back(std::move(chi));
    }

    std::sort(rows.begin(), rows.end(), [](const std::vector<i64>& x, const std::vector<i64>& y) {
        if (x[0] != y[0]) return x[0] < y[0];
        return x < y;
    });
    return rows;
}

bool verify_table(const std::vector<std::vector<i64>>& rows, const ClassAlgebra& alg,
                  const ConjugacyClasses& cc, i64 order) {
    const int k = alg.k;
    if (static_cast<int>(rows.size()) != k) return false;
    i64 mass = 0;
    for (const auto& row : rows) {
        if (row[0] <= 0) return false;
        mass = chk::add(mass, chk::mul(row[0], row[0]));
        for (i64 v : row)
            if (std::abs(v) > row[0]) return false;
    }
    if (mass != order) return false;
    for (int a = 0; a < k; ++a)
        for (int b = a; b < k; ++b) {
            chk::Wide acc;
            for (int j = 0; j < k; ++j)
                acc.add_product(chk::mul(cc.sizes[j], rows[a][j]), rows[b][alg.inverse_class[j]]);
            if (acc.value("orthogonality sum") != (a == b ? order : 0)) return false;
        }
    return true;
}

// ---------- symmetric power traces ----------

// h_e values per class via e h_e = sum h_{e-i} p_i with exact division.
struct SymmetricPowers {
    explicit SymmetricPowers(const ConjugacyClasses& cc) : classes(cc) {
        const int k = cc.count();
        h.push_back(std::vector<i64>(k, 1));
        pw.reserve(k);
        for (int c = 0; c < k; ++c) pw.push_back(IntMatrix::identity(cc.representatives[c].rows()));
    }

    const std::vector<i64>& get(int e) {
        while (static_cast<int>(h.size()) <= e) extend();
        return h[e];
    }

private:
    void extend() {
        const int k = classes.count();
        const int e = static_cast<int>(h.size());
        std::vector<i64> ps(k);
        for (int c = 0; c < k; ++c) {
            pw[c] = pw[c].mul(classes.representatives[c]);
            ps[c] = pw[c].trace();
        }
        psums.push_back(std::move(ps));

        std::vector<i64> he(k);
        for (int c = 0; c < k; ++c) {
            chk::Wide acc;
            for (int i = 1; i <= e; ++i) acc.add_product(h[e - i][c], psums[i - 1][c]);
            he[c] = acc.exact_div(e, "symmetric power recurrence");
        }
        h.push_back(std::move(he));
    }

    const ConjugacyClasses& classes;
    std::vector<std::vector<i64>> h;
    std::vector<std::vector<i64>> psums; // psums[i-1] = traces of the i-th powers
    std::vector<IntMatrix> pw;
};

i64 multiplicity_of(const CharacterTable& table, const std::vector<i64>& f, int irr) {
    chk::Wide acc;
    for (int j = 0; j < table.class_count(); ++j)
        acc.add_product(chk::mul(table.class_sizes[j], f[j]), table.values[irr][j]);
    return acc.exact_div(table.order, "character multiplicity");
}

// Same-(d, e) pairs whose subscript order must be flipped relative to the
// lexicographic-value order to keep the standard primed naming.
struct PhiSwap {
    const char* group;
    i64 d;
    int e;
};
constexpr PhiSwap kPhiSwaps[] = {
    {"F4", 4, 7},
    {"F4", 8, 3},
    {"F4", 8, 9},
};

bool phi_swapped(const std::string& group, i64 d, int e) {
    for (const auto& s : kPhiSwaps)
        if (group == s.group && d == s.d && e == s.e) return true;
    return false;
}

} // namespace

// ---------- public entry points ----------

CharacterTable dixon_table(const WeylGroup& w, const ConjugacyClasses& cc, const RootSystem& rs) {
    ClassAlgebra alg = class_algebra(w, cc);
    const i64 order = w.size();

    for (int attempt = 0; attempt < 8; ++attempt) {
        i64 p = pick_prime(order, alg.exponent, attempt);
        std::vector<std::vector<i64>> rows = lift_characters(alg, cc, order, p);
        if (rows.empty() || !verify_table(rows, alg, cc, order)) continue;

        CharacterTable table;
        table.group = rs.name();
        table.order = order;
        table.class_labels = cc.labels;
        table.class_sizes = cc.sizes;
        table.class_tags.assign(cc.count(), "");
        table.values = std::move(rows);
        for (int r = 0; r < table.irr_count(); ++r) table.names.push_back("chi" + std::to_string(r));
        orthogonality_check(table);
        return table;
    }
    throw OrthogonalityError("character lifting failed for " + rs.name() +
                             " across eight primes");
}

CharacterTable symmetric_group_table(const RootSystem& rs, const WeylGroup& w,
                                     const ConjugacyClasses& cc) {
    if (rs.type != Type::A)
        throw DimensionError("cycle type tables only exist for type A, not " + rs.name());
    const int m = rs.rank + 1;
    if (w.size() != factorial(m))
        throw IntegrityError("group order of " + rs.name() + " is not " + std::to_string(m) + "!");
    auto parts = partitions_of(m);
    if (static_cast<int>(parts.size()) != cc.count())
        throw IntegrityError("class count of " + rs.name() + " is not the partition count");

    std::vector<std::vector<int>> rhos(cc.count());
    std::vector<std::string> tags(cc.count());
    for (int c = 0; c < cc.count(); ++c) {
        rhos[c] = cycle_type_from(cc.representatives[c], m);
        tags[c] = partition_string(rhos[c]);
        if (cc.sizes[c] != factorial(m) / centralizer_order(rhos[c]))
            throw IntegrityError("class size of " + tags[c] + " does not match its cycle type");
        for (int b = 0; b < c; ++b)
            if (tags[b] == tags[c]) throw IntegrityError("duplicate cycle type " + tags[c]);
    }

    CharacterTable table;
    table.group = rs.name();
    table.order = factorial(m);
    table.class_labels = cc.labels;
    table.class_sizes = cc.sizes;
    table.class_tags = std::move(tags);
    struct Row {
        i64 degree;
        std::string name;
        std::vector<i64> values;
    };
    std::vector<Row> rows;
    for (const auto& lambda : parts) {
        Row row;
        row.name = partition_string(lambda);
        row.values.resize(cc.count());
        for (int c = 0; c < cc.count(); ++c) row.values[c] = mn_top(lambda, rhos[c]);
        row.degree = row.values[0];
        rows.push_back(std::move(row));
    }
    std::sort(rows.begin(), rows.end(), [](const Row& x, const Row& y) {
        if (x.degree != y.degree) return x.degree < y.degree;
        return x.name < y.name;
    });
    for (auto& row : rows) {
        table.names.push_back(std::move(row.name));
        table.values.push_back(std::move(row.values));
    }
    orthogonality_check(table);
    return table;
}

int first_symmetric_power(const CharacterTable& table, const ConjugacyClasses& cc, int irr) {
    SymmetricPowers sym(cc);
    for (int e = 0; e <= 1000; ++e)
        if (multiplicity_of(table, sym.get(e), irr) > 0) return e;
    throw IntegrityError("character never appears in symmetric powers");
}

void apply_phi_names(CharacterTable& table, const ConjugacyClasses& cc) {
    SymmetricPowers sym(cc);
    const int n = table.irr_count();
    std::vector<int> first_e(n, -1);
    int resolved = 0;
    for (int e = 0; e <= 1000 && resolved < n; ++e) {
        const std::vector<i64>& he = sym.get(e);
        for (int r = 0; r < n; ++r) {
            if (first_e[r] >= 0) continue;
            if (multiplicity_of(table, he, r) > 0) {
                first_e[r] = e;
                ++resolved;
            }
        }
    }
    if (resolved < n) throw IntegrityError("some characters never met a symmetric power");

    std::map<std::pair<i64, int>, std::vector<int>> families;
    for (int r = 0; r < n; ++r) families[{table.values[r][0], first_e[r]}].push_back(r);
    for (auto& [de, members] : families) {
        auto [d, e] = de;
        std::string stem = "phi" + std::to_string(d);
        if (members.size() == 1) {
            table.names[members[0]] = stem + "^" + std::to_string(e);
            continue;
        }
        if (members.size() != 2)
            throw IntegrityError("more than two characters share degree " + std::to_string(d) +
                                 " and power " + std::to_string(e));
        std::sort(members.begin(), members.end(), [&](int x, int y) {
            return table.values[x] < table.values[y];
        });
        if (phi_swapped(table.group, d, e)) std::swap(members[0], members[1]);
        table.names[members[0]] = stem + ",1^" + std::to_string(e);
        table.names[members[1]] = stem + ",2^" + std::to_string(e);
    }
}

std::vector<i64> decompose(const CharacterTable& table, const std::vector<i64>& f) {
    if (f.size() != static_cast<size_t>(table.class_count()))
        throw DimensionError("class function has " + std::to_string(f.size()) + " values, table has " +
                             std::to_string(table.class_count()) + " classes");
    std::vector<i64> mult(table.irr_count());
    for (int r = 0; r < table.irr_count(); ++r) {
        i64 m;
        try {
            m = multiplicity_of(table, f, r);
        } catch (const NonIntegralError&) {
            throw IntegrityError("multiplicity of " + table.names[r] + " is not an integer");
        }
        if (m < 0)
            throw IntegrityError("multiplicity of " + table.names[r] + " is negative");
        mult[r] = m;
    }
    return mult;
}

void orthogonality_check(const CharacterTable& table) {
    const int k = table.class_count();
    if (table.irr_count() != k)
        throw OrthogonalityError("table is not square: " + std::to_string(table.irr_count()) +
                                 " rows, " + std::to_string(k) + " classes");
    i64 sizes_total = 0;
    for (i64 s : table.class_sizes) sizes_total = chk::add(sizes_total, s);
    if (sizes_total != table.order)
        throw OrthogonalityError("class sizes sum to " + std::to_string(sizes_total) +
                                 ", group order is " + std::to_string(table.order));
    for (int a = 0; a < k; ++a)
        for (int b = a; b < k; ++b) {
            chk::Wide acc;
            for (int j = 0; j < k; ++j)
                acc.add_product(chk::mul(table.class_sizes[j], table.values[a][j]),
                                table.values[b][j]);
            i64 got = acc.value("row orthogonality");
            if (got != (a == b ? table.order : 0))
                throw OrthogonalityError("rows " + table.names[a] + " and " + table.names[b] +
                                         " pair to " + std::to_string(got));
        }
    for (int c1 = 0; c1 < k; ++c1)
        for (int c2 = c1; c2 < k; ++c2) {
            chk::Wide acc;
            for (int r = 0; r < k; ++r)
                acc.add_product(table.values[r][c1], table.values[r][c2]);
            i64 got = acc.value("column orthogonality");
            i64 expect = c1 == c2 ? table.order / table.class_sizes[c1] : 0;
            if (got != expect)
                throw OrthogonalityError("columns " + std::to_string(c1) + " and " +
                                         std::to_string(c2) + " pair to " + std::to_string(got));
        }
}

void save_table(const CharacterTable& table, const std::string& path) {
    nlohmann::json doc;
    doc["group"] = {{"name", table.group}, {"order", table.order}};
    doc["classes"] = nlohmann::json::array();
    for (int c = 0; c < table.class_count(); ++c)
        doc["classes"].push_back({{"label", table.class_labels[c]},
                                  {"size", table.class_sizes[c]},
                                  {"tag", table.class_tags[c]}});
    doc["irreducibles"] = nlohmann::json::array();
    for (int r = 0; r < table.irr_count(); ++r)
        doc["irreducibles"].push_back({{"name", table.names[r]}, {"values", table.values[r]}});
    std::ofstream out(path);
    if (!out) throw SchemaError("cannot write " + path);
    out << doc.dump(1) << "\n";
}

CharacterTable load_table(const std::string& path, const ConjugacyClasses& cc) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot read " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError("malformed table file " + path + ": " + e.what());
    }

    CharacterTable raw;
    try {
        raw.group = doc.at("group").at("name").get<std::string>();
        raw.order = doc.at("group").at("order").get<i64>();
        for (const auto& cls : doc.at("classes")) {
            raw.class_labels.push_back(cls.at("label").get<std::string>());
            raw.class_sizes.push_back(cls.at("size").get<i64>());
            raw.class_tags.push_back(cls.value("tag", ""));
        }
        for (const auto& irr : doc.at("irreducibles")) {
            raw.names.push_back(irr.at("name").get<std::string>());
            raw.values.push_back(irr.at("values").get<std::vector<i64>>());
        }
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError("table file " + path + " misses fields: " + e.what());
    }
    for (const auto& row : raw.values)
        if (row.size() != raw.class_labels.size())
            throw SchemaError("ragged value rows in " + path);

    // Columns may be stored in any order; realign them to cc by label.
    std::vector<int> where(cc.count(), -1);
    for (int c = 0; c < cc.count(); ++c) {
        for (int f = 0; f < static_cast<int>(raw.class_labels.size()); ++f)
            if (raw.class_labels[f] == cc.labels[c]) {
                where[c] = f;
                break;
            }
        if (where[c] < 0)
            throw ClassAlignmentError("class " + cc.labels[c] + " is missing from " + path);
    }
    if (static_cast<int>(raw.class_labels.size()) != cc.count())
        throw ClassAlignmentError(path + " stores " + std::to_string(raw.class_labels.size()) +
                                  " classes, expected " + std::to_string(cc.count()));

    CharacterTable table;
    table.group = raw.group;
    table.order = raw.order;
    table.names = raw.names;
    table.class_labels = cc.labels;
    table.class_sizes = cc.sizes;
    table.class_tags.resize(cc.count());
    table.values.assign(raw.values.size(), std::vector<i64>(cc.count()));
    for (int c = 0; c < cc.count(); ++c) {
        if (raw.class_sizes[where[c]] != cc.sizes[c])
            throw ClassAlignmentError("size mismatch on class " + cc.labels[c] + " in " + path);
        table.class_tags[c] = raw.class_tags[where[c]];
        for (int r = 0; r < static_cast<int>(raw.values.size()); ++r)
            table.values[r][c] = raw.values[r][where[c]];
    }
    orthogonality_check(table);
    return table;
}

int reflection_class(const RootSystem& rs, const WeylGroup& w, const ConjugacyClasses& cc) {
    return cc.class_of(w, simple_reflections(rs)[0]);
}

std::vector<i64> a_type_total_character(const RootSystem& rs, const WeylGroup& w,
                                        const ConjugacyClasses& cc) {
    if (rs.type != Type::A) throw DimensionError("total character closed form is type A only");
    std::vector<i64> f(cc.count(), 0);
    f[0] = factorial(rs.rank + 2) / 2;
    f[reflection_class(rs, w, cc)] = factorial(rs.rank);
    return f;
}

std::vector<i64> a_type_induced_character(const RootSystem& rs, const WeylGroup& w,
                                          const ConjugacyClasses& cc) {
    if (rs.type != Type::A) throw DimensionError("induced character closed form is type A only");
    std::vector<i64> f(cc.count(), 0);
    f[0] = factorial(rs.rank + 1) / 2;
    f[reflection_class(rs, w, cc)] = factorial(rs.rank - 1);
    return f;
}

} // namespace toric
