#include "toric/cohomology.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "toric/errors.hpp"
#include "toric/parallel.hpp"

namespace toric {

i64 Polynomial::eval(i64 x) const {
    i64 acc = 0;
    for (size_t k = c.size(); k-- > 0;) acc = chk::add(chk::mul(acc, x), c[k]);
    return acc;
}

Polynomial poly_from(std::vector<i64> coeffs) {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    return Polynomial{std::move(coeffs)};
}

std::string to_string(const Polynomial& p) {
    if (p.c.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        i64 v = p.c[k];
        if (v == 0) continue;
        if (first) {
            if (v < 0) os << "-";
            first = false;
        } else {
            os << (v < 0 ? " - " : " + ");
        }
        i64 a = std::abs(v);
        if (a != 1 || k == 0) os << a;
        if (k == 1) os << "t";
        if (k > 1) os << "t^" << k;
    }
    return os.str();
}

Polynomial intersection_poincare(const IntMatrix& g, const LatticeModule& n,
                                 i64 torsion_enumeration_threshold) {
    QuotientStructure q = smith_quotient(n);
    i64 fixed = torsion_fixed_count(g, q, n, torsion_enumeration_threshold);

    IntMatrix f = free_quotient_action(g, q);
    std::vector<i64> power_sums(q.free_rank);
    IntMatrix pw = f;
    for (int k = 1; k <= q.free_rank; ++k) {
        power_sums[k - 1] = pw.trace();
        if (k < q.free_rank) pw = pw.mul(f);
    }
    std::vector<i64> e = exterior_traces(power_sums, q.free_rank);
    for (i64& coeff : e) coeff = chk::mul(coeff, fixed);
    return poly_from(std::move(e));
}

Polynomial poincare_from_poset(const FixedPoset& poset, const IntMatrix& g,
                               i64 torsion_enumeration_threshold, int threads) {
    if (!poset.mobius_ready)
        throw IntegrityError("poset is missing its Mobius function");
    if (poset.saturated)
        throw IntegrityError("complement sums need the unsaturated poset");

    std::vector<Polynomial> terms(poset.nodes.size());
    parallel_for(static_cast<i64>(poset.nodes.size()), threads, [&](i64 i) {
        const PosetNode& node = poset.nodes[i];
        if (node.mobius == 0) return;
        Polynomial layer =
            intersection_poincare(g, node.module, torsion_enumeration_threshold);
        i64 scale = chk::mul(node.mobius, node.rank % 2 ? -1 : 1); // mu * (-1)^rank
        std::vector<i64> shifted(node.rank + layer.c.size(), 0);
        for (size_t k = 0; k < layer.c.size(); ++k)
            shifted[node.rank + k] = chk::mul(scale, layer.c[k]);
        terms[i] = poly_from(std::move(shifted));
    });

    std::vector<i64> sum(poset.ambient + 1, 0);
    for (const Polynomial& term : terms) {
        if (term.degree() > poset.ambient)
            throw IntegrityError("poset term exceeds the ambient degree");
        for (size_t k = 0; k < term.c.size(); ++k) sum[k] = chk::add(sum[k], term.c[k]);
    }
    return poly_from(std::move(sum));
}

Polynomial complement_poincare(const RootSystem& rs, const IntMatrix& g,
                               const CohomologyOptions& opts) {
    FixedPoset ps = fixed_poset(rs, g, opts.poset_budget, opts.threads);
    compute_mobius(ps, opts.threads);
    Polynomial p = poincare_from_poset(ps, g, opts.torsion_enumeration_threshold, opts.threads);

    if (p.coeff(0) != 1)
        throw IntegrityError("constant coefficient is " + std::to_string(p.coeff(0)) +
                             " for " + rs.name() + ", expected 1");
    if (all_lines_primitive(rs)) {
        i64 h1 = chk::add(g.trace(), fixed_line_count(g, rs));
        if (p.coeff(1) != h1)
            throw IntegrityError("t coefficient is " + std::to_string(p.coeff(1)) + " for " +
                                 rs.name() + ", trace plus fixed lines gives " + std::to_string(h1));
    }
    return p;
}

Polynomial hyperplane_poincare(const RootSystem& rs, const IntMatrix& g,
                               const CohomologyOptions& opts) {
    FixedPoset ps = hyperplane_poset(rs, g, opts.poset_budget, opts.threads);
    compute_mobius(ps, opts.threads);
    std::vector<i64> sum(ps.ambient + 1, 0);
    for (const PosetNode& node : ps.nodes) {
        i64 scale = chk::mul(node.mobius, node.rank % 2 ? -1 : 1);
        sum[node.rank] = chk::add(sum[node.rank], scale);
    }
    return poly_from(std::move(sum));
}

Polynomial compactly_supported(const Polynomial& p, int n) {
    if (p.degree() > n)
        throw DimensionError("degree " + std::to_string(p.degree()) +
                             " polynomial cannot come from complex dimension " + std::to_string(n));
    std::vector<i64> out(2 * n + 1, 0);
    for (int k = 0; k <= p.degree(); ++k) out[2 * n - k] = p.coeff(k);
    return poly_from(std::move(out));
}

EquivariantTable equivariant_table(const RootSystem& rs, const WeylGroup& w,
                                   const ConjugacyClasses& cc, const CohomologyOptions& opts) {
    (void)w;
    EquivariantTable table;
    table.system = rs.name();
    table.ambient = rs.rank;
    table.labels = cc.labels;
    table.sizes = cc.sizes;
    table.rows.resize(cc.count());

    CohomologyOptions inner = opts;
    inner.threads = 1; // the class loop is the parallel axis
    parallel_for(static_cast<i64>(cc.count()), opts.threads, [&](i64 c) {
        table.rows[c] = complement_poincare(rs, cc.representatives[c], inner);
    });

    // The identity row bounds every trace pointwise by the dimension.
    for (int c = 0; c < cc.count(); ++c)
        for (int k = 0; k <= rs.rank; ++k)
            if (std::abs(table.rows[c].coeff(k)) > table.rows[0].coeff(k))
                throw IntegrityError("class " + cc.labels[c] + " trace exceeds the dimension in " +
                                     rs.name());
    return table;
}

} // namespace toric
